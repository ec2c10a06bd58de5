use std::collections::{BTreeMap, BTreeSet};

use crate::complexity::factors::{saturate, FactorSet};
use crate::complexity::source::WordSource;
use crate::error::{Error, Result};
use crate::word::Word;

/// An edge of a Rauzy graph: a factor of length `n` joining its length
/// `n - 1` prefix to its length `n - 1` suffix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RauzyEdge {
    pub word: Word,
    pub from: usize,
    pub to: usize,
}

/// The Rauzy graph of order `n >= 1`: vertices `Fact(n-1)`, edges `Fact(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RauzyGraph {
    order: usize,
    vertices: Vec<Word>,
    edges: Vec<RauzyEdge>,
    out: Vec<Vec<usize>>,
    certified: bool,
}

impl RauzyGraph {
    pub fn from_factor_sets(vertices: &FactorSet, edges: &FactorSet) -> Result<Self> {
        let order = edges.n;
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if vertices.n + 1 != order {
            return Err(Error::MalformedGraph(format!(
                "vertex length {} does not match order {order}",
                vertices.n
            )));
        }
        let vertex_list: Vec<Word> = vertices.factors.iter().cloned().collect();
        let index: BTreeMap<&[u8], usize> = vertex_list
            .iter()
            .enumerate()
            .map(|(i, v)| (v.symbols(), i))
            .collect();
        let lookup = |v: &[u8]| {
            index.get(v).copied().ok_or_else(|| {
                Error::MalformedGraph(format!("endpoint {} is not a vertex", Word::from(v)))
            })
        };
        let mut out = vec![Vec::new(); vertex_list.len()];
        let mut edge_list = Vec::with_capacity(edges.len());
        for e in &edges.factors {
            let from = lookup(&e[..order - 1])?;
            let to = lookup(&e[1..])?;
            out[from].push(edge_list.len());
            edge_list.push(RauzyEdge {
                word: e.clone(),
                from,
                to,
            });
        }
        Ok(RauzyGraph {
            order,
            vertices: vertex_list,
            edges: edge_list,
            out,
            certified: vertices.certified && edges.certified,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[RauzyEdge] {
        &self.edges
    }

    pub fn certified(&self) -> bool {
        self.certified
    }

    pub fn out_degree(&self, vertex: usize) -> usize {
        self.out[vertex].len()
    }

    pub fn out_edges(&self, vertex: usize) -> &[usize] {
        &self.out[vertex]
    }
}

/// Rauzy graph of order `n`, with both factor sets read from one frozen prefix.
pub fn rauzy_graph(source: &WordSource, n: usize) -> Result<RauzyGraph> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let sample = saturate(source, n)?;
    RauzyGraph::from_factor_sets(&sample.factors(n - 1)?, &sample.factors(n)?)
}

/// A simple cycle whose length divides the graph order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCycle {
    edges: Vec<Word>,
}

impl LieCycle {
    /// Edges in traversal order, starting from the least vertex on the cycle.
    pub fn edges(&self) -> &[Word] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_set(&self) -> BTreeSet<Word> {
        self.edges.iter().cloned().collect()
    }
}

/// Every simple cycle of length dividing the order, each reported once.
///
/// Cycles are searched from their least vertex only, through vertices
/// greater than it, to depth at most the order; they are then keyed by
/// edge set, so a cycle is counted once regardless of its starting vertex.
pub fn lie_cycles(graph: &RauzyGraph) -> Vec<LieCycle> {
    let n = graph.order;
    let mut found: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut on_path = vec![false; graph.vertices.len()];
    let mut path = Vec::with_capacity(n);
    for start in 0..graph.vertices.len() {
        on_path[start] = true;
        search(graph, start, start, &mut on_path, &mut path, &mut found);
        on_path[start] = false;
    }
    found
        .into_values()
        .map(|edge_ids| LieCycle {
            edges: edge_ids
                .into_iter()
                .map(|e| graph.edges[e].word.clone())
                .collect(),
        })
        .collect()
}

fn search(
    graph: &RauzyGraph,
    start: usize,
    at: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    found: &mut BTreeMap<Vec<usize>, Vec<usize>>,
) {
    let n = graph.order;
    for &e in &graph.out[at] {
        let to = graph.edges[e].to;
        if to == start {
            let len = path.len() + 1;
            if n.is_multiple_of(len) {
                let mut cycle = path.clone();
                cycle.push(e);
                let mut key = cycle.clone();
                key.sort_unstable();
                found.entry(key).or_insert(cycle);
            }
        } else if to > start && !on_path[to] && path.len() + 1 < n {
            on_path[to] = true;
            path.push(e);
            search(graph, start, to, on_path, path, found);
            path.pop();
            on_path[to] = false;
        }
    }
}

/// True when no edge belongs to two of the given cycles.
pub fn edge_disjoint(cycles: &[LieCycle]) -> bool {
    let mut seen = BTreeSet::new();
    cycles
        .iter()
        .flat_map(|c| c.edges.iter())
        .all(|e| seen.insert(e))
}

/// Number of Lie cycles in the Rauzy graph of order `n`.
pub fn lie_complexity_via_rauzy(source: &WordSource, n: usize) -> Result<usize> {
    Ok(lie_cycles(&rauzy_graph(source, n)?).len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn edge_strings(g: &RauzyGraph) -> Vec<(String, String, String)> {
        g.edges()
            .iter()
            .map(|e| {
                (
                    e.word.to_string(),
                    g.vertices()[e.from].to_string(),
                    g.vertices()[e.to].to_string(),
                )
            })
            .collect()
    }

    fn triple(e: &str, a: &str, b: &str) -> (String, String, String) {
        (e.into(), a.into(), b.into())
    }

    #[test]
    fn fibonacci_order_two() {
        let g = rauzy_graph(&WordSource::fibonacci(), 2).unwrap();
        assert_eq!(g.vertices(), &[w("0"), w("1")]);
        assert_eq!(
            edge_strings(&g),
            vec![
                triple("00", "0", "0"),
                triple("01", "0", "1"),
                triple("10", "1", "0")
            ]
        );
        assert!(g.certified());
        let cycles = lie_cycles(&g);
        let sets: Vec<BTreeSet<Word>> = cycles.iter().map(LieCycle::edge_set).collect();
        assert_eq!(
            sets,
            vec![
                BTreeSet::from([w("00")]),
                BTreeSet::from([w("01"), w("10")])
            ]
        );
    }

    #[test]
    fn fibonacci_order_one_loops_on_empty_vertex() {
        let g = rauzy_graph(&WordSource::fibonacci(), 1).unwrap();
        assert_eq!(g.vertices(), &[Word::empty()]);
        assert_eq!(
            edge_strings(&g),
            vec![triple("0", "", ""), triple("1", "", "")]
        );
        assert_eq!(lie_cycles(&g).len(), 2);
    }

    #[test]
    fn fibonacci_order_three() {
        let g = rauzy_graph(&WordSource::fibonacci(), 3).unwrap();
        let cycles = lie_cycles(&g);
        assert_eq!(cycles.len(), 1);
        assert_eq!(
            cycles[0].edge_set(),
            BTreeSet::from([w("001"), w("010"), w("100")])
        );
        assert_eq!(cycles[0].len(), 3);
    }

    #[test]
    fn literal_two_cycle() {
        let g = rauzy_graph(&WordSource::literal(w("0101")), 2).unwrap();
        assert_eq!(g.vertices(), &[w("0"), w("1")]);
        let cycles = lie_cycles(&g);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].edges(), &[w("01"), w("10")]);
        assert!(!g.certified());
    }

    #[test]
    fn cycles_chain_and_do_not_repeat_vertices() {
        let g = rauzy_graph(&WordSource::thue_morse(1 << 10), 6).unwrap();
        for c in lie_cycles(&g) {
            let k = c.len();
            assert_eq!(6 % k, 0);
            let mut starts = BTreeSet::new();
            for i in 0..k {
                let a = &c.edges()[i];
                let b = &c.edges()[(i + 1) % k];
                assert_eq!(&a[1..], &b[..5]);
                assert!(starts.insert(a[..5].to_vec()));
            }
        }
    }

    #[test]
    fn order_zero_is_rejected() {
        assert_eq!(
            rauzy_graph(&WordSource::fibonacci(), 0).unwrap_err(),
            Error::ZeroOrder
        );
    }

    #[test]
    fn counts_for_fibonacci() {
        let f = WordSource::fibonacci();
        assert_eq!(lie_complexity_via_rauzy(&f, 2).unwrap(), 2);
        assert_eq!(lie_complexity_via_rauzy(&f, 8).unwrap(), 1);
        assert_eq!(lie_complexity_via_rauzy(&f, 9).unwrap(), 0);
    }

    #[test]
    fn disjointness_detects_shared_edges() {
        let a = LieCycle {
            edges: vec![w("01"), w("10")],
        };
        let b = LieCycle {
            edges: vec![w("00")],
        };
        assert!(edge_disjoint(&[a.clone(), b]));
        assert!(!edge_disjoint(&[a.clone(), a]));
    }
}
