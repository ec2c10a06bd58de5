//! Text artifacts: CSV and JSON profile tables, DOT and JSON Rauzy graphs.
//!
//! Every writer iterates in a fixed order so identical inputs give
//! byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::complexity::{ComplexityRow, LieCycle, RauzyGraph};
use crate::word::{Alphabet, Word};

/// Profile CSV with header
/// `n,p,delta_p,lie_bruteforce,lie_rauzy,lie_formula,bound_ok,case_tag`.
pub fn rows_to_csv(rows: &[ComplexityRow]) -> String {
    to_csv(rows)
}

pub fn rows_to_json(rows: &[ComplexityRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"
}

/// One row of `formula` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaRow {
    pub n: usize,
    pub lie_formula: u8,
    pub case_tag: String,
}

/// CSV with header `n,lie_formula,case_tag`.
pub fn formula_to_csv(rows: &[FormulaRow]) -> String {
    to_csv(rows)
}

pub fn formula_to_json(rows: &[FormulaRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"
}

fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).expect("in-memory CSV write");
    }
    let bytes = writer.into_inner().expect("in-memory CSV flush");
    String::from_utf8(bytes).expect("CSV output is UTF-8")
}

/// Edge index to Lie-cycle id. Cycle ids follow the order of `cycles`.
fn cycle_ids(cycles: &[LieCycle]) -> BTreeMap<&Word, usize> {
    let mut ids = BTreeMap::new();
    for (id, cycle) in cycles.iter().enumerate() {
        for e in cycle.edges() {
            ids.entry(e).or_insert(id);
        }
    }
    ids
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz digraph named `rauzy_<order>`. Vertices are labelled by their
/// factor, edges by theirs; edges on a Lie cycle carry `liecycle=<id>`.
pub fn graph_to_dot(graph: &RauzyGraph, cycles: &[LieCycle], alphabet: &Alphabet) -> String {
    let ids = cycle_ids(cycles);
    let mut out = String::new();
    writeln!(out, "digraph rauzy_{} {{", graph.order()).unwrap();
    for (i, v) in graph.vertices().iter().enumerate() {
        writeln!(
            out,
            "  v{i} [label=\"{}\"];",
            dot_escape(&alphabet.render(v))
        )
        .unwrap();
    }
    for e in graph.edges() {
        write!(
            out,
            "  v{} -> v{} [label=\"{}\"",
            e.from,
            e.to,
            dot_escape(&alphabet.render(&e.word))
        )
        .unwrap();
        if let Some(id) = ids.get(&e.word) {
            write!(out, ", liecycle={id}").unwrap();
        }
        out.push_str("];\n");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonEdge {
    label: String,
    from: String,
    to: String,
    liecycle: Option<usize>,
}

#[derive(Serialize)]
struct JsonCycle {
    id: usize,
    length: usize,
    edges: Vec<String>,
}

#[derive(Serialize)]
pub struct JsonGraph {
    order: usize,
    certified: bool,
    vertices: Vec<String>,
    edges: Vec<JsonEdge>,
    lie_cycles: Vec<JsonCycle>,
}

pub fn graph_to_json_value(
    graph: &RauzyGraph,
    cycles: &[LieCycle],
    alphabet: &Alphabet,
) -> JsonGraph {
    let ids = cycle_ids(cycles);
    let render = |w: &Word| alphabet.render(w);
    JsonGraph {
        order: graph.order(),
        certified: graph.certified(),
        vertices: graph.vertices().iter().map(render).collect(),
        edges: graph
            .edges()
            .iter()
            .map(|e| JsonEdge {
                label: render(&e.word),
                from: render(&graph.vertices()[e.from]),
                to: render(&graph.vertices()[e.to]),
                liecycle: ids.get(&e.word).copied(),
            })
            .collect(),
        lie_cycles: cycles
            .iter()
            .enumerate()
            .map(|(id, c)| JsonCycle {
                id,
                length: c.len(),
                edges: c.edges().iter().map(render).collect(),
            })
            .collect(),
    }
}

pub fn graphs_to_json(graphs: &[JsonGraph]) -> String {
    serde_json::to_string_pretty(graphs).expect("graphs serialize") + "\n"
}
