//! Checks of the structural facts behind the Lie complexity: the bound by
//! the first difference of factor complexity, the class/cycle
//! correspondence, conjugate closure of the set S, and the index sets of
//! conjugates of standard and semistandard words.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complexity::factors::saturate;
use crate::complexity::lie::lie_classes_in;
use crate::complexity::profile::{analyze, ComplexityRow, Methods};
use crate::complexity::rauzy::{edge_disjoint, lie_cycles, RauzyGraph};
use crate::complexity::source::WordSource;
use crate::error::{Error, Result};
use crate::sturmian::{
    semistandard_prefix, set_s_members_of_length, standard_prefix, DenominatorTable,
    PrefixCatalogEntry, SlopeSpec,
};
use crate::word::{conjugates, index_in, is_primitive, primitive_root, Word};

/// Row with `p(n)`, `p(n) - p(n-1)` and the brute-force Lie complexity,
/// with `bound_ok` recording `L(n) <= p(n) - p(n-1) + 1`.
pub fn verify_bound(source: &WordSource, n: usize) -> Result<ComplexityRow> {
    analyze(source, n, Methods::BRUTEFORCE)
}

/// Class count against cycle count in the Rauzy graph of one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCheck {
    pub n: usize,
    pub classes: usize,
    pub cycles: usize,
    pub edge_disjoint: bool,
    pub certified: bool,
}

impl CycleCheck {
    pub fn passed(&self) -> bool {
        self.classes == self.cycles && self.edge_disjoint
    }
}

pub fn verify_lie_cycles(source: &WordSource, n: usize) -> Result<CycleCheck> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let sample = saturate(source, n)?;
    let edges = sample.factors(n)?;
    let graph = RauzyGraph::from_factor_sets(&sample.factors(n - 1)?, &edges)?;
    let cycles = lie_cycles(&graph);
    Ok(CycleCheck {
        n,
        classes: lie_classes_in(&edges.factors).len(),
        cycles: cycles.len(),
        edge_disjoint: edge_disjoint(&cycles),
        certified: graph.certified(),
    })
}

/// Indices of all conjugates of a word in a prefix of a source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexSet {
    pub indices: BTreeSet<usize>,
    /// The set did not change across the last doubling of the prefix.
    pub certified: bool,
    pub prefix_len: usize,
}

/// `{index of c : c a conjugate of v}`, on a prefix doubled until the set
/// is stable across one doubling or `prefix_cap` is reached.
pub fn index_set_of_conjugates(
    source: &WordSource,
    v: &Word,
    prefix_cap: usize,
) -> Result<IndexSet> {
    if !is_primitive(v)? {
        return Err(Error::NotPrimitive {
            word: v.to_string(),
        });
    }
    let class = conjugates(v);
    let indices_at = |len: usize| -> Result<(BTreeSet<usize>, usize)> {
        let prefix = source.prefix(len)?;
        let set = class
            .members()
            .iter()
            .map(|c| index_in(c, &prefix))
            .collect::<Result<_>>()?;
        Ok((set, prefix.len()))
    };

    let mut len = (16 * v.len()).max(64).min(prefix_cap);
    let (mut indices, mut prefix_len) = indices_at(len)?;
    while len < prefix_cap {
        let next_len = (len * 2).min(prefix_cap);
        let (next, next_prefix_len) = indices_at(next_len)?;
        let full_doubling = next_len == len * 2;
        let stable = next == indices;
        indices = next;
        prefix_len = next_prefix_len;
        len = next_len;
        if stable && full_doubling {
            return Ok(IndexSet {
                indices,
                certified: true,
                prefix_len,
            });
        }
    }
    Ok(IndexSet {
        indices,
        certified: false,
        prefix_len,
    })
}

/// Expected index set of conjugates of a standard or semistandard word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexCheck {
    pub label: String,
    pub word: String,
    pub expected: BTreeSet<usize>,
    pub found: IndexSet,
}

impl IndexCheck {
    pub fn passed(&self) -> bool {
        self.found.certified && self.found.indices == self.expected
    }
}

fn source_word(source: &WordSource, w: Word) -> Word {
    if source.letters_swapped() {
        w.exchange_letters()
    } else {
        w
    }
}

fn sturmian_slope(source: &WordSource) -> Result<SlopeSpec> {
    source.slope().cloned().ok_or(Error::NotSturmian)
}

/// Index sets of conjugates of `s_k` (`1 <= k <= k_max`) and of every
/// `s_{k,l}` (`2 <= k <= k_max`): `{d_2 + 1}` for `s_1`,
/// `{d_{k+1} + 1, d_{k+1} + 2}` for `s_k` with `k >= 2`, `{1, 2}` for `s_{k,l}`.
pub fn verify_index_sets(
    source: &WordSource,
    k_max: usize,
    prefix_cap: usize,
) -> Result<Vec<IndexCheck>> {
    let slope = sturmian_slope(source)?;
    let mut checks = Vec::new();
    for k in 1..=k_max {
        let d_next = slope.digit(k + 1)? as usize;
        let expected: BTreeSet<usize> = if k == 1 {
            BTreeSet::from([d_next + 1])
        } else {
            BTreeSet::from([d_next + 1, d_next + 2])
        };
        let entry = standard_prefix(&slope, k as isize)?;
        checks.push(index_check(source, &entry, expected, prefix_cap)?);
        if k >= 2 {
            for ell in 1..slope.digit(k)? {
                let entry = semistandard_prefix(&slope, k, ell)?;
                checks.push(index_check(
                    source,
                    &entry,
                    BTreeSet::from([1, 2]),
                    prefix_cap,
                )?);
            }
        }
    }
    Ok(checks)
}

fn index_check(
    source: &WordSource,
    entry: &PrefixCatalogEntry,
    expected: BTreeSet<usize>,
    prefix_cap: usize,
) -> Result<IndexCheck> {
    let word = source_word(source, entry.word.clone());
    let found = index_set_of_conjugates(source, &word, prefix_cap)?;
    Ok(IndexCheck {
        label: entry_label(entry),
        word: word.to_string(),
        expected,
        found,
    })
}

fn entry_label(entry: &PrefixCatalogEntry) -> String {
    match entry.kind {
        crate::sturmian::PrefixKind::Standard => format!("s_{}", entry.k),
        crate::sturmian::PrefixKind::Semistandard { ell } => format!("s_{},{}", entry.k, ell),
    }
}

/// One finding of [`verify_conjugate_closure`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureCheck {
    pub rule: &'static str,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub n: usize,
    pub certified: bool,
    pub checks: Vec<ClosureCheck>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClosureCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Conjugates of the members of S of length `n`, in the letters of `source`.
pub fn s_conjugates_of_length(source: &WordSource, n: usize) -> Result<BTreeSet<Word>> {
    let slope = sturmian_slope(source)?;
    let mut out = BTreeSet::new();
    for e in set_s_members_of_length(&slope, n, usize::MAX)? {
        out.extend(
            conjugates(&source_word(source, e.word))
                .members()
                .iter()
                .cloned(),
        );
    }
    Ok(out)
}

/// Primitive factors of length `n` whose whole conjugacy class is made of factors.
pub fn closed_primitive_factors(source: &WordSource, n: usize) -> Result<BTreeSet<Word>> {
    let facts = saturate(source, n)?.factors(n)?;
    let mut out = BTreeSet::new();
    for f in &facts.factors {
        if is_primitive(f)? && conjugates(f).is_within(&facts.factors) {
            out.insert(f.clone());
        }
    }
    Ok(out)
}

/// Checks, at length `n >= 2` of the Sturmian source of `spec`:
///
/// * a primitive factor has its whole class among the factors iff it is a
///   conjugate of a member of S;
/// * every Lie class is a class of a power of a conjugate of a member of S;
/// * `s_k^m` is Lie for `m <= d_{k+1} + 1` and not for `m = d_{k+1} + 2`;
///   `s_{k,l}` is Lie and `s_{k,l}^2` is not.
pub fn verify_conjugate_closure(
    source: &WordSource,
    n: usize,
    spec: &SlopeSpec,
) -> Result<ClosureReport> {
    let slope = sturmian_slope(source)?;
    if spec.normalize()?.0 != slope {
        return Err(Error::NotSturmian);
    }
    if n < 2 {
        return Err(Error::LengthTooSmall { n, min: 2 });
    }
    let sample = saturate(source, n)?;
    let facts = sample.factors(n)?.factors;
    let mut checks = Vec::new();

    // primitive closed factors against conjugates of S
    let closed = closed_primitive_factors(source, n)?;
    let from_s = s_conjugates_of_length(source, n)?;
    for w in closed.difference(&from_s) {
        checks.push(ClosureCheck {
            rule: "closure-only-if",
            subject: w.to_string(),
            passed: false,
            detail: "primitive factor with all conjugates present is not a conjugate of S".into(),
        });
    }
    for w in from_s.difference(&closed) {
        checks.push(ClosureCheck {
            rule: "closure-if",
            subject: w.to_string(),
            passed: false,
            detail: "conjugate of a member of S is not a closed primitive factor".into(),
        });
    }
    checks.push(ClosureCheck {
        rule: "closure",
        subject: format!("{} closed primitive factors", closed.len()),
        passed: closed == from_s,
        detail: format!("{} conjugates of S members", from_s.len()),
    });

    // Lie classes are powers of conjugates of S
    for class in lie_classes_in(&facts) {
        let (root, exponent) = primitive_root(class.representative())?;
        let root_class = s_conjugates_of_length(source, root.len())?;
        let passed = root_class.contains(&root);
        checks.push(ClosureCheck {
            rule: "power-of-s-conjugate",
            subject: class.representative().to_string(),
            passed,
            detail: format!("root {root} with exponent {exponent}"),
        });
    }

    // powers of standard words, semistandard words and their squares
    let table = DenominatorTable::<usize>::covering(&slope, &n)?;
    let is_lie = |w: &Word| conjugates(w).is_within(&facts);
    for k in 1..table.k_max() {
        let q = *table.q(k).expect("k within table");
        if !n.is_multiple_of(q) {
            continue;
        }
        let m = (n / q) as u64;
        let d_next = table.digit(k + 1).expect("digit stored");
        let expect_lie = if m <= d_next + 1 {
            true
        } else if m == d_next + 2 {
            false
        } else {
            continue;
        };
        let base = source_word(source, standard_prefix(&slope, k as isize)?.word);
        let power = base.pow(m as usize);
        let lie = is_lie(&power);
        checks.push(ClosureCheck {
            rule: "standard-power",
            subject: format!("(s_{k})^{m}"),
            passed: lie == expect_lie,
            detail: format!("expected Lie = {expect_lie}, found {lie}"),
        });
    }
    for k in 2..=table.k_max() {
        let d = table.digit(k).expect("digit stored");
        for ell in 1..d {
            let q = table.semiconvergent(k, ell)?;
            if q > n {
                break;
            }
            let (exponent, expect_lie) = if q == n {
                (1, true)
            } else if 2 * q == n {
                (2, false)
            } else {
                continue;
            };
            let base = source_word(source, semistandard_prefix(&slope, k, ell)?.word);
            let lie = is_lie(&base.pow(exponent));
            checks.push(ClosureCheck {
                rule: "semistandard-power",
                subject: format!("(s_{k},{ell})^{exponent}"),
                passed: lie == expect_lie,
                detail: format!("expected Lie = {expect_lie}, found {lie}"),
            });
        }
    }

    Ok(ClosureReport {
        n,
        certified: sample.certified,
        checks,
    })
}

/// Lie status of one power of a standard or semistandard word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerCheck {
    pub label: String,
    pub word: String,
    pub exponent: usize,
    pub expect_lie: bool,
    pub lie: bool,
    pub certified: bool,
}

impl PowerCheck {
    pub fn passed(&self) -> bool {
        self.certified && self.lie == self.expect_lie
    }
}

/// For `k = 1..=k_max`: `s_k^(d_{k+1}+1)` is Lie and `s_k^(d_{k+1}+2)` is
/// not; for `k >= 2`, `s_{k,l}` is Lie and `s_{k,l}^2` is not.
pub fn verify_power_status(source: &WordSource, k_max: usize) -> Result<Vec<PowerCheck>> {
    let slope = sturmian_slope(source)?;
    let mut cases = Vec::new();
    for k in 1..=k_max {
        let d_next = slope.digit(k + 1)? as usize;
        let entry = standard_prefix(&slope, k as isize)?;
        cases.push((entry.clone(), d_next + 1, true));
        cases.push((entry, d_next + 2, false));
        if k >= 2 {
            for ell in 1..slope.digit(k)? {
                let entry = semistandard_prefix(&slope, k, ell)?;
                cases.push((entry.clone(), 1, true));
                cases.push((entry, 2, false));
            }
        }
    }
    cases
        .into_iter()
        .map(|(entry, exponent, expect_lie)| {
            let base = source_word(source, entry.word.clone());
            let power = base.pow(exponent);
            let facts = saturate(source, power.len())?.factors(power.len())?;
            Ok(PowerCheck {
                label: entry_label(&entry),
                word: base.to_string(),
                exponent,
                expect_lie,
                lie: conjugates(&power).is_within(&facts.factors),
                certified: facts.certified,
            })
        })
        .collect()
}
