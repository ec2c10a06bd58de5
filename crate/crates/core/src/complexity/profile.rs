use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::complexity::factors::saturate;
use crate::complexity::formula::classify_length;
use crate::complexity::lie::lie_classes_in;
use crate::complexity::rauzy::{lie_cycles, RauzyGraph};
use crate::complexity::source::WordSource;
use crate::error::{Error, Result};

/// Which Lie-complexity computations to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Methods {
    pub bruteforce: bool,
    pub rauzy: bool,
    pub formula: bool,
}

impl Methods {
    pub const ALL: Methods = Methods {
        bruteforce: true,
        rauzy: true,
        formula: true,
    };

    pub const BRUTEFORCE: Methods = Methods {
        bruteforce: true,
        rauzy: false,
        formula: false,
    };
}

impl FromStr for Methods {
    type Err = Error;

    /// Comma-separated subset of `bruteforce`, `rauzy`, `formula`.
    fn from_str(s: &str) -> Result<Self> {
        let mut m = Methods::default();
        for tok in s.split(',') {
            match tok.trim() {
                "bruteforce" => m.bruteforce = true,
                "rauzy" => m.rauzy = true,
                "formula" => m.formula = true,
                other => {
                    return Err(Error::Parse {
                        token: other.to_string(),
                        reason: "expected bruteforce, rauzy or formula".into(),
                    })
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Display for Methods {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [
            (self.bruteforce, "bruteforce"),
            (self.rauzy, "rauzy"),
            (self.formula, "formula"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect();
        write!(f, "{}", names.join(","))
    }
}

/// One row of a complexity profile.
///
/// `delta_p` is absent at `n = 0`. Lie counts are present only for the
/// methods that ran (Rauzy needs `n >= 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityRow {
    pub n: usize,
    pub p: usize,
    pub delta_p: Option<i64>,
    pub lie_bruteforce: Option<usize>,
    pub lie_rauzy: Option<usize>,
    pub lie_formula: Option<usize>,
    pub bound_ok: bool,
    pub case_tag: Option<String>,
}

impl ComplexityRow {
    fn lie_values(&self) -> impl Iterator<Item = usize> {
        [self.lie_bruteforce, self.lie_rauzy, self.lie_formula]
            .into_iter()
            .flatten()
    }

    /// Whether the present Lie counts are all equal.
    pub fn methods_agree(&self) -> bool {
        let mut values = self.lie_values();
        match values.next() {
            Some(first) => values.all(|v| v == first),
            None => true,
        }
    }

    /// `L(n) <= p(n) - p(n-1) + 1` for every present count; vacuous at `n = 0`.
    fn bound_holds(&self) -> bool {
        match self.delta_p {
            Some(delta) => self.lie_values().all(|l| (l as i64) <= delta + 1),
            None => true,
        }
    }
}

/// Computes one profile row, reading every factor set from one frozen prefix.
pub fn analyze(source: &WordSource, n: usize, methods: Methods) -> Result<ComplexityRow> {
    if methods.formula && !source.is_sturmian() {
        return Err(Error::NotSturmian);
    }
    let sample = saturate(source, n)?;
    let facts = sample.factors(n)?;
    let prev = if n >= 1 {
        Some(sample.factors(n - 1)?)
    } else {
        None
    };
    let p = facts.len();
    let delta_p = prev.as_ref().map(|f| p as i64 - f.len() as i64);

    let lie_bruteforce = methods
        .bruteforce
        .then(|| lie_classes_in(&facts.factors).len());
    let lie_rauzy = match (&prev, methods.rauzy) {
        (Some(vertices), true) => {
            Some(lie_cycles(&RauzyGraph::from_factor_sets(vertices, &facts)?).len())
        }
        _ => None,
    };
    let (lie_formula, case_tag) = match source.slope() {
        Some(slope) if methods.formula => {
            let case = classify_length(slope, n)?;
            (Some(case.lie_complexity() as usize), Some(case.to_string()))
        }
        _ => (None, None),
    };

    let mut row = ComplexityRow {
        n,
        p,
        delta_p,
        lie_bruteforce,
        lie_rauzy,
        lie_formula,
        bound_ok: true,
        case_tag,
    };
    row.bound_ok = row.bound_holds();
    Ok(row)
}

/// Rows for every `n` in `range`, computed in parallel and returned in order.
pub fn profile(
    source: &WordSource,
    range: RangeInclusive<usize>,
    methods: Methods,
) -> Result<Vec<ComplexityRow>> {
    let ns: Vec<usize> = range.collect();
    ns.into_par_iter()
        .map(|n| analyze(source, n, methods))
        .collect()
}
