//! Closed-form Lie complexity of a Sturmian word of slope below 1/2.
//!
//! With `q_k` the convergent denominators and `q_{k,l}` the semiconvergent
//! ones of `[0; d_1 + 1, d_2, ...]`:
//!
//! * `L(0) = 1`;
//! * `L(n) = 2` for `1 <= n <= q_1`;
//! * otherwise `L(n) = 1` when `n = q_{k,l}` for some `k >= 2, 1 <= l < d_k`,
//!   or `n = m q_k` for some `k >= 1, 1 <= m <= d_{k+1} + 1`;
//! * `L(n) = 0` for every other `n`.
//!
//! The second case takes precedence where it overlaps the power case
//! (`n = q_1 = 1 * q_1`).

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::Result;
use crate::sturmian::{DenominatorTable, SlopeSpec};

/// Which family of lengths `n` belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "case")]
pub enum LengthCase {
    /// `n = 0`.
    Empty,
    /// `1 <= n <= q_1`.
    Small,
    /// `n = m q_k`, `k >= 1`, `1 <= m <= d_{k+1} + 1`.
    PowerOfStandard {
        k: usize,
        m: u64,
    },
    /// `n = q_{k,l}`, `k >= 2`.
    Semistandard {
        k: usize,
        ell: u64,
    },
    None,
}

impl LengthCase {
    pub fn lie_complexity(&self) -> u8 {
        match self {
            LengthCase::Small => 2,
            LengthCase::None => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for LengthCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthCase::Empty => write!(f, "Empty"),
            LengthCase::Small => write!(f, "Small"),
            LengthCase::PowerOfStandard { k, m } => write!(f, "PowerOfStandard(k={k},m={m})"),
            LengthCase::Semistandard { k, ell } => write!(f, "Semistandard(k={k},l={ell})"),
            LengthCase::None => write!(f, "None"),
        }
    }
}

/// Every case family `n` falls into, `Small` first. Needs the digits
/// `d_1..d_K` where `q_K` is the first denominator above `n`.
pub fn matching_cases(spec: &SlopeSpec, n: usize) -> Result<Vec<LengthCase>> {
    spec.require_normalized()?;
    if n == 0 {
        return Ok(vec![LengthCase::Empty]);
    }
    let target = BigUint::from(n);
    let table = DenominatorTable::<BigUint>::covering(spec, &target)?;
    let q = |k: usize| table.q(k).expect("k within table");
    let top = table.k_max();
    let mut cases = Vec::new();

    if &target <= q(1) {
        cases.push(LengthCase::Small);
    }
    for k in 1..top {
        let d_next = table.digit(k + 1).expect("digit stored");
        let (m, rem) = (&target / q(k), &target % q(k));
        if rem == BigUint::ZERO {
            let m = m.to_u64().expect("m <= n");
            if m >= 1 && m <= d_next.saturating_add(1) {
                cases.push(LengthCase::PowerOfStandard { k, m });
            }
        }
    }
    for k in 2..=top {
        let d = table.digit(k).expect("digit stored");
        for ell in 1..d {
            let qkl = table.semiconvergent(k, ell)?;
            if qkl > target {
                break;
            }
            if qkl == target {
                cases.push(LengthCase::Semistandard { k, ell });
            }
        }
    }
    if cases.is_empty() {
        cases.push(LengthCase::None);
    }
    Ok(cases)
}

/// The family of `n`, `Small` taking precedence.
pub fn classify_length(spec: &SlopeSpec, n: usize) -> Result<LengthCase> {
    Ok(matching_cases(spec, n)?[0])
}

/// Lie complexity of any Sturmian word of the normalized slope `spec`.
pub fn sturmian_lie_formula(spec: &SlopeSpec, n: usize) -> Result<u8> {
    Ok(classify_length(spec, n)?.lie_complexity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn spec(s: &str) -> SlopeSpec {
        s.parse().unwrap()
    }

    #[test]
    fn fibonacci_values() {
        let fib = SlopeSpec::fibonacci();
        assert_eq!(sturmian_lie_formula(&fib, 8).unwrap(), 1);
        assert_eq!(sturmian_lie_formula(&fib, 2).unwrap(), 2);
        assert_eq!(sturmian_lie_formula(&fib, 7).unwrap(), 0);
        assert_eq!(sturmian_lie_formula(&fib, 0).unwrap(), 1);
    }

    #[test]
    fn semistandard_length() {
        assert_eq!(sturmian_lie_formula(&spec("3;(2)"), 4).unwrap(), 1);
        assert_eq!(
            classify_length(&spec("3;(2)"), 4).unwrap(),
            LengthCase::Semistandard { k: 2, ell: 1 }
        );
        assert_eq!(
            classify_length(&spec("3;(2)"), 4).unwrap().to_string(),
            "Semistandard(k=2,l=1)"
        );
    }

    #[test]
    fn classification_examples() {
        let fib = SlopeSpec::fibonacci();
        assert_eq!(
            classify_length(&fib, 10).unwrap(),
            LengthCase::PowerOfStandard { k: 3, m: 2 }
        );
        assert_eq!(classify_length(&fib, 7).unwrap(), LengthCase::None);
        assert_eq!(classify_length(&fib, 2).unwrap(), LengthCase::Small);
        assert_eq!(classify_length(&fib, 0).unwrap(), LengthCase::Empty);
    }

    #[test]
    fn small_case_wins_the_overlap_at_q1() {
        let s = spec("4;(1)");
        assert_eq!(
            matching_cases(&s, 4).unwrap(),
            vec![
                LengthCase::Small,
                LengthCase::PowerOfStandard { k: 1, m: 1 }
            ]
        );
        assert_eq!(sturmian_lie_formula(&s, 4).unwrap(), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(
            sturmian_lie_formula(&spec("1;(2)"), 5),
            Err(Error::NotNormalized)
        );
        // [0; 2, 1]: q = 1, 2, 3 and no digit beyond
        assert_eq!(sturmian_lie_formula(&spec("2,1"), 2).unwrap(), 2);
        assert!(sturmian_lie_formula(&spec("2,1"), 3).is_err());
        assert_eq!(
            sturmian_lie_formula(&spec("2,1"), 5),
            Err(Error::DigitsExhausted { needed: 3 })
        );
    }

    /// Closed form for the Fibonacci word from Fibonacci
    /// numbers alone.
    fn fibonacci_closed_form(n: usize) -> u8 {
        let mut f = vec![0usize, 1, 1];
        while *f.last().unwrap() <= 4 * n + 4 {
            let k = f.len();
            f.push(f[k - 1] + f[k - 2]);
        }
        if n == 1 || n == 2 {
            return 2;
        }
        let hit = n == 0 || (4..f.len()).any(|k| f[k] == n || f[k] + f[k - 3] == n);
        u8::from(hit)
    }

    #[test]
    fn fibonacci_matches_fibonacci_numbers() {
        let fib = SlopeSpec::fibonacci();
        for n in 0..=2000 {
            assert_eq!(
                sturmian_lie_formula(&fib, n).unwrap(),
                fibonacci_closed_form(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn at_most_one_family_above_q1() {
        for s in ["2;(1)", "3;(2)", "4;(1)", "2,3,1;(4,1)", "5;(1,3)", "2;(7)"] {
            let sp = spec(s);
            let q1 = sp.digit(1).unwrap() as usize + 1;
            for n in q1 + 1..=3000 {
                let cases = matching_cases(&sp, n).unwrap();
                assert_eq!(cases.len(), 1, "{s} at {n}: {cases:?}");
            }
        }
    }
}
