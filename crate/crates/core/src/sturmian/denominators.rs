use std::fmt;

use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, One, ToPrimitive};

use crate::error::{Error, Result};
use crate::sturmian::SlopeSpec;

/// Integer type usable for convergent denominators.
///
/// Arbitrary-precision types never overflow; fixed-width types report
/// [`Error::Overflow`] through checked arithmetic.
pub trait Denominator:
    Clone
    + Ord
    + One
    + CheckedAdd
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + fmt::Debug
    + fmt::Display
{
}

impl<T> Denominator for T where
    T: Clone
        + Ord
        + One
        + CheckedAdd
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + fmt::Debug
        + fmt::Display
{
}

/// Convergent denominators `q_0 = 1, q_1 = d_1 + 1, ..., q_K` of a normalized
/// slope, with `q_{k+1} = d_{k+1} q_k + q_{k-1}`.
///
/// `q_{-1}` is taken to be 1, the length of `s_{-1} = 1`; with it the
/// recurrence also holds at `k = 0` and `q_{1,l} = l + 1 = |0^l 1|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorTable<T> {
    q: Vec<T>,
    digits: Vec<u64>,
    spec: SlopeSpec,
}

fn lift<T: Denominator>(x: u64, k: usize) -> Result<T> {
    T::from_u64(x).ok_or(Error::Overflow { k })
}

fn step<T: Denominator>(d: u64, q: &T, q_prev: &T, k: usize) -> Result<T> {
    lift::<T>(d, k)?
        .checked_mul(q)
        .and_then(|x| x.checked_add(q_prev))
        .ok_or(Error::Overflow { k })
}

impl<T: Denominator> DenominatorTable<T> {
    /// Denominators `q_0..=q_{k_max}`.
    pub fn new(spec: &SlopeSpec, k_max: usize) -> Result<Self> {
        spec.require_normalized()?;
        let mut table = DenominatorTable {
            q: vec![T::one()],
            digits: Vec::new(),
            spec: spec.clone(),
        };
        while table.k_max() < k_max {
            table.push_next()?;
        }
        Ok(table)
    }

    /// Smallest table whose last denominator exceeds `n`.
    pub fn covering(spec: &SlopeSpec, n: &T) -> Result<Self> {
        let mut table = Self::new(spec, 0)?;
        while table.last() <= n {
            table.push_next()?;
        }
        Ok(table)
    }

    fn push_next(&mut self) -> Result<()> {
        let k = self.q.len();
        let d = self.spec.digit(k)?;
        let q_prev = if k >= 2 {
            self.q[k - 2].clone()
        } else {
            T::one()
        };
        let next = step(d, &self.q[k - 1], &q_prev, k)?;
        self.digits.push(d);
        self.q.push(next);
        Ok(())
    }

    pub fn spec(&self) -> &SlopeSpec {
        &self.spec
    }

    /// Largest stored index K.
    pub fn k_max(&self) -> usize {
        self.q.len() - 1
    }

    pub fn q(&self, k: usize) -> Option<&T> {
        self.q.get(k)
    }

    pub fn values(&self) -> &[T] {
        &self.q
    }

    pub fn last(&self) -> &T {
        self.q.last().expect("q_0 always present")
    }

    /// Shifted digit `d_k` for `1 <= k <= K`.
    pub fn digit(&self, k: usize) -> Option<u64> {
        k.checked_sub(1).and_then(|i| self.digits.get(i)).copied()
    }

    /// `q_{k,l} = l q_{k-1} + q_{k-2}` for `1 <= l < d_k`.
    pub fn semiconvergent(&self, k: usize, ell: u64) -> Result<T> {
        let d = match self.digit(k) {
            Some(d) => d,
            None if k == 0 => return Err(Error::NoSuchSemiconvergent { k, ell }),
            None => return Err(Error::IndexOutOfRange { k: k as isize }),
        };
        if ell == 0 || ell >= d {
            return Err(Error::NoSuchSemiconvergent { k, ell });
        }
        let q_prev = if k >= 2 {
            self.q[k - 2].clone()
        } else {
            T::one()
        };
        step(ell, &self.q[k - 1], &q_prev, k)
    }
}

/// Table of `q_0..=q_{k_max}` with arbitrary-precision entries.
pub fn denominators(spec: &SlopeSpec, k_max: usize) -> Result<crate::Denominators> {
    DenominatorTable::new(spec, k_max)
}

pub fn semiconvergent_denominator<T: Denominator>(
    table: &DenominatorTable<T>,
    k: usize,
    ell: u64,
) -> Result<T> {
    table.semiconvergent(k, ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn spec(s: &str) -> SlopeSpec {
        s.parse().unwrap()
    }

    fn as_u64(t: &crate::Denominators) -> Vec<u64> {
        t.values().iter().map(|x| x.to_u64().unwrap()).collect()
    }

    #[test]
    fn fibonacci_denominators() {
        let t = denominators(&SlopeSpec::fibonacci(), 5).unwrap();
        assert_eq!(as_u64(&t), vec![1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn small_tables() {
        assert_eq!(
            as_u64(&denominators(&spec("3;(2)"), 2).unwrap()),
            vec![1, 3, 7]
        );
        assert_eq!(as_u64(&denominators(&spec("7"), 0).unwrap()), vec![1]);
    }

    #[test]
    fn exhaustion_and_normalization_errors() {
        assert_eq!(
            denominators(&spec("3,2"), 3).unwrap_err(),
            Error::DigitsExhausted { needed: 3 }
        );
        assert_eq!(
            denominators(&spec("1;(2)"), 2).unwrap_err(),
            Error::NotNormalized
        );
    }

    #[test]
    fn semiconvergents() {
        let t = denominators(&spec("3;(2)"), 4).unwrap();
        assert_eq!(t.semiconvergent(2, 1).unwrap(), BigUint::from(4u32));
        assert!(matches!(
            t.semiconvergent(2, 2),
            Err(Error::NoSuchSemiconvergent { .. })
        ));

        let fib = denominators(&SlopeSpec::fibonacci(), 6).unwrap();
        for k in 1..=6 {
            for ell in 0..3 {
                assert!(fib.semiconvergent(k, ell).is_err());
            }
        }

        // d_1 = 3: s_{1,2} = 0^2 1 has length 3
        let t = denominators(&spec("4;(1)"), 2).unwrap();
        assert_eq!(t.semiconvergent(1, 2).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn fixed_width_overflows_loudly() {
        let big = spec("2;(1000000000)");
        let err = DenominatorTable::<u64>::new(&big, 40).unwrap_err();
        assert!(matches!(err, Error::Overflow { .. }));
        assert!(denominators(&big, 40).is_ok());
    }

    #[test]
    fn covering_table_stops_past_n() {
        let t = DenominatorTable::<u64>::covering(&SlopeSpec::fibonacci(), &13).unwrap();
        assert_eq!(t.values(), &[1, 2, 3, 5, 8, 13, 21]);
        let t = DenominatorTable::<u64>::covering(&SlopeSpec::fibonacci(), &0).unwrap();
        assert_eq!(t.values(), &[1]);
    }
}
