use std::collections::BTreeSet;

use crate::complexity::source::{SaturationPolicy, WordSource};
use crate::error::{Error, Result};
use crate::word::{factors_of_length, Word};

/// Factors of one length, with whether they are known to be all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    pub n: usize,
    pub factors: BTreeSet<Word>,
    pub certified: bool,
}

impl FactorSet {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.factors.contains(w)
    }
}

/// A prefix long enough to exhibit every factor of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub n: usize,
    pub prefix: Word,
    pub certified: bool,
}

impl Sample {
    /// Factors of length `m <= n` read from the frozen prefix. Certification
    /// carries over: every shorter factor is a prefix of a length-`n` one.
    pub fn factors(&self, m: usize) -> Result<FactorSet> {
        debug_assert!(m <= self.n);
        Ok(FactorSet {
            n: m,
            factors: factors_of_length(&self.prefix, m)?,
            certified: self.certified,
        })
    }
}

/// Freezes a prefix of `source` for factor length `n` according to the
/// source's saturation policy.
pub fn saturate(source: &WordSource, n: usize) -> Result<Sample> {
    match source.policy() {
        SaturationPolicy::WholeWord => {
            let prefix = source.prefix(usize::MAX)?;
            if n > prefix.len() {
                return Err(Error::WindowExceedsWord {
                    n,
                    len: prefix.len(),
                });
            }
            Ok(Sample {
                n,
                prefix,
                certified: false,
            })
        }
        SaturationPolicy::FixedPrefix { len } => {
            let prefix = source.prefix(len)?;
            if n > prefix.len() {
                return Err(Error::WindowExceedsWord {
                    n,
                    len: prefix.len(),
                });
            }
            Ok(Sample {
                n,
                prefix,
                certified: false,
            })
        }
        SaturationPolicy::SturmianComplexity { cap } => {
            let expected = n + 1;
            let mut len = (4 * n).max(4).min(cap.max(n));
            loop {
                let prefix = source.prefix(len)?;
                let found = if n == 0 {
                    1
                } else {
                    factors_of_length(&prefix, n.min(prefix.len()))?.len()
                };
                if found == expected && prefix.len() >= n {
                    return Ok(Sample {
                        n,
                        prefix,
                        certified: true,
                    });
                }
                if len >= cap {
                    return Err(Error::SaturationFailed {
                        n,
                        found,
                        expected,
                        cap,
                    });
                }
                len = (len * 2).min(cap);
            }
        }
    }
}

/// The length-`n` factors of `source`, certified complete for Sturmian sources.
pub fn saturated_factors(source: &WordSource, n: usize) -> Result<FactorSet> {
    saturate(source, n)?.factors(n)
}

/// `p(n)`, the number of distinct factors of length `n`.
pub fn factor_complexity(source: &WordSource, n: usize) -> Result<usize> {
    Ok(saturated_factors(source, n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturmian::SlopeSpec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Word> {
        items.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn fibonacci_factors() {
        let f = saturated_factors(&WordSource::fibonacci(), 3).unwrap();
        assert!(f.certified);
        assert_eq!(f.factors, set(&["001", "010", "100", "101"]));

        let f = saturated_factors(&WordSource::fibonacci(), 0).unwrap();
        assert!(f.certified);
        assert_eq!(f.factors, set(&[""]));
    }

    #[test]
    fn literal_factors_are_uncertified() {
        let f = saturated_factors(&WordSource::literal(w("0011")), 2).unwrap();
        assert!(!f.certified);
        assert_eq!(f.factors, set(&["00", "01", "11"]));
        assert!(matches!(
            saturated_factors(&WordSource::literal(w("0011")), 5),
            Err(Error::WindowExceedsWord { .. })
        ));
    }

    #[test]
    fn factor_counts() {
        assert_eq!(factor_complexity(&WordSource::fibonacci(), 5).unwrap(), 6);
        assert_eq!(
            factor_complexity(&WordSource::thue_morse(1 << 12), 0).unwrap(),
            1
        );
        assert_eq!(
            factor_complexity(&WordSource::thue_morse(1 << 12), 2).unwrap(),
            4
        );
    }

    #[test]
    fn saturation_fails_under_a_tiny_cap() {
        let s = WordSource::sturmian(&"30;(1)".parse::<SlopeSpec>().unwrap())
            .unwrap()
            .with_prefix_cap(32);
        assert!(matches!(
            saturated_factors(&s, 5),
            Err(Error::SaturationFailed { n: 5, .. })
        ));
        assert!(
            saturated_factors(&s.with_prefix_cap(1 << 12), 5)
                .unwrap()
                .certified
        );
    }

    #[test]
    fn sturmian_complexity_is_n_plus_one() {
        for spec in ["2;(1)", "3;(2)", "1,4;(2,1)", "7;(1,9)"] {
            let s = WordSource::sturmian(&spec.parse().unwrap()).unwrap();
            for n in 0..=40 {
                let f = saturated_factors(&s, n).unwrap();
                assert!(f.certified);
                assert_eq!(f.len(), n + 1, "{spec} at {n}");
            }
        }
    }
}
