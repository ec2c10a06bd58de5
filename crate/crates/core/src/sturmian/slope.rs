use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Continued-fraction description `[0; a_1, a_2, ...]` of a slope in (0, 1).
///
/// `head` holds `a_1..a_K`; a nonempty `period` is repeated forever after it.
/// All partial quotients are at least 1. Internally the shifted digits
/// `d_1 = a_1 - 1` and `d_k = a_k` (k >= 2) are used, so that the expansion
/// reads `[0; d_1 + 1, d_2, d_3, ...]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlopeSpec {
    head: Vec<u64>,
    period: Vec<u64>,
}

impl SlopeSpec {
    pub fn new(head: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if head.is_empty() {
            return Err(Error::Parse {
                token: String::new(),
                reason: "at least one partial quotient is required".into(),
            });
        }
        if let Some(&a) = head.iter().chain(&period).find(|&&a| a == 0) {
            return Err(Error::Parse {
                token: a.to_string(),
                reason: "partial quotients must be at least 1".into(),
            });
        }
        Ok(SlopeSpec { head, period })
    }

    pub fn finite(head: Vec<u64>) -> Result<Self> {
        Self::new(head, Vec::new())
    }

    /// `[0; 2, 1, 1, 1, ...] = 1/φ²`, the slope of the Fibonacci word.
    pub fn fibonacci() -> Self {
        SlopeSpec {
            head: vec![2],
            period: vec![1],
        }
    }

    pub fn head(&self) -> &[u64] {
        &self.head
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    /// Number of available partial quotients, `None` when unbounded.
    pub fn available(&self) -> Option<usize> {
        if self.is_periodic() {
            None
        } else {
            Some(self.head.len())
        }
    }

    /// Partial quotient `a_i` (1-based).
    pub fn quotient(&self, i: usize) -> Option<u64> {
        if i == 0 {
            return None;
        }
        let i = i - 1;
        if i < self.head.len() {
            Some(self.head[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.head.len()) % self.period.len()])
        }
    }

    /// Shifted digit `d_k` (1-based), or a digit-exhaustion error.
    pub fn digit(&self, k: usize) -> Result<u64> {
        let a = self
            .quotient(k)
            .ok_or(Error::DigitsExhausted { needed: k })?;
        Ok(if k == 1 { a - 1 } else { a })
    }

    /// `a_1 >= 2`, i.e. the slope is below 1/2 and `11` is not a factor.
    pub fn is_normalized(&self) -> bool {
        self.head[0] >= 2
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized)
        }
    }

    /// Maps a slope above 1/2 to the slope of the letter-exchanged word:
    /// `[0; 1, a_2, a_3, ...]` becomes `[0; a_2 + 1, a_3, ...]`.
    pub fn normalize(&self) -> Result<(SlopeSpec, bool)> {
        if self.is_normalized() {
            return Ok((self.clone(), false));
        }
        if self.head.len() >= 2 {
            let mut head = self.head[1..].to_vec();
            head[0] += 1;
            return Ok((
                SlopeSpec {
                    head,
                    period: self.period.clone(),
                },
                true,
            ));
        }
        if self.period.is_empty() {
            return Err(Error::CannotNormalize);
        }
        // head was [1]: the tail starts with period[0]
        let mut head = self.period.clone();
        head[0] += 1;
        Ok((
            SlopeSpec {
                head,
                period: self.period.clone(),
            },
            true,
        ))
    }
}

/// Syntax: `a1,a2,...,aK` optionally followed by `;(p1,...,pM)`.
impl FromStr for SlopeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head_text, tail_text) = match s.split_once(';') {
            Some((h, t)) => (h, Some(t.trim())),
            None => (s, None),
        };
        let head = parse_quotients(head_text)?;
        let period = match tail_text {
            None => Vec::new(),
            Some(t) => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse {
                        token: t.to_string(),
                        reason: "periodic tail must be written as (p1,...,pM)".into(),
                    })?;
                let period = parse_quotients(inner)?;
                if period.is_empty() {
                    return Err(Error::Parse {
                        token: t.to_string(),
                        reason: "periodic tail is empty".into(),
                    });
                }
                period
            }
        };
        if head.is_empty() {
            return Err(Error::Parse {
                token: head_text.to_string(),
                reason: "at least one partial quotient is required".into(),
            });
        }
        SlopeSpec::new(head, period)
    }
}

fn parse_quotients(text: &str) -> Result<Vec<u64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<u64>() {
                Ok(0) => Err(Error::Parse {
                    token: tok.to_string(),
                    reason: "partial quotients must be at least 1".into(),
                }),
                Ok(a) => Ok(a),
                Err(e) => Err(Error::Parse {
                    token: tok.to_string(),
                    reason: e.to_string(),
                }),
            }
        })
        .collect()
}

impl fmt::Display for SlopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}", join(&self.head))?;
        if self.is_periodic() {
            write!(f, ";({})", join(&self.period))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> SlopeSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parses_the_documented_forms() {
        assert_eq!(spec("2;(1)"), SlopeSpec::fibonacci());
        assert_eq!(spec("3;(2)").period(), &[2]);
        let s = spec("2,3,1;(4,1)");
        assert_eq!(s.head(), &[2, 3, 1]);
        assert_eq!(s.period(), &[4, 1]);
        assert_eq!(spec(" 5 , 2 ").head(), &[5, 2]);
        assert_eq!(s.to_string(), "2,3,1;(4,1)");
    }

    #[test]
    fn parse_errors_name_the_token() {
        let err = "2,x,1".parse::<SlopeSpec>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "x"));
        let err = "2;(0)".parse::<SlopeSpec>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "0"));
        let err = "2;1".parse::<SlopeSpec>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "1"));
        assert!("".parse::<SlopeSpec>().is_err());
        assert!("2;()".parse::<SlopeSpec>().is_err());
    }

    #[test]
    fn digits_follow_the_shifted_convention() {
        let s = spec("2,3,1;(4,1)");
        let d: Vec<u64> = (1..=7).map(|k| s.digit(k).unwrap()).collect();
        assert_eq!(d, vec![1, 3, 1, 4, 1, 4, 1]);
        let fin = spec("3,2");
        assert_eq!(fin.digit(2).unwrap(), 2);
        assert_eq!(fin.digit(3), Err(Error::DigitsExhausted { needed: 3 }));
    }

    #[test]
    fn normalize_examples() {
        let fib = SlopeSpec::fibonacci();
        assert_eq!(fib.normalize().unwrap(), (fib.clone(), false));

        let (n, swapped) = spec("1,3,2;(4)").normalize().unwrap();
        assert!(swapped);
        assert_eq!(n, spec("4,2;(4)"));

        let (n, swapped) = spec("1;(3,2)").normalize().unwrap();
        assert!(swapped);
        assert_eq!(n, spec("4,2;(3,2)"));
        // same digit stream after the first position
        let orig = spec("1;(3,2)");
        for i in 2..20 {
            assert_eq!(n.quotient(i), orig.quotient(i + 1));
        }

        assert_eq!(spec("1").normalize(), Err(Error::CannotNormalize));
    }

    #[test]
    fn normalize_is_idempotent_on_normalized_specs() {
        for s in ["2;(1)", "3;(2)", "1,1;(2)", "1;(1)"] {
            let (once, _) = spec(s).normalize().unwrap();
            assert_eq!(once.normalize().unwrap(), (once.clone(), false));
        }
    }
}
