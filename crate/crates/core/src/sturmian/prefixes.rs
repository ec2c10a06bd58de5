use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sturmian::{DenominatorTable, SlopeSpec};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PrefixKind {
    Standard,
    Semistandard { ell: u64 },
}

/// A standard word `s_k` or a semistandard word `s_{k,l} = s_{k-1}^l s_{k-2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrefixCatalogEntry {
    pub kind: PrefixKind,
    pub k: isize,
    pub word: Word,
}

impl PrefixCatalogEntry {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The word without its last two letters (the central prefix), for
    /// entries of length at least 2.
    pub fn central_prefix(&self) -> Option<Word> {
        (self.word.len() >= 2).then(|| self.word.truncated(self.word.len() - 2))
    }
}

impl fmt::Display for PrefixCatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PrefixKind::Standard => write!(f, "s_{} = {}", self.k, self.word),
            PrefixKind::Semistandard { ell } => {
                write!(f, "s_{{{},{}}} = {}", self.k, ell, self.word)
            }
        }
    }
}

/// `s_{-1}, s_0, ..., s_{k_max}` from `s_n = s_{n-1}^{d_n} s_{n-2}`.
fn standard_words(spec: &SlopeSpec, k_max: usize) -> Result<Vec<Word>> {
    let mut words = vec![Word::new(vec![1]), Word::new(vec![0])];
    for k in 1..=k_max {
        let d = spec.digit(k)? as usize;
        let next = words[k].pow(d).concat(&words[k - 1]);
        words.push(next);
    }
    Ok(words)
}

pub fn standard_prefix(spec: &SlopeSpec, k: isize) -> Result<PrefixCatalogEntry> {
    spec.require_normalized()?;
    if k < -1 {
        return Err(Error::IndexOutOfRange { k });
    }
    let mut words = standard_words(spec, k.max(0) as usize)?;
    let word = words.swap_remove((k + 1) as usize);
    Ok(PrefixCatalogEntry {
        kind: PrefixKind::Standard,
        k,
        word,
    })
}

pub fn semistandard_prefix(spec: &SlopeSpec, k: usize, ell: u64) -> Result<PrefixCatalogEntry> {
    spec.require_normalized()?;
    if k == 0 {
        return Err(Error::NoSuchSemiconvergent { k, ell });
    }
    let d = spec.digit(k)?;
    if ell == 0 || ell >= d {
        return Err(Error::NoSuchSemiconvergent { k, ell });
    }
    let words = standard_words(spec, k - 1)?;
    // words[i] is s_{i-1}
    let word = words[k].pow(ell as usize).concat(&words[k - 1]);
    Ok(PrefixCatalogEntry {
        kind: PrefixKind::Semistandard { ell },
        k: k as isize,
        word,
    })
}

/// Length-`len` prefix of the characteristic word of a normalized slope.
///
/// Builds standard words truncated at `len`, so memory stays within `2 len`
/// even when a partial quotient is huge.
pub fn characteristic_prefix(spec: &SlopeSpec, len: usize) -> Result<Word> {
    spec.require_normalized()?;
    let mut older: Vec<u8> = vec![1];
    let mut newer: Vec<u8> = vec![0];
    let mut k = 0;
    while newer.len() < len {
        k += 1;
        let d = spec.digit(k)?;
        let mut next = Vec::with_capacity(len.min(newer.len().saturating_mul(2)) + older.len());
        let mut copies = 0u64;
        while copies < d && next.len() < len {
            next.extend_from_slice(&newer);
            copies += 1;
        }
        if copies == d {
            next.extend_from_slice(&older);
        }
        // Once truncated, later standard words start with this one.
        next.truncate(len);
        older = std::mem::replace(&mut newer, next);
    }
    newer.truncate(len);
    Ok(Word::new(newer))
}

/// Members of S (standard words `s_k`, k >= 0, and semistandard words
/// `s_{k,l}`, k >= 1) of length exactly `n`, for `k <= k_cap`.
pub fn set_s_members_of_length(
    spec: &SlopeSpec,
    n: usize,
    k_cap: usize,
) -> Result<Vec<PrefixCatalogEntry>> {
    spec.require_normalized()?;
    let table = DenominatorTable::<usize>::covering(spec, &n)?;
    let k_top = table.k_max().min(k_cap);
    let words = standard_words(spec, k_top.saturating_sub(1))?;
    let mut out = Vec::new();
    for k in 0..=k_top {
        if table.q(k) == Some(&n) {
            out.push(standard_prefix(spec, k as isize)?);
        }
        if k == 0 {
            continue;
        }
        let d = table.digit(k).expect("digit stored for k <= K");
        for ell in 1..d {
            let q = table.semiconvergent(k, ell)?;
            if q > n {
                break;
            }
            if q == n {
                out.push(PrefixCatalogEntry {
                    kind: PrefixKind::Semistandard { ell },
                    k: k as isize,
                    word: words[k].pow(ell as usize).concat(&words[k - 1]),
                });
            }
        }
    }
    Ok(out)
}
