use std::collections::{BTreeMap, BTreeSet};

use crate::complexity::factors::saturated_factors;
use crate::complexity::source::WordSource;
use crate::error::Result;
use crate::word::{conjugates, least_rotation, ConjugacyClass, Word};

/// Conjugacy classes contained in `factors`, ordered by representative.
///
/// A class counts once however many members it has. Every factor set of
/// length 0 is `{ε}`, whose class `{ε}` is always Lie.
pub fn lie_classes_in(factors: &BTreeSet<Word>) -> Vec<ConjugacyClass> {
    let mut by_rep: BTreeMap<Word, Option<ConjugacyClass>> = BTreeMap::new();
    for f in factors {
        let rep = least_rotation(f);
        by_rep.entry(rep).or_insert_with(|| {
            let class = conjugates(f);
            class.is_within(factors).then_some(class)
        });
    }
    by_rep.into_values().flatten().collect()
}

/// Lie classes of length `n`: conjugacy classes all of whose members are
/// factors of `source`.
pub fn lie_classes_bruteforce(source: &WordSource, n: usize) -> Result<Vec<ConjugacyClass>> {
    Ok(lie_classes_in(&saturated_factors(source, n)?.factors))
}

pub fn lie_complexity_bruteforce(source: &WordSource, n: usize) -> Result<usize> {
    Ok(lie_classes_bruteforce(source, n)?.len())
}
