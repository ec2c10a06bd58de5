//! Finite words and the primitives built on them: factors, conjugacy,
//! primitivity and the index of a factor.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Symbols are opaque small integers; an [`Alphabet`] gives them a display form.
pub type Symbol = u8;

const DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A finite sequence of symbols. The empty word is a valid `Word`.
///
/// Ordering is lexicographic by symbol value, so the least element of a
/// set of rotations is the canonical (Lyndon-style) representative.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// Left rotation by `shift` positions (`uv` becomes `vu` with `|u| = shift`).
    pub fn rotation(&self, shift: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let shift = shift % self.0.len();
        let mut out = Vec::with_capacity(self.0.len());
        out.extend_from_slice(&self.0[shift..]);
        out.extend_from_slice(&self.0[..shift]);
        Word(out)
    }

    /// `self` concatenated with itself `exponent` times.
    pub fn pow(&self, exponent: usize) -> Word {
        Word(self.0.repeat(exponent))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn truncated(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.0.len())].to_vec())
    }

    /// Exchanges the letters 0 and 1, leaving other symbols alone.
    pub fn exchange_letters(&self) -> Word {
        Word(
            self.0
                .iter()
                .map(|&s| match s {
                    0 => 1,
                    1 => 0,
                    other => other,
                })
                .collect(),
        )
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl From<&[Symbol]> for Word {
    fn from(symbols: &[Symbol]) -> Self {
        Word(symbols.to_vec())
    }
}

/// Parses digits `0-9` then `a-z` as symbols 0..36.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| {
                let lower = c.to_ascii_lowercase();
                DIGITS
                    .iter()
                    .position(|&d| d as char == lower)
                    .map(|i| i as Symbol)
                    .ok_or(Error::InvalidSymbol {
                        symbol: c,
                        position,
                        alphabet: String::from_utf8_lossy(DIGITS).into_owned(),
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            match DIGITS.get(s as usize) {
                Some(&d) => write!(f, "{}", d as char)?,
                None => write!(f, "<{s}>")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

/// Display characters for symbols `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    chars: Vec<char>,
}

impl Alphabet {
    pub fn new(chars: &str) -> Result<Self> {
        let chars: Vec<char> = chars.chars().collect();
        if chars.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if chars.len() > 255 {
            return Err(Error::InvalidAlphabet(format!(
                "{} symbols, at most 255 allowed",
                chars.len()
            )));
        }
        let mut seen = HashSet::new();
        for &c in &chars {
            if !seen.insert(c) {
                return Err(Error::InvalidAlphabet(format!("repeated symbol {c:?}")));
            }
        }
        Ok(Alphabet { chars })
    }

    pub fn binary() -> Self {
        Alphabet {
            chars: vec!['0', '1'],
        }
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn symbol_of(&self, c: char) -> Option<Symbol> {
        self.chars.iter().position(|&x| x == c).map(|i| i as Symbol)
    }

    pub fn char_of(&self, s: Symbol) -> Option<char> {
        self.chars.get(s as usize).copied()
    }

    /// Reads one line of word text. A single trailing newline is accepted;
    /// any other character outside the alphabet is rejected.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let line = text
            .strip_suffix('\n')
            .map(|t| t.strip_suffix('\r').unwrap_or(t))
            .unwrap_or(text);
        line.chars()
            .enumerate()
            .map(|(position, c)| {
                self.symbol_of(c).ok_or_else(|| Error::InvalidSymbol {
                    symbol: c,
                    position,
                    alphabet: self.chars.iter().collect(),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Renders a word; symbols without a display character fall back to `<n>`.
    pub fn render(&self, word: &Word) -> String {
        let mut out = String::with_capacity(word.len());
        for &s in word.iter() {
            match self.char_of(s) {
                Some(c) => out.push(c),
                None => out.push_str(&format!("<{s}>")),
            }
        }
        out
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::binary()
    }
}

/// The rotation orbit of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjugacyClass {
    representative: Word,
    members: BTreeSet<Word>,
}

impl ConjugacyClass {
    /// The least rotation under symbol order.
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn members(&self) -> &BTreeSet<Word> {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn word_len(&self) -> usize {
        self.representative.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }

    /// True when every member lies in `factors`.
    pub fn is_within(&self, factors: &BTreeSet<Word>) -> bool {
        self.members.iter().all(|m| factors.contains(m))
    }
}

/// All distinct rotations of `w`. The class of the empty word is `{ε}`.
pub fn conjugates(w: &Word) -> ConjugacyClass {
    if w.is_empty() {
        return ConjugacyClass {
            representative: Word::empty(),
            members: BTreeSet::from([Word::empty()]),
        };
    }
    let orbit = smallest_root_len(w);
    let members: BTreeSet<Word> = (0..orbit).map(|i| w.rotation(i)).collect();
    let representative = members.first().cloned().expect("nonempty orbit");
    ConjugacyClass {
        representative,
        members,
    }
}

/// Start index of the least rotation of `w` (two-pointer minimum expression).
pub fn least_rotation_start(w: &[Symbol]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = w[(i + k) % n];
        let b = w[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

pub fn least_rotation(w: &Word) -> Word {
    w.rotation(least_rotation_start(w))
}

pub fn is_primitive(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord { op: "is_primitive" });
    }
    Ok(smallest_root_len(w) == w.len())
}

/// Returns `(root, exponent)` with `root` primitive and `root^exponent == w`.
pub fn primitive_root(w: &Word) -> Result<(Word, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord {
            op: "primitive_root",
        });
    }
    let root_len = smallest_root_len(w);
    Ok((w.truncated(root_len), w.len() / root_len))
}

/// Length of the primitive root, from the smallest period of `w`.
fn smallest_root_len(w: &[Symbol]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    let border = border_table(w)[n];
    let period = n - border;
    if n.is_multiple_of(period) {
        period
    } else {
        n
    }
}

/// `table[i]` is the length of the longest proper border of `w[..i]`.
pub(crate) fn border_table(w: &[Symbol]) -> Vec<usize> {
    let mut table = vec![0usize; w.len() + 1];
    let mut k = 0usize;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = table[k];
        }
        if w[i] == w[k] {
            k += 1;
        }
        table[i + 1] = k;
    }
    table
}

/// Starting positions of every (possibly overlapping) occurrence of
/// `pattern` in `text`. Knuth–Morris–Pratt, linear time.
pub fn occurrences(pattern: &[Symbol], text: &[Symbol]) -> Vec<usize> {
    let m = pattern.len();
    if m == 0 {
        return (0..=text.len()).collect();
    }
    let table = border_table(pattern);
    let mut out = Vec::new();
    let mut k = 0usize;
    for (i, &c) in text.iter().enumerate() {
        while k > 0 && c != pattern[k] {
            k = table[k];
        }
        if c == pattern[k] {
            k += 1;
        }
        if k == m {
            out.push(i + 1 - m);
            k = table[k];
        }
    }
    out
}

pub fn is_factor(v: &[Symbol], w: &[Symbol]) -> bool {
    v.len() <= w.len() && (v.is_empty() || w.windows(v.len()).any(|win| win == v))
}

/// Distinct length-`n` windows of `w`; `{ε}` for `n = 0`.
pub fn factors_of_length(w: &[Symbol], n: usize) -> Result<BTreeSet<Word>> {
    if n > w.len() {
        return Err(Error::WindowExceedsWord { n, len: w.len() });
    }
    if n == 0 {
        return Ok(BTreeSet::from([Word::empty()]));
    }
    let distinct: HashSet<&[Symbol]> = w.windows(n).collect();
    Ok(distinct.into_iter().map(Word::from).collect())
}

/// Largest `m` such that `v^m` is a factor of `w` (0 if `v` does not occur).
pub fn index_in(v: &[Symbol], w: &[Symbol]) -> Result<usize> {
    if v.is_empty() {
        return Err(Error::EmptyWord { op: "index_in" });
    }
    let m = v.len();
    let mut hit = vec![false; w.len()];
    for pos in occurrences(v, w) {
        hit[pos] = true;
    }
    // run[i]: number of consecutive copies of v starting at i
    let mut run = vec![0usize; w.len() + m];
    let mut best = 0;
    for i in (0..w.len()).rev() {
        if hit[i] {
            run[i] = 1 + run[i + m];
            best = best.max(run[i]);
        }
    }
    Ok(best)
}
