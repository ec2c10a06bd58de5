use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::sturmian::{characteristic_prefix, SlopeSpec};
use crate::word::{Alphabet, Symbol, Word};

/// Hard cap on Sturmian prefix growth during saturation.
pub const DEFAULT_PREFIX_CAP: usize = 1 << 22;

/// A non-erasing substitution, given as one image per symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: BTreeMap<Symbol, Word>,
}

impl Morphism {
    pub fn new(images: BTreeMap<Symbol, Word>) -> Result<Self> {
        for (&s, image) in &images {
            if image.is_empty() {
                return Err(Error::InvalidMorphism(format!("image of {s} is empty")));
            }
            if let Some(&missing) = image.iter().find(|c| !images.contains_key(c)) {
                return Err(Error::InvalidMorphism(format!(
                    "symbol {missing} appears in an image but has no rule"
                )));
            }
        }
        Ok(Morphism { images })
    }

    /// Parses rules like `0->01,1->0` over `alphabet`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let mut images = BTreeMap::new();
        for rule in text.split(',') {
            let rule = rule.trim();
            let (lhs, rhs) = rule.split_once("->").ok_or_else(|| Error::Parse {
                token: rule.to_string(),
                reason: "expected a rule of the form a->w".into(),
            })?;
            let mut chars = lhs.trim().chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(Error::Parse {
                    token: lhs.to_string(),
                    reason: "left-hand side must be a single symbol".into(),
                });
            };
            let symbol = alphabet.symbol_of(c).ok_or_else(|| Error::Parse {
                token: lhs.to_string(),
                reason: "symbol is outside the alphabet".into(),
            })?;
            let image = alphabet.parse_word(rhs.trim()).map_err(|e| Error::Parse {
                token: rhs.to_string(),
                reason: e.to_string(),
            })?;
            if images.insert(symbol, image).is_some() {
                return Err(Error::Parse {
                    token: rule.to_string(),
                    reason: "duplicate rule".into(),
                });
            }
        }
        Self::new(images)
    }

    pub fn fibonacci() -> Self {
        Morphism {
            images: BTreeMap::from([(0, Word::new(vec![0, 1])), (1, Word::new(vec![0]))]),
        }
    }

    pub fn thue_morse() -> Self {
        Morphism {
            images: BTreeMap::from([(0, Word::new(vec![0, 1])), (1, Word::new(vec![1, 0]))]),
        }
    }

    pub fn image(&self, s: Symbol) -> Option<&Word> {
        self.images.get(&s)
    }

    /// Checks that `seed` generates a right-infinite fixed point.
    fn check_seed(&self, seed: Symbol) -> Result<()> {
        let image = self
            .image(seed)
            .ok_or_else(|| Error::InvalidMorphism(format!("seed {seed} has no rule")))?;
        if image.len() < 2 || image[0] != seed {
            return Err(Error::InvalidMorphism(format!(
                "image of seed {seed} must start with the seed and have length at least 2"
            )));
        }
        Ok(())
    }

    /// Prefix of length `len` of the fixed point starting with `seed`.
    fn fixed_point_prefix(&self, seed: Symbol, len: usize) -> Word {
        let mut current = vec![seed];
        while current.len() < len {
            let mut next = Vec::with_capacity(len.min(current.len() * 4));
            for &s in &current {
                next.extend_from_slice(&self.images[&s]);
                if next.len() >= len {
                    break;
                }
            }
            current = next;
        }
        current.truncate(len);
        Word::new(current)
    }
}

/// How much of a source is examined before its factor sets are trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaturationPolicy {
    /// Grow by doubling from `4n` until `n + 1` factors of length `n` are
    /// seen, which certifies completeness for a Sturmian word.
    SturmianComplexity { cap: usize },
    /// Use a prefix of fixed length; factor sets are uncertified.
    FixedPrefix { len: usize },
    /// Use the whole finite word, which is its own ground truth.
    WholeWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceKind {
    Literal(Word),
    MorphismFixedPoint {
        morphism: Morphism,
        seed: Symbol,
    },
    /// Characteristic word of `normalized`, with letters exchanged when the
    /// original slope exceeded 1/2.
    Sturmian {
        original: SlopeSpec,
        normalized: SlopeSpec,
        letters_swapped: bool,
    },
}

/// A producer of prefixes of a (possibly infinite) word.
///
/// `prefix(m)` is a prefix of `prefix(m')` whenever `m <= m'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSource {
    kind: SourceKind,
    policy: SaturationPolicy,
}

impl WordSource {
    pub fn literal(word: Word) -> Self {
        WordSource {
            kind: SourceKind::Literal(word),
            policy: SaturationPolicy::WholeWord,
        }
    }

    pub fn morphism(morphism: Morphism, seed: Symbol, prefix_len: usize) -> Result<Self> {
        morphism.check_seed(seed)?;
        Ok(WordSource {
            kind: SourceKind::MorphismFixedPoint { morphism, seed },
            policy: SaturationPolicy::FixedPrefix { len: prefix_len },
        })
    }

    pub fn sturmian(spec: &SlopeSpec) -> Result<Self> {
        let (normalized, letters_swapped) = spec.normalize()?;
        Ok(WordSource {
            kind: SourceKind::Sturmian {
                original: spec.clone(),
                normalized,
                letters_swapped,
            },
            policy: SaturationPolicy::SturmianComplexity {
                cap: DEFAULT_PREFIX_CAP,
            },
        })
    }

    pub fn fibonacci() -> Self {
        Self::sturmian(&SlopeSpec::fibonacci()).expect("normalized slope")
    }

    pub fn thue_morse(prefix_len: usize) -> Self {
        Self::morphism(Morphism::thue_morse(), 0, prefix_len).expect("valid seed")
    }

    /// Replaces the Sturmian growth cap or the fixed prefix length; literal
    /// sources are unaffected.
    pub fn with_prefix_cap(mut self, cap: usize) -> Self {
        self.policy = match self.policy {
            SaturationPolicy::SturmianComplexity { .. } => {
                SaturationPolicy::SturmianComplexity { cap }
            }
            SaturationPolicy::FixedPrefix { .. } => SaturationPolicy::FixedPrefix { len: cap },
            SaturationPolicy::WholeWord => SaturationPolicy::WholeWord,
        };
        self
    }

    pub fn kind(&self) -> &SourceKind {
        &self.kind
    }

    pub fn policy(&self) -> SaturationPolicy {
        self.policy
    }

    pub fn is_sturmian(&self) -> bool {
        matches!(self.kind, SourceKind::Sturmian { .. })
    }

    /// The normalized slope of a Sturmian source.
    pub fn slope(&self) -> Option<&SlopeSpec> {
        match &self.kind {
            SourceKind::Sturmian { normalized, .. } => Some(normalized),
            _ => None,
        }
    }

    pub fn letters_swapped(&self) -> bool {
        matches!(
            self.kind,
            SourceKind::Sturmian {
                letters_swapped: true,
                ..
            }
        )
    }

    /// Length of a finite source, `None` for infinite ones.
    pub fn finite_len(&self) -> Option<usize> {
        match &self.kind {
            SourceKind::Literal(w) => Some(w.len()),
            _ => None,
        }
    }

    /// Prefix of length `len`, or the whole word when a literal source is shorter.
    pub fn prefix(&self, len: usize) -> Result<Word> {
        match &self.kind {
            SourceKind::Literal(w) => Ok(w.truncated(len)),
            SourceKind::MorphismFixedPoint { morphism, seed } => {
                Ok(morphism.fixed_point_prefix(*seed, len))
            }
            SourceKind::Sturmian {
                normalized,
                letters_swapped,
                ..
            } => {
                let w = characteristic_prefix(normalized, len)?;
                Ok(if *letters_swapped {
                    w.exchange_letters()
                } else {
                    w
                })
            }
        }
    }
}

impl fmt::Display for WordSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SourceKind::Literal(w) if w.len() <= 24 => write!(f, "literal {w}"),
            SourceKind::Literal(w) => write!(f, "literal word of length {}", w.len()),
            SourceKind::MorphismFixedPoint { morphism, seed } => {
                let rules: Vec<String> = morphism
                    .images
                    .iter()
                    .map(|(s, img)| format!("{}->{img}", Word::new(vec![*s])))
                    .collect();
                write!(f, "fixed point of {} from {seed}", rules.join(","))
            }
            SourceKind::Sturmian { original, .. } => write!(f, "sturmian slope {original}"),
        }
    }
}
