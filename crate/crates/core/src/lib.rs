//! Lie complexity of infinite words.
//!
//! The Lie complexity `L(n)` of a word counts the conjugacy classes of
//! length-`n` words all of whose members are factors of the word. This
//! crate computes it three ways that check each other:
//!
//! * by enumerating conjugacy classes of factors ([`complexity::lie_classes_bruteforce`]);
//! * by counting cycles of length dividing `n` in the Rauzy graph of order `n`
//!   ([`complexity::lie_cycles`]);
//! * for Sturmian words, from the continued-fraction expansion of the slope
//!   ([`complexity::sturmian_lie_formula`]).
//!
//! Convergent denominators are generic over the integer type; the aliases
//! below fix the two usual choices.

pub mod complexity;
pub mod error;
pub mod export;
pub mod sturmian;
pub mod word;

pub use error::{Error, Result};
pub use word::{Alphabet, ConjugacyClass, Symbol, Word};

/// Arbitrary-precision convergent denominators; never overflow.
pub type Denominators = sturmian::DenominatorTable<num_bigint::BigUint>;

/// Machine-word convergent denominators; overflow is reported as an error.
pub type Denominators64 = sturmian::DenominatorTable<u64>;
