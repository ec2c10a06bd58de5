//! Continued-fraction slopes, convergent denominators and the standard,
//! semistandard and characteristic words of a Sturmian slope.

mod denominators;
mod mechanical;
mod prefixes;
mod slope;

pub use denominators::{denominators, semiconvergent_denominator, Denominator, DenominatorTable};
pub use mechanical::mechanical_word;
pub use prefixes::{
    characteristic_prefix, semistandard_prefix, set_s_members_of_length, standard_prefix,
    PrefixCatalogEntry, PrefixKind,
};
pub use slope::SlopeSpec;
