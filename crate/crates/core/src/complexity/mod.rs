//! Factor complexity and Lie complexity of words given as prefix sources.

mod factors;
mod formula;
mod lie;
mod profile;
mod rauzy;
mod source;
mod verify;

pub use factors::{factor_complexity, saturate, saturated_factors, FactorSet, Sample};
pub use formula::{classify_length, matching_cases, sturmian_lie_formula, LengthCase};
pub use lie::{lie_classes_bruteforce, lie_classes_in, lie_complexity_bruteforce};
pub use profile::{analyze, profile, ComplexityRow, Methods};
pub use rauzy::{
    edge_disjoint, lie_complexity_via_rauzy, lie_cycles, rauzy_graph, LieCycle, RauzyEdge,
    RauzyGraph,
};
pub use source::{Morphism, SaturationPolicy, SourceKind, WordSource, DEFAULT_PREFIX_CAP};
pub use verify::{
    closed_primitive_factors, index_set_of_conjugates, s_conjugates_of_length, verify_bound,
    verify_conjugate_closure, verify_index_sets, verify_lie_cycles, verify_power_status,
    ClosureCheck, ClosureReport, CycleCheck, IndexCheck, IndexSet, PowerCheck,
};
