//! Irreducible representations of the sphere algebras as weighted multi-shifts.

mod numeric;
mod rep;
mod weight;

pub use numeric::{
    adjointness_numeric, numeric_trace, relation_check, truncate, NumericTrace, RelationFailure, RelationReport,
    TruncatedOperator, Truncation,
};
pub use rep::{
    build_rep, sigma_intertwines, trace_exact, Family, GenAction, IndexDomain, ShiftRep, State, StateLattice,
    TraceValue,
};
pub use weight::SpectralWeight;
