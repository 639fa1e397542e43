//! Presented noncommutative *-algebras, matrices over them and cyclic chains.

mod chain;
mod chern;
mod confluence;
mod matrix;
mod parse;
mod poly;
mod presentation;

pub use chain::{chain_of_words, connes_b, hochschild_b, CyclicChain};
pub use chern::{chern_even, chern_odd, cycle_ratio, cyclic_trace, proportion, ChernKind, CycleRatio};
pub use confluence::{confluence_probe, random_words, ConfluenceReport, Discrepancy, MAX_PROBE_LEN};
pub use matrix::{mat_check, MatCheck, MatKind, MatNC};
pub use parse::parse_expr;
pub use poly::{GenId, NCPoly, Word};
pub use presentation::{Generator, Presentation, PresentationBuilder, Strategy};
