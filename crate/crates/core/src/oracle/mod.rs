//! Exact covering and packing numbers for small parameters by exhaustive
//! search.

mod search;

pub use search::{max_pack, min_cover, SearchBudget, SearchOutcome, MAX_ORACLE_POINTS};
