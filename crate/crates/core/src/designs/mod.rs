//! Block designs, their excess/leave multigraphs, point bookkeeping and the
//! Gram-matrix certificates.

mod certificate;
mod design;
mod matrix;
mod structure;

pub use certificate::{bose_lower, certificate_check, gram, reduced_gram};
pub use design::Design;
pub use matrix::{determinant, dominance_pd, rank_exact, sylvester_pd, RationalMatrix};
pub use structure::{
    bookkeeping, classify, excess_or_leave, Bookkeeping, Classification, DesignKind, Multigraph,
};
