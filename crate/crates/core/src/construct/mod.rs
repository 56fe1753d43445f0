//! Finite fields, affine planes and the blow-up coverings that meet the
//! lower bounds.

mod exact;
mod field;
mod plane;

pub use exact::{certify_exact_range, exact_range, ranges_for_block_size, ExactRange, RangeCertificate};
pub use field::{gf, gf_with_cap, prime_power, FiniteField, DEFAULT_FIELD_CAP};
pub use plane::{affine_plane, blowup, restrict_covering};
