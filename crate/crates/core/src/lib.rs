//! Exact lower bounds on covering numbers and upper bounds on packing numbers
//! of `(v, k, λ)` block designs, together with the machinery needed to check
//! them on concrete designs.
//!
//! The crate is split along the lines of the underlying mathematics:
//!
//! * [`bounds`] evaluates the closed-form bounds (Schönheim, Johnson, and the
//!   Gram-rank families) with exact rational and quadratic-surd arithmetic.
//! * [`designs`] models concrete coverings and packings, their excess/leave
//!   multigraphs, Gram matrices, exact ranks and rank certificates.
//! * [`windep`] holds edge-weighted graphs, the `f_m` guarantee function and
//!   the greedy m-MAX algorithm for m-independent sets.
//! * [`construct`] builds finite fields, affine planes and the blow-up
//!   coverings that meet the bounds.
//! * [`oracle`] computes exact covering and packing numbers for tiny
//!   parameters by exhaustive search.
//!
//! All bound arithmetic is exact; floating point never enters a bound value.

pub mod bounds;
pub mod construct;
pub mod designs;
mod error;
pub mod oracle;
pub mod windep;

pub use error::{Error, Result};
