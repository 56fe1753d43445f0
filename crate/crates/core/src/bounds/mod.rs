//! Closed-form covering lower bounds and packing upper bounds.

mod classical;
mod params;
mod report;
mod theorems;
mod value;

pub use classical::{
    johnson1, johnson2_strong, johnson2_strong_with, johnson2_weak, schonheim, Johnson2Reading,
    RefinableBound,
};
pub use params::{ParamSet, Side};
pub use report::{best_bounds, BoundEntry, BoundName, BoundReport};
pub use theorems::{
    cb_value, db_value, thm_1_1, thm_1_2, thm_5_3, thm_5_4, thm_6_2, thm_6_3, Evaluated, Thm54,
    Thm6x,
};
#[cfg(test)]
pub(crate) use theorems::tricky_pairs;
pub use value::BoundValue;
