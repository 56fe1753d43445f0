//! Edge-weighted graphs, m-independent sets and the guarantees behind the
//! refined bounds.

mod graph;
mod greedy;
mod reduced;

pub use graph::WeightedGraph;
pub use greedy::{
    caro_tuza_bound, check_hypothesis, f_m, induced_bound_a, induced_bound_b, m_max, m_max_by,
    m_max_outcomes,
};
pub use reduced::{c_reduced, c_reduced_of, h_value, CReducedGraph, HParams};
