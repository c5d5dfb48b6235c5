//! Exact strong simulators for restricted one-clean-qubit circuit classes:
//! light-cone evaluation for bounded-depth circuits and a product closed
//! form for hypergraph-shaped (diagonal-sandwich) circuits.

pub mod constdepth;
pub mod iqp;

pub use constdepth::{
    strongsim_constdepth_marginal, strongsim_constdepth_marginal_distribution,
    strongsim_constdepth_point, DEFAULT_CONE_CAP,
};
pub use iqp::{iqp_clean_probability, strongsim_iqp, strongsim_iqp_distribution};
