//! Exact simulation and gadget compilation for one-clean-qubit circuits.
//!
//! The model: a register whose designated *clean* qubit starts in `|0⟩`
//! while every other wire starts maximally mixed, a unitary circuit over a
//! fixed discrete gate set, and a measurement of designated output qubits.
//! Everything here is exact — mixed wires are averaged over their basis
//! states rather than sampled, so results carry no statistical error.
//!
//! The crate provides:
//!
//! * a circuit representation with validation, inversion, depth, exact
//!   whole-circuit controlling, and light-cone extraction
//!   ([`Circuit`], [`lightcone`]);
//! * dense statevector simulation and ensemble averaging
//!   ([`StateVector`], [`dqc1_acceptance`], [`dqc1m_distribution`]);
//! * gadget compilers ([`gadgets`]): the acceptance-relay gadget, wire
//!   teleportation to constant depth, the postselection-folding
//!   verification gadget, and hypergraph-shaped (diagonal-sandwich)
//!   circuit descriptions;
//! * a generalized-Toffoli lowering onto `{H, X, CNOT, T, T†}`
//!   ([`decompose_generalized_toffoli`]);
//! * exact strong simulators for bounded-depth and hypergraph-shaped
//!   circuits ([`strongsim`]).
//!
//! Bit conventions are little-endian throughout: basis-state index bit `j`
//! is qubit `j`, and outcome index bit `i` is the `i`-th listed output.

pub mod circuit;
pub mod decompose;
pub mod dist;
pub mod ensemble;
pub mod error;
pub mod gadgets;
pub mod gate;
pub mod lightcone;
pub mod random;
pub mod sim;
pub mod strongsim;

pub use circuit::Circuit;
pub use decompose::{ancillas_needed, decompose_generalized_toffoli};
pub use dist::{check_additive, check_multiplicative, OutcomeDistribution};
pub use ensemble::{dqc1_acceptance, dqc1m_distribution, Dqc1Spec, DEFAULT_ENSEMBLE_CAP};
pub use error::{Error, Result};
pub use gadgets::{
    build_dw, build_dw_decomposed, build_iqp_dqc1, build_vw, dw_predicted_acceptance,
    teleport_compile, vw_depth_bound, DwGadget, IqpSpec, TeleportedCircuit, VwGadget, VwRoles,
    TELEPORT_DEPTH_BOUND, VW_DEPTH_BASE, VW_DEPTH_LOG_COEFF,
};
pub use gate::Gate;
pub use lightcone::{cone_subcircuit, light_cone, ConeCircuit, LightCone};
pub use random::{random_htcnot_circuit, random_mixed_circuit, random_shallow_circuit};
pub use sim::{
    acceptance_probability, apply_circuit, output_distribution, unitary_of, StateVector,
    STATEVECTOR_QUBIT_CAP, UNITARY_QUBIT_CAP,
};
pub use strongsim::{
    iqp_clean_probability, strongsim_constdepth_marginal,
    strongsim_constdepth_marginal_distribution, strongsim_constdepth_point, strongsim_iqp,
    strongsim_iqp_distribution, DEFAULT_CONE_CAP,
};
