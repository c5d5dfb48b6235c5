//! Builders for the hardness gadgets: the clean-qubit relay circuit, the
//! constant-depth teleportation compile with its postselected AND gadget,
//! and Hadamard-sandwich (IQP) one-clean-qubit circuits.

pub mod dw;
pub mod iqp;
pub mod teleport;
pub mod vw;

pub use dw::{build_dw, build_dw_decomposed, dw_predicted_acceptance, DwGadget};
pub use iqp::{build_iqp_dqc1, IqpSpec};
pub use teleport::{teleport_compile, TeleportedCircuit, TELEPORT_DEPTH_BOUND};
pub use vw::{build_vw, vw_depth_bound, VwGadget, VwRoles, VW_DEPTH_BASE, VW_DEPTH_LOG_COEFF};
