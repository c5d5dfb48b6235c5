//! Library surface of the command-line front end: the plain-text circuit
//! file format and the JSON report shapes. They live in a library target so
//! integration tests (and other tools) can call them directly.

pub mod format;
pub mod report;

/// Gate-count ceiling for the random source circuits `demo-dw` sweeps.
pub const DEMO_MAX_GATES: usize = 40;
