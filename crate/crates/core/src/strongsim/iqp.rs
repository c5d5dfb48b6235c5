//! Closed-form strong simulation of hypergraph-shaped one-clean-qubit
//! circuits.
//!
//! For a diagonal sandwich (Hadamards, diagonal phases, Hadamards) run with
//! qubit 0 clean and the rest maximally mixed, the clean wire's outcome law
//! has a product closed form and every mixed wire reads an independent fair
//! coin. Writing `θ₀` for qubit 0's phase step angle and, per mixed wire
//! `j`, `φ_j` for the pair-rotation angle on `{0, j}` (zero if absent):
//!
//! ```text
//! P(clean reads b) = 1/2 + (-1)^b · (1/2) · Re[ e^{2iθ₀} · ∏_j m_j ],
//! m_j = i·sin(2φ_j)  if {0, j} is a CZ edge,   cos(2φ_j)  otherwise.
//! ```
//!
//! A CZ edge `{0, j}` with no pair rotation forces `m_j = 0` exactly, so the
//! clean wire is then an exactly fair coin — in floating point too, since
//! `sin(0.0) == 0.0` and a zero factor annihilates the finite product.

use std::f64::consts::FRAC_PI_8;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gadgets::iqp::IqpSpec;
use crate::sim::STATEVECTOR_QUBIT_CAP;
use crate::OutcomeDistribution;

/// Exact probability that the clean wire (qubit 0) reads `value`.
pub fn iqp_clean_probability(spec: &IqpSpec, value: bool) -> Result<f64> {
    spec.validate()?;
    let theta0 = f64::from(spec.theta[0]) * FRAC_PI_8;
    let mut product = Complex64::from_polar(1.0, 2.0 * theta0);
    for j in 1..=spec.l {
        let key = (0, j);
        let phi = spec
            .edge_theta
            .get(&key)
            .map_or(0.0, |&k| f64::from(k) * FRAC_PI_8);
        product *= if spec.edges.contains(&key) {
            Complex64::new(0.0, (2.0 * phi).sin())
        } else {
            Complex64::new((2.0 * phi).cos(), 0.0)
        };
    }
    let sign = if value { -0.5 } else { 0.5 };
    Ok(0.5 + sign * product.re)
}

/// Exact probability that the designated outputs read `z` (`z[i]` is
/// `spec.outputs[i]`'s outcome): the clean-wire law times a fair coin per
/// mixed output wire.
pub fn strongsim_iqp(spec: &IqpSpec, z: &[bool]) -> Result<f64> {
    if z.len() != spec.outputs.len() {
        return Err(Error::OutcomeLengthMismatch {
            got: z.len(),
            expected: spec.outputs.len(),
        });
    }
    let m = spec.outputs.len();
    match spec.outputs.iter().position(|&q| q == 0) {
        Some(t) => Ok(iqp_clean_probability(spec, z[t])? * 0.5f64.powi(m as i32 - 1)),
        None => {
            spec.validate()?;
            Ok(0.5f64.powi(m as i32))
        }
    }
}

/// Exact distribution over the designated outputs (bit `i` of an outcome is
/// `spec.outputs[i]`'s reading).
pub fn strongsim_iqp_distribution(spec: &IqpSpec) -> Result<OutcomeDistribution> {
    spec.validate()?;
    let m = spec.outputs.len();
    if m > STATEVECTOR_QUBIT_CAP {
        return Err(Error::TooManyQubits {
            num_qubits: m,
            cap: STATEVECTOR_QUBIT_CAP,
        });
    }
    let uniform = 0.5f64.powi(m as i32 - 1);
    let probs = match spec.outputs.iter().position(|&q| q == 0) {
        Some(t) => {
            let clean = [
                iqp_clean_probability(spec, false)? * uniform,
                iqp_clean_probability(spec, true)? * uniform,
            ];
            (0..1usize << m).map(|z| clean[z >> t & 1]).collect()
        }
        None => vec![0.5f64.powi(m as i32); 1 << m],
    };
    Ok(OutcomeDistribution {
        output_qubits: spec.outputs.clone(),
        probs,
    })
}
