//! Exact strong simulation of shallow one-clean-qubit circuits through
//! light cones.
//!
//! For a circuit of bounded depth every qubit's light cone is small, so both
//! pointwise outcome probabilities and marginals on small qubit subsets can
//! be computed exactly by simulating only the cone. Cones past the
//! configured cap are reported as errors rather than simulated.

use crate::circuit::Circuit;
use crate::ensemble::Dqc1Spec;
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::lightcone::cone_subcircuit;
use crate::sim::{apply_circuit, output_distribution, StateVector};
use crate::OutcomeDistribution;

/// Default bound on how many qubits a light cone may touch before the
/// simulator refuses.
pub const DEFAULT_CONE_CAP: usize = 20;

/// Exact probability that measuring **every** qubit of the one-clean-qubit
/// execution of `spec` yields the bit string `z` (bit `j` of `z` is qubit
/// `j`'s outcome).
///
/// The probability factors as `2^-(n-1)` times the probability that the
/// clean wire reads 0 after the reversed circuit is applied to `|z⟩`; only
/// the clean wire's light cone in that reversed circuit is simulated.
pub fn strongsim_constdepth_point(spec: &Dqc1Spec, z: &[bool], cone_cap: usize) -> Result<f64> {
    spec.validate()?;
    let n = spec.circuit.num_qubits;
    if z.len() != n {
        return Err(Error::OutcomeLengthMismatch {
            got: z.len(),
            expected: n,
        });
    }

    let mut gates: Vec<Gate> = z
        .iter()
        .enumerate()
        .filter(|&(_, &bit)| bit)
        .map(|(q, _)| Gate::X(q))
        .collect();
    gates.extend(spec.circuit.invert().gates);
    let reversed = Circuit::new(n, gates);

    let cone = cone_subcircuit(&reversed, &[spec.clean_qubit])?;
    if cone.qubits.len() > cone_cap {
        return Err(Error::ConeTooLarge {
            cone_size: cone.qubits.len(),
            cap: cone_cap,
        });
    }
    let state = apply_circuit(&StateVector::zero_state(cone.circuit.num_qubits)?, &cone.circuit)?;
    let clean_reads_zero = state.bit_probability(cone.circuit.outputs[0], false);
    Ok(clean_reads_zero * 0.5f64.powi((n - 1) as i32))
}

/// Exact marginal distribution of the one-clean-qubit execution of `spec` on
/// the qubits in `subset` (bit `i` of an outcome is `subset[i]`'s reading).
///
/// Only the union light cone of `subset` is simulated; mixed wires inside
/// the cone are averaged over their basis states exactly.
pub fn strongsim_constdepth_marginal_distribution(
    spec: &Dqc1Spec,
    subset: &[usize],
    cone_cap: usize,
) -> Result<OutcomeDistribution> {
    spec.validate()?;
    let n = spec.circuit.num_qubits;
    if subset.is_empty() {
        return Err(Error::EmptySpecialQubits { role: "marginal" });
    }
    let mut seen = vec![false; n];
    for &q in subset {
        if q >= n {
            return Err(Error::SpecialQubitOutOfRange {
                role: "marginal",
                qubit: q,
                num_qubits: n,
            });
        }
        if seen[q] {
            return Err(Error::DuplicateSpecialQubit {
                role: "marginal",
                qubit: q,
            });
        }
        seen[q] = true;
    }

    let cone = cone_subcircuit(&spec.circuit, subset)?;
    if cone.qubits.len() > cone_cap {
        return Err(Error::ConeTooLarge {
            cone_size: cone.qubits.len(),
            cap: cone_cap,
        });
    }

    // In-cone wires keep their roles: the clean wire (if captured) stays
    // |0⟩, every other captured wire is averaged over both basis states.
    let mixed: Vec<usize> = (0..cone.qubits.len())
        .filter(|&i| cone.qubits[i] != spec.clean_qubit)
        .collect();
    let mut probs = vec![0.0; 1usize << subset.len()];
    let mut seed = StateVector::zero_state(cone.circuit.num_qubits)?;
    for setting in 0..(1u64 << mixed.len()) {
        let mut basis = 0u64;
        for (bit, &wire) in mixed.iter().enumerate() {
            if setting >> bit & 1 == 1 {
                basis |= 1 << wire;
            }
        }
        seed.set_basis(basis)?;
        let state = apply_circuit(&seed, &cone.circuit)?;
        let member = output_distribution(&state, &cone.circuit.outputs)?;
        for (outcome, p) in member.probs.iter().enumerate() {
            probs[outcome] += p;
        }
    }
    let scale = 0.5f64.powi(mixed.len() as i32);
    for p in &mut probs {
        *p *= scale;
    }
    Ok(OutcomeDistribution {
        output_qubits: subset.to_vec(),
        probs,
    })
}

/// Exact probability that the qubits in `subset` read the bits `z_s`
/// (`z_s[i]` is `subset[i]`'s outcome) in the one-clean-qubit execution of
/// `spec`.
pub fn strongsim_constdepth_marginal(
    spec: &Dqc1Spec,
    subset: &[usize],
    z_s: &[bool],
    cone_cap: usize,
) -> Result<f64> {
    if z_s.len() != subset.len() {
        return Err(Error::OutcomeLengthMismatch {
            got: z_s.len(),
            expected: subset.len(),
        });
    }
    let dist = strongsim_constdepth_marginal_distribution(spec, subset, cone_cap)?;
    let outcome = z_s
        .iter()
        .enumerate()
        .fold(0usize, |acc, (i, &bit)| acc | (usize::from(bit) << i));
    Ok(dist.probs[outcome])
}
