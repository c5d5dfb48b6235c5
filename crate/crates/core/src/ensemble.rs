//! One-clean-qubit execution semantics: the input is `|0⟩⟨0|` on the clean
//! qubit tensored with the maximally mixed state on every other wire, handled
//! exactly by averaging over all basis settings of the mixed register.

use crate::circuit::Circuit;
use crate::dist::OutcomeDistribution;
use crate::error::{Error, Result};
use crate::sim::{output_distribution, StateVector};

/// Default cap on the number of mixed qubits an ensemble average may span
/// (2^20 basis settings).
pub const DEFAULT_ENSEMBLE_CAP: usize = 20;

/// A circuit together with its one-clean-qubit roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dqc1Spec {
    pub circuit: Circuit,
    pub clean_qubit: usize,
    pub output_qubits: Vec<usize>,
}

impl Dqc1Spec {
    /// Adopts the circuit's own role metadata; an unmarked clean qubit
    /// defaults to qubit 0.
    pub fn from_circuit(circuit: Circuit) -> Dqc1Spec {
        let clean_qubit = circuit.clean_qubit.unwrap_or(0);
        let output_qubits = circuit.outputs.clone();
        Dqc1Spec {
            circuit,
            clean_qubit,
            output_qubits,
        }
    }

    /// Explicit roles, overriding whatever the circuit carries.
    pub fn new(circuit: Circuit, clean_qubit: usize, output_qubits: Vec<usize>) -> Dqc1Spec {
        Dqc1Spec {
            circuit,
            clean_qubit,
            output_qubits,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.circuit.validate()?;
        let n = self.circuit.num_qubits;
        if self.clean_qubit >= n {
            return Err(Error::SpecialQubitOutOfRange {
                role: "clean",
                qubit: self.clean_qubit,
                num_qubits: n,
            });
        }
        if self.output_qubits.is_empty() {
            return Err(Error::EmptySpecialQubits { role: "output" });
        }
        let mut seen = vec![false; n];
        for &q in &self.output_qubits {
            if q >= n {
                return Err(Error::SpecialQubitOutOfRange {
                    role: "output",
                    qubit: q,
                    num_qubits: n,
                });
            }
            if seen[q] {
                return Err(Error::DuplicateSpecialQubit {
                    role: "output",
                    qubit: q,
                });
            }
            seen[q] = true;
        }
        Ok(())
    }

    /// Mixed-register wires, ascending.
    fn mixed_qubits(&self) -> Vec<usize> {
        (0..self.circuit.num_qubits)
            .filter(|&q| q != self.clean_qubit)
            .collect()
    }
}

/// Probability that the single designated output measures 1 under the
/// one-clean-qubit input, computed as the exact uniform average over all
/// 2^l basis settings of the mixed register (ascending order).
pub fn dqc1_acceptance(spec: &Dqc1Spec, ensemble_cap: usize) -> Result<f64> {
    spec.validate()?;
    if spec.output_qubits.len() != 1 {
        return Err(Error::RequiresSingleOutput {
            count: spec.output_qubits.len(),
        });
    }
    let out = spec.output_qubits[0];
    let mut sum = 0.0;
    for_each_ensemble_member(spec, ensemble_cap, |state| {
        sum += state.bit_probability(out, true);
    })?;
    Ok(sum * 0.5f64.powi(spec.mixed_qubits().len() as i32))
}

/// Exact joint distribution of the designated output qubits under the
/// one-clean-qubit input.
pub fn dqc1m_distribution(spec: &Dqc1Spec, ensemble_cap: usize) -> Result<OutcomeDistribution> {
    spec.validate()?;
    let mut probs = vec![0.0; 1 << spec.output_qubits.len()];
    for_each_ensemble_member(spec, ensemble_cap, |state| {
        let member = output_distribution(state, &spec.output_qubits)
            .expect("outputs validated against the circuit width");
        for (outcome, p) in member.probs.iter().enumerate() {
            probs[outcome] += p;
        }
    })?;
    let scale = 0.5f64.powi(spec.mixed_qubits().len() as i32);
    for p in &mut probs {
        *p *= scale;
    }
    Ok(OutcomeDistribution {
        output_qubits: spec.output_qubits.clone(),
        probs,
    })
}

/// Runs the circuit once per basis setting of the mixed register, in
/// ascending basis order, handing each evolved pure state to `visit`.
fn for_each_ensemble_member(
    spec: &Dqc1Spec,
    ensemble_cap: usize,
    mut visit: impl FnMut(&StateVector),
) -> Result<()> {
    let mixed = spec.mixed_qubits();
    if mixed.len() > ensemble_cap {
        return Err(Error::EnsembleTooLarge {
            mixed_qubits: mixed.len(),
            cap: ensemble_cap,
        });
    }
    let mut state = StateVector::zero_state(spec.circuit.num_qubits)?;
    for setting in 0..(1u64 << mixed.len()) {
        let mut basis = 0u64;
        for (bit, &q) in mixed.iter().enumerate() {
            if setting & (1 << bit) != 0 {
                basis |= 1 << q;
            }
        }
        state.set_basis(basis)?;
        for gate in &spec.circuit.gates {
            state.apply(gate);
        }
        visit(&state);
    }
    Ok(())
}
