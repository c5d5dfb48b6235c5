//! Light-cone analysis: which input qubits can influence a set of outputs,
//! and the induced subcircuit that reproduces their exact marginal.

use std::collections::BTreeSet;

use crate::circuit::Circuit;
use crate::error::{Error, Result};

/// The set of qubits that can influence one output qubit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LightCone {
    pub qubits: BTreeSet<usize>,
    pub for_output: usize,
}

/// Computes the light cone of `out`: the minimal qubit set containing `out`
/// and closed under reverse gate dependence. Scanning gates last to first,
/// any gate touching a qubit already in the set contributes all its qubits.
pub fn light_cone(circuit: &Circuit, out: usize) -> Result<LightCone> {
    if out >= circuit.num_qubits {
        return Err(Error::SpecialQubitOutOfRange {
            role: "output",
            qubit: out,
            num_qubits: circuit.num_qubits,
        });
    }
    let (qubits, _) = trace_cone(circuit, &[out]);
    Ok(LightCone {
        qubits,
        for_output: out,
    })
}

/// A circuit induced on a light cone, relabeled to contiguous wires.
///
/// `qubits[i]` is the original index of the cone wire now called `i`.
/// Simulating `circuit` reproduces the exact joint marginal of the seed
/// qubits: every gate outside the cone acts, at its position, on wires the
/// seeds no longer depend on, so it cancels against its own inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeCircuit {
    pub circuit: Circuit,
    pub qubits: Vec<usize>,
}

/// Restricts `circuit` to the union light cone of `seeds` and relabels the
/// surviving gates onto wires `0..cone_size` (cone qubits in ascending order
/// of their original index).
pub fn cone_subcircuit(circuit: &Circuit, seeds: &[usize]) -> Result<ConeCircuit> {
    for &s in seeds {
        if s >= circuit.num_qubits {
            return Err(Error::SpecialQubitOutOfRange {
                role: "cone seed",
                qubit: s,
                num_qubits: circuit.num_qubits,
            });
        }
    }
    let (cone, marked) = trace_cone(circuit, seeds);
    let order: Vec<usize> = cone.iter().copied().collect();
    let mut new_index = vec![usize::MAX; circuit.num_qubits];
    for (i, &q) in order.iter().enumerate() {
        new_index[q] = i;
    }
    let gates = circuit
        .gates
        .iter()
        .zip(&marked)
        .filter(|(_, &m)| m)
        .map(|(g, _)| g.map_qubits(|q| new_index[q]))
        .collect();
    let outputs = seeds.iter().map(|&s| new_index[s]).collect();
    let mut sub = Circuit::new(order.len().max(1), gates).with_outputs(outputs);
    if seeds.is_empty() {
        sub.outputs = vec![0];
    }
    Ok(ConeCircuit {
        circuit: sub,
        qubits: order,
    })
}

/// Reverse scan shared by [`light_cone`] and [`cone_subcircuit`]: returns the
/// cone qubit set and a mark per gate (true = the gate is inside the cone).
fn trace_cone(circuit: &Circuit, seeds: &[usize]) -> (BTreeSet<usize>, Vec<bool>) {
    let mut cone: BTreeSet<usize> = seeds.iter().copied().collect();
    let mut marked = vec![false; circuit.gates.len()];
    for (index, gate) in circuit.gates.iter().enumerate().rev() {
        let qubits = gate.qubits();
        if qubits.iter().any(|q| cone.contains(q)) {
            marked[index] = true;
            cone.extend(qubits);
        }
    }
    (cone, marked)
}
