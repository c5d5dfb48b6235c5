//! Hypergraph-shaped one-clean-qubit circuits: an opening Hadamard layer, a
//! block of commuting diagonal phase gates described by a graph, and a
//! closing Hadamard layer. The clean wire is qubit 0.

use std::collections::{BTreeMap, BTreeSet};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;

/// Graph description of a diagonal-sandwich circuit on `l + 1` qubits
/// (qubit 0 clean, qubits 1..=l mixed).
///
/// Between the two Hadamard layers the circuit applies CZ on every pair in
/// `edges`, a single-qubit phase rotation with step `theta[q]` on each qubit
/// `q` (zero steps are skipped), and a two-qubit phase rotation with step
/// `edge_theta[(a, b)]` on each listed pair. Steps are multiples of `π/8`
/// with the conventions of [`Gate::Rz8`] and [`Gate::Rzz8`]; pairs are
/// normalized as `(low, high)` (see [`IqpSpec::edge_key`]). `outputs` plays
/// the same role as [`Circuit::outputs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IqpSpec {
    pub l: usize,
    pub edges: BTreeSet<(usize, usize)>,
    pub theta: Vec<u8>,
    pub edge_theta: BTreeMap<(usize, usize), u8>,
    pub outputs: Vec<usize>,
}

impl IqpSpec {
    /// An empty description on `l + 1` qubits: no interactions, all phase
    /// steps zero, every qubit an output.
    pub fn new(l: usize) -> IqpSpec {
        IqpSpec {
            l,
            edges: BTreeSet::new(),
            theta: vec![0; l + 1],
            edge_theta: BTreeMap::new(),
            outputs: (0..=l).collect(),
        }
    }

    /// Total qubit count (`l` mixed wires plus the clean wire).
    pub fn num_qubits(&self) -> usize {
        self.l + 1
    }

    /// Normalized map/set key for the pair `{a, b}`.
    pub fn edge_key(a: usize, b: usize) -> (usize, usize) {
        (a.min(b), a.max(b))
    }

    /// Checks every structural invariant, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        let n = self.num_qubits();
        if self.theta.len() != n {
            return Err(Error::PhaseListLengthMismatch {
                got: self.theta.len(),
                expected: n,
            });
        }
        for &k in &self.theta {
            if k >= 16 {
                return Err(Error::PhaseStepOutOfRange { k });
            }
        }
        for &(a, b) in self.edges.iter().chain(self.edge_theta.keys()) {
            if a >= b || b >= n {
                return Err(Error::InvalidInteraction { a, b, num_qubits: n });
            }
        }
        for &k in self.edge_theta.values() {
            if k == 0 || k >= 16 {
                return Err(Error::PhaseStepOutOfRange { k });
            }
        }
        if self.outputs.is_empty() {
            return Err(Error::EmptySpecialQubits { role: "output" });
        }
        let mut seen = vec![false; n];
        for &q in &self.outputs {
            if q >= n {
                return Err(Error::SpecialQubitOutOfRange {
                    role: "output",
                    qubit: q,
                    num_qubits: n,
                });
            }
            if seen[q] {
                return Err(Error::DuplicateSpecialQubit { role: "output", qubit: q });
            }
            seen[q] = true;
        }
        Ok(())
    }

    /// Reads a diagonal-sandwich circuit back into graph form.
    ///
    /// The circuit must open and close with a Hadamard layer covering every
    /// qubit exactly once, keep only diagonal gates in between (CZ, Z, S,
    /// S†, T, T†, and the π/8 rotations), and have its clean wire on
    /// qubit 0. Fixed gates are folded into rotation steps (e.g. T becomes
    /// step 15), which drops per-gate global phases: the returned
    /// description reproduces the circuit's output distributions exactly,
    /// though amplitudes may differ by a global phase.
    pub fn from_circuit(circuit: &Circuit) -> Result<IqpSpec> {
        circuit.validate()?;
        if let Some(c) = circuit.clean_qubit {
            if c != 0 {
                return Err(Error::NotIqpShaped {
                    reason: format!("clean wire must be qubit 0, found {c}"),
                });
            }
        }
        let n = circuit.num_qubits;
        if circuit.gates.len() < 2 * n {
            return Err(Error::NotIqpShaped {
                reason: "too few gates for two full Hadamard layers".into(),
            });
        }
        hadamard_layer(&circuit.gates[..n], n, "opening")?;
        hadamard_layer(&circuit.gates[circuit.gates.len() - n..], n, "closing")?;

        let mut spec = IqpSpec::new(n - 1);
        spec.outputs = circuit.outputs.clone();
        for gate in &circuit.gates[n..circuit.gates.len() - n] {
            match gate {
                Gate::Cz(a, b) => {
                    let key = IqpSpec::edge_key(*a, *b);
                    if !spec.edges.remove(&key) {
                        spec.edges.insert(key);
                    }
                }
                Gate::Z(q) => add_vertex_step(&mut spec.theta, *q, 12),
                Gate::S(q) => add_vertex_step(&mut spec.theta, *q, 14),
                Gate::Sdg(q) => add_vertex_step(&mut spec.theta, *q, 2),
                Gate::T(q) => add_vertex_step(&mut spec.theta, *q, 15),
                Gate::Tdg(q) => add_vertex_step(&mut spec.theta, *q, 1),
                Gate::Rz8 { k, qubit } => add_vertex_step(&mut spec.theta, *qubit, *k),
                Gate::Rzz8 { k, qubits: (a, b) } => {
                    let key = IqpSpec::edge_key(*a, *b);
                    let prior = spec.edge_theta.get(&key).copied().unwrap_or(0);
                    let step = (u16::from(prior) + u16::from(*k)) % 16;
                    if step == 0 {
                        spec.edge_theta.remove(&key);
                    } else {
                        spec.edge_theta.insert(key, step as u8);
                    }
                }
                other => {
                    return Err(Error::NotIqpShaped {
                        reason: format!("{other:?} between the Hadamard layers is not diagonal"),
                    });
                }
            }
        }
        Ok(spec)
    }
}

fn add_vertex_step(theta: &mut [u8], qubit: usize, k: u8) {
    theta[qubit] = ((u16::from(theta[qubit]) + u16::from(k)) % 16) as u8;
}

fn hadamard_layer(gates: &[Gate], n: usize, which: &str) -> Result<()> {
    let mut seen = vec![false; n];
    for gate in gates {
        match gate {
            Gate::H(q) if !seen[*q] => seen[*q] = true,
            Gate::H(q) => {
                return Err(Error::NotIqpShaped {
                    reason: format!("{which} Hadamard layer hits qubit {q} twice"),
                });
            }
            other => {
                return Err(Error::NotIqpShaped {
                    reason: format!("{which} layer contains {other:?}, expected only Hadamards"),
                });
            }
        }
    }
    Ok(())
}

/// Builds the circuit a description stands for: Hadamards on every qubit,
/// the diagonal block (CZ edges, then vertex rotations, then pair
/// rotations, each in ascending order), and Hadamards again. The result
/// marks qubit 0 clean and carries the description's output list.
pub fn build_iqp_dqc1(spec: &IqpSpec) -> Result<Circuit> {
    spec.validate()?;
    let n = spec.num_qubits();
    let mut gates: Vec<Gate> = (0..n).map(Gate::H).collect();
    gates.extend(spec.edges.iter().map(|&(a, b)| Gate::Cz(a, b)));
    gates.extend(
        spec.theta
            .iter()
            .enumerate()
            .filter(|&(_, &k)| k != 0)
            .map(|(q, &k)| Gate::Rz8 { k, qubit: q }),
    );
    gates.extend(
        spec.edge_theta
            .iter()
            .map(|(&(a, b), &k)| Gate::Rzz8 { k, qubits: (a, b) }),
    );
    gates.extend((0..n).map(Gate::H));
    Ok(Circuit::new(n, gates)
        .with_clean(0)
        .with_outputs(spec.outputs.clone()))
}
