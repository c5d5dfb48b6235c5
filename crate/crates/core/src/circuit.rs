//! Circuit intermediate representation: an ordered gate sequence over
//! indexed qubits, plus role metadata (clean qubit, designated outputs).

use crate::error::{Error, Result};
use crate::gate::Gate;

/// An ordered gate sequence over `num_qubits` qubits.
///
/// `clean_qubit` marks the wire that one-clean-qubit executions initialize to
/// `|0⟩` (the rest start maximally mixed); `outputs` lists the designated
/// output qubits in the order their bits appear in outcome strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub num_qubits: usize,
    pub gates: Vec<Gate>,
    pub clean_qubit: Option<usize>,
    pub outputs: Vec<usize>,
}

impl Circuit {
    /// A circuit with default role metadata: no clean-qubit marker and the
    /// single output qubit 0.
    pub fn new(num_qubits: usize, gates: Vec<Gate>) -> Circuit {
        Circuit {
            num_qubits,
            gates,
            clean_qubit: None,
            outputs: vec![0],
        }
    }

    /// Replaces the designated output list.
    pub fn with_outputs(mut self, outputs: Vec<usize>) -> Circuit {
        self.outputs = outputs;
        self
    }

    /// Marks `qubit` as the clean qubit.
    pub fn with_clean(mut self, qubit: usize) -> Circuit {
        self.clean_qubit = Some(qubit);
        self
    }

    /// Checks every structural invariant, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        for (gate_index, gate) in self.gates.iter().enumerate() {
            let qubits = gate.qubits();
            for &q in &qubits {
                if q >= self.num_qubits {
                    return Err(Error::QubitOutOfRange {
                        gate_index,
                        qubit: q,
                        num_qubits: self.num_qubits,
                    });
                }
            }
            let mut seen = vec![false; self.num_qubits];
            for &q in &qubits {
                if seen[q] {
                    return Err(Error::DuplicateQubit {
                        gate_index,
                        qubit: q,
                    });
                }
                seen[q] = true;
            }
            match gate {
                Gate::Ncx {
                    controls, polarity, ..
                } => {
                    if controls.is_empty() {
                        return Err(Error::EmptyControls { gate_index });
                    }
                    if controls.len() != polarity.len() {
                        return Err(Error::PolarityLengthMismatch {
                            gate_index,
                            controls: controls.len(),
                            polarity: polarity.len(),
                        });
                    }
                }
                Gate::Ncp8 {
                    qubits, polarity, k,
                } => {
                    if qubits.is_empty() {
                        return Err(Error::EmptyControls { gate_index });
                    }
                    if qubits.len() != polarity.len() {
                        return Err(Error::PolarityLengthMismatch {
                            gate_index,
                            controls: qubits.len(),
                            polarity: polarity.len(),
                        });
                    }
                    if *k >= 16 {
                        return Err(Error::PhaseStepOutOfRange { k: *k });
                    }
                }
                Gate::Rz8 { k, .. } | Gate::Rzz8 { k, .. } if *k >= 16 => {
                    return Err(Error::PhaseStepOutOfRange { k: *k });
                }
                _ => {}
            }
        }
        if self.outputs.is_empty() {
            return Err(Error::EmptySpecialQubits { role: "output" });
        }
        let mut seen = vec![false; self.num_qubits];
        for &q in &self.outputs {
            if q >= self.num_qubits {
                return Err(Error::SpecialQubitOutOfRange {
                    role: "output",
                    qubit: q,
                    num_qubits: self.num_qubits,
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
        if let Some(c) = self.clean_qubit {
            if c >= self.num_qubits {
                return Err(Error::SpecialQubitOutOfRange {
                    role: "clean",
                    qubit: c,
                    num_qubits: self.num_qubits,
                });
            }
        }
        Ok(())
    }

    /// Circuit depth under greedy layering: scanning gates in order, each gate
    /// is placed in the earliest layer where all its qubits are free.
    pub fn depth(&self) -> usize {
        let mut wire_free = vec![0usize; self.num_qubits];
        let mut depth = 0;
        for gate in &self.gates {
            let layer = gate
                .qubits()
                .iter()
                .map(|&q| wire_free[q])
                .max()
                .unwrap_or(0);
            for q in gate.qubits() {
                wire_free[q] = layer + 1;
            }
            depth = depth.max(layer + 1);
        }
        depth
    }

    /// The inverse circuit: gate order reversed, each gate inverted. Role
    /// metadata is preserved.
    pub fn invert(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(|g| g.inverse()).collect(),
            clean_qubit: self.clean_qubit,
            outputs: self.outputs.clone(),
        }
    }

    /// The same circuit with every qubit index raised by `offset` (the low
    /// `offset` wires become untouched padding).
    pub fn shifted(&self, offset: usize) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits + offset,
            gates: self
                .gates
                .iter()
                .map(|g| g.map_qubits(|q| q + offset))
                .collect(),
            clean_qubit: self.clean_qubit.map(|q| q + offset),
            outputs: self.outputs.iter().map(|&q| q + offset).collect(),
        }
    }

    /// Concatenation: `self`'s gates followed by `other`'s, over the wider of
    /// the two widths. Role metadata is taken from `self`.
    pub fn then(&self, other: &Circuit) -> Circuit {
        let mut gates = self.gates.clone();
        gates.extend(other.gates.iter().cloned());
        Circuit {
            num_qubits: self.num_qubits.max(other.num_qubits),
            gates,
            clean_qubit: self.clean_qubit,
            outputs: self.outputs.clone(),
        }
    }

    /// The controlled version of the whole circuit: on the branch where `ctrl`
    /// matches `polarity` the result acts as `self`, on the other branch as
    /// the identity (exactly, with no stray global phase).
    ///
    /// Every gate is replaced by a controlled equivalent built from the
    /// primitive set; no helper wires are added. `ctrl` must not collide with
    /// any qubit used by `self`'s gates.
    pub fn controlled_on(&self, ctrl: usize, polarity: bool) -> Result<Circuit> {
        for (gate_index, gate) in self.gates.iter().enumerate() {
            if gate.qubits().contains(&ctrl) {
                return Err(Error::DuplicateQubit {
                    gate_index,
                    qubit: ctrl,
                });
            }
        }
        let mut gates = Vec::new();
        if !polarity {
            gates.push(Gate::X(ctrl));
        }
        for gate in &self.gates {
            controlled_gate(gate, ctrl, &mut gates);
        }
        if !polarity {
            gates.push(Gate::X(ctrl));
        }
        Ok(Circuit {
            num_qubits: self.num_qubits.max(ctrl + 1),
            gates,
            clean_qubit: self.clean_qubit,
            outputs: self.outputs.clone(),
        })
    }
}

/// Emits a controlled version of `gate` (positive control on `ctrl`) onto
/// `out`. Each mapping is exact as a full matrix identity, not merely up to
/// global phase, so the uncontrolled branch is exactly the identity.
fn controlled_gate(gate: &Gate, ctrl: usize, out: &mut Vec<Gate>) {
    match gate {
        // S t · H t · T t · CNOT c t · T† t · H t · S† t == controlled-H.
        Gate::H(t) => out.extend([
            Gate::S(*t),
            Gate::H(*t),
            Gate::T(*t),
            Gate::Cnot {
                control: ctrl,
                target: *t,
            },
            Gate::Tdg(*t),
            Gate::H(*t),
            Gate::Sdg(*t),
        ]),
        Gate::X(t) => out.push(Gate::Cnot {
            control: ctrl,
            target: *t,
        }),
        Gate::Z(t) => out.push(Gate::Cz(ctrl, *t)),
        // T c · T t · CNOT c t · T† t · CNOT c t == controlled-S.
        Gate::S(t) => out.extend([
            Gate::T(ctrl),
            Gate::T(*t),
            Gate::Cnot {
                control: ctrl,
                target: *t,
            },
            Gate::Tdg(*t),
            Gate::Cnot {
                control: ctrl,
                target: *t,
            },
        ]),
        Gate::Sdg(t) => out.extend([
            Gate::Cnot {
                control: ctrl,
                target: *t,
            },
            Gate::T(*t),
            Gate::Cnot {
                control: ctrl,
                target: *t,
            },
            Gate::Tdg(*t),
            Gate::Tdg(ctrl),
        ]),
        // Controlled-T is the two-qubit phase e^{iπ/4} on the |11⟩ subspace.
        Gate::T(t) => out.push(Gate::ncp8(vec![ctrl, *t], vec![true, true], 2)),
        Gate::Tdg(t) => out.push(Gate::ncp8(vec![ctrl, *t], vec![true, true], 14)),
        Gate::Cnot { control, target } => out.push(Gate::Toffoli {
            controls: [ctrl, *control],
            target: *target,
        }),
        Gate::Cz(a, b) => out.push(Gate::ncp8(vec![ctrl, *a, *b], vec![true; 3], 8)),
        Gate::Toffoli { controls, target } => out.push(Gate::Ncx {
            controls: vec![ctrl, controls[0], controls[1]],
            polarity: vec![true; 3],
            target: *target,
        }),
        Gate::Ncx {
            controls,
            polarity,
            target,
        } => {
            let mut cs = vec![ctrl];
            cs.extend_from_slice(controls);
            let mut pol = vec![true];
            pol.extend_from_slice(polarity);
            out.push(Gate::Ncx {
                controls: cs,
                polarity: pol,
                target: *target,
            });
        }
        // e^{ikπ/8 Z} controlled: phase e^{ikπ/8} whenever ctrl fires, undone
        // twice over on the |1⟩ half of the rotated qubit.
        Gate::Rz8 { k, qubit } => {
            out.push(Gate::ncp8(vec![ctrl], vec![true], i64::from(*k)));
            out.push(Gate::ncp8(
                vec![ctrl, *qubit],
                vec![true, true],
                16 - 2 * i64::from(*k),
            ));
        }
        // Controlled e^{ikπ/8 Z⊗Z}: fold the parity of the pair into one wire,
        // phase it conditioned on ctrl, and unfold.
        Gate::Rzz8 { k, qubits: (a, b) } => {
            let fold = Gate::Toffoli {
                controls: [ctrl, *a],
                target: *b,
            };
            out.push(fold.clone());
            out.push(Gate::ncp8(vec![ctrl], vec![true], i64::from(*k)));
            out.push(Gate::ncp8(
                vec![ctrl, *b],
                vec![true, true],
                16 - 2 * i64::from(*k),
            ));
            out.push(fold);
        }
        Gate::Ncp8 {
            qubits,
            polarity,
            k,
        } => {
            let mut qs = vec![ctrl];
            qs.extend_from_slice(qubits);
            let mut pol = vec![true];
            pol.extend_from_slice(polarity);
            out.push(Gate::Ncp8 {
                qubits: qs,
                polarity: pol,
                k: *k,
            });
        }
    }
}
