//! Depth compression by wire teleportation. Whenever a wire has accumulated
//! enough layers, the compiler moves its state onto a fresh wire through a
//! postselected Bell relay, so every original gate lands in the first few
//! layers and the compiled circuit has constant depth.
//!
//! Each relay spends two extra wires and succeeds with probability 1/4; the
//! relay block ends with X flips so that success is the all-ones reading on
//! the measured pair.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;

/// A wire is relayed onto a fresh one before hosting more gates once this
/// many layers are stacked on it. Original gates therefore sit in layers
/// 0..=3 and the relay tails reach at most layer 6.
const CUT_THRESHOLD: usize = 4;

/// Upper bound on the depth of any compiled circuit, regardless of the
/// input's depth.
pub const TELEPORT_DEPTH_BOUND: usize = 7;

/// A constant-depth compilation of a deeper circuit. Conditioned on every
/// wire in `postselect` reading 1 (probability `1/4` per relay, jointly
/// `4^-(postselect.len()/2)`), the wire `output` carries exactly the
/// original circuit's output state. The compiled circuit's output list is
/// `output` followed by `postselect`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeleportedCircuit {
    pub circuit: Circuit,
    pub output: usize,
    pub postselect: Vec<usize>,
}

impl TeleportedCircuit {
    /// Number of postselected wires (two per relay).
    pub fn num_postselect(&self) -> usize {
        self.postselect.len()
    }
}

/// Compiles `q` (which must designate a single output qubit) into an
/// equivalent postselected circuit of depth at most [`TELEPORT_DEPTH_BOUND`].
pub fn teleport_compile(q: &Circuit) -> Result<TeleportedCircuit> {
    q.validate()?;
    if q.outputs.len() != 1 {
        return Err(Error::RequiresSingleOutput {
            count: q.outputs.len(),
        });
    }

    // cur[lq] = physical wire currently holding logical wire lq;
    // avail[w] = first layer at which physical wire w is free.
    let mut cur: Vec<usize> = (0..q.num_qubits).collect();
    let mut avail: Vec<usize> = vec![0; q.num_qubits];
    let mut gates: Vec<Gate> = Vec::new();
    let mut postselect: Vec<usize> = Vec::new();

    let place = |gate: Gate, avail: &mut Vec<usize>, gates: &mut Vec<Gate>| {
        let layer = gate.qubits().into_iter().map(|w| avail[w]).max().unwrap();
        for w in gate.qubits() {
            avail[w] = layer + 1;
        }
        gates.push(gate);
    };

    for gate in &q.gates {
        for lq in gate.qubits() {
            let s = cur[lq];
            if avail[s] < CUT_THRESHOLD {
                continue;
            }
            // Relay the state of wire s onto fresh wire b via fresh wire a:
            // prepare a Bell pair on (a, b), rotate (s, a) into the Bell
            // basis, and flip both so the identity-correction branch is the
            // all-ones reading.
            let a = avail.len();
            let b = a + 1;
            avail.extend([0, 0]);
            for relay_gate in [
                Gate::H(a),
                Gate::Cnot {
                    control: a,
                    target: b,
                },
                Gate::Cnot {
                    control: s,
                    target: a,
                },
                Gate::H(s),
                Gate::X(s),
                Gate::X(a),
            ] {
                place(relay_gate, &mut avail, &mut gates);
            }
            postselect.extend([s, a]);
            cur[lq] = b;
        }
        place(gate.map_qubits(|lq| cur[lq]), &mut avail, &mut gates);
    }

    let output = cur[q.outputs[0]];
    let mut outputs = vec![output];
    outputs.extend(&postselect);
    let circuit = Circuit {
        num_qubits: avail.len(),
        gates,
        clean_qubit: None,
        outputs,
    };
    debug_assert!(circuit.depth() <= TELEPORT_DEPTH_BOUND);
    Ok(TeleportedCircuit {
        circuit,
        output,
        postselect,
    })
}
