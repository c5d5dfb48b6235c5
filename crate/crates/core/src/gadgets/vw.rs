//! The verification gadget: compiles a circuit to constant depth by wire
//! teleportation, folds the relay postselections into a single AND wire with
//! a balanced Toffoli tree, and combines that wire with the teleported
//! output into one fresh output qubit.
//!
//! Run from the all-zero state, the final qubit reads 0 with probability
//! exactly `p / 2^r`, where `p` is the source circuit's acceptance and `r`
//! the number of postselected relay wires. Because every non-output wire
//! starts at |0⟩ and the circuit is built from basis-permuting and phase
//! gates, inverting the gadget and running it with the output qubit clean
//! and the remaining `l` wires maximally mixed yields the all-zero outcome
//! with probability `p / 2^(l + r)`.

use crate::circuit::Circuit;
use crate::error::Result;
use crate::gadgets::teleport::teleport_compile;
use crate::gate::Gate;

/// Depth bound contribution that does not grow with the relay count: the
/// teleported circuit's own bound plus the final combining stage.
pub const VW_DEPTH_BASE: usize = 8;

/// Multiplier on the `⌈log2 r⌉` layers of the postselection AND tree.
pub const VW_DEPTH_LOG_COEFF: usize = 1;

/// Named wires of a built verification gadget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VwRoles {
    /// Wire carrying the teleported circuit's logical output.
    pub o: usize,
    /// Postselected relay wires (success is the all-ones reading).
    pub p: Vec<usize>,
    /// Wire holding the AND of all wires in `p` (constant 1 if `p` is empty).
    pub p_prime: usize,
    /// Final output: reads 0 exactly when `o` is 1 and `p_prime` is 1.
    pub o_prime: usize,
}

/// A built verification gadget. `circuit` marks `roles.o_prime` as the clean
/// qubit and sole output; `l` counts the remaining wires and `r` the
/// postselected relay wires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VwGadget {
    pub circuit: Circuit,
    pub l: usize,
    pub r: usize,
    pub roles: VwRoles,
}

/// Builds the verification gadget for `q` (which must designate a single
/// output qubit). The result has depth at most [`vw_depth_bound`]`(r)`.
pub fn build_vw(q: &Circuit) -> Result<VwGadget> {
    let teleported = teleport_compile(q)?;
    let mut gates = teleported.circuit.gates;
    let mut width = teleported.circuit.num_qubits;
    let p = teleported.postselect;
    let r = p.len();

    let p_prime = if p.is_empty() {
        // No relays: the AND over nothing is the constant 1.
        let wire = width;
        width += 1;
        gates.push(Gate::X(wire));
        wire
    } else {
        // Balanced AND tree: each level pairs wires into fresh Toffoli
        // targets (which start at 0, so the target becomes the pair's AND),
        // carrying any odd wire up a level.
        let mut level = p.clone();
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len().div_ceil(2));
            for pair in level.chunks(2) {
                if let [x, y] = *pair {
                    let wire = width;
                    width += 1;
                    gates.push(Gate::ccx(x, y, wire));
                    next.push(wire);
                } else {
                    next.push(pair[0]);
                }
            }
            level = next;
        }
        level[0]
    };

    let o_prime = width;
    width += 1;
    gates.push(Gate::X(o_prime));
    gates.push(Gate::ccx(teleported.output, p_prime, o_prime));

    let circuit = Circuit {
        num_qubits: width,
        gates,
        clean_qubit: Some(o_prime),
        outputs: vec![o_prime],
    };
    debug_assert!(circuit.depth() <= vw_depth_bound(r));
    Ok(VwGadget {
        l: width - 1,
        r,
        roles: VwRoles {
            o: teleported.output,
            p,
            p_prime,
            o_prime,
        },
        circuit,
    })
}

/// Depth bound for a gadget with `r` postselected relay wires:
/// `VW_DEPTH_BASE + VW_DEPTH_LOG_COEFF · ⌈log2 max(r, 2)⌉`.
pub fn vw_depth_bound(r: usize) -> usize {
    let leaves = r.max(2);
    let tree_levels = leaves.next_power_of_two().trailing_zeros() as usize;
    VW_DEPTH_BASE + VW_DEPTH_LOG_COEFF * tree_levels
}
