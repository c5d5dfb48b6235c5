//! Lowering of multi-controlled X gates onto the {H, CNOT, T, T†} set
//! (plus X for polarity conjugation), using only borrowed ancillas: helper
//! wires in arbitrary states that are returned to them exactly.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;

/// Borrowed ancillas required to lower a `k`-control Toffoli: none up to two
/// controls, `k - 2` for three or four (chained construction), two for five or
/// more (split construction).
pub fn ancillas_needed(k: usize) -> usize {
    match k {
        0..=2 => 0,
        3..=4 => k - 2,
        _ => 2,
    }
}

/// Lowers a `k`-control Toffoli with the given per-control polarity onto
/// {H, X, CNOT, T, T†}.
///
/// The returned circuit has controls on qubits `0..k`, target on qubit `k`,
/// and borrows the listed ancilla wires (which must avoid `0..=k` and each
/// other). For every computational-basis value of the ancillas, the circuit
/// acts as the multi-controlled X on controls/target and restores each
/// ancilla to its incoming value — no initialization is ever required.
pub fn decompose_generalized_toffoli(
    k: usize,
    polarity: &[bool],
    ancillas: &[usize],
) -> Result<Circuit> {
    if k == 0 {
        return Err(Error::EmptyControls { gate_index: 0 });
    }
    if polarity.len() != k {
        return Err(Error::PolarityLengthMismatch {
            gate_index: 0,
            controls: k,
            polarity: polarity.len(),
        });
    }
    let needed = ancillas_needed(k);
    if ancillas.len() < needed {
        return Err(Error::NotEnoughAncillas {
            controls: k,
            needed,
            got: ancillas.len(),
        });
    }
    let work = &ancillas[..needed];
    let mut seen = vec![false; k + 1];
    seen.resize(
        work.iter().copied().max().unwrap_or(0).max(k) + 1,
        false,
    );
    for q in (0..=k).chain(work.iter().copied()) {
        if seen[q] {
            return Err(Error::AncillaCollision { qubit: q });
        }
        seen[q] = true;
    }

    let controls: Vec<usize> = (0..k).collect();
    let mut gates = Vec::new();
    for (q, &p) in polarity.iter().enumerate() {
        if !p {
            gates.push(Gate::X(q));
        }
    }
    emit_mcx(&controls, k, work, &mut gates);
    for (q, &p) in polarity.iter().enumerate() {
        if !p {
            gates.push(Gate::X(q));
        }
    }

    let num_qubits = seen.len();
    Ok(Circuit::new(num_qubits, gates))
}

/// Emits an all-positive multi-controlled X over arbitrary wire indices,
/// borrowing from `work`.
fn emit_mcx(controls: &[usize], target: usize, work: &[usize], out: &mut Vec<Gate>) {
    match controls.len() {
        0 => out.push(Gate::X(target)),
        1 => out.push(Gate::Cnot {
            control: controls[0],
            target,
        }),
        2 => emit_toffoli(controls[0], controls[1], target, out),
        3 | 4 => emit_chain(controls, target, work, out),
        _ => emit_split(controls, target, work, out),
    }
}

/// 15-gate Toffoli network over {H, CNOT, T, T†}; equal to the
/// doubly-controlled X as a full matrix, global phase included.
fn emit_toffoli(a: usize, b: usize, t: usize, out: &mut Vec<Gate>) {
    out.extend([
        Gate::H(t),
        Gate::Cnot {
            control: b,
            target: t,
        },
        Gate::Tdg(t),
        Gate::Cnot {
            control: a,
            target: t,
        },
        Gate::T(t),
        Gate::Cnot {
            control: b,
            target: t,
        },
        Gate::Tdg(t),
        Gate::Cnot {
            control: a,
            target: t,
        },
        Gate::T(b),
        Gate::T(t),
        Gate::H(t),
        Gate::Cnot {
            control: a,
            target: b,
        },
        Gate::T(a),
        Gate::Tdg(b),
        Gate::Cnot {
            control: a,
            target: b,
        },
    ]);
}

/// Chained construction for three or four controls with `k - 2` borrowed
/// wires: a ladder of Toffolis swept down and up twice. Each work wire is
/// toggled an even number of times with identical control values, so it is
/// restored exactly; the target accumulates the full product of controls.
fn emit_chain(controls: &[usize], target: usize, work: &[usize], out: &mut Vec<Gate>) {
    let k = controls.len();
    let work = &work[..k - 2];
    // Ladder levels, top to bottom: level 0 computes onto the target, middle
    // levels onto work wires, the last level pairs the two lowest controls.
    let level = |j: usize| -> (usize, usize, usize) {
        if j == 0 {
            (controls[k - 1], work[k - 3], target)
        } else if j == k - 2 {
            (controls[0], controls[1], work[0])
        } else {
            (controls[k - 1 - j], work[k - 3 - j], work[k - 2 - j])
        }
    };
    let mut emit = |j: usize| {
        let (a, b, t) = level(j);
        emit_toffoli(a, b, t, out);
    };
    for j in 0..=k - 2 {
        emit(j);
    }
    for j in (0..=k - 3).rev() {
        emit(j);
    }
    for j in 1..=k - 2 {
        emit(j);
    }
    for j in (1..=k - 3).rev() {
        emit(j);
    }
}

/// Split construction for five or more controls with two borrowed wires:
/// `A` folds the first half of the controls onto one ancilla, `B` folds the
/// rest plus that ancilla onto the target; `A B A B` flips the target exactly
/// when all controls fire and restores both ancillas.
fn emit_split(controls: &[usize], target: usize, work: &[usize], out: &mut Vec<Gate>) {
    let k = controls.len();
    let m = k.div_ceil(2);
    let (first, rest) = controls.split_at(m);
    let (a1, a2) = (work[0], work[1]);

    // Work pools: each half may borrow the other half's controls plus the
    // second ancilla — all untouched by that half's own Toffolis.
    let mut pool_a: Vec<usize> = rest.to_vec();
    pool_a.push(a2);
    let mut b_controls: Vec<usize> = rest.to_vec();
    b_controls.push(a1);
    let mut pool_b: Vec<usize> = first.to_vec();
    pool_b.push(a2);

    for _ in 0..2 {
        emit_mcx(first, a1, &pool_a, out);
        emit_mcx(&b_controls, target, &pool_b, out);
    }
}
