//! The clean-qubit relay gadget: wraps an n-qubit circuit Q into an
//! (n+1)-qubit circuit whose one-clean-qubit acceptance is a fixed function
//! of Q's pure-state acceptance probability p, namely (4/2^n)·p·(1-p).
//!
//! Structure: a zero-polarity multi-controlled X from the mixed register
//! onto the clean qubit, a controlled Q, a CZ between the clean qubit and
//! Q's output, a controlled Q†, and the same multi-controlled X again.

use crate::circuit::Circuit;
use crate::decompose::{ancillas_needed, decompose_generalized_toffoli};
use crate::error::{Error, Result};
use crate::gate::Gate;

/// The relay circuit for a source circuit of `source_n` qubits. The wrapped
/// circuit acts on qubit 0 (clean, also the output) plus the shifted source
/// wires 1..=source_n; the decomposed variant appends further mixed wires as
/// borrowed ancillas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DwGadget {
    pub circuit: Circuit,
    pub source_n: usize,
}

/// Builds the relay gadget with the multi-controlled X applied natively.
///
/// `out` is the designated output qubit of `q`. Callers wanting the
/// acceptance map to stay invertible should keep p < 1; the builder itself
/// does not enforce that.
pub fn build_dw(q: &Circuit, out: usize) -> Result<DwGadget> {
    build(q, out, false)
}

/// Builds the relay gadget with both multi-controlled X layers lowered onto
/// {H, X, CNOT, T, T†}. The borrowed ancillas are appended as extra mixed
/// wires; since the lowering restores them exactly for every basis value,
/// the acceptance law is unchanged.
pub fn build_dw_decomposed(q: &Circuit, out: usize) -> Result<DwGadget> {
    build(q, out, true)
}

fn build(q: &Circuit, out: usize, decompose: bool) -> Result<DwGadget> {
    q.validate()?;
    let n = q.num_qubits;
    if out >= n {
        return Err(Error::SpecialQubitOutOfRange {
            role: "output",
            qubit: out,
            num_qubits: n,
        });
    }

    let shifted = q.shifted(1);
    let controlled = shifted.controlled_on(0, true)?;
    let controlled_inverse = shifted.invert().controlled_on(0, true)?;

    let relay_layer: Vec<Gate> = if decompose {
        lowered_relay_layer(n)?
    } else {
        vec![Gate::Ncx {
            controls: (1..=n).collect(),
            polarity: vec![false; n],
            target: 0,
        }]
    };

    let mut gates = relay_layer.clone();
    gates.extend(controlled.gates);
    gates.push(Gate::Cz(0, 1 + out));
    gates.extend(controlled_inverse.gates);
    gates.extend(relay_layer);

    let num_qubits = 1 + n + if decompose { ancillas_needed(n) } else { 0 };
    let circuit = Circuit {
        num_qubits,
        gates,
        clean_qubit: Some(0),
        outputs: vec![0],
    };
    Ok(DwGadget {
        circuit,
        source_n: n,
    })
}

/// The zero-polarity multi-controlled X (mixed register onto qubit 0),
/// lowered onto {H, X, CNOT, T, T†} with borrowed ancillas on the wires just
/// past the source register.
fn lowered_relay_layer(n: usize) -> Result<Vec<Gate>> {
    let ancillas: Vec<usize> = (n + 1..n + 1 + ancillas_needed(n)).collect();
    let canonical = decompose_generalized_toffoli(n, &vec![false; n], &ancillas)?;
    // Canonical layout: controls 0..n-1, target n. Here: controls 1..=n,
    // target 0, ancillas unchanged.
    Ok(canonical
        .gates
        .iter()
        .map(|g| g.map_qubits(|q| if q < n { q + 1 } else if q == n { 0 } else { q }))
        .collect())
}

/// The predicted one-clean-qubit acceptance of the relay gadget built from a
/// source circuit with `source_n` qubits and pure acceptance `p`:
/// `(4 / 2^source_n) · p · (1 - p)`.
pub fn dw_predicted_acceptance(p: f64, source_n: usize) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange { value: p });
    }
    assert!(source_n >= 1, "source circuit must have at least one qubit");
    Ok(4.0 * p * (1.0 - p) * 0.5f64.powi(source_n as i32))
}
