//! Seeded random-circuit generators for demos and property sweeps.

use rand::Rng;

use crate::circuit::Circuit;
use crate::gate::Gate;

/// A random circuit over the {H, T, CNOT} universal set with a uniformly
/// chosen gate count in `1..=max_gates` and a random designated output.
/// Single-qubit circuits draw from {H, T}.
pub fn random_htcnot_circuit(n: usize, max_gates: usize, rng: &mut impl Rng) -> Circuit {
    assert!(n >= 1 && max_gates >= 1);
    let count = rng.random_range(1..=max_gates);
    let gates = (0..count).map(|_| random_htcnot_gate(n, rng)).collect();
    let out = rng.random_range(0..n);
    Circuit::new(n, gates).with_outputs(vec![out])
}

fn random_htcnot_gate(n: usize, rng: &mut impl Rng) -> Gate {
    let kinds = if n == 1 { 2 } else { 3 };
    match rng.random_range(0..kinds) {
        0 => Gate::H(rng.random_range(0..n)),
        1 => Gate::T(rng.random_range(0..n)),
        _ => {
            let control = rng.random_range(0..n);
            let target = random_other(n, control, rng);
            Gate::Cnot { control, target }
        }
    }
}

/// A random {H, T, CNOT} circuit whose greedy-layered depth stays at most
/// `max_depth`: candidate gates that would start a deeper layer are skipped.
/// All qubits are designated as outputs.
pub fn random_shallow_circuit(
    n: usize,
    max_depth: usize,
    max_gates: usize,
    rng: &mut impl Rng,
) -> Circuit {
    assert!(n >= 1);
    let mut gates: Vec<Gate> = Vec::new();
    let mut wire_free = vec![0usize; n];
    let mut placed = 0;
    for _ in 0..max_gates * 8 {
        if placed == max_gates {
            break;
        }
        let gate = random_htcnot_gate(n, rng);
        let layer = gate
            .qubits()
            .iter()
            .map(|&q| wire_free[q])
            .max()
            .unwrap_or(0);
        if layer >= max_depth {
            continue;
        }
        for q in gate.qubits() {
            wire_free[q] = layer + 1;
        }
        gates.push(gate);
        placed += 1;
    }
    Circuit::new(n, gates)
        .with_clean(0)
        .with_outputs((0..n).collect())
}

/// A random circuit drawing from every gate kind (including multi-controlled
/// and phase-lattice gates), for structural round-trip tests.
pub fn random_mixed_circuit(n: usize, num_gates: usize, rng: &mut impl Rng) -> Circuit {
    assert!(n >= 1);
    let gates = (0..num_gates).map(|_| random_mixed_gate(n, rng)).collect();
    let out = rng.random_range(0..n);
    Circuit::new(n, gates).with_outputs(vec![out])
}

fn random_mixed_gate(n: usize, rng: &mut impl Rng) -> Gate {
    loop {
        let q = rng.random_range(0..n);
        match rng.random_range(0..12u32) {
            0 => return Gate::H(q),
            1 => return Gate::X(q),
            2 => return Gate::Z(q),
            3 => return Gate::S(q),
            4 => return Gate::T(q),
            5 => return Gate::rz8(rng.random_range(0..16), q),
            6 if n >= 2 => {
                return Gate::Cnot {
                    control: q,
                    target: random_other(n, q, rng),
                }
            }
            7 if n >= 2 => return Gate::Cz(q, random_other(n, q, rng)),
            8 if n >= 2 => {
                return Gate::rzz8(rng.random_range(0..16), q, random_other(n, q, rng))
            }
            9 if n >= 3 => {
                let qs = sample_distinct(n, 3, rng);
                return Gate::ccx(qs[0], qs[1], qs[2]);
            }
            10 if n >= 2 => {
                let size = rng.random_range(2..=n.min(4));
                let qs = sample_distinct(n, size, rng);
                let polarity = (1..size).map(|_| rng.random_bool(0.5)).collect();
                return Gate::Ncx {
                    controls: qs[1..].to_vec(),
                    polarity,
                    target: qs[0],
                };
            }
            11 => {
                let size = rng.random_range(1..=n.min(3));
                let qs = sample_distinct(n, size, rng);
                let polarity = (0..size).map(|_| rng.random_bool(0.5)).collect();
                return Gate::ncp8(qs, polarity, rng.random_range(0..16));
            }
            _ => continue,
        }
    }
}

fn random_other(n: usize, avoid: usize, rng: &mut impl Rng) -> usize {
    loop {
        let q = rng.random_range(0..n);
        if q != avoid {
            return q;
        }
    }
}

fn sample_distinct(n: usize, count: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut picked = Vec::with_capacity(count);
    while picked.len() < count {
        let q = rng.random_range(0..n);
        if !picked.contains(&q) {
            picked.push(q);
        }
    }
    picked
}
