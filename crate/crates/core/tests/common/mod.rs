//! Shared test helpers: an independent dense-matrix oracle assembled from
//! Kronecker products (a deliberately different code path from the library's
//! in-place statevector updates), plus comparison utilities.

#![allow(dead_code)]

use std::f64::consts::FRAC_PI_8;

use dqc1::{Circuit, Gate};
use ndarray::linalg::kron;
use ndarray::Array2;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-10;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn eye2() -> Array2<Complex64> {
    Array2::eye(2)
}

/// Projector |bit⟩⟨bit| on one qubit.
fn proj(bit: bool) -> Array2<Complex64> {
    let mut m = Array2::zeros((2, 2));
    m[(usize::from(bit), usize::from(bit))] = c(1.0, 0.0);
    m
}

fn x2() -> Array2<Complex64> {
    let mut m = Array2::zeros((2, 2));
    m[(0, 1)] = c(1.0, 0.0);
    m[(1, 0)] = c(1.0, 0.0);
    m
}

fn h2() -> Array2<Complex64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut m = Array2::zeros((2, 2));
    m[(0, 0)] = c(s, 0.0);
    m[(0, 1)] = c(s, 0.0);
    m[(1, 0)] = c(s, 0.0);
    m[(1, 1)] = c(-s, 0.0);
    m
}

fn diag2(top: Complex64, bottom: Complex64) -> Array2<Complex64> {
    let mut m = Array2::zeros((2, 2));
    m[(0, 0)] = top;
    m[(1, 1)] = bottom;
    m
}

fn step(k: i64) -> Complex64 {
    Complex64::from_polar(1.0, k as f64 * FRAC_PI_8)
}

/// Kronecker chain where `factors[j]` acts on qubit `j` (little-endian:
/// basis index bit `j` is qubit `j`, so higher qubits are the left factors).
fn chain(factors: Vec<Array2<Complex64>>) -> Array2<Complex64> {
    factors
        .into_iter()
        .fold(Array2::eye(1), |acc, f| kron(&f, &acc))
}

fn chain_with(n: usize, placed: &[(usize, Array2<Complex64>)]) -> Array2<Complex64> {
    let mut factors: Vec<Array2<Complex64>> = (0..n).map(|_| eye2()).collect();
    for (q, m) in placed {
        factors[*q] = m.clone();
    }
    chain(factors)
}

/// Dense matrix of one gate on an `n`-qubit register, assembled from
/// Kronecker products of projectors and single-qubit blocks.
pub fn oracle_gate_matrix(gate: &Gate, n: usize) -> Array2<Complex64> {
    match gate {
        Gate::H(q) => chain_with(n, &[(*q, h2())]),
        Gate::X(q) => chain_with(n, &[(*q, x2())]),
        Gate::Z(q) => chain_with(n, &[(*q, diag2(c(1.0, 0.0), c(-1.0, 0.0)))]),
        Gate::S(q) => chain_with(n, &[(*q, diag2(c(1.0, 0.0), c(0.0, 1.0)))]),
        Gate::Sdg(q) => chain_with(n, &[(*q, diag2(c(1.0, 0.0), c(0.0, -1.0)))]),
        Gate::T(q) => chain_with(n, &[(*q, diag2(c(1.0, 0.0), step(2)))]),
        Gate::Tdg(q) => chain_with(n, &[(*q, diag2(c(1.0, 0.0), step(-2)))]),
        Gate::Rz8 { k, qubit } => chain_with(
            n,
            &[(*qubit, diag2(step(i64::from(*k)), step(-i64::from(*k))))],
        ),
        Gate::Cnot { control, target } => {
            chain_with(n, &[(*control, proj(false))])
                + chain_with(n, &[(*control, proj(true)), (*target, x2())])
        }
        Gate::Cz(a, b) => {
            let flip = chain_with(n, &[(*a, proj(true)), (*b, proj(true))]);
            Array2::eye(1 << n) - flip.mapv(|v| v * 2.0)
        }
        Gate::Toffoli { controls, target } => {
            let mut sum = Array2::zeros((1 << n, 1 << n));
            for v in 0..4u8 {
                let (b0, b1) = (v & 1 == 1, v >> 1 & 1 == 1);
                let mut placed = vec![(controls[0], proj(b0)), (controls[1], proj(b1))];
                if b0 && b1 {
                    placed.push((*target, x2()));
                }
                sum += &chain_with(n, &placed);
            }
            sum
        }
        Gate::Ncx {
            controls,
            polarity,
            target,
        } => {
            let mut sum = Array2::zeros((1 << n, 1 << n));
            for v in 0..(1u32 << controls.len()) {
                let bits: Vec<bool> = (0..controls.len()).map(|i| v >> i & 1 == 1).collect();
                let mut placed: Vec<(usize, Array2<Complex64>)> = controls
                    .iter()
                    .zip(&bits)
                    .map(|(&q, &b)| (q, proj(b)))
                    .collect();
                if bits == *polarity {
                    placed.push((*target, x2()));
                }
                sum += &chain_with(n, &placed);
            }
            sum
        }
        Gate::Rzz8 { k, qubits: (a, b) } => {
            let mut sum = Array2::zeros((1 << n, 1 << n));
            for v in 0..4u8 {
                let (b0, b1) = (v & 1 == 1, v >> 1 & 1 == 1);
                let sign = if b0 == b1 { 1 } else { -1 };
                let term = chain_with(n, &[(*a, proj(b0)), (*b, proj(b1))]);
                sum += &term.mapv(|x| x * step(sign * i64::from(*k)));
            }
            sum
        }
        Gate::Ncp8 {
            qubits,
            polarity,
            k,
        } => {
            let placed: Vec<(usize, Array2<Complex64>)> = qubits
                .iter()
                .zip(polarity)
                .map(|(&q, &b)| (q, proj(b)))
                .collect();
            let matched = chain_with(n, &placed);
            Array2::eye(1 << n) + matched.mapv(|v| v * (step(i64::from(*k)) - c(1.0, 0.0)))
        }
    }
}

/// Expected dense matrix of "apply `gate` only when `ctrl` reads
/// `polarity`": the non-matching projector plus the matching projector
/// composed with the gate's own matrix.
pub fn oracle_controlled_matrix(
    gate: &Gate,
    n: usize,
    ctrl: usize,
    polarity: bool,
) -> Array2<Complex64> {
    let idle = chain_with(n, &[(ctrl, proj(!polarity))]);
    let fire = chain_with(n, &[(ctrl, proj(polarity))]).dot(&oracle_gate_matrix(gate, n));
    idle + fire
}

/// Dense unitary of a whole circuit: the ordered product of its gate
/// matrices.
pub fn oracle_unitary(circuit: &Circuit) -> Array2<Complex64> {
    let mut u = Array2::eye(1 << circuit.num_qubits);
    for gate in &circuit.gates {
        u = oracle_gate_matrix(gate, circuit.num_qubits).dot(&u);
    }
    u
}

/// Exact one-clean-qubit outcome distribution computed from the dense
/// unitary's columns: the mixed wires are averaged over their basis values.
/// Entry `i` of an outcome index is the reading of `outputs[i]`.
pub fn oracle_dqc1_distribution(circuit: &Circuit, clean: usize, outputs: &[usize]) -> Vec<f64> {
    let n = circuit.num_qubits;
    let u = oracle_unitary(circuit);
    let mixed: Vec<usize> = (0..n).filter(|&q| q != clean).collect();
    let mut probs = vec![0.0; 1 << outputs.len()];
    for setting in 0..(1usize << mixed.len()) {
        let mut col = 0usize;
        for (bit, &wire) in mixed.iter().enumerate() {
            if setting >> bit & 1 == 1 {
                col |= 1 << wire;
            }
        }
        for z in 0..(1usize << n) {
            let mut outcome = 0usize;
            for (i, &q) in outputs.iter().enumerate() {
                if z >> q & 1 == 1 {
                    outcome |= 1 << i;
                }
            }
            probs[outcome] += u[(z, col)].norm_sqr();
        }
    }
    let scale = 0.5f64.powi(mixed.len() as i32);
    for p in &mut probs {
        *p *= scale;
    }
    probs
}

/// Exact one-clean-qubit acceptance (designated output reads 1) from the
/// dense oracle.
pub fn oracle_dqc1_acceptance(circuit: &Circuit, clean: usize, output: usize) -> f64 {
    oracle_dqc1_distribution(circuit, clean, &[output])[1]
}

pub fn max_abs_entry_diff(a: &Array2<Complex64>, b: &Array2<Complex64>) -> f64 {
    assert_eq!(a.dim(), b.dim(), "matrix dimensions differ");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn assert_matrix_close(a: &Array2<Complex64>, b: &Array2<Complex64>, tol: f64) {
    let diff = max_abs_entry_diff(a, b);
    assert!(diff <= tol, "matrices differ by {diff:.3e} > {tol:.1e}");
}

/// Asserts `a` equals `b` after aligning `b`'s global phase to `a`'s,
/// anchored at `a`'s largest entry.
pub fn assert_matrix_close_up_to_phase(a: &Array2<Complex64>, b: &Array2<Complex64>, tol: f64) {
    assert_eq!(a.dim(), b.dim(), "matrix dimensions differ");
    let anchor = a
        .indexed_iter()
        .max_by(|(_, x), (_, y)| x.norm().total_cmp(&y.norm()))
        .map(|(idx, _)| idx)
        .expect("nonempty matrix");
    assert!(a[anchor].norm() > 1e-12, "anchor entry is numerically zero");
    let phase = b[anchor] / a[anchor];
    assert!(
        (phase.norm() - 1.0).abs() <= 1e-6,
        "anchor magnitudes differ: |phase| = {}",
        phase.norm()
    );
    let phase = phase / phase.norm();
    let rotated = a.mapv(|v| v * phase);
    assert_matrix_close(&rotated, b, tol);
}

pub fn assert_close(x: f64, y: f64, tol: f64) {
    assert!(
        (x - y).abs() <= tol,
        "values differ: {x} vs {y} (|Δ| = {:.3e} > {tol:.1e})",
        (x - y).abs()
    );
}

/// Random diagonal-phase instance on `l + 1` qubits: each vertex gets a
/// random phase step, each pair is a plain parity edge with probability 0.4,
/// and (when `with_zz` is set) a phased parity coupling with probability 0.3.
pub fn random_iqp_spec(l: usize, with_zz: bool, rng: &mut impl rand::Rng) -> dqc1::IqpSpec {
    let mut spec = dqc1::IqpSpec::new(l);
    for step in spec.theta.iter_mut() {
        *step = rng.random_range(0..16u8);
    }
    for a in 0..=l {
        for b in (a + 1)..=l {
            if rng.random_bool(0.4) {
                spec.edges.insert((a, b));
            }
            if with_zz && rng.random_bool(0.3) {
                spec.edge_theta.insert((a, b), rng.random_range(1..16u8));
            }
        }
    }
    spec
}
