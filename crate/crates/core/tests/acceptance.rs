//! End-to-end acceptance checks. Each test exercises one published guarantee
//! at its stated size and tolerance and prints a single pass/fail line.

mod common;

use common::{random_iqp_spec, rng};
use dqc1::{
    acceptance_probability, ancillas_needed, apply_circuit, build_dw, build_iqp_dqc1, build_vw,
    check_additive, check_multiplicative, decompose_generalized_toffoli, dqc1_acceptance,
    dqc1m_distribution, dw_predicted_acceptance, iqp_clean_probability, output_distribution,
    random_htcnot_circuit, random_shallow_circuit, strongsim_constdepth_marginal_distribution,
    strongsim_constdepth_point, strongsim_iqp, teleport_compile, vw_depth_bound, Circuit,
    Dqc1Spec, Error, Gate, OutcomeDistribution, StateVector, DEFAULT_CONE_CAP,
    DEFAULT_ENSEMBLE_CAP, TELEPORT_DEPTH_BOUND,
};
use rand::Rng;

const LAW_TOL: f64 = 1e-10;

fn report(index: usize, label: &str, ok: bool) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("acceptance {index}/8 ({label}): {verdict}");
    assert!(ok, "acceptance {index}/8 ({label}): {verdict}");
}

fn gadget_acceptance(circuit: Circuit) -> f64 {
    dqc1_acceptance(&Dqc1Spec::from_circuit(circuit), DEFAULT_ENSEMBLE_CAP).unwrap()
}

fn bits(index: usize, len: usize) -> Vec<bool> {
    (0..len).map(|j| index >> j & 1 == 1).collect()
}

/// Criterion-1 ensemble: 500 seeded {H, T, CNOT} circuits of up to 40 gates
/// for each source width, yielding (width, source, pure acceptance).
fn relay_law_ensemble(n: usize) -> impl Iterator<Item = (Circuit, f64)> {
    let mut r = rng(0xacc0_0000 + n as u64);
    (0..500).map(move |_| {
        let q = random_htcnot_circuit(n, 40, &mut r);
        // Long gate chains can overshoot 1.0 by a few ulps; the value is a
        // probability, so pin it back into range before feeding the law.
        let p = acceptance_probability(&q).unwrap().clamp(0.0, 1.0);
        (q, p)
    })
}

#[test]
fn acceptance_01_relay_acceptance_law() {
    let mut worst: f64 = 0.0;
    for n in 1..=6usize {
        for (q, p) in relay_law_ensemble(n) {
            let gadget = build_dw(&q, q.outputs[0]).unwrap();
            let simulated = gadget_acceptance(gadget.circuit);
            let predicted = dw_predicted_acceptance(p, n).unwrap();
            worst = worst.max((simulated - predicted).abs());
        }
    }
    report(1, "relay acceptance law", worst <= LAW_TOL);
}

#[test]
fn acceptance_02_exact_zeros_at_deterministic_sources() {
    let mut ok = true;
    for n in 1..=6usize {
        let never = build_dw(&Circuit::new(n, vec![]), 0).unwrap();
        ok &= gadget_acceptance(never.circuit) == 0.0;

        let always = build_dw(&Circuit::new(n, vec![Gate::X(0)]), 0).unwrap();
        ok &= gadget_acceptance(always.circuit) == 0.0;
    }

    // Any source strictly between the roots must keep a positive acceptance.
    let intermediate = vec![
        Circuit::new(1, vec![Gate::H(0)]),
        Circuit::new(1, vec![Gate::H(0), Gate::T(0), Gate::H(0)]),
        Circuit::new(
            3,
            vec![
                Gate::H(1),
                Gate::Cnot {
                    control: 1,
                    target: 0,
                },
                Gate::T(0),
                Gate::H(0),
            ],
        ),
    ];
    for q in intermediate {
        let p = acceptance_probability(&q).unwrap();
        assert!(0.0 < p && p < 1.0, "intermediate case drifted to a root");
        let gadget = build_dw(&q, 0).unwrap();
        ok &= gadget_acceptance(gadget.circuit) > 0.0;
    }
    report(2, "exact zeros at deterministic sources", ok);
}

#[test]
fn acceptance_03_two_sided_gap_below_half() {
    let mut ok = true;
    let mut checked = 0usize;
    for n in 1..=6usize {
        let scale = 0.5f64.powi(n as i32);
        for (q, p) in relay_law_ensemble(n) {
            if p > 0.5 {
                continue;
            }
            let gadget = build_dw(&q, q.outputs[0]).unwrap();
            let simulated = gadget_acceptance(gadget.circuit);
            ok &= simulated >= 2.0 * scale * p - LAW_TOL;
            ok &= simulated <= 4.0 * scale * p + LAW_TOL;
            checked += 1;
        }
    }
    assert!(checked > 0, "no sources below half were generated");
    report(3, "two-sided acceptance gap below half", ok);
}

#[test]
fn acceptance_04_control_lowering_onto_the_plain_gate_set() {
    let mut ok = true;
    for k in 1..=5usize {
        let ancillas: Vec<usize> = (k + 1..=k + ancillas_needed(k)).collect();
        let polarities: Vec<Vec<bool>> = vec![
            vec![true; k],
            (0..k).map(|i| i % 2 == 0).collect(),
        ];
        for polarity in polarities {
            let lowered = decompose_generalized_toffoli(k, &polarity, &ancillas).unwrap();
            ok &= lowered.gates.iter().all(|g| {
                matches!(
                    g,
                    Gate::H(_) | Gate::X(_) | Gate::Cnot { .. } | Gate::T(_) | Gate::Tdg(_)
                )
            });

            let w = lowered.num_qubits;
            assert!(w <= k + 3, "exhaustive sweep grew too wide");
            for x in 0..(1u64 << w) {
                let state = apply_circuit(&StateVector::basis_state(w, x).unwrap(), &lowered)
                    .unwrap();
                let fires = (0..k).all(|i| (x >> i & 1 == 1) == polarity[i]);
                let expected = x ^ (u64::from(fires) << k);
                let prob = state.amplitudes()[expected as usize].norm_sqr();
                ok &= (prob - 1.0).abs() <= LAW_TOL;
            }
        }
    }
    report(4, "control lowering onto the plain gate set", ok);
}

#[test]
fn acceptance_05_constant_depth_compilation_laws() {
    let mut ok = true;
    let mut r = rng(0x7e1e_0005);
    for _ in 0..50 {
        let n = r.random_range(1..=3usize);
        let q = random_htcnot_circuit(n, 6, &mut r);
        let p = acceptance_probability(&q).unwrap();

        // Teleported form: bounded depth, exact relay success probability,
        // and the source acceptance conditioned on success.
        let tc = teleport_compile(&q).unwrap();
        ok &= tc.circuit.depth() <= TELEPORT_DEPTH_BOUND;
        let state = apply_circuit(
            &StateVector::zero_state(tc.circuit.num_qubits).unwrap(),
            &tc.circuit,
        )
        .unwrap();
        let dist = output_distribution(&state, &tc.circuit.outputs).unwrap();
        let ones = ((1usize << tc.num_postselect()) - 1) << 1;
        let success = dist.prob(ones) + dist.prob(1 | ones);
        ok &= (success - 0.5f64.powi(tc.num_postselect() as i32)).abs() <= 1e-12;
        ok &= (dist.prob(1 | ones) / success - p).abs() <= LAW_TOL;

        // Verification gadget: bounded depth and the scaled acceptance law.
        let vw = build_vw(&q).unwrap();
        ok &= vw.circuit.depth() <= vw_depth_bound(vw.r);
        let state = apply_circuit(
            &StateVector::zero_state(vw.circuit.num_qubits).unwrap(),
            &vw.circuit,
        )
        .unwrap();
        let zero = state.bit_probability(vw.roles.o_prime, false);
        ok &= (zero - p * 0.5f64.powi(vw.r as i32)).abs() <= LAW_TOL;

        // Inverted gadget under the one-clean-qubit input, where the mixed
        // register stays small enough to average exhaustively.
        if vw.l <= 10 {
            let spec = Dqc1Spec::new(
                vw.circuit.invert(),
                vw.roles.o_prime,
                (0..vw.circuit.num_qubits).collect(),
            );
            let dist = dqc1m_distribution(&spec, DEFAULT_ENSEMBLE_CAP).unwrap();
            let expected = p * 0.5f64.powi((vw.l + vw.r) as i32);
            ok &= (dist.prob(0) - expected).abs() <= LAW_TOL;
        }
    }
    report(5, "constant-depth compilation laws", ok);
}

#[test]
fn acceptance_06_shallow_circuit_strong_simulation() {
    let mut ok = true;
    let mut r = rng(0xc0de_0006);
    for _ in 0..200 {
        let n = r.random_range(2..=10usize);
        let circuit = random_shallow_circuit(n, 3, 2 * n, &mut r);
        let spec = Dqc1Spec::from_circuit(circuit);
        let joint = dqc1m_distribution(&spec, DEFAULT_ENSEMBLE_CAP).unwrap();

        for index in 0..(1usize << n) {
            let fast =
                strongsim_constdepth_point(&spec, &bits(index, n), DEFAULT_CONE_CAP).unwrap();
            ok &= (fast - joint.prob(index)).abs() <= LAW_TOL;
        }

        for _ in 0..10 {
            let size = r.random_range(1..=n.min(3));
            let mut subset: Vec<usize> = (0..n).collect();
            for i in 0..size {
                let j = r.random_range(i..n);
                subset.swap(i, j);
            }
            subset.truncate(size);
            let fast = strongsim_constdepth_marginal_distribution(&spec, &subset, DEFAULT_CONE_CAP)
                .unwrap();
            let reference = joint.marginal(&subset);
            ok &= fast.max_abs_difference(&reference).unwrap() <= LAW_TOL;
        }
    }

    // A deep entangling ladder must be refused through the cone cap rather
    // than simulated.
    let n = DEFAULT_CONE_CAP + 2;
    let ladder = Circuit::new(
        n,
        (0..n - 1)
            .map(|i| Gate::Cnot {
                control: i,
                target: i + 1,
            })
            .collect(),
    );
    let spec = Dqc1Spec::new(ladder, 0, (0..n).collect());
    ok &= matches!(
        strongsim_constdepth_point(&spec, &vec![false; n], DEFAULT_CONE_CAP),
        Err(Error::ConeTooLarge { .. })
    );
    report(6, "shallow-circuit strong simulation", ok);
}

#[test]
fn acceptance_07_diagonal_instance_strong_simulation() {
    let mut ok = true;
    let mut r = rng(0xd1a6_0007);
    for round in 0..200usize {
        let l = r.random_range(1..=8usize);
        let mut spec = random_iqp_spec(l, round % 2 == 1, &mut r);
        if round % 3 == 0 {
            // Guarantee an unphased parity edge at the clean vertex.
            let partner = r.random_range(1..=l);
            spec.edges.insert((0, partner));
            spec.edge_theta.remove(&(0, partner));
        }

        let circuit = build_iqp_dqc1(&spec).unwrap();
        let reference =
            dqc1m_distribution(&Dqc1Spec::from_circuit(circuit), DEFAULT_ENSEMBLE_CAP).unwrap();

        let m = spec.outputs.len();
        let p_even = strongsim_iqp(&spec, &bits(0, m)).unwrap();
        let p_odd = strongsim_iqp(&spec, &bits(1, m)).unwrap();
        for index in 0..(1usize << m) {
            let fast = strongsim_iqp(&spec, &bits(index, m)).unwrap();
            ok &= (fast - reference.prob(index)).abs() <= LAW_TOL;
            // Outcomes sharing the clean bit carry bitwise-identical mass.
            ok &= fast == if index & 1 == 0 { p_even } else { p_odd };
        }

        let has_unphased_clean_edge = spec
            .edges
            .iter()
            .any(|&(a, b)| a == 0 && !spec.edge_theta.contains_key(&(a, b)));
        if has_unphased_clean_edge {
            ok &= iqp_clean_probability(&spec, false).unwrap() == 0.5;
            ok &= iqp_clean_probability(&spec, true).unwrap() == 0.5;
        }
    }
    report(7, "diagonal-instance strong simulation", ok);
}

#[test]
fn acceptance_08_weak_simulation_comparators() {
    let dist = |probs: Vec<f64>| {
        let bitlen = probs.len().trailing_zeros() as usize;
        OutcomeDistribution {
            output_qubits: (0..bitlen).collect(),
            probs,
        }
    };
    let mut ok = true;

    // Multiplicative: identical distributions meet the tightest bound; a
    // factor-two bound separates a nearby coin from a distant one.
    let half = dist(vec![0.5, 0.5]);
    ok &= check_multiplicative(&half, &half, 1.0).unwrap();
    ok &= check_multiplicative(&half, &dist(vec![0.7, 0.3]), 2.0).unwrap();
    ok &= !check_multiplicative(&half, &dist(vec![0.8, 0.2]), 2.0).unwrap();

    // Exact zeros must coincide under any multiplicative bound.
    let point = dist(vec![1.0, 0.0]);
    let leaky = dist(vec![1.0 - 1e-30, 1e-30]);
    ok &= !check_multiplicative(&point, &leaky, 1e15).unwrap();
    ok &= !check_multiplicative(&leaky, &point, 1e15).unwrap();
    ok &= check_multiplicative(&point, &point, 1.0).unwrap();

    // Additive: zero budget for identical distributions, and a deviation
    // exactly at the budget passes.
    ok &= check_additive(&half, &half, 0.0).unwrap();
    ok &= !check_additive(&half, &point, 0.4).unwrap();
    ok &= check_additive(&half, &point, 0.5).unwrap();
    ok &= check_additive(&dist(vec![0.75, 0.25]), &half, 0.25).unwrap();
    ok &= !check_additive(&dist(vec![0.75, 0.25]), &half, 0.2499).unwrap();

    // Four-outcome sanity: uniform against a point mass.
    let uniform4 = dist(vec![0.25; 4]);
    let point4 = dist(vec![1.0, 0.0, 0.0, 0.0]);
    ok &= check_additive(&uniform4, &point4, 0.75).unwrap();
    ok &= !check_additive(&uniform4, &point4, 0.74).unwrap();
    ok &= !check_multiplicative(&uniform4, &point4, 100.0).unwrap();

    report(8, "weak-simulation comparators", ok);
}
