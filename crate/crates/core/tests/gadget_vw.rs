mod common;

use common::{assert_close, rng, TOL};
use dqc1::{
    acceptance_probability, apply_circuit, build_vw, dqc1m_distribution, random_htcnot_circuit,
    vw_depth_bound, Circuit, Dqc1Spec, Gate, StateVector, VwGadget, DEFAULT_ENSEMBLE_CAP,
    VW_DEPTH_BASE,
};
use rand::Rng;

/// Probability that the gadget's final qubit reads 0 when the whole register
/// starts in the all-zero state.
fn final_zero_probability(gadget: &VwGadget) -> f64 {
    let state = apply_circuit(
        &StateVector::zero_state(gadget.circuit.num_qubits).unwrap(),
        &gadget.circuit,
    )
    .unwrap();
    state.bit_probability(gadget.roles.o_prime, false)
}

#[test]
fn a_certain_source_drives_the_final_qubit_to_zero_with_certainty() {
    let q = Circuit::new(1, vec![Gate::X(0)]).with_outputs(vec![0]);
    let gadget = build_vw(&q).unwrap();
    assert_eq!(gadget.r, 0);
    assert_eq!(final_zero_probability(&gadget), 1.0);
}

#[test]
fn an_impossible_source_never_drives_the_final_qubit_to_zero() {
    let q = Circuit::new(1, vec![]).with_outputs(vec![0]);
    let gadget = build_vw(&q).unwrap();
    assert_eq!(final_zero_probability(&gadget), 0.0);
}

#[test]
fn a_fair_source_halves_through_the_final_stage() {
    let q = Circuit::new(1, vec![Gate::H(0)]).with_outputs(vec![0]);
    let gadget = build_vw(&q).unwrap();
    let expected = 0.5f64.powi(gadget.r as i32 + 1);
    assert_close(final_zero_probability(&gadget), expected, TOL);
}

#[test]
fn relay_free_gadgets_use_a_constant_true_and_wire() {
    let q = Circuit::new(1, vec![Gate::X(0)]).with_outputs(vec![0]);
    let gadget = build_vw(&q).unwrap();
    assert_eq!(
        gadget.circuit.gates,
        vec![
            Gate::X(0),
            Gate::X(1),
            Gate::X(2),
            Gate::ccx(0, 1, 2),
        ]
    );
    assert_eq!(gadget.roles.o, 0);
    assert_eq!(gadget.roles.p, Vec::<usize>::new());
    assert_eq!(gadget.roles.p_prime, 1);
    assert_eq!(gadget.roles.o_prime, 2);
    assert_eq!(gadget.l, 2);
    assert_eq!(gadget.circuit.clean_qubit, Some(2));
    assert_eq!(gadget.circuit.outputs, vec![2]);
}

#[test]
fn postselection_wires_fold_through_a_balanced_toffoli_tree() {
    // Ten stacked gates force three relays (six postselected wires), which
    // the tree folds pairwise: 6 -> 3 -> 2 -> 1.
    let q = Circuit::new(1, vec![Gate::H(0); 10]).with_outputs(vec![0]);
    let gadget = build_vw(&q).unwrap();
    assert_eq!(gadget.r, 6);
    let tree_targets = gadget
        .circuit
        .gates
        .iter()
        .filter(|g| matches!(g, Gate::Toffoli { .. }))
        .count();
    // Five pair folds plus the final combining stage.
    assert_eq!(tree_targets, 6);
    assert!(gadget.circuit.depth() <= vw_depth_bound(gadget.r));

    let p = acceptance_probability(&q).unwrap();
    let expected = p * 0.5f64.powi(gadget.r as i32);
    assert_close(final_zero_probability(&gadget), expected, TOL);
}

#[test]
fn random_sources_follow_the_scaled_acceptance_law() {
    let mut rand = rng(0x5ca1_ab1e);
    for _ in 0..15 {
        let n = rand.random_range(1..=3usize);
        let q = random_htcnot_circuit(n, 8, &mut rand);
        let gadget = build_vw(&q).unwrap();

        assert_eq!(gadget.roles.o_prime, gadget.circuit.num_qubits - 1);
        assert_eq!(gadget.l, gadget.circuit.num_qubits - 1);
        assert_eq!(gadget.r, gadget.roles.p.len());
        assert_eq!(gadget.circuit.clean_qubit, Some(gadget.roles.o_prime));
        assert_eq!(gadget.circuit.outputs, vec![gadget.roles.o_prime]);
        assert!(gadget.circuit.depth() <= vw_depth_bound(gadget.r));

        let p = acceptance_probability(&q).unwrap();
        let expected = p * 0.5f64.powi(gadget.r as i32);
        assert_close(final_zero_probability(&gadget), expected, TOL);
    }
}

#[test]
fn inverted_gadgets_report_the_source_acceptance_through_the_all_zero_outcome() {
    // Running the inverse with the final qubit clean and everything else
    // mixed concentrates the source acceptance (scaled by 2^-(l+r)) on the
    // all-zero outcome.
    let cases = vec![
        Circuit::new(1, vec![Gate::H(0)]).with_outputs(vec![0]),
        Circuit::new(2, vec![Gate::H(0), Gate::Cnot { control: 0, target: 1 }])
            .with_outputs(vec![1]),
        Circuit::new(1, vec![Gate::H(0); 5]).with_outputs(vec![0]),
    ];
    for q in cases {
        let gadget = build_vw(&q).unwrap();
        let width = gadget.circuit.num_qubits;
        assert!(gadget.l <= 10, "test case grew past the intended size");

        let spec = Dqc1Spec::new(
            gadget.circuit.invert(),
            gadget.roles.o_prime,
            (0..width).collect(),
        );
        let dist = dqc1m_distribution(&spec, DEFAULT_ENSEMBLE_CAP).unwrap();
        let p = acceptance_probability(&q).unwrap();
        let expected = p * 0.5f64.powi((gadget.l + gadget.r) as i32);
        assert_close(dist.prob(0), expected, TOL);
    }
}

#[test]
fn depth_bounds_grow_logarithmically_in_the_relay_count() {
    assert_eq!(vw_depth_bound(0), VW_DEPTH_BASE + 1);
    assert_eq!(vw_depth_bound(2), VW_DEPTH_BASE + 1);
    assert_eq!(vw_depth_bound(4), VW_DEPTH_BASE + 2);
    assert_eq!(vw_depth_bound(6), VW_DEPTH_BASE + 3);
    assert_eq!(vw_depth_bound(8), VW_DEPTH_BASE + 3);
    assert_eq!(vw_depth_bound(16), VW_DEPTH_BASE + 4);
}
