//! Branch-exhaustive validation of the teleportation protocol on ideal
//! resource states: for every graph family, every path, and every one of the
//! 2^(N-1) measurement branches, the corrected output must equal the input.

mod common;

use redstring::graph::{build_chain, build_diamond, build_hourglass, GraphSpec};
use redstring::rng;
use redstring::sim::{enumerate_branches, protocol_plan};
use redstring::teleport::{
    byproduct_for_path, fidelity_exact, prepare_pure, run_teleport, InputState,
};

fn assert_branch_exact(g: &GraphSpec, path: &str, input: InputState) {
    let target = input.amplitudes();
    let byproduct = byproduct_for_path(g, path).unwrap();
    let state = prepare_pure(g, &[], Some(input)).unwrap();
    let plan = protocol_plan(g);
    let out_q = g.qubit(g.output_id()).unwrap();
    let branches = enumerate_branches(&state, &plan).unwrap();
    assert_eq!(branches.len(), 1 << plan.len());
    let mut total_p = 0.0;
    for b in &branches {
        total_p += b.record.probability;
        if b.record.probability <= 1e-14 {
            continue;
        }
        let corrected = byproduct.correct(&b.record, b.state.qubit_state(out_q).unwrap());
        let ov = target[0].conj() * corrected[0] + target[1].conj() * corrected[1];
        let defect = 1.0 - ov.norm_sqr();
        assert!(
            defect < 1e-10,
            "{} path {path} branch {:?}: defect {defect}",
            g.name,
            b.record.outcomes
        );
    }
    assert!((total_p - 1.0).abs() < 1e-10, "probabilities sum to {total_p}");
}

#[test]
fn chains_teleport_branch_exactly() {
    let mut rng = rng::root(11);
    for n in 3..=8 {
        let g = build_chain(n).unwrap();
        assert_branch_exact(&g, "1", InputState::ZERO);
        assert_branch_exact(&g, "1", InputState::random_bloch(&mut rng));
    }
}

#[test]
fn diamond_teleports_branch_exactly_on_both_paths() {
    let g = build_diamond();
    let mut rng = rng::root(12);
    for path in ["green", "blue"] {
        assert_branch_exact(&g, path, InputState::PLUS);
        assert_branch_exact(&g, path, InputState::random_bloch(&mut rng));
    }
}

#[test]
fn hourglass_teleports_branch_exactly_on_every_path() {
    let mut rng = rng::root(13);
    for n in 1..=3 {
        let g = build_hourglass(n, 2).unwrap();
        let input = InputState::random_bloch(&mut rng);
        for p in g.paths.clone() {
            assert_branch_exact(&g, &p.id, input);
        }
    }
}

#[test]
fn three_row_hourglass_teleports_branch_exactly() {
    let mut rng = rng::root(14);
    for n in 1..=2 {
        let g = build_hourglass(n, 3).unwrap();
        let input = InputState::random_bloch(&mut rng);
        for p in g.paths.clone() {
            assert_branch_exact(&g, &p.id, input);
        }
    }
}

#[test]
fn ideal_fidelity_is_one_for_any_graph_path_input() {
    let mut rng = rng::root(15);
    for g in [
        build_chain(5).unwrap(),
        build_diamond(),
        build_hourglass(2, 2).unwrap(),
    ] {
        for p in g.paths.clone() {
            let f = fidelity_exact(&g, &[], InputState::random_bloch(&mut rng), &p.id).unwrap();
            assert!((f - 1.0).abs() < 1e-10, "{} path {}: F = {f}", g.name, p.id);
        }
    }
}

#[test]
fn sampled_run_matches_exact_on_ideal_diamond() {
    let g = build_diamond();
    let input = InputState { polar: 0.7, azimuth: 1.1 };
    let run = run_teleport(&g, &[], input, "green", 400, 7).unwrap();
    // every branch teleports perfectly, so the sampled estimate is exactly 1
    assert_eq!(run.fidelity, 1.0);
    assert_eq!(run.shots, 400);
}

#[test]
fn sampling_is_seed_reproducible() {
    let g = build_diamond();
    let errors = [redstring::noise::ErrorSpec::ZzCrosstalk(3, 4, 0.4)];
    let input = InputState { polar: 1.0, azimuth: 0.3 };
    let a = run_teleport(&g, &errors, input, "green", 600, 42).unwrap();
    let b = run_teleport(&g, &errors, input, "green", 600, 42).unwrap();
    assert_eq!(a.fidelity, b.fidelity);
    let bits_a: Vec<u8> = a.results.iter().map(|r| r.output_bit).collect();
    let bits_b: Vec<u8> = b.results.iter().map(|r| r.output_bit).collect();
    assert_eq!(bits_a, bits_b);
}
