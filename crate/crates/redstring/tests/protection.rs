//! The central protection claims: errors commuting with a path's symmetry
//! pair leave that path's teleportation fidelity at exactly one, and the
//! subgroup filter identifies which paths survive which errors.

use redstring::graph::{build_chain, build_diamond, build_hourglass, hourglass_bulk_id};
use redstring::noise::{ErrorAxis, ErrorSpec};
use redstring::pauli::{surviving_subgroup, SymKind};
use redstring::rng;
use redstring::teleport::{fidelity_exact, InputState};

fn generators(g: &redstring::graph::GraphSpec, errors: &[ErrorSpec]) -> Vec<redstring::pauli::PauliString> {
    errors
        .iter()
        .filter_map(|e| e.generator_string(g).unwrap())
        .collect()
}

#[test]
fn diamond_surviving_subgroups_by_link() {
    let g = build_diamond();
    let group = g.symmetry_group().unwrap();
    // links whose crosstalk preserves the pair of path 1 = {s135, s246}
    for link in [(2, 4), (3, 5)] {
        let err = [ErrorSpec::ZzCrosstalk(link.0, link.1, 0.3)];
        let surv = surviving_subgroup(&group, &generators(&g, &err)).unwrap();
        assert_eq!(surv.protected_paths, vec!["1".to_string()], "link {link:?}");
        assert_eq!(surv.group.len(), 2);
    }
    // links preserving path 2 = {s145, s236}
    for link in [(2, 3), (4, 5)] {
        let err = [ErrorSpec::ZzCrosstalk(link.0, link.1, 0.3)];
        let surv = surviving_subgroup(&group, &generators(&g, &err)).unwrap();
        assert_eq!(surv.protected_paths, vec!["2".to_string()], "link {link:?}");
    }
    // links corrupting both paths
    for link in [(1, 2), (3, 4), (5, 6)] {
        let err = [ErrorSpec::ZzCrosstalk(link.0, link.1, 0.3)];
        let surv = surviving_subgroup(&group, &generators(&g, &err)).unwrap();
        assert!(!surv.protected(), "link {link:?} should corrupt both paths");
    }
    // zero-strength error = identity string commutes with everything
    let surv = surviving_subgroup(
        &group,
        &generators(&g, &[ErrorSpec::ZzCrosstalk(3, 5, 0.0)]),
    )
    .unwrap();
    assert_eq!(surv.group.len(), 4);
}

#[test]
fn surviving_generators_recommute_with_error() {
    let g = build_diamond();
    let group = g.symmetry_group().unwrap();
    let errs = generators(&g, &[ErrorSpec::ZzCrosstalk(3, 5, 0.3)]);
    let surv = surviving_subgroup(&group, &errs).unwrap();
    for (gen, _) in surv.group.iter() {
        for e in &errs {
            assert!(gen.commutes(e).unwrap());
        }
    }
}

#[test]
fn diamond_protected_path_has_unit_fidelity_for_every_epsilon() {
    let g = build_diamond();
    let mut rng = rng::root(21);
    for step in -4..=4 {
        let eps = 0.1 * step as f64;
        let errors = [ErrorSpec::ZzCrosstalk(3, 5, eps)];
        let input = InputState::random_bloch(&mut rng);
        let f_green = fidelity_exact(&g, &errors, input, "green").unwrap();
        assert!(
            (f_green - 1.0).abs() < 1e-10,
            "eps {eps}: green F = {f_green}"
        );
        if eps != 0.0 {
            let f_blue = fidelity_exact(&g, &errors, InputState::ZERO, "blue").unwrap();
            assert!(f_blue < 1.0 - 1e-6, "eps {eps}: blue F = {f_blue}");
        }
    }
}

#[test]
fn chain_even_spacing_rule() {
    let g = build_chain(6).unwrap();
    // even-spaced crosstalk (2,4) commutes with both chain symmetries
    let mut g24 = g.clone();
    g24.links.push((2, 4));
    g24.links.sort_unstable();
    let f = fidelity_exact(
        &g24,
        &[ErrorSpec::ZzCrosstalk(2, 4, 0.4)],
        InputState { polar: 0.8, azimuth: 0.2 },
        "1",
    )
    .unwrap();
    assert!((f - 1.0).abs() < 1e-9, "even-spaced crosstalk: F = {f}");
    // nearest-neighbor crosstalk (3,4) breaks both
    let f = fidelity_exact(
        &g,
        &[ErrorSpec::ZzCrosstalk(3, 4, 0.4)],
        InputState { polar: 0.8, azimuth: 0.2 },
        "1",
    )
    .unwrap();
    assert!(f < 1.0 - 1e-3, "odd-spaced crosstalk: F = {f}");
}

#[test]
fn hourglass_lower_row_x_errors_protect_upper_path() {
    let g = build_hourglass(2, 2).unwrap();
    let lower1 = hourglass_bulk_id(2, 1, 1);
    let lower2 = hourglass_bulk_id(2, 2, 1);
    for theta in [0.3, 1.0, 2.2, std::f64::consts::PI] {
        let errors = [
            ErrorSpec::SingleQubit(lower1, ErrorAxis::X, theta),
            ErrorSpec::SingleQubit(lower2, ErrorAxis::X, theta),
        ];
        let f_up = fidelity_exact(&g, &errors, InputState::ZERO, "upper").unwrap();
        assert!((f_up - 1.0).abs() < 1e-9, "theta {theta}: upper F = {f_up}");
        if theta < 3.0 {
            let f_low = fidelity_exact(&g, &errors, InputState::ZERO, "lower").unwrap();
            assert!(f_low < 1.0 - 1e-4, "theta {theta}: lower F = {f_low}");
        }
    }
}

#[test]
fn single_bulk_error_halves_the_path_count() {
    for n in 1..=6 {
        let g = build_hourglass(n, 2).unwrap();
        let group = g.symmetry_group().unwrap();
        assert_eq!(group.len(), 2 * (1 << n));
        for axis in [ErrorAxis::Z, ErrorAxis::X] {
            let err = [ErrorSpec::SingleQubit(
                hourglass_bulk_id(2, 1, 0),
                axis,
                0.7,
            )];
            let surv = surviving_subgroup(&group, &generators(&g, &err)).unwrap();
            assert_eq!(
                surv.protected_paths.len(),
                1 << (n - 1),
                "n={n} axis {axis:?}"
            );
        }
    }
}

#[test]
fn central_invariant_commuting_errors_preserve_fidelity() {
    // Protection theorem: whenever an error's generator commutes with both
    // strings of a path, exact teleportation fidelity along it stays 1.
    let mut rng = rng::root(99);
    let g = build_hourglass(2, 2).unwrap();
    let group = g.symmetry_group().unwrap();
    let candidates = [
        ErrorSpec::SingleQubit(hourglass_bulk_id(2, 1, 1), ErrorAxis::X, 0.9),
        ErrorSpec::SingleQubit(hourglass_bulk_id(2, 2, 1), ErrorAxis::Z, 1.3),
        ErrorSpec::SingleQubit(hourglass_bulk_id(2, 1, 0), ErrorAxis::Y, 0.5),
        ErrorSpec::ZzCrosstalk(hourglass_bulk_id(2, 1, 1), hourglass_bulk_id(2, 2, 1), 0.6),
    ];
    for err in candidates {
        let errs = [err.clone()];
        let surv = surviving_subgroup(&group, &generators(&g, &errs)).unwrap();
        for path in &surv.protected_paths {
            for _ in 0..5 {
                let input = InputState::random_bloch(&mut rng);
                let f = fidelity_exact(&g, &errs, input, path).unwrap();
                assert!(
                    (f - 1.0).abs() < 1e-10,
                    "error {err:?} path {path}: F = {f}"
                );
            }
        }
    }
    // Commuting symmetry pairs are sufficient for protection, not necessary;
    // the specific degradation claims (blue diamond path under eps_35, lower
    // hourglass path under X errors) are asserted in the tests above.
}

#[test]
fn factorization_matches_symmetry_structure() {
    // s135 on the diamond splits into X1 | X3X5 | Z6.
    let g = build_diamond();
    let (x_type, _) = g.path_symmetries("green").unwrap();
    let f = redstring::pauli::factorize(&x_type, 0, 5);
    assert_eq!(f.input_part.to_string(), "+XIIIII");
    assert_eq!(f.middle_part.to_string(), "+IIXIXI");
    assert_eq!(f.output_part.to_string(), "+IIIIIZ");
    let prod = f
        .input_part
        .multiply(&f.middle_part)
        .unwrap()
        .multiply(&f.output_part)
        .unwrap();
    assert_eq!(prod, x_type);
}

#[test]
fn symmetry_strings_stabilize_their_states_numerically() {
    // every enumerated pair stabilizes the ideal resource state (input |+>)
    for g in [
        build_chain(6).unwrap(),
        build_diamond(),
        build_hourglass(3, 2).unwrap(),
    ] {
        let state = redstring::teleport::prepare_pure(&g, &[], None).unwrap();
        for ps in g.enumerate_paths().unwrap() {
            for s in [&ps.x_type, &ps.z_type] {
                let e = state.expectation(s).unwrap();
                assert!(
                    (e - 1.0).abs() < 1e-10,
                    "{} path {} string {s}: <s> = {e}",
                    g.name,
                    ps.path_id
                );
            }
        }
    }
}

#[test]
fn x_type_and_z_type_labels_are_consistent() {
    for g in [
        build_chain(6).unwrap(),
        build_diamond(),
        build_hourglass(2, 2).unwrap(),
    ] {
        let group = g.symmetry_group().unwrap();
        let in_q = g.qubit(g.input_id()).unwrap();
        for (gen, label) in group.iter() {
            let expected = match label.kind {
                SymKind::XType => redstring::pauli::Pauli::X,
                SymKind::ZType => redstring::pauli::Pauli::Z,
            };
            assert_eq!(gen.letter(in_q), expected, "{} {:?}", g.name, label);
        }
    }
}
