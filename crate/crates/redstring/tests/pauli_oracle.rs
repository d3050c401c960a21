//! Oracle checks of the symplectic Pauli arithmetic against explicit dense
//! matrices, plus property tests of the algebraic laws.

mod common;

use common::{commutator_norm, dense_matrix, frobenius_norm, matmul, sub};
use proptest::prelude::*;
use redstring::graph::build_diamond;
use redstring::pauli::{Pauli, PauliString};

fn arb_pauli() -> impl Strategy<Value = Pauli> {
    prop_oneof![
        Just(Pauli::I),
        Just(Pauli::X),
        Just(Pauli::Y),
        Just(Pauli::Z)
    ]
}

fn arb_string(n: usize) -> impl Strategy<Value = PauliString> {
    (
        proptest::collection::vec(arb_pauli(), n),
        0u8..4,
    )
        .prop_map(|(letters, k)| {
            PauliString::from_letters(&letters)
                .with_phase(redstring::pauli::Phase::from_exponent(k))
        })
}

proptest! {
    #[test]
    fn product_matches_dense_matmul(a in arb_string(4), b in arb_string(4)) {
        let prod = a.multiply(&b).unwrap();
        let dense = matmul(&dense_matrix(&a), &dense_matrix(&b));
        let diff = frobenius_norm(&sub(&dense, &dense_matrix(&prod)));
        prop_assert!(diff < 1e-12, "symbolic {prod} != dense product");
    }

    #[test]
    fn multiplication_is_associative(
        a in arb_string(5),
        b in arb_string(5),
        c in arb_string(5),
    ) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn commutes_agrees_with_commutator_norm(a in arb_string(6), b in arb_string(6)) {
        let sym = a.commutes(&b).unwrap();
        let norm = commutator_norm(&a, &b);
        if sym {
            prop_assert!(norm < 1e-12);
        } else {
            prop_assert!(norm > 1.0);
        }
    }

    #[test]
    fn text_form_round_trips(s in arb_string(7)) {
        let text = s.to_string();
        let back: PauliString = text.parse().unwrap();
        prop_assert_eq!(back, s);
    }
}

#[test]
fn diamond_k1_k3_k5_product_against_dense() {
    let g = build_diamond();
    let k1 = g.stabilizer_for_vertex(1).unwrap();
    let k3 = g.stabilizer_for_vertex(3).unwrap();
    let k5 = g.stabilizer_for_vertex(5).unwrap();
    let sym = k1.multiply(&k3).unwrap().multiply(&k5).unwrap();
    // Expected +X1 X3 X5 Z6 with the Y·Z phases cancelling pairwise.
    assert_eq!(sym.to_string(), "+XIXIXZ");
    let dense = matmul(
        &matmul(&dense_matrix(&k1), &dense_matrix(&k3)),
        &dense_matrix(&k5),
    );
    let diff = frobenius_norm(&sub(&dense, &dense_matrix(&sym)));
    assert!(diff < 1e-12, "64x64 dense product mismatch: {diff}");
}

#[test]
fn spec_commutation_examples_against_oracle() {
    // Z3Z5 vs X1X3X5Z6 commute; Z3Z5 vs X1X4X5Z6 anticommute.
    let z35: PauliString = "+IIZIZI".parse().unwrap();
    let s135: PauliString = "+XIXIXZ".parse().unwrap();
    let s145: PauliString = "+XIIXXZ".parse().unwrap();
    assert!(z35.commutes(&s135).unwrap());
    assert!(commutator_norm(&z35, &s135) < 1e-12);
    assert!(!z35.commutes(&s145).unwrap());
    assert!(commutator_norm(&z35, &s145) > 1.0);
}
