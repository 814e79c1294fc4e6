use dacox_core::rational::{frac, q, to_q_vec};
use dacox_core::rootsys::AffineVector;
use dacox_core::{AffineType, FiniteKind, FiniteSystem, FiniteType, Q, RootSystem};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rs(text: &str) -> RootSystem {
    RootSystem::build(text.parse::<AffineType>().unwrap()).unwrap()
}

/// A broad sample of affine types, twisted and untwisted.
const TYPES: [&str; 16] = [
    "A1^(1)", "A3^(1)", "B3^(1)", "C2^(1)", "C3^(1)", "D4^(1)", "E6^(1)", "F4^(1)", "G2^(1)", "A2^(2)", "A4^(2)",
    "A5^(2)", "D3^(2)", "D4^(2)", "E6^(2)", "D4^(3)",
];

#[test]
fn marks_and_twist() {
    assert_eq!(rs("A4^(2)").a0(), 2);
    assert_eq!(rs("A2^(2)").a0(), 2);
    for text in ["A1^(1)", "B3^(1)", "G2^(1)", "A5^(2)", "D4^(2)", "E6^(2)", "D4^(3)"] {
        assert_eq!(rs(text).a0(), 1, "{text}");
    }
    for text in TYPES {
        let expected = if text.ends_with("(1)") {
            1
        } else if text == "D4^(3)" {
            3
        } else {
            2
        };
        assert_eq!(rs(text).twist(), expected, "{text}");
    }
    assert_eq!(rs("A1^(1)").finite().positive_roots().len(), 1);
    assert_eq!(rs("E6^(1)").finite().positive_roots().len(), 36);
}

#[test]
fn marks_span_the_kernel_of_the_cartan_matrix() {
    for text in TYPES {
        let r = rs(text);
        let cartan = r.cartan();
        let n = cartan.len();
        for j in 0..n {
            let column: i64 = (0..n).map(|i| r.marks()[i] * cartan[j][i]).sum();
            let row: i64 = (0..n).map(|i| r.comarks()[i] * cartan[i][j]).sum();
            assert_eq!((column, row), (0, 0), "{text} at node {j}");
        }
    }
}

#[test]
fn normalised_form_on_delta_and_lambda0() {
    for text in TYPES {
        let r = rs(text);
        let n = r.rank();
        let delta = AffineVector::delta(n);
        let lambda0 = AffineVector::lambda0(n);
        assert_eq!(r.pair(&delta, &delta).unwrap(), Q::zero(), "{text}");
        assert_eq!(r.pair(&delta, &lambda0).unwrap(), Q::one(), "{text}");
        assert_eq!(r.pair(&lambda0, &lambda0).unwrap(), Q::zero(), "{text}");
        for i in 0..=n {
            assert_eq!(r.pair(&r.alpha(i), &delta).unwrap(), Q::zero(), "{text}: α_{i} ⟂ δ");
        }
    }
    let a1 = rs("A1^(1)");
    assert_eq!(a1.finite().pair_int(a1.theta(), a1.theta()), q(2));
    assert!(a1.pair(&AffineVector::zero(1), &AffineVector::zero(2)).is_err());
}

#[test]
fn maximal_root_norm_is_twice_the_twist() {
    for text in TYPES {
        let r = rs(text);
        assert_eq!(r.max_root_norm(), q(2 * r.twist() as i64), "{text}");
    }
    assert_eq!(rs("B3^(1)").max_root_norm(), q(2));
    assert_eq!(rs("D4^(3)").max_root_norm(), q(6));
    assert_eq!(rs("A2^(2)").max_root_norm(), q(4));
}

#[test]
fn delta_decomposes_through_the_affine_root() {
    for text in TYPES {
        let r = rs(text);
        let theta = AffineVector::finite(to_q_vec(r.theta()));
        assert_eq!(r.alpha(0).scale(&q(r.a0())).add(&theta), r.delta(), "{text}");
        let sum = (0..=r.rank())
            .map(|i| r.alpha(i).scale(&q(r.marks()[i])))
            .fold(AffineVector::zero(r.rank()), |acc, v| acc.add(&v));
        assert_eq!(sum, r.delta(), "{text}: δ = Σ a_i α_i");
    }
}

#[test]
fn highest_roots_of_twisted_types() {
    for text in ["A5^(2)", "A3^(1)", "D3^(2)", "D4^(2)", "E6^(2)", "D4^(3)", "B3^(1)", "G2^(1)"] {
        let r = rs(text);
        let fs = r.finite();
        let phi_check = fs.coroot(&to_q_vec(r.phi())).unwrap();
        let pairing = fs.pair(&phi_check, &to_q_vec(r.theta()));
        if r.theta() == r.phi() {
            assert_eq!(pairing, q(2), "{text}");
        } else {
            assert_eq!(pairing, q(1), "{text}");
        }
    }
    // For B₃ inside D₄^(2), φ'^∨ = θ^∨ − φ^∨.
    let r = rs("D4^(2)");
    let fs = r.finite();
    assert_ne!(r.theta(), r.phi());
    let coroot = |v: &[i64]| fs.coroot(&to_q_vec(v)).unwrap();
    let expected: Vec<Q> =
        coroot(r.theta()).iter().zip(coroot(r.phi())).map(|(t, p)| t - p).collect();
    assert_eq!(coroot(&r.phi_prime()), expected);
    assert_eq!(r.theta_prime(), r.phi().iter().zip(r.theta()).map(|(p, t)| p - t).collect::<Vec<_>>());
}

#[test]
fn finite_systems() {
    let b3 = FiniteSystem::standard(FiniteType::new(FiniteKind::B, 3).unwrap());
    assert_eq!(b3.positive_roots().len(), 9);
    assert_eq!(b3.highest_root(), vec![1, 2, 2]);
    assert!(!b3.is_simply_laced());
    let g2 = FiniteSystem::standard(FiniteType::new(FiniteKind::G, 2).unwrap());
    assert_eq!(g2.positive_roots().len(), 6);
    for root in g2.positive_roots() {
        assert_eq!(g2.positive_root_index(root).map(|i| &g2.positive_roots()[i]), Some(root));
        let norm = g2.norm_int(root);
        assert!(norm == g2.norm_int(&g2.highest_root()) || norm == g2.norm_int(&g2.highest_short_root()));
    }
    assert_eq!(g2.norm_int(&g2.highest_root()), g2.norm_int(&g2.highest_short_root()) * q(3));
    assert!(FiniteType::new(FiniteKind::D, 3).is_err());
    assert!("Q7^(1)".parse::<AffineType>().is_err());
}

#[test]
fn type_labels_round_trip() {
    for text in TYPES {
        assert_eq!(rs(text).affine_type().to_string(), text);
    }
    assert_eq!("A3^(2)".parse::<AffineType>().unwrap().to_string(), "D3^(2)");
}

fn point(n: usize) -> impl Strategy<Value = AffineVector> {
    (prop::collection::vec((-6i64..=6, 1i64..=3), n), -6i64..=6, -3i64..=3).prop_map(|(fin, d, l)| {
        let finite = fin.into_iter().map(|(a, b)| frac(a, b)).collect();
        AffineVector::new(finite, q(d), q(l))
    })
}

proptest! {
    #[test]
    fn affine_reflections_are_isometric_involutions(
        which in 0usize..TYPES.len(),
        node in 0usize..3,
        seed in point(8),
    ) {
        let r = rs(TYPES[which]);
        let n = r.rank();
        let node = node.min(n);
        let x = AffineVector::new(seed.finite[..n].to_vec(), seed.delta.clone(), seed.lambda0.clone());
        let alpha = r.alpha(node);
        let once = r.reflect(&alpha, &x).unwrap();
        prop_assert_eq!(r.reflect(&alpha, &once).unwrap(), x.clone());
        prop_assert_eq!(r.pair(&once, &once).unwrap(), r.pair(&x, &x).unwrap());
        let check = r.coroot(&alpha).unwrap();
        prop_assert_eq!(r.pair(&alpha, &check).unwrap(), q(2));
    }
}
