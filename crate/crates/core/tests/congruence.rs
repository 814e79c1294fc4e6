use std::collections::BTreeMap;

use dacox_core::congruence::{
    braid_lift, central_braid_word, coset_index, decompose, decompose_detailed, decompose_gamma1_prime2,
    identities_suite, is_e_inverted, member, upsilon_members, upsilon_prime2_members, BraidWord, CongruenceGroup,
    DecompositionMethod, Mat2, TwoGen, TwoLetter, UWord, XiElement,
};
use dacox_core::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
    Mat2::new(a, b, c, d)
}

#[test]
fn membership_examples() {
    assert!(!member(&Mat2::u21(), CongruenceGroup::Gamma1(2)).unwrap());
    for r in 1..=3 {
        assert!(member(&m(1, 5, 0, 1), CongruenceGroup::Gamma1(r)).unwrap());
    }
    let ups = m(1, 1, -2, -1);
    assert!(member(&ups, CongruenceGroup::Upsilon1(2)).unwrap());
    assert!(is_e_inverted(&ups, 2).unwrap());
    assert!(member(&Mat2::minus_identity(), CongruenceGroup::Gamma1(2)).unwrap());
    assert!(!member(&Mat2::minus_identity(), CongruenceGroup::Gamma1(3)).unwrap());
    assert!(member(&m(1, 0, 0, 1), CongruenceGroup::Gamma(5)).unwrap());
    assert!(!member(&m(1, 5, 0, 1), CongruenceGroup::Gamma(3)).unwrap());
    assert!(member(&m(1, 5, 0, 1), CongruenceGroup::Gamma(5)).unwrap());
    assert!(matches!(member(&m(2, 0, 0, 1), CongruenceGroup::Gamma1(1)), Err(Error::DeterminantNotOne(_))));
}

#[test]
fn matrix_parsing_round_trip() {
    let x: Mat2 = "0,-1;1,0".parse().unwrap();
    assert_eq!(x, m(0, -1, 1, 0));
    assert!("1,2,3".parse::<Mat2>().is_err());
    assert!("a,b;c,d".parse::<Mat2>().is_err());
}

#[test]
fn identities_all_hold() {
    let rep = identities_suite();
    assert!(rep.all_pass(), "{:?}", rep.failures());
    assert!(rep.len() >= 10);
}

#[test]
fn coset_indices_and_representatives() {
    assert_eq!(coset_index(1).unwrap().index, 1);
    let t2 = coset_index(2).unwrap();
    assert_eq!(t2.index, 3);
    let u12 = Mat2::u12();
    let u21 = Mat2::u21();
    let listed2 = [Mat2::identity(), u21.clone(), u12.mul(&u21)];
    let mut seen: Vec<usize> = listed2.iter().map(|g| t2.locate(g).unwrap()).collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 3);

    let t3 = coset_index(3).unwrap();
    assert_eq!(t3.index, 8);
    let u21sq = u21.mul(&u21);
    let u12sq = u12.mul(&u12);
    let listed3 = [
        Mat2::identity(),
        u21.clone(),
        u12.mul(&u21),
        u12sq.mul(&u21),
        u21sq.clone(),
        u12.mul(&u21sq),
        u12sq.mul(&u21sq),
    ];
    let mut classes: Vec<usize> = listed3.iter().map(|g| t3.locate(g).unwrap()).collect();
    classes.sort();
    classes.dedup();
    assert_eq!(classes.len(), 7);
    // The eighth class is the one of -I₂.
    let minus = t3.locate(&Mat2::minus_identity()).unwrap();
    assert!(!classes.contains(&minus));
}

#[test]
fn coset_words_are_closed_under_dropping_the_first_letter() {
    for r in 1..=3 {
        let t = coset_index(r).unwrap();
        for rep in &t.representatives {
            assert_eq!(UWord::from_letters(1, rep.letters.iter().copied()).evaluate(), rep.matrix);
            if let Some((_, rest)) = rep.letters.split_first() {
                assert!(t.representatives.iter().any(|x| x.letters == rest), "{}", rep.word);
            }
        }
    }
}

#[test]
fn decomposition_examples() {
    for r in 1..=3 {
        assert!(decompose(&Mat2::identity(), r).unwrap().is_empty());
        let b = Mat2::u21().pow(i64::from(r)).unwrap();
        assert_eq!(decompose(&b, r).unwrap().to_string(), "B");
    }
    let s = m(0, -1, 1, 0);
    let w = decompose(&s, 1).unwrap();
    assert_eq!(w.to_string(), "A B A");
    assert_eq!(braid_lift(&w).len(), 3);
    assert_eq!(decompose(&Mat2::minus_identity(), 1).unwrap().evaluate(), Mat2::minus_identity());
    assert_eq!(decompose(&Mat2::minus_identity(), 2).unwrap().evaluate(), Mat2::minus_identity());
    assert!(decompose(&Mat2::u21(), 2).is_err());
    assert!(decompose(&m(2, 0, 0, 1), 1).is_err());
}

#[test]
fn unit_b_base_cases_at_level_one() {
    for n in -4..=4 {
        for g in [m(0, -1, 1, 1 - n), m(1 - n, -1, 1, 0), m(0, 1, -1, n), m(n, 1, -1, 0)] {
            let d = decompose_detailed(&g, 1).unwrap();
            assert_eq!(d.method, DecompositionMethod::Descent);
            assert_eq!(d.word.evaluate(), g);
        }
    }
}

#[test]
fn upsilon_members_decompose_with_few_steps() {
    for r in 1..=3 {
        let members = upsilon_members(r, 30).unwrap();
        assert!(members.len() > 20);
        for g in &members {
            let d = decompose_detailed(g, r).unwrap();
            assert_eq!(d.method, DecompositionMethod::Descent);
            assert_eq!(d.word.evaluate(), *g);
            // Logarithmic number of reduction steps in the size of the entries.
            assert!(d.steps <= 12, "{g}: {} steps", d.steps);
        }
    }
}

#[test]
fn large_entries_decompose_in_logarithmically_many_steps() {
    // [[1, b], [-b, 1 - b^2]] with b = 10^6.
    let b = BigInt::from(1_000_000);
    let g = Mat2 { a: BigInt::from(1), b: b.clone(), c: -&b, d: BigInt::from(1) - &b * &b };
    let d = decompose_detailed(&g, 1).unwrap();
    assert_eq!(d.word.evaluate(), g);
    assert!(d.steps <= 60);
}

#[test]
fn upsilon_is_closed_under_inverse_and_twisted_inverse() {
    for r in 1..=3 {
        for g in upsilon_members(r, 12).unwrap() {
            let inv = g.inverse().unwrap();
            assert!(member(&inv, CongruenceGroup::Upsilon1(r)).unwrap());
            let twisted = g.e_conjugate(r).unwrap().inverse().unwrap();
            assert_eq!(twisted, g);
        }
    }
    for g in upsilon_prime2_members(15).unwrap() {
        assert!(member(&g, CongruenceGroup::Upsilon1(1)).unwrap());
        assert!(member(&g, CongruenceGroup::Gamma1Prime2).unwrap());
    }
}

#[test]
fn gamma1_prime2_decomposition() {
    for g in upsilon_prime2_members(10).unwrap() {
        let w = decompose_gamma1_prime2(&g).unwrap();
        assert_eq!(w.level(), 1);
        assert_eq!(w.evaluate(), g);
    }
    assert!(decompose_gamma1_prime2(&Mat2::u12()).is_err());
}

#[test]
fn xi_group_laws() {
    for r in 1..=3u32 {
        let e = XiElement::e(r);
        let u = XiElement::new(Mat2::u12(), false, r).unwrap();
        let conj = e.mul(&u).unwrap().mul(&e).unwrap();
        assert!(!conj.flip);
        assert_eq!(conj.m, Mat2::u21().pow(-i64::from(r)).unwrap());
        let x = e.mul(&u).unwrap();
        assert!(x.mul(&x.inverse()).unwrap().is_identity());
        let y = XiElement::new(Mat2::u21().pow(i64::from(r)).unwrap(), true, r).unwrap();
        let lhs = x.mul(&y).unwrap().mul(&u).unwrap();
        let rhs = x.mul(&y.mul(&u).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
    assert!(XiElement::new(Mat2::u21(), false, 2).is_err());
}

#[test]
fn central_words_project_to_plus_minus_identity() {
    assert_eq!(central_braid_word(1).unwrap().project(), Mat2::minus_identity());
    assert_eq!(central_braid_word(2).unwrap().project(), Mat2::minus_identity());
    assert_eq!(central_braid_word(3).unwrap().project(), Mat2::identity());
    let c = central_braid_word(1).unwrap();
    assert_eq!(c.to_string(), "a b a b a b");
}

// --- Oracle for the braid group on three strands: the reduced Burau
// representation, which is faithful for three strands.

type Laurent = BTreeMap<i32, i64>;

fn lp_add(x: &Laurent, y: &Laurent) -> Laurent {
    let mut out = x.clone();
    for (k, v) in y {
        *out.entry(*k).or_insert(0) += v;
    }
    out.retain(|_, v| *v != 0);
    out
}

fn lp_mul(x: &Laurent, y: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (i, a) in x {
        for (j, b) in y {
            *out.entry(i + j).or_insert(0) += a * b;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn mono(coef: i64, deg: i32) -> Laurent {
    if coef == 0 {
        Laurent::new()
    } else {
        Laurent::from([(deg, coef)])
    }
}

type Burau = [[Laurent; 2]; 2];

fn burau_mul(x: &Burau, y: &Burau) -> Burau {
    let entry = |i: usize, j: usize| lp_add(&lp_mul(&x[i][0], &y[0][j]), &lp_mul(&x[i][1], &y[1][j]));
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

fn burau_letter(l: &TwoLetter) -> Burau {
    // σ₁ = [[-t, 1], [0, 1]], σ₂ = [[1, 0], [t, -t]] and their inverses.
    match (l.gen, l.inverse) {
        (TwoGen::First, false) => [[mono(-1, 1), mono(1, 0)], [mono(0, 0), mono(1, 0)]],
        (TwoGen::First, true) => [[mono(-1, -1), mono(1, -1)], [mono(0, 0), mono(1, 0)]],
        (TwoGen::Second, false) => [[mono(1, 0), mono(0, 0)], [mono(1, 1), mono(-1, 1)]],
        (TwoGen::Second, true) => [[mono(1, 0), mono(0, 0)], [mono(1, 0), mono(-1, -1)]],
    }
}

fn burau(w: &BraidWord) -> Burau {
    let id: Burau = [[mono(1, 0), mono(0, 0)], [mono(0, 0), mono(1, 0)]];
    w.letters().iter().fold(id, |acc, l| burau_mul(&acc, &burau_letter(l)))
}

#[test]
fn burau_oracle_satisfies_the_braid_relation() {
    let lhs = BraidWord::parse("a b a", 1).unwrap();
    let rhs = BraidWord::parse("b a b", 1).unwrap();
    assert_eq!(burau(&lhs), burau(&rhs));
    assert_ne!(burau(&BraidWord::parse("a b", 1).unwrap()), burau(&BraidWord::parse("b a", 1).unwrap()));
    let inv = BraidWord::parse("a a'", 1).unwrap();
    assert!(inv.is_empty());
    let x = BraidWord::parse("a b'", 1).unwrap();
    assert_eq!(burau(&x.concat(&x.inverse())), burau(&BraidWord::empty(1)));
    let a = BraidWord::parse("a", 1).unwrap();
    assert_eq!(burau(&a.concat(&a.inverse())), burau(&BraidWord::empty(1)));
    let ai = BraidWord::parse("a'", 1).unwrap();
    assert_eq!(burau(&a.concat(&ai)), burau(&BraidWord::empty(1)));
    assert_eq!(burau_mul(&burau(&a), &burau(&ai)), burau(&BraidWord::empty(1)));
}

#[test]
fn preimages_of_plus_minus_identity_are_central_powers() {
    let letters = [
        TwoLetter::new(TwoGen::First, false),
        TwoLetter::new(TwoGen::Second, false),
        TwoLetter::new(TwoGen::First, true),
        TwoLetter::new(TwoGen::Second, true),
    ];
    let mats: Vec<Mat2> = letters.iter().map(|l| UWord::from_letters(1, [*l]).evaluate()).collect();
    let c = central_braid_word(1).unwrap();
    let c_burau = burau(&c);
    let c_inv_burau = burau(&c.inverse());
    let mut kernel_hits = 0;
    // Depth-first enumeration of reduced words of length at most 10.
    let mut stack: Vec<(Vec<TwoLetter>, Mat2)> = vec![(Vec::new(), Mat2::identity())];
    while let Some((w, mat)) = stack.pop() {
        let minus = mat == Mat2::minus_identity();
        if !w.is_empty() && (mat.is_identity() || minus) {
            kernel_hits += 1;
            let word = BraidWord::from_letters(1, w.iter().copied());
            let (ea, eb) = word.exponent_sums();
            let total = ea + eb;
            assert_eq!(total % 6, 0, "{word}");
            let k = total / 6;
            // π(𝔠) = -I₂, so the sign fixes the parity of the central power.
            assert_eq!(k % 2 != 0, minus, "{word}");
            let step = if k >= 0 { &c_burau } else { &c_inv_burau };
            let mut expected = burau(&BraidWord::empty(1));
            for _ in 0..k.abs() {
                expected = burau_mul(&expected, step);
            }
            assert_eq!(burau(&word), expected, "{word} is not a central power");
        }
        if w.len() == 10 {
            continue;
        }
        for (l, lm) in letters.iter().zip(&mats) {
            if w.last().map_or(false, |x| x.gen == l.gen && x.inverse != l.inverse) {
                continue;
            }
            let mut v = w.clone();
            v.push(*l);
            stack.push((v, mat.mul(lm)));
        }
    }
    // Preimages of ±I₂ within length 10 are words for 𝔠^{±1} such as
    // (ab)^3, (ba)^3, (aba)^2, … (a kernel word proper needs length 12).
    assert!(kernel_hits >= 4, "{kernel_hits}");
}

fn letter_strategy() -> impl Strategy<Value = TwoLetter> {
    (any::<bool>(), any::<bool>()).prop_map(|(g, inv)| {
        TwoLetter::new(if g { TwoGen::First } else { TwoGen::Second }, inv)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, .. ProptestConfig::default() })]

    #[test]
    fn evaluate_then_decompose_round_trip(level in 1u32..=3, letters in proptest::collection::vec(letter_strategy(), 0..=12)) {
        let w = UWord::from_letters(level, letters);
        let mat = w.evaluate();
        let back = decompose(&mat, level).unwrap();
        prop_assert_eq!(back.evaluate(), mat);
    }

    #[test]
    fn projection_is_a_homomorphism(a in proptest::collection::vec(letter_strategy(), 0..10),
                                    b in proptest::collection::vec(letter_strategy(), 0..10),
                                    level in 1u32..=3) {
        let x = BraidWord::from_letters(level, a);
        let y = BraidWord::from_letters(level, b);
        prop_assert_eq!(x.concat(&y).project(), x.project().mul(&y.project()));
    }
}
