use dacox_core::autoaction::{
    automorphism_suite, basic_involution_check, basic_map, central_element_action, compose, cstar_restriction_check,
    e_map, e_partner, evaluate_braid, evaluate_chain, AutoContext, BasicMap, EndoMap,
};
use dacox_core::congruence::{upsilon_members, upsilon_prime2_members, BraidWord, Mat2, TwoGen, TwoLetter};
use dacox_core::diagrams::NodeLabel;
use dacox_core::presentation::{phi_dictionary, representative_labels, Presentation, StarVariant, Word};
use dacox_core::{DoubleAffineLabel, Error};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn label(text: &str) -> DoubleAffineLabel {
    text.parse().unwrap()
}

fn gen(node: NodeLabel) -> Word {
    Word::gen(node)
}

#[test]
fn triple_family_images_by_hand() {
    use NodeLabel::*;
    let p = Presentation::build(label("dddotA2")).unwrap();
    let a = basic_map(&p, BasicMap::A);
    let b = basic_map(&p, BasicMap::B);
    let expected_a = Word::product([&gen(Theta02).inverse(), &gen(Theta01), &gen(Theta02)]);
    assert_eq!(a.image(Theta01), gen(Theta02));
    assert_eq!(a.image(Theta02), expected_a);
    assert_eq!(a.image(Theta03), gen(Theta03));
    assert_eq!(b.image(Theta01), gen(Theta01));
    assert_eq!(b.image(T(1)), gen(T(1)));

    // 𝔞𝔟𝔞 and 𝔟𝔞𝔟 both send Θ₀₁ to Θ₀₃ already at the level of words.
    let aba = compose(&a, &compose(&b, &a).unwrap()).unwrap();
    let bab = compose(&b, &compose(&a, &b).unwrap()).unwrap();
    assert_eq!(aba.image(Theta01), gen(Theta03));
    assert_eq!(bab.image(Theta01), gen(Theta03));

    let e = e_map(&p, &p).unwrap();
    assert!(e.is_anti());
    assert_eq!(e.image(Theta01), gen(Theta03));
    let w = Word::product([&gen(Theta01), &gen(T(1)), &gen(Theta02).inverse()]);
    let expected = Word::product([&gen(Theta02).inverse(), &gen(T(1)), &gen(Theta03)]);
    assert_eq!(e.apply(&w), expected);
}

#[test]
fn word_level_inverses_cancel() {
    for text in ["dddotC2", "ddotG2", "ddotB3"] {
        let p = Presentation::build(label(text)).unwrap();
        for (m, inv) in [(BasicMap::A, BasicMap::AInv), (BasicMap::B, BasicMap::BInv)] {
            let round = compose(&basic_map(&p, m), &basic_map(&p, inv)).unwrap();
            let id = EndoMap::identity(&p);
            assert_eq!(round.images(), id.images(), "{text}");
        }
    }
}

#[test]
fn e_swaps_the_affine_nodes_of_the_doubly_laced_families() {
    assert_eq!(e_partner(label("ddotB3")), label("ddotC3"));
    assert_eq!(e_partner(label("ddotC4")), label("ddotB4"));
    assert_eq!(e_partner(label("ddotF4")), label("ddotF4"));
    for text in ["ddotB2", "ddotF4", "ddotG2", "ddotB3", "ddotC3"] {
        let ctx = AutoContext::new(label(text)).unwrap();
        let e = ctx.e();
        assert_eq!(e.source(), label(text));
        assert_eq!(e.target(), e_partner(label(text)));
        assert_eq!(e.image(NodeLabel::Theta0), gen(NodeLabel::Phi0));
        assert_eq!(e.image(NodeLabel::Phi0), gen(NodeLabel::Theta0));
        let mut targets: Vec<_> = e.images().values().cloned().collect();
        targets.sort_by_key(|w| format!("{w}"));
        targets.dedup();
        assert_eq!(targets.len(), e.images().len(), "{text}: e is a bijection of generators");
    }
}

#[test]
fn automorphism_suite_passes_on_representatives() {
    for l in representative_labels(false) {
        let report = automorphism_suite(l).unwrap();
        assert!(report.all_pass(), "{l}: {:?}", report.failures());
        assert!(report.len() >= 15);
    }
}

#[test]
fn central_action_and_longest_element() {
    // w∘ ≠ −id in type A₂: the central braid acts by w∘-conjugation on the
    // affine generators only.
    let report = central_element_action(label("dddotA2")).unwrap();
    assert!(report.all_pass(), "{:?}", report.failures());
    let note = report.checks.iter().find(|c| c.id == "w0 = −id").unwrap();
    assert!(note.witness.as_deref().unwrap().starts_with("false"));
    let report = central_element_action(label("dddotD4")).unwrap();
    assert!(report.all_pass());
    let note = report.checks.iter().find(|c| c.id == "w0 = −id").unwrap();
    assert!(note.witness.as_deref().unwrap().starts_with("true"));
    for text in ["ddotB3", "ddotC3", "ddotB2", "ddotF4", "ddotG2"] {
        assert!(central_element_action(label(text)).unwrap().all_pass(), "{text}");
    }
}

#[test]
fn starred_restriction() {
    for n in [1, 2, 3] {
        let report = cstar_restriction_check(n).unwrap();
        assert!(report.all_pass(), "n = {n}: {:?}", report.failures());
    }
}

#[test]
fn braid_words_must_match_the_level() {
    let word = BraidWord::parse("a b", 1).unwrap();
    assert!(matches!(evaluate_braid(&word, label("ddotG2")), Err(Error::LevelMismatch(_))));
    assert!(evaluate_braid(&word, label("dddotA1")).is_ok());
}

#[test]
fn involution_matches_upsilon_membership_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cases = [("dddotA2", 1u32), ("dddotC2", 1), ("ddotB2", 2), ("ddotB3", 2), ("ddotC3", 2), ("ddotG2", 3)];
    for (text, r) in cases {
        let ctx = AutoContext::new(label(text)).unwrap();
        let pool = upsilon_members(r, 12).unwrap();
        for m in pool.choose_multiple(&mut rng, 6) {
            let verdict = basic_involution_check(&ctx, m).unwrap();
            assert!(verdict.in_upsilon);
            assert!(verdict.involution, "{text}: {m} lifted to {}", verdict.lift);
        }
        let r = r as i64;
        let unipotent = Mat2::new(1, 0, 2 * r, 1);
        let verdict = basic_involution_check(&ctx, &unipotent).unwrap();
        assert_eq!(verdict.lift.to_string(), "b b");
        assert!(!verdict.in_upsilon && !verdict.involution, "{text}");
        let outside = Mat2::new(1, 0, 1, 1);
        if r > 1 {
            assert!(matches!(basic_involution_check(&ctx, &outside), Err(Error::NotInGroup { .. })));
        }
    }
    for variant in [StarVariant::Central, StarVariant::Plain] {
        let ctx = AutoContext::with_variant(label("dddotCstar2"), variant).unwrap();
        let pool = upsilon_prime2_members(12).unwrap();
        for m in pool.choose_multiple(&mut rng, 6) {
            let verdict = basic_involution_check(&ctx, m).unwrap();
            assert!(verdict.in_upsilon && verdict.involution, "{variant:?} {m}");
        }
        let verdict = basic_involution_check(&ctx, &Mat2::new(1, 0, 4, 1)).unwrap();
        assert!(!verdict.involution);
        assert!(matches!(basic_involution_check(&ctx, &Mat2::u21()), Err(Error::NotInGroup { .. })));
    }
}

fn braid_strategy(level: u32) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((any::<bool>(), any::<bool>()), 0..=4).prop_map(move |raw| {
        let letters = raw
            .into_iter()
            .map(|(first, inverse)| TwoLetter::new(if first { TwoGen::First } else { TwoGen::Second }, inverse));
        BraidWord::from_letters(level, letters)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Word-level evaluation is a homomorphism from braid words to
    // endomorphisms, and agrees with the chain evaluation.
    #[test]
    fn braid_evaluation_is_a_homomorphism(
        level in 1u32..=3,
        v in braid_strategy(1),
        w in braid_strategy(1),
    ) {
        let text = match level { 1 => "dddotC2", 2 => "ddotB2", _ => "ddotG2" };
        let l = label(text);
        let relevel = |x: &BraidWord| BraidWord::from_letters(level, x.letters().iter().copied());
        let (v, w) = (relevel(&v), relevel(&w));
        let vw = v.concat(&w);
        let composed = compose(&evaluate_braid(&v, l).unwrap(), &evaluate_braid(&w, l).unwrap()).unwrap();
        let direct = evaluate_braid(&vw, l).unwrap();
        let ctx = AutoContext::new(l).unwrap();
        let dict = phi_dictionary(&ctx.primary().presentation).unwrap();
        let by_composition = evaluate_chain(&[&composed], &dict).unwrap();
        let by_word = evaluate_chain(&[&direct], &dict).unwrap();
        prop_assert_eq!(&by_composition, &by_word);
        if !vw.is_empty() {
            let by_chain = ctx.evaluate(&ctx.primary().braid_chain(&vw)).unwrap();
            prop_assert_eq!(&by_word, &by_chain);
        }
    }
}
