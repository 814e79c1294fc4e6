use dacox_core::diagrams::{DoubleAffineLabel, Family, NodeLabel};
use dacox_core::presentation::{
    distinguished_elements, distinguished_identities, phi_dictionary, representative_labels, verify_presentation,
    Letter, Presentation, StarVariant, Word,
};
use dacox_core::rational::q;
use proptest::prelude::*;

fn label(family: Family, rank: usize) -> DoubleAffineLabel {
    DoubleAffineLabel::new(family, rank).unwrap()
}

fn count_named(p: &Presentation, prefix: &str) -> usize {
    p.relations().iter().filter(|r| r.name.starts_with(prefix)).count()
}

#[test]
fn all_representative_presentations_verify() {
    for l in representative_labels(false) {
        let report = verify_presentation(l).unwrap();
        let failures: Vec<_> = report.failures().into_iter().map(|c| format!("{}: {:?}", c.id, c.witness)).collect();
        assert!(failures.is_empty(), "{l}: {failures:#?}");
        assert!(report.len() > 10, "{l} ran too few checks");
    }
}

#[test]
fn elliptic_relations_only_when_ell0_is_two() {
    assert_eq!(count_named(&Presentation::build(label(Family::DddotA, 3)).unwrap(), "elliptic"), 0);
    assert_eq!(count_named(&Presentation::build(label(Family::DddotB, 3)).unwrap(), "elliptic"), 0);
    assert_eq!(count_named(&Presentation::build(label(Family::DddotC, 3)).unwrap(), "elliptic"), 3);
    assert_eq!(count_named(&Presentation::build(label(Family::DddotA, 1)).unwrap(), "elliptic"), 0);
}

#[test]
fn twisted_presentations_omit_the_affine_braid_relation() {
    for (family, rank) in [(Family::DdotB, 3), (Family::DdotC, 3), (Family::DdotB2, 2), (Family::DdotF4, 4), (Family::DdotG2, 2)] {
        let p = Presentation::build(label(family, rank)).unwrap();
        assert!(!p.relations().iter().any(|r| r.name.starts_with("braid(Theta0, Phi0")), "{family}");
    }
}

#[test]
fn central_word_maps_to_tau_delta() {
    for l in [label(Family::DddotA, 2), label(Family::DddotG, 2), label(Family::DdotF4, 4), label(Family::DdotG2, 2)] {
        let p = Presentation::build(l).unwrap();
        let dict = phi_dictionary(&p).unwrap();
        let c = dict.eval(&p.macros().central).unwrap();
        assert_eq!(c, dict.group().tau_delta(q(1)), "{l}");
    }
}

#[test]
fn finite_generator_images_are_involutions() {
    let p = Presentation::build(label(Family::DddotE, 6)).unwrap();
    let dict = phi_dictionary(&p).unwrap();
    let dw = dict.group();
    for i in 1..=6 {
        let s = dict.image(NodeLabel::T(i)).unwrap();
        assert_eq!(dw.mul(s, s), dw.identity());
    }
}

#[test]
fn starred_versions_differ_exactly_in_the_specialisation() {
    let l = label(Family::DddotCStar, 2);
    let plain = Presentation::build_variant(l, StarVariant::Plain).unwrap();
    let central = Presentation::build_variant(l, StarVariant::Central).unwrap();
    let plain_dict = phi_dictionary(&plain).unwrap();
    // Negative control: Θ₀₂² is not trivial in the plain version, it equals C.
    let sq = Word::gen(NodeLabel::Theta02).pow(2);
    assert_ne!(plain_dict.eval(&sq).unwrap(), plain_dict.group().identity());
    assert_eq!(plain_dict.eval(&sq).unwrap(), plain_dict.eval(&plain.macros().central).unwrap());
    assert!(!plain.relations().iter().any(|r| r.name == "square(Theta02)"));
    assert!(central.relations().iter().any(|r| r.name == "specialisation(Theta02^2 = 1)"));
}

#[test]
fn wrong_image_is_detected() {
    // Swapping the roles of two affine generators breaks the central relation.
    let p = Presentation::build(label(Family::DddotA, 2)).unwrap();
    let dict = phi_dictionary(&p).unwrap();
    let swapped = p.macros().central.substitute(|n| match n {
        NodeLabel::Theta01 => Word::gen(NodeLabel::Theta03),
        NodeLabel::Theta03 => Word::gen(NodeLabel::Theta01),
        other => Word::gen(other),
    });
    assert_ne!(dict.eval(&swapped).unwrap(), dict.group().tau_delta(q(1)));
}

#[test]
fn distinguished_identities_in_non_simply_laced_types() {
    for l in [label(Family::DdotB, 3), label(Family::DdotC, 3), label(Family::DdotF4, 4), label(Family::DdotG2, 2)] {
        let r = distinguished_identities(l).unwrap();
        assert!(r.all_pass(), "{l}: {:?}", r.failures());
    }
    let d = distinguished_elements(label(Family::DddotB, 3)).unwrap();
    assert!(d.psi.is_identity());
    assert!(d.theta_prime.is_none());
    let d = distinguished_elements(label(Family::DdotF4, 4)).unwrap();
    assert!(!d.psi.is_identity());
}

#[test]
fn parse_word_expands_macros() {
    let p = Presentation::build(label(Family::DddotC, 2)).unwrap();
    let c = p.parse_word("C").unwrap();
    assert_eq!(c, p.macros().central);
    assert_eq!(p.parse_word("C C'").unwrap(), Word::empty());
    assert!(p.parse_word("Phi0").is_err());
    assert!(p.parse_word("ThetaP").is_err());
}

fn letter_strategy() -> impl Strategy<Value = Letter> {
    (0usize..5, any::<bool>()).prop_map(|(k, inverse)| {
        let node = match k {
            0 => NodeLabel::T(1),
            1 => NodeLabel::T(2),
            2 => NodeLabel::Theta01,
            3 => NodeLabel::Theta02,
            _ => NodeLabel::Theta03,
        };
        Letter { node, inverse }
    })
}

proptest! {
    #[test]
    fn words_are_freely_reduced(letters in proptest::collection::vec(letter_strategy(), 0..30)) {
        let w = Word::from_letters(letters);
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0], pair[1].inv());
        }
        prop_assert!(w.concat(&w.inverse()).is_empty());
        let parsed: Word = w.to_string().parse().unwrap();
        prop_assert_eq!(parsed, w);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in proptest::collection::vec(letter_strategy(), 0..12),
                                    b in proptest::collection::vec(letter_strategy(), 0..12)) {
        let p = Presentation::build(DoubleAffineLabel::new(Family::DddotC, 2).unwrap()).unwrap();
        let dict = phi_dictionary(&p).unwrap();
        let (wa, wb) = (Word::from_letters(a), Word::from_letters(b));
        let dw = dict.group();
        prop_assert_eq!(dict.eval(&wa.concat(&wb)).unwrap(), dw.mul(&dict.eval(&wa).unwrap(), &dict.eval(&wb).unwrap()));
    }
}
