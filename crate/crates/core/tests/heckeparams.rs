use std::collections::BTreeSet;

use dacox_core::diagrams::NodeLabel;
use dacox_core::heckeparams::{
    generic_param_count, nonreduced_to_reduced, param_assignment, parse_system, quadratic_relation,
    quadratic_relations, specialization_table, specialize, AffineSystem, Nonreduced, NonreducedKind,
};
use dacox_core::{AffineType, DoubleAffineLabel, Error, Family};
use proptest::prelude::*;

fn label(family: Family, rank: usize) -> DoubleAffineLabel {
    DoubleAffineLabel::new(family, rank).unwrap()
}

fn system(text: &str, n: usize) -> AffineSystem {
    parse_system(text, Some(n)).unwrap()
}

/// Published maximal parameter counts, per family.
fn published_count(family: Family) -> usize {
    match family {
        Family::DddotA => 1,
        Family::DddotAStar => 3,
        Family::DddotB => 2,
        Family::DddotC => 5,
        Family::DddotCStar => 4,
        Family::DddotD | Family::DddotE => 1,
        Family::DddotF | Family::DddotG => 2,
        Family::DdotB | Family::DdotC => 3,
        Family::DdotB2 => 4,
        Family::DdotF4 | Family::DdotG2 => 2,
    }
}

#[test]
fn generic_counts_match_the_published_table() {
    assert_eq!(generic_param_count(label(Family::DddotA, 1)).unwrap(), 4);
    for family in Family::ALL {
        let (lo, hi) = family.rank_range();
        let lo = match family {
            Family::DddotA | Family::DddotC | Family::DddotCStar => 2,
            _ => lo,
        };
        for rank in lo..=hi.min(lo + 1) {
            let l = label(family, rank);
            assert_eq!(generic_param_count(l).unwrap(), published_count(family), "{l}");
        }
    }
    // The starred count is the unstarred one minus the pinned Θ₀₂.
    for n in 2..=4 {
        assert_eq!(
            generic_param_count(label(Family::DddotCStar, n)).unwrap() + 1,
            generic_param_count(label(Family::DddotC, n)).unwrap()
        );
    }
}

#[test]
fn assignment_shares_symbols_along_simple_edges() {
    let a = param_assignment(label(Family::DddotC, 3)).unwrap();
    assert_eq!(a.symbol_of(NodeLabel::T(1)), a.symbol_of(NodeLabel::T(2)));
    assert_ne!(a.symbol_of(NodeLabel::T(2)), a.symbol_of(NodeLabel::T(3)));
    assert_eq!(a.field.len(), 5);
    let star = param_assignment(label(Family::DddotCStar, 3)).unwrap();
    assert_eq!(star.symbol_of(NodeLabel::Theta02), Some("1"));
    assert_eq!(star.independent_count(), 4);
    let simply_laced = param_assignment(label(Family::DddotE, 6)).unwrap();
    assert_eq!(simply_laced.components.len(), 1);
}

#[test]
fn quadratic_relation_records() {
    let r = quadratic_relation(NodeLabel::T(1), "1");
    assert!(r.is_involution());
    assert_eq!(r.to_string(), "T1^2 = 1");
    let relations = quadratic_relations(label(Family::DddotC, 2)).unwrap();
    assert_eq!(relations.len(), 5);
    let distinct: BTreeSet<String> = relations.iter().map(|r| r.rhs()).collect();
    assert_eq!(distinct.len(), 5);
    let a2 = quadratic_relations(label(Family::DddotA, 3)).unwrap();
    let distinct: BTreeSet<String> = a2.iter().map(|r| r.rhs()).collect();
    assert_eq!(distinct.len(), 1, "all generators of a simply-laced diagram share the record");
}

#[test]
fn nonreduced_systems_reduce_to_their_non_multipliable_roots() {
    let nr = |k, n| Nonreduced::new(k, n).unwrap();
    assert_eq!(nonreduced_to_reduced(nr(NonreducedKind::CdualBc, 3)), AffineType::AEvenTwisted(3));
    assert_eq!(nonreduced_to_reduced(nr(NonreducedKind::BBdual, 4)), AffineType::AOddTwisted(4));
    assert_eq!(nonreduced_to_reduced(nr(NonreducedKind::C2C2dual, 2)).to_string(), "D3^(2)");
    assert_eq!(nonreduced_to_reduced(nr(NonreducedKind::BcC, 3)).to_string(), "C3^(1)");
    assert_eq!(nonreduced_to_reduced(nr(NonreducedKind::CdualC, 2)).to_string(), "C2^(1)");
    assert!(matches!(Nonreduced::new(NonreducedKind::BBdual, 2), Err(Error::InvalidRank { .. })));
}

#[test]
fn system_strings_parse() {
    assert_eq!(system("A2n^(2)", 3), AffineSystem::Reduced(AffineType::AEvenTwisted(3)));
    assert_eq!(system("A_{2n-1}^(2)", 3), AffineSystem::Reduced(AffineType::AOddTwisted(3)));
    assert_eq!(system("D(n+1)^(2)", 4), AffineSystem::Reduced(AffineType::DTwisted(4)));
    assert_eq!(system("(Cn^,Cn)", 2).to_string(), "(C2^, C2)");
    assert_eq!(system("(C_n∨, BC_n)", 2).to_string(), "(C2^, BC2)");
    assert_eq!(system("(C2,C2^)", 7).to_string(), "(C2, C2^)");
    assert!(parse_system("A2n^(2)", None).is_err());
    assert!(parse_system("(Cn,Bn)", Some(3)).is_err());
    assert!("E6^(2)".parse::<AffineSystem>().is_ok());
}

#[test]
fn specialization_rows() {
    // (system, n, target, identifications, final count)
    let rows: [(&str, usize, &str, &[&str], usize); 12] = [
        ("A1^(1)", 1, "dddotA1", &["theta01 = theta02 = theta03 = t1"], 1),
        ("Cn^(1)", 3, "dddotC3", &["theta01 = theta02 = theta03"], 3),
        ("(BCn,Cn)", 2, "dddotC2", &["theta01 = theta02"], 4),
        ("(Cn^,Cn)", 2, "dddotC2", &[], 5),
        ("(Cn^,Cn)", 1, "dddotA1", &[], 4),
        ("A2n^(2)", 3, "dddotCstar3", &["theta03 = t3"], 3),
        ("(Cn^,BCn)", 3, "dddotCstar3", &[], 4),
        ("A3^(2)", 0, "ddotB2", &["theta0 = t2"], 3),
        ("(C2,C2^)", 2, "ddotB2", &[], 4),
        ("D(n+1)^(2)", 4, "ddotB4", &["theta0 = t4"], 2),
        ("A(2n-1)^(2)", 3, "ddotC3", &["phi0 = t3"], 2),
        ("(Bn,Bn^)", 3, "ddotC3", &[], 3),
    ];
    for (text, n, target, idents, count) in rows {
        let rule = specialize(system(text, n)).unwrap();
        assert_eq!(rule.target.to_string(), target, "{text}");
        let shown: Vec<String> = rule.identifications.iter().map(|i| i.to_string()).collect();
        assert_eq!(shown, idents, "{text}");
        assert_eq!(rule.final_count, count, "{text} at n = {n}");
    }
    let untouched = specialize(system("E6^(2)", 0)).unwrap();
    assert!(untouched.identifications.is_empty());
    assert_eq!(untouched.final_count, untouched.generic_count);
}

#[test]
fn nonreduced_counts_at_ranks_two_and_three() {
    let expected = [("(BCn,Cn)", 4), ("(Cn^,BCn)", 4), ("(Cn^,Cn)", 5)];
    for n in [2, 3] {
        for (text, count) in expected {
            assert_eq!(specialize(system(text, n)).unwrap().final_count, count, "{text} n = {n}");
        }
    }
    assert_eq!(specialize(system("(Bn,Bn^)", 3)).unwrap().final_count, 3);
    assert_eq!(specialize(system("(C2,C2^)", 2)).unwrap().final_count, 4);
    // At rank one the diagram degenerates to the four-laced one and two of
    // the rows lose a parameter.
    assert_eq!(specialize(system("(BCn,Cn)", 1)).unwrap().final_count, 3);
    assert_eq!(specialize(system("(Cn^,BCn)", 1)).unwrap().final_count, 3);
}

proptest! {
    #[test]
    fn specialization_never_increases_the_count(n in 1usize..7) {
        for rule in specialization_table(n) {
            prop_assert!(rule.final_count <= rule.generic_count, "{}", rule.system);
            prop_assert!(rule.final_count >= 1);
        }
    }
}
