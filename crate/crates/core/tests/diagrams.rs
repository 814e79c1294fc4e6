use dacox_core::diagrams::{build_diagram, CoxeterDiagram, DoubleAffineLabel, Family};

fn components(family: Family, rank: usize) -> usize {
    let label = DoubleAffineLabel::new(family, rank).unwrap();
    build_diagram(label).unwrap().hecke_parameter_count()
}

#[test]
fn generic_parameter_counts() {
    let expected = [
        (Family::DddotA, 1, 4),
        (Family::DddotAStar, 1, 3),
        (Family::DddotA, 2, 1),
        (Family::DddotA, 5, 1),
        (Family::DddotB, 3, 2),
        (Family::DddotB, 5, 2),
        (Family::DddotC, 2, 5),
        (Family::DddotC, 4, 5),
        (Family::DddotCStar, 2, 4),
        (Family::DddotCStar, 3, 4),
        (Family::DddotD, 4, 1),
        (Family::DddotD, 6, 1),
        (Family::DddotE, 6, 1),
        (Family::DddotE, 7, 1),
        (Family::DddotE, 8, 1),
        (Family::DddotF, 4, 2),
        (Family::DddotG, 2, 2),
        (Family::DdotB, 3, 3),
        (Family::DdotB, 5, 3),
        (Family::DdotC, 3, 3),
        (Family::DdotC, 5, 3),
        (Family::DdotB2, 2, 4),
        (Family::DdotF4, 4, 2),
        (Family::DdotG2, 2, 2),
    ];
    for (family, rank, count) in expected {
        assert_eq!(components(family, rank), count, "{family} rank {rank}");
    }
}

#[test]
fn dddot_a1_is_complete_four_laced() {
    let d = build_diagram(DoubleAffineLabel::new(Family::DddotA, 1).unwrap()).unwrap();
    let edges: Vec<_> = d.braid_relation_list().into_iter().filter(|e| e.2 > 0).collect();
    assert_eq!(edges.len(), 6);
    assert!(edges.iter().all(|e| e.2 == 4));
}

#[test]
fn starred_diagram_keeps_specialised_node_apart() {
    let d = build_diagram(DoubleAffineLabel::new(Family::DddotCStar, 3).unwrap()).unwrap();
    assert_eq!(d.one_connected_components().len(), 5);
    assert_eq!(d.specialized_node(), Some(4));
}

#[test]
fn c1_aliases_to_a1() {
    let label = DoubleAffineLabel::new(Family::DddotC, 1).unwrap();
    assert_eq!(label.family(), Family::DddotA);
    assert!(label.is_c1_alias());
}

#[test]
fn invalid_ranks_are_rejected() {
    assert!(DoubleAffineLabel::new(Family::DddotB, 2).is_err());
    assert!(DoubleAffineLabel::new(Family::DddotD, 3).is_err());
    assert!(DoubleAffineLabel::new(Family::DddotE, 9).is_err());
    assert!(DoubleAffineLabel::new(Family::DdotB, 2).is_err());
}

#[test]
fn special_shapes() {
    let b2 = build_diagram(DoubleAffineLabel::new(Family::DdotB2, 2).unwrap()).unwrap();
    // Square Θ₀–T1–T2–Φ₀–Θ₀ with all edges double.
    let mult = |d: &CoxeterDiagram, a: usize, b: usize| d.mult(a, b).unwrap();
    assert_eq!(mult(&b2, 2, 0), 2);
    assert_eq!(mult(&b2, 0, 1), 2);
    assert_eq!(mult(&b2, 1, 3), 2);
    assert_eq!(mult(&b2, 3, 2), 2);
    assert_eq!(mult(&b2, 2, 1), 0);
    assert_eq!(mult(&b2, 3, 0), 0);
    let g2 = build_diagram(DoubleAffineLabel::new(Family::DdotG2, 2).unwrap()).unwrap();
    assert_eq!(mult(&g2, 0, 1), 3);
    assert_eq!(mult(&g2, 2, 0), 1);
    assert_eq!(mult(&g2, 3, 1), 1);
    assert_eq!(mult(&g2, 2, 3), 3);
    let f4 = build_diagram(DoubleAffineLabel::new(Family::DdotF4, 4).unwrap()).unwrap();
    assert_eq!(mult(&f4, 4, 0), 1);
    assert_eq!(mult(&f4, 1, 2), 2);
    assert_eq!(mult(&f4, 5, 3), 1);
    assert_eq!(mult(&f4, 4, 5), 2);
}

#[test]
fn dot_round_trip_all_families() {
    for family in Family::ALL {
        let (lo, hi) = family.rank_range();
        for rank in lo..=hi.min(lo + 3) {
            let Ok(label) = DoubleAffineLabel::new(family, rank) else { continue };
            let d = build_diagram(label).unwrap();
            let parsed = CoxeterDiagram::from_dot(&d.to_dot()).unwrap();
            assert_eq!(parsed, d, "{label}");
        }
    }
}

#[test]
fn label_parsing_round_trip() {
    for text in ["dddotC3", "ddotG2", "dddotAstar", "dddotCstar2", "ddotB4", "dddotE8"] {
        let label: DoubleAffineLabel = text.parse().unwrap();
        assert_eq!(label.to_string(), text);
    }
}

#[test]
fn correspondence_is_invertible() {
    for family in Family::ALL {
        let (lo, hi) = family.rank_range();
        for rank in lo..=hi.min(lo + 3) {
            let label = DoubleAffineLabel::new(family, rank).unwrap();
            let back = DoubleAffineLabel::from_affine_type(label.correspondence()).unwrap();
            assert_eq!(back.family(), label.family(), "{label}");
            assert_eq!(back.rank(), label.rank());
        }
    }
}
