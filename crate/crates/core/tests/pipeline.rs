//! End-to-end runs of factorization → diagram → certificates → invariants.

mod common;

use transbridge::braid::{self, handle, normal_form};
use transbridge::diagram::{
    assemble, bridge_params, build_tile, check_general_position, check_transverse, mini_stabilize,
    pairwise_links, stack_tiles, verify_trivial, BridgeParams, ComponentKind, TorusDiagram,
};
use transbridge::invariants::ledger;
use transbridge::io::{export_svg, parse_diagram, serialize_diagram, DiagramDocument};
use transbridge::quasipositive::{
    hurwitz_move, hurwitz_orbit, singular_factor, standard_factorization, validate, BandFactor,
    Direction, Factorization, Sign,
};
use transbridge::BraidWord;

fn w(d: usize, l: &[i32]) -> BraidWord {
    BraidWord::new(d, l.to_vec()).unwrap()
}

fn build(f: &Factorization) -> TorusDiagram {
    mini_stabilize(assemble(f).unwrap())
}

#[test]
fn word_problem_facts_agree_with_handle_reduction() {
    let cube = w(3, &[1, 2, 1, 2, 1, 2]);
    let twist = braid::full_twist(3).unwrap();
    assert!(braid::equal(&twist, &cube).unwrap());
    assert!(handle::equal_by_handles(&twist, &cube));

    let nf = normal_form(&twist);
    assert_eq!((nf.delta_power(), nf.factors().len()), (2, 0));
    assert!(handle::is_trivial(
        &nf.to_word().compose(&cube.invert()).unwrap()
    ));

    let conj = w(3, &[1, 2, 1, -2, -1]);
    assert!(braid::equal(&conj, &w(3, &[2])).unwrap());
    assert!(handle::equal_by_handles(&conj, &w(3, &[2])));
    assert_eq!(braid::full_twist(4).unwrap().exponent_sum(), 12);
}

#[test]
fn standard_factorizations_run_through() {
    for d in 2..=4 {
        let f = standard_factorization(d).unwrap();
        assert!(validate(&f).is_valid());
        assert!(handle::equal_by_handles(
            &f.expand(),
            &braid::full_twist(d).unwrap()
        ));

        let raw = assemble(&f).unwrap();
        assert_eq!(raw.bridge_index(), 2 * d * (d - 1));
        assert_eq!(raw.a_crossings() > 0, d > 2);

        let diag = mini_stabilize(raw);
        let s = diag.stabilization_count();
        assert_eq!(s, 2 * f.conjugator_length());
        assert!(check_transverse(&diag).passed());
        assert!(check_general_position(&diag).is_empty());
        assert_eq!(
            bridge_params(&diag).unwrap(),
            BridgeParams::expected_smooth(d, s)
        );

        let links = pairwise_links(&diag, &f).unwrap();
        assert_eq!(links.l2.components.len(), d * (d - 1) + s);
        assert!(links
            .l2
            .components
            .iter()
            .all(|c| c.kind == ComponentKind::Unknot));
        assert!(verify_trivial(&links, &f).passed());

        let l = ledger(&diag).unwrap();
        assert!(l.passed(), "{:?}", l.checks);
        assert_eq!(l.baseline, BridgeParams::expected_smooth(d, 0));
    }
}

#[test]
fn d2_standard_links() {
    let f = standard_factorization(2).unwrap();
    let diag = build(&f);
    assert_eq!(diag.bridge_points().len(), 8);
    assert_eq!(diag.a_crossings(), 0);
    let links = pairwise_links(&diag, &f).unwrap();
    assert_eq!(links.l1.closure_components, 2);
    assert_eq!(links.l3.braid.as_ref().unwrap().letters(), &[-1, -1]);
    assert_eq!(links.l2.components.len(), 2);
}

#[test]
fn d3_conjugator_tile_stabilizes_twice() {
    let tile = build_tile(&BandFactor::positive(w(3, &[2])).unwrap()).unwrap();
    assert_eq!(tile.a_crossings(), 2);

    let f = Factorization::new(
        3,
        vec![
            BandFactor::positive(w(3, &[2])).unwrap(),
            BandFactor::positive(BraidWord::identity(3)).unwrap(),
        ],
    )
    .unwrap();
    let raw = stack_tiles(&f).unwrap();
    let b = raw.bridge_index();
    let diag = mini_stabilize(raw);
    assert_eq!(diag.stabilization_count(), 2);
    assert_eq!(diag.bridge_index(), b + 2);
    assert!(check_transverse(&diag).passed());
}

#[test]
fn cusp_bands_carry_trefoils() {
    let f = common::cusp_factorization_d2();
    assert!(validate(&f).is_valid());
    let diag = build(&f);
    assert!(check_transverse(&diag).passed());
    let p = bridge_params(&diag).unwrap();
    assert_eq!((p.b, p.c1, p.c2, p.c3, p.s), (2, 2, 1, 2, 0));
    let links = pairwise_links(&diag, &f).unwrap();
    assert_eq!(
        links.l2.components[0].kind,
        ComponentKind::TorusLink { q: 3 }
    );
    assert!(verify_trivial(&links, &f).passed());

    let f = common::cusp_factorization_d3();
    assert!(validate(&f).is_valid());
    let diag = build(&f);
    assert!(check_transverse(&diag).passed());
    let links = pairwise_links(&diag, &f).unwrap();
    let trefoils = links
        .l2
        .components
        .iter()
        .filter(|c| c.kind == ComponentKind::TorusLink { q: 3 })
        .count();
    assert_eq!(trefoils, 1);
    assert!(verify_trivial(&links, &f).passed());
    let l = ledger(&diag).unwrap();
    assert!(!l.smooth && l.passed());
}

#[test]
fn mixed_singular_and_smooth_tiles() {
    let e = BraidWord::identity(2);
    let f = Factorization::new(
        2,
        vec![
            singular_factor(e.clone(), 2, Sign::Positive).unwrap(),
            BandFactor::positive(e).unwrap(),
        ],
    )
    .unwrap();
    assert!(!validate(&f).is_valid());
    assert!(assemble(&f).is_err());
    let diag = stack_tiles(&f).unwrap();
    let p = bridge_params(&diag).unwrap();
    assert_eq!(p.c2, 2);
    assert!(check_transverse(&diag).passed());
}

#[test]
fn negative_bands_validate_but_do_not_assemble() {
    let e = BraidWord::identity(2);
    let f = Factorization::new(
        2,
        vec![
            singular_factor(e.clone(), 3, Sign::Positive).unwrap(),
            singular_factor(e, 1, Sign::Negative).unwrap(),
        ],
    )
    .unwrap();
    let r = validate(&f);
    assert!(r.is_valid());
    assert_eq!(r.negative_factors, [1]);
    assert!(assemble(&f).is_err());
}

#[test]
fn corrupted_conjugator_breaks_l3() {
    let f = standard_factorization(3).unwrap();
    let diag = build(&f);
    let mut bad = f.clone();
    let g = f.factors()[1].conjugator().compose(&w(3, &[2])).unwrap();
    bad.replace_factor(1, BandFactor::positive(g).unwrap())
        .unwrap();
    let t = verify_trivial(&pairwise_links(&diag, &bad).unwrap(), &bad);
    assert!(t.l1_ok && !t.l3_ok);
}

#[test]
fn hurwitz_equivalent_factorizations_all_certify() {
    let f = standard_factorization(3).unwrap();
    let moved = hurwitz_move(
        &hurwitz_move(&f, 2, Direction::Right).unwrap(),
        4,
        Direction::Left,
    )
    .unwrap();
    for g in [&f, &moved] {
        let diag = build(g);
        assert!(check_transverse(&diag).passed());
        assert!(verify_trivial(&pairwise_links(&diag, g).unwrap(), g).passed());
        assert!(ledger(&diag).unwrap().passed());
    }
    let a = hurwitz_orbit(&f, 200);
    let b = hurwitz_orbit(&moved, 200);
    assert!(a
        .members
        .iter()
        .any(|(k, _)| b.members.iter().any(|(j, _)| j == k)));
}

#[test]
fn small_closed_orbit_is_well_defined() {
    // σ₁σ₂, σ₂σ₁ style: a 2-factor factorization in B₃ has a finite orbit
    let f = Factorization::new(
        3,
        vec![
            BandFactor::positive(BraidWord::identity(3)).unwrap(),
            BandFactor::positive(w(3, &[2, 1])).unwrap(),
        ],
    )
    .unwrap();
    let o = hurwitz_orbit(&f, 10_000);
    assert!(!o.truncated);
    let moved = hurwitz_move(&f, 1, Direction::Right).unwrap();
    let p = hurwitz_orbit(&moved, 10_000);
    let keys = |o: &transbridge::quasipositive::Orbit| {
        o.members.iter().map(|(k, _)| k.clone()).collect::<Vec<_>>()
    };
    assert_eq!(keys(&o), keys(&p));
}

#[test]
fn documents_and_drawings_survive_a_round_trip() {
    let f = standard_factorization(3).unwrap();
    let doc = DiagramDocument {
        diagram: build(&f),
        factorization: Some(f),
    };
    let text = serialize_diagram(&doc);
    let back = parse_diagram(&text).unwrap();
    assert_eq!(back, doc);
    assert_eq!(export_svg(&back.diagram), export_svg(&doc.diagram));

    let svg = export_svg(&build(&common::cusp_factorization_d2()));
    assert!(svg.contains("green") && svg.contains("blue"));
}
