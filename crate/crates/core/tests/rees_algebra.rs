mod common;

use reesalg::cohomology::{hochster_profile, SimplicialComplex};
use reesalg::groebner::{apply_map, groebner_basis, syzygies, FreeModule};
use reesalg::io::parse_polynomial;
use reesalg::rees::{h_relations, rees_generators};
use reesalg::resolution::Presentation;
use reesalg::verify::{check_section3, Verdict};
use reesalg::{Field, Ideal, Polynomial, Ring};

use common::ideal;

#[test]
fn relations_of_h_for_three_variables() {
    let p = rees_generators(Field::Rational, &[], 3).unwrap();
    assert_eq!(p.generators().len(), 3);
    let res = Presentation::quotient(p.ideal()).unwrap().resolve().unwrap();
    let t = res.betti_table();
    // 2x2 minors of a generic 2x3 matrix: Hilbert-Burch shape.
    assert_eq!(t.beta(1, 2), 3);
    assert_eq!(t.beta(2, 3), 2);
    assert_eq!(t.total(2), 2);
    assert_eq!(t.pd(), Some(2));

    let h = h_relations(Field::Rational, 3);
    let order = h[0].order().clone();
    let fm = FreeModule::ring(Field::Rational, &order);
    let gb = groebner_basis(&fm, &h.iter().map(|f| fm.from_polys(&[f.clone()])).collect::<Vec<_>>());
    let (_, syz) = syzygies(&fm, &gb).unwrap();
    assert!(syz.len() >= 2);
    assert!(syz.iter().all(|s| apply_map(&fm, &gb, s).is_zero()));
}

fn forms(j: &Ideal, text: &[&str]) -> Vec<Polynomial> {
    text.iter()
        .map(|f| parse_polynomial(f, j.field(), j.order(), j.names()).unwrap())
        .collect()
}

#[test]
fn bound1_fails_for_quadratic_forms() {
    let r = Ring::revlex(3);
    let j = Ideal::zero(r.field, &r.order);
    let reps = check_section3(&j, &forms(&j, &["x1^2", "x2^2", "x3^2"])).unwrap();
    let b = reps.iter().find(|r| r.theorem == "bound1[4]").unwrap();
    assert!(matches!(b.verdict, Verdict::Fails { .. }), "{b:#?}");
    assert_eq!(b.left.0, Some(-1));
    assert_eq!(b.right.0, Some(-3));
    for id in ["a-invariant1.upper", "regularity1.upper"] {
        assert!(reps.iter().find(|r| r.theorem == id).unwrap().holds(), "{id}");
    }
}

#[test]
fn bound1_holds_for_linear_forms() {
    let j = ideal("x1*x2 - x3^2");
    let reps = check_section3(&j, &forms(&j, &["x1", "x2"])).unwrap();
    assert!(reps.iter().filter(|r| r.theorem.starts_with("bound1")).all(|r| r.holds()));
}

fn band(extra: bool) -> SimplicialComplex {
    let mut facets = vec![
        vec![1, 2, 6],
        vec![2, 6, 7],
        vec![2, 3, 7],
        vec![3, 7, 8],
        vec![3, 4, 8],
        vec![4, 5, 8],
        vec![1, 4, 5],
        vec![9, 10],
    ];
    if extra {
        facets.push(vec![1, 5, 6]);
    }
    SimplicialComplex::new(10, facets).unwrap()
}

#[test]
fn listed_facets_have_extra_class() {
    let listed = band(false);
    assert_eq!(listed.minimal_nonfaces().len(), 29);
    let h = hochster_profile(Field::Rational, &listed, (-4, 2));
    assert_eq!(h.dim(2, -1), Some(1));

    let closed = band(true);
    assert_eq!(closed.minimal_nonfaces().len(), 28);
    let h = hochster_profile(Field::Rational, &closed, (-4, 2));
    assert_eq!(h.dim(2, -1), Some(0));
    assert_eq!(h.dim(2, 0), Some(1));
    assert_eq!(h.dim(2, -2), Some(1));
}

#[test]
fn minus_two_is_not_forced() {
    use reesalg::cohomology::{predict_rees_profile, CohomologyProfile, Tail};
    use std::collections::BTreeMap;
    // a_3 = -1 > -2 and a_4 = -3 < 0, yet H^3 vanishes in degree -2.
    let window = (-8, 2);
    let mut data = vec![(BTreeMap::new(), Tail::None); 5];
    data[3] = ((-8..=-3).chain([-1]).map(|a| (a, 1)).collect(), Tail::AllNonzero);
    data[4] = ((-8..=-3).map(|a| (a, 1)).collect(), Tail::AllNonzero);
    let pa = CohomologyProfile::asserted(4, window, data).unwrap();
    let pred = predict_rees_profile(&pa).unwrap();
    assert_eq!(pa.a(3), Some(-1));
    assert_eq!(pred.a[4], Some(-3));
}

#[test]
fn artinian_rees_algebra_is_cohen_macaulay() {
    use reesalg::cohomology::predict_rees_profile;
    use reesalg::verify::maxideal::analyze_rees;
    let j = ideal("vars: 2\nx1\nx2^2");
    let a = reesalg::verify::analyze(&j).unwrap();
    let pred = predict_rees_profile(&a.profile).unwrap();
    let direct = analyze_rees(&j).unwrap();
    assert_eq!(pred.depth, 0);
    assert!(pred.cohen_macaulay);
    assert_eq!(direct.profile.depth(), Some(0));
    assert_eq!(direct.profile.dimension(), Some(0));
}
