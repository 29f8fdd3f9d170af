use proptest::prelude::*;

use reesalg::io::{cache_key, parse_polynomial, CacheDescriptor};
use reesalg::rees::{hilbert_identity, rees_generators};
use reesalg::resolution::Presentation;
use reesalg::verify::{check_link1, check_maximal_ideal_theorems, MaxIdealOptions};
use reesalg::{Field, Ideal, Polynomial, Ring, TermOrder};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(32)
}

fn poly_in(n: usize, max_deg: u16) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..=4, prop::collection::vec(0..=max_deg, n)), 0..5).prop_map(move |terms| {
        let r = Ring::revlex(n);
        let terms: Vec<(i64, &[u16])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
        r.poly(&terms)
    })
}

/// Homogeneous forms of degree `d` in `n` variables.
fn form(n: usize, d: u16) -> impl Strategy<Value = Polynomial> {
    let r = Ring::revlex(n);
    let monos: Vec<Vec<u16>> = reesalg::Monomial::all_of_degree(n, d as u32)
        .into_iter()
        .map(|m| m.exps().to_vec())
        .collect();
    prop::collection::vec(-3i64..=3, monos.len()).prop_map(move |cs| {
        let terms: Vec<(i64, &[u16])> = cs.iter().zip(&monos).map(|(c, e)| (*c, e.as_slice())).collect();
        r.poly(&terms)
    })
}

fn monomial_ideal(n: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(prop::collection::vec(0u16..=2, n), 1..4).prop_map(move |gens| {
        let r = Ring::revlex(n);
        let gens: Vec<Polynomial> = gens
            .iter()
            .filter(|e| e.iter().any(|&x| x > 0))
            .map(|e| r.monomial(1, e))
            .collect();
        Ideal::new(r.field, &r.order, gens).unwrap()
    })
}

fn quadrics(n: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(form(n, 2), 1..3).prop_map(move |gens| {
        let r = Ring::revlex(n);
        Ideal::new(r.field, &r.order, gens.into_iter().filter(|g| !g.is_zero()).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_laws(f in poly_in(3, 2), g in poly_in(3, 2), h in poly_in(3, 2)) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn print_then_parse(f in poly_in(3, 3)) {
        let names: Vec<String> = (1..=3).map(|i| format!("x{i}")).collect();
        let back = parse_polynomial(&f.to_string_with(&names), Field::Rational, f.order(), &names).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn groebner_contains_and_is_idempotent(j in quadrics(3)) {
        for order in [TermOrder::revlex(3), TermOrder::lex(3)] {
            let j = j.with_order(&order);
            let gb = j.groebner();
            prop_assert!(gb.is_reduced());
            prop_assert!(j.generators().iter().all(|g| gb.contains(g)));
            let again = j.with_generators(gb.elements().to_vec()).unwrap().groebner();
            prop_assert_eq!(again.elements(), gb.elements());
        }
    }

    #[test]
    fn euler_characteristic_matches_hilbert_function(j in quadrics(3)) {
        let res = Presentation::quotient(&j).unwrap().resolve().unwrap();
        prop_assert!(res.is_minimal() && res.is_complex());
        let e = res.euler_series();
        let gb = j.groebner();
        for d in 0..=8 {
            prop_assert_eq!(e.coefficient(d), gb.hilbert_function(d));
        }
    }

    #[test]
    fn hilbert_identity_for_monomial_ideals(j in monomial_ideal(3)) {
        let gb = j.groebner();
        let p = rees_generators(j.field(), gb.elements(), 3).unwrap();
        for (lhs, rhs) in hilbert_identity(&p, 5) {
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn maximal_ideal_theorems_hold(j in monomial_ideal(2)) {
        let reps = check_maximal_ideal_theorems(&j, MaxIdealOptions { direct: Some(true) }).unwrap();
        for r in &reps {
            prop_assert!(!r.fails(), "{}", r.line());
        }
    }

    #[test]
    fn link1_holds(j in monomial_ideal(3)) {
        let a = reesalg::verify::analyze(&j).unwrap();
        for r in check_link1(&a) {
            prop_assert!(!r.fails(), "{}", r.line());
        }
    }

    #[test]
    fn cache_key_ignores_spelling(j in quadrics(3), k in 1i64..5) {
        let key = |i: &Ideal| cache_key(&CacheDescriptor::for_ideal(i, "groebner", &[]));
        let field = j.field();
        let mut gens: Vec<Polynomial> = j.generators().iter().map(|g| g.scale(&field.from_i64(k))).collect();
        gens.reverse();
        gens.push(j.generators()[0].clone());
        let respelled = j.with_generators(gens).unwrap();
        prop_assert_eq!(key(&j), key(&respelled));
        prop_assert_ne!(key(&j), key(&j.with_order(&TermOrder::lex(3))));
    }
}
