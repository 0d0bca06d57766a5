use std::sync::Arc;

use fsing_core::frobenius::{fedder_is_f_pure, frobenius_closure_member, squarefree_monomial_fpure};
use fsing_core::{parse_poly, parse_poly_list, Engine, Ideal, PolyRing, PrimeField, QuotientRing, Rational, Status};

fn ring(p: u64) -> Arc<PolyRing> {
    let w = |n| Rational::from_integer(n);
    PolyRing::with_weights(
        PrimeField::new(p).unwrap(),
        vec!["U".into(), "V".into(), "Y".into(), "Z".into()],
        vec![w(2), w(2), w(1), w(1)],
    )
    .unwrap()
}

fn quotient(r: &Arc<PolyRing>) -> QuotientRing {
    QuotientRing::new(r, parse_poly_list("U*V, U*Z, Z*(V - Y^2)", r).unwrap()).unwrap()
}

#[test]
fn element_is_in_frobenius_closure_but_not_in_ideal() {
    for p in [2, 3, 5, 7, 11] {
        let r = ring(p);
        let q = quotient(&r);
        let e = Engine::default();
        let f = parse_poly("Y^3*Z^4", &r).unwrap();
        let gens = vec![parse_poly("Y^2*(U^2 - Z^4)", &r).unwrap()];
        let m = q.member(&f, &gens, &e).unwrap();
        assert!(!m.member, "p = {p}");
        assert_eq!(m.normal_form, f);
        let v = frobenius_closure_member(&q, &f, &gens, 3, &e).unwrap();
        assert_eq!(v.status, Status::InFrobeniusClosureAt(1), "p = {p}");
    }
}

#[test]
fn frobenius_image_of_the_witness_vanishes() {
    for p in [2u64, 3, 5, 7] {
        let r = ring(p);
        let q = quotient(&r);
        let e = Engine::default();
        let text = format!("V*Y^{}*U^{}", 3 * p - 2, 2 * p);
        assert!(q.is_zero(&parse_poly(&text, &r).unwrap(), &e).unwrap());
    }
}

#[test]
fn fedder_verdicts() {
    let e = Engine::default();
    for p in [2, 3, 5] {
        let r = PolyRing::new(p, &["U", "V", "Z"]).unwrap();
        let j = Ideal::new(&r, parse_poly_list("U*V, U*Z, Z*V", &r).unwrap()).unwrap();
        assert_eq!(fedder_is_f_pure(&j, &e).unwrap().status, Status::FPure);
        assert_eq!(squarefree_monomial_fpure(&j).status, Status::FPure);
    }
    let r = ring(2);
    let j = quotient(&r).defining().clone();
    assert_eq!(fedder_is_f_pure(&j, &e).unwrap().status, Status::NotFPure);
}

#[test]
fn fedder_detects_failure_for_small_odd_primes() {
    let e = Engine::default();
    for p in [3, 5, 7] {
        let r = ring(p);
        let j = quotient(&r).defining().clone();
        assert_eq!(fedder_is_f_pure(&j, &e).unwrap().status, Status::NotFPure, "p = {p}");
    }
}
