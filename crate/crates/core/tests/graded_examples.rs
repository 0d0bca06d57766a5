use std::sync::Arc;

use fsing_core::covers::{class_order, cover_cross_check, cyclic_cover_stats, f_rational_verdict_dim2, f_regular_verdict_dim2};
use fsing_core::{
    parse_poly, parse_poly_list, DivisorialIdeal, Engine, HypothesisSet, PolyRing, PrimeField, QuotientRing, Rational,
    Status,
};

fn weighted(p: u64, vars: &[&str], weights: &[Rational]) -> Arc<PolyRing> {
    PolyRing::with_weights(PrimeField::new(p).unwrap(), vars.iter().map(|v| v.to_string()).collect(), weights.to_vec())
        .unwrap()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn flags() -> HypothesisSet {
    HypothesisSet::parse_list("normal,dim2,cohen-macaulay,coprime-order,avoids-minimal-primes,large-char").unwrap()
}

fn first_example(p: u64) -> (Arc<PolyRing>, QuotientRing) {
    let r = weighted(p, &["T", "U", "V", "W"], &[int(1), int(4), int(4), int(4)]);
    let rel = parse_poly_list("T^8 - U*V, T^4*(V - W) - V*W, U*(V - W) - T^4*W", &r).unwrap();
    let q = QuotientRing::new(&r, rel).unwrap();
    (r, q)
}

#[test]
fn first_example_canonical_class() {
    for p in [5, 7] {
        let (r, q) = first_example(p);
        let e = Engine::default();
        let t3 = parse_poly("T^3", &r).unwrap();
        let omega = DivisorialIdeal::new(&q, parse_poly_list("V, W", &r).unwrap(), t3).unwrap();
        let s = parse_poly("U", &r).unwrap();

        let w2 = omega.symbolic_power(2, &s, &e).unwrap();
        let expect2 =
            DivisorialIdeal::new(&q, parse_poly_list("V^2, V*W, W^2", &r).unwrap(), parse_poly("T^6", &r).unwrap()).unwrap();
        assert!(w2.equals(&expect2, &e).unwrap(), "p = {p}");

        let w3 = omega.symbolic_power(3, &s, &e).unwrap();
        let expect3 =
            DivisorialIdeal::new(&q, parse_poly_list("V^2 - 2*V*W + W^2", &r).unwrap(), parse_poly("T^9", &r).unwrap())
                .unwrap();
        assert!(w3.equals(&expect3, &e).unwrap(), "p = {p}");

        let c = class_order(&omega, 4, &s, &e).unwrap().unwrap();
        assert_eq!((c.order, c.deg_u), (3, int(-1)));
        let stats = cyclic_cover_stats(c.order, c.deg_u).unwrap();
        assert_eq!(stats.a_of_cover, Rational::new(1, 3));

        let cr = weighted(p, &["T", "Y", "Z"], &[int(1), Rational::new(4, 3), Rational::new(4, 3)]);
        let cover = QuotientRing::new(&cr, parse_poly_list("T^4 + Y*Z^2 - Y^2*Z", &cr).unwrap()).unwrap();
        let (by_degree, by_hilbert) = cover_cross_check(&stats, &cover, &e).unwrap();
        assert_eq!(by_degree, by_hilbert);

        assert_eq!(q.a_invariant(&flags(), &e).unwrap().value, int(-1));
        let v = f_regular_verdict_dim2(&q, &omega, 4, &s, &flags(), &e).unwrap();
        assert_eq!(v.verdict.status, Status::NotFRegular);
        assert_eq!(f_rational_verdict_dim2(&q, &flags(), &e).unwrap().status, Status::FRational);
    }
}

fn second_example(p: u64) -> (Arc<PolyRing>, QuotientRing) {
    let r = weighted(p, &["X", "A", "B", "C", "D"], &[int(1), int(3), int(3), int(3), int(3)]);
    let rel = parse_poly_list("A*C - B^2, B*D - C^2, A*D - B*C, X^3 - B - C", &r).unwrap();
    (r.clone(), QuotientRing::new(&r, rel).unwrap())
}

#[test]
fn second_example_canonical_class() {
    for p in [5, 7] {
        let (r, q) = second_example(p);
        let e = Engine::default();
        let one = parse_poly("1", &r).unwrap();
        let omega = DivisorialIdeal::new(&q, parse_poly_list("A, B", &r).unwrap(), one.clone()).unwrap().with_shift(int(-2));
        let s = parse_poly("D", &r).unwrap();

        let w2 = omega.symbolic_power(2, &s, &e).unwrap();
        let expect2 = DivisorialIdeal::new(&q, parse_poly_list("A^2, A*B, B^2", &r).unwrap(), one.clone())
            .unwrap()
            .with_shift(int(-4));
        assert!(w2.equals(&expect2, &e).unwrap(), "p = {p}");

        let c = class_order(&omega, 4, &s, &e).unwrap().unwrap();
        assert_eq!((c.order, c.deg_u), (3, int(0)));
        let stats = cyclic_cover_stats(c.order, c.deg_u).unwrap();
        let cr = PolyRing::new(p, &["X", "Y", "Z"]).unwrap();
        let cover = QuotientRing::new(&cr, parse_poly_list("X^3 - Y*Z*(Y + Z)", &cr).unwrap()).unwrap();
        let (by_degree, by_hilbert) = cover_cross_check(&stats, &cover, &e).unwrap();
        assert_eq!((by_degree, by_hilbert), (int(0), int(0)));

        assert_eq!(q.a_invariant(&flags(), &e).unwrap().value, int(-1));
        let v = f_regular_verdict_dim2(&q, &omega, 4, &s, &flags(), &e).unwrap();
        assert_eq!(v.verdict.status, Status::NotFRegular);
        assert_eq!(f_rational_verdict_dim2(&q, &flags(), &e).unwrap().status, Status::FRational);
    }
}
