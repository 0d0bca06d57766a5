use std::sync::Arc;

use fsing_core::hilbert::hilbert_series;
use fsing_core::{Engine, Ideal, Monomial, Polynomial, PolyRing, PrimeField, QuotientRing, Rational};
use fsing_core::{parse_poly, parse_poly_list, HypothesisSet};
use proptest::prelude::*;

const NVARS: usize = 4;

fn ring() -> Arc<PolyRing> {
    PolyRing::new(5, &["a", "b", "c", "d"]).unwrap()
}

fn monomial_ideal(r: &Arc<PolyRing>, gens: &[Monomial]) -> Ideal {
    Ideal::new(r, gens.iter().map(|m| Polynomial::term(r, m.clone(), 1)).collect()).unwrap()
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=4, NVARS).prop_map(Monomial::new)
}

fn arb_gens() -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(arb_monomial(), 1..=4)
}

fn lcms(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    a.iter().flat_map(|g| b.iter().map(move |h| g.lcm(h))).collect()
}

fn colon_by(gens: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    gens.iter().map(|g| g.div(&g.gcd(m)).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn intersection_matches_lcm_oracle(a in arb_gens(), b in arb_gens()) {
        let r = ring();
        let e = Engine::default();
        let got = monomial_ideal(&r, &a).intersect(&monomial_ideal(&r, &b), &e).unwrap();
        prop_assert!(got.equals(&monomial_ideal(&r, &lcms(&a, &b)), &e).unwrap());
    }

    #[test]
    fn colon_matches_quotient_oracle(a in arb_gens(), b in prop::collection::vec(arb_monomial(), 1..=2)) {
        let r = ring();
        let e = Engine::default();
        let got = monomial_ideal(&r, &a).colon(&monomial_ideal(&r, &b), &e).unwrap();
        // I : (m1, m2) = (I : m1) ∩ (I : m2)
        let mut expect = colon_by(&a, &b[0]);
        for m in &b[1..] {
            expect = lcms(&expect, &colon_by(&a, m));
        }
        prop_assert!(got.equals(&monomial_ideal(&r, &expect), &e).unwrap());
    }

    #[test]
    fn saturation_matches_support_oracle(a in arb_gens(), m in arb_monomial()) {
        let r = ring();
        let e = Engine::default();
        let f = Polynomial::term(&r, m.clone(), 1);
        let got = monomial_ideal(&r, &a).saturate(&f, &e).unwrap();
        let expect: Vec<Monomial> = a
            .iter()
            .map(|g| Monomial::new(g.exponents().iter().zip(m.exponents()).map(|(&x, &y)| if y > 0 { 0 } else { x }).collect()))
            .collect();
        prop_assert!(got.equals(&monomial_ideal(&r, &expect), &e).unwrap());
    }

    #[test]
    fn hilbert_coefficients_match_enumeration(a in arb_gens(), w in prop::collection::vec(1i64..=3, NVARS)) {
        let r = PolyRing::with_weights(
            PrimeField::new(5).unwrap(),
            ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
            w.iter().map(|&x| Rational::from_integer(x)).collect(),
        ).unwrap();
        let series = hilbert_series(&monomial_ideal(&r, &a), &Engine::default());
        if a.iter().any(|g| g.is_one()) {
            prop_assert!(series.is_err(), "the zero ring has no Hilbert data");
            return Ok(());
        }
        let h = series.unwrap();
        let mut counts = [0i64; 13];
        let range = 0..=12u32;
        for e0 in range.clone() { for e1 in range.clone() { for e2 in range.clone() { for e3 in range.clone() {
            let m = Monomial::new(vec![e0, e1, e2, e3]);
            let d = r.int_degree(&m);
            if d <= 12 && !a.iter().any(|g| g.divides(&m)) {
                counts[d as usize] += 1;
            }
        }}}}
        for (d, c) in counts.iter().enumerate() {
            prop_assert_eq!(h.coefficient(d as u64), *c, "degree {}", d);
        }
    }

    #[test]
    fn equality_with_own_basis(a in arb_gens(), extra in prop::collection::vec((arb_monomial(), 1u64..5), 1..3)) {
        let r = ring();
        let e = Engine::default();
        let mut gens: Vec<Polynomial> = a.iter().map(|m| Polynomial::term(&r, m.clone(), 1)).collect();
        gens.push(Polynomial::from_terms(&r, extra));
        let i = Ideal::new(&r, gens).unwrap();
        let j = i.interreduced(&e).unwrap();
        prop_assert!(i.equals(&j, &e).unwrap());
        prop_assert!(j.equals(&i, &e).unwrap());
        prop_assert!(i.equals(&i, &e).unwrap());
    }
}

#[test]
fn pure_power_complete_intersections() {
    // a = Σ d_j w_j - Σ w_i for the regular sequence x_i^{d_i}
    let weights = [1i64, 2, 3];
    let degs = [2u32, 3, 1];
    let r = PolyRing::with_weights(
        PrimeField::new(7).unwrap(),
        vec!["x".into(), "y".into(), "z".into()],
        weights.iter().map(|&w| Rational::from_integer(w)).collect(),
    )
    .unwrap();
    let e = Engine::default();
    for k in 1..=3 {
        let gens = (0..k).map(|i| Polynomial::term(&r, Monomial::var(3, i, degs[i]), 1)).collect();
        let q = QuotientRing::new(&r, gens).unwrap();
        let a = q.a_invariant(&HypothesisSet::parse_list("cohen-macaulay").unwrap(), &e).unwrap();
        let expect: i64 = (0..k).map(|i| degs[i] as i64 * weights[i]).sum::<i64>() - weights.iter().sum::<i64>();
        assert_eq!(a.value, Rational::from_integer(expect));
        assert_eq!(a.dimension, 3 - k);
    }
}

#[test]
fn first_graded_example_a_invariant() {
    let w = |n| Rational::from_integer(n);
    for p in [2, 3, 5, 7] {
        let r = PolyRing::with_weights(
            PrimeField::new(p).unwrap(),
            vec!["T".into(), "U".into(), "V".into(), "W".into()],
            vec![w(1), w(4), w(4), w(4)],
        )
        .unwrap();
        let rel = parse_poly_list("T^8 - U*V, T^4*(V - W) - V*W, U*(V - W) - T^4*W", &r).unwrap();
        assert!(rel.iter().all(Polynomial::is_homogeneous));
        let h = hilbert_series(&Ideal::new(&r, rel).unwrap(), &Engine::default()).unwrap();
        assert_eq!((h.a_invariant, h.dimension), (w(-1), 2), "p = {p}");
    }
}

#[test]
fn weighted_degrees() {
    let r = PolyRing::with_weights(
        PrimeField::new(5).unwrap(),
        vec!["u".into(), "v".into(), "y".into(), "z".into()],
        [2, 2, 1, 1].iter().map(|&x| Rational::from_integer(x)).collect(),
    )
    .unwrap();
    let f = parse_poly("u^2 - z^4", &r).unwrap();
    assert_eq!(f.degree().finite(), Some(Rational::from_integer(4)));
    assert!(f.is_homogeneous());
    assert_eq!(Polynomial::zero(&r).degree().finite(), None);
}
