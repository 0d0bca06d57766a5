//! Seeded randomized consistency suites for the algebra engine.
//!
//! Each suite draws small random inputs from a ChaCha stream and checks an
//! identity against an independent computation. The same seed always gives
//! the same cases.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::divisor::{PointP1, QDivisor};
use crate::error::Result;
use crate::field::Rational;
use crate::frobenius::bracket_power;
use crate::groebner::{buchberger, normal_form, s_polynomial, Engine};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{Monomial, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    /// One line per failing case.
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const PRIMES: [u64; 5] = [2, 3, 5, 7, 32003];

fn ring(p: u64, nvars: usize) -> Arc<PolyRing> {
    let names = ["x", "y", "z", "w"];
    PolyRing::new(p, &names[..nvars]).expect("valid ring")
}

fn monomial(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> Monomial {
    let mut e = vec![0u32; nvars];
    let d = rng.gen_range(0..=max_deg);
    for _ in 0..d {
        e[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(e)
}

fn poly(rng: &mut ChaCha8Rng, r: &Arc<PolyRing>, terms: usize, max_deg: u32) -> Polynomial {
    let p = r.characteristic();
    let n = rng.gen_range(1..=terms);
    let t = (0..n).map(|_| (monomial(rng, r.nvars(), max_deg), rng.gen_range(1..p))).collect();
    Polynomial::from_terms(r, t)
}

fn random_ring(rng: &mut ChaCha8Rng, max_vars: usize) -> Arc<PolyRing> {
    let p = PRIMES[rng.gen_range(0..PRIMES.len())];
    ring(p, rng.gen_range(1..=max_vars))
}

/// Generators reduce to zero, S-pairs of the basis reduce to zero and the
/// basis is a fixed point of the algorithm.
pub fn groebner_spairs(seed: u64, cases: usize, engine: &Engine) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let r = random_ring(&mut rng, 4);
        let gens: Vec<_> = (0..rng.gen_range(1..=4)).map(|_| poly(&mut rng, &r, 3, 4)).collect();
        let gb = buchberger(&r, &gens, engine)?;
        let el = gb.elements();
        if gens.iter().any(|g| !normal_form(g, el).is_zero()) {
            failures.push(format!("case {case}: a generator does not reduce to 0"));
        }
        for i in 0..el.len() {
            for j in i + 1..el.len() {
                if !normal_form(&s_polynomial(&el[i], &el[j]), el).is_zero() {
                    failures.push(format!("case {case}: S-pair ({i}, {j}) does not reduce to 0"));
                }
            }
        }
        if buchberger(&r, el, engine)?.elements() != el {
            failures.push(format!("case {case}: basis is not a fixed point"));
        }
    }
    Ok(SuiteOutcome { name: "groebner-spairs", cases, failures })
}

/// `nf(a f + b g) = a nf(f) + b nf(g)` against a Gröbner basis.
pub fn normal_form_linearity(seed: u64, cases: usize, engine: &Engine) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let r = random_ring(&mut rng, 4);
        let p = r.characteristic();
        let gens: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| poly(&mut rng, &r, 3, 3)).collect();
        let gb = buchberger(&r, &gens, engine)?;
        let f = poly(&mut rng, &r, 5, 5);
        let g = poly(&mut rng, &r, 5, 5);
        let (a, b) = (rng.gen_range(0..p), rng.gen_range(0..p));
        let lhs = gb.normal_form(&(&f.scale(a) + &g.scale(b)));
        let rhs = &gb.normal_form(&f).scale(a) + &gb.normal_form(&g).scale(b);
        if lhs != rhs {
            failures.push(format!("case {case}: normal form is not linear"));
        }
    }
    Ok(SuiteOutcome { name: "normal-form-linearity", cases, failures })
}

/// For monomial ideals, membership via normal form agrees with checking that
/// each term is divisible by a generator.
pub fn monomial_membership(seed: u64, cases: usize, engine: &Engine) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let r = random_ring(&mut rng, 4);
        let p = r.characteristic();
        let gens: Vec<Monomial> = (0..rng.gen_range(1..=4)).map(|_| monomial(&mut rng, r.nvars(), 4)).collect();
        let ideal = Ideal::new(&r, gens.iter().map(|m| Polynomial::term(&r, m.clone(), 1)).collect())?;
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            // bias towards members: multiples of generators
            let m = if rng.gen_bool(0.7) {
                gens[rng.gen_range(0..gens.len())].mul(&monomial(&mut rng, r.nvars(), 2))
            } else {
                monomial(&mut rng, r.nvars(), 5)
            };
            terms.push((m, rng.gen_range(1..p)));
        }
        let f = Polynomial::from_terms(&r, terms);
        let oracle = f.terms().iter().all(|(m, _)| gens.iter().any(|g| g.divides(m)));
        if ideal.contains(&f, engine)? != oracle {
            failures.push(format!("case {case}: membership disagrees with divisibility"));
        }
    }
    Ok(SuiteOutcome { name: "monomial-membership", cases, failures })
}

/// `(I^[q])^[q'] = I^[q q']` as ideals, for p in {2, 3} and exponents up to 2.
pub fn bracket_composition(seed: u64, cases: usize, engine: &Engine) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let p = [2u64, 3][rng.gen_range(0..2)];
        let r = ring(p, rng.gen_range(1..=3));
        let gens: Vec<_> = (0..rng.gen_range(1..=2)).map(|_| poly(&mut rng, &r, 3, 2)).collect();
        let i = Ideal::new(&r, gens)?;
        let q1 = p.pow(rng.gen_range(1..=2));
        let q2 = p.pow(rng.gen_range(1..=2));
        let left = bracket_power(&bracket_power(&i, q1)?, q2)?;
        let right = bracket_power(&i, q1 * q2)?;
        if !left.equals(&right, engine)? {
            failures.push(format!("case {case}: composition fails for q = {q1}, q' = {q2}"));
        }
    }
    Ok(SuiteOutcome { name: "bracket-composition", cases, failures })
}

/// `(f + g)^p = f^p + g^p`, with powers computed by repeated multiplication
/// and compared with the termwise Frobenius.
pub fn freshman_dream(seed: u64, cases: usize) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let r = ring(p, rng.gen_range(1..=3));
        let f = poly(&mut rng, &r, 4, 3);
        let g = poly(&mut rng, &r, 4, 3);
        let lhs = (&f + &g).pow(p as u32);
        let rhs = &f.pow(p as u32) + &g.pow(p as u32);
        if lhs != rhs || lhs != (&f + &g).frobenius_power(p)? {
            failures.push(format!("case {case}: Frobenius is not additive at p = {p}"));
        }
    }
    Ok(SuiteOutcome { name: "freshman-dream", cases, failures })
}

/// `-[-nD] = [nD + D']` for random divisors and `n` in `1..=60`.
pub fn divisor_rounding(seed: u64, cases: usize) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let minus_one = Rational::from_integer(-1);
    for case in 0..cases {
        let d = QDivisor::from_terms((0..rng.gen_range(1..=5)).map(|_| {
            let pt = PointP1::Affine(rng.gen_range(0..10));
            (pt, Rational::new(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
        }));
        let n = Rational::from_integer(rng.gen_range(1..=60));
        let nd = d.scale(n);
        let lhs = nd.scale(minus_one).round_down().scale(minus_one);
        let rhs = nd.add(&d.frac_part()).round_down();
        if lhs != rhs {
            failures.push(format!("case {case}: D = {d}, n = {n}"));
        }
    }
    SuiteOutcome { name: "divisor-rounding", cases, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_deterministic_and_pass() {
        let e = Engine::default();
        let a = groebner_spairs(7, 20, &e).unwrap();
        assert!(a.passed(), "{:?}", a.failures);
        assert_eq!(a, groebner_spairs(7, 20, &e).unwrap());
        assert!(divisor_rounding(1, 50).passed());
        assert!(freshman_dream(3, 20).unwrap().passed());
    }
}
