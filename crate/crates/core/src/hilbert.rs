//! Hilbert series of graded quotients and the a-invariant.
//!
//! For a homogeneous ideal `I` of a weighted polynomial ring the series of
//! `S/I` equals that of `S/in(I)`, so only the leading-term ideal is needed.
//! Weights are cleared to integers first; the formal variable `s` then has
//! degree `1/weight_denominator`.

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::groebner::Engine;
use crate::hypothesis::{Hypothesis, HypothesisSet};
use crate::ideal::{Ideal, QuotientRing};
use crate::ring::Monomial;

/// `H(s) = numerator(s) / Π (1 - s^w)` over the cleared weights `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of the numerator, index = cleared degree.
    pub numerator: Vec<i64>,
    pub denominator_weights: Vec<u64>,
    pub weight_denominator: u64,
    /// Krull dimension (order of the pole at `s = 1`).
    pub dimension: usize,
    /// `numerator / (1 - s)^(n - dimension)`; nonzero at `s = 1`.
    pub reduced_numerator: Vec<i64>,
    /// Degree of `H` as a rational function, in the original grading.
    pub a_invariant: Rational,
}

impl HilbertData {
    /// `dim_K [S/I]_d` for a cleared degree `d`, by expanding the series.
    pub fn coefficient(&self, d: u64) -> i64 {
        let d = d as usize;
        let mut series = vec![0i64; d + 1];
        for (k, c) in self.numerator.iter().enumerate().take(d + 1) {
            series[k] = *c;
        }
        for &w in &self.denominator_weights {
            let w = w as usize;
            for k in w..=d {
                series[k] += series[k - w];
            }
        }
        series[d]
    }
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn mul_one_minus(p: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + d];
    for (k, c) in p.iter().enumerate() {
        out[k] += c;
        out[k + d] -= c;
    }
    trim(out)
}

fn add_shifted(a: &[i64], b: &[i64], shift: usize) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len() + shift)];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k + shift] += c;
    }
    trim(out)
}

fn int_degree(m: &Monomial, weights: &[u64]) -> usize {
    m.exponents().iter().zip(weights).map(|(&e, &w)| e as usize * w as usize).sum()
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(s)` of the Hilbert series of `S / (gens)` for a monomial
/// ideal, with `S` graded by the integer `weights`.
///
/// Generators coprime to all others split off as factors `1 - s^deg`; the
/// rest are split on a pivot `x^e` (`x` the variable occurring in the most
/// generators, ties to the lowest index, `e` its least positive exponent):
/// `N(I) = N(I + x^e) + s^{deg x^e} N(I : x^e)`.
pub fn monomial_numerator(gens: &[Monomial], weights: &[u64]) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // split off generators coprime to all others
    if let Some(i) = (0..gens.len()).find(|&i| (0..gens.len()).all(|j| j == i || gens[i].is_coprime(&gens[j]))) {
        let mut rest = gens.clone();
        let m = rest.remove(i);
        return mul_one_minus(&monomial_numerator(&rest, weights), int_degree(&m, weights));
    }
    let nvars = weights.len();
    let counts: Vec<usize> = (0..nvars).map(|v| gens.iter().filter(|m| m.exponents()[v] > 0).count()).collect();
    let pivot_var = (0..nvars).max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a))).unwrap();
    let e = gens.iter().map(|m| m.exponents()[pivot_var]).filter(|&e| e > 0).min().unwrap();
    let pivot = Monomial::var(nvars, pivot_var, e);

    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens.iter().map(|m| m.div(&m.gcd(&pivot)).unwrap()).collect();

    let a = monomial_numerator(&plus, weights);
    let b = monomial_numerator(&colon, weights);
    add_shifted(&a, &b, int_degree(&pivot, weights))
}

/// Hilbert series of `S/I` for a homogeneous ideal `I`.
pub fn hilbert_series(ideal: &Ideal, engine: &Engine) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = ideal.ring();
    let weights = ring.int_weights().to_vec();
    let lead = ideal.gb(engine)?.leading_monomials();
    let numerator = monomial_numerator(&lead, &weights);
    if numerator == [0] {
        return Err(Error::InvalidArgument("the quotient is the zero ring".into()));
    }
    // divide out (1 - s) as often as possible
    let n = weights.len();
    let mut reduced = numerator.clone();
    let mut cancelled = 0;
    while reduced.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - s): q_k = sum_{j<=k} r_j
        let mut q = Vec::with_capacity(reduced.len() - 1);
        let mut acc = 0;
        for c in &reduced[..reduced.len() - 1] {
            acc += c;
            q.push(acc);
        }
        reduced = trim(q);
        cancelled += 1;
    }
    let deg_n = (numerator.len() - 1) as i64;
    let total: i64 = weights.iter().map(|&w| w as i64).sum();
    let a = Rational::new(deg_n - total, ring.weight_denominator() as i64);
    Ok(HilbertData {
        numerator,
        denominator_weights: weights,
        weight_denominator: ring.weight_denominator(),
        dimension: n - cancelled,
        reduced_numerator: reduced,
        a_invariant: a,
    })
}

/// a-invariant of a graded quotient, read off its Hilbert series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AInvariant {
    pub value: Rational,
    pub dimension: usize,
    pub hypotheses: Vec<Hypothesis>,
}

impl QuotientRing {
    pub fn hilbert(&self, engine: &Engine) -> Result<HilbertData> {
        hilbert_series(self.defining(), engine)
    }

    /// The a-invariant, valid when the ring is Cohen-Macaulay; that flag must
    /// be among `asserted` or the ring's own flags.
    pub fn a_invariant(&self, asserted: &HypothesisSet, engine: &Engine) -> Result<AInvariant> {
        let mut flags = self.flags().clone();
        flags.extend(asserted);
        flags.require(Hypothesis::CohenMacaulay)?;
        let h = self.hilbert(engine)?;
        Ok(AInvariant { value: h.a_invariant, dimension: h.dimension, hypotheses: vec![Hypothesis::CohenMacaulay] })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly_list;
    use crate::ring::PolyRing;

    #[test]
    fn polynomial_ring_in_one_variable() {
        let r = PolyRing::new(5, &["x"]).unwrap();
        let h = hilbert_series(&Ideal::zero(&r), &Engine::default()).unwrap();
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.a_invariant, Rational::from_integer(-1));
        assert_eq!(h.dimension, 1);
    }

    #[test]
    fn hypersurface_with_rational_weights() {
        let f = crate::field::PrimeField::new(7).unwrap();
        let r = PolyRing::with_weights(
            f,
            vec!["T".into(), "Y".into(), "Z".into()],
            vec![Rational::from_integer(1), Rational::new(4, 3), Rational::new(4, 3)],
        )
        .unwrap();
        let i = Ideal::new(&r, parse_poly_list("T^4 + Y*Z^2 - Y^2*Z", &r).unwrap()).unwrap();
        let h = hilbert_series(&i, &Engine::default()).unwrap();
        assert_eq!(h.a_invariant, Rational::new(1, 3));
        assert_eq!(h.dimension, 2);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = PolyRing::new(5, &["x", "y"]).unwrap();
        let i = Ideal::new(&r, parse_poly_list("x^2 - y", &r).unwrap()).unwrap();
        assert_eq!(hilbert_series(&i, &Engine::default()), Err(Error::NotHomogeneous));
    }

    #[test]
    fn a_invariant_requires_cohen_macaulay() {
        let r = PolyRing::new(5, &["x", "y"]).unwrap();
        let q = QuotientRing::polynomial(&r);
        let e = Engine::default();
        assert_eq!(
            q.a_invariant(&HypothesisSet::new(), &e),
            Err(Error::MissingHypothesis(Hypothesis::CohenMacaulay))
        );
        let a = q.a_invariant(&HypothesisSet::new().with(Hypothesis::CohenMacaulay), &e).unwrap();
        assert_eq!(a.value, Rational::from_integer(-2));
    }

    #[test]
    fn numerator_of_simple_monomial_ideals() {
        let w = [1, 1];
        // (x^2) -> 1 - s^2
        assert_eq!(monomial_numerator(&[Monomial::new(vec![2, 0])], &w), vec![1, 0, -1]);
        // (xy, x^2): N = 1 - 2 s^2 + s^3
        let n = monomial_numerator(&[Monomial::new(vec![1, 1]), Monomial::new(vec![2, 0])], &w);
        assert_eq!(n, vec![1, 0, -2, 1]);
    }
}
