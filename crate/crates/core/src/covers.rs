//! Divisorial ideals of graded quotient rings, symbolic powers, the order of
//! a class and degree bookkeeping for cyclic covers, with the resulting
//! dimension-two F-regularity and F-rationality verdicts.

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::frobenius::{Certificate, FrobeniusVerdict, Status};
use crate::groebner::Engine;
use crate::hypothesis::{Hypothesis, HypothesisSet};
use crate::ideal::{Ideal, QuotientRing};
use crate::poly::{Degree, Polynomial};

/// `(1/denominator) · numerator`, an ideal of a quotient ring `R = S/J`.
///
/// The numerator is kept as its preimage in `S` (so it contains `J`). An
/// element `g/denominator` has degree `deg g + degree_shift`; the shift
/// defaults to `-deg denominator` but may be set independently to encode a
/// twist.
#[derive(Debug, Clone)]
pub struct DivisorialIdeal {
    ring: QuotientRing,
    numerator: Ideal,
    denominator: Polynomial,
    degree_shift: Rational,
}

fn homogeneous_degree(f: &Polynomial) -> Result<Rational> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    match f.degree() {
        Degree::Finite(d) => Ok(d),
        Degree::NegInfinity => Err(Error::InvalidArgument("zero has no degree".into())),
    }
}

impl DivisorialIdeal {
    pub fn new(ring: &QuotientRing, generators: Vec<Polynomial>, denominator: Polynomial) -> Result<Self> {
        let denominator = denominator.to_ring(ring.ambient())?;
        let shift = -homogeneous_degree(&denominator)?;
        Ok(DivisorialIdeal { ring: ring.clone(), numerator: ring.lift(&generators)?, denominator, degree_shift: shift })
    }

    pub fn with_shift(mut self, shift: Rational) -> Self {
        self.degree_shift = shift;
        self
    }

    /// `ω ≅ R(a)` for a Gorenstein ring: the unit ideal whose generator has
    /// degree `-a`, with `a` read from the Hilbert series.
    pub fn canonical_from_hilbert(ring: &QuotientRing, engine: &Engine) -> Result<Self> {
        let a = ring.hilbert(engine)?.a_invariant;
        let one = Polynomial::one(ring.ambient());
        Ok(DivisorialIdeal::new(ring, vec![one.clone()], one)?.with_shift(-a))
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// Preimage of the numerator in the ambient ring.
    pub fn numerator(&self) -> &Ideal {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn degree_shift(&self) -> Rational {
        self.degree_shift
    }

    /// Reduced Gröbner basis elements of the numerator that are nonzero in `R`.
    pub fn numerator_generators(&self, engine: &Engine) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for g in self.numerator.gb(engine)?.elements() {
            if !self.ring.is_zero(g, engine)? {
                out.push(g.clone());
            }
        }
        Ok(out)
    }

    /// Equality of fractional ideals: `d' N = d N'` in `R` and equal shifts.
    pub fn equals(&self, other: &DivisorialIdeal, engine: &Engine) -> Result<bool> {
        if self.degree_shift != other.degree_shift {
            return Ok(false);
        }
        let scaled = |w: &DivisorialIdeal, c: &Polynomial| -> Result<Ideal> {
            let gens = w.numerator.generators().iter().map(|g| g.checked_mul(c)).collect::<Result<Vec<_>>>()?;
            w.ring.lift(&gens)
        };
        scaled(self, &other.denominator)?.equals(&scaled(other, &self.denominator)?, engine)
    }

    /// `W^(i)`: the numerator `N^i` saturated at `s`, over `denominator^i`.
    pub fn symbolic_power(&self, i: u32, s: &Polynomial, engine: &Engine) -> Result<DivisorialIdeal> {
        if i == 0 {
            return Err(Error::InvalidArgument("symbolic power must be at least 1".into()));
        }
        if s.is_zero() {
            return Err(Error::InvalidArgument("saturating element must be nonzero".into()));
        }
        let gens = self.numerator_generators(engine)?;
        let power = if gens.is_empty() {
            Ideal::zero(self.ring.ambient())
        } else {
            Ideal::new(self.ring.ambient(), gens)?.power(i)?
        };
        let lifted = self.ring.lift(power.generators())?;
        let saturated = lifted.saturate(s, engine)?;
        Ok(DivisorialIdeal {
            ring: self.ring.clone(),
            numerator: saturated,
            denominator: self.denominator.pow(i),
            degree_shift: self.degree_shift * Rational::from_integer(i as i64),
        })
    }

    /// Some `g` with numerator `= (g) + J`, searched among the reduced
    /// Gröbner basis and the given extra candidates. `None` does not prove
    /// the ideal is not principal.
    pub fn principal_generator(&self, extra: &[Polynomial], engine: &Engine) -> Result<Option<Polynomial>> {
        let mut candidates = self.numerator_generators(engine)?;
        for c in extra {
            let r = self.ring.reduce(c, engine)?;
            if !r.is_zero() && !candidates.contains(&r) {
                candidates.push(r);
            }
        }
        for g in candidates {
            if !g.is_homogeneous() {
                continue;
            }
            if self.ring.lift(std::slice::from_ref(&g))?.equals(&self.numerator, engine)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }
}

/// `W^(n) = u R` with `u = generator / denominator`.
#[derive(Debug, Clone)]
pub struct ClassOrder {
    pub order: u32,
    pub generator: Polynomial,
    pub denominator: Polynomial,
    pub deg_u: Rational,
}

/// Least `n <= n_max` with `W^(n)` principal (within the candidate search).
pub fn class_order(w: &DivisorialIdeal, n_max: u32, s: &Polynomial, engine: &Engine) -> Result<Option<ClassOrder>> {
    let base = w.numerator_generators(engine)?;
    for n in 1..=n_max {
        let wn = w.symbolic_power(n, s, engine)?;
        let extra: Vec<Polynomial> = base.iter().map(|g| g.pow(n)).collect();
        if let Some(g) = wn.principal_generator(&extra, engine)? {
            let deg_u = homogeneous_degree(&g)? + wn.degree_shift;
            return Ok(Some(ClassOrder { order: n, generator: g, denominator: wn.denominator, deg_u }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverStats {
    pub order: u32,
    pub deg_u: Rational,
    pub k: Rational,
    pub a_of_cover: Rational,
}

/// `k = deg u / n` and `a(S) = -k` for the cyclic cover of order `n`.
pub fn cyclic_cover_stats(n: u32, deg_u: Rational) -> Result<CoverStats> {
    if n == 0 {
        return Err(Error::InvalidArgument("cover order must be at least 1".into()));
    }
    let k = deg_u / Rational::from_integer(n as i64);
    Ok(CoverStats { order: n, deg_u, k, a_of_cover: -k })
}

#[derive(Debug, Clone)]
pub struct CoverReport {
    pub class: Option<ClassOrder>,
    pub stats: Option<CoverStats>,
    pub verdict: FrobeniusVerdict,
    pub hypotheses: Vec<Hypothesis>,
}

fn merged(ring: &QuotientRing, asserted: &HypothesisSet) -> HypothesisSet {
    let mut all = ring.flags().clone();
    all.extend(asserted);
    all
}

/// Either `derivation-bound` or its characteristic-zero stand-in.
fn require_derivation_bound(flags: &HypothesisSet) -> Result<Hypothesis> {
    if flags.contains(Hypothesis::DerivationBound) {
        Ok(Hypothesis::DerivationBound)
    } else if flags.contains(Hypothesis::LargeCharacteristic) {
        Ok(Hypothesis::LargeCharacteristic)
    } else {
        Err(Error::MissingHypothesis(Hypothesis::DerivationBound))
    }
}

/// F-regularity of a normal graded ring of dimension two from the canonical
/// class: with `ω^(n) = uR`, the ring is F-regular iff `deg u > 0`.
pub fn f_regular_verdict_dim2(
    ring: &QuotientRing,
    omega: &DivisorialIdeal,
    n_max: u32,
    s: &Polynomial,
    asserted: &HypothesisSet,
    engine: &Engine,
) -> Result<CoverReport> {
    let flags = merged(ring, asserted);
    let mut used = Vec::new();
    for h in [Hypothesis::Normal, Hypothesis::Dim2, Hypothesis::CoprimeOrder, Hypothesis::AvoidsMinimalPrimes] {
        flags.require(h)?;
        used.push(h);
    }
    used.push(require_derivation_bound(&flags)?);

    let Some(class) = class_order(omega, n_max, s, engine)? else {
        return Ok(CoverReport {
            class: None,
            stats: None,
            verdict: FrobeniusVerdict::new(Status::Inconclusive, Certificate::None).with_hypotheses(used.clone()),
            hypotheses: used,
        });
    };
    let stats = cyclic_cover_stats(class.order, class.deg_u)?;
    let p = ring.characteristic();
    let status = if (class.order as u64).gcd(&p) != 1 {
        Status::Inconclusive
    } else if class.deg_u.is_positive() {
        Status::FRegular
    } else {
        Status::NotFRegular
    };
    let verdict = FrobeniusVerdict::new(status, Certificate::Degree(class.deg_u)).with_hypotheses(used.clone());
    Ok(CoverReport { class: Some(class), stats: Some(stats), verdict, hypotheses: used })
}

/// A normal graded Cohen-Macaulay ring of dimension two is F-rational iff its
/// a-invariant is negative.
pub fn f_rational_verdict_dim2(ring: &QuotientRing, asserted: &HypothesisSet, engine: &Engine) -> Result<FrobeniusVerdict> {
    let flags = merged(ring, asserted);
    let mut used = Vec::new();
    for h in [Hypothesis::Normal, Hypothesis::Dim2, Hypothesis::CohenMacaulay] {
        flags.require(h)?;
        used.push(h);
    }
    used.push(require_derivation_bound(&flags)?);
    let a = ring.a_invariant(&flags, engine)?.value;
    let status = if a.is_negative() { Status::FRational } else { Status::NotFRational };
    Ok(FrobeniusVerdict::new(status, Certificate::Degree(a)).with_hypotheses(used))
}

/// Compares `a(S) = -deg u / n` with the Hilbert-series a-invariant of an
/// explicitly presented cover. Returns `(from degrees, from Hilbert series)`.
pub fn cover_cross_check(stats: &CoverStats, cover: &QuotientRing, engine: &Engine) -> Result<(Rational, Rational)> {
    Ok((stats.a_of_cover, cover.hilbert(engine)?.a_invariant))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_poly_list};
    use crate::ring::PolyRing;

    #[test]
    fn cover_bookkeeping() {
        let s = cyclic_cover_stats(3, Rational::from_integer(-1)).unwrap();
        assert_eq!(s.a_of_cover, Rational::new(1, 3));
        assert_eq!(cyclic_cover_stats(3, Rational::from_integer(0)).unwrap().a_of_cover, Rational::from_integer(0));
        assert_eq!(cyclic_cover_stats(1, Rational::from_integer(2)).unwrap().a_of_cover, Rational::from_integer(-2));
        assert!(cyclic_cover_stats(0, Rational::from_integer(1)).is_err());
    }

    #[test]
    fn polynomial_ring_is_f_regular() {
        let r = PolyRing::new(5, &["x", "y"]).unwrap();
        let q = QuotientRing::polynomial(&r);
        let e = Engine::default();
        let omega = DivisorialIdeal::canonical_from_hilbert(&q, &e).unwrap();
        assert_eq!(omega.degree_shift(), Rational::from_integer(2));
        let flags = HypothesisSet::parse_list("normal,dim2,coprime-order,avoids-minimal-primes,derivation-bound").unwrap();
        let x = parse_poly("x", &r).unwrap();
        let rep = f_regular_verdict_dim2(&q, &omega, 3, &x, &flags, &e).unwrap();
        assert_eq!(rep.verdict.status, Status::FRegular);
        assert_eq!(rep.class.unwrap().order, 1);
    }

    #[test]
    fn missing_hypotheses_are_errors() {
        let r = PolyRing::new(5, &["x", "y"]).unwrap();
        let q = QuotientRing::polynomial(&r);
        let e = Engine::default();
        let omega = DivisorialIdeal::canonical_from_hilbert(&q, &e).unwrap();
        let x = parse_poly("x", &r).unwrap();
        let flags = HypothesisSet::parse_list("normal,dim2,coprime-order,avoids-minimal-primes").unwrap();
        assert_eq!(
            f_regular_verdict_dim2(&q, &omega, 3, &x, &flags, &e).unwrap_err(),
            Error::MissingHypothesis(Hypothesis::DerivationBound)
        );
        let flags = HypothesisSet::parse_list("normal,dim2,large-char").unwrap();
        assert_eq!(f_rational_verdict_dim2(&q, &flags, &e).unwrap_err(), Error::MissingHypothesis(Hypothesis::CohenMacaulay));
    }

    #[test]
    fn principal_ideal_powers() {
        let r = PolyRing::new(7, &["x", "y"]).unwrap();
        let q = QuotientRing::polynomial(&r);
        let e = Engine::default();
        let w = DivisorialIdeal::new(&q, parse_poly_list("x + y", &r).unwrap(), Polynomial::one(&r)).unwrap();
        let y = parse_poly("y", &r).unwrap();
        let w3 = w.symbolic_power(3, &y, &e).unwrap();
        let expect = DivisorialIdeal::new(&q, parse_poly_list("(x + y)^3", &r).unwrap(), Polynomial::one(&r)).unwrap();
        assert!(w3.equals(&expect, &e).unwrap());
        let c = class_order(&w, 4, &y, &e).unwrap().unwrap();
        assert_eq!((c.order, c.deg_u), (1, Rational::from_integer(1)));
    }
}
