//! Frobenius powers of ideals, bounded Frobenius-closure search, Fedder's
//! F-purity criterion and tight-closure evidence.
//!
//! Ideals of a quotient `R = S/J` are passed as the quotient together with
//! generators in `S`; `I^[q]` in `R` lifts to `(g^q : g in gens) + J`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::groebner::Engine;
use crate::hypothesis::Hypothesis;
use crate::ideal::{Ideal, QuotientRing};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    InIdeal,
    InFrobeniusClosureAt(u32),
    NotDetectedUpTo(u32),
    FPure,
    NotFPure,
    FRegular,
    NotFRegular,
    FRational,
    NotFRational,
    Inconclusive,
}

impl Status {
    /// False for the two outcomes that settle nothing.
    pub fn is_decided(self) -> bool {
        !matches!(self, Status::NotDetectedUpTo(_) | Status::Inconclusive)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::InIdeal => write!(f, "InIdeal"),
            Status::InFrobeniusClosureAt(e) => write!(f, "InFrobeniusClosureAt({e})"),
            Status::NotDetectedUpTo(e) => write!(f, "NotDetectedUpTo({e})"),
            Status::FPure => write!(f, "FPure"),
            Status::NotFPure => write!(f, "NotFPure"),
            Status::FRegular => write!(f, "FRegular"),
            Status::NotFRegular => write!(f, "NotFRegular"),
            Status::FRational => write!(f, "FRational"),
            Status::NotFRational => write!(f, "NotFRational"),
            Status::Inconclusive => write!(f, "Inconclusive"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    None,
    /// Normal form of the tested element against the relevant ideal.
    NormalForm(Polynomial),
    /// An element of `J^[p] : J` with a term outside `m^[p]`.
    ColonGenerator(Polynomial),
    /// Generators of `J^[p] : J`, each lying in `m^[p]`.
    ColonContained(Vec<Polynomial>),
    /// A rational quantity whose sign decides the verdict.
    Degree(Rational),
    /// Per-exponent outcomes of `c f^q ∈ I^[q]`.
    Evidence(Vec<(u32, bool)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusVerdict {
    pub status: Status,
    pub certificate: Certificate,
    pub hypotheses: Vec<Hypothesis>,
}

impl FrobeniusVerdict {
    pub fn new(status: Status, certificate: Certificate) -> Self {
        FrobeniusVerdict { status, certificate, hypotheses: Vec::new() }
    }

    pub fn with_hypotheses(mut self, hypotheses: Vec<Hypothesis>) -> Self {
        self.hypotheses = hypotheses;
        self
    }
}

/// Generators `g^q` for `q` a power of the characteristic.
pub fn bracket_generators(gens: &[Polynomial], q: u64) -> Result<Vec<Polynomial>> {
    gens.iter().map(|g| g.frobenius_power(q)).collect()
}

/// `I^[q]` for an ideal of a polynomial ring.
pub fn bracket_power(ideal: &Ideal, q: u64) -> Result<Ideal> {
    ideal.ring().field().frobenius_exponent(q)?;
    Ideal::new(ideal.ring(), bracket_generators(ideal.generators(), q)?)
}

/// Lift of `(gens)^[q]` from the quotient `ring`.
pub fn bracket_power_in(ring: &QuotientRing, gens: &[Polynomial], q: u64) -> Result<Ideal> {
    ring.ambient().field().frobenius_exponent(q)?;
    ring.lift(&bracket_generators(gens, q)?)
}

/// Least `e <= e_max` with `f^(p^e) ∈ I^[p^e]` in `ring`, where `I = (gens)`.
pub fn frobenius_closure_member(
    ring: &QuotientRing,
    f: &Polynomial,
    gens: &[Polynomial],
    e_max: u32,
    engine: &Engine,
) -> Result<FrobeniusVerdict> {
    if e_max == 0 {
        return Err(Error::InvalidArgument("e_max must be at least 1".into()));
    }
    let direct = ring.member(f, gens, engine)?;
    if direct.member {
        return Ok(FrobeniusVerdict::new(Status::InIdeal, Certificate::NormalForm(direct.normal_form)));
    }
    let p = ring.characteristic();
    let mut last = direct.normal_form;
    let mut q = 1u64;
    for e in 1..=e_max {
        q = q
            .checked_mul(p)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidArgument(format!("p^{e} is too large")))?;
        let lifted = bracket_power_in(ring, gens, q)?;
        let m = lifted.member(&f.frobenius_power(q)?, engine)?;
        if m.member {
            return Ok(FrobeniusVerdict::new(Status::InFrobeniusClosureAt(e), Certificate::NormalForm(m.normal_form)));
        }
        last = m.normal_form;
    }
    Ok(FrobeniusVerdict::new(Status::NotDetectedUpTo(e_max), Certificate::NormalForm(last)))
}

/// Part of `f` outside `m^[p]`: the terms with every exponent below `p`.
pub fn outside_frobenius_maximal(f: &Polynomial, p: u64) -> Polynomial {
    let terms = f
        .terms()
        .iter()
        .filter(|(m, _)| m.exponents().iter().all(|&e| (e as u64) < p))
        .cloned()
        .collect();
    Polynomial::from_terms(f.ring(), terms)
}

/// Fedder's criterion at the origin: `S/J` is F-pure there iff
/// `(J^[p] : J) ⊄ m^[p]`, with `m` the ideal of all variables.
pub fn fedder_is_f_pure(j: &Ideal, engine: &Engine) -> Result<FrobeniusVerdict> {
    let p = j.ring().characteristic();
    let colon = bracket_power(j, p)?.colon(j, engine)?.interreduced(engine)?;
    for g in colon.generators() {
        if !outside_frobenius_maximal(g, p).is_zero() {
            return Ok(FrobeniusVerdict::new(Status::FPure, Certificate::ColonGenerator(g.clone())));
        }
    }
    Ok(FrobeniusVerdict::new(Status::NotFPure, Certificate::ColonContained(colon.generators().to_vec())))
}

/// Fast path: quotients by square-free monomial ideals are F-pure.
pub fn squarefree_monomial_fpure(j: &Ideal) -> FrobeniusVerdict {
    let ok = j
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .all(|g| g.is_monomial() && g.leading_monomial().is_some_and(|m| m.is_squarefree()));
    let status = if ok { Status::FPure } else { Status::Inconclusive };
    FrobeniusVerdict::new(status, Certificate::None)
}

/// Checks `c f^q ∈ I^[q]` for `q = p^e`, `e` in `e_min..=e_max`.
///
/// The result is always `Inconclusive`: a finite run of checks neither proves
/// nor refutes tight-closure membership. The per-exponent outcomes are the
/// certificate and `c ∈ R°` is recorded as an assumption.
pub fn tight_closure_witness(
    ring: &QuotientRing,
    f: &Polynomial,
    gens: &[Polynomial],
    c: &Polynomial,
    e_min: u32,
    e_max: u32,
    engine: &Engine,
) -> Result<FrobeniusVerdict> {
    if ring.is_zero(c, engine)? {
        return Err(Error::InvalidArgument("the multiplier c must be nonzero".into()));
    }
    if e_min > e_max {
        return Err(Error::InvalidArgument("e_min exceeds e_max".into()));
    }
    let p = ring.characteristic();
    let mut checks = Vec::new();
    for e in e_min..=e_max {
        let q = (p as u128).pow(e);
        if q > u32::MAX as u128 {
            return Err(Error::InvalidArgument(format!("p^{e} is too large")));
        }
        let q = q as u64;
        let lifted = bracket_power_in(ring, gens, q)?;
        let g = c.checked_mul(&f.frobenius_power(q)?)?;
        checks.push((e, lifted.contains(&g, engine)?));
    }
    Ok(FrobeniusVerdict::new(Status::Inconclusive, Certificate::Evidence(checks))
        .with_hypotheses(vec![Hypothesis::InRCirc]))
}
