//! Sparse polynomials over a prime field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{format_rational, Rational};
use crate::ring::{Monomial, PolyRing};

/// Weighted degree of a polynomial; the zero polynomial has degree −∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(Rational),
}

impl Degree {
    pub fn finite(self) -> Option<Rational> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => f.write_str(&format_rational(*d)),
        }
    }
}

/// A polynomial in canonical form: nonzero coefficients, terms strictly
/// descending in the ring's monomial order.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, u64)>,
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: u64) -> Self {
        let c = ring.field().reduce(c);
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i, 1), 1)
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, u64)>) -> Self {
        let f = ring.field();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = f.reduce(c);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, u64)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0).is_gt()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, u64)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<u64> {
        self.terms.first().map(|(_, c)| *c)
    }

    /// A single term with coefficient 1.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1 == 1
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, scale: u64) -> Polynomial {
        // self + scale * other
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), f.mul(b[j].1, scale)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].1, f.mul(b[j].1, scale));
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), f.mul(*c, scale))));
        out.retain(|(_, c)| *c != 0);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, 1))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let minus_one = self.ring.field().neg(1);
        Ok(self.merge(other, minus_one))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let f = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                terms.push((m.mul(n), f.mul(*c, *d)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// `self - c * m * g`, the basic reduction step.
    pub(crate) fn sub_scaled_shift(&self, c: u64, m: &Monomial, g: &Polynomial) -> Polynomial {
        let shifted = g.mul_term(m, c);
        let minus_one = self.ring.field().neg(1);
        self.merge(&shifted, minus_one)
    }

    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let f = self.ring.field();
        let c = f.reduce(c);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        // multiplication by a monomial preserves the order
        let terms = self.terms.iter().map(|(n, d)| (n.mul(m), f.mul(*d, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^q` for `q` a power of the characteristic, computed termwise
    /// since Frobenius is additive and fixes F_p.
    pub fn frobenius_power(&self, q: u64) -> Result<Polynomial> {
        self.ring.field().frobenius_exponent(q)?;
        let q = u32::try_from(q).map_err(|_| Error::InvalidArgument(format!("exponent {q} too large")))?;
        let terms = self.terms.iter().map(|(m, c)| (m.pow(q), *c)).collect();
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|(m, _)| self.ring.int_degree(m))
            .max()
            .map_or(Degree::NegInfinity, |d| {
                Degree::Finite(Rational::new(d as i64, self.ring.weight_denominator() as i64))
            })
    }

    /// Weighted degree scaled by the ring's weight denominator; `None` for zero.
    pub fn int_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| self.ring.int_degree(m)).max()
    }

    /// True iff all terms share one weighted degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| self.ring.int_degree(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn evaluate(&self, point: &[u64]) -> u64 {
        let f = self.ring.field();
        self.terms.iter().fold(0, |acc, (m, c)| {
            let v = m.exponents().iter().zip(point).fold(*c, |v, (&e, &x)| f.mul(v, f.pow(x, e as u64)));
            f.add(acc, v)
        })
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let map: Vec<Option<usize>> = self.ring.vars().iter().map(|v| target.var_index(v)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0; target.nvars()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x > 0 {
                    e[map[i].ok_or(Error::RingMismatch)?] = x;
                }
            }
            terms.push((Monomial::new(e), *c));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Exact division; `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        if g.is_zero() || !same_ring(&self.ring, &g.ring) {
            return None;
        }
        let f = self.ring.field();
        let (lm, lc) = g.terms[0].clone();
        let inv = f.inv(lc);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first().cloned() {
            let q = m.div(&lm)?;
            let qc = f.mul(c, inv);
            rest = rest.sub_scaled_shift(qc, &q, g);
            quotient.push((q, qc));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: quotient })
    }

    /// True iff every variable with index in `vars` is absent.
    pub fn avoids_vars(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|(m, _)| vars.iter().all(|&i| m.exponents()[i] == 0))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods when
// operands may come from different rings.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_poly(self))
    }
}
