//! Section rings `R(P^1, D) = ⊕ H^0(O(nD)) T^n` built level by level.
//!
//! A level-`n` element is a degree-zero rational function in `X, Y` whose
//! denominator is a product of the linear forms of support points. With
//! `[nD] = Σ m_i P_i` every section is `l_-·H / l_+` where `l_+ = Π_{m_i>0} l_i^{m_i}`,
//! `l_- = Π_{m_i<0} l_i^{-m_i}` and `H` is a form of degree `deg [nD]`; the
//! coefficients of `H` are its coordinates.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::divisor::{h0_dim, PointP1, QDivisor};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Rational};
use crate::poly::Polynomial;
use crate::ring::{Monomial, PolyRing};

#[derive(Debug, Clone, PartialEq)]
pub struct SectionElement {
    pub level: i64,
    pub numerator: Polynomial,
    /// Exponent of each linear form in the denominator.
    pub denominator: BTreeMap<PointP1, u32>,
}

impl SectionElement {
    /// The constant function 1 at `level` (at level 1 this is `T`, written `Y`).
    pub fn one(ring: &Arc<PolyRing>, level: i64) -> Self {
        SectionElement { level, numerator: Polynomial::one(ring), denominator: BTreeMap::new() }
    }

    /// `numerator / Π l_P^e` at `level`, with common linear factors cancelled.
    pub fn new(level: i64, numerator: Polynomial, denominator: BTreeMap<PointP1, u32>) -> Result<Self> {
        let ring = numerator.ring().clone();
        let mut num = numerator;
        let mut den = BTreeMap::new();
        for (pt, e) in denominator {
            let l = linear_form(&ring, &pt)?;
            let mut e = e;
            while e > 0 && !num.is_zero() {
                match num.div_exact(&l) {
                    Some(q) => {
                        num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e > 0 && !num.is_zero() {
                den.insert(pt, e);
            }
        }
        Ok(SectionElement { level, numerator: num, denominator: den })
    }

    pub fn mul(&self, other: &SectionElement) -> Result<SectionElement> {
        let mut den = self.denominator.clone();
        for (pt, e) in &other.denominator {
            *den.entry(pt.clone()).or_insert(0) += e;
        }
        SectionElement::new(self.level + other.level, self.numerator.checked_mul(&other.numerator)?, den)
    }

    /// The same function placed at another level.
    pub fn at_level(&self, level: i64) -> SectionElement {
        SectionElement { level, ..self.clone() }
    }

    pub fn denominator_poly(&self) -> Result<Polynomial> {
        let ring = self.numerator.ring();
        let mut d = Polynomial::one(ring);
        for (pt, e) in &self.denominator {
            d = d.checked_mul(&linear_form(ring, pt)?.pow(*e))?;
        }
        Ok(d)
    }

    /// `div(f)` found by scanning for roots over F_p; `None` when the
    /// numerator does not split into linear forms.
    pub fn divisor(&self) -> Option<QDivisor> {
        if self.numerator.is_zero() {
            return None;
        }
        let ring = self.numerator.ring();
        let p = ring.characteristic();
        let mut rest = self.numerator.clone();
        let mut div = QDivisor::zero();
        let points = (0..p as i64).map(PointP1::Affine).chain(std::iter::once(PointP1::Infinity));
        for pt in points {
            let l = linear_form(ring, &pt).ok()?;
            while let Some(q) = rest.div_exact(&l) {
                rest = q;
                div = div.plus_point(pt.clone(), Rational::from_integer(1));
            }
        }
        if !rest.is_constant() {
            return None;
        }
        for (pt, e) in &self.denominator {
            div = div.plus_point(pt.clone(), Rational::from_integer(-(*e as i64)));
        }
        Some(div)
    }
}

/// `X - αY` for `V(X - αY)` and `Y` for infinity, in the ring `F_p[X, Y]`.
pub fn linear_form(ring: &Arc<PolyRing>, pt: &PointP1) -> Result<Polynomial> {
    let x = Polynomial::var(ring, 0);
    let y = Polynomial::var(ring, 1);
    match pt {
        PointP1::Affine(a) => Ok(&x - &y.scale(ring.field().from_i64(*a))),
        PointP1::Infinity => Ok(y),
        PointP1::Formal(s) => Err(Error::Divisor(format!("formal point `{s}` has no linear form"))),
    }
}

/// Exact row echelon form over F_p, built one vector at a time.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Echelon { field, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = f.sub(*a, f.mul(c, *b));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    /// Adds `v`; false if it was already in the span.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let f = self.field;
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(v[pivot]);
        for c in v.iter_mut() {
            *c = f.mul(*c, inv);
        }
        self.rows.push((pivot, v));
        true
    }
}

/// `R(P^1, D)` over F_p, for a divisor supported on concrete points.
#[derive(Debug, Clone)]
pub struct SectionRing {
    divisor: QDivisor,
    ring: Arc<PolyRing>,
}

impl SectionRing {
    /// Affine points are read modulo `p`; they must stay distinct.
    pub fn new(d: &QDivisor, p: u64) -> Result<Self> {
        let ring = PolyRing::new(p, &["X", "Y"])?;
        let mut norm = QDivisor::zero();
        for (pt, c) in d.terms() {
            let pt = match pt {
                PointP1::Affine(a) => PointP1::Affine(a.rem_euclid(p as i64)),
                PointP1::Infinity => PointP1::Infinity,
                PointP1::Formal(s) => return Err(Error::Divisor(format!("formal point `{s}` needs a concrete value"))),
            };
            if norm.coefficient(&pt) != Rational::from_integer(0) {
                return Err(Error::Divisor(format!("points of {d} collide modulo {p}")));
            }
            norm = norm.plus_point(pt, *c);
        }
        if norm.support().len() != d.support().len() {
            return Err(Error::Divisor(format!("points of {d} collide modulo {p}")));
        }
        Ok(SectionRing { divisor: norm, ring })
    }

    pub fn divisor(&self) -> &QDivisor {
        &self.divisor
    }

    /// `F_p[X, Y]`, where numerators live.
    pub fn forms(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn level_divisor(&self, n: i64) -> QDivisor {
        self.divisor.scale(Rational::from_integer(n)).round_down()
    }

    pub fn dim(&self, n: i64) -> usize {
        h0_dim(&self.level_divisor(n)) as usize
    }

    fn split(&self, n: i64) -> Result<(Polynomial, Polynomial, BTreeMap<PointP1, u32>)> {
        let e = self.level_divisor(n);
        let mut plus = Polynomial::one(&self.ring);
        let mut minus = Polynomial::one(&self.ring);
        let mut den = BTreeMap::new();
        for (pt, m) in e.terms() {
            let m = m.to_integer();
            let l = linear_form(&self.ring, pt)?;
            if m > 0 {
                plus = &plus * &l.pow(m as u32);
                den.insert(pt.clone(), m as u32);
            } else {
                minus = &minus * &l.pow((-m) as u32);
            }
        }
        Ok((plus, minus, den))
    }

    /// The monomial basis `l_- X^(d-i) Y^i / l_+`, `i = 0..=d`, `d = deg [nD]`.
    pub fn basis(&self, n: i64) -> Result<Vec<SectionElement>> {
        let d = self.level_divisor(n).floor_degree();
        if d < 0 {
            return Ok(Vec::new());
        }
        let (_, minus, den) = self.split(n)?;
        (0..=d as u32)
            .map(|i| {
                let h = Polynomial::term(&self.ring, Monomial::new(vec![d as u32 - i, i]), 1);
                SectionElement::new(n, &minus * &h, den.clone())
            })
            .collect()
    }

    /// Coordinates of `f` in the level-`n` basis, or `None` if `f` is not a
    /// section of `O(nD)`. The level stored in `f` is ignored.
    pub fn coordinates(&self, f: &SectionElement, n: i64) -> Result<Option<Vec<u64>>> {
        let d = self.level_divisor(n).floor_degree();
        if f.numerator.is_zero() {
            return Ok((d >= 0).then(|| vec![0; d as usize + 1]));
        }
        let den_deg: u64 = f.denominator.values().map(|&e| e as u64).sum();
        if !f.numerator.is_homogeneous() || f.numerator.int_degree() != Some(den_deg) || d < 0 {
            return Ok(None);
        }
        let (plus, minus, _) = self.split(n)?;
        let Some(g) = f.numerator.checked_mul(&plus)?.div_exact(&f.denominator_poly()?) else {
            return Ok(None);
        };
        let Some(h) = g.div_exact(&minus) else {
            return Ok(None);
        };
        let mut v = vec![0; d as usize + 1];
        for (m, c) in h.terms() {
            v[m.exponents()[1] as usize] = *c;
        }
        Ok(Some(v))
    }

    pub fn is_section(&self, f: &SectionElement, n: i64) -> Result<bool> {
        Ok(self.coordinates(f, n)?.is_some())
    }

    /// Greedy algebra generators through level `n_max`. At each level the
    /// span of products of earlier generators is formed; then `preferred`
    /// elements of that level, followed by the basis, are added whenever they
    /// enlarge the span.
    pub fn generators_up_to(&self, n_max: i64, preferred: &[SectionElement]) -> Result<GradedAlgebraSketch> {
        let field = self.ring.field();
        let mut pieces: Vec<Vec<SectionElement>> = vec![vec![SectionElement::one(&self.ring, 0)]];
        let mut generators: Vec<SectionElement> = Vec::new();
        let mut levels = Vec::new();
        for n in 1..=n_max {
            let mut ech = Echelon::new(field);
            let mut piece = Vec::new();
            for g in &generators {
                for s in &pieces[(n - g.level) as usize] {
                    let prod = g.mul(s)?;
                    let v = self.coordinates(&prod, n)?.ok_or_else(|| {
                        Error::Divisor(format!("product at level {n} is not a section"))
                    })?;
                    if ech.insert(&v) {
                        piece.push(prod);
                    }
                }
            }
            let products_rank = ech.rank();
            let mut fresh = Vec::new();
            let candidates = preferred.iter().filter(|c| c.level == n).cloned().chain(self.basis(n)?);
            for c in candidates {
                let Some(v) = self.coordinates(&c, n)? else {
                    return Err(Error::Divisor(format!("candidate at level {n} is not a section")));
                };
                if ech.insert(&v) {
                    piece.push(c.clone());
                    fresh.push(c);
                }
            }
            levels.push(LevelSummary { level: n, dim: self.dim(n), products_rank, new_generators: fresh.len() });
            generators.extend(fresh);
            pieces.push(piece);
        }
        Ok(GradedAlgebraSketch { n_max, generators, levels })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSummary {
    pub level: i64,
    pub dim: usize,
    /// Rank of the span of products of lower-level generators.
    pub products_rank: usize,
    pub new_generators: usize,
}

/// Generators found through `n_max`; nothing is claimed beyond that level.
#[derive(Debug, Clone)]
pub struct GradedAlgebraSketch {
    pub n_max: i64,
    pub generators: Vec<SectionElement>,
    pub levels: Vec<LevelSummary>,
}

impl GradedAlgebraSketch {
    pub fn generator_levels(&self) -> Vec<i64> {
        self.generators.iter().map(|g| g.level).collect()
    }
}

pub fn section_basis(d: &QDivisor, n: i64, p: u64) -> Result<Vec<SectionElement>> {
    SectionRing::new(d, p)?.basis(n)
}

pub fn generators_up_to(d: &QDivisor, n_max: i64, p: u64) -> Result<GradedAlgebraSketch> {
    SectionRing::new(d, p)?.generators_up_to(n_max, &[])
}

/// `A_i = X / (X - α_i Y)` at level `n`.
pub fn family_generators(sr: &SectionRing, n: i64, alphas: &[i64]) -> Result<Vec<SectionElement>> {
    let p = sr.forms().characteristic() as i64;
    alphas
        .iter()
        .map(|&a| {
            let den = BTreeMap::from([(PointP1::Affine(a.rem_euclid(p)), 1)]);
            SectionElement::new(n, Polynomial::var(sr.forms(), 0), den)
        })
        .collect()
}

/// Outcome of checking `R/YR ≅ K[A_1..A_k]/(A_i A_j : i ≠ j)` through level `2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    /// `A_i A_j ∈ YR` for all `i ≠ j`.
    pub mixed_products_in_y: bool,
    /// `A_i^2 ∉ YR` for all `i`.
    pub squares_outside_y: bool,
    /// `A_i ∉ YR` for all `i`.
    pub generators_outside_y: bool,
    /// `YR_{n-1}` and the `A_i` span `R_n`; `YR_{2n-1}` and the `A_i^2` span `R_{2n}`.
    pub spans: bool,
    /// `(level, dim (R/YR)_level, dim of the expected quotient)`.
    pub quotient_dims: Vec<(i64, usize, usize)>,
}

impl FamilyCheck {
    pub fn holds(&self) -> bool {
        self.mixed_products_in_y
            && self.squares_outside_y
            && self.generators_outside_y
            && self.spans
            && self.quotient_dims.iter().all(|(_, a, b)| a == b)
    }
}

/// Checks the presentation of `R/YR` for `D = Σ (1/n) V(X - α_i Y)`.
pub fn verify_quotient_relations(n: u32, alphas: &[i64], p: u64) -> Result<FamilyCheck> {
    if n < 2 {
        return Err(Error::InvalidArgument("the family needs n >= 2".into()));
    }
    let sr = SectionRing::new(&crate::divisor::family_divisor(n, alphas), p)?;
    let n = n as i64;
    let a = family_generators(&sr, n, alphas)?;
    let k = a.len();

    let mut mixed = true;
    let mut squares = true;
    for i in 0..k {
        for j in 0..k {
            let prod = a[i].mul(&a[j])?;
            let in_y = sr.is_section(&prod, 2 * n - 1)?;
            if i == j {
                squares &= !in_y;
            } else {
                mixed &= in_y;
            }
        }
    }
    let mut outside = true;
    for g in &a {
        outside &= !sr.is_section(g, n - 1)?;
    }

    let mut spans = true;
    for (level, extra) in [(n, a.clone()), (2 * n, a.iter().map(|g| g.mul(g)).collect::<Result<Vec<_>>>()?)] {
        let mut ech = Echelon::new(sr.forms().field());
        for b in sr.basis(level - 1)? {
            if let Some(v) = sr.coordinates(&b, level)? {
                ech.insert(&v);
            }
        }
        for g in &extra {
            if let Some(v) = sr.coordinates(g, level)? {
                ech.insert(&v);
            }
        }
        spans &= ech.rank() == sr.dim(level);
    }

    let quotient_dims = (0..=2 * n)
        .map(|m| {
            let actual = if m == 0 { 1 } else { sr.dim(m) - sr.dim(m - 1) };
            let expected = if m == 0 {
                1
            } else if m % n == 0 {
                k
            } else {
                0
            };
            (m, actual, expected)
        })
        .collect();
    Ok(FamilyCheck { mixed_products_in_y: mixed, squares_outside_y: squares, generators_outside_y: outside, spans, quotient_dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::family_divisor;

    #[test]
    fn low_levels() {
        let d = family_divisor(2, &[1, 2, 3, 4, 5]);
        let sr = SectionRing::new(&d, 7).unwrap();
        assert_eq!(sr.basis(0).unwrap(), vec![SectionElement::one(sr.forms(), 0)]);
        assert_eq!(sr.basis(1).unwrap(), vec![SectionElement::one(sr.forms(), 1)]);
        assert_eq!(sr.basis(2).unwrap().len(), 6);
        for g in family_generators(&sr, 2, &[1, 2, 3, 4, 5]).unwrap() {
            assert!(sr.is_section(&g, 2).unwrap());
            assert!(!sr.is_section(&g, 1).unwrap());
        }
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::new(PrimeField::new(5).unwrap());
        assert!(e.insert(&[1, 2, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[2, 0, 1]));
        assert!(!e.insert(&[0, 0, 0]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[1, 3, 1]));
    }

    #[test]
    fn collisions_and_formal_points_are_rejected() {
        let d = family_divisor(2, &[1, 8]);
        assert!(SectionRing::new(&d, 7).is_err());
        let f = QDivisor::point(PointP1::Formal("P".into()), Rational::from_integer(1));
        assert!(SectionRing::new(&f, 7).is_err());
    }

    #[test]
    fn divisor_of_a_section() {
        let sr = SectionRing::new(&family_divisor(2, &[1, 2, 3]), 5).unwrap();
        let a = &family_generators(&sr, 2, &[1]).unwrap()[0];
        let div = a.divisor().unwrap();
        assert_eq!(div.coefficient(&PointP1::Affine(0)), Rational::from_integer(1));
        assert_eq!(div.coefficient(&PointP1::Affine(1)), Rational::from_integer(-1));
    }

    #[test]
    fn polynomial_ring_in_two_generators() {
        let d = QDivisor::point(PointP1::Infinity, Rational::from_integer(1));
        let sketch = generators_up_to(&d, 5, 5).unwrap();
        assert_eq!(sketch.generator_levels(), vec![1, 1]);
    }

    #[test]
    fn family_presentation() {
        assert!(verify_quotient_relations(2, &[1, 2, 3, 4, 5], 7).unwrap().holds());
        assert!(verify_quotient_relations(3, &[1, 2, 3, 4], 7).unwrap().holds());
    }
}
