//! Rational-coefficient Weil divisors on the projective line.
//!
//! Points are `V(X - αY)` for an integer `α` (read in F_p when a concrete
//! field is needed), formal named points used only for degree bookkeeping,
//! and the point at infinity `V(Y)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{floor, format_rational, Rational};
use crate::frobenius::{Certificate, FrobeniusVerdict, Status};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointP1 {
    /// `V(X - αY)`.
    Affine(i64),
    Formal(String),
    /// `V(Y)`.
    Infinity,
}

impl fmt::Display for PointP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointP1::Affine(0) => write!(f, "(X)"),
            PointP1::Affine(a) if *a > 0 => write!(f, "(X - {a}*Y)"),
            PointP1::Affine(a) => write!(f, "(X + {}*Y)", a.unsigned_abs()),
            PointP1::Formal(s) => write!(f, "{s}"),
            PointP1::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QDivisor {
    coeffs: BTreeMap<PointP1, Rational>,
}

impl QDivisor {
    pub fn zero() -> Self {
        QDivisor::default()
    }

    pub fn point(p: PointP1, c: Rational) -> Self {
        QDivisor::zero().plus_point(p, c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PointP1, Rational)>) -> Self {
        terms.into_iter().fold(QDivisor::zero(), |d, (p, c)| d.plus_point(p, c))
    }

    /// Adds `c` to the coefficient of `p`.
    pub fn plus_point(mut self, p: PointP1, c: Rational) -> Self {
        let entry = self.coeffs.entry(p.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&p);
        }
        self
    }

    pub fn coefficient(&self, p: &PointP1) -> Rational {
        self.coeffs.get(p).copied().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PointP1, &Rational)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<PointP1> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &QDivisor) -> QDivisor {
        other.terms().fold(self.clone(), |d, (p, c)| d.plus_point(p.clone(), *c))
    }

    pub fn sub(&self, other: &QDivisor) -> QDivisor {
        self.add(&other.scale(Rational::from_integer(-1)))
    }

    pub fn scale(&self, r: Rational) -> QDivisor {
        QDivisor::from_terms(self.terms().map(|(p, c)| (p.clone(), c * r)))
    }

    /// Sum of the coefficients.
    pub fn degree(&self) -> Rational {
        self.coeffs.values().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// `[D]`: coefficientwise floor.
    pub fn round_down(&self) -> QDivisor {
        QDivisor::from_terms(self.terms().map(|(p, c)| (p.clone(), Rational::from_integer(floor(*c)))))
    }

    /// `D'`: each coefficient with reduced denominator `q` becomes `(q - 1)/q`.
    pub fn frac_part(&self) -> QDivisor {
        QDivisor::from_terms(self.terms().map(|(p, c)| {
            let q = *c.denom();
            (p.clone(), Rational::new(q - 1, q))
        }))
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> i64 {
        self.coeffs.values().fold(1, |acc, c| acc.lcm(c.denom()))
    }

    /// Integer degree of `[D]`.
    pub fn floor_degree(&self) -> i64 {
        self.coeffs.values().map(|c| floor(*c)).sum()
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{p}", format_rational(*c))?;
        }
        Ok(())
    }
}

/// `h^0(P^1, O([D]))`.
pub fn h0_dim(d: &QDivisor) -> i64 {
    (d.floor_degree() + 1).max(0)
}

/// `h^1(P^1, O([D]))`, equal to `h^0(K - [D])`.
pub fn h1_dim(d: &QDivisor) -> i64 {
    (-d.floor_degree() - 1).max(0)
}

/// An integral divisor of degree -2 on the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalP1(QDivisor);

impl CanonicalP1 {
    /// `-2 V(Y)`.
    pub fn standard() -> Self {
        CanonicalP1(QDivisor::point(PointP1::Infinity, Rational::from_integer(-2)))
    }

    pub fn from_divisor(d: QDivisor) -> Result<Self> {
        if !d.is_integral() || d.degree() != Rational::from_integer(-2) {
            return Err(Error::Divisor(format!("{d} is not an integral divisor of degree -2")));
        }
        Ok(CanonicalP1(d))
    }

    pub fn divisor(&self) -> &QDivisor {
        &self.0
    }
}

impl Default for CanonicalP1 {
    fn default() -> Self {
        CanonicalP1::standard()
    }
}

/// Necessary condition for F-purity of the section ring of `d`: with
/// `δ = deg((1 - p)(K + D'))`, a negative `δ` forces the relevant `H^1` to
/// vanish, so the ring is not F-pure. Otherwise nothing is concluded.
pub fn fpure_obstruction(d: &QDivisor, p: u64) -> FrobeniusVerdict {
    fpure_obstruction_with(d, &CanonicalP1::standard(), p)
}

pub fn fpure_obstruction_with(d: &QDivisor, k: &CanonicalP1, p: u64) -> FrobeniusVerdict {
    let e = k.divisor().add(&d.frac_part()).scale(Rational::from_integer(1 - p as i64));
    let delta = e.degree();
    let status = if delta.is_negative() { Status::NotFPure } else { Status::Inconclusive };
    FrobeniusVerdict::new(status, Certificate::Degree(delta))
}

/// a-invariant of the section ring `R(P^1, D)`: the largest `n` with
/// `h^1(O(nD)) ≠ 0`, that is `deg [nD] <= -2`.
pub fn a_invariant_sectionring(d: &QDivisor) -> Result<i64> {
    let deg = d.degree();
    if !deg.is_positive() {
        return Err(Error::Divisor(format!("degree of {d} must be positive")));
    }
    let top = (d.frac_part().degree() + Rational::from_integer(2)) / deg;
    let mut n = floor(top) + d.denominator_lcm();
    loop {
        if d.scale(Rational::from_integer(n)).floor_degree() <= -2 {
            return Ok(n);
        }
        n -= 1;
    }
}

/// `Σ (1/n) V(X - α_i Y)`.
pub fn family_divisor(n: u32, alphas: &[i64]) -> QDivisor {
    QDivisor::from_terms(alphas.iter().map(|&a| (PointP1::Affine(a), Rational::new(1, n as i64))))
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, message: message.into() })
    }

    fn ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().unwrap().len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("`{c}`"));
            self.err(format!("expected `{c}`, found {found}"))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected integer");
        }
        self.pos += len;
        self.src[start..self.pos].parse().map_err(|_| Error::Parse { pos: start, message: "integer too large".into() })
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.ws();
        let rest = self.rest();
        if !rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return None;
        }
        let len = rest.bytes().take_while(|b| b.is_ascii_alphanumeric() || *b == b'_').count();
        self.pos += len;
        Some(&rest[..len])
    }

    /// `( X [(+|-) [int *] Y] )`, `inf` or a formal name.
    fn point(&mut self) -> Result<PointP1> {
        if self.eat('(') {
            let at = self.pos;
            if self.ident() != Some("X") {
                self.pos = at;
                return self.err("expected `X`");
            }
            let sign = if self.eat('-') {
                1
            } else if self.eat('+') {
                -1
            } else {
                self.expect(')')?;
                return Ok(PointP1::Affine(0));
            };
            let mut alpha = 1;
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                alpha = self.integer()?;
                self.expect('*')?;
            }
            let at = self.pos;
            if self.ident() != Some("Y") {
                self.pos = at;
                return self.err("expected `Y`");
            }
            self.expect(')')?;
            return Ok(PointP1::Affine(sign * alpha));
        }
        match self.ident() {
            Some("inf") => Ok(PointP1::Infinity),
            Some(name) => Ok(PointP1::Formal(name.to_string())),
            None => self.err("expected point"),
        }
    }

    /// `[-] int [/ int] * point`, or a bare point with coefficient 1.
    fn term(&mut self) -> Result<(PointP1, Rational)> {
        let negative = self.eat('-');
        let sign = if negative { -1 } else { 1 };
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.eat('/') {
                let at = self.pos;
                let d = self.integer()?;
                if d == 0 {
                    self.pos = at;
                    return self.err("zero denominator");
                }
                d
            } else {
                1
            };
            self.expect('*')?;
            Ok((self.point()?, Rational::new(sign * num, den)))
        } else {
            Ok((self.point()?, Rational::from_integer(sign)))
        }
    }
}

/// Parses `1/2*(X - 1*Y) + 2/3*(X - 3*Y) + -2*inf`; `0` is the zero divisor.
pub fn parse_divisor(text: &str) -> Result<QDivisor> {
    let mut lx = Lexer { src: text, pos: 0 };
    if lx.peek() == Some('0') {
        lx.pos += 1;
        if lx.peek().is_none() {
            return Ok(QDivisor::zero());
        }
        lx.pos -= 1;
    }
    let mut d = QDivisor::zero();
    loop {
        let (p, c) = lx.term()?;
        d = d.plus_point(p, c);
        if lx.eat('+') {
            continue;
        }
        if lx.peek() == Some('-') {
            continue;
        }
        match lx.peek() {
            None => return Ok(d),
            Some(c) => return lx.err(format!("expected `+`, found `{c}`")),
        }
    }
}

impl FromStr for QDivisor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_divisor(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;
    use proptest::prelude::*;

    fn two_point() -> QDivisor {
        QDivisor::from_terms([(PointP1::Affine(1), rational(1, 2)), (PointP1::Affine(3), rational(2, 3))])
    }

    #[test]
    fn arithmetic_and_degree() {
        let d = two_point();
        assert!(d.add(&d.scale(rational(-1, 1))).is_zero());
        assert_eq!(d.degree(), rational(7, 6));
        assert_eq!(family_divisor(2, &[1, 2, 3, 4, 5]).degree(), rational(5, 2));
    }

    #[test]
    fn rounding_and_fractional_part() {
        let d = two_point();
        assert!(d.round_down().is_zero());
        assert_eq!(d.frac_part(), d);
        let third = QDivisor::point(PointP1::Formal("P".into()), rational(1, 3));
        assert_eq!(third.frac_part().coefficient(&PointP1::Formal("P".into())), rational(2, 3));
        for n in 1..=12 {
            let nd = d.scale(rational(n, 1));
            assert_eq!(nd.scale(rational(-1, 1)).round_down().scale(rational(-1, 1)), nd.add(&d.frac_part()).round_down());
        }
    }

    #[test]
    fn cohomology_dimensions() {
        assert_eq!((h0_dim(&QDivisor::zero()), h1_dim(&QDivisor::zero())), (1, 0));
        let k = CanonicalP1::standard();
        assert_eq!((h0_dim(k.divisor()), h1_dim(k.divisor())), (0, 1));
        let d = QDivisor::point(PointP1::Infinity, rational(3, 1));
        assert_eq!((h0_dim(&d), h1_dim(&d)), (4, 0));
    }

    #[test]
    fn obstruction_signs() {
        let v = fpure_obstruction(&family_divisor(2, &[1, 2, 3, 4, 5]), 3);
        assert_eq!(v.status, Status::NotFPure);
        assert_eq!(v.certificate, Certificate::Degree(rational(-1, 1)));
        assert_eq!(fpure_obstruction(&family_divisor(2, &[1, 2, 3, 4]), 5).status, Status::Inconclusive);
        let v = fpure_obstruction(&QDivisor::zero(), 5);
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(v.certificate, Certificate::Degree(rational(8, 1)));
    }

    #[test]
    fn section_ring_a_invariants() {
        assert_eq!(a_invariant_sectionring(&family_divisor(2, &[1, 2, 3, 4, 5])), Ok(-1));
        assert_eq!(a_invariant_sectionring(&QDivisor::point(PointP1::Infinity, rational(1, 1))), Ok(-2));
        assert_eq!(a_invariant_sectionring(&QDivisor::point(PointP1::Infinity, rational(2, 1))), Ok(-1));
        assert!(a_invariant_sectionring(&QDivisor::zero()).is_err());
    }

    #[test]
    fn canonical_representative_is_checked() {
        assert!(CanonicalP1::from_divisor(QDivisor::point(PointP1::Infinity, rational(-1, 1))).is_err());
        let k = parse_divisor("-1*(X - 1*Y) + -1*(X - 2*Y)").unwrap();
        assert!(CanonicalP1::from_divisor(k).is_ok());
    }

    #[test]
    fn literal_syntax() {
        let d = parse_divisor("1/2*(X - 1*Y) + 2/3*(X - 3*Y) + -2*inf").unwrap();
        assert_eq!(d.coefficient(&PointP1::Infinity), rational(-2, 1));
        assert_eq!(d.degree(), rational(-5, 6));
        assert_eq!(parse_divisor(&d.to_string()).unwrap(), d);
        let e = parse_divisor("(X) + (X + 2*Y) - 1/4*P_1 + (X - Y)").unwrap();
        assert_eq!(e.coefficient(&PointP1::Affine(-2)), rational(1, 1));
        assert_eq!(e.coefficient(&PointP1::Affine(0)), rational(1, 1));
        assert_eq!(e.coefficient(&PointP1::Affine(1)), rational(1, 1));
        assert_eq!(e.coefficient(&PointP1::Formal("P_1".into())), rational(-1, 4));
        assert!(parse_divisor("0").unwrap().is_zero());
        assert!(matches!(parse_divisor("1/0*inf"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_divisor("1/2*(Z - Y)"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_divisor("1/2*inf 3"), Err(Error::Parse { .. })));
    }

    fn arb_divisor() -> impl Strategy<Value = QDivisor> {
        prop::collection::vec((0i64..7, -12i64..12, 1i64..7), 0..6).prop_map(|v| {
            QDivisor::from_terms(v.into_iter().map(|(a, n, d)| (PointP1::Affine(a), rational(n, d))))
        })
    }

    proptest! {
        #[test]
        fn riemann_roch(d in arb_divisor()) {
            prop_assert_eq!(h0_dim(&d) - h1_dim(&d), d.floor_degree() + 1);
        }

        #[test]
        fn floor_degree_bounds(d in arb_divisor()) {
            let fractional = d.terms().filter(|(_, c)| !c.is_integer()).count() as i64;
            let deg = d.degree();
            prop_assert!(Rational::from_integer(d.floor_degree()) <= deg);
            prop_assert!(deg < Rational::from_integer(d.floor_degree() + fractional) || fractional == 0 && deg == Rational::from_integer(d.floor_degree()));
        }

        #[test]
        fn display_round_trips(d in arb_divisor()) {
            prop_assert_eq!(parse_divisor(&d.to_string()).unwrap(), d);
        }
    }
}
