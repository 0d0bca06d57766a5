//! Text form of polynomials.
//!
//! Grammar: identifiers `[A-Za-z][A-Za-z0-9_]*`, non-negative integer
//! literals, binary `+ - *`, exponentiation `^` by an integer literal,
//! unary minus and parentheses. `^` binds tightest, then unary minus, then
//! `*`, then `+`/`-`. Whitespace is ignored. Error positions are byte offsets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{Monomial, PolyRing};

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn found(&mut self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(_) => {
                let c = self.src[self.pos..].chars().next().unwrap();
                format!("`{c}`")
            }
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                let found = self.found();
                return self.err(start, format!("expected exponent, found {found}"));
            }
            let e: u32 = match digits.parse() {
                Ok(e) => e,
                Err(_) => return self.err(start, "exponent too large"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    let pos = self.pos;
                    let found = self.found();
                    return self.err(pos, format!("expected `)`, found {found}"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let field = self.ring.field();
                let value = self
                    .digits()
                    .bytes()
                    .fold(0u64, |acc, d| field.add(field.mul(acc, 10 % field.characteristic()), field.reduce((d - b'0') as u64)));
                Ok(Polynomial::term(self.ring, Monomial::one(self.ring.nvars()), value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let begin = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.src[begin..self.pos];
                match self.ring.resolve_var(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable { name: name.to_string(), pos: begin }),
                }
            }
            _ => {
                let pos = self.pos;
                let found = self.found();
                self.err(pos, format!("expected variable, integer or `(`, found {found}"))
            }
        }
    }
}

/// Parses `text` into a polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut p = Parser { src: text, bytes: text.as_bytes(), pos: 0, ring };
    let f = p.expr()?;
    if p.peek().is_some() {
        let pos = p.pos;
        let found = p.found();
        return p.err(pos, format!("expected operator, found {found}"));
    }
    Ok(f)
}

/// Parses a comma separated list of polynomials (blank entries are skipped).
pub fn parse_poly_list(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        if !piece.trim().is_empty() {
            let f = parse_poly(piece, ring).map_err(|e| shift_position(e, offset))?;
            out.push(f);
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn shift_position(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { pos, message } => Error::Parse { pos: pos + offset, message },
        Error::UnknownVariable { name, pos } => Error::UnknownVariable { name, pos: pos + offset },
        other => other,
    }
}

/// Canonical text form; coefficients use the symmetric range `(-p/2, p/2]`.
pub fn format_poly(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let ring = f.ring();
    let field = ring.field();
    let mut out = String::new();
    for (i, (m, c)) in f.terms().iter().enumerate() {
        let c = field.to_symmetric(*c);
        let (neg, abs) = (c < 0, c.unsigned_abs());
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs == 1 {
            out.push_str(&ring.format_monomial(m));
        } else {
            out.push_str(&format!("{abs}*{}", ring.format_monomial(m)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(7, &["T", "U", "V", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_relations() {
        let r = ring();
        let f = parse_poly("T^8 - U*V", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(parse_poly("y^0", &r).unwrap(), Polynomial::one(&r));
        assert_eq!(parse_poly("-y^2", &r).unwrap(), -&parse_poly("y*y", &r).unwrap());
        assert_eq!(parse_poly("10", &r).unwrap(), Polynomial::constant(&r, 3));
        assert!(parse_poly("0*y", &r).unwrap().is_zero());
    }

    #[test]
    fn round_trip() {
        let r = ring();
        let f = parse_poly("y^2*(U^2-z^4)", &r).unwrap();
        let text = format_poly(&f);
        assert_eq!(parse_poly(&text, &r).unwrap(), f);
        assert_eq!(text, "-y^2*z^4 + U^2*y^2");
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        assert_eq!(
            parse_poly("y + * z", &r),
            Err(Error::Parse { pos: 4, message: "expected variable, integer or `(`, found `*`".into() })
        );
        assert_eq!(parse_poly("y + q", &r), Err(Error::UnknownVariable { name: "q".into(), pos: 4 }));
        assert!(matches!(parse_poly("(y + z", &r), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(parse_poly("y^", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("y z", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("", &r), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn lists() {
        let r = ring();
        let l = parse_poly_list("U*V, U*z ,z*(V-y^2)", &r).unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(parse_poly_list("U, w", &r), Err(Error::UnknownVariable { name: "w".into(), pos: 3 }));
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u32>, u64)>> {
        prop::collection::vec((prop::collection::vec(0u32..4, 5), 0u64..7), 0..6)
    }

    proptest! {
        #[test]
        fn format_then_parse_is_identity(terms in arb_poly()) {
            let r = ring();
            let f = Polynomial::from_terms(&r, terms.into_iter().map(|(e, c)| (Monomial::new(e), c)).collect());
            prop_assert_eq!(parse_poly(&format_poly(&f), &r).unwrap(), f);
        }
    }
}
