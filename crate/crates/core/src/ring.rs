//! Weighted polynomial rings, monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{is_positive, PrimeField, Rational};

/// Exponent vector, one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }
}

/// Monomial orders. Every order first compares (blockwise) weighted degree
/// and breaks ties reverse-lexicographically in the declared variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    /// Consecutive variable blocks of the given sizes; an earlier block
    /// dominates every later one. Used for elimination.
    Blocks(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    weights: Vec<Rational>,
    int_weights: Vec<u64>,
    weight_denominator: u64,
    order: MonomialOrder,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// Standard-graded ring over F_p with degree reverse-lex order.
    pub fn new(p: u64, vars: &[&str]) -> Result<Arc<PolyRing>> {
        let weights = vec![Rational::from_integer(1); vars.len()];
        Self::with_weights(PrimeField::new(p)?, vars.iter().map(|s| s.to_string()).collect(), weights)
    }

    pub fn with_weights(field: PrimeField, vars: Vec<String>, weights: Vec<Rational>) -> Result<Arc<PolyRing>> {
        Self::with_order(field, vars, weights, MonomialOrder::DegRevLex)
    }

    pub fn with_order(
        field: PrimeField,
        vars: Vec<String>,
        weights: Vec<Rational>,
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing>> {
        if vars.len() != weights.len() {
            return Err(Error::InvalidRing("one weight per variable is required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let Some(w) = weights.iter().find(|w| !is_positive(w)) {
            return Err(Error::InvalidRing(format!("weight {w} is not positive")));
        }
        if let MonomialOrder::Blocks(sizes) = &order {
            if sizes.iter().sum::<usize>() != vars.len() || sizes.contains(&0) {
                return Err(Error::InvalidRing("block sizes must be positive and cover all variables".into()));
            }
        }
        let denom = weights.iter().fold(1i64, |acc, w| acc.lcm(w.denom())) as u64;
        let int_weights = weights
            .iter()
            .map(|w| (w * Rational::from_integer(denom as i64)).to_integer() as u64)
            .collect();
        Ok(Arc::new(PolyRing { field, vars, weights, int_weights, weight_denominator: denom, order }))
    }

    /// Same variables and weights under a different order.
    pub fn reordered(&self, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        Self::with_order(self.field, self.vars.clone(), self.weights.clone(), order)
    }

    /// Prepends fresh variables (unit weight) and uses an order in which
    /// they form an eliminating block.
    pub fn with_elimination_prefix(&self, names: &[&str]) -> Result<Arc<PolyRing>> {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        let mut weights = vec![Rational::from_integer(1); names.len()];
        weights.extend(self.weights.iter().cloned());
        Self::with_order(self.field, vars, weights, MonomialOrder::Blocks(vec![names.len(), self.vars.len()]))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Weights scaled by the common denominator.
    pub fn int_weights(&self) -> &[u64] {
        &self.int_weights
    }

    pub fn weight_denominator(&self) -> u64 {
        self.weight_denominator
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Exact lookup, falling back to a unique case-insensitive match so the
    /// lowercase images `u, v, y` of presentation variables `U, V, Y` parse.
    pub fn resolve_var(&self, name: &str) -> Option<usize> {
        self.var_index(name).or_else(|| {
            let mut hits = self.vars.iter().enumerate().filter(|(_, v)| v.eq_ignore_ascii_case(name));
            match (hits.next(), hits.next()) {
                (Some((i, _)), None) => Some(i),
                _ => None,
            }
        })
    }

    /// Weighted degree scaled by [`weight_denominator`](Self::weight_denominator).
    #[inline]
    pub fn int_degree(&self, m: &Monomial) -> u64 {
        m.0.iter().zip(&self.int_weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    pub fn degree(&self, m: &Monomial) -> Rational {
        Rational::new(self.int_degree(m) as i64, self.weight_denominator as i64)
    }

    fn block_cmp(&self, a: &[u32], b: &[u32], w: &[u64]) -> Ordering {
        let da: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
        let db: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w).sum();
        da.cmp(&db).then_with(|| {
            for (x, y) in a.iter().zip(b).rev() {
                if x != y {
                    // smaller exponent in the last differing variable is larger
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        })
    }

    /// Compares monomials in this ring's order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.order {
            MonomialOrder::DegRevLex => self.block_cmp(&a.0, &b.0, &self.int_weights),
            MonomialOrder::Blocks(sizes) => {
                let mut start = 0;
                for &len in sizes {
                    let r = start..start + len;
                    let o = self.block_cmp(&a.0[r.clone()], &b.0[r.clone()], &self.int_weights[r]);
                    if o != Ordering::Equal {
                        return o;
                    }
                    start += len;
                }
                Ordering::Equal
            }
        }
    }

    /// Whether two rings share variables, weights and field (orders may differ).
    pub fn same_variables(&self, other: &PolyRing) -> bool {
        self.field == other.field && self.vars == other.vars && self.weights == other.weights
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .zip(&self.vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[", self.characteristic())?;
        for (i, (v, w)) in self.vars.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}:{w}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_basics() {
        let r = PolyRing::new(5, &["x", "y", "z"]).unwrap();
        // degree first
        assert_eq!(r.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        // x > y > z
        assert_eq!(r.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // revlex: xz < y^2
        assert_eq!(r.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(r.cmp(&m(&[1, 1, 0]), &m(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn rational_weights_are_cleared() {
        let f = PrimeField::new(7).unwrap();
        let r = PolyRing::with_weights(
            f,
            vec!["t".into(), "y".into(), "z".into()],
            vec![Rational::from_integer(1), Rational::new(4, 3), Rational::new(4, 3)],
        )
        .unwrap();
        assert_eq!(r.int_weights(), &[3, 4, 4]);
        assert_eq!(r.weight_denominator(), 3);
        assert_eq!(r.degree(&m(&[0, 1, 2])), Rational::from_integer(4));
    }

    #[test]
    fn elimination_blocks_dominate() {
        let r = PolyRing::new(3, &["x", "y"]).unwrap();
        let e = r.with_elimination_prefix(&["t"]).unwrap();
        assert_eq!(e.vars(), &["t".to_string(), "x".into(), "y".into()]);
        // t beats any power of x, y
        assert_eq!(e.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
    }

    #[test]
    fn rejects_bad_rings() {
        assert!(PolyRing::new(4, &["x"]).is_err());
        assert!(PolyRing::new(5, &["x", "x"]).is_err());
        assert!(PolyRing::new(5, &["1x"]).is_err());
        let f = PrimeField::new(5).unwrap();
        assert!(PolyRing::with_weights(f, vec!["x".into()], vec![Rational::from_integer(0)]).is_err());
    }

    #[test]
    fn case_insensitive_fallback() {
        let r = PolyRing::new(5, &["U", "V", "y"]).unwrap();
        assert_eq!(r.resolve_var("u"), Some(0));
        assert_eq!(r.resolve_var("Y"), Some(2));
        let r2 = PolyRing::new(5, &["a", "A"]).unwrap();
        assert_eq!(r2.resolve_var("a"), Some(0));
        assert_eq!(r2.resolve_var("A"), Some(1));
    }
}
