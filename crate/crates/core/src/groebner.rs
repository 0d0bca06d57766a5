//! Buchberger's algorithm and normal forms.
//!
//! Pairs are processed by the sugar strategy, which is the normal strategy
//! (least lcm degree first) on homogeneous input. The product and chain
//! criteria discard pairs. Ties are broken by lcm order and then by index so
//! the output is identical across runs.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{Monomial, PolyRing};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Configuration and counters shared by a sequence of computations.
///
/// The budget bounds the reduction steps of a single Buchberger run;
/// exceeding it yields [`Error::BudgetExceeded`], never a partial answer.
#[derive(Debug)]
pub struct Engine {
    budget: u64,
    pairs: AtomicU64,
    reductions: AtomicU64,
    bases: AtomicU64,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::with_budget(DEFAULT_BUDGET)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub bases: u64,
    pub pairs: u64,
    pub reductions: u64,
}

impl Engine {
    pub fn with_budget(budget: u64) -> Self {
        Engine { budget, pairs: AtomicU64::new(0), reductions: AtomicU64::new(0), bases: AtomicU64::new(0) }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats {
            bases: self.bases.load(AtomicOrdering::Relaxed),
            pairs: self.pairs.load(AtomicOrdering::Relaxed),
            reductions: self.reductions.load(AtomicOrdering::Relaxed),
        }
    }

    fn record(&self, pairs: u64, reductions: u64) {
        self.bases.fetch_add(1, AtomicOrdering::Relaxed);
        self.pairs.fetch_add(pairs, AtomicOrdering::Relaxed);
        self.reductions.fetch_add(reductions, AtomicOrdering::Relaxed);
    }
}

/// A reduced Gröbner basis, sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elements: Vec<Polynomial>,
    pub pairs_processed: u64,
    pub reductions: u64,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    /// The basis of the unit ideal is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

struct Reducer<'a> {
    budget: u64,
    steps: &'a mut u64,
}

impl Reducer<'_> {
    fn tick(&mut self) -> Result<()> {
        *self.steps += 1;
        if *self.steps > self.budget {
            Err(Error::BudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }
}

fn reduce(f: &Polynomial, divisors: &[Polynomial], mut counter: Option<&mut Reducer<'_>>) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut rest = f.clone();
    let mut remainder: Vec<(Monomial, u64)> = Vec::new();
    while let Some((m, c)) = rest.terms().first().cloned() {
        let hit = divisors.iter().find_map(|g| {
            let lm = g.leading_monomial()?;
            m.div(lm).map(|q| (g, q))
        });
        match hit {
            Some((g, q)) => {
                if let Some(r) = counter.as_deref_mut() {
                    r.tick()?;
                }
                let coef = field.mul(c, field.inv(g.leading_coefficient().unwrap()));
                rest = rest.sub_scaled_shift(coef, &q, g);
            }
            None => {
                remainder.push(rest.pop_leading().unwrap());
            }
        }
    }
    // remainder terms were emitted in descending order
    Ok(Polynomial::from_sorted_terms(&ring, remainder))
}

/// Fully reduces `f` by `divisors`, always using the first divisor (in list
/// order) whose leading monomial divides the current leading term.
///
/// The result has no term divisible by a leading monomial of `divisors` and
/// `f - result` lies in the ideal they generate.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    reduce(f, divisors, None).expect("unbudgeted reduction cannot fail")
}

/// The S-polynomial of `f` and `g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (Some(lf), Some(lg)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Polynomial::zero(f.ring());
    };
    let field = f.ring().field();
    let lcm = lf.lcm(lg);
    let a = f.mul_term(&lcm.div(lf).unwrap(), field.inv(f.leading_coefficient().unwrap()));
    let b = g.mul_term(&lcm.div(lg).unwrap(), field.inv(g.leading_coefficient().unwrap()));
    &a - &b
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens` in
/// `ring`'s monomial order. Zero generators are dropped.
pub fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial], engine: &Engine) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugars: Vec<u64> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut steps = 0u64;
    let mut processed = 0u64;

    let mut inputs = Vec::new();
    for g in gens {
        let g = g.to_ring(ring)?;
        if !g.is_zero() {
            inputs.push(g);
        }
    }

    let add = |h: Polynomial,
               sugar: u64,
               basis: &mut Vec<Polynomial>,
               sugars: &mut Vec<u64>,
               pairs: &mut Vec<Pair>,
               pending: &mut HashSet<(usize, usize)>| {
        let j = basis.len();
        let lj = h.leading_monomial().unwrap().clone();
        for (i, g) in basis.iter().enumerate() {
            let li = g.leading_monomial().unwrap();
            if li.is_coprime(&lj) {
                continue;
            }
            let lcm = li.lcm(&lj);
            let d = ring.int_degree(&lcm) as i64;
            let s = (sugars[i] as i64 + d - ring.int_degree(li) as i64)
                .max(sugar as i64 + d - ring.int_degree(&lj) as i64)
                .max(d);
            pairs.push(Pair { i, j, lcm, sugar: s as u64 });
            pending.insert((i, j));
        }
        basis.push(h);
        sugars.push(sugar);
    };

    for g in inputs {
        let sugar = g.int_degree().unwrap();
        let mut reducer = Reducer { budget: engine.budget, steps: &mut steps };
        let h = reduce(&g, &basis, Some(&mut reducer))?;
        if !h.is_zero() {
            add(h.monic(), sugar, &mut basis, &mut sugars, &mut pairs, &mut pending);
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| ring.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        pending.remove(&(pair.i, pair.j));

        // chain criterion
        let redundant = (0..basis.len()).any(|k| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && !pending.contains(&key(pair.i, k))
                && !pending.contains(&key(pair.j, k))
        });
        if redundant {
            continue;
        }

        processed += 1;
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let mut reducer = Reducer { budget: engine.budget, steps: &mut steps };
        let h = reduce(&s, &basis, Some(&mut reducer))?;
        if !h.is_zero() {
            add(h.monic(), pair.sugar, &mut basis, &mut sugars, &mut pairs, &mut pending);
        }
    }

    let elements = interreduce(ring, basis);
    engine.record(processed, steps);
    Ok(GroebnerBasis { ring: ring.clone(), elements, pairs_processed: processed, reductions: steps })
}

/// Minimalizes and reduces a Gröbner basis, sorting by ascending leading monomial.
fn interreduce(ring: &Arc<PolyRing>, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        reduced.push(normal_form(&minimal[i], &others).monic());
    }
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_poly_list};

    #[test]
    fn trivial_normal_forms() {
        let r = PolyRing::new(5, &["x", "y"]).unwrap();
        let x = parse_poly("x", &r).unwrap();
        assert!(normal_form(&parse_poly("x^2", &r).unwrap(), &[x]).is_zero());
        let f = parse_poly("x^2 + y", &r).unwrap();
        assert_eq!(normal_form(&f, &[]), f);
    }

    #[test]
    fn contradiction_witness_survives() {
        // Y^3 U is not in (V, Z)
        let r = PolyRing::new(5, &["u", "v", "y", "z"]).unwrap();
        let f = parse_poly("y^3*u", &r).unwrap();
        let g = parse_poly_list("v, z", &r).unwrap();
        assert_eq!(normal_form(&f, &g), f);
    }

    #[test]
    fn principal_monomial() {
        let r = PolyRing::new(3, &["x", "y"]).unwrap();
        let e = Engine::default();
        let gb = buchberger(&r, &[parse_poly("2*x", &r).unwrap(), Polynomial::zero(&r)], &e).unwrap();
        assert_eq!(gb.elements(), &[parse_poly("x", &r).unwrap()]);
    }

    #[test]
    fn twisted_cubic() {
        let r = PolyRing::new(32003, &["a", "b", "c", "d"]).unwrap();
        let gens = parse_poly_list("a*c - b^2, b*d - c^2, a*d - b*c", &r).unwrap();
        let gb = buchberger(&r, &gens, &Engine::default()).unwrap();
        assert_eq!(gb.elements().len(), 3);
        for f in gb.elements() {
            for g in gb.elements() {
                assert!(gb.normal_form(&s_polynomial(f, g)).is_zero());
            }
        }
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let r = PolyRing::new(32003, &["x", "y", "z"]).unwrap();
        let gens = parse_poly_list("x^3 - y*z + 1, y^3 - x*z^2, z^3 - x^2*y + x", &r).unwrap();
        let e = Engine::with_budget(5);
        assert_eq!(buchberger(&r, &gens, &e), Err(Error::BudgetExceeded { budget: 5 }));
    }

    #[test]
    fn unit_ideal() {
        let r = PolyRing::new(7, &["x", "y"]).unwrap();
        let gens = parse_poly_list("x*y - 1, x", &r).unwrap();
        let gb = buchberger(&r, &gens, &Engine::default()).unwrap();
        assert!(gb.is_unit());
    }
}
