//! Ideals of polynomial rings and of their quotients.
//!
//! Ideals of a quotient `S/J` are always handled through their preimages in
//! `S`: an ideal of the quotient is the ideal of `S` generated by lifts of its
//! generators together with the generators of `J`.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Engine, GroebnerBasis};
use crate::hypothesis::HypothesisSet;
use crate::poly::{same_ring, Polynomial};
use crate::ring::PolyRing;

#[derive(Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal { ring: self.ring.clone(), generators: self.generators.clone(), gb }
    }
}

/// Result of a membership test: the normal form is zero exactly for members.
#[derive(Debug, Clone, PartialEq)]
pub struct Membership {
    pub member: bool,
    pub normal_form: Polynomial,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Ideal> {
        let generators = generators.iter().map(|g| g.to_ring(ring)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: ring.clone(), generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: ring.clone(), generators: vec![Polynomial::one(ring)], gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// The reduced Gröbner basis, computed on first use and cached.
    pub fn gb(&self, engine: &Engine) -> Result<&GroebnerBasis> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = buchberger(&self.ring, &self.generators, engine)?;
        let _ = self.gb.set(g);
        Ok(self.gb.get().unwrap())
    }

    /// Ideal generated by the reduced Gröbner basis.
    pub fn interreduced(&self, engine: &Engine) -> Result<Ideal> {
        let gb = self.gb(engine)?.clone();
        let gens = gb.elements().to_vec();
        let out = Ideal { ring: self.ring.clone(), generators: gens, gb: OnceLock::new() };
        let _ = out.gb.set(gb);
        Ok(out)
    }

    pub fn member(&self, f: &Polynomial, engine: &Engine) -> Result<Membership> {
        let f = f.to_ring(&self.ring)?;
        let nf = self.gb(engine)?.normal_form(&f);
        Ok(Membership { member: nf.is_zero(), normal_form: nf })
    }

    pub fn contains(&self, f: &Polynomial, engine: &Engine) -> Result<bool> {
        Ok(self.member(f, engine)?.member)
    }

    pub fn is_unit(&self, engine: &Engine) -> Result<bool> {
        Ok(self.gb(engine)?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    pub fn contains_ideal(&self, other: &Ideal, engine: &Engine) -> Result<bool> {
        self.check(other)?;
        let gb = self.gb(engine)?;
        Ok(other.generators.iter().all(|g| gb.contains(g)))
    }

    /// Equality by mutual containment of generators.
    pub fn equals(&self, other: &Ideal, engine: &Engine) -> Result<bool> {
        Ok(self.contains_ideal(other, engine)? && other.contains_ideal(self, engine)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                let h = f * g;
                if !h.is_zero() && !gens.contains(&h) {
                    gens.push(h);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^n` for `n >= 1`, from products of generators.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Err(Error::InvalidArgument("ideal power must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` via `(t I + (1 - t) J) ∩ S` with `t` eliminated by a block order.
    pub fn intersect(&self, other: &Ideal, engine: &Engine) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring.with_elimination_prefix(&[fresh_name(&self.ring)])?;
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&f.to_ring(&ext)? * &t);
        }
        for g in &other.generators {
            gens.push(&g.to_ring(&ext)? * &one_minus_t);
        }
        let gb = buchberger(&ext, &gens, engine)?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.avoids_vars(&[0]))
            .map(|g| g.to_ring(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }

    /// `I : (g)`.
    pub fn colon_element(&self, g: &Polynomial, engine: &Engine) -> Result<Ideal> {
        let g = g.to_ring(&self.ring)?;
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let meet = self.intersect(&principal, engine)?;
        let gens = meet
            .generators
            .iter()
            .map(|h| h.div_exact(&g).expect("element of (g) is divisible by g"))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `I : J = { f : f J ⊆ I }`.
    pub fn colon(&self, other: &Ideal, engine: &Engine) -> Result<Ideal> {
        self.check(other)?;
        let mut acc: Option<Ideal> = None;
        for g in other.generators.iter().filter(|g| !g.is_zero()) {
            let c = self.colon_element(g, engine)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c, engine)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : f^∞`, by iterating `I : f` until it stabilizes.
    pub fn saturate(&self, f: &Polynomial, engine: &Engine) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::InvalidArgument("cannot saturate at zero".into()));
        }
        let mut current = self.interreduced(engine)?;
        loop {
            let next = current.colon_element(f, engine)?.interreduced(engine)?;
            if current.contains_ideal(&next, engine)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `I ∩ K[remaining variables]`, returned as an ideal of the same ring.
    pub fn eliminate(&self, vars: &[&str], engine: &Engine) -> Result<Ideal> {
        let mut idx = Vec::new();
        for v in vars {
            idx.push(self.ring.var_index(v).ok_or_else(|| Error::UnknownVariable { name: v.to_string(), pos: 0 })?);
        }
        if idx.is_empty() {
            return Ok(self.clone());
        }
        let mut names: Vec<String> = idx.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let mut weights: Vec<_> = idx.iter().map(|&i| self.ring.weights()[i]).collect();
        for (i, v) in self.ring.vars().iter().enumerate() {
            if !idx.contains(&i) {
                names.push(v.clone());
                weights.push(self.ring.weights()[i]);
            }
        }
        let rest = self.ring.nvars() - idx.len();
        let order = if rest == 0 {
            crate::ring::MonomialOrder::DegRevLex
        } else {
            crate::ring::MonomialOrder::Blocks(vec![idx.len(), rest])
        };
        let ext = PolyRing::with_order(self.ring.field(), names, weights, order)?;
        let gens = self.generators.iter().map(|g| g.to_ring(&ext)).collect::<Result<Vec<_>>>()?;
        let gb = buchberger(&ext, &gens, engine)?;
        let eliminated: Vec<usize> = (0..idx.len()).collect();
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.avoids_vars(&eliminated))
            .map(|g| g.to_ring(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }
}

fn fresh_name(ring: &PolyRing) -> &'static str {
    const CANDIDATES: [&str; 4] = ["t_elim", "t_elim1", "t_elim2", "t_elim3"];
    CANDIDATES.iter().copied().find(|c| ring.var_index(c).is_none()).expect("fresh variable name")
}

/// `S/J` for a polynomial ring `S`, with user-asserted structural flags.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    ambient: Arc<PolyRing>,
    defining: Ideal,
    flags: HypothesisSet,
}

impl QuotientRing {
    pub fn new(ambient: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<QuotientRing> {
        Ok(QuotientRing { ambient: ambient.clone(), defining: Ideal::new(ambient, relations)?, flags: HypothesisSet::new() })
    }

    /// The polynomial ring itself, viewed as a quotient by the zero ideal.
    pub fn polynomial(ambient: &Arc<PolyRing>) -> QuotientRing {
        QuotientRing { ambient: ambient.clone(), defining: Ideal::zero(ambient), flags: HypothesisSet::new() }
    }

    pub fn with_flags(mut self, flags: HypothesisSet) -> Self {
        self.flags = flags;
        self
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn defining(&self) -> &Ideal {
        &self.defining
    }

    pub fn relations(&self) -> &[Polynomial] {
        self.defining.generators()
    }

    pub fn flags(&self) -> &HypothesisSet {
        &self.flags
    }

    pub fn characteristic(&self) -> u64 {
        self.ambient.characteristic()
    }

    /// Preimage in the ambient ring of the ideal generated by `gens`.
    pub fn lift(&self, gens: &[Polynomial]) -> Result<Ideal> {
        let mut all = gens.to_vec();
        all.extend(self.defining.generators().iter().cloned());
        Ideal::new(&self.ambient, all)
    }

    /// Canonical representative of the class of `f`.
    pub fn reduce(&self, f: &Polynomial, engine: &Engine) -> Result<Polynomial> {
        Ok(self.defining.gb(engine)?.normal_form(&f.to_ring(&self.ambient)?))
    }

    pub fn is_zero(&self, f: &Polynomial, engine: &Engine) -> Result<bool> {
        Ok(self.reduce(f, engine)?.is_zero())
    }

    /// Membership of the class of `f` in the ideal generated by `gens`.
    pub fn member(&self, f: &Polynomial, gens: &[Polynomial], engine: &Engine) -> Result<Membership> {
        self.lift(gens)?.member(f, engine)
    }
}
