//! User-asserted hypotheses.
//!
//! Several verdicts rest on theorems whose hypotheses this library cannot
//! check (normality, Cohen-Macaulayness, bounds on derivation degrees). They
//! are passed in explicitly and echoed in every result that consumed them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hypothesis {
    Normal,
    Domain,
    CohenMacaulay,
    Dim2,
    Reduced,
    /// The characteristic does not divide the order of the canonical class.
    CoprimeOrder,
    /// Some D-complete set of homogeneous derivations has degree below p.
    DerivationBound,
    /// Stand-in for a characteristic-zero statement: p is assumed large.
    LargeCharacteristic,
    /// The denominator of a fractional ideal is a nonzerodivisor.
    NonZeroDivisor,
    /// The saturating element avoids every minimal prime of the numerator.
    AvoidsMinimalPrimes,
    /// A divisorial ideal has pure height one.
    PureHeightOne,
    /// The tight-closure multiplier lies outside every minimal prime.
    InRCirc,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 12] = [
        Hypothesis::Normal,
        Hypothesis::Domain,
        Hypothesis::CohenMacaulay,
        Hypothesis::Dim2,
        Hypothesis::Reduced,
        Hypothesis::CoprimeOrder,
        Hypothesis::DerivationBound,
        Hypothesis::LargeCharacteristic,
        Hypothesis::NonZeroDivisor,
        Hypothesis::AvoidsMinimalPrimes,
        Hypothesis::PureHeightOne,
        Hypothesis::InRCirc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::Normal => "normal",
            Hypothesis::Domain => "domain",
            Hypothesis::CohenMacaulay => "cohen-macaulay",
            Hypothesis::Dim2 => "dim2",
            Hypothesis::Reduced => "reduced",
            Hypothesis::CoprimeOrder => "coprime-order",
            Hypothesis::DerivationBound => "derivation-bound",
            Hypothesis::LargeCharacteristic => "large-char",
            Hypothesis::NonZeroDivisor => "nonzerodivisor",
            Hypothesis::AvoidsMinimalPrimes => "avoids-minimal-primes",
            Hypothesis::PureHeightOne => "pure-height-one",
            Hypothesis::InRCirc => "c-in-r-circ",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Hypothesis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Hypothesis::ALL
            .iter()
            .copied()
            .find(|h| h.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown hypothesis flag `{}`", s.trim())))
    }
}

/// An ordered set of asserted hypotheses.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct HypothesisSet(BTreeSet<Hypothesis>);

impl HypothesisSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses a comma separated flag list such as `normal,dim2,coprime-order`.
    pub fn parse_list(s: &str) -> Result<Self> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(Hypothesis::from_str)
            .collect::<Result<BTreeSet<_>>>()
            .map(HypothesisSet)
    }

    pub fn with(mut self, h: Hypothesis) -> Self {
        self.0.insert(h);
        self
    }

    pub fn insert(&mut self, h: Hypothesis) {
        self.0.insert(h);
    }

    pub fn extend(&mut self, other: &HypothesisSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn contains(&self, h: Hypothesis) -> bool {
        self.0.contains(&h)
    }

    pub fn require(&self, h: Hypothesis) -> Result<()> {
        if self.contains(h) {
            Ok(())
        } else {
            Err(Error::MissingHypothesis(h))
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Hypothesis> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<Hypothesis> {
        self.0.iter().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<Hypothesis> for HypothesisSet {
    fn from_iter<I: IntoIterator<Item = Hypothesis>>(iter: I) -> Self {
        HypothesisSet(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flag_lists() {
        let set = HypothesisSet::parse_list("normal, dim2,coprime_order").unwrap();
        assert!(set.contains(Hypothesis::Normal));
        assert!(set.contains(Hypothesis::Dim2));
        assert!(set.contains(Hypothesis::CoprimeOrder));
        assert!(!set.contains(Hypothesis::CohenMacaulay));
        assert!(HypothesisSet::parse_list("normal,bogus").is_err());
    }

    #[test]
    fn names_round_trip() {
        for h in Hypothesis::ALL {
            assert_eq!(h.name().parse::<Hypothesis>().unwrap(), h);
        }
    }
}
