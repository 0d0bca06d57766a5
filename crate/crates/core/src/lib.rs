//! Exact commutative algebra over prime fields with characteristic-p
//! singularity checks: Gröbner bases, ideal operations, Hilbert series,
//! Frobenius powers and closures, Fedder's criterion, divisors on the
//! projective line, section rings and cyclic-cover bookkeeping.

pub mod covers;
pub mod demazure;
pub mod divisor;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod hilbert;
pub mod hypothesis;
pub mod ideal;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod suites;

pub use covers::{ClassOrder, CoverReport, CoverStats, DivisorialIdeal};
pub use divisor::{CanonicalP1, PointP1, QDivisor};
pub use error::{Error, Result};
pub use field::{PrimeField, Rational};
pub use frobenius::{Certificate, FrobeniusVerdict, Status};
pub use groebner::{buchberger, normal_form, Engine, EngineStats, GroebnerBasis};
pub use hilbert::{hilbert_series, HilbertData};
pub use hypothesis::{Hypothesis, HypothesisSet};
pub use ideal::{Ideal, Membership, QuotientRing};
pub use parse::{format_poly, parse_poly, parse_poly_list};
pub use poly::{Degree, Polynomial};
pub use ring::{Monomial, MonomialOrder, PolyRing};
