//! Python module `fsing`.
//!
//! Polynomials, ideals and divisors cross the boundary as strings in the text
//! syntax of the command line; rationals are returned as strings like "1/3".

use std::path::PathBuf;

use fsing_cli::RingFile;
use fsing_core::covers::{class_order, cyclic_cover_stats, f_rational_verdict_dim2, f_regular_verdict_dim2};
use fsing_core::demazure::{verify_quotient_relations, SectionRing};
use fsing_core::divisor::{a_invariant_sectionring, fpure_obstruction, h0_dim, h1_dim, parse_divisor};
use fsing_core::field::parse_rational;
use fsing_core::frobenius::{
    bracket_generators, fedder_is_f_pure, frobenius_closure_member, squarefree_monomial_fpure, tight_closure_witness,
};
use fsing_core::{
    format_poly, hilbert_series, parse_poly, Certificate, DivisorialIdeal, Engine, FrobeniusVerdict,
    HypothesisSet, Ideal, PolyRing, Polynomial, PrimeField, QDivisor, QuotientRing, Rational,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn strings(fs: &[Polynomial]) -> Vec<String> {
    fs.iter().map(format_poly).collect()
}

/// Outcome of a Frobenius-type test.
#[pyclass(frozen, get_all)]
#[derive(Clone)]
pub struct Verdict {
    /// e.g. "FPure", "InFrobeniusClosureAt(1)", "Inconclusive".
    status: String,
    decided: bool,
    /// Kind of certificate: none, normal_form, colon_generator, colon_contained, degree, evidence.
    certificate_kind: String,
    /// Certificate payload rendered as strings.
    certificate: Vec<String>,
    hypotheses: Vec<String>,
}

#[pymethods]
impl Verdict {
    fn __repr__(&self) -> String {
        format!("Verdict({}, {} = {:?})", self.status, self.certificate_kind, self.certificate)
    }
}

impl From<&FrobeniusVerdict> for Verdict {
    fn from(v: &FrobeniusVerdict) -> Self {
        let (kind, payload) = match &v.certificate {
            Certificate::None => ("none", vec![]),
            Certificate::NormalForm(f) => ("normal_form", vec![format_poly(f)]),
            Certificate::ColonGenerator(g) => ("colon_generator", vec![format_poly(g)]),
            Certificate::ColonContained(gs) => ("colon_contained", strings(gs)),
            Certificate::Degree(d) => ("degree", vec![d.to_string()]),
            Certificate::Evidence(ev) => ("evidence", ev.iter().map(|(e, ok)| format!("{e}:{ok}")).collect()),
        };
        Verdict {
            status: v.status.to_string(),
            decided: v.status.is_decided(),
            certificate_kind: kind.to_string(),
            certificate: payload,
            hypotheses: v.hypotheses.iter().map(|h| h.name().to_string()).collect(),
        }
    }
}

/// A graded quotient `F_p[vars] / (relations)`.
#[pyclass]
pub struct Ring {
    q: QuotientRing,
    budget: u64,
}

impl Ring {
    fn engine(&self) -> Engine {
        Engine::with_budget(self.budget)
    }

    fn poly(&self, s: &str) -> PyResult<Polynomial> {
        parse_poly(s, self.q.ambient()).map_err(err)
    }

    fn list(&self, gens: &[String]) -> PyResult<Vec<Polynomial>> {
        gens.iter().map(|g| self.poly(g)).collect()
    }

    fn flags(asserted: &str) -> PyResult<HypothesisSet> {
        HypothesisSet::parse_list(asserted).map_err(err)
    }
}

#[pymethods]
impl Ring {
    /// Weights are integers or fraction strings; all default to 1.
    #[new]
    #[pyo3(signature = (p, variables, relations = vec![], weights = None, budget = 1_000_000))]
    fn new(p: u64, variables: Vec<String>, relations: Vec<String>, weights: Option<Vec<String>>, budget: u64) -> PyResult<Self> {
        let weights = match weights {
            Some(ws) => ws.iter().map(|w| parse_rational(w)).collect::<Result<Vec<_>, _>>().map_err(err)?,
            None => vec![Rational::from_integer(1); variables.len()],
        };
        let ring = PolyRing::with_weights(PrimeField::new(p).map_err(err)?, variables, weights).map_err(err)?;
        let rel = relations.iter().map(|r| parse_poly(r, &ring)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        Ok(Ring { q: QuotientRing::new(&ring, rel).map_err(err)?, budget })
    }

    /// Loads a ring description file (bare names also match the shipped rings).
    #[staticmethod]
    #[pyo3(signature = (path, p = None, budget = 1_000_000))]
    fn from_file(path: PathBuf, p: Option<u64>, budget: u64) -> PyResult<Self> {
        let file = RingFile::load(&path).map_err(err)?;
        let q = file.build(p).map_err(err)?.ok_or_else(|| err("the file declares no variables"))?;
        Ok(Ring { q, budget })
    }

    #[getter]
    fn characteristic(&self) -> u64 {
        self.q.characteristic()
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.q.ambient().vars().to_vec()
    }

    #[getter]
    fn relations(&self) -> Vec<String> {
        strings(self.q.relations())
    }

    /// Normal form of `elem` modulo the relations.
    fn reduce(&self, elem: &str) -> PyResult<String> {
        Ok(format_poly(&self.q.reduce(&self.poly(elem)?, &self.engine()).map_err(err)?))
    }

    /// Reduced Gröbner basis of the lift of `(ideal)`.
    #[pyo3(signature = (ideal = vec![]))]
    fn gb(&self, ideal: Vec<String>) -> PyResult<Vec<String>> {
        let e = self.engine();
        let lifted = self.q.lift(&self.list(&ideal)?).map_err(err)?;
        Ok(strings(lifted.gb(&e).map_err(err)?.elements()))
    }

    /// `(is_member, normal_form)`.
    fn member(&self, elem: &str, ideal: Vec<String>) -> PyResult<(bool, String)> {
        let m = self.q.member(&self.poly(elem)?, &self.list(&ideal)?, &self.engine()).map_err(err)?;
        Ok((m.member, format_poly(&m.normal_form)))
    }

    /// Generators of the lift of `I : J`.
    fn colon(&self, ideal: Vec<String>, by: Vec<String>) -> PyResult<Vec<String>> {
        let e = self.engine();
        let i = self.q.lift(&self.list(&ideal)?).map_err(err)?;
        let j = self.q.lift(&self.list(&by)?).map_err(err)?;
        Ok(strings(i.colon(&j, &e).and_then(|c| c.interreduced(&e)).map_err(err)?.generators()))
    }

    /// Generators of the lift of `I : s^∞`.
    fn saturate(&self, ideal: Vec<String>, by: &str) -> PyResult<Vec<String>> {
        let e = self.engine();
        let i = self.q.lift(&self.list(&ideal)?).map_err(err)?;
        Ok(strings(i.saturate(&self.poly(by)?, &e).and_then(|c| c.interreduced(&e)).map_err(err)?.generators()))
    }

    /// Hilbert series data of the ring as a dict.
    fn hilbert<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let h = hilbert_series(self.q.defining(), &self.engine()).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("numerator", h.numerator.clone())?;
        d.set_item("denominator_weights", h.denominator_weights.clone())?;
        d.set_item("weight_denominator", h.weight_denominator)?;
        d.set_item("dimension", h.dimension)?;
        d.set_item("a_invariant", h.a_invariant.to_string())?;
        Ok(d)
    }

    /// a-invariant; `cohen-macaulay` must be among the asserted flags.
    #[pyo3(signature = (asserted = ""))]
    fn a_invariant(&self, asserted: &str) -> PyResult<String> {
        let a = self.q.a_invariant(&Self::flags(asserted)?, &self.engine()).map_err(err)?;
        Ok(a.value.to_string())
    }

    /// Generators `g^q` of the bracket power.
    fn bracket(&self, ideal: Vec<String>, q: u64) -> PyResult<Vec<String>> {
        self.q.ambient().field().frobenius_exponent(q).map_err(err)?;
        Ok(strings(&bracket_generators(&self.list(&ideal)?, q).map_err(err)?))
    }

    #[pyo3(signature = (elem, ideal, e_max = 3))]
    fn frobenius_closure(&self, elem: &str, ideal: Vec<String>, e_max: u32) -> PyResult<Verdict> {
        let v = frobenius_closure_member(&self.q, &self.poly(elem)?, &self.list(&ideal)?, e_max, &self.engine())
            .map_err(err)?;
        Ok(Verdict::from(&v))
    }

    /// Fedder's criterion for `S / J`; `J` defaults to the relations.
    #[pyo3(signature = (ideal = None))]
    fn fedder(&self, ideal: Option<Vec<String>>) -> PyResult<Verdict> {
        let j = match ideal {
            Some(gens) => Ideal::new(self.q.ambient(), self.list(&gens)?).map_err(err)?,
            None => self.q.defining().clone(),
        };
        Ok(Verdict::from(&fedder_is_f_pure(&j, &self.engine()).map_err(err)?))
    }

    /// "FPure" for square-free monomial ideals, else "Inconclusive".
    #[pyo3(signature = (ideal = None))]
    fn squarefree_fpure(&self, ideal: Option<Vec<String>>) -> PyResult<Verdict> {
        let j = match ideal {
            Some(gens) => Ideal::new(self.q.ambient(), self.list(&gens)?).map_err(err)?,
            None => self.q.defining().clone(),
        };
        Ok(Verdict::from(&squarefree_monomial_fpure(&j)))
    }

    #[pyo3(signature = (elem, ideal, c, e_min = 1, e_max = 3))]
    fn tight_closure_witness(&self, elem: &str, ideal: Vec<String>, c: &str, e_min: u32, e_max: u32) -> PyResult<Verdict> {
        let v = tight_closure_witness(
            &self.q,
            &self.poly(elem)?,
            &self.list(&ideal)?,
            &self.poly(c)?,
            e_min,
            e_max,
            &self.engine(),
        )
        .map_err(err)?;
        Ok(Verdict::from(&v))
    }

    /// Order of the class of `(gens) / denominator` (degree shift optional)
    /// as a dict with `order`, `generator`, `deg_u`; `None` if not found.
    #[pyo3(signature = (gens, s, denominator = "1", shift = None, n_max = 6))]
    fn class_order<'py>(
        &self,
        py: Python<'py>,
        gens: Vec<String>,
        s: &str,
        denominator: &str,
        shift: Option<&str>,
        n_max: u32,
    ) -> PyResult<Option<Bound<'py, PyDict>>> {
        let w = self.divisorial(gens, denominator, shift)?;
        let Some(c) = class_order(&w, n_max, &self.poly(s)?, &self.engine()).map_err(err)? else {
            return Ok(None);
        };
        let d = PyDict::new(py);
        d.set_item("order", c.order)?;
        d.set_item("generator", format_poly(&c.generator))?;
        d.set_item("denominator", format_poly(&c.denominator))?;
        d.set_item("deg_u", c.deg_u.to_string())?;
        Ok(Some(d))
    }

    #[pyo3(signature = (gens, s, asserted, denominator = "1", shift = None, n_max = 6))]
    fn f_regular_dim2(
        &self,
        gens: Vec<String>,
        s: &str,
        asserted: &str,
        denominator: &str,
        shift: Option<&str>,
        n_max: u32,
    ) -> PyResult<Verdict> {
        let w = self.divisorial(gens, denominator, shift)?;
        let r = f_regular_verdict_dim2(&self.q, &w, n_max, &self.poly(s)?, &Self::flags(asserted)?, &self.engine())
            .map_err(err)?;
        Ok(Verdict::from(&r.verdict))
    }

    fn f_rational_dim2(&self, asserted: &str) -> PyResult<Verdict> {
        let v = f_rational_verdict_dim2(&self.q, &Self::flags(asserted)?, &self.engine()).map_err(err)?;
        Ok(Verdict::from(&v))
    }

    fn __repr__(&self) -> String {
        let vars = self.q.ambient().vars().join(", ");
        format!("Ring(F_{}[{vars}] / ({}))", self.q.characteristic(), strings(self.q.relations()).join(", "))
    }
}

impl Ring {
    fn divisorial(&self, gens: Vec<String>, denominator: &str, shift: Option<&str>) -> PyResult<DivisorialIdeal> {
        let mut w = DivisorialIdeal::new(&self.q, self.list(&gens)?, self.poly(denominator)?).map_err(err)?;
        if let Some(s) = shift {
            w = w.with_shift(parse_rational(s).map_err(err)?);
        }
        Ok(w)
    }
}

/// A Q-divisor on the projective line, e.g. `1/2*(X - 1*Y) + 2/3*inf`.
#[pyclass(frozen)]
#[derive(Clone)]
pub struct Divisor(QDivisor);

#[pymethods]
impl Divisor {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_divisor(text).map(Divisor).map_err(err)
    }

    /// The divisor `Σ (1/n) V(X - a Y)` over `alphas`.
    #[staticmethod]
    fn family(n: u32, alphas: Vec<i64>) -> Self {
        Divisor(fsing_core::divisor::family_divisor(n, &alphas))
    }

    #[getter]
    fn degree(&self) -> String {
        self.0.degree().to_string()
    }

    fn scale(&self, n: i64) -> Self {
        Divisor(self.0.scale(Rational::from_integer(n)))
    }

    fn round_down(&self) -> Self {
        Divisor(self.0.round_down())
    }

    fn frac_part(&self) -> Self {
        Divisor(self.0.frac_part())
    }

    fn h0(&self) -> i64 {
        h0_dim(&self.0)
    }

    fn h1(&self) -> i64 {
        h1_dim(&self.0)
    }

    fn a_invariant(&self) -> PyResult<i64> {
        a_invariant_sectionring(&self.0).map_err(err)
    }

    fn fpure_obstruction(&self, p: u64) -> Verdict {
        Verdict::from(&fpure_obstruction(&self.0, p))
    }

    /// `[dim R_0, ..., dim R_n_max]` of the section ring over F_p.
    fn section_dims(&self, p: u64, n_max: i64) -> PyResult<Vec<usize>> {
        let sr = SectionRing::new(&self.0, p).map_err(err)?;
        Ok((0..=n_max).map(|n| sr.dim(n)).collect())
    }

    /// Levels of a generating set of the section ring up to `n_max`.
    fn generator_levels(&self, p: u64, n_max: i64) -> PyResult<Vec<i64>> {
        let sr = SectionRing::new(&self.0, p).map_err(err)?;
        Ok(sr.generators_up_to(n_max, &[]).map_err(err)?.generator_levels())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Divisor('{}')", self.0)
    }

    fn __eq__(&self, other: &Divisor) -> bool {
        self.0 == other.0
    }
}

/// `(order, deg_u, k, a_of_cover)` with rationals as strings.
#[pyfunction]
fn cover_stats(n: u32, deg_u: &str) -> PyResult<(u32, String, String, String)> {
    let s = cyclic_cover_stats(n, parse_rational(deg_u).map_err(err)?).map_err(err)?;
    Ok((s.order, s.deg_u.to_string(), s.k.to_string(), s.a_of_cover.to_string()))
}

/// Whether the family section ring has the expected quotient presentation.
#[pyfunction]
fn family_presentation_holds(n: u32, alphas: Vec<i64>, p: u64) -> PyResult<bool> {
    Ok(verify_quotient_relations(n, &alphas, p).map_err(err)?.holds())
}

/// Runs a command line (without the program name) and returns
/// `(exit_code, json_report)`.
#[pyfunction]
fn run(args: Vec<String>) -> PyResult<(i32, String)> {
    let argv = std::iter::once("fsing".to_string()).chain(args);
    let rep = fsing_cli::run_argv(argv).map_err(err)?;
    Ok((rep.exit_code(), rep.render()))
}

#[pymodule]
fn fsing(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<Divisor>()?;
    m.add_class::<Verdict>()?;
    m.add_function(wrap_pyfunction!(cover_stats, m)?)?;
    m.add_function(wrap_pyfunction!(family_presentation_holds, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
