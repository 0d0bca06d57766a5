//! Dispatch of one parsed command line to the library.

use fsing_core::covers::{class_order, cover_cross_check, cyclic_cover_stats, f_rational_verdict_dim2, f_regular_verdict_dim2};
use fsing_core::demazure::{family_generators, verify_quotient_relations, SectionElement, SectionRing};
use fsing_core::divisor::{a_invariant_sectionring, family_divisor, fpure_obstruction, h0_dim, h1_dim};
use fsing_core::field::parse_rational;
use fsing_core::frobenius::{
    bracket_generators, bracket_power, bracket_power_in, fedder_is_f_pure, frobenius_closure_member,
    outside_frobenius_maximal, squarefree_monomial_fpure, tight_closure_witness,
};
use fsing_core::{
    format_poly, hilbert_series, suites, Certificate, DivisorialIdeal, Engine, HypothesisSet, Ideal, Polynomial,
    QDivisor, QuotientRing, Rational, Status,
};
use clap::Parser;
use serde_json::{json, Value};

use crate::cli::{Cli, Command};
use crate::corpus;
use crate::error::{CliError, CliResult};
use crate::report::Report;
use crate::ringfile::{Located, ObjectKind, RingFile};

/// Seed of `check` when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 20240611;

struct Ctx {
    file: Option<RingFile>,
    ring: Option<QuotientRing>,
    p: Option<u64>,
    asserted: HypothesisSet,
    engine: Engine,
    budget: u64,
}

fn strings(fs: &[Polynomial]) -> Vec<String> {
    fs.iter().map(format_poly).collect()
}

fn rat(r: Rational) -> String {
    r.to_string()
}

impl Ctx {
    fn new(cli: &Cli) -> CliResult<Ctx> {
        let file = match (&cli.file, &cli.vars) {
            (Some(_), Some(_)) => return Err(CliError::Usage("give either --file or --vars, not both".into())),
            (Some(path), None) => Some(RingFile::load(path)?),
            (None, Some(vars)) => Some(RingFile::from_arguments(cli.p, vars, cli.relations.as_deref())?),
            (None, None) => None,
        };
        if cli.relations.is_some() && cli.vars.is_none() {
            return Err(CliError::Usage("--relations needs --vars".into()));
        }
        let ring = match &file {
            Some(f) => f.build(cli.p)?,
            None => None,
        };
        let mut asserted = file.as_ref().map(|f| f.asserted.clone()).unwrap_or_default();
        for list in &cli.assert {
            asserted.extend(&HypothesisSet::parse_list(list)?);
        }
        let p = cli.p.or(file.as_ref().and_then(|f| f.p));
        Ok(Ctx { file, ring, p, asserted, engine: Engine::with_budget(cli.budget), budget: cli.budget })
    }

    /// A separate engine for rechecks, so they do not touch the statistics.
    fn fresh(&self) -> Engine {
        Engine::with_budget(self.budget)
    }

    fn quotient(&self) -> CliResult<&QuotientRing> {
        self.ring
            .as_ref()
            .ok_or_else(|| CliError::Usage("this command needs a ring: pass --file or --vars".into()))
    }

    fn p(&self) -> CliResult<u64> {
        self.p.ok_or_else(|| CliError::Usage("no characteristic: set `p` in the ring file or pass --p".into()))
    }

    fn object(&self, name: &str, kind: ObjectKind) -> CliResult<Option<&Located>> {
        match &self.file {
            Some(f) => Ok(f.object(name, kind)?.map(|o| &o.value)),
            None => Ok(None),
        }
    }

    fn element(&self, flag: &str, arg: &str) -> CliResult<Polynomial> {
        let r = self.quotient()?.ambient();
        match self.object(arg, ObjectKind::Element)? {
            Some(v) => v.poly(r),
            None => Located::argument(flag, arg).poly(r),
        }
    }

    /// Generators from an ideal object, an element object or a literal list.
    fn gens(&self, flag: &str, arg: &str) -> CliResult<Vec<Polynomial>> {
        let r = self.quotient()?.ambient();
        if let Some(f) = &self.file {
            match f.objects.get(arg) {
                Some(o) if o.kind == ObjectKind::Ideal => return o.value.poly_list(r),
                Some(o) if o.kind == ObjectKind::Element => return Ok(vec![o.value.poly(r)?]),
                _ => {}
            }
        }
        Located::argument(flag, arg).poly_list(r)
    }

    fn divisorial(&self, flag: &str, arg: &str) -> CliResult<DivisorialIdeal> {
        let q = self.quotient()?;
        match self.object(arg, ObjectKind::Divisorial)? {
            Some(v) => v.divisorial(q),
            None => Located::argument(flag, arg).divisorial(q),
        }
    }

    fn divisor(&self, flag: &str, arg: &str) -> CliResult<QDivisor> {
        match self.object(arg, ObjectKind::Divisor)? {
            Some(v) => v.divisor(),
            None => Located::argument(flag, arg).divisor(),
        }
    }

    /// Nonzero reductions modulo the relations of an ideal's basis.
    fn in_quotient(&self, ideal: &Ideal) -> CliResult<Vec<String>> {
        let q = self.quotient()?;
        let mut out = Vec::new();
        for g in ideal.interreduced(&self.engine)?.generators() {
            let g = q.reduce(g, &self.engine)?;
            if !g.is_zero() {
                let s = format_poly(&g);
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        Ok(out)
    }
}

/// Parses a full command line (program name first) and runs it.
pub fn run_argv<I, T>(argv: I) -> CliResult<Report>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
    run(&cli)
}

/// Runs one command. Errors are returned; verdicts of any polarity are a
/// report.
pub fn run(cli: &Cli) -> CliResult<Report> {
    if let Command::Corpus { name } = &cli.command {
        return corpus::run_corpus(name, cli.budget);
    }
    let ctx = Ctx::new(cli)?;
    let mut rep = Report::new(cli.command.name());
    if let Some(f) = &ctx.file {
        rep.arg("file", &f.origin);
    }
    if let Some(p) = ctx.p {
        rep.arg("p", p);
    }
    rep.arg("budget", cli.budget);
    rep.asserted = ctx.asserted.iter().map(|h| h.name().to_string()).collect();
    dispatch(cli, &ctx, &mut rep)?;
    rep.engine = ctx.engine.stats();
    Ok(rep)
}

fn dispatch(cli: &Cli, ctx: &Ctx, rep: &mut Report) -> CliResult<()> {
    let e = &ctx.engine;
    match &cli.command {
        Command::Gb { ideal } => {
            let q = ctx.quotient()?;
            let gens = match ideal {
                Some(i) => {
                    rep.arg("ideal", i);
                    ctx.gens("--ideal", i)?
                }
                None => Vec::new(),
            };
            let lifted = q.lift(&gens)?;
            let gb = lifted.gb(e)?;
            rep.set("basis", strings(gb.elements()));
            rep.set("unit", gb.is_unit());
        }
        Command::Member { elem, ideal } => {
            rep.arg("elem", elem);
            rep.arg("ideal", ideal);
            let q = ctx.quotient()?;
            let f = ctx.element("--elem", elem)?;
            let gens = ctx.gens("--ideal", ideal)?;
            let m = q.member(&f, &gens, e)?;
            rep.set("member", m.member);
            rep.set("normal_form", format_poly(&m.normal_form));
            // f - nf lies in the ideal, and nf vanishes exactly for members
            let diff = &f - &m.normal_form;
            rep.recheck = Some(q.lift(&gens)?.contains(&diff, &ctx.fresh())? && m.normal_form.is_zero() == m.member);
        }
        Command::Colon { ideal, by } => {
            rep.arg("ideal", ideal);
            rep.arg("by", by);
            let q = ctx.quotient()?;
            let i = q.lift(&ctx.gens("--ideal", ideal)?)?;
            let j = q.lift(&ctx.gens("--by", by)?)?;
            let c = i.colon(&j, e)?;
            rep.set("generators", ctx.in_quotient(&c)?);
        }
        Command::Saturate { ideal, by } => {
            rep.arg("ideal", ideal);
            rep.arg("by", by);
            let q = ctx.quotient()?;
            let i = q.lift(&ctx.gens("--ideal", ideal)?)?;
            let s = ctx.element("--by", by)?;
            rep.set("generators", ctx.in_quotient(&i.saturate(&s, e)?)?);
        }
        Command::Hilbert { ideal } => {
            let q = ctx.quotient()?;
            let gens = match ideal {
                Some(i) => {
                    rep.arg("ideal", i);
                    ctx.gens("--ideal", i)?
                }
                None => Vec::new(),
            };
            let h = hilbert_series(&q.lift(&gens)?, e)?;
            rep.set("numerator", h.numerator.clone());
            rep.set("denominator_weights", h.denominator_weights.clone());
            rep.set("weight_denominator", h.weight_denominator);
            rep.set("dimension", h.dimension);
            rep.set("a_invariant", rat(h.a_invariant));
            let first: Vec<i64> = (0..=12u64).map(|d| h.coefficient(d)).collect();
            rep.set("hilbert_function", first);
        }
        Command::Ainv => {
            let q = ctx.quotient()?;
            let a = q.a_invariant(&ctx.asserted, e)?;
            rep.set("a", rat(a.value));
            rep.set("dimension", a.dimension);
            for h in a.hypotheses {
                rep.hypothesis(h);
            }
            rep.recheck = Some(recheck_a(ctx, a.value)?);
        }
        Command::Bracket { ideal, q } => {
            rep.arg("ideal", ideal);
            rep.arg("q", q);
            let ring = ctx.quotient()?;
            let gens = ctx.gens("--ideal", ideal)?;
            let lifted = bracket_power_in(ring, &gens, *q)?;
            rep.set("generators", strings(&bracket_generators(&gens, *q)?));
            rep.set("basis_size", lifted.gb(e)?.elements().len());
        }
        Command::Fclosure { elem, ideal, emax } => {
            rep.arg("elem", elem);
            rep.arg("ideal", ideal);
            rep.arg("emax", emax);
            let q = ctx.quotient()?;
            let f = ctx.element("--elem", elem)?;
            let gens = ctx.gens("--ideal", ideal)?;
            let v = frobenius_closure_member(q, &f, &gens, *emax, e)?;
            rep.verdict(&v);
            let fresh = ctx.fresh();
            rep.recheck = match v.status {
                Status::InIdeal => Some(q.lift(&gens)?.contains(&f, &fresh)?),
                Status::InFrobeniusClosureAt(k) => {
                    let qq = q.characteristic().pow(k);
                    Some(bracket_power_in(q, &gens, qq)?.contains(&f.frobenius_power(qq)?, &fresh)?)
                }
                _ => None,
            };
        }
        Command::Fedder { ideal } => {
            let q = ctx.quotient()?;
            let j = match ideal {
                Some(i) => {
                    rep.arg("ideal", i);
                    Ideal::new(q.ambient(), ctx.gens("--ideal", i)?)?
                }
                None => q.defining().clone(),
            };
            let v = fedder_is_f_pure(&j, e)?;
            rep.verdict(&v);
            let fast = squarefree_monomial_fpure(&j);
            if fast.status.is_decided() {
                rep.set("squarefree_fast_path", fast.status.to_string());
            }
            rep.recheck = Some(recheck_fedder(&j, &v.certificate, &ctx.fresh())?);
        }
        Command::Tcwitness { elem, ideal, c, emin, emax } => {
            rep.arg("elem", elem);
            rep.arg("ideal", ideal);
            rep.arg("c", c);
            rep.arg("emin", emin);
            rep.arg("emax", emax);
            let q = ctx.quotient()?;
            let f = ctx.element("--elem", elem)?;
            let gens = ctx.gens("--ideal", ideal)?;
            let c = ctx.element("--c", c)?;
            rep.verdict(&tight_closure_witness(q, &f, &gens, &c, *emin, *emax, e)?);
        }
        Command::Divisor { divisor, n } => {
            rep.arg("divisor", divisor);
            rep.arg("n", n);
            let d = ctx.divisor("--divisor", divisor)?.scale(Rational::from_integer(*n));
            rep.set("divisor", d.to_string());
            rep.set("degree", rat(d.degree()));
            rep.set("round_down", d.round_down().to_string());
            rep.set("frac_part", d.frac_part().to_string());
            rep.set("h0", h0_dim(&d));
            rep.set("h1", h1_dim(&d));
            if d.degree() > Rational::from_integer(0) {
                rep.set("a_invariant", a_invariant_sectionring(&d)?);
            }
            if let Some(p) = ctx.p {
                let v = fpure_obstruction(&d, p);
                if let Certificate::Degree(delta) = &v.certificate {
                    rep.set("delta", rat(*delta));
                    rep.recheck = Some(*delta == obstruction_by_hand(&d, p));
                }
                rep.verdict(&v);
            }
        }
        Command::Demazure { divisor, nmax, family, alphas } => {
            let p = ctx.p()?;
            rep.arg("nmax", nmax);
            let (d, preferred_family) = match (family, divisor) {
                (Some(n), None) => {
                    if alphas.is_empty() {
                        return Err(CliError::Usage("--family needs --alphas".into()));
                    }
                    rep.arg("family", n);
                    rep.arg("alphas", alphas.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","));
                    (family_divisor(*n, alphas), Some(*n))
                }
                (None, Some(text)) => {
                    rep.arg("divisor", text);
                    (ctx.divisor("--divisor", text)?, None)
                }
                (None, None) => (ctx.divisor("--divisor", "D")?, None),
                (Some(_), Some(_)) => return Err(CliError::Usage("give either --divisor or --family".into())),
            };
            let sr = SectionRing::new(&d, p)?;
            let mut preferred = Vec::new();
            if let Some(n) = preferred_family {
                preferred.push(SectionElement::one(sr.forms(), 1));
                preferred.extend(family_generators(&sr, n as i64, alphas)?);
            }
            let sketch = sr.generators_up_to(*nmax, &preferred)?;
            rep.set("divisor", d.to_string());
            let dims: Vec<Value> = sketch
                .levels
                .iter()
                .map(|l| {
                    json!({
                        "level": l.level,
                        "dim": l.dim,
                        "h0": h0_dim(&sr.level_divisor(l.level)),
                        "products_rank": l.products_rank,
                        "new_generators": l.new_generators,
                    })
                })
                .collect();
            rep.set("levels", dims);
            rep.set("generator_levels", sketch.generator_levels());
            rep.set("generators", sketch.generators.iter().map(section_text).collect::<CliResult<Vec<_>>>()?);
            let mut ok = true;
            for g in &sketch.generators {
                ok &= sr.is_section(g, g.level)?;
            }
            if let Some(n) = preferred_family {
                let check = verify_quotient_relations(n, alphas, p)?;
                rep.set("presentation", check.holds());
                rep.set("mixed_products_in_y", check.mixed_products_in_y);
                rep.set("quotient_dims", check.quotient_dims.iter().map(|&(l, a, b)| json!([l, a, b])).collect::<Vec<_>>());
            }
            rep.recheck = Some(ok);
        }
        Command::Cover { omega, s, nmax, order, degu, compare, cover_file } => {
            rep.arg("nmax", nmax);
            let stats = match (order, degu) {
                (Some(n), Some(du)) => {
                    rep.arg("order", n);
                    rep.arg("degu", du);
                    let du = parse_rational(du)?;
                    cyclic_cover_stats(*n, du)?
                }
                _ => {
                    let (w, s_poly) = omega_and_s(ctx, rep, omega, s)?;
                    for name in compare {
                        let target = ctx.divisorial("--compare", name)?;
                        let mut hit = Value::Null;
                        for i in 1..=*nmax {
                            if w.symbolic_power(i, &s_poly, e)?.equals(&target, e)? {
                                hit = json!(i);
                                break;
                            }
                        }
                        rep.set(&format!("power_matching_{name}"), hit);
                    }
                    let Some(c) = class_order(&w, *nmax, &s_poly, e)? else {
                        rep.set("order", Value::Null);
                        rep.status = Some(Status::Inconclusive);
                        return Ok(());
                    };
                    rep.set("generator", format_poly(&c.generator));
                    rep.set("denominator", format_poly(&c.denominator));
                    cyclic_cover_stats(c.order, c.deg_u)?
                }
            };
            rep.set("order", stats.order);
            rep.set("deg_u", rat(stats.deg_u));
            rep.set("k", rat(stats.k));
            rep.set("a_cover", rat(stats.a_of_cover));
            if let Some(path) = cover_file {
                rep.arg("cover_file", path.display());
                let cf = RingFile::load(path)?;
                let cover = cf.build(ctx.p)?.ok_or_else(|| CliError::Usage("the cover file declares no variables".into()))?;
                let (by_degree, by_hilbert) = cover_cross_check(&stats, &cover, e)?;
                rep.set("a_cover_hilbert", rat(by_hilbert));
                rep.recheck = Some(by_degree == by_hilbert);
            }
        }
        Command::Fregular2 { omega, s, nmax } => {
            rep.arg("nmax", nmax);
            let q = ctx.quotient()?;
            let (w, s_poly) = omega_and_s(ctx, rep, omega, s)?;
            let r = f_regular_verdict_dim2(q, &w, *nmax, &s_poly, &ctx.asserted, e)?;
            if let Some(c) = &r.class {
                rep.set("order", c.order);
                rep.set("deg_u", rat(c.deg_u));
                rep.set("generator", format_poly(&c.generator));
                let fresh = ctx.fresh();
                let wn = w.symbolic_power(c.order, &s_poly, &fresh)?;
                let principal = DivisorialIdeal::new(q, vec![c.generator.clone()], c.denominator.clone())?
                    .with_shift(wn.degree_shift());
                let deg = c.generator.degree().finite().map(|d| d + wn.degree_shift());
                rep.recheck = Some(principal.equals(&wn, &fresh)? && deg == Some(c.deg_u));
            }
            if let Some(st) = &r.stats {
                rep.set("a_cover", rat(st.a_of_cover));
            }
            rep.verdict(&r.verdict);
        }
        Command::Frational2 => {
            let q = ctx.quotient()?;
            let v = f_rational_verdict_dim2(q, &ctx.asserted, e)?;
            if let Certificate::Degree(a) = &v.certificate {
                rep.set("a", rat(*a));
                rep.recheck = Some(recheck_a(ctx, *a)?);
            }
            rep.verdict(&v);
        }
        Command::Check { scale } => {
            let seed = cli.seed.unwrap_or(DEFAULT_SEED);
            rep.arg("seed", seed);
            rep.arg("scale", scale);
            let n = |base: usize| base * scale;
            let outcomes = vec![
                suites::groebner_spairs(seed, n(500), e)?,
                suites::normal_form_linearity(seed, n(500), e)?,
                suites::monomial_membership(seed, n(500), e)?,
                suites::bracket_composition(seed, n(100), e)?,
                suites::freshman_dream(seed, n(200))?,
                suites::divisor_rounding(seed, n(200)),
            ];
            for o in outcomes {
                rep.set(o.name, json!({ "cases": o.cases, "failed": o.failures.len() }));
                rep.failures.extend(o.failures.iter().map(|f| format!("{}: {f}", o.name)));
            }
        }
        Command::Corpus { .. } => unreachable!("handled before the ring is built"),
    }
    Ok(())
}

fn omega_and_s(
    ctx: &Ctx,
    rep: &mut Report,
    omega: &Option<String>,
    s: &Option<String>,
) -> CliResult<(DivisorialIdeal, Polynomial)> {
    let omega = omega.as_deref().unwrap_or("omega");
    let s = s.as_deref().unwrap_or("s");
    rep.arg("omega", omega);
    rep.arg("s", s);
    Ok((ctx.divisorial("--omega", omega)?, ctx.element("--s", s)?))
}

fn section_text(g: &SectionElement) -> CliResult<String> {
    let den = g.denominator_poly()?;
    let body = if den.is_constant() {
        format_poly(&g.numerator)
    } else {
        format!("({}) / ({})", format_poly(&g.numerator), format_poly(&den))
    };
    Ok(format!("{body} @ {}", g.level))
}

/// `(1 - p)(-2 + Σ (b - 1)/b)` over the coefficient denominators `b`.
fn obstruction_by_hand(d: &QDivisor, p: u64) -> Rational {
    let mut total = Rational::from_integer(-2);
    for (_, c) in d.terms() {
        let b = *c.denom();
        if b > 1 {
            total += Rational::new(b - 1, b);
        }
    }
    total * Rational::from_integer(1 - p as i64)
}

/// The a-invariant again, from the Hilbert series of an interreduced
/// presentation and a separate engine.
fn recheck_a(ctx: &Ctx, a: Rational) -> CliResult<bool> {
    let fresh = ctx.fresh();
    let q = ctx.quotient()?;
    let again = hilbert_series(&q.defining().interreduced(&fresh)?, &fresh)?;
    Ok(again.a_invariant == a)
}

/// One colon containment per polarity: an FPure witness multiplies `J` into
/// `J^[p]` and leaves `m^[p]`; for NotFPure, `J^[p] : J` lies in `m^[p]`.
fn recheck_fedder(j: &Ideal, cert: &Certificate, engine: &Engine) -> CliResult<bool> {
    let r = j.ring();
    let p = r.characteristic();
    let jp = bracket_power(j, p)?;
    match cert {
        Certificate::ColonGenerator(g) => {
            let moved = Ideal::new(r, j.generators().iter().map(|h| g * h).collect())?;
            Ok(jp.contains_ideal(&moved, engine)? && !outside_frobenius_maximal(g, p).is_zero())
        }
        Certificate::ColonContained(_) => {
            let mp = Ideal::new(r, (0..r.nvars()).map(|i| Polynomial::var(r, i).pow(p as u32)).collect())?;
            Ok(mp.contains_ideal(&jp.colon(j, engine)?, engine)?)
        }
        _ => Ok(false),
    }
}
