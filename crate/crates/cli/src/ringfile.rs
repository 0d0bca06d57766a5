//! Ring description files.
//!
//! ```text
//! # comment
//! [ring]
//! p = 5
//! vars = T:1, U:4, V:4, W:4
//! relations = T^8 - U*V, U*(V - W) - T^4*W
//!
//! [objects]
//! element s = U
//! ideal I = V, W
//! divisorial omega = (V, W) / T^3
//! divisorial omega2 = (A, B) shift -2
//! divisor D = 1/2*(X - 1*Y) + 1/2*(X - 2*Y)
//!
//! [assert]
//! normal, dim2, cohen-macaulay
//! ```
//!
//! One entry per line. A variable without `:weight` has weight 1; weights may
//! be fractions. `[ring]` may omit `vars` when the file only carries divisors.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use fsing_core::divisor::parse_divisor;
use fsing_core::field::parse_rational;
use fsing_core::{
    parse_poly, parse_poly_list, DivisorialIdeal, Error, Hypothesis, HypothesisSet, PolyRing, Polynomial, PrimeField,
    QDivisor, QuotientRing, Rational,
};

use crate::error::{CliError, CliResult};

/// Ring files shipped with the tool; `--file NAME` falls back to these.
pub const BUILTIN: [(&str, &str); 6] = [
    ("fedder_sec3.ring", include_str!("../rings/fedder_sec3.ring")),
    ("family_2_5.ring", include_str!("../rings/family_2_5.ring")),
    ("ex61.ring", include_str!("../rings/ex61.ring")),
    ("ex61_cover.ring", include_str!("../rings/ex61_cover.ring")),
    ("ex62.ring", include_str!("../rings/ex62.ring")),
    ("ex62_cover.ring", include_str!("../rings/ex62_cover.ring")),
];

/// A piece of source text and where it starts (1-based line and column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub origin: String,
    pub text: String,
    pub line: usize,
    pub col: usize,
}

impl Located {
    /// Command-line arguments are located on a single pseudo line.
    pub fn argument(flag: &str, text: &str) -> Self {
        Located { origin: format!("argument {flag}"), text: text.to_string(), line: 1, col: 1 }
    }

    fn error(&self, byte: usize, message: impl Into<String>) -> CliError {
        let byte = byte.min(self.text.len());
        let col = self.col + self.text[..byte].chars().count();
        CliError::Syntax { origin: self.origin.clone(), line: self.line, col, message: message.into() }
    }

    /// Re-anchors a positioned core error on this text.
    fn core(&self, offset: usize, err: Error) -> CliError {
        match err {
            Error::Parse { pos, message } => self.error(offset + pos, message),
            Error::UnknownVariable { name, pos } => self.error(offset + pos, format!("unknown variable `{name}`")),
            other => other.into(),
        }
    }

    fn slice(&self, start: usize, end: usize) -> Located {
        let col = self.col + self.text[..start].chars().count();
        Located { origin: self.origin.clone(), text: self.text[start..end].to_string(), line: self.line, col }
    }

    pub fn poly(&self, ring: &Arc<PolyRing>) -> CliResult<Polynomial> {
        parse_poly(&self.text, ring).map_err(|e| self.core(0, e))
    }

    pub fn poly_list(&self, ring: &Arc<PolyRing>) -> CliResult<Vec<Polynomial>> {
        parse_poly_list(&self.text, ring).map_err(|e| self.core(0, e))
    }

    pub fn divisor(&self) -> CliResult<QDivisor> {
        parse_divisor(&self.text).map_err(|e| self.core(0, e))
    }

    /// `(g1, ..., gr) [/ denominator] [shift r]`.
    pub fn divisorial(&self, ring: &QuotientRing) -> CliResult<DivisorialIdeal> {
        let r = ring.ambient();
        let text = &self.text;
        let open = text.find(|c: char| !c.is_whitespace()).filter(|&i| text[i..].starts_with('('));
        let Some(open) = open else {
            return Err(self.error(0, "expected `(` opening the numerator generators"));
        };
        let mut depth = 0i32;
        let mut close = None;
        for (i, c) in text[open..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        close = Some(open + i);
                        break;
                    }
                }
                _ => {}
            }
        }
        let close = close.ok_or_else(|| self.error(text.len(), "expected `)` closing the numerator generators"))?;
        let gens = self.slice(open + 1, close).poly_list(r)?;

        let rest_start = close + 1;
        let shift_at = text[rest_start..].find("shift").map(|i| rest_start + i);
        let head_end = shift_at.unwrap_or(text.len());
        let head = text[rest_start..head_end].trim_start();
        let denominator = if let Some(stripped) = head.strip_prefix('/') {
            let start = head_end - stripped.len();
            if stripped.trim().is_empty() {
                return Err(self.error(start, "expected a denominator after `/`"));
            }
            self.slice(start, head_end).poly(r)?
        } else if head.trim().is_empty() {
            Polynomial::one(r)
        } else {
            return Err(self.error(head_end - head.len(), "expected `/`, `shift` or end of line"));
        };

        let mut d = DivisorialIdeal::new(ring, gens, denominator)?;
        if let Some(at) = shift_at {
            let value = &text[at + "shift".len()..];
            let shift = parse_rational(value).map_err(|_| self.error(at + 5, "expected a rational shift"))?;
            d = d.with_shift(shift);
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectKind {
    Ideal,
    Element,
    Divisorial,
    Divisor,
}

impl ObjectKind {
    fn parse(word: &str) -> Option<Self> {
        match word {
            "ideal" => Some(ObjectKind::Ideal),
            "element" => Some(ObjectKind::Element),
            "divisorial" => Some(ObjectKind::Divisorial),
            "divisor" => Some(ObjectKind::Divisor),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Ideal => "ideal",
            ObjectKind::Element => "element",
            ObjectKind::Divisorial => "divisorial",
            ObjectKind::Divisor => "divisor",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Object {
    pub kind: ObjectKind,
    pub value: Located,
}

#[derive(Debug, Clone, Default)]
pub struct RingFile {
    pub origin: String,
    pub p: Option<u64>,
    pub vars: Vec<(String, Rational)>,
    pub relations: Option<Located>,
    pub objects: BTreeMap<String, Object>,
    pub asserted: HypothesisSet,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Ring,
    Objects,
    Assert,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `text` at commas, yielding each trimmed piece with its byte offset.
fn pieces(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split(',').map(move |piece| {
        let lead = piece.len() - piece.trim_start().len();
        let at = offset + lead;
        offset += piece.len() + 1;
        (at, piece.trim())
    })
}

/// `name[:weight], ...`
fn parse_vars(value: &Located) -> CliResult<Vec<(String, Rational)>> {
    let mut vars: Vec<(String, Rational)> = Vec::new();
    for (at, entry) in pieces(&value.text) {
        let (name, weight) = match entry.split_once(':') {
            Some((n, w)) => {
                let w_at = at + n.len() + 1;
                let w = parse_rational(w).map_err(|_| value.error(w_at, "expected a rational weight"))?;
                (n.trim(), w)
            }
            None => (entry, Rational::from_integer(1)),
        };
        if !is_identifier(name) {
            return Err(value.error(at, format!("expected a variable name, found `{name}`")));
        }
        if vars.iter().any(|(v, _)| v == name) {
            return Err(value.error(at, format!("variable `{name}` declared twice")));
        }
        vars.push((name.to_string(), weight));
    }
    Ok(vars)
}

impl RingFile {
    /// A ring given on the command line by `--vars` and `--relations`.
    pub fn from_arguments(p: Option<u64>, vars: &str, relations: Option<&str>) -> CliResult<Self> {
        Ok(RingFile {
            origin: "arguments".into(),
            p,
            vars: parse_vars(&Located::argument("--vars", vars))?,
            relations: relations.map(|r| Located::argument("--relations", r)),
            ..Default::default()
        })
    }

    /// Reads a file, falling back to the shipped rings for bare file names.
    pub fn load(path: &Path) -> CliResult<Self> {
        match std::fs::read_to_string(path) {
            Ok(src) => Self::parse(&path.display().to_string(), &src),
            Err(source) => {
                let bare = path.parent().is_none_or(|p| p.as_os_str().is_empty());
                let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
                match BUILTIN.iter().find(|(n, _)| bare && *n == name) {
                    Some((n, src)) => Self::parse(n, src),
                    None => Err(CliError::Io { path: path.to_path_buf(), source }),
                }
            }
        }
    }

    pub fn builtin(name: &str) -> CliResult<Self> {
        let (n, src) = BUILTIN
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| CliError::Usage(format!("no shipped ring file named `{name}`")))?;
        Self::parse(n, src)
    }

    pub fn parse(origin: &str, src: &str) -> CliResult<Self> {
        let mut file = RingFile { origin: origin.to_string(), ..Default::default() };
        let mut section = Section::None;
        let mut seen_ring = false;
        for (idx, raw) in src.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or_default();
            let lead = content.len() - content.trim_start().len();
            let body = content.trim();
            if body.is_empty() {
                continue;
            }
            let here = Located {
                origin: origin.to_string(),
                text: body.to_string(),
                line: idx + 1,
                col: raw[..lead].chars().count() + 1,
            };
            if let Some(name) = body.strip_prefix('[') {
                let Some(name) = name.strip_suffix(']') else {
                    return Err(here.error(body.len(), "expected `]` closing the section name"));
                };
                section = match name.trim() {
                    "ring" => {
                        seen_ring = true;
                        Section::Ring
                    }
                    "objects" => Section::Objects,
                    "assert" => Section::Assert,
                    other => {
                        return Err(here.error(1, format!("unknown section `{other}`, expected ring, objects or assert")))
                    }
                };
                continue;
            }
            match section {
                Section::None => return Err(here.error(0, "expected a section header such as `[ring]`")),
                Section::Ring => file.ring_entry(&here)?,
                Section::Objects => file.object_entry(&here)?,
                Section::Assert => {
                    for (at, flag) in pieces(body) {
                        if flag.is_empty() {
                            continue;
                        }
                        let h: Hypothesis = flag.parse().map_err(|_| here.error(at, format!("unknown hypothesis flag `{flag}`")))?;
                        file.asserted.insert(h);
                    }
                }
            }
        }
        if !seen_ring {
            return Err(CliError::Syntax {
                origin: origin.to_string(),
                line: src.lines().count().max(1),
                col: 1,
                message: "missing `[ring]` section".into(),
            });
        }
        Ok(file)
    }

    fn ring_entry(&mut self, here: &Located) -> CliResult<()> {
        let Some((key, _)) = here.text.split_once('=') else {
            return Err(here.error(here.text.len(), "expected `=` after the key"));
        };
        let value_at = key.len() + 1;
        let value_at = value_at + (here.text[value_at..].len() - here.text[value_at..].trim_start().len());
        let value = here.slice(value_at, here.text.len());
        match key.trim() {
            "p" => {
                let p: u64 = value.text.parse().map_err(|_| value.error(0, "expected an integer characteristic"))?;
                self.p = Some(p);
            }
            "vars" => self.vars = parse_vars(&value)?,
            "relations" => self.relations = Some(value),
            other => {
                return Err(here.error(0, format!("unknown key `{other}`, expected p, vars or relations")));
            }
        }
        Ok(())
    }

    fn object_entry(&mut self, here: &Located) -> CliResult<()> {
        let text = &here.text;
        let kind_end = text.find(char::is_whitespace).unwrap_or(text.len());
        let kind = ObjectKind::parse(&text[..kind_end])
            .ok_or_else(|| here.error(0, "expected ideal, element, divisorial or divisor"))?;
        let Some(eq) = text.find('=') else {
            return Err(here.error(text.len(), "expected `=` after the object name"));
        };
        let name = text[kind_end..eq].trim();
        if !is_identifier(name) {
            return Err(here.error(kind_end + 1, "expected an object name"));
        }
        if self.objects.contains_key(name) {
            return Err(here.error(kind_end + 1, format!("object `{name}` declared twice")));
        }
        let rest = &text[eq + 1..];
        let start = eq + 1 + (rest.len() - rest.trim_start().len());
        if start >= text.len() {
            return Err(here.error(text.len(), "expected a value after `=`"));
        }
        self.objects.insert(name.to_string(), Object { kind, value: here.slice(start, text.len()) });
        Ok(())
    }

    pub fn object(&self, name: &str, kind: ObjectKind) -> CliResult<Option<&Object>> {
        match self.objects.get(name) {
            Some(o) if o.kind == kind => Ok(Some(o)),
            Some(o) => Err(CliError::Usage(format!("`{name}` is a {}, not a {}", o.kind.name(), kind.name()))),
            None => Ok(None),
        }
    }

    /// Builds the quotient ring, with `p` optionally overridden. `None` when no
    /// variables are declared.
    pub fn build(&self, p_override: Option<u64>) -> CliResult<Option<QuotientRing>> {
        if self.vars.is_empty() {
            return match &self.relations {
                Some(r) => Err(r.error(0, "relations given but no variables declared")),
                None => Ok(None),
            };
        }
        let p = p_override
            .or(self.p)
            .ok_or_else(|| CliError::Usage(format!("{}: no characteristic; set `p` or pass --p", self.origin)))?;
        let names = self.vars.iter().map(|(n, _)| n.clone()).collect();
        let weights = self.vars.iter().map(|(_, w)| *w).collect();
        let ring = PolyRing::with_weights(PrimeField::new(p)?, names, weights)?;
        let relations = match &self.relations {
            Some(r) => r.poly_list(&ring)?,
            None => Vec::new(),
        };
        Ok(Some(QuotientRing::new(&ring, relations)?.with_flags(self.asserted.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syntax(err: CliError) -> (usize, usize, String) {
        match err {
            CliError::Syntax { line, col, message, .. } => (line, col, message),
            other => panic!("expected a syntax error, got {other}"),
        }
    }

    #[test]
    fn shipped_files_parse_and_build() {
        for (name, _) in BUILTIN {
            let f = RingFile::builtin(name).unwrap();
            f.build(None).unwrap();
            for o in f.objects.values() {
                assert!(!o.value.text.is_empty(), "{name}");
            }
        }
    }

    #[test]
    fn weights_and_objects() {
        let src = "[ring]\np = 7\nvars = x:1/2, y\nrelations = x^2 - y\n[objects]\nelement f = x*y\n[assert]\nnormal, dim2\n";
        let f = RingFile::parse("t", src).unwrap();
        assert_eq!(f.vars[0].1, Rational::new(1, 2));
        assert_eq!(f.vars[1].1, Rational::from_integer(1));
        assert!(f.asserted.contains(Hypothesis::Dim2));
        let q = f.build(None).unwrap().unwrap();
        let obj = f.object("f", ObjectKind::Element).unwrap().unwrap();
        assert_eq!(obj.value.poly(q.ambient()).unwrap().int_degree(), Some(3));
        assert!(f.object("f", ObjectKind::Ideal).is_err());
        assert_eq!(f.build(Some(11)).unwrap().unwrap().characteristic(), 11);
    }

    #[test]
    fn diagnostics_carry_line_and_column() {
        let src = "[ring]\np = 5\nvars = x, y\nrelations = x^2 + q\n";
        let f = RingFile::parse("t", src).unwrap();
        let (line, col, msg) = syntax(f.build(None).unwrap_err());
        assert_eq!((line, col), (4, 19));
        assert!(msg.contains("`q`"), "{msg}");

        let (line, col, _) = syntax(RingFile::parse("t", "[ring]\n  vars = x, 3y\n").unwrap_err());
        assert_eq!((line, col), (2, 13));
        let (line, _, msg) = syntax(RingFile::parse("t", "p = 5\n").unwrap_err());
        assert_eq!(line, 1);
        assert!(msg.contains("section"));
        let (_, col, _) = syntax(RingFile::parse("t", "[ring]\n[assert]\nnormal, bogus\n").unwrap_err());
        assert_eq!(col, 9);
        assert!(RingFile::parse("t", "[objects]\n").is_err());
    }

    #[test]
    fn divisorial_values() {
        let src = "[ring]\np = 5\nvars = a, b, t\n[objects]\ndivisorial w = (a, b) / t^2\ndivisorial v = (a) shift -3/2\ndivisorial bad = (a, b / t\n";
        let f = RingFile::parse("t", src).unwrap();
        let q = f.build(None).unwrap().unwrap();
        let w = f.objects["w"].value.divisorial(&q).unwrap();
        assert_eq!(w.degree_shift(), Rational::from_integer(-2));
        let v = f.objects["v"].value.divisorial(&q).unwrap();
        assert_eq!(v.degree_shift(), Rational::new(-3, 2));
        let (line, _, _) = syntax(f.objects["bad"].value.divisorial(&q).unwrap_err());
        assert_eq!(line, 7);
    }
}
