use std::collections::BTreeMap;

use fsing_core::{format_poly, Certificate, EngineStats, FrobeniusVerdict, Hypothesis, Status};
use serde_json::{json, Map, Value};

/// Outcome of one job. Serializes to JSON with sorted keys and no timing, so
/// identical inputs give identical bytes.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub args: BTreeMap<String, String>,
    pub status: Option<Status>,
    pub certificate: Value,
    /// Hypotheses the verdict rests on.
    pub hypotheses: Vec<String>,
    pub asserted: Vec<String>,
    pub result: Map<String, Value>,
    pub recheck: Option<bool>,
    pub engine: EngineStats,
    /// Divergences from expectations (corpus) or failed suite cases.
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            args: BTreeMap::new(),
            status: None,
            certificate: Value::Null,
            hypotheses: Vec::new(),
            asserted: Vec::new(),
            result: Map::new(),
            recheck: None,
            engine: EngineStats::default(),
            failures: Vec::new(),
        }
    }

    pub fn arg(&mut self, key: &str, value: impl ToString) {
        self.args.insert(key.to_string(), value.to_string());
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.result.insert(key.to_string(), value.into());
    }

    pub fn verdict(&mut self, v: &FrobeniusVerdict) {
        self.status = Some(v.status);
        self.certificate = certificate_json(&v.certificate);
        for h in &v.hypotheses {
            self.hypothesis(*h);
        }
    }

    pub fn hypothesis(&mut self, h: Hypothesis) {
        let name = h.name().to_string();
        if !self.hypotheses.contains(&name) {
            self.hypotheses.push(name);
        }
    }

    /// 1 for failures, 2 for verdicts that settle nothing, else 0.
    pub fn exit_code(&self) -> i32 {
        if !self.failures.is_empty() || self.recheck == Some(false) {
            1
        } else if self.status.is_some_and(|s| !s.is_decided()) {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        let engine = json!({
            "bases": self.engine.bases,
            "pairs": self.engine.pairs,
            "reductions": self.engine.reductions,
        });
        json!({
            "command": self.command,
            "args": self.args,
            "verdict": self.status.map(|s| s.to_string()),
            "certificate": self.certificate,
            "hypotheses": self.hypotheses,
            "asserted": self.asserted,
            "result": self.result,
            "recheck": self.recheck,
            "engine": engine,
            "failures": self.failures,
        })
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report values serialize");
        s.push('\n');
        s
    }

    /// Short human-readable form for standard output.
    pub fn summary(&self) -> String {
        let mut out = format!("{}:", self.command);
        if let Some(s) = self.status {
            out.push_str(&format!(" {s}"));
        }
        out.push('\n');
        for (k, v) in &self.result {
            let v = match v {
                Value::String(s) => s.clone(),
                // nested reports of a corpus bundle
                Value::Object(m) if m.contains_key("command") => match m.get("verdict") {
                    Some(Value::String(s)) => s.clone(),
                    _ => "done".to_string(),
                },
                other => other.to_string(),
            };
            out.push_str(&format!("  {k} = {v}\n"));
        }
        if !self.hypotheses.is_empty() {
            out.push_str(&format!("  assuming {}\n", self.hypotheses.join(", ")));
        }
        if let Some(ok) = self.recheck {
            out.push_str(&format!("  recheck {}\n", if ok { "passed" } else { "FAILED" }));
        }
        for f in &self.failures {
            out.push_str(&format!("  mismatch: {f}\n"));
        }
        out
    }
}

pub fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::None => Value::Null,
        Certificate::NormalForm(f) => json!({ "normal_form": format_poly(f) }),
        Certificate::ColonGenerator(g) => json!({ "colon_generator": format_poly(g) }),
        Certificate::ColonContained(gs) => json!({ "colon_generators": gs.iter().map(format_poly).collect::<Vec<_>>() }),
        Certificate::Degree(d) => json!({ "degree": d.to_string() }),
        Certificate::Evidence(ev) => {
            json!({ "evidence": ev.iter().map(|(e, ok)| json!({ "e": e, "holds": ok })).collect::<Vec<_>>() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fsing_core::Rational;

    #[test]
    fn exit_codes() {
        let mut r = Report::new("x");
        assert_eq!(r.exit_code(), 0);
        r.verdict(&FrobeniusVerdict::new(Status::Inconclusive, Certificate::None));
        assert_eq!(r.exit_code(), 2);
        r.status = Some(Status::NotFPure);
        assert_eq!(r.exit_code(), 0);
        r.recheck = Some(false);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn keys_are_sorted_and_stable() {
        let mut r = Report::new("divisor");
        r.set("zeta", 1);
        r.set("alpha", "x");
        r.verdict(&FrobeniusVerdict::new(Status::NotFPure, Certificate::Degree(Rational::new(-3, 1))));
        let text = r.render();
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"zeta\"").unwrap());
        assert!(text.find("\"args\"").unwrap() < text.find("\"verdict\"").unwrap());
        assert_eq!(text, r.clone().render());
        assert!(text.contains("\"degree\": \"-3\""));
    }
}
