//! Shipped examples with their expected values.

use fsing_core::EngineStats;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::report::Report;
use crate::run::run_argv;

pub const NAMES: [&str; 4] = ["sec3-fedder", "sec3-family", "ex61", "ex62"];

/// One command line and the report fields it must produce, addressed by
/// JSON pointer.
pub struct Case {
    pub label: String,
    pub argv: Vec<String>,
    pub expect: Vec<(&'static str, Value)>,
}

fn case<S: AsRef<str>>(label: String, argv: &[S], expect: Vec<(&'static str, Value)>) -> Case {
    let argv = std::iter::once("fsing").chain(argv.iter().map(|s| s.as_ref())).map(String::from).collect();
    Case { label, argv, expect }
}

pub fn cases(name: &str) -> CliResult<Vec<Case>> {
    let mut out = Vec::new();
    match name {
        "sec3-fedder" => {
            for p in [2u64, 3, 5, 7, 11] {
                let ps = p.to_string();
                let base = ["--file", "fedder_sec3.ring", "--p", &ps];
                let with = |extra: &[&str]| base.iter().chain(extra).map(|s| s.to_string()).collect::<Vec<_>>();
                out.push(case(
                    format!("p{p}.member"),
                    &with(&["member", "--elem", "f", "--ideal", "I"]),
                    vec![("/result/member", json!(false))],
                ));
                out.push(case(
                    format!("p{p}.fclosure"),
                    &with(&["fclosure", "--elem", "f", "--ideal", "I", "--emax", "3"]),
                    vec![("/verdict", json!("InFrobeniusClosureAt(1)"))],
                ));
                if p <= 5 {
                    out.push(case(
                        format!("p{p}.fedder-monomial"),
                        &with(&["fedder", "--ideal", "monomial"]),
                        vec![("/verdict", json!("FPure")), ("/result/squarefree_fast_path", json!("FPure"))],
                    ));
                }
                if p == 2 {
                    out.push(case(format!("p{p}.fedder"), &with(&["fedder"]), vec![("/verdict", json!("NotFPure"))]));
                }
            }
        }
        "sec3-family" => {
            out.push(case(
                "n2k5p7.demazure".into(),
                &["--file", "family_2_5.ring", "demazure", "--family", "2", "--alphas", "1,2,3,4,5", "--nmax", "8"],
                vec![("/result/presentation", json!(true)), ("/result/generator_levels", json!([1, 2, 2, 2, 2, 2]))],
            ));
            out.push(case(
                "n2k5p7.divisor".into(),
                &["--file", "family_2_5.ring", "divisor"],
                vec![
                    ("/verdict", json!("NotFPure")),
                    ("/result/delta", json!("-3")),
                    ("/result/a_invariant", json!(-1)),
                ],
            ));
        }
        "ex61" | "ex62" => {
            let first = name == "ex61";
            let ring = format!("{name}.ring");
            let cover = format!("{name}_cover.ring");
            let compare = if first { "omega2,omega3" } else { "omega2" };
            for p in [5u64, 7] {
                let ps = p.to_string();
                let base = ["--file", ring.as_str(), "--p", ps.as_str()];
                let with = |extra: &[&str]| base.iter().chain(extra).map(|s| s.to_string()).collect::<Vec<_>>();
                out.push(case(format!("p{p}.ainv"), &with(&["ainv"]), vec![("/result/a", json!("-1"))]));
                let mut expect = vec![
                    ("/result/order", json!(3)),
                    ("/result/deg_u", json!(if first { "-1" } else { "0" })),
                    ("/result/a_cover", json!(if first { "1/3" } else { "0" })),
                    ("/result/a_cover_hilbert", json!(if first { "1/3" } else { "0" })),
                    ("/result/power_matching_omega2", json!(2)),
                ];
                if first {
                    expect.push(("/result/power_matching_omega3", json!(3)));
                }
                out.push(case(
                    format!("p{p}.cover"),
                    &with(&["cover", "--nmax", "4", "--compare", compare, "--cover-file", &cover]),
                    expect,
                ));
                out.push(case(
                    format!("p{p}.fregular2"),
                    &with(&["fregular2", "--nmax", "4"]),
                    vec![("/verdict", json!("NotFRegular"))],
                ));
                out.push(case(format!("p{p}.frational2"), &with(&["frational2"]), vec![("/verdict", json!("FRational"))]));
            }
        }
        other => {
            return Err(CliError::Usage(format!("unknown corpus entry `{other}`; expected one of {}", NAMES.join(", "))))
        }
    }
    Ok(out)
}

fn add_stats(total: &mut EngineStats, s: &EngineStats) {
    total.bases += s.bases;
    total.pairs += s.pairs;
    total.reductions += s.reductions;
}

/// Runs every case of `name` (or of all entries) and collects divergences as
/// failures of the bundle report.
pub fn run_corpus(name: &str, budget: u64) -> CliResult<Report> {
    let names: Vec<&str> = if name == "all" { NAMES.to_vec() } else { vec![name] };
    let mut bundle = Report::new("corpus");
    bundle.arg("name", name);
    bundle.arg("budget", budget);
    let budget = budget.to_string();
    for entry in names {
        for c in cases(entry)? {
            let label = format!("{entry}/{}", c.label);
            let mut argv = c.argv.clone();
            argv.extend(["--budget".to_string(), budget.clone()]);
            let rep = match run_argv(&argv) {
                Ok(r) => r,
                Err(e) => {
                    bundle.failures.push(format!("{label}: {e}"));
                    continue;
                }
            };
            let doc = rep.to_json();
            for (pointer, want) in &c.expect {
                let got = doc.pointer(pointer).cloned().unwrap_or(Value::Null);
                if &got != want {
                    bundle.failures.push(format!("{label}: {pointer} expected {want}, found {got}"));
                }
            }
            if rep.recheck == Some(false) {
                bundle.failures.push(format!("{label}: certificate recheck failed"));
            }
            add_stats(&mut bundle.engine, &rep.engine);
            bundle.set(&label, doc);
        }
    }
    bundle.recheck = Some(bundle.failures.is_empty());
    Ok(bundle)
}
