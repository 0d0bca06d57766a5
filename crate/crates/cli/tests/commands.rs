use std::process::Command;

fn fsing(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fsing")).args(args).output().expect("binary runs");
    let code = out.status.code().expect("exit code");
    (code, String::from_utf8_lossy(&out.stdout).into_owned(), String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn decided_verdicts_exit_zero() {
    let (code, out, _) = fsing(&["fedder", "--file", "fedder_sec3.ring", "--p", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("fedder: NotFPure"), "{out}");

    let (code, out, _) = fsing(&[
        "fclosure", "--file", "fedder_sec3.ring", "--elem", "y^3*z^4", "--ideal", "y^2*(u^2-z^4)", "--emax", "3", "--p", "5",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("InFrobeniusClosureAt(1)"), "{out}");

    let (code, out, _) = fsing(&["ainv", "--file", "ex61.ring"]);
    assert_eq!(code, 0);
    assert!(out.contains("a = -1"), "{out}");
}

#[test]
fn unsettled_verdicts_exit_two() {
    let (code, out, _) = fsing(&[
        "tcwitness", "--file", "fedder_sec3.ring", "--elem", "f", "--ideal", "I", "--c", "Y", "--emax", "2",
    ]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("Inconclusive"));
    let (code, _, _) = fsing(&["fclosure", "--vars", "x,y", "--p", "3", "--elem", "x", "--ideal", "y", "--emax", "2"]);
    assert_eq!(code, 2);
    let (code, out, _) = fsing(&["divisor", "--p", "5", "--divisor", "1/3*(X - 1*Y) + 1/3*(X - 2*Y) + 1/3*(X - 3*Y)"]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn errors_exit_one_with_positions() {
    let (code, _, err) = fsing(&["member", "--vars", "x,y", "--p", "5", "--elem", "x*q", "--ideal", "y"]);
    assert_eq!(code, 1);
    assert!(err.contains("argument --elem:1:3"), "{err}");

    let dir = std::env::temp_dir().join(format!("fsing-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.ring");
    std::fs::write(&path, "[ring]\np = 5\nvars = x, y\nrelations = x^2 - y^\n").unwrap();
    let (code, _, err) = fsing(&["gb", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("bad.ring:4:"), "{err}");

    let (code, _, err) = fsing(&["frational2", "--file", "ex61_cover.ring"]);
    assert_eq!(code, 1);
    assert!(err.contains("must be asserted"), "{err}");
    let (code, _, _) = fsing(&["gb", "--file", "no_such.ring"]);
    assert_eq!(code, 1);
}

#[test]
fn assertions_on_the_command_line() {
    let (code, out, _) = fsing(&[
        "frational2", "--file", "ex61_cover.ring", "--assert", "normal,dim2", "--assert", "cohen-macaulay,derivation-bound",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("derivation-bound"), "{out}");
}

#[test]
fn out_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("fsing-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let (code, _, _) = fsing(&["divisor", "--file", "family_2_5.ring", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["verdict"], "NotFPure");
    assert_eq!(doc["certificate"]["degree"], "-3");
    assert_eq!(doc["recheck"], true);
    assert!(doc["engine"]["pairs"].is_u64());
}

#[test]
fn ideal_operations_from_the_command_line() {
    let (code, out, _) = fsing(&["colon", "--vars", "x,y", "--p", "7", "--ideal", "x^2*y, x*y^2", "--by", "x*y"]);
    assert_eq!(code, 0);
    assert!(out.contains("generators = [\"x\",\"y\"]") || out.contains("generators = [\"y\",\"x\"]"), "{out}");
    let (_, out, _) = fsing(&["saturate", "--vars", "x,y", "--p", "7", "--ideal", "x^3*y, x^2*y^2", "--by", "x"]);
    assert!(out.contains("generators = [\"y\"]"), "{out}");
    let (_, out, _) = fsing(&["hilbert", "--vars", "x,y,z", "--relations", "x*y - z^2", "--p", "5"]);
    assert!(out.contains("dimension = 2"), "{out}");
    assert!(out.contains("hilbert_function = [1,3,5,7,9"), "{out}");
    let (_, out, _) = fsing(&["bracket", "--vars", "x,y", "--p", "3", "--ideal", "x + y", "--q", "9"]);
    assert!(out.contains("x^9 + y^9"), "{out}");
    let (code, _, _) = fsing(&["bracket", "--vars", "x,y", "--p", "3", "--ideal", "x + y", "--q", "6"]);
    assert_eq!(code, 1);
}

#[test]
fn check_runs_the_seeded_suites() {
    let (code, out, _) = fsing(&["check", "--seed", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("groebner-spairs = {\"cases\":500,\"failed\":0}"), "{out}");
}
