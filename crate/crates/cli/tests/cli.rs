use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_stringtop")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn scratch(name: &str, body: &str) -> String {
    let p = std::env::temp_dir().join(format!("stringtop-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn bracket_and_cobracket() {
    assert_eq!(run(&["bracket", "--surface", "torus-1", "a", "b"]), (0, "1/1 ab\n".into(), String::new()));
    assert_eq!(run(&["bracket", "--surface", "torus-1", "a", "a"]).1, "(empty)\n");
    assert_eq!(run(&["cobracket", "--surface", "torus-1", "ab"]).1, "(empty)\n");
    assert_eq!(run(&["bracket", "--symbol", "a,b,A,B", "b", "a"]).1, "-1/1 ab\n");
    // foreign letter and bad preset are input errors
    assert_eq!(run(&["bracket", "--surface", "torus-1", "a", "c"]).0, 2);
    assert_eq!(run(&["cobracket", "--surface", "klein", "a"]).0, 2);
    assert_eq!(run(&["bracket", "--surface", "pants", "--symbol", "a,A", "a", "a"]).0, 2);
}

#[test]
fn bialgebra_suite_small() {
    let (code, out, _) = run(&["bialgebra-suite", "--surface", "pants", "--max-len", "2", "--samples", "10", "--seed", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().skip(1).all(|l| l.contains("PASS")));
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn dialgebra_check_table() {
    let (code, out, _) = run(&["dialgebra-check", &data("dual-numbers.dlg"), "--axioms", "all"]);
    assert_eq!(code, 1);
    assert!(out.lines().any(|l| l.starts_with("module-compatibility") && l.ends_with("PASS")));
    let der = out.lines().find(|l| l.starts_with("derivation-compatibility")).unwrap();
    assert!(der.contains("FAIL witness (e,e)"), "{der}");

    let (code, out, _) = run(&["dialgebra-check", &data("dual-numbers.dlg"), "--axioms", "module-compatibility,unit"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);

    let (code, _, err) = run(&["dialgebra-check", &data("dual-numbers.dlg"), "--axioms", "frobenius"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown axiom"));
}

#[test]
fn malformed_files_report_lines() {
    let bad = scratch("bad.dlg", "dialgebra d\nbasis a deg 0\nprod a a -> b : 1/1\n");
    let (code, _, err) = run(&["classify", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    let (code, _, err) = run(&["tqft-eval", &data("dual-numbers.dlg"), &data("cycle.bordism"), "--input", "e"]);
    assert_eq!(code, 2);
    assert!(err.contains("cycle"));
    let empty = scratch("empty.bordism", "bordism b\nin 0\nout 1\n");
    let (code, _, err) = run(&["tqft-eval", &data("dual-numbers.dlg"), &empty, "--input", "e"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(run(&["classify", "/nonexistent/file.dlg"]).0, 2);
}

#[test]
fn classify_cells() {
    let (code, out, _) = run(&["classify", &data("trivial-lie.dlg")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.ends_with(" yes")).count(), 7);
    let (_, out, _) = run(&["classify", &data("dual-numbers.dlg")]);
    let yes: Vec<&str> = out.lines().filter(|l| l.ends_with(" yes")).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(yes, ["associative/module", "commutative/module"]);
}

#[test]
fn tqft_eval() {
    let d = data("dual-numbers.dlg");
    assert_eq!(run(&["tqft-eval", &d, &data("handle.bordism"), "--input", "e"]).1, "2/1 x\n");
    assert_eq!(run(&["tqft-eval", &d, &data("handle.bordism"), "--input", "x"]).1, "(empty)\n");
    assert_eq!(run(&["tqft-eval", &d, &data("zigzag.bordism"), "--input", "e,e"]).1, "1/1 e (x) x\n1/1 x (x) e\n");
    assert_eq!(run(&["tqft-eval", &d, &data("twist.bordism"), "--input", "e,x"]).1, "1/1 x (x) e\n");
    assert_eq!(run(&["tqft-eval", &d, &data("handle.bordism"), "--input", "e,e"]).0, 2);
    assert_eq!(run(&["tqft-eval", &d, &data("handle.bordism"), "--input", "q"]).0, 2);
    assert_eq!(run(&["tqft-eval", &d, &data("twist.bordism"), "--input", "e,x", "--sector", "open"]).0, 2);
    let (code, out, err) = run(&["tqft-eval", &data("dual-numbers-mutated.dlg"), &data("handle.bordism"), "--input", "x"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1/1 e\n");
    assert!(err.contains("warning") && err.contains("module-compatibility"));
}

#[test]
fn tqft_invariance() {
    let (code, out, _) = run(&["tqft-invariance", &data("dual-numbers.dlg"), "--genus-max", "1", "--ports-max", "2", "--samples", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("types 8 decompositions 40"));
    assert!(out.ends_with("invariant yes\n"));

    let (code, out, _) = run(&["tqft-invariance", &data("matrix-units-2.dlg"), "--sector", "open", "--genus-max", "1", "--ports-max", "2", "--samples", "5"]);
    assert_eq!(code, 0, "{out}");

    let (code, out, _) = run(&["tqft-invariance", &data("dual-numbers-mutated.dlg"), "--seed", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("gate module-compatibility   FAIL witness"));
    assert!(out.contains("invariant no"));
    let dag = &out[out.find("bordism ").unwrap()..];
    assert!(stringtop::tqft::text::parse(dag).is_ok());
}

#[test]
fn graph_ops() {
    let g = data("line.graph");
    assert_eq!(run(&["graph", &g, "compose", "a", "b"]).1, "1/1 a.b\n");
    assert_eq!(run(&["graph", &g, "compose", "a", "c"]).1, "(empty)\n");
    assert_eq!(run(&["graph", &g, "cut", "l.l.l", "--label", "loop"]).1, "1/1 l (x) l.l\n1/1 l.l (x) l\n");
    assert_eq!(run(&["graph", &g, "cut", "l.l.l", "--label", "loop", "--at", "2"]).1, "1/1 l.l (x) l\n");
    assert_eq!(run(&["graph", &g, "cut", "a", "--label", "mid", "--boundary", "end"]).1, "1/1 a (x) @2\n");
    assert_eq!(run(&["graph", &g, "restrict", "a", "d", "--start", "sources"]).1, "1/1 a\n1/1 d\n");
    assert_eq!(run(&["graph", &g, "restrict", "a", "b", "--end", "mid"]).1, "1/1 a\n");
    assert_eq!(run(&["graph", &g, "compose", "a", "zz"]).0, 2);
    assert_eq!(run(&["graph", &g, "cut", "a", "--label", "nope"]).0, 2);
    assert_eq!(run(&["graph", &data("rose.graph"), "compose", "a.b", "@o"]).1, "1/1 a.b\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["bialgebra-suite", "--max-len", "2", "--samples", "20", "--seed", "9"];
    assert_eq!(run(&args), run(&args));
    let args = ["tqft-invariance", &data("dual-numbers-mutated.dlg"), "--seed", "11"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a, b);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = run(&["selftest"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.contains(" PASS ")).count(), 7);
}
