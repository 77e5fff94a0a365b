//! End-to-end tests of the command-line surface: exit codes, golden
//! outputs, and determinism.

use std::io::Write;
use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["ohg".to_owned()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = ohg::cli::run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_fixture(name: &str, content: &str) -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    (dir, path)
}

const TRIANGLE: &str = "\
ohg 1
v u
v v
v w
e e1
e e2
e e3
i u e1 1 +
i v e1 1 -
i v e2 1 +
i w e2 1 -
i w e3 1 +
i u e3 1 -
";

const ZERO_EDGE: &str = "ohg 1\nv a\ne z\ne e\ni a e 1 +\n";

#[test]
fn validate_reports_counts() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    let (code, out, _) = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "ok: 3 vertices, 3 edges, 6 incidences, simple, strict\n");
}

#[test]
fn validate_rejects_bad_documents() {
    let (_d, p) = write_fixture("bad.ohg", "ohg 1\nv a\nv a\n");
    let (code, _, err) = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"));
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["validate"]);
    assert_eq!(code, 2);
}

#[test]
fn matrix_prints_the_zero_column() {
    let (_d, p) = write_fixture("z.ohg", ZERO_EDGE);
    let (code, out, _) = run(&["matrix", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "  z e\na 0 1\n");
}

#[test]
fn check_circuit_exit_codes() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    let (code, out, _) = run(&["check-circuit", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("circuit\n"));
    assert!(out.contains("oracle: minimally-dependent (nullity 1)"));

    // Pendant edge: not a circuit, exit 1.
    let pendant = format!("{TRIANGLE}v x\ne p\ni u p 1 +\ni x p 1 -\n");
    let (_d2, p2) = write_fixture("p.ohg", &pendant);
    let (code, out, _) = run(&["check-circuit", p2.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("not-circuit\n"));

    // Unbalanced triangle: out of scope, exit 1.
    let unbalanced = TRIANGLE.replace("i u e1 1 +", "i u e1 1 -");
    let (_d3, p3) = write_fixture("u.ohg", &unbalanced);
    let (code, out, _) = run(&["check-circuit", p3.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("out-of-scope-unbalanced\n"));
}

#[test]
fn dual_round_trips_through_the_cli() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    let (code, out, _) = run(&["dual", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_d2, p2) = write_fixture("dual.ohg", &out);
    let (code, out2, _) = run(&["dual", p2.to_str().unwrap()]);
    assert_eq!(code, 0);
    let original = format::strip_to_value(TRIANGLE);
    assert_eq!(format::strip_to_value(&out2), original);
}

mod format {
    /// Normalizes a document to its value lines for comparison.
    pub fn strip_to_value(text: &str) -> String {
        text.lines()
            .filter(|l| !l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[test]
fn switch_is_an_involution_via_cli() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    let (code, once, _) = run(&["switch", p.to_str().unwrap(), "u", "e2"]);
    assert_eq!(code, 0);
    let (_d2, p2) = write_fixture("once.ohg", &once);
    let (_, twice, _) = run(&["switch", p2.to_str().unwrap(), "u", "e2"]);
    assert_eq!(format::strip_to_value(&twice), format::strip_to_value(TRIANGLE));
    // Unknown ids are content errors.
    let (code, _, err) = run(&["switch", p.to_str().unwrap(), "nope"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown id"));
}

#[test]
fn subdivide_reports_classification_and_parses_back() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    let (code, out, _) = run(&[
        "subdivide",
        p.to_str().unwrap(),
        "e1",
        "--part1",
        "u",
        "--sign1",
        "+",
        "--sign2",
        "+",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("# note: subdivision: incompatible unbalanced"));
    let (_d2, p2) = write_fixture("sub.ohg", &out);
    let (code, _, _) = run(&["validate", p2.to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn contract_handles_both_kinds() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    let (code, out, _) = run(&["contract", p.to_str().unwrap(), "e1"]);
    assert_eq!(code, 0);
    assert!(out.contains("v u\n"));
    assert!(!out.contains("v v\n"));
    let (code, out, _) = run(&["contract", p.to_str().unwrap(), "v"]);
    assert_eq!(code, 0);
    assert!(out.contains("e e1\n"));
    assert!(!out.contains("e e2\n"));
}

#[test]
fn circles_lists_canonical_circles() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    let (code, out, _) = run(&["circles", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "+ pure length=3 u e1 v e2 w e3\ntotal: 1\n");
}

#[test]
fn random_is_deterministic_and_respects_count() {
    let (c1, out1, _) = run(&["random", "--seed", "9", "--count", "3"]);
    let (c2, out2, _) = run(&["random", "--seed", "9", "--count", "3"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);
    assert_eq!(out1.matches("# name: random-9-").count(), 3);
    let (_, other, _) = run(&["random", "--seed", "10", "--count", "3"]);
    assert_ne!(out1, other);
}

#[test]
fn dot_export_is_stable() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    let (code, out, _) = run(&["dot", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph ohg {\n"));
    assert!(out.contains("\"e1\" -> \"u\";"));
    assert!(out.contains("\"v\" -> \"e1\";"));
    let (_, again, _) = run(&["dot", p.to_str().unwrap()]);
    assert_eq!(out, again);
}

#[test]
fn verify_over_a_file_corpus() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    let (_d2, p2) = write_fixture("z.ohg", ZERO_EDGE);
    let (code, out, err) = run(&["verify", p.to_str().unwrap(), p2.to_str().unwrap()]);
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(out.matches("ok ").count(), 2);
}

#[test]
fn verify_runs_reduced_criteria() {
    // A scaled-down full run through the CLI plumbing.
    let (code, out, _) = run(&["verify", "--max-size", "5", "--count", "50"]);
    assert_eq!(code, 0, "output: {out}");
    assert_eq!(out.matches("pass criterion").count(), 7);
    assert!(out.ends_with("verify: all criteria passed\n"));
}

#[test]
fn strict_flag_gates_mixed_signs() {
    let mixed = "ohg 1\nv a\ne f\ni a f 1 +\ni a f 2 -\n";
    let (_d, p) = write_fixture("m.ohg", mixed);
    let (code, _, err) = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("mixed signs"));
    let (code, out, _) = run(&["validate", p.to_str().unwrap(), "--no-strict"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn analyze_flags_unknown_on_tiny_limits() {
    let (_d, p) = write_fixture("t.ohg", TRIANGLE);
    // A circle cap of zero forces LimitExceeded inside the balance check.
    let (code, out, _) = run(&["analyze", p.to_str().unwrap(), "--max-circles", "0"]);
    assert_eq!(code, 3);
    assert!(out.contains("balanced: unknown"));
}
