use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{Map, Value};

use ngerm_cli::report::parse_text;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn ngerm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ngerm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[track_caller]
fn ok(args: &[&str]) -> String {
    let out = ngerm(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}\n{}", stderr(&out));
    stdout(&out)
}

fn json(args: &[&str]) -> Map<String, Value> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    match serde_json::from_str(&ok(&full)).unwrap() {
        Value::Object(m) => m,
        other => panic!("not an object: {other}"),
    }
}

fn as_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Runs a command in both report formats and checks that every field
/// carries the same value; returns the JSON object.
fn both_formats(args: &[&str]) -> Map<String, Value> {
    let j = json(args);
    let mut full = args.to_vec();
    full.extend(["--format", "text"]);
    let t = parse_text(&ok(&full));
    assert_eq!(j.len(), t.len(), "{args:?}: field sets differ");
    for (k, v) in &j {
        let tv = t.get(k).unwrap_or_else(|| panic!("{args:?}: text lacks {k}"));
        assert_eq!(as_text(v), as_text(tv), "{args:?}: field {k}");
    }
    j
}

fn num(m: &Map<String, Value>, k: &str) -> u64 {
    m[k].as_u64().unwrap_or_else(|| panic!("{k} = {}", m[k]))
}

fn flag(m: &Map<String, Value>, k: &str) -> bool {
    m[k].as_bool().unwrap_or_else(|| panic!("{k} = {}", m[k]))
}

// Expected values: (a-1)(b-1) for y^b - x^a, and 2V - a - b + 1 for the
// Newton number of a convenient diagram of area V.
#[test]
fn analyze_poly_examples() {
    let r = both_formats(&["analyze-poly", "y^2-x^3"]);
    assert_eq!((num(&r, "mu"), num(&r, "nu")), (2, 2));
    assert!(flag(&r, "nondegenerate") && flag(&r, "equal") && flag(&r, "reduced"));

    // u^2 + x^3 with u = x + y: an A2 singularity, diagram {2\2} with nu = 2*2 - 2 - 2 + 1.
    let r = both_formats(&["analyze-poly", "(x+y)^2+x^3"]);
    assert_eq!((num(&r, "mu"), num(&r, "nu")), (2, 1));
    assert!(!flag(&r, "nondegenerate") && !flag(&r, "equal"));
    assert_eq!(
        r["faces"],
        serde_json::json!([{"from": [0, 2], "to": [2, 0], "nondegenerate": false}])
    );

    let r = both_formats(&["analyze-poly", "xy"]);
    assert_eq!((num(&r, "mu"), num(&r, "nu")), (1, 1));
    assert!(flag(&r, "nondegenerate") && flag(&r, "reduced"));
}

#[test]
fn analyze_poly_reads_files_and_reports_both_oracles() {
    let r = both_formats(&["analyze-poly", "--file", &fixture("cusp_times_line.poly")]);
    assert_eq!(r["vertices"], serde_json::json!([[0, 3], [1, 2], [4, 0]]));
    assert_eq!(num(&r, "mu_resultant"), num(&r, "mu_linear"));
    // Cusp and transversal line meeting with multiplicity 2: 2 + 0 + 2*2 - 2 + 1.
    assert_eq!(num(&r, "mu"), 5);
    assert!(flag(&r, "equal"));
    let r = json(&[
        "analyze-poly",
        "--file",
        &fixture("tangent_cusp.poly"),
        "--oracle",
        "linear",
    ]);
    assert!(r["mu_resultant"].is_null());
    assert_eq!(num(&r, "mu_linear"), 2);
}

#[test]
fn non_reduced_input_has_no_milnor_number() {
    let r = both_formats(&["analyze-poly", "x*y^2"]);
    assert!(!flag(&r, "reduced"));
    assert!(r["mu"].is_null());
    assert_eq!(r["nu"], "inf");
}

#[test]
fn input_errors_exit_one() {
    for args in [
        vec!["analyze-poly", "y^2 -* x"],
        vec!["analyze-poly", "0"],
        vec!["analyze-poly", "1 + x"],
        vec!["render", "x^2", "--format", "json"],
        vec!["analyze-germ", "--format", "svg", "missing.json"],
        vec!["frobnicate"],
    ] {
        let out = ngerm(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!stderr(&out).is_empty());
    }
    assert_eq!(ngerm(&["--help"]).status.code(), Some(0));
}

#[test]
fn invalid_germ_prints_diagnostics() {
    let out = ngerm(&["analyze-germ", &fixture("invalid_triple.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("contact triple"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
}

#[test]
fn analyze_germ_examples() {
    let r = both_formats(&["analyze-germ", &fixture("cusp.json")]);
    assert!(flag(&r, "ngerm") && flag(&r, "nondegenerate"));
    assert_eq!((num(&r, "mu"), num(&r, "mu_lemma55"), num(&r, "nu")), (2, 2, 2));

    // Three cusps with pairwise intersection 4: mu = 3*2 + 2*12 - 3 + 1.
    let r = both_formats(&["analyze-germ", &fixture("three_transversal_cusps.json")]);
    assert_eq!(num(&r, "mu"), 28);
    assert_eq!(num(&r, "nu"), 27);
    assert!(flag(&r, "nu_exact"));
    assert!(!flag(&r, "ngerm") && !flag(&r, "nondegenerate"));
    assert_eq!(num(&r, "tangents"), 3);
    let comps = r["components"].as_array().unwrap();
    assert_eq!(comps.len(), 3);
    assert!(comps.iter().all(|c| c["is_ngerm"] == true));

    let r = both_formats(&["analyze-germ", &fixture("two_pairs_branch.json")]);
    assert!(!flag(&r, "ngerm"));
    assert!(r["refutation"].as_str().unwrap().contains("branch 0"));
    assert!(r["mu"].is_null());
    let r = json(&[
        "analyze-germ",
        &fixture("two_pairs_branch.json"),
        "--branch-milnor",
        "0=16",
    ]);
    assert_eq!(num(&r, "mu"), 16);

    let r = both_formats(&["analyze-germ", &fixture("smooth_triple.json")]);
    assert_eq!(r["contacts"][1][2], "3");
    assert_eq!(r["contact_exponent"], "2");
    assert_eq!(r["tangential_components"], serde_json::json!([[0, 1, 2]]));
    assert_eq!(num(&r, "multiplicity"), 3);
}

#[test]
fn model_examples() {
    let r = both_formats(&["model", &fixture("cusp.json"), "--seed", "1"]);
    assert!(flag(&r, "verified"));
    let eq = r["equation"].as_str().unwrap();
    let analyzed = json(&["analyze-poly", eq]);
    assert_eq!(analyzed["vertices"], serde_json::json!([[0, 2], [3, 0]]));
    assert_eq!(num(&analyzed, "mu"), 2);

    let r = both_formats(&["model", &fixture("smooth_triple.json")]);
    assert_eq!(r["factors"].as_array().unwrap().len(), 3);
    assert_eq!((num(&r, "mu"), num(&r, "mu_lemma55"), num(&r, "mu_germ")), (12, 12, 12));
    assert_eq!(r["nu"], 12);

    let out = ngerm(&["model", &fixture("two_cusps_contact2.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not an N-germ"));
}

fn grid(ascii: &str) -> Vec<(u64, Vec<char>)> {
    ascii
        .lines()
        .filter_map(|l| l.split_once(" | "))
        .filter_map(|(b, row)| {
            Some((
                b.trim().parse().ok()?,
                row.split(' ').filter_map(|c| c.chars().next()).collect(),
            ))
        })
        .collect()
}

fn glyph(ascii: &str, a: usize, b: u64) -> char {
    let g = grid(ascii);
    g.iter().find(|(row, _)| *row == b).unwrap().1[a]
}

#[test]
fn render_ascii() {
    let out = ok(&["render", "(y^2-x^3)*(y-x)"]);
    for (a, b) in [(0, 3), (1, 2), (4, 0)] {
        assert_eq!(glyph(&out, a, b), 'V', "{out}");
    }
    assert_eq!(glyph(&out, 3, 1), '*');
    assert_eq!(glyph(&out, 2, 1), '.');
    let out = ok(&["render", "y^2-x^3"]);
    assert!(out.contains("vertices: (0,2) (3,0)"));

    // {2\1} + {6\2} has the lattice point (5,1) in the middle of its long face.
    let out = ok(&["render", "--germ", &fixture("smooth_triple.json")]);
    assert_eq!(glyph(&out, 5, 1), '+');
    assert_eq!(glyph(&out, 8, 0), 'V');
    let out = ok(&["render", "--diagram", "{1\\inf} + {3\\2}"]);
    assert_eq!(glyph(&out, 1, 3), '|');
    assert_eq!(glyph(&out, 0, 3), '.');
}

#[test]
fn render_svg_uses_upward_beta() {
    let out = ok(&["render", "y^2-x^3", "--format", "svg"]);
    assert!(out.starts_with("<svg"));
    let points = out.lines().find(|l| l.contains("staircase")).unwrap();
    let pts: Vec<(i64, i64)> = points
        .split("points=\"")
        .nth(1)
        .unwrap()
        .trim_end_matches("\"/>")
        .split(' ')
        .map(|p| {
            let (x, y) = p.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    // Vertices (0,2) and (3,0) are consecutive and 24 px apart per unit.
    let (v0, v1) = (pts[1], pts[2]);
    assert_eq!(v1.0 - v0.0, 3 * 24);
    assert_eq!(v1.1 - v0.1, 2 * 24);
    assert_eq!(out.matches("class=\"support\"").count(), 1);
    assert_eq!(out.matches("r=\"5\"").count(), 2);
}

#[test]
fn crosscheck_examples() {
    let r = both_formats(&["crosscheck", &fixture("cusp.json")]);
    assert!(flag(&r, "pass"));
    assert_eq!(r["trials"].as_array().unwrap().len(), 5);

    let r = json(&["crosscheck", &fixture("smooth_triple.json")]);
    assert!(flag(&r, "pass"));
    for t in r["trials"].as_array().unwrap() {
        assert_eq!((t["mu"].as_u64(), t["nu"].as_u64()), (Some(12), Some(12)));
    }

    let r = json(&["crosscheck", &fixture("two_cusps_contact2.json")]);
    assert!(flag(&r, "pass") && !flag(&r, "nondegenerate"));
    assert_eq!(r["source"], "realization");
    for t in r["trials"].as_array().unwrap() {
        assert!(t["mu"].as_u64().unwrap() > t["nu"].as_u64().unwrap());
    }

    let r = json(&["crosscheck", &fixture("three_transversal_cusps.json"), "--trials", "2"]);
    assert!(flag(&r, "pass"));
    assert!(r["trials"].as_array().unwrap().iter().all(|t| t["mu"] == 28));
}

#[test]
fn crosscheck_failure_is_reproducible() {
    let file = fixture("two_pairs_branch.json");
    let out = ngerm(&[
        "crosscheck",
        &file,
        "--branch-milnor",
        "0=15",
        "--seed",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    let body = &err[err.find('{').unwrap()..];
    let r: Value = serde_json::from_str(body).unwrap();
    assert_eq!(r["pass"], false);
    assert_eq!(r["failure"]["seed"], 3);
    let repro = r["failure"]["repro"].as_str().unwrap();
    assert!(repro.ends_with("--seed 3 --trials 1"));
    let mut args: Vec<&str> = repro.split(' ').skip(1).collect();
    args.extend(["--branch-milnor", "0=15"]);
    assert_eq!(ngerm(&args).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let file = fixture("cusp_line.json");
    for args in [
        vec!["model", "--seed", "4", &file],
        vec!["analyze-poly", "(x+y)^2+x^3", "--seed", "9"],
    ] {
        assert_eq!(json(&args), json(&args));
    }
    let a = json(&["analyze-poly", "(y^2-x^3)*(y-x)", "--seed", "0"]);
    let b = json(&["analyze-poly", "(y^2-x^3)*(y-x)", "--seed", "7"]);
    assert_eq!(a, b);
}

#[test]
fn literal_semantics_flag_is_reported() {
    let r = json(&["analyze-germ", &fixture("cusp_line.json"), "--literal"]);
    assert_eq!(r["semantics"], "literal");
    let r = json(&["analyze-germ", &fixture("ordinary_quadruple.json")]);
    assert_eq!(r["semantics"], "relaxed");
    assert_eq!((num(&r, "mu"), num(&r, "nu")), (9, 9));
}
