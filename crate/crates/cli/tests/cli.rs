//! Command-line behaviour: formats, exit codes, reports and DOT output.

use std::path::PathBuf;

use serde_json::Value;
use tauslice::Error;
use tauslice_cli::format::{parse_algebra, parse_modules, print_algebra, print_modules};
use tauslice_cli::run_command;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

/// Runs the tool; arguments ending in `.alg` or `.rep` name fixtures.
fn run(args: &[&str]) -> (String, i32) {
    let argv: Vec<String> = std::iter::once("tauslice".to_string())
        .chain(args.iter().map(|a| {
            if a.ends_with(".alg") || a.ends_with(".rep") {
                fixture(a).display().to_string()
            } else {
                a.to_string()
            }
        }))
        .collect();
    let out = run_command(argv);
    (out.text, out.code)
}

fn report(args: &[&str]) -> (Value, i32) {
    let (text, code) = run(args);
    (serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")), code)
}

const ALGEBRAS: [&str; 9] =
    ["ex1", "ex2", "fig1", "fig2", "fig3", "ex5_tilde", "ex5_a", "ex5_a_prime", "ex5_c"];

const MODULES: [(&str, &str); 9] = [
    ("ex1_m", "ex1"),
    ("ex2_m", "ex2"),
    ("fig1_sigma", "fig1"),
    ("fig1_sigma_tilde", "fig1"),
    ("fig2_sigma", "fig2"),
    ("fig3_sigma", "fig3"),
    ("ex5_sigma", "ex5_tilde"),
    ("ex5_sigma1", "ex5_a_prime"),
    ("ex5_sigma2", "ex5_a_prime"),
];

#[test]
fn canonical_print_is_identity_on_fixtures() {
    for name in ALGEBRAS {
        let text = read(&format!("{name}.alg"));
        assert_eq!(print_algebra(&parse_algebra(&text, None).unwrap()), text, "{name}");
    }
    for (rep, alg) in MODULES {
        let a = parse_algebra(&read(&format!("{alg}.alg")), None).unwrap();
        let text = read(&format!("{rep}.rep"));
        let ms = parse_modules(&text, &a).unwrap();
        assert!(ms.iter().all(|m| m.note.is_some()), "{rep}");
        assert_eq!(print_modules(&ms), text, "{rep}");
    }
}

#[test]
fn fmt_reproduces_fixture() {
    let (text, code) = run(&["fmt", "ex5_tilde.alg"]);
    assert_eq!(code, 0);
    assert_eq!(text, read("ex5_tilde.alg"));
}

#[test]
fn syntax_errors_carry_positions() {
    let text = "field Q\nvertex 1\nvertex 2\narrow a 1 -> 2\n";
    match parse_algebra(text, None) {
        Err(Error::Syntax { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a syntax error, got {other:?}"),
    }
    let a = parse_algebra("field Q\nvertex 1\nvertex 2\narrow a: 1 -> 2\n", None).unwrap();
    match parse_modules("module m\ndim 1=1 7=1\n", &a) {
        Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 9)),
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn non_parallel_relation_is_rejected() {
    let text = "field Q\nvertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 2\nrelation a*b - c\n";
    let err = parse_algebra(text, None).unwrap_err();
    assert!(matches!(err, Error::MalformedRelation(_)), "{err:?}");
}

#[test]
fn exit_codes_follow_verdicts() {
    let cases: [(&[&str], i32); 6] = [
        (&["check", "tau-tilting", "ex2.alg", "--module", "ex2_m.rep"], 0),
        (&["check", "tilting", "ex2.alg", "--module", "ex2_m.rep"], 1),
        (&["check", "complete-tau-slice", "fig3.alg", "--module", "fig3_sigma.rep"], 0),
        (&["check", "tilted", "fig3.alg"], 1),
        (&["check", "tilted", "ex5_c.alg"], 0),
        (&["check", "complete-slice", "fig2.alg", "--module", "fig2_sigma.rep"], 1),
    ];
    for (args, expected) in cases {
        let (r, code) = report(args);
        assert_eq!(code, expected, "{args:?}");
        let verdict = r["verdict"].as_str().unwrap();
        assert_eq!(verdict, if expected == 0 { "true" } else { "false" }, "{args:?}");
    }
}

#[test]
fn inconclusive_and_errors_exit_with_two() {
    let (r, code) = report(&["--cap", "20", "check", "tilted", "fig2.alg"]);
    assert_eq!((r["verdict"].as_str().unwrap(), code), ("inconclusive", 2));
    assert_eq!(run(&["info", "missing.alg"]).1, 2);
    assert_eq!(run(&["check", "tau-rigid", "ex2.alg"]).1, 2);
    assert_eq!(run(&["check", "tau-rigid", "ex2.alg", "--dimvec", "9,9,9,9"]).1, 2);
}

#[test]
fn bb_verify_on_ex1_reports_the_failure_of_part_two() {
    let (r, code) = report(&["bb-verify", "ex1.alg", "--module", "ex1_m.rep"]);
    let d = &r["details"];
    assert_eq!(d["part1"], true);
    assert_eq!(d["ext_equivalence"], false);
    assert_eq!(d["tau_agree"], false);
    assert_eq!(r["verdict"], "true");
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"][0]["role"], "sub_tau_a_not_sub_tau_c");
}

#[test]
fn bb_verify_on_ex2_lists_both_classes() {
    let (r, _) = report(&["bb-verify", "ex2.alg", "--module", "ex2_m.rep"]);
    let d = &r["details"];
    assert_eq!(d["x_class"].as_array().unwrap().len(), 5);
    assert_eq!(d["y_class"].as_array().unwrap().len(), 6);
    assert_eq!(d["ext_equivalence"], true);
}

#[test]
fn dimvec_queries_pick_indecomposables() {
    let (r, code) = report(&["check", "tau-rigid", "ex2.alg", "--dimvec", "1,1,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"][0]["dim_vector"], serde_json::json!([1, 1, 0, 1]));
}

#[test]
fn dot_output_is_deterministic() {
    let (first, code) = run(&["ar-quiver", "--dot", "ex5_a.alg"]);
    assert_eq!(code, 0);
    assert_eq!(first, run(&["ar-quiver", "--dot", "ex5_a.alg"]).0);
    assert!(first.starts_with("digraph ar_quiver {"));
    assert!(first.trim_end().ends_with('}'));
    let (r, _) = report(&["ar-quiver", "ex5_a.alg"]);
    let taus = r["details"]["tau"].as_array().unwrap().iter().filter(|t| !t.is_null()).count();
    assert_eq!(first.matches("style=dashed").count(), taus);
}

#[test]
fn field_override_changes_the_hash() {
    let (q, _) = report(&["info", "ex2.alg"]);
    let (p, code) = report(&["--field", "Fp:5", "info", "ex2.alg"]);
    assert_eq!(code, 0);
    assert_ne!(q["algebra_hash"], p["algebra_hash"]);
    assert_ne!(q["details"]["field"], p["details"]["field"]);
}

fn same_as_fixture(presentation: &Value, name: &str) -> bool {
    let built = parse_algebra(presentation.as_str().unwrap(), None).unwrap();
    built.same_presentation(&parse_algebra(&read(name), None).unwrap())
}

#[test]
fn quotient_and_extensions_rebuild_the_ex5_algebras() {
    let (r, _) = report(&["quotient", "ex5_tilde.alg", "--ideal", "omega"]);
    assert!(same_as_fixture(&r["details"]["presentation"], "ex5_a.alg"));
    let (r, _) = report(&["quotient", "ex5_a.alg", "--ideal", "alpha"]);
    assert!(same_as_fixture(&r["details"]["presentation"], "ex5_c.alg"));
    let (r, code) =
        report(&["extend", "one-point", "ex5_a_prime.alg", "--dimvec", "0,1,0", "--vertex", "4", "--arrows", "delta"]);
    assert_eq!(code, 0);
    assert!(same_as_fixture(&r["details"]["presentation"], "ex5_a.alg"));
    let (r, _) = report(&["extend", "split", "ex5_c.alg", "--over", "ex5_a.alg", "--ideal", "alpha"]);
    assert_eq!(r["details"]["same_presentation_as_over"], true);
}

#[test]
fn slices_and_counts() {
    let (r, _) = report(&["slices", "find", "fig1.alg", "--limit", "2"]);
    assert_eq!(r["details"]["count"], 2);
    let (r, code) = report(&["orbit-graph", "fig3.alg"]);
    assert_eq!((r["details"]["tree"].as_bool().unwrap(), code), (false, 1));
    let (r, _) = report(&["count-stt", "ex5_a_prime.alg"]);
    assert!(r["details"]["count"].as_u64().unwrap() > 0);
}
