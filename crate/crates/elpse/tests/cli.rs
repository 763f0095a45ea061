//! End-to-end checks of the command-line surface: output shapes, exit
//! codes, JSON validity, determinism, and the witness write/re-check loop.

use serde_json::Value;
use std::path::PathBuf;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("elpse".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = elpse::cli::run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("elpse_{}_{name}", std::process::id()))
}

#[test]
fn parse_prints_canonical_form() {
    let (code, out, _) = run(&["parse", &fixture("sheneiter.elp")]);
    assert_eq!(code, 0);
    assert_eq!(out, "#atoms p, p'.\n#elits not p, not ~ p.\np' :- not p.\n");
}

#[test]
fn parse_reports_errors_with_position() {
    let bad = temp_path("bad.elp");
    std::fs::write(&bad, "p :- q\n").unwrap();
    let (code, _, err) = run(&["parse", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("syntax error"), "{err}");
    std::fs::remove_file(&bad).ok();
}

#[test]
fn enumerate_world_views_is_the_default() {
    let (code, out, _) = run(&["enumerate", &fixture("sheneiter.elp")]);
    assert_eq!(code, 0);
    assert_eq!(out, "guess = {not p}; answer sets = { {p'} }\n");
    // a single candidate world view is also the world view
    let (code, cwv_out, _) = run(&["enumerate", &fixture("sheneiter.elp"), "--cwv"]);
    assert_eq!(code, 0);
    assert_eq!(cwv_out, out);
}

#[test]
fn enumerate_unions_multiple_files() {
    let (code, out, _) = run(&[
        "enumerate",
        &fixture("gelfond.elp"),
        &fixture("bridge.elp"),
        "--wv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "guess = {not ~ p}; answer sets = { {p} }\n");

    let (code, out, _) = run(&[
        "enumerate",
        &fixture("sheneiter.elp"),
        &fixture("bridge.elp"),
        "--wv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "guess = {not p}; answer sets = { {p'} }\n");
}

#[test]
fn enumerate_models_requires_plain_programs() {
    let (code, _, err) = run(&["enumerate", &fixture("sheneiter.elp"), "--models"]);
    assert_eq!(code, 2);
    assert!(err.contains("plain"), "{err}");

    let (code, out, _) = run(&["enumerate", &fixture("bridge.elp"), "--models"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{p}\n{p'}\n{p, p'}\n");

    let (code, out, _) = run(&["enumerate", &fixture("bridge.elp"), "--answersets"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{p}\n");
}

#[test]
fn enumerate_se_function_lists_guesses() {
    let (code, out, _) = run(&["enumerate", &fixture("loop_epistemic.elp"), "--sefunction"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "guess {}: realizable\n  ({}, {p})\n  ({p}, {p})\nguess {not p}: unrealizable\n"
    );
}

#[test]
fn check_equivalent_inputs_exit_zero() {
    let (code, out, _) = run(&[
        "check",
        &fixture("gelfond.elp"),
        &fixture("gelfond.elp"),
        "--mode",
        "strong",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "strongly equivalent\n");

    let (code, out, _) = run(&[
        "check",
        &fixture("loop_epistemic.elp"),
        &fixture("loop_default.elp"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "strongly equivalent\n");
}

#[test]
fn check_ordinary_modes() {
    let (code, out, _) = run(&[
        "check",
        &fixture("gelfond.elp"),
        &fixture("sheneiter.elp"),
        "--mode",
        "wv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "wv-equivalent\n");

    let (code, out, _) = run(&[
        "check",
        &fixture("gelfond.elp"),
        &fixture("sheneiter.elp"),
        "--mode",
        "cwv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "cwv-equivalent\n");
}

#[test]
fn check_strong_reports_the_difference() {
    let (code, out, _) = run(&[
        "check",
        &fixture("gelfond.elp"),
        &fixture("sheneiter.elp"),
        "--mode",
        "strong",
    ]);
    assert_eq!(code, 1);
    assert_eq!(
        out,
        "not strongly equivalent\nfirst difference at guess {not p}: SE-pair ({}, {p}) only in left\n"
    );
}

#[test]
fn check_json_shape() {
    let (code, out, _) = run(&[
        "check",
        &fixture("gelfond.elp"),
        &fixture("sheneiter.elp"),
        "--json",
    ]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "check");
    assert_eq!(v["mode"], "strong");
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["kind"], "pair-mismatch");
    assert_eq!(v["witness"]["side"], "left");
    assert_eq!(v["witness"]["guess"], serde_json::json!(["not p"]));
    assert_eq!(v["witness"]["pair"]["x"], serde_json::json!([]));
    assert_eq!(v["witness"]["pair"]["y"], serde_json::json!(["p"]));
}

#[test]
fn witness_files_recheck_through_enumerate() {
    let w = temp_path("witness.elp");
    let (code, out, _) = run(&[
        "check",
        &fixture("gelfond.elp"),
        &fixture("sheneiter.elp"),
        "--witness",
        w.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("witness written to"), "{out}");

    let (code_g, views_g, _) = run(&["enumerate", &fixture("gelfond.elp"), w.to_str().unwrap()]);
    let (code_s, views_s, _) = run(&["enumerate", &fixture("sheneiter.elp"), w.to_str().unwrap()]);
    assert_eq!((code_g, code_s), (0, 0));
    assert_ne!(views_g, views_s, "the witness must separate the world views");
    std::fs::remove_file(&w).ok();
}

#[test]
fn witness_flag_needs_strong_mode() {
    let w = temp_path("unused.elp");
    let (code, _, err) = run(&[
        "check",
        &fixture("gelfond.elp"),
        &fixture("sheneiter.elp"),
        "--mode",
        "wv",
        "--witness",
        w.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("--mode strong"), "{err}");
}

#[test]
fn rule_tautology_reports() {
    let f = temp_path("taut.elp");
    std::fs::write(&f, "p :- p.\np' :- not p.\n").unwrap();
    let (code, out, _) = run(&["rule", "taut", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "rule 0: p :- p.\n  tautological (a)\nrule 1: p' :- not p.\n  not tautological\n"
    );
    let (code, out, _) = run(&["rule", "taut", f.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reports"][0]["tautological"], true);
    assert_eq!(v["reports"][0]["fired"], serde_json::json!(["a"]));
    assert_eq!(v["reports"][1]["tautological"], false);
    std::fs::remove_file(&f).ok();
}

#[test]
fn rule_subsumption_reports_and_exit_codes() {
    let f = temp_path("subsume.elp");
    std::fs::write(&f, "p :- not p.\np :- ~ p.\n").unwrap();
    let (code, out, _) = run(&["rule", "subsume", f.to_str().unwrap(), "0", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "rule 0 subsumes rule 1\n");
    let (code, out, _) = run(&["rule", "subsume", f.to_str().unwrap(), "1", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "rule 1 subsumes rule 0\n");

    let (code, _, err) = run(&["rule", "subsume", f.to_str().unwrap(), "0", "7"]);
    assert_eq!(code, 2);
    assert!(err.contains("out of range"), "{err}");
    std::fs::remove_file(&f).ok();

    let f = temp_path("nosubsume.elp");
    std::fs::write(&f, "p :- q.\np.\n").unwrap();
    let (code, out, _) = run(&["rule", "subsume", f.to_str().unwrap(), "0", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("does not subsume"), "{out}");
    assert!(out.contains("(b)"), "{out}");
    std::fs::remove_file(&f).ok();
}

#[test]
fn rule_commands_in_plain_mode() {
    let f = temp_path("plain_rules.elp");
    std::fs::write(&f, "a :- ~ c, ~ ~ c.\na :- b.\na :- b, c.\n").unwrap();
    let (code, out, _) = run(&["rule", "taut", f.to_str().unwrap(), "--plain"]);
    assert_eq!(code, 0);
    assert!(out.contains("tautological (gamma)"), "{out}");
    let (code, out, _) = run(&["rule", "subsume", f.to_str().unwrap(), "1", "2", "--plain"]);
    assert_eq!(code, 0);
    assert_eq!(out, "rule 1 subsumes rule 2\n");
    std::fs::remove_file(&f).ok();
}

#[test]
fn simplify_flows() {
    let f = temp_path("simplify.elp");
    std::fs::write(&f, "p :- p.\np' :- not p.\np' :- not p, q.\n").unwrap();
    let (code, out, _) = run(&["simplify", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "#atoms p, p', q.\n#elits not p.\np' :- not p.\n");

    let (code, out, _) = run(&["simplify", f.to_str().unwrap(), "--explain", "--verify"]);
    assert_eq!(code, 0);
    assert!(out.contains("% removed rule 0 (p :- p.): tautological (a)"), "{out}");
    assert!(
        out.contains("% removed rule 2 (p' :- q, not p.): subsumed by rule 1 (p' :- not p.)"),
        "{out}"
    );
    assert!(out.contains("% verified: output strongly equivalent to input"), "{out}");

    let o = temp_path("simplified.elp");
    let (code, _, _) = run(&["simplify", f.to_str().unwrap(), "-o", o.to_str().unwrap()]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&o).unwrap();
    assert_eq!(written, "#atoms p, p', q.\n#elits not p.\np' :- not p.\n");
    // the simplified output re-parses and simplifies to itself
    let (code, out2, _) = run(&["simplify", o.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out2, written);
    std::fs::remove_file(&f).ok();
    std::fs::remove_file(&o).ok();
}

#[test]
fn caps_map_to_resource_exit_code() {
    let (code, _, err) = run(&[
        "enumerate",
        &fixture("sheneiter.elp"),
        "--sefunction",
        "--max-atoms",
        "1",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("resource limit"), "{err}");

    let (code, _, err) = run(&[
        "check",
        &fixture("gelfond.elp"),
        &fixture("sheneiter.elp"),
        "--max-elits",
        "1",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("resource limit"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = run(&["enumerate"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["frobnicate", "x.elp"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["parse", "/nonexistent/nowhere.elp"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read"), "{err}");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["enumerate", &fixture("gelfond.elp"), "--sefunction", "--json"];
    let (c1, out1, _) = run(&args);
    let (c2, out2, _) = run(&args);
    assert_eq!(c1, c2);
    assert_eq!(out1, out2);
    let v: Value = serde_json::from_str(&out1).unwrap();
    assert_eq!(v["command"], "enumerate");
    assert_eq!(v["mode"], "sefunction");
    assert!(v["guesses"].as_array().unwrap().len() == 4);
}

#[test]
fn enumerate_world_views_json() {
    let (code, out, _) = run(&["enumerate", &fixture("sheneiter.elp"), "--wv", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["world_views"],
        serde_json::json!([{ "guess": ["not p"], "interpretations": [["p'"]] }])
    );
}

#[test]
fn plain_mode_parses_double_default_negation() {
    let f = temp_path("dneg.elp");
    std::fs::write(&f, "a :- ~ ~ b.\n").unwrap();
    let (code, _, err) = run(&["parse", f.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("double default negation"), "{err}");
    let (code, out, _) = run(&["parse", f.to_str().unwrap(), "--plain"]);
    assert_eq!(code, 0);
    assert_eq!(out, "#atoms a, b.\na :- ~ ~ b.\n");
    std::fs::remove_file(&f).ok();
}
