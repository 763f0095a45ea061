//! Command-line front end.
//!
//! Exit codes follow the diff convention: `0` the checked property holds
//! (or the command simply succeeded), `1` the property fails, `2` usage or
//! parse errors, `3` an enumeration limit was exceeded.

use crate::elp::{self, Guess, SeFunction, WorldView};
use crate::equiv::{self, DifferenceWitness, EquivMode, WitnessKind};
use crate::parse::{parse_program_with, ParseMode, ParseOptions};
use crate::simplify::{self, RemovalReason};
use crate::syntax::{AtomSet, Program};
use crate::{asp, Caps, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

/// Per-invocation configuration assembled from the global flags.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub caps: Caps,
    pub json: bool,
    pub plain: bool,
}

#[derive(Parser)]
#[command(
    name = "elpse",
    version,
    about = "World views, strong equivalence, and simplification for ground epistemic logic programs"
)]
struct Cli {
    /// Emit JSON instead of text reports
    #[arg(long, global = true)]
    json: bool,
    /// Read inputs as plain programs: allows `~ ~`, forbids `not`
    #[arg(long, global = true)]
    plain: bool,
    /// Atom cap for SE-pair level enumeration
    #[arg(long, global = true, value_name = "N")]
    max_atoms: Option<usize>,
    /// Epistemic-literal cap for guess enumeration
    #[arg(long, global = true, value_name = "N")]
    max_elits: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a program and print its canonical form
    Parse { file: PathBuf },
    /// Union the input programs and enumerate semantic objects
    Enumerate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Classical models (plain programs only)
        #[arg(long, group = "what")]
        models: bool,
        /// Answer sets (plain programs only)
        #[arg(long = "answersets", group = "what")]
        answer_sets: bool,
        /// Candidate world views
        #[arg(long, group = "what")]
        cwv: bool,
        /// World views (the default)
        #[arg(long, group = "what")]
        wv: bool,
        /// The SE-function: per guess, realizability and SE-pairs
        #[arg(long, group = "what")]
        sefunction: bool,
    },
    /// Decide equivalence of two programs
    Check {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
        /// On failed strong equivalence, write a distinguishing plain
        /// program to this file
        #[arg(long, value_name = "OUT.elp")]
        witness: Option<PathBuf>,
    },
    /// Per-rule syntactic reports
    Rule {
        #[command(subcommand)]
        cmd: RuleCmd,
    },
    /// Remove tautological and subsumed rules
    Simplify {
        file: PathBuf,
        /// Write the simplified program here instead of stdout
        #[arg(short = 'o', value_name = "OUT")]
        out: Option<PathBuf>,
        /// Explain every removal
        #[arg(long)]
        explain: bool,
        /// Check that the output is strongly equivalent to the input
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Subcommand)]
enum RuleCmd {
    /// Tautology report for every rule
    Taut { file: PathBuf },
    /// Does the rule at the first index subsume the rule at the second?
    Subsume {
        file: PathBuf,
        subsumer: usize,
        subsumee: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Strong,
    Cwv,
    Wv,
}

/// Runs one invocation. `args` includes the program name.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version output
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    let mut caps = Caps::default();
    if let Some(n) = cli.max_atoms {
        caps = caps.with_max_atoms(n);
    }
    if let Some(n) = cli.max_elits {
        caps = caps.with_max_elits(n);
    }
    let config = RunConfig {
        caps,
        json: cli.json,
        plain: cli.plain,
    };
    match dispatch(cli.cmd, config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_file(path: &Path) -> crate::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> crate::Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

fn load(path: &Path, config: RunConfig, allow_reserved: bool) -> crate::Result<Program> {
    let opts = ParseOptions {
        mode: if config.plain {
            ParseMode::Plain
        } else {
            ParseMode::Elp
        },
        allow_reserved,
    };
    parse_program_with(&read_file(path)?, opts)
}

fn emit_json(out: &mut dyn Write, value: Value) -> crate::Result<i32> {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
    Ok(0)
}

fn names(p: &Program, s: AtomSet) -> Vec<String> {
    s.iter().map(|id| p.atom_name(id).to_string()).collect()
}

fn views_text(p: &Program, views: &[WorldView]) -> String {
    views
        .iter()
        .map(|wv| {
            let sets: Vec<String> = wv.interps.iter().map(|i| p.set_text(*i)).collect();
            format!("guess = {}; answer sets = {{ {} }}", wv.guess.text(p), sets.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn views_json(p: &Program, views: &[WorldView]) -> Value {
    Value::Array(
        views
            .iter()
            .map(|wv| {
                json!({
                    "guess": guess_json(p, wv.guess),
                    "interpretations": wv.interps.iter().map(|i| names(p, *i)).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn guess_json(p: &Program, g: Guess) -> Value {
    Value::Array(
        g.indices()
            .map(|i| Value::String(p.elit_text(p.elits()[i])))
            .collect(),
    )
}

fn witness_json(d: &DifferenceWitness) -> Value {
    let guess: Vec<String> = d
        .guess
        .iter()
        .map(|(a, negated)| {
            if *negated {
                format!("not ~ {a}")
            } else {
                format!("not {a}")
            }
        })
        .collect();
    let mut v = json!({
        "kind": d.kind.label(),
        "side": d.side.label(),
        "guess": guess,
    });
    if let Some((x, y)) = &d.pair {
        v["pair"] = json!({ "x": x, "y": y });
    }
    if let Some(views) = &d.views {
        v["world_view"] = json!(views);
    }
    v
}

fn witness_text(d: &DifferenceWitness) -> String {
    let guess: Vec<String> = d
        .guess
        .iter()
        .map(|(a, negated)| {
            if *negated {
                format!("not ~ {a}")
            } else {
                format!("not {a}")
            }
        })
        .collect();
    let guess = format!("{{{}}}", guess.join(", "));
    match d.kind {
        WitnessKind::PairMismatch | WitnessKind::RealizabilityMismatch => {
            let (x, y) = d.pair.clone().unwrap_or_default();
            let detail = if d.kind == WitnessKind::RealizabilityMismatch {
                format!("guess realizable only in {}", d.side.label())
            } else {
                String::new()
            };
            let pair = format!("({{{}}}, {{{}}})", x.join(", "), y.join(", "));
            if detail.is_empty() {
                format!(
                    "first difference at guess {guess}: SE-pair {pair} only in {}",
                    d.side.label()
                )
            } else {
                format!(
                    "first difference at guess {guess}: {detail}; SE-pair {pair} only in {}",
                    d.side.label()
                )
            }
        }
        WitnessKind::CwvMismatch => {
            let views = d
                .views
                .clone()
                .unwrap_or_default()
                .iter()
                .map(|i| format!("{{{}}}", i.join(", ")))
                .collect::<Vec<_>>()
                .join(", ");
            format!(
                "world view {{ {views} }} only in {} (guess {guess})",
                d.side.label()
            )
        }
    }
}

fn dispatch(cmd: Cmd, config: RunConfig, out: &mut dyn Write) -> crate::Result<i32> {
    match cmd {
        Cmd::Parse { file } => {
            let p = load(&file, config, false)?;
            if config.json {
                let rules: Vec<String> = (0..p.rules().len()).map(|i| p.rule_text(i)).collect();
                let elits: Vec<String> =
                    p.elits().iter().map(|e| p.elit_text(*e)).collect();
                emit_json(
                    out,
                    json!({
                        "command": "parse",
                        "atoms": p.atom_names(),
                        "elits": elits,
                        "rules": rules,
                    }),
                )
            } else {
                let _ = write!(out, "{p}");
                Ok(0)
            }
        }
        Cmd::Enumerate {
            files,
            models,
            answer_sets,
            cwv,
            wv,
            sefunction,
        } => {
            let mut program = load(&files[0], config, true)?;
            for f in &files[1..] {
                program = program.union(&load(f, config, true)?);
            }
            let wv = wv || !(models || answer_sets || cwv || sefunction);
            enumerate(&program, config, out, models, answer_sets, cwv, wv, sefunction)
        }
        Cmd::Check {
            file1,
            file2,
            mode,
            witness,
        } => {
            let p1 = load(&file1, config, false)?;
            let p2 = load(&file2, config, false)?;
            check(&p1, &p2, mode, witness.as_deref(), config, out)
        }
        Cmd::Rule { cmd } => rule_reports(cmd, config, out),
        Cmd::Simplify {
            file,
            out: out_file,
            explain,
            verify,
        } => run_simplify(&file, out_file.as_deref(), explain, verify, config, out),
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    p: &Program,
    config: RunConfig,
    out: &mut dyn Write,
    models: bool,
    answer_sets: bool,
    cwv: bool,
    wv: bool,
    sefunction: bool,
) -> crate::Result<i32> {
    if models || answer_sets {
        let sets = if models {
            asp::models(p, &config.caps)?
        } else {
            asp::answer_sets(p, &config.caps)?
        };
        let mode = if models { "models" } else { "answersets" };
        if config.json {
            return emit_json(
                out,
                json!({
                    "command": "enumerate",
                    "mode": mode,
                    "interpretations": sets.iter().map(|s| names(p, *s)).collect::<Vec<_>>(),
                }),
            );
        }
        for s in sets {
            let _ = writeln!(out, "{}", p.set_text(s));
        }
        return Ok(0);
    }
    if cwv || wv {
        let views = if cwv {
            elp::cwvs(p, &config.caps)?
        } else {
            elp::wvs(p, &config.caps)?
        };
        let mode = if cwv { "cwv" } else { "wv" };
        if config.json {
            return emit_json(
                out,
                json!({
                    "command": "enumerate",
                    "mode": mode,
                    "world_views": views_json(p, &views),
                }),
            );
        }
        if views.is_empty() {
            let _ = writeln!(out, "none");
        } else {
            let _ = writeln!(out, "{}", views_text(p, &views));
        }
        return Ok(0);
    }
    debug_assert!(sefunction);
    let f = elp::se_function(p, &config.caps)?;
    if config.json {
        let guesses: Vec<Value> = f
            .guesses()
            .iter()
            .map(|g| {
                let entry = f.entry(*g);
                json!({
                    "guess": guess_json(p, *g),
                    "realizable": !entry.is_empty(),
                    "pairs": entry.pairs().iter().map(|pr| {
                        json!({ "x": names(p, pr.x), "y": names(p, pr.y) })
                    }).collect::<Vec<_>>(),
                })
            })
            .collect();
        return emit_json(
            out,
            json!({
                "command": "enumerate",
                "mode": "sefunction",
                "guesses": guesses,
            }),
        );
    }
    print_se_function(p, &f, out);
    Ok(0)
}

fn print_se_function(p: &Program, f: &SeFunction, out: &mut dyn Write) {
    for g in f.guesses() {
        let entry = f.entry(g);
        if entry.is_empty() {
            let _ = writeln!(out, "guess {}: unrealizable", g.text(p));
        } else {
            let _ = writeln!(out, "guess {}: realizable", g.text(p));
            for pr in entry.pairs() {
                let _ = writeln!(out, "  ({}, {})", p.set_text(pr.x), p.set_text(pr.y));
            }
        }
    }
}

fn check(
    p1: &Program,
    p2: &Program,
    mode: ModeArg,
    witness_path: Option<&Path>,
    config: RunConfig,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    if witness_path.is_some() && mode != ModeArg::Strong {
        return Err(Error::Usage("--witness requires --mode strong".to_string()));
    }
    let verdict = match mode {
        ModeArg::Strong => equiv::strong_equiv(p1, p2, &config.caps)?,
        ModeArg::Cwv => equiv::ordinary_equiv(p1, p2, EquivMode::Cwv, &config.caps)?,
        ModeArg::Wv => equiv::ordinary_equiv(p1, p2, EquivMode::Wv, &config.caps)?,
    };
    let mut witness_file = None;
    if let (Some(path), Some(d)) = (witness_path, &verdict.difference) {
        let w = equiv::construct_witness(p1, p2, d, &config.caps)?;
        write_file(path, &w.to_string())?;
        witness_file = Some(path.display().to_string());
    }
    if config.json {
        let mut v = json!({
            "command": "check",
            "mode": verdict.mode.label(),
            "verdict": verdict.equivalent,
        });
        if let Some(d) = &verdict.difference {
            v["witness"] = witness_json(d);
        }
        if let Some(f) = witness_file {
            v["witness_file"] = Value::String(f);
        }
        emit_json(out, v)?;
    } else {
        let label = match mode {
            ModeArg::Strong => "strongly equivalent",
            ModeArg::Cwv => "cwv-equivalent",
            ModeArg::Wv => "wv-equivalent",
        };
        if verdict.equivalent {
            let _ = writeln!(out, "{label}");
        } else {
            let _ = writeln!(out, "not {label}");
            if let Some(d) = &verdict.difference {
                let _ = writeln!(out, "{}", witness_text(d));
            }
            if let Some(f) = witness_file {
                let _ = writeln!(out, "witness written to {f}");
            }
        }
    }
    Ok(if verdict.equivalent { 0 } else { 1 })
}

fn rule_reports(cmd: RuleCmd, config: RunConfig, out: &mut dyn Write) -> crate::Result<i32> {
    match cmd {
        RuleCmd::Taut { file } => {
            let p = load(&file, config, false)?;
            let reports: Vec<simplify::TautologyReport> = p
                .rules()
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    if config.plain {
                        simplify::asp_tautological(i, &r.as_plain().expect("plain mode"))
                    } else {
                        simplify::elp_tautological(i, r)
                    }
                })
                .collect();
            if config.json {
                let items: Vec<Value> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "rule": r.rule,
                            "text": p.rule_text(r.rule),
                            "tautological": r.tautological,
                            "fired": r.fired,
                        })
                    })
                    .collect();
                return emit_json(out, json!({ "command": "rule-taut", "reports": items }));
            }
            for r in &reports {
                let _ = writeln!(out, "rule {}: {}", r.rule, p.rule_text(r.rule));
                if r.tautological {
                    let conds: Vec<String> =
                        r.fired.iter().map(|c| format!("({c})")).collect();
                    let _ = writeln!(out, "  tautological {}", conds.join(", "));
                } else {
                    let _ = writeln!(out, "  not tautological");
                }
            }
            Ok(0)
        }
        RuleCmd::Subsume {
            file,
            subsumer,
            subsumee,
        } => {
            let p = load(&file, config, false)?;
            let bound = p.rules().len();
            if subsumer >= bound || subsumee >= bound {
                return Err(Error::Usage(format!(
                    "rule index out of range (program has {bound} rules)"
                )));
            }
            let report = if config.plain {
                let (verdict, failed) = simplify::asp_subsumes_detailed(
                    &p.rules()[subsumer].as_plain().expect("plain mode"),
                    &p.rules()[subsumee].as_plain().expect("plain mode"),
                )?;
                simplify::SubsumptionReport {
                    subsumer,
                    subsumee,
                    verdict,
                    rhd: false,
                    rhd2: false,
                    failed,
                    subsumee_tautological: false,
                    absorbed_violations: Vec::new(),
                }
            } else {
                simplify::elp_subsumes(subsumer, &p.rules()[subsumer], subsumee, &p.rules()[subsumee])
            };
            if config.json {
                emit_json(
                    out,
                    json!({
                        "command": "rule-subsume",
                        "report": {
                            "subsumer": report.subsumer,
                            "subsumee": report.subsumee,
                            "verdict": report.verdict,
                            "rhd": report.rhd,
                            "rhd2": report.rhd2,
                            "failed": report.failed,
                            "subsumee_tautological": report.subsumee_tautological,
                            "absorbed_violations": report.absorbed_violations,
                        },
                    }),
                )?;
            } else if report.subsumee_tautological {
                let _ = writeln!(
                    out,
                    "rule {subsumee} is tautological; any rule subsumes it"
                );
            } else if report.verdict {
                let _ = writeln!(out, "rule {subsumer} subsumes rule {subsumee}");
            } else {
                let conds: Vec<String> =
                    report.failed.iter().map(|c| format!("({c})")).collect();
                let _ = writeln!(
                    out,
                    "rule {subsumer} does not subsume rule {subsumee}: failed {}",
                    conds.join(", ")
                );
            }
            Ok(if report.verdict { 0 } else { 1 })
        }
    }
}

fn run_simplify(
    file: &Path,
    out_file: Option<&Path>,
    explain: bool,
    verify: bool,
    config: RunConfig,
    out: &mut dyn Write,
) -> crate::Result<i32> {
    let p = load(file, config, false)?;
    let outcome = simplify::simplify_program(&p);
    let verified = if verify {
        let v = equiv::strong_equiv(&p, &outcome.program, &config.caps)?;
        if !v.equivalent {
            return Err(Error::WitnessVerification(
                "simplified program is not strongly equivalent to the input".to_string(),
            ));
        }
        Some(true)
    } else {
        None
    };
    if config.json {
        let removed: Vec<Value> = outcome
            .removed
            .iter()
            .map(|r| match &r.reason {
                RemovalReason::Tautological { fired } => json!({
                    "rule": r.rule,
                    "text": p.rule_text(r.rule),
                    "reason": "tautological",
                    "fired": fired,
                }),
                RemovalReason::SubsumedBy { rule } => json!({
                    "rule": r.rule,
                    "text": p.rule_text(r.rule),
                    "reason": "subsumed",
                    "by": rule,
                }),
            })
            .collect();
        let mut v = json!({
            "command": "simplify",
            "program": outcome.program.to_string(),
            "removed": removed,
        });
        if let Some(ok) = verified {
            v["verified"] = Value::Bool(ok);
        }
        if let Some(path) = out_file {
            write_file(path, &outcome.program.to_string())?;
            v["out"] = Value::String(path.display().to_string());
        }
        return emit_json(out, v);
    }
    if explain {
        for r in &outcome.removed {
            let line = match &r.reason {
                RemovalReason::Tautological { fired } => {
                    let conds: Vec<String> = fired.iter().map(|c| format!("({c})")).collect();
                    format!(
                        "% removed rule {} ({}): tautological {}",
                        r.rule,
                        p.rule_text(r.rule),
                        conds.join(", ")
                    )
                }
                RemovalReason::SubsumedBy { rule } => format!(
                    "% removed rule {} ({}): subsumed by rule {} ({})",
                    r.rule,
                    p.rule_text(r.rule),
                    rule,
                    p.rule_text(*rule)
                ),
            };
            let _ = writeln!(out, "{line}");
        }
    }
    if verified == Some(true) {
        let _ = writeln!(out, "% verified: output strongly equivalent to input");
    }
    match out_file {
        Some(path) => {
            write_file(path, &outcome.program.to_string())?;
            let _ = writeln!(out, "% simplified program written to {}", path.display());
        }
        None => {
            let _ = write!(out, "{}", outcome.program);
        }
    }
    Ok(0)
}
