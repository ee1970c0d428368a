//! The `paldef` command line.
//!
//! Exit codes: 0 for true / valid / sat / ok, 1 for false / invalid / unsat /
//! rejected, 2 for errors. With `--json` every run prints exactly one JSON
//! object `{"subcommand", "verdict", "details"}`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::checker::{eval, extension_table};
use crate::defcore::{literal_sat, parse_literals, Conflict, Unsat, Verdict};
use crate::models::{self, validate, Model};
use crate::proof::{
    proof_from_json, proof_to_json, reduce, refutation, satisfiable, valid, verify_proof, SatResult,
};
use crate::syntax::{parse_form, Form};

/// Overrides the directory bare fixture names are looked up in.
pub const FIXTURES_ENV: &str = "PALDEF_FIXTURES";

pub const FIXTURE_NAMES: [&str; 4] = ["fig1", "fig2", "fig3", "fig4"];

#[derive(Parser, Debug)]
#[command(name = "paldef", version, about = "Public announcement logic with boolean definitions")]
struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FormulaInput {
    /// Formula in concrete syntax.
    #[arg(required_unless_present = "file")]
    formula: Option<String>,
    /// Read the formula from a file instead.
    #[arg(long, short = 'f', conflicts_with = "formula")]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a formula and print it in canonical form.
    Parse(FormulaInput),
    /// Check a model file against the model constraints.
    Validate { model: String },
    /// Evaluate a formula at a world of a model.
    Check {
        model: String,
        #[command(flatten)]
        input: FormulaInput,
        /// World id; defaults to the model's actual world.
        #[arg(long)]
        world: Option<String>,
        /// Also print the extension of every subformula.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Rewrite announcements away.
    Reduce(FormulaInput),
    /// Decide satisfiability of an announcement-free formula.
    Sat(FormulaInput),
    /// Decide validity.
    Valid(FormulaInput),
    /// Verify a JSON proof file.
    ProveVerify { proof: PathBuf },
    /// Decide a file of `==` / `!=` / boolean literals.
    Defcheck {
        literals: PathBuf,
        /// Where to write the refutation proof when the set is inconsistent.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Print the paths of the shipped example models.
    Fixtures,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Parse(_) => "parse",
            Command::Validate { .. } => "validate",
            Command::Check { .. } => "check",
            Command::Reduce(_) => "reduce",
            Command::Sat(_) => "sat",
            Command::Valid(_) => "valid",
            Command::ProveVerify { .. } => "prove-verify",
            Command::Defcheck { .. } => "defcheck",
            Command::Fixtures => "fixtures",
        }
    }
}

/// The result of one subcommand before rendering.
struct Outcome {
    code: i32,
    verdict: String,
    text: String,
    details: Value,
}

impl Outcome {
    fn new(code: i32, verdict: &str, text: impl Into<String>, details: Value) -> Self {
        Outcome {
            code,
            verdict: verdict.to_string(),
            text: text.into(),
            details,
        }
    }
}

/// Runs the command line with `args` (program name first) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() && args.iter().any(|a| a == "--json") => {
            let sub = args.iter().skip(1).map(|a| a.to_string_lossy()).find(|a| !a.starts_with('-'));
            let v = json!({"subcommand": sub, "verdict": "error", "details": {"message": e.to_string()}});
            let _ = writeln!(out, "{v}");
            return 2;
        }
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let name = cli.command.name();
    let result = execute(cli.command);
    let outcome = match result {
        Ok(o) => o,
        Err(message) => {
            if cli.json {
                let v = json!({"subcommand": name, "verdict": "error", "details": {"message": message}});
                let _ = writeln!(out, "{v}");
            } else {
                let _ = writeln!(err, "error: {message}");
            }
            return 2;
        }
    };
    let written = if cli.json {
        let v = json!({"subcommand": name, "verdict": outcome.verdict, "details": outcome.details});
        writeln!(out, "{v}")
    } else {
        write!(out, "{}", outcome.text)
    };
    if written.is_err() {
        return 2;
    }
    outcome.code
}

fn fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

/// Resolves a model argument: an existing path, or a fixture name such as
/// `fig1` or `fig1.json`.
pub fn resolve_model_path(arg: &str) -> PathBuf {
    let direct = PathBuf::from(arg);
    if direct.exists() || arg.contains(std::path::MAIN_SEPARATOR) {
        return direct;
    }
    let file = if arg.ends_with(".json") { arg.to_string() } else { format!("{arg}.json") };
    let candidate = fixtures_dir().join(file);
    if candidate.exists() {
        candidate
    } else {
        direct
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn formula(input: &FormulaInput) -> Result<Form, String> {
    let text = match (&input.formula, &input.file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => read(path)?,
        (None, None) => return Err("no formula given".into()),
    };
    parse_form(text.trim()).map_err(|e| format!("cannot parse formula: {e}"))
}

fn load_model(arg: &str) -> Result<Model, String> {
    let pre = models::load(resolve_model_path(arg)).map_err(|e| e.to_string())?;
    validate(pre).map_err(|report| format!("model is invalid:\n{report}"))
}

fn execute(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Parse(input) => {
            let f = formula(&input)?;
            let details = json!({
                "canonical": f.to_string(),
                "size": f.size(),
                "modal_depth": f.modal_depth(),
                "vocabulary": f.vocabulary().iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            });
            Ok(Outcome::new(0, "ok", format!("{f}\n"), details))
        }
        Command::Validate { model } => {
            let pre = models::load(resolve_model_path(&model)).map_err(|e| e.to_string())?;
            let worlds = pre.worlds.len();
            match validate(pre) {
                Ok(_) => Ok(Outcome::new(0, "ok", "OK\n", json!({"worlds": worlds}))),
                Err(report) => {
                    let list: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
                    Ok(Outcome::new(1, "invalid", format!("{report}\n"), json!({"violations": list})))
                }
            }
        }
        Command::Check {
            model,
            input,
            world,
            verbose,
        } => {
            let m = load_model(&model)?;
            let f = formula(&input)?;
            let w = match &world {
                Some(id) => m.world_index(id).ok_or_else(|| format!("unknown world `{id}`"))?,
                None => m
                    .actual()
                    .ok_or("the model has no actual world; pass --world")?,
            };
            let value = eval(&m, w, &f).map_err(|e| e.to_string())?;
            let mut text = format!("{value}\n");
            let mut details = json!({"world": m.world_id(w), "formula": f.to_string()});
            if verbose {
                let table = extension_table(&m, &f).map_err(|e| e.to_string())?;
                let mut rows = Vec::new();
                for (g, worlds) in &table {
                    let ids: Vec<&str> = worlds.iter().map(|&v| m.world_id(v)).collect();
                    text.push_str(&format!("  {{{}}}  {g}\n", ids.join(", ")));
                    rows.push(json!({"formula": g.to_string(), "worlds": ids}));
                }
                details["extensions"] = Value::Array(rows);
            }
            let verdict = if value { "true" } else { "false" };
            Ok(Outcome::new(if value { 0 } else { 1 }, verdict, text, details))
        }
        Command::Reduce(input) => {
            let f = formula(&input)?;
            let r = reduce(&f).map_err(|e| e.to_string())?;
            Ok(Outcome::new(0, "ok", format!("{r}\n"), json!({"reduced": r.to_string()})))
        }
        Command::Sat(input) => {
            let f = formula(&input)?;
            match satisfiable(&f).map_err(|e| e.to_string())? {
                SatResult::Sat(m) => {
                    let model = models::model_to_json(m.premodel());
                    let details = json!({"model": serde_json::from_str::<Value>(&model).expect("valid json")});
                    Ok(Outcome::new(0, "sat", format!("sat\n{model}"), details))
                }
                SatResult::Unsat => Ok(Outcome::new(1, "unsat", "unsat\n", json!({}))),
            }
        }
        Command::Valid(input) => {
            let f = formula(&input)?;
            let ok = valid(&f).map_err(|e| e.to_string())?;
            let verdict = if ok { "valid" } else { "invalid" };
            Ok(Outcome::new(if ok { 0 } else { 1 }, verdict, format!("{verdict}\n"), json!({})))
        }
        Command::ProveVerify { proof } => {
            let p = proof_from_json(&read(&proof)?).map_err(|e| e.to_string())?;
            let lines = p.lines.len();
            match verify_proof(&p) {
                Ok(()) => {
                    let last = p.last().map(|f| f.to_string());
                    Ok(Outcome::new(0, "ok", "ok\n", json!({"lines": lines, "theorem": last})))
                }
                Err(e) => Ok(Outcome::new(
                    1,
                    "rejected",
                    format!("rejected: {e}\n"),
                    json!({"line": e.line, "reason": e.reason}),
                )),
            }
        }
        Command::Defcheck { literals, witness } => {
            let lits = parse_literals(&read(&literals)?).map_err(|e| e.to_string())?;
            match literal_sat(&lits) {
                Verdict::Sat(seed) => {
                    let mut text = String::from("SAT\n");
                    for (a, image) in &seed.def {
                        text.push_str(&format!("  {a} := {image}  ({})\n", seed.valuation[a]));
                    }
                    let model = models::model_to_json(seed.model().premodel());
                    text.push_str(&model);
                    let details = json!({"model": serde_json::from_str::<Value>(&model).expect("valid json")});
                    Ok(Outcome::new(0, "sat", text, details))
                }
                Verdict::Unsat(reason) => {
                    let mut text = format!("UNSAT: {reason}\n");
                    let mut details = json!({"reason": reason.to_string()});
                    if let Unsat::Conflict(c) = &reason {
                        let (l, r) = match c {
                            Conflict::Circular(w) => w.conclusion(),
                            Conflict::Clash(w) => w.conclusion(),
                        };
                        details["conclusion"] = json!(format!("{l} == {r}"));
                        text.push_str(&c.derivation().to_string());
                        let proof = refutation(c);
                        details["proof_lines"] = json!(proof.lines.len());
                        if let Some(path) = &witness {
                            std::fs::write(path, proof_to_json(&proof))
                                .map_err(|e| format!("{}: {e}", path.display()))?;
                            text.push_str(&format!("refutation written to {}\n", path.display()));
                            details["witness"] = json!(path.display().to_string());
                        }
                    }
                    Ok(Outcome::new(1, "unsat", text, details))
                }
            }
        }
        Command::Fixtures => {
            let dir = fixtures_dir();
            let paths: Vec<String> = FIXTURE_NAMES
                .iter()
                .map(|n| dir.join(format!("{n}.json")).display().to_string())
                .collect();
            let text = paths.iter().map(|p| format!("{p}\n")).collect::<String>();
            Ok(Outcome::new(0, "ok", text, json!({"fixtures": paths})))
        }
    }
}
