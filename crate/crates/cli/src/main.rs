//! `tgp`: command-line front end for the deformed TGP toolkit.
//!
//! Every command prints one JSON object `{command, inputs, outputs, seed}`
//! on stdout. Exit codes: 0 ok, 1 check failure, 2 parse error,
//! 3 precondition error, 4 theorem violation.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tgp_core::partitions::{kostka_number, modified_kostka, Word};
use tgp_core::polyring::parse_rational;
use tgp_core::schurweyl::{
    fundamental_product_dimension, schur_weyl_image, weyl_dimension, weyl_gmodule_decomposition,
};
use tgp_core::suite::{algebra_report, run_suite, CheckSelection};
use tgp_core::symgrp::sign_twist;
use tgp_core::tgp::{
    build_quotient, d_lambda, deformed_generators, example_report, parameter_battery, permutation_module_character,
    predicted_graded_character, reduced_generators, split_check, tanisaki_generators,
};
use tgp_core::{Error, EvalParams, Partition, Rational};

#[derive(Parser)]
#[command(name = "tgp", version, about = "Deformed Tanisaki-Garsia-Procesi algebras")]
struct Cli {
    /// Print an aligned human-readable summary instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Add the wall time to the report (makes the output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kostka number K_{shape,content}, or the modified Kostka-Foulkes polynomial.
    Kostka {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        content: Partition,
        #[arg(long)]
        modified: bool,
    },
    /// Cocharge of a word whose content is a partition.
    Cocharge {
        /// Letters separated by spaces or commas, or a run of single digits.
        #[arg(long, value_parser = parse_word)]
        word: Word,
    },
    /// The Tanisaki generators, deformed when parameters are given.
    Tanisaki {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<EvalParams>,
        /// Only the reduced generating set.
        #[arg(long)]
        reduced: bool,
    },
    /// Dimension of R_a(lambda) against d_lambda.
    Dim {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<EvalParams>,
    },
    /// Graded character of R(lambda) against the Kostka-Foulkes prediction.
    Gchar {
        #[arg(long)]
        lambda: Partition,
    },
    /// S_d-character of R_a(lambda) against the permutation-module character.
    Char {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<EvalParams>,
    },
    /// All checks on R_a(lambda); without parameters, over the seeded battery.
    FlatCheck {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<EvalParams>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compares R_b(lambda) with the induced product of its parameter blocks.
    SplitCheck {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        params: EvalParams,
    },
    /// sl_{n+1} decomposition of the local Weyl module and of the sign-twisted
    /// quotient.
    SchurWeyl {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<EvalParams>,
    },
    /// Matrices of the simple transpositions and of t_1..t_d on R_a(lambda).
    RepMatrices {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<EvalParams>,
        /// Twist by the sign character.
        #[arg(long)]
        amended: bool,
    },
    /// The three-dimensional module for (2,1) with labels a, b and its limits.
    Example6 {
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        b: Rational,
    },
    /// Every check for all partitions of size up to max-d.
    Suite {
        #[arg(long, default_value_t = 4)]
        max_d: usize,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_rat(s: &str) -> Result<Rational, Error> {
    parse_rational(s)
}

fn parse_word(s: &str) -> Result<Word, Error> {
    let s = s.trim();
    let letters: Vec<usize> = if s.contains([' ', ',']) {
        s.split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad letter {c:?}"))))
            .collect::<Result<_, _>>()?
    };
    Word::new(letters)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    CheckFailed,
    Violation,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::Violation => 4,
        }
    }
}

struct Outcome {
    inputs: Value,
    outputs: Value,
    seed: Option<u64>,
    status: Status,
}

impl Outcome {
    fn new(inputs: Value, outputs: Value) -> Self {
        Outcome { inputs, outputs, seed: None, status: Status::Ok }
    }

    fn failing_if(mut self, failed: bool, status: Status) -> Self {
        if failed {
            self.status = status;
        }
        self
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn params_or_zero(lambda: &Partition, params: Option<EvalParams>) -> EvalParams {
    params.unwrap_or_else(|| EvalParams::zeros(lambda.part(0)))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Kostka { .. } => "kostka",
        Command::Cocharge { .. } => "cocharge",
        Command::Tanisaki { .. } => "tanisaki",
        Command::Dim { .. } => "dim",
        Command::Gchar { .. } => "gchar",
        Command::Char { .. } => "char",
        Command::FlatCheck { .. } => "flat-check",
        Command::SplitCheck { .. } => "split-check",
        Command::SchurWeyl { .. } => "schur-weyl",
        Command::RepMatrices { .. } => "rep-matrices",
        Command::Example6 { .. } => "example6",
        Command::Suite { .. } => "suite",
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Kostka { shape, content, modified } => {
            let inputs = json!({"shape": shape, "content": content, "modified": modified});
            let outputs = if modified {
                to_value(&modified_kostka(&shape, &content)?)
            } else {
                json!(kostka_number(&shape, &content)?)
            };
            Outcome::new(inputs, outputs)
        }
        Command::Cocharge { word } => {
            let letters: Vec<String> = word.letters().iter().map(|l| l.to_string()).collect();
            let inputs = json!({"word": letters.join(" ")});
            Outcome::new(inputs, json!({"content": word.content()?, "cocharge": word.cocharge()?}))
        }
        Command::Tanisaki { lambda, params, reduced } => {
            let inputs = json!({"lambda": lambda, "params": params, "reduced": reduced});
            let set = match (&params, reduced) {
                (None, false) => tanisaki_generators(&lambda),
                (None, true) => reduced_generators(&lambda, &EvalParams::zeros(lambda.part(0)))?,
                (Some(a), false) => deformed_generators(&lambda, a)?,
                (Some(a), true) => reduced_generators(&lambda, a)?,
            };
            let gens: Vec<Value> = set
                .entries
                .iter()
                .map(|e| json!({"n": e.n, "subset": e.subset, "r": e.r, "poly": e.poly.to_string()}))
                .collect();
            Outcome::new(inputs, json!({"count": gens.len(), "generators": gens}))
        }
        Command::Dim { lambda, params } => {
            let a = params_or_zero(&lambda, params);
            let inputs = json!({"lambda": lambda, "params": a});
            let alg = build_quotient(&lambda, &a)?;
            let dl = d_lambda(&lambda);
            let flat = alg.dim() as u128 == dl;
            Outcome::new(inputs, json!({"dim": alg.dim(), "d_lambda": dl, "flat": flat}))
                .failing_if(!flat, Status::Violation)
        }
        Command::Gchar { lambda } => {
            let inputs = json!({"lambda": lambda});
            let alg = build_quotient(&lambda, &EvalParams::zeros(lambda.part(0)))?;
            let got = alg.graded_character()?;
            let predicted = predicted_graded_character(&lambda)?;
            let ok = got == predicted;
            Outcome::new(inputs, json!({"graded_character": got, "predicted": predicted, "match": ok}))
                .failing_if(!ok, Status::Violation)
        }
        Command::Char { lambda, params } => {
            let a = params_or_zero(&lambda, params);
            let inputs = json!({"lambda": lambda, "params": a});
            let ch = build_quotient(&lambda, &a)?.character()?;
            let expected = permutation_module_character(&lambda)?;
            let ok = ch == expected;
            Outcome::new(inputs, json!({"character": ch, "expected": expected, "match": ok}))
                .failing_if(!ok, Status::Violation)
        }
        Command::FlatCheck { lambda, params, trials, seed } => {
            let select = CheckSelection::default();
            let inputs = json!({"lambda": lambda, "params": params, "trials": trials});
            let vectors: Vec<EvalParams> = match &params {
                Some(a) => vec![a.clone()],
                None => parameter_battery(&lambda, trials, seed).into_iter().map(|e| e.params).collect(),
            };
            let reports = vectors
                .iter()
                .map(|a| algebra_report(&lambda, a, Some(seed), select))
                .collect::<Result<Vec<_>, _>>()?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let mut out = Outcome::new(inputs, json!({"reports": reports, "failed": failed}))
                .failing_if(failed > 0, Status::CheckFailed);
            out.seed = params.is_none().then_some(seed);
            out
        }
        Command::SplitCheck { lambda, params } => {
            let inputs = json!({"lambda": lambda, "params": params});
            let rep = split_check(&lambda, &params)?;
            let failed = !(rep.dim_match && rep.character_match);
            Outcome::new(inputs, to_value(&rep)).failing_if(failed, Status::CheckFailed)
        }
        Command::SchurWeyl { lambda, n, params } => {
            let a = params_or_zero(&lambda, params);
            let inputs = json!({"lambda": lambda, "n": n, "params": a});
            let weyl = weyl_gmodule_decomposition(&lambda, n)?;
            let ch = build_quotient(&lambda, &a)?.character()?;
            let image = schur_weyl_image(&sign_twist(&ch), n)?;
            let dims: Vec<Value> = weyl
                .multiplicities()
                .keys()
                .map(|mu| json!({"weight": mu, "dim": weyl_dimension(mu, n).to_string()}))
                .collect();
            let product = fundamental_product_dimension(&lambda, n);
            let ok = image == weyl && weyl.dimension() == product;
            Outcome::new(
                inputs,
                json!({
                    "weyl_module": weyl,
                    "image": image,
                    "match": ok,
                    "irreducible_dimensions": dims,
                    "total_dimension": weyl.dimension().to_string(),
                    "fundamental_product": product.to_string(),
                }),
            )
            .failing_if(!ok, Status::CheckFailed)
        }
        Command::RepMatrices { lambda, params, amended } => {
            let a = params_or_zero(&lambda, params);
            let inputs = json!({"lambda": lambda, "params": a, "amended": amended});
            let alg = build_quotient(&lambda, &a)?;
            let rep = alg.rep_matrices(amended)?;
            let relations = rep.verify_relations();
            let basis: Vec<String> = alg.basis().monomials().iter().map(|m| m.to_string()).collect();
            Outcome::new(
                inputs,
                json!({
                    "dim": rep.dim(),
                    "basis": basis,
                    "sigma": rep.sigma,
                    "t": rep.t,
                    "relations_hold": relations,
                    "character": rep.character()?,
                }),
            )
            .failing_if(!relations, Status::Violation)
        }
        Command::Example6 { a, b } => {
            let inputs = json!({"a": a.to_string(), "b": b.to_string()});
            let rep = example_report(&a, &b)?;
            let failed = !rep.passed;
            Outcome::new(inputs, to_value(&rep)).failing_if(failed, Status::CheckFailed)
        }
        Command::Suite { max_d, trials, seed } => {
            let inputs = json!({"max_d": max_d, "trials": trials});
            let rep = run_suite(max_d, trials, seed)?;
            let failed = !rep.all_passed();
            let mut out = Outcome::new(inputs, to_value(&rep)).failing_if(failed, Status::CheckFailed);
            out.seed = Some(seed);
            out
        }
    })
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::Violation(_) => 4,
        _ => 3,
    }
}

fn render_pretty(report: &Value) -> String {
    let mut rows: Vec<(String, String)> =
        vec![("command".into(), report["command"].to_string()), ("seed".into(), report["seed"].to_string())];
    for (prefix, section) in [("input", &report["inputs"]), ("output", &report["outputs"])] {
        match section {
            Value::Object(map) => rows.extend(map.iter().map(|(k, v)| (format!("{prefix}.{k}"), v.to_string()))),
            other => rows.push((prefix.to_string(), other.to_string())),
        }
    }
    if let Some(t) = report.get("wall_time_ms") {
        rows.push(("wall_time_ms".into(), t.to_string()));
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}")).collect::<Vec<_>>().join("\n")
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("TGP_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("TGP_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("TGP_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let name = command_name(&cli.command);
    let start = Instant::now();
    let outcome = match run(cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };
    let mut report = json!({
        "command": name,
        "inputs": outcome.inputs,
        "outputs": outcome.outputs,
        "seed": outcome.seed,
    });
    if cli.timing {
        report["wall_time_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    let text = if cli.pretty { render_pretty(&report) } else { report.to_string() };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(outcome.status.code())
}
