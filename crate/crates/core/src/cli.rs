//! Command-line front end. [`run`] is pure apart from reading input files and stdin, so
//! the binary and the tests share it.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Read;

use crate::criteria::{classify, evaluate_witness, optimal_witness, Route, Verdict};
use crate::curve::{curve, CurveFamily};
use crate::decompose::optimal_decompose_rank6;
use crate::error::Error;
use crate::json::{decomposition_to_value, parse_complex4, parse_state, state_to_value, verdict_to_value};
use crate::oracle::{max_recomposition_error, random_states, verify_decomposition, ProfileKind, RandomProfile};
use crate::state::{XState, DEFAULT_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_NOT_A_STATE: i32 = 2;
pub const EXIT_NOT_DECOMPOSABLE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "xsep", version, about = "Separability of three-qubit X-states")]
struct Cli {
    /// Comparison tolerance
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for `random`
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sample count for `curve` and `random`
    #[arg(long, global = true, alias = "count")]
    samples: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a state and print its invariants
    Validate { input: String },
    /// Print the verdict for a state
    Classify { input: String },
    /// Print a verified product-state decomposition
    Decompose {
        input: String,
        /// Include the construction data of the optimal rank-six decomposition
        #[arg(long)]
        plan: bool,
    },
    /// Print a boundary curve: example1, example2 or suffPhi
    Curve { family: String },
    /// Evaluate the witness inequality
    Witness {
        input: String,
        /// Four complex numbers `[[re,im],...]`; defaults to the optimal witness for the state
        #[arg(long)]
        z: Option<String>,
    },
    /// Print random states, one JSON object per line
    Random { profile: String },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { stdout: String::new(), stderr, code }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::NotAState | Error::NegativeDiagonal(_) | Error::NotHermitian(_) => EXIT_NOT_A_STATE,
        Error::NotSeparable => EXIT_NOT_DECOMPOSABLE,
        _ => EXIT_PARSE,
    }
}

fn from_error(e: Error) -> Outcome {
    Outcome::fail(error_code(&e), format!("error: {e}\n"))
}

fn read_input(input: &str, stdin: &mut dyn Read) -> Result<String, Error> {
    if input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else if input.trim_start().starts_with('{') {
        Ok(input.to_string())
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Parse(format!("{input}: {e}")))
    }
}

fn load_state(input: &str, tol: Option<f64>, stdin: &mut dyn Read) -> Result<XState, Error> {
    let s = parse_state(&read_input(input, stdin)?)?;
    match tol {
        Some(t) => s.with_tol(t),
        None => Ok(s),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn validate(s: &XState) -> Outcome {
    let positive = s.is_positive();
    let out = json!({
        "positive": positive,
        "ppt": s.is_ppt().ok(),
        "invariants": positive.then(|| s.invariants()),
    });
    Outcome { stdout: pretty(&out), stderr: String::new(), code: if positive { EXIT_OK } else { EXIT_NOT_A_STATE } }
}

fn verdict_csv(v: &Verdict) -> String {
    let (label, lhs, rhs) = match v {
        Verdict::NptEntangled { system, lhs, rhs } => (system.to_string(), Some(*lhs), Some(*rhs)),
        Verdict::PptEntangled { criterion, lhs, rhs } => (criterion.name().to_string(), Some(*lhs), Some(*rhs)),
        Verdict::Separable { route, .. } => (route.name().to_string(), None, None),
        _ => (String::new(), None, None),
    };
    let num = |x: Option<f64>| x.map(|x| format!("{x:.16e}")).unwrap_or_default();
    format!("tag,detail,lhs,rhs\n{},{label},{},{}\n", v.tag(), num(lhs), num(rhs))
}

fn cmd_classify(s: &XState, format: Format) -> Outcome {
    let v = classify(s);
    let stdout = match format {
        Format::Json => pretty(&verdict_to_value(&v)),
        Format::Csv => verdict_csv(&v),
    };
    let code = if v == Verdict::NotAState { EXIT_NOT_A_STATE } else { EXIT_OK };
    Outcome { stdout, stderr: String::new(), code }
}

fn cmd_decompose(s: &XState, with_plan: bool) -> Outcome {
    let verdict = classify(s);
    let (route, d) = match verdict {
        Verdict::NotAState => return Outcome::fail(EXIT_NOT_A_STATE, "error: not a state\n".into()),
        Verdict::Separable { route, certificate: Some(d) } => (route, d),
        other => return Outcome::fail(EXIT_NOT_DECOMPOSABLE, format!("error: not decomposable: {other}\n")),
    };
    let mut out = json!({
        "route": route.name(),
        "certificate": decomposition_to_value(&d),
        "verified": verify_decomposition(s, &d, s.tol()),
        "max_err": max_recomposition_error(s, &d),
        "terms": d.len(),
    });
    if with_plan && route == Route::Rank6 {
        if let Ok((_, plan)) = optimal_decompose_rank6(s) {
            out["plan"] = serde_json::to_value(plan).unwrap_or(Value::Null);
        }
    }
    Outcome::ok(pretty(&out))
}

fn cmd_witness(s: &XState, z: Option<&str>) -> Outcome {
    let z = match z {
        Some(text) => match parse_complex4(text) {
            Ok(z) => z,
            Err(e) => return from_error(e),
        },
        None => optimal_witness(s),
    };
    let w = evaluate_witness(s, z);
    Outcome::ok(pretty(&serde_json::to_value(w).unwrap_or(Value::Null)))
}

fn state_csv_row(s: &XState) -> String {
    let mut cells: Vec<String> = s.a().iter().chain(s.b().iter()).map(|x| format!("{x:.16e}")).collect();
    for z in s.c() {
        cells.push(format!("{:.16e}", z.re));
        cells.push(format!("{:.16e}", z.im));
    }
    cells.join(",")
}

fn cmd_random(profile: &str, seed: u64, count: usize, tol: f64, format: Format) -> Outcome {
    let kind: ProfileKind = match profile.parse() {
        Ok(k) => k,
        Err(e) => return from_error(e),
    };
    let states = match random_states(&RandomProfile::new(kind, seed, count)) {
        Ok(v) => v,
        Err(e) => return from_error(e),
    };
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("a1,a2,a3,a4,b1,b2,b3,b4,c1_re,c1_im,c2_re,c2_im,c3_re,c3_im,c4_re,c4_im\n");
    }
    for s in states {
        let s = s.with_tol(tol).unwrap_or(s);
        match format {
            Format::Json => out.push_str(&pretty(&state_to_value(&s))),
            Format::Csv => {
                out.push_str(&state_csv_row(&s));
                out.push('\n');
            }
        }
    }
    Outcome::ok(out)
}

fn cmd_curve(family: &str, samples: usize, tol: f64, format: Format) -> Outcome {
    let family: CurveFamily = match family.parse() {
        Ok(f) => f,
        Err(e) => return from_error(e),
    };
    match curve(family, samples, tol) {
        Ok(t) => Outcome::ok(match format {
            Format::Csv => t.to_csv(),
            Format::Json => pretty(&json!({ "header": t.header, "rows": t.rows })),
        }),
        Err(e) => from_error(e),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_PARSE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t > 0.0) {
            return from_error(Error::InvalidTolerance(t));
        }
    }
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    let state = |input: &str, stdin: &mut dyn Read| load_state(input, cli.tol, stdin);
    match &cli.command {
        Command::Validate { input } => match state(input, stdin) {
            Ok(s) => validate(&s),
            Err(e) => from_error(e),
        },
        Command::Classify { input } => match state(input, stdin) {
            Ok(s) => cmd_classify(&s, cli.format.unwrap_or(Format::Json)),
            Err(e) => from_error(e),
        },
        Command::Decompose { input, plan } => match state(input, stdin) {
            Ok(s) => cmd_decompose(&s, *plan),
            Err(e) => from_error(e),
        },
        Command::Witness { input, z } => match state(input, stdin) {
            Ok(s) => cmd_witness(&s, z.as_deref()),
            Err(e) => from_error(e),
        },
        Command::Curve { family } => {
            cmd_curve(family, cli.samples.unwrap_or(13), tol, cli.format.unwrap_or(Format::Csv))
        }
        Command::Random { profile } => {
            cmd_random(profile, cli.seed, cli.samples.unwrap_or(10), tol, cli.format.unwrap_or(Format::Json))
        }
    }
}
