//! `delsarte`: exact Delsarte LP bounds from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad parameters,
//! 3 domain precondition violated, 4 I/O failure.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use delsarte_core::census::{scan_uniqueness_with_jobs, CensusError};
use delsarte_core::delsarte::{
    dual_uniqueness, lp_bound, primal_uniqueness, solve_decomposition, solve_dual, solve_primal,
    solve_symmetric, symmetric_bound, ProblemParams, UniquenessReport,
};
use delsarte_core::exact::{format_seq, Rational};
use delsarte_core::quasicode::{
    check_feasible, decompose, extend, puncture, recompose, Decomposition, Quasicode, QuasicodeError,
};
use delsarte_core::verify::{run_verification, VerifyOptions};

const FORMAT_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "delsarte",
    version,
    about = "Exact Delsarte linear programming bounds for binary codes"
)]
struct Cli {
    /// Largest block length any command accepts.
    #[arg(long, global = true, default_value_t = 40)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum SolveTarget {
    Primal,
    Dual,
    Decomposition,
    Symmetric,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum UniqueTarget {
    Primal,
    Dual,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum TransformOp {
    Decompose,
    Recompose,
    Extend,
    Puncture,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact LP bound for (n, d).
    Bound {
        n: usize,
        d: usize,
        #[arg(long)]
        json: bool,
    },
    /// Solve one formulation and print its optimal value and point.
    Solve {
        n: usize,
        d: usize,
        #[arg(long, value_enum, default_value = "primal")]
        target: SolveTarget,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether the optimum is unique.
    Unique {
        n: usize,
        d: usize,
        #[arg(long, value_enum, default_value = "primal")]
        target: UniqueTarget,
        #[arg(long)]
        json: bool,
    },
    /// Transform a quasicode (or, for recompose, a decomposition) read from a JSON file.
    Transform {
        input: PathBuf,
        #[arg(long, value_enum)]
        op: TransformOp,
        /// Wrap the result in the output envelope.
        #[arg(long)]
        json: bool,
    },
    /// Run the primal uniqueness census and write it to a directory.
    Scan {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value = "census")]
        out: PathBuf,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check every identity and theorem up to the given block length.
    Verify {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        corrupt_krawtchouk: bool,
    },
}

enum Failure {
    Verification(String),
    Params(String),
    Domain(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Params(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Params(m) | Failure::Domain(m) | Failure::Io(m) => m,
        }
    }
}

impl From<QuasicodeError> for Failure {
    fn from(e: QuasicodeError) -> Self {
        match e {
            QuasicodeError::PunctureDistance(_) => Failure::Domain(e.to_string()),
            other => Failure::Params(other.to_string()),
        }
    }
}

impl From<CensusError> for Failure {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::EmptyRange | CensusError::ThreadPool(_) => Failure::Params(e.to_string()),
            other => Failure::Io(other.to_string()),
        }
    }
}

struct Output {
    json: Option<Value>,
    text: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    params: Value,
    result: Value,
    format_version: u32,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn envelope(command: &str, params: Value, result: Value) -> Value {
    to_value(&Envelope {
        command,
        params,
        result,
        format_version: FORMAT_VERSION,
    })
}

fn params(n: usize, d: usize, max_n: usize) -> Result<ProblemParams, Failure> {
    if n > max_n {
        return Err(Failure::Params(format!("n = {n} exceeds --max-n {max_n}")));
    }
    ProblemParams::new(n, d).map_err(|e| Failure::Params(e.to_string()))
}

fn check_n_max(n_max: usize, max_n: usize) -> Result<(), Failure> {
    if n_max < 1 {
        return Err(Failure::Params("--n-max must be at least 1".into()));
    }
    if n_max > max_n {
        return Err(Failure::Params(format!(
            "--n-max {n_max} exceeds --max-n {max_n}"
        )));
    }
    Ok(())
}

fn report_text(r: &UniquenessReport) -> String {
    let mut s = String::new();
    let verdict = if r.is_unique() { "unique" } else { "non-unique" };
    writeln!(s, "verdict: {verdict}").unwrap();
    writeln!(s, "value: {}", r.optimum_value).unwrap();
    writeln!(s, "optimum: {}", format_seq(&r.optimum)).unwrap();
    if let (Some(a), Some(b)) = (&r.witness_a, &r.witness_b) {
        writeln!(s, "witness a: {}", format_seq(a)).unwrap();
        writeln!(s, "witness b: {}", format_seq(b)).unwrap();
    }
    for (i, range) in r.variable_ranges.iter().enumerate() {
        if !range.is_degenerate() {
            let show = |v: &Option<Rational>| v.as_ref().map_or("unbounded".to_string(), Rational::to_string);
            writeln!(s, "range {i}: [{}, {}]", show(&range.min), show(&range.max)).unwrap();
        }
    }
    s.pop();
    s
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Params(format!("invalid input: {e}")))
}

/// A recomposed sequence carries `d` when it is a quasicode with respect to
/// its own least positive support index.
fn recomposed_value(n: usize, a: Vec<Rational>) -> Value {
    let d = (1..=n).find(|&i| !a[i].is_zero()).unwrap_or(n.max(1));
    match Quasicode::new(n, d, a.clone()) {
        Ok(q) if n >= 1 => to_value(&q),
        _ => json!({ "n": n, "A": a }),
    }
}

fn execute(cli: Cli) -> Result<Output, Failure> {
    let max_n = cli.max_n;
    match cli.command {
        Command::Bound { n, d, json } => {
            let p = params(n, d, max_n)?;
            let bound = lp_bound(&p);
            Ok(Output {
                json: json.then(|| envelope("bound", json!({ "n": n, "d": d }), json!({ "bound": bound }))),
                text: bound.to_string(),
            })
        }
        Command::Solve { n, d, target, json } => {
            let p = params(n, d, max_n)?;
            let (value, name, point) = match target {
                SolveTarget::Primal => {
                    let a = solve_primal(&p);
                    (a.objective(), "A", a.into_values())
                }
                SolveTarget::Dual => {
                    let c = solve_dual(&p);
                    (c.objective(), "c", c.c)
                }
                SolveTarget::Decomposition => {
                    let b = solve_decomposition(&p).b;
                    (b[0].clone(), "b", b)
                }
                SolveTarget::Symmetric => (symmetric_bound(&p), "b", solve_symmetric(&p).b),
            };
            let text = format!("value: {value}\n{name} = {}", format_seq(&point));
            let result = json!({ "target": target, "value": value, "point": point });
            Ok(Output {
                json: json.then(|| envelope("solve", json!({ "n": n, "d": d, "target": target }), result)),
                text,
            })
        }
        Command::Unique { n, d, target, json } => {
            let p = params(n, d, max_n)?;
            let report = match target {
                UniqueTarget::Primal => primal_uniqueness(&p),
                UniqueTarget::Dual => dual_uniqueness(&p),
            };
            Ok(Output {
                json: json.then(|| {
                    envelope(
                        "unique",
                        json!({ "n": n, "d": d, "target": target }),
                        to_value(&report),
                    )
                }),
                text: report_text(&report),
            })
        }
        Command::Transform { input, op, json } => {
            let text = read_input(&input)?;
            let result = if let TransformOp::Recompose = op {
                let b: Decomposition = parse_json(&text)?;
                if b.n > max_n {
                    return Err(Failure::Params(format!("n = {} exceeds --max-n {max_n}", b.n)));
                }
                recomposed_value(b.n, recompose(&b))
            } else {
                let q: Quasicode = parse_json(&text)?;
                if q.n() > max_n {
                    return Err(Failure::Params(format!("n = {} exceeds --max-n {max_n}", q.n())));
                }
                if matches!(op, TransformOp::Extend | TransformOp::Puncture) {
                    check_feasible(&q).map_err(|v| {
                        Failure::Domain(format!("input is not feasible for ({}, {}): {v}", q.n(), q.d()))
                    })?;
                }
                match op {
                    TransformOp::Decompose => to_value(&decompose(&q)),
                    TransformOp::Extend => to_value(&extend(&q)),
                    TransformOp::Puncture => to_value(&puncture(&q)?),
                    TransformOp::Recompose => unreachable!(),
                }
            };
            let text = serde_json::to_string(&result).expect("serializable");
            let params = json!({ "input": input.display().to_string(), "op": op });
            Ok(Output {
                json: json.then(|| envelope("transform", params, result)),
                text,
            })
        }
        Command::Scan {
            n_max,
            out,
            jobs,
            json,
        } => {
            check_n_max(n_max, max_n)?;
            let census = scan_uniqueness_with_jobs(n_max, jobs)?;
            let files = census.persist(&out)?;
            let text = format!(
                "pairs: {}\nnon-unique: {}\nwrote {} and {} ({} witness files)",
                census.rows.len(),
                census.summary(),
                files.csv.display(),
                files.json.display(),
                files.witnesses.len()
            );
            let result = json!({
                "summary": census.summary(),
                "census": census.document(),
                "files": files,
            });
            let params = json!({ "n_max": n_max, "out": out.display().to_string(), "jobs": jobs });
            Ok(Output {
                json: json.then(|| envelope("scan", params, result)),
                text,
            })
        }
        Command::Verify {
            n_max,
            json,
            corrupt_krawtchouk,
        } => {
            check_n_max(n_max, max_n)?;
            let opts = VerifyOptions {
                n_max,
                corrupt_krawtchouk,
            };
            let report = run_verification(&opts).map_err(|e| Failure::Params(e.to_string()))?;
            let output = Output {
                json: json.then(|| envelope("verify", json!({ "n_max": n_max }), to_value(&report))),
                text: report.to_string(),
            };
            if report.all_passed() {
                Ok(output)
            } else {
                emit(&output);
                let failed = report.failures().count();
                Err(Failure::Verification(format!(
                    "{failed} of {} checks failed",
                    report.checks.len()
                )))
            }
        }
    }
}

fn emit(output: &Output) {
    match &output.json {
        Some(v) => println!("{}", serde_json::to_string(v).expect("serializable")),
        None => println!("{}", output.text),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(output) => {
            emit(&output);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
