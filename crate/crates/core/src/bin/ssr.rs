//! Command-line front end. Reports go to stdout (or `--out`); failures print a
//! JSON payload on stderr and exit with 1 (bad input) or 2 (a check failed).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use ssr_core::api::{self, ChartOp, Outcome};
use ssr_core::Error;

#[derive(Parser)]
#[command(name = "ssr", version, about = "Exact computations with special symplectic representations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Q, Fp:<p> or F<p>; defaults to the field stored in the input
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Input {
    /// Representation: a JSON file, inline JSON, or a construction name
    #[arg(long)]
    ssr: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a shipped representation
    Construct {
        id: String,
        /// Parameters as JSON, e.g. '{"n": 3}'
        #[arg(long, default_value = "{}")]
        params: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check every axiom on basis vectors
    Verify {
        #[command(flatten)]
        input: Input,
        /// Also compute the normalizer of the image of B
        #[arg(long)]
        normalizer: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Covariants and identities at a vector
    Covariants {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[command(flatten)]
        common: Common,
    },
    /// Split a vector into two null summands
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        /// Work over k[√λ]
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Points with the same moment as a vector
    Fiber {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[command(flatten)]
        common: Common,
    },
    /// Eisenstein syzygy at a vector
    Syzygy {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        /// Point of the plane for the classical binary-cubic syzygy
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Graded Lie algebra of a representation
    LieBuild {
        #[command(flatten)]
        input: Input,
        /// Include all structure constants
        #[arg(long)]
        constants: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Charts between the double cover and the null vectors over k[√λ]
    Chart {
        /// alpha, beta, act or mu-hat
        op: String,
        #[command(flatten)]
        input: Input,
        /// Nonzero scalar; only its square class matters
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// {"P": [...], "z": ...}, or {"re": [...], "im": [...]} for beta
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// [a, b] for the action of a + b√λ
        #[arg(long, allow_hyphen_values = true)]
        scalar: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run every invariant on every construction
    Selftest {
        #[command(flatten)]
        common: Common,
    },
}

/// JSON if it parses, otherwise the raw text as a JSON string (so `1/2` works).
fn value(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|_| Value::String(s.to_string()))
}

fn read_ssr(spec: &str, field: Option<&str>) -> Result<Value, Error> {
    let t = spec.trim_start();
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()));
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        return serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{spec}: {e}")));
    }
    let built = api::construct_json(spec, &json!({}), field.unwrap_or("Q"))?;
    Ok(built.report)
}

fn run(cmd: Cmd) -> (Result<Outcome, Error>, Common) {
    let ssr_of = |i: &Input, c: &Common| read_ssr(&i.ssr, c.field.as_deref());
    match cmd {
        Cmd::Construct { id, params, common } => {
            let r = api::construct_json(&id, &value(&params), common.field.as_deref().unwrap_or("Q"));
            (r, common)
        }
        Cmd::Verify { input, normalizer, common } => {
            let r = ssr_of(&input, &common).and_then(|s| api::verify_json(&s, common.field.as_deref(), normalizer));
            (r, common)
        }
        Cmd::Covariants { input, vector, common } => {
            let r = ssr_of(&input, &common)
                .and_then(|s| api::covariants_json(&s, common.field.as_deref(), &value(&vector), common.seed));
            (r, common)
        }
        Cmd::Decompose { input, vector, lambda, common } => {
            let lambda = lambda.as_deref().map(value);
            let r = ssr_of(&input, &common)
                .and_then(|s| api::decompose_json(&s, common.field.as_deref(), &value(&vector), lambda.as_ref()));
            (r, common)
        }
        Cmd::Fiber { input, vector, common } => {
            let samples = common.samples.unwrap_or(10);
            let r = ssr_of(&input, &common)
                .and_then(|s| api::fiber_json(&s, common.field.as_deref(), &value(&vector), samples));
            (r, common)
        }
        Cmd::Syzygy { input, vector, point, common } => {
            let point = point.as_deref().map(value);
            let r = ssr_of(&input, &common)
                .and_then(|s| api::syzygy_json(&s, common.field.as_deref(), &value(&vector), point.as_ref()));
            (r, common)
        }
        Cmd::LieBuild { input, constants, common } => {
            let r = ssr_of(&input, &common)
                .and_then(|s| api::lie_build_json(&s, common.field.as_deref(), constants, common.seed));
            (r, common)
        }
        Cmd::Chart { op, input, lambda, point, scalar, common } => {
            let scalar = scalar.as_deref().map(value);
            let r = op.parse::<ChartOp>().and_then(|op| {
                let s = ssr_of(&input, &common)?;
                api::chart_json(op, &s, common.field.as_deref(), &value(&lambda), &value(&point), scalar.as_ref())
            });
            (r, common)
        }
        Cmd::Selftest { common } => {
            let field = common.field.clone().unwrap_or_else(|| "F7".into());
            let r = api::selftest_json(&field, common.seed, common.samples.unwrap_or(20));
            (r, common)
        }
    }
}

fn emit(report: &Value, out: Option<&Path>) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(report).expect("serializable") + "\n";
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn counterexamples(report: &Value) -> Value {
    match report.get("checks").and_then(Value::as_array) {
        Some(checks) => Value::Array(checks.iter().filter(|c| c["passed"] == false).cloned().collect()),
        None => report.clone(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    let (result, common) = run(cli.cmd);
    match result {
        Ok(o) => {
            if let Err(e) = emit(&o.report, common.out.as_deref()) {
                eprintln!("{}", json!({"error": e.to_string()}));
                return ExitCode::from(1);
            }
            if o.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}", json!({"failed": counterexamples(&o.report)}));
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.to_string()}));
            ExitCode::from(if e.is_invariant_failure() { 2 } else { 1 })
        }
    }
}
