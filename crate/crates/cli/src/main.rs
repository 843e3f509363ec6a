use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hx_cli::{parse_document, run, CliError, Command, Options};
use hx_core::DEFAULT_EDGE_CAP;

/// Exact harmonic cycles, winding numbers and cycletrees of unicyclized
/// graphs.
#[derive(Parser, Debug)]
#[command(name = "hx", version)]
struct Args {
    /// validate, trees, cycletrees, homology, lambda, winding, split or verify
    command: Command,
    /// JSON document describing the graph and unicyclizer
    file: PathBuf,
    /// Homology dimension (all dimensions when omitted)
    #[arg(long)]
    dim: Option<usize>,
    /// Comma-separated integer coefficients in edge order
    #[arg(long, allow_hyphen_values = true)]
    chain: Option<String>,
    /// Edge id for `split`
    #[arg(long)]
    edge: Option<usize>,
    /// List the spanning trees for `trees`
    #[arg(long)]
    list: bool,
    /// Report λ with its basis-dependent sign
    #[arg(long)]
    raw_sign: bool,
    /// Run every verifier
    #[arg(long)]
    all: bool,
    /// Run a named verifier; may be repeated
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Seed for randomized checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum edge count for exponential enumerations
    #[arg(long, default_value_t = DEFAULT_EDGE_CAP)]
    cap: usize,
}

fn execute(args: &Args) -> Result<hx_cli::Outcome, CliError> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| CliError::Option(format!("cannot read {}: {e}", args.file.display())))?;
    let doc = parse_document(&text)?;
    let opts = Options {
        dim: args.dim,
        chain: args.chain.clone(),
        edge: args.edge,
        list: args.list,
        raw_sign: args.raw_sign,
        all: args.all,
        checks: args.checks.clone(),
        seed: args.seed,
        cap: args.cap,
    };
    run(args.command, &doc, &opts)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(outcome) => {
            println!("{}", outcome.output);
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("hx {}: {e}", args.command);
            println!("{}", serde_json::json!({ "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
