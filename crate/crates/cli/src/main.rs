use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use semiclass_core::demos::{run_demo, DemoOptions, DEMO_NAMES};
use semiclass_core::report::{Check, Outcome, Status};
use semiclass_core::suites::{run_suite, SUITE_NAMES};

mod sgp;

#[derive(Parser, Debug)]
#[command(
    name = "semiclass",
    version,
    about = "Ideal and class-group arithmetic for semigroup rings A[Γ]"
)]
struct Cli {
    /// Coefficient domain: Q, Z, Z[sqrt(d)] or Z[(1+sqrt(d))/2].
    #[arg(long, global = true)]
    domain: Option<String>,

    /// Root seed for randomized checks.
    #[arg(long, global = true, env = "SEMICLASS_SEED", default_value_t = 0)]
    seed: u64,

    /// Emit the JSON report: to FILE if given, otherwise to stdout.
    #[arg(
        long,
        global = true,
        value_name = "FILE",
        num_args = 0..=1,
        default_missing_value = "-"
    )]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerical semigroups and their fractional ideals.
    Sgp {
        #[command(subcommand)]
        command: SgpCommand,
    },
    /// Run a worked example as a list of checks.
    Demo(DemoArgs),
    /// Run the randomized property suites.
    Suite(SuiteArgs),
}

#[derive(Subcommand, Debug)]
pub(crate) enum SgpCommand {
    /// Invariants of a semigroup, plus the class-group criterion when
    /// --domain is given.
    Info {
        /// Generators such as 2,3, or p^inf:P for the p-power cone.
        #[arg(long)]
        sgp: String,
        /// Search bound for non-principal t-invertible ideals.
        #[arg(long, default_value_t = 20)]
        bound: i64,
    },
    /// Arithmetic on the ideal generated by --gens.
    Ideal {
        #[arg(long)]
        sgp: String,
        #[arg(long)]
        gens: String,
        /// Second operand for sum and colon.
        #[arg(long)]
        with: Option<String>,
        #[arg(long, value_enum, default_value_t = IdealOpArg::Flags)]
        op: IdealOpArg,
    },
    /// t-class of an ideal, or of a product of two ideals with --with.
    Class {
        #[arg(long)]
        sgp: String,
        #[arg(long)]
        gens: String,
        #[arg(long)]
        with: Option<String>,
    },
    /// Exhaustive search for a non-principal t-invertible ideal.
    Search {
        #[arg(long)]
        sgp: String,
        #[arg(long, default_value_t = 20)]
        bound: i64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum IdealOpArg {
    Sum,
    Colon,
    Inverse,
    V,
    T,
    Flags,
}

#[derive(Args, Debug)]
struct DemoArgs {
    #[arg(value_parser = PossibleValuesParser::new(DEMO_NAMES))]
    name: String,
    /// Enumeration or search bound.
    #[arg(long)]
    bound: Option<i64>,
    /// Trial count for randomized demos.
    #[arg(long)]
    trials: Option<usize>,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Trial count for every suite (each suite has its own default).
    #[arg(long)]
    trials: Option<usize>,
    /// Run only the named suites.
    #[arg(long, value_parser = PossibleValuesParser::new(SUITE_NAMES))]
    only: Vec<String>,
}

#[derive(Serialize)]
struct RunReport<'a> {
    schema: u32,
    command: &'a str,
    inputs: &'a Value,
    results: &'a Value,
    checks: &'a [Check],
    seed: u64,
    elapsed_ms: u128,
}

struct Run {
    command: String,
    inputs: Value,
    outcome: Outcome,
}

fn execute(cli: &Cli) -> semiclass_core::Result<Run> {
    match &cli.command {
        Command::Sgp { command } => sgp::run(command, cli.domain.as_deref()),
        Command::Demo(args) => {
            let opts = DemoOptions {
                seed: cli.seed,
                trials: args.trials,
                bound: args.bound,
            };
            Ok(Run {
                command: format!("demo {}", args.name),
                inputs: json!({ "name": args.name, "bound": args.bound, "trials": args.trials }),
                outcome: run_demo(&args.name, &opts)?,
            })
        }
        Command::Suite(args) => {
            let names: Vec<&str> = if args.only.is_empty() {
                SUITE_NAMES.to_vec()
            } else {
                SUITE_NAMES
                    .iter()
                    .copied()
                    .filter(|n| args.only.iter().any(|o| o == n))
                    .collect()
            };
            let mut results = serde_json::Map::new();
            let mut checks = Vec::new();
            for name in &names {
                log::info!("suite {name}");
                let o = run_suite(name, cli.seed, args.trials)?;
                results.insert((*name).to_string(), o.results);
                checks.extend(o.checks.into_iter().map(|c| Check {
                    name: format!("{name}: {}", c.name),
                    ..c
                }));
            }
            Ok(Run {
                command: "suite".into(),
                inputs: json!({ "suites": names, "trials": args.trials }),
                outcome: Outcome {
                    results: Value::Object(results),
                    checks,
                },
            })
        }
    }
}

fn print_text(run: &Run, seed: u64) {
    println!("semiclass {} (seed {seed})", run.command);
    if let Value::Object(map) = &run.outcome.results {
        for (k, v) in map {
            match v {
                Value::String(s) => println!("  {k}: {s}"),
                other => println!("  {k}: {other}"),
            }
        }
    }
    let mut tally = [0usize; 3];
    for c in &run.outcome.checks {
        let (label, slot) = match c.status {
            Status::Pass => ("PASS", 0),
            Status::Fail => ("FAIL", 1),
            Status::Skipped => ("SKIP", 2),
        };
        tally[slot] += 1;
        if c.detail.is_empty() {
            println!("{label} {}", c.name);
        } else {
            println!("{label} {}: {}", c.name, c.detail);
        }
    }
    println!(
        "{} passed, {} failed, {} skipped",
        tally[0], tally[1], tally[2]
    );
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let start = Instant::now();
    let run = match execute(&cli) {
        Ok(run) => run,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = RunReport {
        schema: 1,
        command: &run.command,
        inputs: &run.inputs,
        results: &run.outcome.results,
        checks: &run.outcome.checks,
        seed: cli.seed,
        elapsed_ms: start.elapsed().as_millis(),
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    match &cli.json {
        Some(path) if path.as_os_str() == "-" => println!("{text}"),
        Some(path) => {
            print_text(&run, cli.seed);
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print_text(&run, cli.seed),
    }
    if run.outcome.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
