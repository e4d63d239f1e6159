//! Command line front end: shortest paths with addresses, table
//! operations on files, and the semiring axiom checker.
//!
//! Exit codes: 0 on success, 1 on bad input or a failed axiom report,
//! 2 when a computation is abandoned (column budget, no convergence).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tabsem::{
    apsp_with_addresses, check_semiring_axioms, ApspResult, BinaryLaw, Error, LetterMorphism,
    SemiringSpec, Table, DEFAULT_COLUMN_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "tabsem",
    version,
    about = "Tables over free monoids: scalar laws, table products, and shortest paths with addresses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve all pairs shortest paths with address sets on a graph file
    Apsp {
        /// Edge list: `tail head weight [label]` per line, or a lone token
        /// declaring an isolated state
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Treat costs within this distance as tied
        #[arg(long, default_value_t = 0.0)]
        tie_epsilon: f64,
    },
    /// Combine or reduce table files
    Table {
        #[arg(value_enum)]
        op: TableOp,
        #[arg(long)]
        lhs: PathBuf,
        /// Second operand (pointwise and convolution)
        #[arg(long)]
        rhs: Option<PathBuf>,
        /// Semiring token: tropical, counting, fuzzy, boolean, probcomp,
        /// log:a=<real>, holder:n=<real>
        #[arg(long)]
        semiring: String,
        /// Override the law used by pointwise, mass, and project
        #[arg(long)]
        law: Option<String>,
        /// Letter-to-word mapping file (project)
        #[arg(long)]
        morphism: Option<PathBuf>,
    },
    /// Check the semiring identities on sampled triples
    Axioms {
        #[arg(long)]
        semiring: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sides further apart than this fail the identity (0 = exact)
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableOp {
    Pointwise,
    Convolution,
    Mass,
    Project,
}

/// What to print and which exit code failures map to.
enum Failure {
    /// Unreadable or invalid input: exit 1.
    Input(String),
    /// Abandoned computation (budget, convergence): exit 2.
    Compute(String),
    /// A well-formed report with failing lines: print to stdout, exit 1.
    Report(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::ColumnBudget { .. } | Error::NoConvergence(_) => Failure::Compute(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help and --version land here.
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(Failure::Report(output)) => {
            print!("{output}");
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Apsp {
            graph,
            format,
            tie_epsilon,
        } => {
            let text = read(&graph)?;
            let graph = tabsem::WeightedGraph::parse(&text)?;
            let result = apsp_with_addresses(&graph, tie_epsilon, column_budget()?)?;
            Ok(match format {
                Format::Tsv => render_apsp_tsv(&result),
                Format::Json => render_apsp_json(&result),
            })
        }
        Command::Table {
            op,
            lhs,
            rhs,
            semiring,
            law,
            morphism,
        } => run_table(op, &lhs, rhs.as_deref(), &semiring, law.as_deref(), morphism.as_deref()),
        Command::Axioms {
            semiring,
            samples,
            seed,
            tol,
        } => {
            let spec = SemiringSpec::from_token(&semiring)?;
            let report = check_semiring_axioms(&spec, samples, seed, tol);
            let mut out = String::new();
            for result in &report.results {
                match &result.counterexample {
                    None => writeln!(out, "{}\tPASS", result.axiom.label()),
                    Some(witness) => writeln!(out, "{}\tFAIL\t{witness}", result.axiom.label()),
                }
                .expect("write to string");
            }
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Report(out))
            }
        }
    }
}

fn run_table(
    op: TableOp,
    lhs: &Path,
    rhs: Option<&Path>,
    semiring: &str,
    law: Option<&str>,
    morphism: Option<&Path>,
) -> Result<String, Failure> {
    let spec = SemiringSpec::from_token(semiring)?;
    let lhs = Table::parse(&read(lhs)?)?;
    let law = match law {
        Some(token) => BinaryLaw::from_token(token)?,
        None => spec.add().clone(),
    };
    let binary_rhs = |rhs: Option<&Path>| -> Result<Table, Failure> {
        let path = rhs.ok_or_else(|| Failure::Input("this operation needs --rhs".into()))?;
        Ok(Table::parse(&read(path)?)?)
    };
    match op {
        TableOp::Pointwise => {
            let rhs = binary_rhs(rhs)?;
            Ok(lhs.pointwise(&rhs, &law)?.render())
        }
        TableOp::Convolution => {
            let rhs = binary_rhs(rhs)?;
            Ok(lhs.convolution_budgeted(&rhs, &spec, column_budget()?)?.render())
        }
        TableOp::Mass => Ok(format!("{}\n", lhs.mass(&law)?)),
        TableOp::Project => {
            let path =
                morphism.ok_or_else(|| Failure::Input("project needs --morphism".into()))?;
            let morphism = LetterMorphism::parse(&read(path)?)?;
            Ok(lhs.map_indices(&morphism, &law)?.render())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// The column budget, overridable through `TABSEM_COLUMN_BUDGET`.
fn column_budget() -> Result<usize, Failure> {
    match std::env::var("TABSEM_COLUMN_BUDGET") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| Failure::Input(format!("TABSEM_COLUMN_BUDGET: `{raw}` is not a count"))),
        Err(_) => Ok(DEFAULT_COLUMN_BUDGET),
    }
}

/// One `src dst cost addresses` record per ordered state pair, tab
/// separated; addresses comma-joined in canonical word order, `{}` when
/// the target is unreachable.
fn render_apsp_tsv(result: &ApspResult) -> String {
    let mut out = String::new();
    for (i, src) in result.states.iter().enumerate() {
        for (j, dst) in result.states.iter().enumerate() {
            let entry = result.entry(i, j);
            writeln!(out, "{src}\t{dst}\t{}\t{}", entry.cost(), render_addresses(entry))
                .expect("write to string");
        }
    }
    out
}

fn render_addresses(entry: &tabsem::MemorizedValue) -> String {
    if entry.is_zero() {
        return "{}".to_string();
    }
    let words: Vec<String> = entry.addresses().iter().map(|w| w.to_string()).collect();
    words.join(",")
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    src: &'a str,
    dst: &'a str,
    cost: serde_json::Value,
    addresses: Vec<String>,
}

/// The same records as the TSV form, as a JSON array. Finite integral
/// costs serialize as integers, other finite costs as numbers, and
/// unreachable pairs as the string "inf".
fn render_apsp_json(result: &ApspResult) -> String {
    let mut records = Vec::new();
    for (i, src) in result.states.iter().enumerate() {
        for (j, dst) in result.states.iter().enumerate() {
            let entry = result.entry(i, j);
            let cost = entry.cost().get();
            let cost = if cost.is_infinite() {
                serde_json::Value::from("inf")
            } else if cost.fract() == 0.0 && cost.abs() <= 2f64.powi(53) {
                serde_json::Value::from(cost as i64)
            } else {
                serde_json::Value::from(cost)
            };
            records.push(JsonRecord {
                src,
                dst,
                cost,
                addresses: entry.addresses().iter().map(|w| w.to_string()).collect(),
            });
        }
    }
    let mut out = serde_json::to_string_pretty(&records).expect("serialize records");
    out.push('\n');
    out
}
