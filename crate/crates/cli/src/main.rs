//! `icecount`: count, verify, tabulate and render six-vertex states.

mod commands;
mod error;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use icecount::{EnumBudget, EnumConfig, Parallelism, Partition};

use crate::error::CliError;
use crate::report::RunReport;

#[derive(Parser, Debug)]
#[command(
    name = "icecount",
    version,
    about = "Exact six-vertex state counts for partition boundaries"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Print the full run report as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Leave timing out of the report
    #[arg(long, global = true)]
    no_meta: bool,
    /// Worker threads: a number, `auto`, or `seq`
    #[arg(long, global = true, env = "ICECOUNT_THREADS")]
    threads: Option<Parallelism>,
    /// Cap on search nodes for the backtracking engine
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the states of the lattice for a partition
    Count {
        /// Comma-separated parts, largest first; trailing zeros set n
        #[arg(short, long)]
        partition: Partition,
        #[arg(short, long, value_enum)]
        method: Option<Method>,
    },
    /// Run an invariant sweep
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Build A_lambda(n) as a polynomial in the largest part
    Poly {
        /// The parts after the largest, comma-separated
        #[arg(long)]
        tail: String,
        #[arg(long)]
        n: usize,
    },
    /// Draw one state of a partition lattice
    Render {
        #[arg(short, long)]
        partition: Partition,
        /// Position in enumeration order, from 0
        #[arg(short, long, default_value_t = 0)]
        index: u64,
    },
    /// Print a table of exact values
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Backtrack,
    Rowdp,
    Decompose,
    FormulaAuto,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Engines,
    Pathcounts,
    Lshape,
    Decomposition,
    Hooks,
    Staircase,
    RefinedAsm,
    RefinedVsasm,
    Lemma13,
    Shift,
    Table1,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Hook factors R_m(n)
    Rm,
    /// Refined ASM numbers A(n, j)
    RefinedAsm,
    /// Refined VSASM numbers A_V(2n+1, i)
    RefinedVsasm,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Markdown,
    Csv,
    Json,
    Latex,
}

/// Sweep bounds. Each suite reads the ones it needs and falls back to its
/// own defaults.
#[derive(Args, Debug, Default, Clone)]
pub struct Bounds {
    #[arg(long)]
    pub n_max: Option<u32>,
    #[arg(long)]
    pub m_max: Option<u32>,
    #[arg(long)]
    pub r_max: Option<u32>,
    #[arg(long)]
    pub c_max: Option<u32>,
    /// Largest first part in partition sweeps
    #[arg(long)]
    pub l_max: Option<u32>,
    /// Largest shift
    #[arg(long)]
    pub d_max: Option<u32>,
    /// Bound for checks evaluated by formula alone
    #[arg(long)]
    pub formula_n_max: Option<u32>,
    /// Bound for one-parameter series checks
    #[arg(long)]
    pub series_max: Option<u32>,
    /// Largest half size for full VSASM lattice counts
    #[arg(long)]
    pub vsasm_n_max: Option<u32>,
}

/// Settings shared by every command.
pub struct Ctx {
    pub parallelism: Parallelism,
    pub budget: EnumBudget,
}

impl Ctx {
    pub fn config(&self) -> EnumConfig {
        EnumConfig {
            budget: self.budget.clone(),
            parallelism: self.parallelism,
        }
    }
}

fn run(cli: Cli) -> Result<(RunReport, Option<String>), CliError> {
    let ctx = Ctx {
        parallelism: cli.global.threads.unwrap_or_default(),
        budget: EnumBudget {
            max_nodes: cli.global.budget_nodes,
            ..EnumBudget::default()
        },
    };
    let mut report = match cli.command {
        Command::Count { partition, method } => commands::count::run(&ctx, &partition, method)?,
        Command::Verify { suite, bounds } => commands::verify::run(&ctx, suite, &bounds)?,
        Command::Poly { tail, n } => commands::poly::run(&ctx, &tail, n)?,
        Command::Render { partition, index } => commands::render::run(&ctx, &partition, index)?,
        Command::Table {
            kind,
            m_max,
            n_max,
            format,
        } => {
            let (mut report, table) = commands::table::run(kind, m_max, n_max, format)?;
            report.finish(!cli.global.no_meta);
            return Ok((report, (!cli.global.json).then_some(table)));
        }
    };
    report.finish(!cli.global.no_meta);
    Ok((report, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.global.json;
    let mut stdout = std::io::stdout().lock();
    match run(cli) {
        Ok((report, table)) => {
            let text = match (json, table) {
                (true, _) => report.to_json_string() + "\n",
                (false, Some(t)) => t,
                (false, None) => report.to_human(),
            };
            let _ = stdout.write_all(text.as_bytes());
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if json {
                let body = serde_json::json!({ "error": e.to_string(), "kind": e.kind() });
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&body).unwrap());
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
