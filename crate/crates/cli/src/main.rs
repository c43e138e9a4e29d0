use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ordinal_entropy::document::parse_frame_document;
use ordinal_entropy::permutation::average_inu;
use ordinal_entropy::render::{self, ComputeOutput, DEFAULT_PRECISION};
use ordinal_entropy::reproduce::{run_reproduce, TableSelector};

/// Ordinal relative belief entropy of basic probability assignments.
#[derive(Debug, Parser)]
#[command(name = "ordinal-entropy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an ordered assignment (the document must carry "ordering").
    Compute(InputArgs),
    /// Average INU over every ordering of the focal elements.
    PermuteAverage(InputArgs),
    /// Recompute the reference tables and list printed values that disagree.
    Reproduce {
        /// Table to reproduce: 1-5 or all.
        #[arg(long, default_value = "all")]
        table: TableSelector,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// JSON frame document.
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Also write full-precision results as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Decimals shown in the text output.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
}

enum Failure {
    /// Bad input or failed validation.
    Input(String),
    /// A computed report broke one of its own invariants.
    Invariant(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Invariant(_) => 3,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn read_document(path: &Path) -> Result<ordinal_entropy::ParsedDocument, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_frame_document(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_csv<F>(path: &Option<PathBuf>, write: F) -> Result<(), Failure>
where
    F: FnOnce(BufWriter<File>) -> csv::Result<()>,
{
    let Some(path) = path else { return Ok(()) };
    let file =
        File::create(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    write(BufWriter::new(file)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute(args) => {
            let parsed = read_document(&args.input)?;
            let ordinal = parsed
                .ordinal
                .as_ref()
                .ok_or_else(|| Failure::Input("no ordering; use permute-average".into()))?;
            let out = ComputeOutput::new(ordinal, &parsed.bpa).map_err(input)?;
            out.report
                .check_invariants()
                .map_err(|e| Failure::Invariant(e.to_string()))?;
            print!("{}", render::render_compute(&out, args.output.precision));
            write_csv(&args.output.csv, |w| render::write_compute_csv(&out, w))
        }
        Command::PermuteAverage(args) => {
            let parsed = read_document(&args.input)?;
            let report = average_inu(&parsed.bpa).map_err(input)?;
            let mean = report.mean_inu();
            if !(report.min_inu() <= mean && mean <= report.max_inu()) {
                return Err(Failure::Invariant(format!(
                    "mean INU {mean} outside [{}, {}]",
                    report.min_inu(),
                    report.max_inu()
                )));
            }
            print!(
                "{}",
                render::render_permutations(&parsed.bpa, &report, args.output.precision)
            );
            write_csv(&args.output.csv, |w| {
                render::write_permutations_csv(&parsed.bpa, &report, w)
            })
        }
        Command::Reproduce { table, output } => {
            let tables = run_reproduce(table);
            print!("{}", render::render_reproduction(&tables, output.precision));
            write_csv(&output.csv, |w| render::write_reproduction_csv(&tables, w))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (Failure::Input(msg) | Failure::Invariant(msg)) = &failure;
            eprintln!("error: {msg}");
            ExitCode::from(failure.exit_code())
        }
    }
}
