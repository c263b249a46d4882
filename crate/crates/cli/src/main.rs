use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wig_core::run::{bench_csv, DEFAULT_ORACLE_CUTOFF};
use wig_core::{
    convert_document, generate, parse_document, run_bench, run_compute, serialize_document,
    validate_cactus, Algorithm, BenchSpec, ComputeOptions, Emit, Error, GenParams, GenSpec,
    GraphClass, InputDocument,
};

/// Wiener index of cactus, interval, circular-arc, permutation and trapezoid graphs.
#[derive(Parser)]
#[command(name = "wig", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Wiener index or the full distance matrix of a document.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgoArg::Specialized)]
        algo: AlgoArg,
        #[arg(long, value_enum, default_value_t = EmitArg::Wiener)]
        emit: EmitArg,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Run the per-source searches on all cores.
        #[arg(long)]
        parallel: bool,
    },
    /// Generate a random document.
    Gen {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        params: ParamArgs,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a document parses and describes a valid representation.
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Doubling sweep of specialized and oracle runs on generated connected instances.
    Bench {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n_start: usize,
        #[arg(long)]
        n_end: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest n for which the oracle is run.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CUTOFF)]
        oracle_cutoff: usize,
        #[arg(long)]
        parallel: bool,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Re-encode a document as an equivalent trapezoid or circular-arc document.
    Convert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        to: GraphClass,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Largest endpoint coordinate (circumference - 1 for arcs); default 4n.
    #[arg(long)]
    coord_max: Option<u64>,
    /// Longest interval, arc or trapezoid side.
    #[arg(long)]
    max_len: Option<u64>,
    /// Probability that an arc wraps past zero.
    #[arg(long)]
    wrap_prob: Option<f64>,
    /// Probability that a cactus block is a single edge.
    #[arg(long)]
    edge_prob: Option<f64>,
    #[arg(long)]
    cycle_min: Option<usize>,
    #[arg(long)]
    cycle_max: Option<usize>,
    #[arg(long)]
    weight_min: Option<u64>,
    #[arg(long)]
    weight_max: Option<u64>,
    /// Repair the instance so the graph is connected.
    #[arg(long)]
    connected: bool,
}

impl ParamArgs {
    fn into_params(self) -> GenParams {
        let d = GenParams::default();
        GenParams {
            coord_max: self.coord_max,
            max_len: self.max_len.unwrap_or(d.max_len),
            wrap_prob: self.wrap_prob.unwrap_or(d.wrap_prob),
            edge_prob: self.edge_prob.unwrap_or(d.edge_prob),
            cycle_len: (
                self.cycle_min.unwrap_or(d.cycle_len.0),
                self.cycle_max.unwrap_or(d.cycle_len.1),
            ),
            weight: (
                self.weight_min.unwrap_or(d.weight.0),
                self.weight_max.unwrap_or(d.weight.1),
            ),
            connected: self.connected,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Specialized,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Wiener,
    Distances,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
}

enum Failure {
    Io(PathBuf, io::Error),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(..) => 1,
            Failure::Core(e) => core_exit_code(e),
        }
    }
}

fn core_exit_code(e: &Error) -> u8 {
    match e {
        Error::DisconnectedGraph | Error::NotConnected => 3,
        Error::Overflow => 4,
        _ => 2,
    }
}

fn read_doc(path: &Path) -> Result<InputDocument, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Io(path.to_owned(), e))?;
    Ok(parse_document(&bytes)?)
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(p.to_owned(), e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Compute {
            input,
            algo,
            emit,
            format,
            parallel,
        } => {
            let doc = read_doc(&input)?;
            let opts = ComputeOptions {
                algo: match algo {
                    AlgoArg::Specialized => Algorithm::Specialized,
                    AlgoArg::Oracle => Algorithm::Oracle,
                },
                emit: match emit {
                    EmitArg::Wiener => Emit::Wiener,
                    EmitArg::Distances => Emit::Distances,
                },
                parallel,
            };
            let report = run_compute(&doc, opts);
            match format {
                Format::Json => {
                    write_out(None, &report.render_json())?;
                    match report.error() {
                        Some(e) => Err(e.clone().into()),
                        None => Ok(()),
                    }
                }
                Format::Plain => match report.error() {
                    Some(e) => Err(e.clone().into()),
                    None => write_out(None, &report.render_plain()),
                },
            }
        }
        Command::Gen {
            class,
            n,
            seed,
            params,
            out,
        } => {
            let spec = GenSpec {
                class,
                n,
                seed,
                params: params.into_params(),
            };
            let g = generate(&spec)?;
            if g.augmented > 0 {
                eprintln!("augmented {} time(s) to connect the graph", g.augmented);
            }
            write_out(out.as_deref(), &serialize_document(&g.document))
        }
        Command::Validate { input } => {
            let doc = read_doc(&input)?;
            if let InputDocument::Cactus(rep) = &doc {
                validate_cactus(rep)?;
            }
            println!("ok {} n={}", doc.class(), doc.vertex_count());
            Ok(())
        }
        Command::Bench {
            class,
            n_start,
            n_end,
            seed,
            oracle_cutoff,
            parallel,
            csv,
        } => {
            let mut spec = BenchSpec::new(class, n_start, n_end);
            spec.seed = seed;
            spec.oracle_cutoff = oracle_cutoff;
            spec.parallel = parallel;
            let rows = run_bench(&spec)?;
            write_out(csv.as_deref(), &bench_csv(&rows))
        }
        Command::Convert { input, to, out } => {
            let doc = read_doc(&input)?;
            let converted = convert_document(&doc, to)?;
            write_out(out.as_deref(), &serialize_document(&converted))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Io(p, e) => eprintln!("wig: {}: {e}", p.display()),
                Failure::Core(e) => eprintln!("wig: {e}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
