use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polydet::algebra::PrimeField;
use polydet::cli::{self, BenchGrid, DetOptions, DEFAULT_PLAYERS, DEFAULT_Q};
use polydet::determinant::Method;
use polydet::{Error, Result};

#[derive(Parser)]
#[command(name = "polydet", version, about = "Secret-shared determinants of polynomial matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one determinant method on a JSON matrix.
    Det {
        #[arg(long)]
        method: Method,
        #[arg(long)]
        input: PathBuf,
        /// Number of players (default: input file, then 3).
        #[arg(long = "N")]
        players: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Where to write {"det": [...]}; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// One-row cost CSV.
        #[arg(long)]
        costs: Option<PathBuf>,
        /// Broadcast log as JSON lines.
        #[arg(long)]
        transcript: Option<PathBuf>,
        /// Triple file to draw from before the dealer.
        #[arg(long)]
        triples: Option<PathBuf>,
    },
    /// Cost report for every method over a parameter grid.
    Bench {
        /// e.g. n=1..4 d=0..3 N=2,3,5
        #[arg(long, num_args = 0..)]
        grid: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_Q)]
        q: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated subset of methods.
        #[arg(long, value_delimiter = ',')]
        methods: Option<Vec<Method>>,
        /// CSV destination; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Preprocessing files.
    Triples {
        #[command(subcommand)]
        action: TriplesAction,
    },
}

#[derive(Subcommand)]
enum TriplesAction {
    /// Deal triples into a file.
    Gen {
        /// field, series, matrix, polymatrix or extfield
        #[arg(long)]
        kind: String,
        /// e.g. m=4, n=2,d=1 or k=3
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_Q)]
        q: u64,
        #[arg(long = "N", default_value_t = DEFAULT_PLAYERS)]
        players: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a file's digest and every triple.
    Inspect { file: PathBuf },
}

fn write_or_print(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Det { method, input, players, seed, out, costs, transcript, triples } => {
            cli::cmd_det(&DetOptions { method, input, players, seed, out, costs, transcript, triples })?;
        }
        Command::Bench { grid, q, seed, methods, out } => {
            let grid = BenchGrid::parse(&grid.join(" "))?;
            let seed = cli::resolve_seed(seed, None)?;
            let methods = methods.unwrap_or_else(|| Method::ALL.to_vec());
            let rows = cli::cmd_bench(&grid, q, seed, &methods)?;
            write_or_print(out.as_ref(), &cli::bench_csv(&rows))?;
        }
        Command::Triples { action: TriplesAction::Gen { kind, params, count, out, q, players, seed } } => {
            let field = PrimeField::new(q).map_err(|e| Error::Input(format!("q: {e}")))?;
            let seed = cli::resolve_seed(seed, None)?;
            let kind = cli::parse_kind(&kind, &params, field, seed)?;
            cli::cmd_triples_gen(&kind, field, players, count, seed, &out)?;
        }
        Command::Triples { action: TriplesAction::Inspect { file } } => {
            println!("{}", cli::cmd_triples_inspect(&file)?.to_json());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", cli::error_json(&Error::Input(e.kind().to_string())));
            let _ = e.print();
            return ExitCode::from(cli::EXIT_INPUT as u8);
        }
    };
    match execute(args.command) {
        Ok(()) => ExitCode::from(cli::EXIT_OK as u8),
        Err(e) => {
            eprintln!("{}", cli::error_json(&e));
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
