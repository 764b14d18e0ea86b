use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use icec::cli::{self, RunConfig};

#[derive(Parser)]
#[command(name = "icec", version, about = "Interatomic Coulombic electron capture cross sections")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a scenario and write results.csv
    Run {
        scenario: PathBuf,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Also write two-column series under <out>/plot
        #[arg(long)]
        plot_data: bool,
        #[arg(short, long, action = clap::ArgAction::Count)]
        verbose: u8,
    },
    /// Check the factorized formula against the dipole oracle
    Oracle {
        spec: PathBuf,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Parse a scenario and load its data without computing
    Validate { scenario: PathBuf },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let verbosity = match &args.command {
        Command::Run { verbose, .. } => *verbose,
        _ => 0,
    };
    env_logger::Builder::new()
        .filter_level(cli::log_level(verbosity))
        .parse_default_env()
        .format_timestamp(None)
        .init();

    let outcome = match args.command {
        Command::Run {
            scenario,
            out,
            plot_data,
            verbose,
        } => {
            let config = RunConfig {
                scenario,
                out_dir: out,
                emit_plot_data: plot_data,
                verbosity: verbose,
            };
            cli::run(&config).map(|o| println!("{} rows -> {}", o.rows, o.results.display()))
        }
        Command::Oracle { spec, out } => cli::oracle(&spec, &out).map(|r| print!("{}", r.to_text())),
        Command::Validate { scenario } => cli::validate(&scenario).map(|s| {
            println!(
                "ok: {} with {} neighbor group(s), {} energies",
                s.capture.name,
                s.neighbors.len(),
                s.energy_grid.len()
            )
        }),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
