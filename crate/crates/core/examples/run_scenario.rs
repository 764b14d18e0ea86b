//! Runs a bundled scenario file end to end and writes the result table and
//! plot series, as `icec run --plot-data` does.
//!
//! ```text
//! cargo run --example run_scenario [-- SCENARIO [OUT_DIR]]
//! ```

use std::path::PathBuf;

use icec::cli::{run, RunConfig};

fn main() {
    env_logger::Builder::new().filter_level(log::LevelFilter::Info).init();
    let mut args = std::env::args().skip(1);
    let scenario = args.next().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/scenarios/br_cl_minus.scenario")
    });
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("icec_run_scenario"));

    match run(&RunConfig::new(scenario, out).with_plot_data(true)) {
        Ok(o) => {
            println!("{} rows in {}", o.rows, o.results.display());
            for p in o.plot_series {
                println!("  {}", p.display());
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(icec::cli::exit_code(&e));
        }
    }
}
