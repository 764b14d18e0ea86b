//! Batch front end: run a scenario scan, check the factorization with the
//! dipole oracle, or validate a scenario without computing anything.
//!
//! Everything here returns [`Result`]; the `icec` binary maps errors to
//! process exit codes with [`exit_code`].

use std::fs;
use std::path::{Path, PathBuf};

use log::{info, warn};

use crate::error::{Error, ErrorClass, Result};
use crate::icec::{group_sigma, results_to_csv, scan, IcecResultRow, Scenario};
use crate::oracle::{verify_factorization, FactorizationReport};
use crate::scenario::{load_oracle_spec, read_scenario_spec};
use crate::tables::format_sig9;
use crate::units::Area;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_NUMERICS: i32 = 4;
pub const EXIT_ASSERTION: i32 = 5;

pub fn exit_code(err: &Error) -> i32 {
    match err.class() {
        ErrorClass::Schema => EXIT_SCHEMA,
        ErrorClass::Data => EXIT_DATA,
        ErrorClass::Numerics => EXIT_NUMERICS,
        ErrorClass::Assertion => EXIT_ASSERTION,
    }
}

pub const RESULTS_FILE: &str = "results.csv";
pub const PLOT_DIR: &str = "plot";
pub const REPORT_TEXT_FILE: &str = "factorization_report.txt";
pub const REPORT_CSV_FILE: &str = "factorization.csv";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub scenario: PathBuf,
    pub out_dir: PathBuf,
    pub emit_plot_data: bool,
    /// 0 = warnings, 1 = info, 2 or more = debug.
    pub verbosity: u8,
}

impl RunConfig {
    pub fn new(scenario: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            scenario: scenario.into(),
            out_dir: out_dir.into(),
            emit_plot_data: false,
            verbosity: 0,
        }
    }

    pub fn with_plot_data(mut self, emit: bool) -> Self {
        self.emit_plot_data = emit;
        self
    }
}

pub fn log_level(verbosity: u8) -> log::LevelFilter {
    match verbosity {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    }
}

/// Files written by [`run`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub results: PathBuf,
    pub plot_series: Vec<PathBuf>,
    pub rows: usize,
}

/// One two-column plot series.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotSeries {
    pub file_name: String,
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl PlotSeries {
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n# eps_eV sigma_Mb\n", self.label);
        for &(e, s) in &self.points {
            out.push_str(&format!("{} {}\n", format_sig9(e), format_sig9(s)));
        }
        out
    }
}

fn trim_number(x: f64) -> String {
    let s = format!("{x:.6}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// sigma_PR, then for every neighbor group a single-neighbor series and, when
/// the group holds more than one neighbor, the whole-group series.
pub fn plot_series(scenario: &Scenario, rows: &[IcecResultRow]) -> Vec<PlotSeries> {
    let column = |f: &dyn Fn(&IcecResultRow) -> Area| -> Vec<(f64, f64)> {
        rows.iter().map(|r| (r.eps.as_ev(), f(r).as_mb())).collect()
    };
    let mut series = vec![PlotSeries {
        file_name: "sigma_PR.dat".into(),
        label: format!("sigma_PR of {}", scenario.capture.name),
        points: column(&|r| r.sigma_pr),
    }];
    for (i, n) in scenario.neighbors.iter().enumerate() {
        let r = trim_number(n.distance.as_nm());
        series.push(PlotSeries {
            file_name: format!("sigma_ICEC_n{}_R{}nm_N1.dat", i + 1, r),
            label: format!("sigma_ICEC, one {} at R = {} nm", n.species.name, r),
            points: column(&|row| row.channels[i].sigma),
        });
        if n.count > 1 {
            series.push(PlotSeries {
                file_name: format!("sigma_ICEC_n{}_R{}nm_N{}.dat", i + 1, r, n.count),
                label: format!("sigma_ICEC, {} x {} at R = {} nm", n.count, n.species.name, r),
                points: column(&|row| group_sigma(n, &row.channels[i])),
            });
        }
    }
    series
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Parses and loads a scenario, logging asymptotic-validity warnings.
pub fn validate(path: &Path) -> Result<Scenario> {
    let spec = read_scenario_spec(path)?;
    let scenario = spec.load()?;
    for w in scenario.asymptotic_warnings() {
        warn!("{w}");
    }
    info!(
        "{}: capture on {} with {} neighbor group(s), {} grid energies",
        path.display(),
        scenario.capture.name,
        scenario.neighbors.len(),
        scenario.energy_grid.len()
    );
    Ok(scenario)
}

/// Scans the scenario and writes `results.csv` (and `plot/*.dat`).
pub fn run(config: &RunConfig) -> Result<RunOutput> {
    let scenario = validate(&config.scenario)?;
    let rows = scan(&scenario)?;
    fs::create_dir_all(&config.out_dir).map_err(|e| Error::io(&config.out_dir, e))?;
    let results = config.out_dir.join(RESULTS_FILE);
    write(&results, &results_to_csv(&scenario, &rows))?;
    info!("wrote {}", results.display());

    let mut plot_files = Vec::new();
    if config.emit_plot_data {
        let dir = config.out_dir.join(PLOT_DIR);
        fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        for s in plot_series(&scenario, &rows) {
            let path = dir.join(&s.file_name);
            write(&path, &s.to_text())?;
            plot_files.push(path);
        }
        info!("wrote {} plot series to {}", plot_files.len(), dir.display());
    }
    Ok(RunOutput {
        results,
        plot_series: plot_files,
        rows: rows.len(),
    })
}

/// Runs the factorization check and writes its report. The report is
/// written even when a check fails; the failure is then returned as
/// [`Error::FactorizationMismatch`].
pub fn oracle(spec_path: &Path, out_dir: &Path) -> Result<FactorizationReport> {
    let spec = load_oracle_spec(spec_path)?;
    let report = verify_factorization(&spec.model, &spec.distances, &spec.quadrature, &spec.check)?;
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    write(&out_dir.join(REPORT_TEXT_FILE), &report.to_text())?;
    write(&out_dir.join(REPORT_CSV_FILE), &report.to_csv())?;
    info!("wrote factorization report to {}", out_dir.display());
    report.into_result()
}
