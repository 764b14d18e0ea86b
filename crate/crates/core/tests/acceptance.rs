//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.
//!
//! ```text
//! cargo test --test acceptance
//! ```

mod common;

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{data_dir, flat_species, rel, scenario_path};
use icec::balance::{pi_from_pr, pr_from_pi};
use icec::icec::{icec_threshold, p_coefficient, scan, sigma_icec_multi, sigma_icec_single, Neighbor, Scenario};
use icec::oracle::{verify_factorization, DipoleModel, FactorizationCheck, QuadratureSpec};
use icec::scenario::load_scenario;
use icec::tables::ThresholdExtension;
use icec::units::{Area, Energy, Length};

// criterion 1
const THRESHOLD_EV: f64 = 0.288;
const THRESHOLD_TOL_EV: f64 = 1e-9;
// criterion 2
const ROUND_TRIP_SAMPLES: usize = 100_000;
const ROUND_TRIP_TOL: f64 = 1e-12;
// criterion 3: independent unit-by-unit evaluation
const P_ANCHOR: f64 = 12929.9998;
const P_ANCHOR_TOL: f64 = 1e-3;
const P_FLOOR: f64 = 1e3;
// criterion 4
const SCALING_TOL: f64 = 1e-12;
// criterion 5
const ENHANCEMENT_FLOOR: f64 = 1e3;
const ABOVE_THRESHOLD_MARGIN_EV: f64 = 0.1;
const NEAR_THRESHOLD_EV: f64 = 0.01;
const CL_BR_TARGET_MB: f64 = 0.4;
const CL_BR_FACTOR: f64 = 3.0;
const MG_RATIO_RANGE: (f64, f64) = (1e2, 1e4);
const MG_SIGMA_FLOOR_MB: f64 = 1.0;
// criterion 6
const ORACLE_DEFAULT_TOL: f64 = 5e-3;
const ORACLE_HIGH_ORDER: usize = 64;
const ORACLE_HIGH_ORDER_TOL: f64 = 1e-6;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn threshold() -> Outcome {
    let t = icec_threshold(Energy::ev(3.313), Energy::ev(3.601)).unwrap().as_ev();
    let err = (t - THRESHOLD_EV).abs();
    outcome(err <= THRESHOLD_TOL_EV, format!("threshold {t:.12} eV, |error| {err:.1e} eV (limit {THRESHOLD_TOL_EV:e})"))
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for _ in 0..ROUND_TRIP_SAMPLES {
        let sp = flat_species(
            "A",
            rng.gen_range(0.1..30.0),
            rng.gen_range(1..=8),
            rng.gen_range(1..=8),
            10f64.powf(rng.gen_range(-3.0..2.0)),
        );
        let eps = Energy::ev(10f64.powf(rng.gen_range(-4.0..1.5)));
        let pr = pr_from_pi(&sp, eps, ThresholdExtension::Disabled).unwrap();
        let sigma = sp.curve.interpolate(eps, ThresholdExtension::Disabled).unwrap();
        worst = worst.max(rel(pi_from_pr(&sp, eps, pr).unwrap().atomic(), sigma.atomic()));
    }
    outcome(
        worst <= ROUND_TRIP_TOL,
        format!("{ROUND_TRIP_SAMPLES} samples, worst relative error {worst:.1e} (limit {ROUND_TRIP_TOL:e})"),
    )
}

fn p_anchor() -> Outcome {
    let p = p_coefficient(Area::megabarn(30.0), Energy::ev(3.6), Length::nm(1.0)).unwrap();
    let err = rel(p, P_ANCHOR);
    outcome(
        err <= P_ANCHOR_TOL && p > P_FLOOR,
        format!("P = {p:.4} vs {P_ANCHOR} (relative error {err:.1e}, limit {P_ANCHOR_TOL:e}); P > {P_FLOOR:e}"),
    )
}

fn scaling() -> Outcome {
    let br_cl = load_scenario(&scenario_path("br_cl_minus")).unwrap();
    let eps = Energy::ev(0.7);
    let cl_minus = &br_cl.neighbors[0].species;
    let r6: Vec<f64> = [0.5, 1.0, 2.0, 3.0]
        .iter()
        .map(|&r| {
            let n = Neighbor::new(cl_minus.clone(), Length::nm(r), 1).unwrap();
            let s = sigma_icec_single(&br_cl.capture, &n, eps, &br_cl.options).unwrap().sigma.atomic();
            s * Length::nm(r).atomic().powi(6)
        })
        .collect();
    let spread = r6.iter().map(|v| rel(*v, r6[0])).fold(0.0, f64::max);

    let mg = load_scenario(&scenario_path("mg2plus_h2o")).unwrap();
    let h2o = &mg.neighbors[0].species;
    let single = {
        let n = Neighbor::new(h2o.clone(), Length::angstrom(5.0), 1).unwrap();
        sigma_icec_single(&mg.capture, &n, eps, &mg.options).unwrap().sigma.atomic()
    };
    let mut n_exact = true;
    for count in [1, 6, 10] {
        let scen = Scenario::new(
            mg.capture.clone(),
            vec![Neighbor::new(h2o.clone(), Length::angstrom(5.0), count).unwrap()],
            vec![eps],
            mg.options,
        )
        .unwrap();
        n_exact &= sigma_icec_multi(&scen, eps).unwrap().sigma_icec_total.atomic() == count as f64 * single;
    }

    let sigma = Area::megabarn(17.0);
    let r = Length::nm(1.0);
    let mut worst_e4: f64 = 0.0;
    for (e, lambda) in [(3.6, 1.5), (14.75, 2.0), (5.0, 3.7)] {
        let p1 = p_coefficient(sigma, Energy::ev(e), r).unwrap();
        let p2 = p_coefficient(sigma, Energy::ev(e * lambda), r).unwrap();
        worst_e4 = worst_e4.max(rel(p1 / p2, lambda.powi(4)));
    }
    outcome(
        spread <= SCALING_TOL && n_exact && worst_e4 <= SCALING_TOL,
        format!(
            "sigma R^6 spread {spread:.1e} over 0.5/1/2/3 nm; N x singleton exact for N = 1, 6, 10: {n_exact}; \
             E_vph^-4 error {worst_e4:.1e} (limit {SCALING_TOL:e})"
        ),
    )
}

fn figures() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();

    // Br + Cl- at 1 nm above threshold
    let br_cl = load_scenario(&scenario_path("br_cl_minus")).unwrap();
    let from = THRESHOLD_EV + ABOVE_THRESHOLD_MARGIN_EV;
    let min_ratio = scan(&br_cl)
        .unwrap()
        .iter()
        .filter(|r| r.eps.as_ev() >= from)
        .map(|r| r.channels[0].sigma.atomic() / r.sigma_pr.atomic())
        .fold(f64::INFINITY, f64::min);
    ok &= min_ratio > ENHANCEMENT_FLOOR;
    parts.push(format!("Br/Cl- 1 nm min sigma_ICEC/sigma_PR = {min_ratio:.0} for eps >= {from:.3} eV"));

    // Cl + Br- at 1 nm near threshold
    let cl_br = load_scenario(&scenario_path("cl_br_minus")).unwrap();
    let n = &cl_br.neighbors[0];
    assert_eq!(n.distance, Length::nm(1.0));
    let s = sigma_icec_single(&cl_br.capture, n, Energy::ev(NEAR_THRESHOLD_EV), &cl_br.options)
        .unwrap()
        .sigma
        .as_mb();
    ok &= s > CL_BR_TARGET_MB / CL_BR_FACTOR && s < CL_BR_TARGET_MB * CL_BR_FACTOR;
    parts.push(format!("Cl/Br- 1 nm sigma_ICEC({NEAR_THRESHOLD_EV} eV) = {s:.3} Mb"));

    // Mg2+ + 6 H2O at 5 A near threshold
    let mg = load_scenario(&scenario_path("mg2plus_h2o")).unwrap();
    let row = sigma_icec_multi(&mg, Energy::ev(NEAR_THRESHOLD_EV)).unwrap();
    let shell = &mg.neighbors[0];
    assert_eq!(shell.distance, Length::angstrom(5.0));
    let one = row.channels[0].sigma.atomic();
    let six = shell.count as f64 * one;
    let pr = row.sigma_pr.atomic();
    let in_range = |x: f64| x >= MG_RATIO_RANGE.0 && x < MG_RATIO_RANGE.1;
    ok &= in_range(one / pr) && in_range(six / pr);
    ok &= Area::atomic_area(one).as_mb() > MG_SIGMA_FLOOR_MB;
    parts.push(format!(
        "Mg2+/H2O 5 A ratio {:.0} (one H2O), {:.0} (six); sigma_ICEC {:.1} Mb (one), {:.1} Mb (six)",
        one / pr,
        six / pr,
        Area::atomic_area(one).as_mb(),
        Area::atomic_area(six).as_mb()
    ));
    outcome(ok, parts.join("; "))
}

fn oracle() -> Outcome {
    let c = Complex64::new;
    let model = DipoleModel::new(
        [c(-0.3, 0.5), c(0.9, -0.2), c(0.4, 0.1)],
        [c(0.2, 0.2), c(-0.1, 0.7), c(0.6, 0.0)],
        Energy::ev(3.9),
        Energy::ev(3.313),
        Energy::ev(3.601),
        Length::bohr(10.0),
    )
    .unwrap();
    let rs: Vec<_> = [10.0, 20.0, 40.0].into_iter().map(Length::bohr).collect();
    let check = FactorizationCheck::default();
    let worst = |r: &icec::oracle::FactorizationReport| r.rows.iter().map(|x| x.relative_error()).fold(0.0, f64::max);

    let default = verify_factorization(&model, &rs, &QuadratureSpec::default(), &check).unwrap();
    let high_spec = QuadratureSpec::new(ORACLE_HIGH_ORDER, ORACLE_HIGH_ORDER_TOL).unwrap();
    let high = verify_factorization(&model, &rs, &high_spec, &check).unwrap();
    let bad_b0 = verify_factorization(&model.clone().with_coupling([1.0, 2.0, 1.0]), &rs, &QuadratureSpec::default(), &check)
        .unwrap();
    let bad_prefactor = verify_factorization(
        &model,
        &rs,
        &QuadratureSpec::default(),
        &FactorizationCheck { prefactor: 3.0 / std::f64::consts::PI },
    )
    .unwrap();
    let ok = default.passed()
        && worst(&default) <= ORACLE_DEFAULT_TOL
        && high.passed()
        && worst(&high) <= ORACLE_HIGH_ORDER_TOL
        && !bad_b0.passed()
        && !bad_prefactor.passed();
    outcome(
        ok,
        format!(
            "ratio error {:.1e} at order {} (limit {ORACLE_DEFAULT_TOL:e}), {:.1e} at order {ORACLE_HIGH_ORDER} (limit {ORACLE_HIGH_ORDER_TOL:e}); \
             B_0 = +2 fails `{}`; prefactor 3/pi fails `{}`",
            worst(&default),
            QuadratureSpec::default().order,
            worst(&high),
            bad_b0.first_failure().map_or("nothing", |c| c.name),
            bad_prefactor.first_failure().map_or("nothing", |c| c.name),
        ),
    )
}

fn cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_icec");
    let dir = tempfile::tempdir().unwrap();
    let run = |scenario: &Path, out: &Path| {
        Command::new(bin)
            .args(["run", scenario.to_str().unwrap(), "--out", out.to_str().unwrap(), "--plot-data"])
            .output()
            .unwrap()
    };
    let code = |o: std::process::Output| o.status.code().unwrap_or(-1);

    let mg = scenario_path("mg2plus_h2o");
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    let first = code(run(&mg, &a));
    let second = code(run(&mg, &b));
    let identical = first == 0
        && second == 0
        && fs::read(a.join("results.csv")).unwrap() == fs::read(b.join("results.csv")).unwrap();

    let schema = dir.path().join("schema.scenario");
    fs::write(&schema, "capture_species = x\ngrid.points = many\n").unwrap();
    let data = dir.path().join("data.scenario");
    fs::write(
        &data,
        format!(
            "capture_species = {}\nneighbor {{ species = missing.species; R_nm = 1 }}\ngrid.start_eV = 0.1\ngrid.stop_eV = 1\ngrid.points = 2\n",
            common::species_path("br").display()
        ),
    )
    .unwrap();
    let default_oracle = data_dir().join("oracle/default.oracle");
    let tight = dir.path().join("tight.oracle");
    fs::write(
        &tight,
        fs::read_to_string(&default_oracle).unwrap().replace("quadrature.tolerance = 5e-3", "quadrature.tolerance = 1e-300"),
    )
    .unwrap();
    let oracle = |spec: &Path| {
        code(
            Command::new(bin)
                .args(["oracle", spec.to_str().unwrap(), "--out", dir.path().join("o").to_str().unwrap()])
                .output()
                .unwrap(),
        )
    };
    let codes = [
        (0, first),
        (2, code(run(&schema, &dir.path().join("s")))),
        (3, code(run(&data, &dir.path().join("d")))),
        (4, oracle(&tight)),
        (5, oracle(&data_dir().join("oracle/wrong_b0.oracle"))),
    ];
    let contract = codes.iter().all(|(want, got)| want == got);
    outcome(
        identical && contract,
        format!(
            "two Mg2+ runs byte-identical: {identical}; exit codes (expected, got): {}",
            codes.iter().map(|(w, g)| format!("({w}, {g})")).collect::<Vec<_>>().join(" ")
        ),
    )
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 7] = [
        ("threshold exactness", Duration::from_secs(1), threshold),
        ("detailed-balance round trip", Duration::from_secs(1), round_trip),
        ("P-coefficient anchor", Duration::from_secs(1), p_anchor),
        ("scaling suite", Duration::from_secs(1), scaling),
        ("figure-level magnitudes", Duration::from_secs(5), figures),
        ("oracle factorization", Duration::from_secs(30), oracle),
        ("CLI determinism and exit codes", Duration::from_secs(5), cli),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let took = start.elapsed();
        let pass = o.passed && took <= *budget;
        if !pass {
            failed += 1;
        }
        println!(
            "[{}] {}. {name}: {} [{:.2} s, budget {} s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            took.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
