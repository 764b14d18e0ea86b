mod common;

use std::path::Path;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{flat_species, rel};
use icec::balance::{pi_from_pr, pr_from_pi};
use icec::tables::{parse_curve, CrossSectionCurve, Parameterization, SpeciesRecord, ThresholdExtension};
use icec::units::{Area, Energy};

const OFF: ThresholdExtension = ThresholdExtension::Disabled;

fn curve_strategy() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((0.01f64..2.0, 0.0f64..50.0), 2..30).prop_map(|steps| {
        let mut e = 0.0;
        steps
            .into_iter()
            .map(|(de, s)| {
                e += de;
                (e, s)
            })
            .collect()
    })
}

fn build(points: &[(f64, f64)], param: Parameterization) -> CrossSectionCurve {
    let pts: Vec<_> = points.iter().map(|&(e, s)| (Energy::ev(e), Area::megabarn(s))).collect();
    CrossSectionCurve::new(&pts, param, "random").unwrap()
}

proptest! {
    #[test]
    fn interpolation_exact_at_nodes_and_continuous(points in curve_strategy()) {
        let c = build(&points, Parameterization::Photoelectron);
        let p: Vec<_> = c.points().map(|(e, s)| (e.atomic(), s.atomic())).collect();
        let scale = p.iter().map(|q| q.1).fold(f64::MIN_POSITIVE, f64::max);
        for (i, &(e, s)) in p.iter().enumerate() {
            prop_assert_eq!(c.interpolate(Energy::hartree(e), OFF).unwrap().atomic(), s);
            if i > 0 && i + 1 < p.len() {
                // both one-sided limits approach the node value
                let h = 1e-9 * (e - p[i - 1].0).min(p[i + 1].0 - e);
                let left = c.interpolate(Energy::hartree(e - h), OFF).unwrap().atomic();
                let right = c.interpolate(Energy::hartree(e + h), OFF).unwrap().atomic();
                prop_assert!(rel(left, s) <= 1e-12 || (left - s).abs() <= 1e-8 * scale);
                prop_assert!(rel(right, s) <= 1e-12 || (right - s).abs() <= 1e-8 * scale);
            }
        }
    }

    #[test]
    fn midpoint_is_average(points in curve_strategy()) {
        let c = build(&points, Parameterization::Photoelectron);
        let p: Vec<_> = c.points().collect();
        for w in p.windows(2) {
            let mid = Energy::hartree(0.5 * (w[0].0.atomic() + w[1].0.atomic()));
            let expect = 0.5 * (w[0].1.atomic() + w[1].1.atomic());
            prop_assert!(rel(c.interpolate(mid, OFF).unwrap().atomic(), expect) <= 1e-12);
        }
    }

    #[test]
    fn csv_round_trip_preserves_printed_digits(points in curve_strategy()) {
        let c = build(&points, Parameterization::Photoelectron);
        let text = c.to_csv();
        let back = parse_curve(Path::new("rt.csv"), &text).unwrap();
        prop_assert_eq!(back.to_csv(), text);
        prop_assert_eq!(back.len(), c.len());
    }

    #[test]
    fn photon_and_photoelectron_parameterizations_agree(points in curve_strategy(), ip in 0.5f64..20.0, t in 0.0f64..1.0) {
        let electron = build(&points, Parameterization::Photoelectron);
        let photon_points: Vec<_> = points.iter().map(|&(e, s)| (e + ip, s)).collect();
        let photon = build(&photon_points, Parameterization::Photon);
        let sp_e = SpeciesRecord::new("B", Energy::ev(ip), 1, 1, electron).unwrap();
        let sp_p = SpeciesRecord::new("B", Energy::ev(ip), 1, 1, photon).unwrap();
        let lo = points[0].0;
        let hi = points.last().unwrap().0;
        let eps = Energy::ev(lo + t * (hi - lo));
        let a = sp_e.curve.interpolate(eps, OFF).unwrap().atomic();
        let b = sp_p.curve.interpolate(eps, OFF);
        // the shift can move the last node by one ulp
        if let Ok(b) = b {
            prop_assert!((a - b.atomic()).abs() <= 1e-9 * a.abs().max(Area::megabarn(1.0).atomic()));
        }
    }

    #[test]
    fn balance_is_linear_in_sigma(sigma in 0.0f64..100.0, eps in 1e-3f64..10.0, ea in 0.5f64..20.0) {
        let one = flat_species("A", ea, 2, 1, 1.0);
        let many = flat_species("A", ea, 2, 1, sigma);
        let e = Energy::ev(eps);
        let p1 = pr_from_pi(&one, e, OFF).unwrap().atomic();
        let ps = pr_from_pi(&many, e, OFF).unwrap().atomic();
        prop_assert!(rel(ps, sigma * p1) <= 1e-12);
    }
}

#[test]
fn balance_round_trip_random_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst: f64 = 0.0;
    for _ in 0..100_000 {
        let ea = rng.gen_range(0.1..30.0);
        let gi = rng.gen_range(1..=8);
        let gf = rng.gen_range(1..=8);
        let sigma = 10f64.powf(rng.gen_range(-3.0..2.0));
        let sp = flat_species("A", ea, gi, gf, sigma);
        let eps = Energy::ev(10f64.powf(rng.gen_range(-4.0..1.5)));
        let pr = pr_from_pi(&sp, eps, OFF).unwrap();
        let back = pi_from_pr(&sp, eps, pr).unwrap();
        worst = worst.max(rel(back.atomic(), Area::megabarn(sigma).atomic()));
    }
    assert!(worst <= 1e-12, "{worst:e}");
}

#[test]
fn wigner_extension_for_s_wave() {
    let pts = [(Energy::ev(0.2), Area::megabarn(4.0)), (Energy::ev(1.0), Area::megabarn(10.0))];
    let c = CrossSectionCurve::new(&pts, Parameterization::Photoelectron, "s wave")
        .unwrap()
        .with_partial_wave(Some(0));
    for eps in [0.0, 0.01, 0.05, 0.15] {
        let s = c.interpolate(Energy::ev(eps), ThresholdExtension::Wigner).unwrap().as_mb();
        assert!(rel(s, 4.0 * (eps / 0.2f64).sqrt()) <= 1e-12 || (eps == 0.0 && s == 0.0));
    }
    assert!(c.interpolate(Energy::ev(0.1), OFF).is_err());
    // p wave: (eps / eps_min)^(3/2)
    let p = c.clone().with_partial_wave(Some(1));
    let s = p.interpolate(Energy::ev(0.05), ThresholdExtension::Wigner).unwrap().as_mb();
    assert!(rel(s, 4.0 * 0.25f64.powf(1.5)) <= 1e-12);
    // without a declared partial wave the extension is unavailable
    let none = c.with_partial_wave(None);
    assert!(matches!(
        none.interpolate(Energy::ev(0.05), ThresholdExtension::Wigner),
        Err(icec::Error::OutOfRange { .. })
    ));
}
