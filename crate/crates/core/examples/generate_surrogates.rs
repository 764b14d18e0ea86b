//! Regenerates the bundled cross-section curves under `data/curves`.
//!
//! None of these are measurements. They are smooth surrogates whose
//! magnitudes match the published values for each process to within the
//! accuracy an order-of-magnitude comparison needs:
//!
//! * Br^- and Cl^- photodetachment: `s (1 - exp(-eps / w))`, rising linearly
//!   from zero at threshold and saturating at about 20 Mb.
//! * Mg^+ photoionization: about 0.22 Mb at threshold, falling as `E^-2`.
//! * H2O photoionization: 8 Mb at the first threshold, rising to 20 Mb.
//!
//! ```text
//! cargo run --example generate_surrogates [-- OUT_DIR]
//! ```

use std::path::PathBuf;

use icec::tables::{CrossSectionCurve, Parameterization};
use icec::units::{Area, Energy};

/// Photoelectron energies (eV) for the halide tables: fine near threshold.
fn halide_grid() -> Vec<f64> {
    let mut e: Vec<f64> = (0..=10).map(|i| i as f64 * 0.01).collect();
    e.extend((5..=40).map(|i| i as f64 * 0.025));
    e.extend((11..=30).map(|i| i as f64 * 0.1));
    e.extend((13..=40).map(|i| i as f64 * 0.25));
    e
}

/// Photon energies (eV) from `threshold` to 40 eV.
fn photon_grid(threshold: f64) -> Vec<f64> {
    let mut e: Vec<f64> = (0..=50).map(|i| threshold + i as f64 * 0.1).collect();
    let mut x = ((threshold + 5.0) * 2.0).floor() / 2.0 + 0.5;
    while x <= 40.0 {
        e.push(x);
        x += 0.5;
    }
    e
}

fn curve(
    energies: &[f64],
    sigma: impl Fn(f64) -> f64,
    param: Parameterization,
    label: &str,
) -> icec::Result<CrossSectionCurve> {
    let points: Vec<_> = energies
        .iter()
        .map(|&e| (Energy::ev(e), Area::megabarn(sigma(e))))
        .collect();
    CrossSectionCurve::new(&points, param, label)
}

fn main() -> icec::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/curves"));
    std::fs::create_dir_all(&out).map_err(|e| icec::Error::Io { path: out.clone(), source: e })?;

    let saturating = |s: f64, w: f64| move |e: f64| s * (1.0 - (-e / w).exp());

    let br = curve(
        &halide_grid(),
        saturating(22.0, 0.45),
        Parameterization::Photoelectron,
        "synthetic surrogate for Br- photodetachment, 22 Mb * (1 - exp(-eps / 0.45 eV))",
    )?;
    br.write(&out.join("br_minus_pd.csv"))?;

    const CL_EA: f64 = 3.601;
    let cl_photon: Vec<f64> = halide_grid().iter().map(|e| CL_EA + e).collect();
    let cl = curve(
        &cl_photon,
        |e| saturating(20.0, 0.40)(e - CL_EA),
        Parameterization::Photon,
        "synthetic surrogate for Cl- photodetachment, 20 Mb * (1 - exp(-(E - 3.601 eV) / 0.40 eV))",
    )?;
    cl.write(&out.join("cl_minus_pd.csv"))?;

    const MG_IP: f64 = 14.74;
    let mg = curve(
        &photon_grid(MG_IP),
        |e| 0.22 * (MG_IP / e).powi(2),
        Parameterization::Photon,
        "synthetic surrogate for Mg+ photoionization, 0.22 Mb * (14.74 eV / E)^2",
    )?;
    mg.write(&out.join("mg_plus_pi.csv"))?;

    const H2O_IP: f64 = 12.62;
    let h2o = curve(
        &photon_grid(H2O_IP),
        |e| 8.0 + 12.0 * (1.0 - (-(e - H2O_IP) / 2.5).exp()),
        Parameterization::Photon,
        "synthetic surrogate for H2O photoionization, 8 Mb + 12 Mb * (1 - exp(-(E - 12.62 eV) / 2.5 eV))",
    )?;
    h2o.write(&out.join("h2o_pi.csv"))?;

    println!("wrote 4 curves to {}", out.display());
    Ok(())
}
