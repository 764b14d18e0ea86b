#![allow(dead_code)]

use std::path::PathBuf;

use icec::tables::{CrossSectionCurve, Parameterization, SpeciesRecord};
use icec::units::{Area, Energy};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn species_path(name: &str) -> PathBuf {
    data_dir().join("species").join(format!("{name}.species"))
}

pub fn scenario_path(name: &str) -> PathBuf {
    data_dir().join("scenarios").join(format!("{name}.scenario"))
}

/// Constant cross section from 0 to 100 eV of photoelectron energy.
pub fn flat_species(name: &str, binding_ev: f64, g_initial: u32, g_final: u32, sigma_mb: f64) -> SpeciesRecord {
    let curve = CrossSectionCurve::new(
        &[
            (Energy::ev(0.0), Area::megabarn(sigma_mb)),
            (Energy::ev(100.0), Area::megabarn(sigma_mb)),
        ],
        Parameterization::Photoelectron,
        "flat test curve",
    )
    .unwrap();
    SpeciesRecord::new(name, Energy::ev(binding_ev), g_initial, g_final, curve).unwrap()
}

pub fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
