//! Loading a tabulated photodetachment curve and interpolating it in
//! photoelectron energy.

use std::path::Path;

use icec::tables::{load_curve, load_species, ThresholdExtension};
use icec::units::Energy;

fn main() -> icec::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");

    // stored against photon energy, 3.601 eV at threshold
    let raw = load_curve(&data.join("curves/cl_minus_pd.csv"))?;
    println!(
        "{}: {} nodes, {:?}, {:.3}..{:.3} eV",
        raw.source_label(),
        raw.len(),
        raw.parameterization(),
        raw.min_energy().as_ev(),
        raw.max_energy().as_ev()
    );

    // the species record shifts it to photoelectron energy
    let cl_minus = load_species(&data.join("species/cl_minus.species"))?;
    for eps in [0.0, 0.005, 0.1, 0.5, 2.0] {
        let s = cl_minus.curve.interpolate(Energy::ev(eps), ThresholdExtension::Disabled)?;
        println!("sigma_PD(Cl-, eps' = {eps:>5} eV) = {:.4} Mb", s.as_mb());
    }

    match cl_minus.curve.interpolate(Energy::ev(50.0), ThresholdExtension::Disabled) {
        Err(e) => println!("beyond the table: {e}"),
        Ok(s) => println!("unexpected value {}", s.as_mb()),
    }
    Ok(())
}
