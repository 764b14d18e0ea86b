//! Br capturing an electron next to Cl^-: threshold, enhancement over
//! photorecombination, and the distance dependence.

use std::path::Path;

use icec::icec::{icec_threshold, p_coefficient, sigma_icec_single, Neighbor, ScenarioOptions};
use icec::tables::load_species;
use icec::units::{Area, Energy, Length};

fn main() -> icec::Result<()> {
    let species = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/species");
    let br = load_species(&species.join("br.species"))?;
    let cl_minus = load_species(&species.join("cl_minus.species"))?;

    let threshold = icec_threshold(br.binding_energy, cl_minus.binding_energy)?;
    println!("threshold: {:.3} eV", threshold.as_ev());

    // a fixed 30 Mb at 3.6 eV and 1 nm
    let p = p_coefficient(Area::megabarn(30.0), Energy::ev(3.6), Length::nm(1.0))?;
    println!("P(30 Mb, 3.6 eV, 1 nm) = {p:.1}");

    let options = ScenarioOptions::default();
    for r in [1.0, 2.0, 3.0] {
        let n = Neighbor::new(cl_minus.clone(), Length::nm(r), 1)?;
        println!("R = {r} nm");
        for eps in [0.2, 0.3, 0.4, 0.7, 1.0] {
            let ch = sigma_icec_single(&br, &n, Energy::ev(eps), &options)?;
            if ch.open {
                println!("  eps = {eps} eV: P = {:>9.1}, sigma = {:.3e} Mb", ch.p, ch.sigma.as_mb());
            } else {
                println!("  eps = {eps} eV: closed (eps' = {:.3} eV)", ch.eprime.as_ev());
            }
        }
    }
    Ok(())
}
