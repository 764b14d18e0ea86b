//! Mg2+ surrounded by six water molecules: the multi-neighbor sum.

use std::path::Path;

use icec::icec::{sigma_icec_multi, Neighbor, Scenario, ScenarioOptions};
use icec::tables::load_species;
use icec::units::{Energy, Length};

fn main() -> icec::Result<()> {
    let species = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/species");
    let mg = load_species(&species.join("mg2plus.species"))?;
    let h2o = load_species(&species.join("h2o.species"))?;

    for (label, r) in [("5 A", Length::angstrom(5.0)), ("1 nm", Length::nm(1.0))] {
        let scenario = Scenario::new(
            mg.clone(),
            vec![Neighbor::new(h2o.clone(), r, 6)?],
            vec![Energy::ev(0.01), Energy::ev(0.1), Energy::ev(1.0)],
            ScenarioOptions::default(),
        )?;
        for w in scenario.asymptotic_warnings() {
            println!("warning: {w}");
        }
        println!("6 H2O at {label}");
        for &eps in &scenario.energy_grid {
            let row = sigma_icec_multi(&scenario, eps)?;
            println!(
                "  eps = {:>4} eV: sigma_PR = {:.3e} Mb, one H2O = {:.3e} Mb, all six = {:.3e} Mb ({:.0}x PR)",
                eps.as_ev(),
                row.sigma_pr.as_mb(),
                row.channels[0].sigma.as_mb(),
                row.sigma_icec_total.as_mb(),
                row.sigma_icec_total.atomic() / row.sigma_pr.atomic()
            );
        }
    }
    Ok(())
}
