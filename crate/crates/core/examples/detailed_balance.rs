//! Photorecombination of Br from the photodetachment of Br^-.

use std::path::Path;

use icec::balance::{balance_factor, pi_from_pr, pr_from_pi, PrCurve};
use icec::tables::{load_species, ThresholdExtension};
use icec::units::Energy;

fn main() -> icec::Result<()> {
    let br = load_species(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/species/br.species"))?;
    println!("{}: EA = {} eV, g = {} -> {}", br.name, br.binding_energy.as_ev(), br.g_initial, br.g_final);

    for eps in [0.1, 0.3, 0.5, 1.0] {
        let e = Energy::ev(eps);
        let pr = pr_from_pi(&br, e, ThresholdExtension::Disabled)?;
        let back = pi_from_pr(&br, e, pr)?;
        println!(
            "eps = {eps:>4} eV  factor = {:.3e}  sigma_PR = {:.3e} Mb  (sigma_PD recovered: {:.4} Mb)",
            balance_factor(br.binding_energy, br.g_initial, br.g_final, e)?,
            pr.as_mb(),
            back.as_mb()
        );
    }

    let grid: Vec<_> = (1..=5).map(|i| Energy::ev(0.2 * i as f64)).collect();
    print!("{}", PrCurve::on_grid(&br, &grid, ThresholdExtension::Disabled)?.to_curve()?.to_csv());
    Ok(())
}
