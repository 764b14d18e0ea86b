//! Detailed balance between photodetachment (photoionization) of A^- and
//! photorecombination onto A:
//!
//! k^2 g(A) sigma_PR(eps) = k_ph^2 g(A^-) sigma_PI(eps)
//!
//! with k = sqrt(2 eps) the electron wavenumber and k_ph = (EA + eps) / c the
//! wavenumber of the emitted photon.

use crate::error::{Error, Result};
use crate::tables::{CrossSectionCurve, CurveKind, Parameterization, SpeciesRecord, ThresholdExtension};
use crate::units::{electron_wavenumber, photon_wavenumber, Area, Energy};

/// `(g_final / g_initial) (k_ph / k)^2` for capture of an electron of energy
/// `eps` into a level bound by `binding`.
pub fn balance_factor(binding: Energy, g_initial: u32, g_final: u32, eps: Energy) -> Result<f64> {
    if eps.atomic() < 0.0 || !eps.atomic().is_finite() {
        return Err(Error::domain("incident energy", "positive", eps.value()));
    }
    if eps.atomic() == 0.0 {
        return Err(Error::SingularWavenumber);
    }
    let k = electron_wavenumber(eps)?;
    let k_ph = photon_wavenumber(Energy::hartree(binding.atomic() + eps.atomic()))?;
    let ratio = k_ph / k;
    Ok(g_final as f64 / g_initial as f64 * ratio * ratio)
}

/// Photorecombination cross section of `species` at incident energy `eps`,
/// from its tabulated photodetachment curve.
pub fn pr_from_pi(species: &SpeciesRecord, eps: Energy, extension: ThresholdExtension) -> Result<Area> {
    let factor = balance_factor(species.binding_energy, species.g_initial, species.g_final, eps)?;
    let sigma_pi = species.curve.interpolate(eps, extension)?;
    Ok(Area::atomic_area(factor * sigma_pi.atomic()))
}

/// Inverse of [`pr_from_pi`]: the photodetachment cross section implied by a
/// photorecombination cross section.
pub fn pi_from_pr(species: &SpeciesRecord, eps: Energy, sigma_pr: Area) -> Result<Area> {
    let factor = balance_factor(species.binding_energy, species.g_initial, species.g_final, eps)?;
    Ok(Area::atomic_area(sigma_pr.atomic() / factor))
}

/// Photorecombination cross section materialized on an energy grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PrCurve {
    pub points: Vec<(Energy, Area)>,
    pub parent: SpeciesRecord,
}

impl PrCurve {
    pub fn on_grid(species: &SpeciesRecord, grid: &[Energy], extension: ThresholdExtension) -> Result<Self> {
        let mut points = Vec::with_capacity(grid.len());
        for &eps in grid {
            if let Some((prev, _)) = points.last() {
                let prev: &Energy = prev;
                if eps.atomic() <= prev.atomic() {
                    return Err(Error::InvalidScenario(format!(
                        "energy grid is not strictly increasing at {} eV",
                        eps.as_ev()
                    )));
                }
            }
            points.push((eps, pr_from_pi(species, eps, extension)?));
        }
        Ok(PrCurve {
            points,
            parent: species.clone(),
        })
    }

    /// Same data as a curve tagged `kind=PR`, for the shared CSV writer.
    pub fn to_curve(&self) -> Result<CrossSectionCurve> {
        let label = format!("photorecombination of {} via detailed balance", self.parent.name);
        Ok(CrossSectionCurve::new(&self.points, Parameterization::Photoelectron, label)?
            .with_kind(CurveKind::Photorecombination))
    }
}
