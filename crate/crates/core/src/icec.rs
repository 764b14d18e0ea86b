//! Asymptotic cross section for interatomic Coulombic electron capture.
//!
//! A free electron of energy `eps` is captured by A (binding energy EA) and
//! the excess energy `E_vph = EA + eps` is handed as a virtual photon to a
//! neighbor B at distance R, which is ionized (ionization potential IP):
//!
//! ```text
//! EA + eps = IP + eps'
//! sigma_ICEC(eps) = P(E_vph, R) sigma_PR(eps)
//! P(E_vph, R)     = 3 c^4 sigma_PI^(B)(eps') / (2 pi R^6 E_vph^4)     (atomic units)
//! ```
//!
//! Several neighbors add incoherently.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::balance::pr_from_pi;
use crate::error::{Error, Result};
use crate::tables::{format_sig9, SpeciesRecord, ThresholdExtension};
use crate::units::{Area, Energy, Length, C_AU};

/// The `3 / (2 pi)` in front of P.
pub const P_PREFACTOR: f64 = 3.0 / (2.0 * PI);

/// Lowest incident energy at which the neighbor can be ionized.
pub fn icec_threshold(ea: Energy, ip: Energy) -> Result<Energy> {
    check_positive("electron affinity", ea)?;
    check_positive("ionization potential", ip)?;
    let gap = ip.atomic() - ea.atomic();
    if gap <= 0.0 {
        return Ok(Energy::hartree(0.0).to_unit(ea.unit()));
    }
    Ok(Energy::hartree(gap).to_unit(ea.unit()))
}

/// Kinetic energy of the electron ejected from the neighbor.
pub fn outgoing_energy(ea: Energy, eps: Energy, ip: Energy) -> Result<Energy> {
    let balance = energy_balance(ea, eps, ip);
    if balance < 0.0 {
        return Err(Error::ChannelClosed {
            energy_ev: eps.as_ev(),
            threshold_ev: icec_threshold(ea, ip)?.as_ev(),
        });
    }
    Ok(Energy::hartree(balance))
}

/// EA + eps - IP in hartree, with round-off at threshold snapped to zero.
fn energy_balance(ea: Energy, eps: Energy, ip: Energy) -> f64 {
    let balance = ea.atomic() + eps.atomic() - ip.atomic();
    let scale = ea.atomic().abs().max(ip.atomic().abs()).max(1e-3);
    if balance < 0.0 && balance > -1e-12 * scale {
        0.0
    } else {
        balance
    }
}

fn check_positive(what: &'static str, e: Energy) -> Result<()> {
    if e.atomic() > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(what, "positive", e.value()))
    }
}

/// P per unit photoionization cross section: `3 c^4 / (2 pi R^6 E^4)` in
/// inverse bohr^2.
pub fn enhancement_per_area(e_vph: Energy, r: Length) -> Result<f64> {
    let e = e_vph.atomic();
    let r = r.atomic();
    if !(e > 0.0) {
        return Err(Error::domain("virtual photon energy", "positive", e_vph.value()));
    }
    if !(r > 0.0) {
        return Err(Error::domain("distance", "positive", r));
    }
    let c2 = C_AU * C_AU;
    let r3 = r * r * r;
    let e2 = e * e;
    Ok(P_PREFACTOR * c2 * c2 / (r3 * r3 * e2 * e2))
}

/// Dimensionless enhancement coefficient P(E_vph, R).
pub fn p_coefficient(sigma_pi: Area, e_vph: Energy, r: Length) -> Result<f64> {
    Ok(enhancement_per_area(e_vph, r)? * sigma_pi.atomic())
}

/// A group of identical neighbors B at a common distance.
#[derive(Debug, Clone, PartialEq)]
pub struct Neighbor {
    pub species: SpeciesRecord,
    pub distance: Length,
    pub count: u32,
}

impl Neighbor {
    pub fn new(species: SpeciesRecord, distance: Length, count: u32) -> Result<Self> {
        if !(distance.atomic() > 0.0) {
            return Err(Error::domain("neighbor distance", "positive", distance.value()));
        }
        if count == 0 {
            return Err(Error::InvalidScenario("neighbor count must be at least 1".into()));
        }
        Ok(Neighbor {
            species,
            distance,
            count,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioOptions {
    /// Spin coefficient C_S; cross sections scale with its square.
    pub spin_coefficient: f64,
    pub extension: ThresholdExtension,
}

impl Default for ScenarioOptions {
    fn default() -> Self {
        ScenarioOptions {
            spin_coefficient: 1.0,
            extension: ThresholdExtension::Disabled,
        }
    }
}

/// A capture center with its environment and an incident-energy grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub capture: SpeciesRecord,
    pub neighbors: Vec<Neighbor>,
    pub energy_grid: Vec<Energy>,
    pub options: ScenarioOptions,
}

impl Scenario {
    pub fn new(
        capture: SpeciesRecord,
        neighbors: Vec<Neighbor>,
        energy_grid: Vec<Energy>,
        options: ScenarioOptions,
    ) -> Result<Self> {
        if neighbors.is_empty() {
            return Err(Error::InvalidScenario("at least one neighbor is required".into()));
        }
        for pair in energy_grid.windows(2) {
            if pair[1].atomic() <= pair[0].atomic() {
                return Err(Error::InvalidScenario(format!(
                    "energy grid is not strictly increasing at {} eV",
                    pair[1].as_ev()
                )));
            }
        }
        if let Some(e) = energy_grid.iter().find(|e| !(e.atomic() > 0.0)) {
            return Err(Error::InvalidScenario(format!(
                "grid energies must be positive, found {} eV",
                e.as_ev()
            )));
        }
        if !options.spin_coefficient.is_finite() {
            return Err(Error::InvalidScenario("spin coefficient must be finite".into()));
        }
        Ok(Scenario {
            capture,
            neighbors,
            energy_grid,
            options,
        })
    }

    /// Neighbors closer than three times the sum of the nominal radii, where
    /// the large-distance expansion is doubtful. Empty when radii are absent.
    pub fn asymptotic_warnings(&self) -> Vec<String> {
        let Some(ra) = self.capture.radius else {
            return Vec::new();
        };
        self.neighbors
            .iter()
            .enumerate()
            .filter_map(|(i, n)| {
                let rb = n.species.radius?;
                let limit = 3.0 * (ra.atomic() + rb.atomic());
                (n.distance.atomic() < limit).then(|| {
                    format!(
                        "neighbor {} ({}) at {:.4} nm is closer than 3x the summed radii ({:.4} nm); \
                         the asymptotic cross section may be unreliable",
                        i + 1,
                        n.species.name,
                        n.distance.as_nm(),
                        Length::bohr(limit).as_nm()
                    )
                })
            })
            .collect()
    }
}

/// One neighbor's share of the cross section at a given incident energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelResult {
    /// EA + eps - IP. Negative when the channel is closed.
    pub eprime: Energy,
    pub e_vph: Energy,
    pub p: f64,
    /// Contribution of a single neighbor of this group.
    pub sigma: Area,
    pub open: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IcecResultRow {
    pub eps: Energy,
    pub sigma_pr: Area,
    pub channels: Vec<ChannelResult>,
    /// Sum over groups of count times the single-neighbor contribution.
    pub sigma_icec_total: Area,
}

/// Cross section for capture by A in the presence of one neighbor, given the
/// photorecombination cross section of A at the same energy.
pub fn channel_with_pr(
    capture: &SpeciesRecord,
    neighbor: &Neighbor,
    eps: Energy,
    sigma_pr: Area,
    options: &ScenarioOptions,
) -> Result<ChannelResult> {
    let e_vph = Energy::hartree(capture.binding_energy.atomic() + eps.atomic());
    let balance = energy_balance(capture.binding_energy, eps, neighbor.species.binding_energy);
    if balance < 0.0 {
        return Ok(ChannelResult {
            eprime: Energy::hartree(balance),
            e_vph,
            p: 0.0,
            sigma: Area::atomic_area(0.0),
            open: false,
        });
    }
    let eprime = Energy::hartree(balance);
    let sigma_pi = neighbor.species.curve.interpolate(eprime, options.extension)?;
    let p = p_coefficient(sigma_pi, e_vph, neighbor.distance)?;
    let cs2 = options.spin_coefficient * options.spin_coefficient;
    Ok(ChannelResult {
        eprime,
        e_vph,
        p,
        sigma: Area::atomic_area(cs2 * p * sigma_pr.atomic()),
        open: true,
    })
}

/// Cross section for A with a single neighbor.
pub fn sigma_icec_single(
    capture: &SpeciesRecord,
    neighbor: &Neighbor,
    eps: Energy,
    options: &ScenarioOptions,
) -> Result<ChannelResult> {
    let sigma_pr = pr_from_pi(capture, eps, options.extension)?;
    channel_with_pr(capture, neighbor, eps, sigma_pr, options).map_err(|e| with_channel(e, 0, neighbor, eps))
}

fn with_channel(source: Error, index: usize, neighbor: &Neighbor, eps: Energy) -> Error {
    Error::Channel {
        index,
        species: neighbor.species.name.clone(),
        energy_ev: eps.as_ev(),
        source: Box::new(source),
    }
}

/// Incoherent sum over all neighbor groups.
pub fn sigma_icec_multi(scenario: &Scenario, eps: Energy) -> Result<IcecResultRow> {
    let sigma_pr = pr_from_pi(&scenario.capture, eps, scenario.options.extension).map_err(|e| {
        Error::AtEnergy {
            energy_ev: eps.as_ev(),
            source: Box::new(e),
        }
    })?;
    let mut channels = Vec::with_capacity(scenario.neighbors.len());
    let mut total = 0.0;
    for (i, n) in scenario.neighbors.iter().enumerate() {
        let ch = channel_with_pr(&scenario.capture, n, eps, sigma_pr, &scenario.options)
            .map_err(|e| with_channel(e, i + 1, n, eps))?;
        total += group_sigma(n, &ch).atomic();
        channels.push(ch);
    }
    Ok(IcecResultRow {
        eps,
        sigma_pr,
        channels,
        sigma_icec_total: Area::atomic_area(total),
    })
}

/// One row per grid energy, in grid order. Closed channels contribute zero;
/// the first data error aborts the scan.
pub fn scan(scenario: &Scenario) -> Result<Vec<IcecResultRow>> {
    scenario
        .energy_grid
        .iter()
        .map(|&eps| sigma_icec_multi(scenario, eps))
        .collect()
}

/// Contribution of all `count` neighbors of a group.
pub fn group_sigma(neighbor: &Neighbor, channel: &ChannelResult) -> Area {
    Area::atomic_area(neighbor.count as f64 * channel.sigma.atomic())
}

/// Column names of the result table for a scenario with `groups` neighbor
/// groups. `n{i}_sigma_Mb` is the contribution of one neighbor of group i,
/// `n{i}_group_sigma_Mb` that of the whole group.
pub fn result_header(groups: usize) -> Vec<String> {
    let mut cols = vec!["eps_eV".to_string(), "sigma_PR_Mb".to_string()];
    for i in 1..=groups {
        for name in ["eprime_eV", "E_vph_eV", "P", "sigma_Mb", "open", "group_sigma_Mb"] {
            cols.push(format!("n{i}_{name}"));
        }
    }
    cols.push("sigma_ICEC_total_Mb".to_string());
    cols
}

/// Result table as CSV, 9 significant figures.
pub fn results_to_csv(scenario: &Scenario, rows: &[IcecResultRow]) -> String {
    let mut out = result_header(scenario.neighbors.len()).join(",");
    out.push('\n');
    for row in rows {
        let mut fields = vec![format_sig9(row.eps.as_ev()), format_sig9(row.sigma_pr.as_mb())];
        for (ch, n) in row.channels.iter().zip(&scenario.neighbors) {
            fields.push(format_sig9(ch.eprime.as_ev()));
            fields.push(format_sig9(ch.e_vph.as_ev()));
            fields.push(format_sig9(ch.p));
            fields.push(format_sig9(ch.sigma.as_mb()));
            fields.push(if ch.open { "1" } else { "0" }.to_string());
            fields.push(format_sig9(group_sigma(n, ch).as_mb()));
        }
        fields.push(format_sig9(row.sigma_icec_total.as_mb()));
        let _ = writeln!(out, "{}", fields.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{CrossSectionCurve, Parameterization};
    use approx::assert_relative_eq;

    fn flat(binding_ev: f64, sigma_mb: f64, g_initial: u32, g_final: u32) -> SpeciesRecord {
        let curve = CrossSectionCurve::new(
            &[
                (Energy::ev(0.0), Area::megabarn(sigma_mb)),
                (Energy::ev(50.0), Area::megabarn(sigma_mb)),
            ],
            Parameterization::Photoelectron,
            "flat",
        )
        .unwrap();
        SpeciesRecord::new("flat", Energy::ev(binding_ev), g_initial, g_final, curve).unwrap()
    }

    #[test]
    fn thresholds() {
        let t = icec_threshold(Energy::ev(3.313), Energy::ev(3.601)).unwrap();
        assert!((t.as_ev() - 0.288).abs() < 1e-9);
        assert_eq!(icec_threshold(Energy::ev(3.601), Energy::ev(3.313)).unwrap().as_ev(), 0.0);
        assert_eq!(icec_threshold(Energy::ev(14.74), Energy::ev(12.62)).unwrap().as_ev(), 0.0);
        assert!(icec_threshold(Energy::ev(0.0), Energy::ev(1.0)).is_err());
    }

    #[test]
    fn outgoing_energy_conservation() {
        let ea = Energy::ev(3.313);
        let ip = Energy::ev(3.601);
        let t = icec_threshold(ea, ip).unwrap();
        assert_eq!(outgoing_energy(ea, t, ip).unwrap().atomic(), 0.0);
        let e = outgoing_energy(ea, Energy::ev(0.5), ip).unwrap();
        assert!((e.as_ev() - 0.212).abs() < 1e-12);
        assert!(matches!(
            outgoing_energy(ea, Energy::ev(0.2), ip),
            Err(Error::ChannelClosed { .. })
        ));
    }

    #[test]
    fn p_anchor_value() {
        // 30 Mb, 3.6 eV, 1 nm: hand conversion gives 1.2930e4
        let p = p_coefficient(Area::megabarn(30.0), Energy::ev(3.6), Length::nm(1.0)).unwrap();
        assert_relative_eq!(p, 1.2930e4, max_relative = 1e-3);
        assert_eq!(p_coefficient(Area::megabarn(0.0), Energy::ev(3.6), Length::nm(1.0)).unwrap(), 0.0);
        let p2 = p_coefficient(Area::megabarn(30.0), Energy::ev(3.6), Length::nm(2.0)).unwrap();
        assert_relative_eq!(p / p2, 64.0, max_relative = 1e-12);
        assert!(p_coefficient(Area::megabarn(1.0), Energy::ev(0.0), Length::nm(1.0)).is_err());
    }

    #[test]
    fn closed_channel_is_zero() {
        let a = flat(3.313, 10.0, 6, 1);
        let b = Neighbor::new(flat(3.601, 20.0, 1, 6), Length::nm(1.0), 1).unwrap();
        let ch = sigma_icec_single(&a, &b, Energy::ev(0.1), &ScenarioOptions::default()).unwrap();
        assert!(!ch.open);
        assert_eq!(ch.sigma.atomic(), 0.0);
        assert_eq!(ch.p, 0.0);
    }

    #[test]
    fn spin_coefficient_scales_quadratically() {
        let a = flat(3.313, 10.0, 6, 1);
        let b = Neighbor::new(flat(3.0, 20.0, 1, 6), Length::nm(1.0), 1).unwrap();
        let eps = Energy::ev(0.4);
        let base = sigma_icec_single(&a, &b, eps, &ScenarioOptions::default()).unwrap();
        let opts = ScenarioOptions {
            spin_coefficient: 0.5,
            ..Default::default()
        };
        let scaled = sigma_icec_single(&a, &b, eps, &opts).unwrap();
        assert_relative_eq!(scaled.sigma.atomic(), 0.25 * base.sigma.atomic(), max_relative = 1e-15);
        assert_eq!(scaled.p, base.p);
    }

    #[test]
    fn out_of_range_carries_channel_context() {
        let a = flat(3.313, 10.0, 6, 1);
        let short = CrossSectionCurve::new(
            &[
                (Energy::ev(0.0), Area::megabarn(1.0)),
                (Energy::ev(0.1), Area::megabarn(1.0)),
            ],
            Parameterization::Photoelectron,
            "short",
        )
        .unwrap();
        let b_rec = SpeciesRecord::new("B", Energy::ev(3.0), 1, 1, short).unwrap();
        let scen = Scenario::new(
            a,
            vec![Neighbor::new(b_rec, Length::nm(1.0), 1).unwrap()],
            vec![Energy::ev(1.0)],
            ScenarioOptions::default(),
        )
        .unwrap();
        match scan(&scen) {
            Err(Error::Channel { index: 1, ref species, .. }) if species == "B" => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scenario_validation() {
        let a = flat(3.313, 10.0, 6, 1);
        let n = Neighbor::new(flat(3.0, 20.0, 1, 6), Length::nm(1.0), 1).unwrap();
        assert!(Scenario::new(a.clone(), vec![], vec![], ScenarioOptions::default()).is_err());
        assert!(Scenario::new(
            a.clone(),
            vec![n.clone()],
            vec![Energy::ev(0.2), Energy::ev(0.1)],
            ScenarioOptions::default()
        )
        .is_err());
        assert!(Scenario::new(a.clone(), vec![n.clone()], vec![Energy::ev(0.0)], ScenarioOptions::default()).is_err());
        assert!(Neighbor::new(n.species.clone(), Length::nm(1.0), 0).is_err());
        let empty = Scenario::new(a, vec![n], vec![], ScenarioOptions::default()).unwrap();
        assert!(scan(&empty).unwrap().is_empty());
    }

    #[test]
    fn warns_inside_three_radii() {
        let a = flat(14.74, 1.0, 1, 2).with_radius(Some(Length::nm(0.07)));
        let b = flat(12.62, 15.0, 1, 2).with_radius(Some(Length::nm(0.14)));
        let scen = Scenario::new(
            a,
            vec![
                Neighbor::new(b.clone(), Length::angstrom(5.0), 6).unwrap(),
                Neighbor::new(b, Length::nm(1.0), 6).unwrap(),
            ],
            vec![Energy::ev(0.1)],
            ScenarioOptions::default(),
        )
        .unwrap();
        let w = scen.asymptotic_warnings();
        assert_eq!(w.len(), 1);
        assert!(w[0].starts_with("neighbor 1"));
    }

    #[test]
    fn csv_layout() {
        let a = flat(3.313, 10.0, 6, 1);
        let b = flat(3.601, 20.0, 1, 6);
        let scen = Scenario::new(
            a,
            vec![
                Neighbor::new(b.clone(), Length::nm(1.0), 1).unwrap(),
                Neighbor::new(b, Length::nm(2.0), 3).unwrap(),
            ],
            vec![Energy::ev(0.1), Energy::ev(0.5)],
            ScenarioOptions::default(),
        )
        .unwrap();
        let rows = scan(&scen).unwrap();
        let csv = results_to_csv(&scen, &rows);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0].split(',').count(), 2 + 2 * 6 + 1);
        assert!(lines[0].starts_with("eps_eV,sigma_PR_Mb,n1_eprime_eV,n1_E_vph_eV,n1_P,n1_sigma_Mb,n1_open,n1_group_sigma_Mb,n2_"));
        assert!(lines[0].ends_with(",sigma_ICEC_total_Mb"));
        let first: Vec<_> = lines[1].split(',').collect();
        assert_eq!(first[6], "0");
        assert_eq!(first.last().unwrap(), &"0.00000000e0");
        let second: Vec<_> = lines[2].split(',').collect();
        assert_eq!(second[6], "1");
    }
}
