//! Tabulated photoionization / photodetachment cross sections and species
//! metadata.
//!
//! Curve files are small CSV tables:
//!
//! ```text
//! # parameterization=photon, units=eV,Mb, l=0
//! # source: free text describing where the numbers come from
//! 3.70,1.52
//! 3.80,3.10
//! ```
//!
//! Optional header keys are `l` (partial wave of the outgoing electron,
//! used by the threshold extension), `interpolation=linear|loglog` and
//! `kind=PI|PR`.
//!
//! Species files are flat `key=value` text with keys `name`,
//! `binding_energy_eV`, `g_initial`, `g_final`, `curve` (path relative to the
//! species file) and optionally `radius_nm`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::units::{Area, AreaUnit, Energy, EnergyUnit, Length};

/// What the energy column of a curve measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameterization {
    /// Photon energy; the threshold sits at the binding energy.
    Photon,
    /// Kinetic energy of the photoelectron; the threshold sits at zero.
    Photoelectron,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Interpolation {
    #[default]
    Linear,
    LogLog,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CurveKind {
    /// Photoionization or photodetachment.
    #[default]
    Photoionization,
    Photorecombination,
}

/// How to treat photoelectron energies below the first table node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThresholdExtension {
    #[default]
    Disabled,
    /// sigma(e) = sigma(e_min) (e / e_min)^(l + 1/2), using the curve's `l`.
    Wigner,
}

impl FromStr for Parameterization {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "photon" => Ok(Parameterization::Photon),
            "photoelectron" => Ok(Parameterization::Photoelectron),
            other => Err(format!("unknown parameterization `{other}`")),
        }
    }
}

impl Parameterization {
    fn as_str(self) -> &'static str {
        match self {
            Parameterization::Photon => "photon",
            Parameterization::Photoelectron => "photoelectron",
        }
    }
}

/// A validated cross-section table. Energies are held in hartree and
/// cross sections in bohr^2.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossSectionCurve {
    energies: Vec<f64>,
    sigmas: Vec<f64>,
    parameterization: Parameterization,
    interpolation: Interpolation,
    partial_wave: Option<u32>,
    kind: CurveKind,
    source_label: String,
}

impl CrossSectionCurve {
    /// Builds a curve from `(energy, sigma)` pairs, enforcing the table
    /// invariants.
    pub fn new(
        points: &[(Energy, Area)],
        parameterization: Parameterization,
        source_label: impl Into<String>,
    ) -> Result<Self> {
        let label = source_label.into();
        let path = PathBuf::from(&label);
        if points.len() < 2 {
            return Err(Error::TooFewPoints {
                path,
                found: points.len(),
            });
        }
        let mut energies = Vec::with_capacity(points.len());
        let mut sigmas = Vec::with_capacity(points.len());
        for (i, (e, s)) in points.iter().enumerate() {
            let previous = i.checked_sub(1).map(|j| points[j].0.as_ev());
            check_node(&path, i + 1, e.as_ev(), s.as_mb(), previous)?;
            energies.push(e.atomic());
            sigmas.push(s.atomic());
        }
        Ok(CrossSectionCurve {
            energies,
            sigmas,
            parameterization,
            interpolation: Interpolation::Linear,
            partial_wave: None,
            kind: CurveKind::Photoionization,
            source_label: label,
        })
    }

    pub fn with_partial_wave(mut self, l: Option<u32>) -> Self {
        self.partial_wave = l;
        self
    }

    pub fn with_interpolation(mut self, interpolation: Interpolation) -> Self {
        self.interpolation = interpolation;
        self
    }

    pub fn with_kind(mut self, kind: CurveKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = (Energy, Area)> + '_ {
        self.energies
            .iter()
            .zip(&self.sigmas)
            .map(|(&e, &s)| (Energy::hartree(e), Area::atomic_area(s)))
    }

    pub fn parameterization(&self) -> Parameterization {
        self.parameterization
    }

    pub fn interpolation(&self) -> Interpolation {
        self.interpolation
    }

    pub fn partial_wave(&self) -> Option<u32> {
        self.partial_wave
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn min_energy(&self) -> Energy {
        Energy::hartree(self.energies[0])
    }

    pub fn max_energy(&self) -> Energy {
        Energy::hartree(*self.energies.last().unwrap())
    }

    /// Re-indexes a photon-energy curve by photoelectron energy,
    /// `eps' = E - binding`. Photoelectron curves are returned unchanged.
    pub fn to_photoelectron(&self, binding: Energy) -> Result<Self> {
        if self.parameterization == Parameterization::Photoelectron {
            return Ok(self.clone());
        }
        let shift = binding.atomic();
        let mut out = self.clone();
        for e in out.energies.iter_mut() {
            let eps = *e - shift;
            // allow round-off when the first node sits exactly on threshold
            if eps < -1e-12 * shift.abs().max(1.0) {
                return Err(Error::BelowBinding {
                    label: self.source_label.clone(),
                    energy_ev: Energy::hartree(*e).as_ev(),
                    binding_ev: binding.as_ev(),
                });
            }
            *e = eps.max(0.0);
        }
        out.parameterization = Parameterization::Photoelectron;
        Ok(out)
    }

    /// Cross section at `energy`, measured on the curve's own energy axis.
    ///
    /// Linear (or log-log, per curve) interpolation between nodes, exact at
    /// the nodes. Below the first node the Wigner extension applies only
    /// when requested, the curve is photoelectron-parameterized and it
    /// declares a partial wave.
    pub fn interpolate(&self, energy: Energy, extension: ThresholdExtension) -> Result<Area> {
        let e = energy.atomic();
        let (lo, hi) = (self.energies[0], *self.energies.last().unwrap());

        if e >= lo && e <= hi {
            return Ok(Area::atomic_area(self.interpolate_inside(e)));
        }
        if e < lo && e >= 0.0 && extension == ThresholdExtension::Wigner {
            if let (Some(l), Parameterization::Photoelectron) =
                (self.partial_wave, self.parameterization)
            {
                let exponent = l as f64 + 0.5;
                return Ok(Area::atomic_area(self.sigmas[0] * (e / lo).powf(exponent)));
            }
        }
        let min = if extension == ThresholdExtension::Wigner
            && self.partial_wave.is_some()
            && self.parameterization == Parameterization::Photoelectron
        {
            0.0
        } else {
            lo
        };
        Err(Error::OutOfRange {
            label: self.source_label.clone(),
            energy_ev: energy.as_ev(),
            min_ev: Energy::hartree(min).as_ev(),
            max_ev: Energy::hartree(hi).as_ev(),
        })
    }

    fn interpolate_inside(&self, e: f64) -> f64 {
        let i = self.energies.partition_point(|&x| x < e);
        if i < self.energies.len() && self.energies[i] == e {
            return self.sigmas[i];
        }
        let (e1, e2) = (self.energies[i - 1], self.energies[i]);
        let (s1, s2) = (self.sigmas[i - 1], self.sigmas[i]);
        match self.interpolation {
            Interpolation::LogLog if e1 > 0.0 && s1 > 0.0 && s2 > 0.0 => {
                let slope = (s2 / s1).ln() / (e2 / e1).ln();
                s1 * (e / e1).powf(slope)
            }
            _ => s1 + (s2 - s1) * (e - e1) / (e2 - e1),
        }
    }

    /// Serializes in the curve CSV format, eV and Mb at 9 significant figures.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = write!(
            out,
            "# parameterization={}, units=eV,Mb",
            self.parameterization.as_str()
        );
        if let Some(l) = self.partial_wave {
            let _ = write!(out, ", l={l}");
        }
        if self.interpolation == Interpolation::LogLog {
            out.push_str(", interpolation=loglog");
        }
        if self.kind == CurveKind::Photorecombination {
            out.push_str(", kind=PR");
        }
        out.push('\n');
        if !self.source_label.is_empty() {
            let _ = writeln!(out, "# source: {}", self.source_label);
        }
        for (e, s) in self.points() {
            let _ = writeln!(out, "{},{}", format_sig9(e.as_ev()), format_sig9(s.as_mb()));
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_csv()).map_err(|e| Error::io(path, e))
    }
}

/// Nine significant figures in scientific notation.
pub fn format_sig9(x: f64) -> String {
    format!("{x:.8e}")
}

fn check_node(path: &Path, line: usize, e_ev: f64, s_mb: f64, previous_ev: Option<f64>) -> Result<()> {
    if !e_ev.is_finite() || !s_mb.is_finite() {
        return Err(Error::MalformedTable {
            path: path.to_path_buf(),
            line,
            message: "non-finite value".into(),
        });
    }
    if s_mb < 0.0 {
        return Err(Error::NegativeSigma {
            path: path.to_path_buf(),
            line,
            sigma: s_mb,
        });
    }
    if let Some(prev) = previous_ev {
        if e_ev <= prev {
            return Err(Error::NonMonotoneEnergy {
                path: path.to_path_buf(),
                line,
                energy: e_ev,
                previous: prev,
            });
        }
    }
    Ok(())
}

struct Header {
    parameterization: Parameterization,
    energy_unit: EnergyUnit,
    area_unit: AreaUnit,
    partial_wave: Option<u32>,
    interpolation: Interpolation,
    kind: CurveKind,
}

fn parse_header(path: &Path, line_no: usize, line: &str) -> Result<Header> {
    let malformed = |message: String| Error::MalformedTable {
        path: path.to_path_buf(),
        line: line_no,
        message,
    };
    let body = line.trim_start_matches('#').trim();
    // `units=eV,Mb` contains a comma, so bare tokens continue the previous value.
    let mut fields: Vec<(String, String)> = Vec::new();
    for token in body.split(',') {
        let token = token.trim();
        match token.split_once('=') {
            Some((k, v)) => fields.push((k.trim().to_string(), v.trim().to_string())),
            None => match fields.last_mut() {
                Some((_, v)) => {
                    v.push(',');
                    v.push_str(token);
                }
                None => return Err(malformed(format!("unexpected header token `{token}`"))),
            },
        }
    }

    let mut parameterization = None;
    let mut energy_unit = EnergyUnit::ElectronVolt;
    let mut area_unit = AreaUnit::Megabarn;
    let mut partial_wave = None;
    let mut interpolation = Interpolation::Linear;
    let mut kind = CurveKind::Photoionization;
    for (key, value) in fields {
        match key.as_str() {
            "parameterization" => {
                parameterization = Some(value.parse().map_err(malformed)?);
            }
            "units" => {
                let (e, s) = value
                    .split_once(',')
                    .ok_or_else(|| malformed(format!("units must be `<energy>,<area>`, got `{value}`")))?;
                energy_unit = e.parse()?;
                area_unit = s.parse()?;
            }
            "l" => {
                partial_wave = Some(
                    value
                        .parse()
                        .map_err(|_| malformed(format!("partial wave `{value}` is not a non-negative integer")))?,
                );
            }
            "interpolation" => {
                interpolation = match value.as_str() {
                    "linear" => Interpolation::Linear,
                    "loglog" => Interpolation::LogLog,
                    other => return Err(malformed(format!("unknown interpolation `{other}`"))),
                };
            }
            "kind" => {
                kind = match value.as_str() {
                    "PI" => CurveKind::Photoionization,
                    "PR" => CurveKind::Photorecombination,
                    other => return Err(malformed(format!("unknown curve kind `{other}`"))),
                };
            }
            other => return Err(malformed(format!("unknown header key `{other}`"))),
        }
    }
    let parameterization = parameterization.ok_or_else(|| Error::MissingParameterization {
        path: path.to_path_buf(),
    })?;
    Ok(Header {
        parameterization,
        energy_unit,
        area_unit,
        partial_wave,
        interpolation,
        kind,
    })
}

/// Parses curve CSV text. `path` is only used in error messages and as the
/// fallback source label.
pub fn parse_curve(path: &Path, text: &str) -> Result<CrossSectionCurve> {
    let mut header = None;
    let mut label = None;
    let mut energies = Vec::new();
    let mut sigmas = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if header.is_none() {
                if !line.contains("parameterization") {
                    return Err(Error::MissingParameterization {
                        path: path.to_path_buf(),
                    });
                }
                header = Some(parse_header(path, line_no, line)?);
            } else if let Some(rest) = line.trim_start_matches('#').trim().strip_prefix("source:") {
                label = Some(rest.trim().to_string());
            }
            continue;
        }
        let Some(h) = header.as_ref() else {
            return Err(Error::MissingParameterization {
                path: path.to_path_buf(),
            });
        };
        let (e, s) = line.split_once(',').ok_or_else(|| Error::MalformedTable {
            path: path.to_path_buf(),
            line: line_no,
            message: format!("expected `energy,sigma`, got `{line}`"),
        })?;
        let parse = |v: &str, what: &str| {
            v.trim().parse::<f64>().map_err(|_| Error::MalformedTable {
                path: path.to_path_buf(),
                line: line_no,
                message: format!("{what} `{}` is not a number", v.trim()),
            })
        };
        let e = Energy::new(parse(e, "energy")?, h.energy_unit)?;
        let s_raw = parse(s, "sigma")?;
        check_node(
            path,
            line_no,
            e.as_ev(),
            s_raw,
            energies.last().map(|&p: &f64| Energy::hartree(p).as_ev()),
        )?;
        let s = Area::new(s_raw, h.area_unit)?;
        energies.push(e.atomic());
        sigmas.push(s.atomic());
    }

    let h = header.ok_or_else(|| Error::MissingParameterization {
        path: path.to_path_buf(),
    })?;
    if energies.len() < 2 {
        return Err(Error::TooFewPoints {
            path: path.to_path_buf(),
            found: energies.len(),
        });
    }
    Ok(CrossSectionCurve {
        energies,
        sigmas,
        parameterization: h.parameterization,
        interpolation: h.interpolation,
        partial_wave: h.partial_wave,
        kind: h.kind,
        source_label: label.unwrap_or_else(|| path.display().to_string()),
    })
}

pub fn load_curve(path: &Path) -> Result<CrossSectionCurve> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_curve(path, &text)
}

/// A capture center or a neighbor.
///
/// For a capture center A the binding energy is its electron affinity and
/// the statistical weights are g(A) (`g_initial`) and g(A^-) (`g_final`).
/// For a neighbor B it is the ionization potential. The curve is always
/// held on the photoelectron-energy axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpeciesRecord {
    pub name: String,
    pub binding_energy: Energy,
    pub g_initial: u32,
    pub g_final: u32,
    pub curve: CrossSectionCurve,
    /// Nominal size, used only to flag distances where the asymptotic
    /// formula is doubtful.
    pub radius: Option<Length>,
}

impl SpeciesRecord {
    pub fn new(
        name: impl Into<String>,
        binding_energy: Energy,
        g_initial: u32,
        g_final: u32,
        curve: CrossSectionCurve,
    ) -> Result<Self> {
        let name = name.into();
        if !(binding_energy.atomic() > 0.0) {
            return Err(Error::domain("binding energy", "positive", binding_energy.value()));
        }
        if g_initial == 0 || g_final == 0 {
            return Err(Error::domain(
                "statistical weight",
                "at least 1",
                g_initial.min(g_final) as f64,
            ));
        }
        let curve = curve.to_photoelectron(binding_energy)?;
        Ok(SpeciesRecord {
            name,
            binding_energy,
            g_initial,
            g_final,
            curve,
            radius: None,
        })
    }

    pub fn with_radius(mut self, radius: Option<Length>) -> Self {
        self.radius = radius;
        self
    }
}

/// Reads a flat `key=value` file, skipping blank lines and `#` comments.
pub(crate) fn read_key_values(path: &Path, text: &str) -> Result<BTreeMap<String, (usize, String)>> {
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::InvalidField {
            path: path.to_path_buf(),
            field: line.to_string(),
            message: format!("line {}: expected key=value", idx + 1),
        })?;
        map.insert(k.trim().to_string(), (idx + 1, v.trim().to_string()));
    }
    Ok(map)
}

pub fn load_species(path: &Path) -> Result<SpeciesRecord> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut fields = read_key_values(path, &text)?;

    let mut take = |field: &'static str| {
        fields
            .remove(field)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::MissingField {
                path: path.to_path_buf(),
                field,
            })
    };
    let name = take("name")?;
    let binding = take("binding_energy_eV")?;
    let g_initial = take("g_initial")?;
    let g_final = take("g_final")?;
    let curve_ref = take("curve")?;
    let radius = fields.remove("radius_nm").map(|(_, v)| v);
    if let Some(key) = fields.keys().next() {
        return Err(Error::InvalidField {
            path: path.to_path_buf(),
            field: key.clone(),
            message: "unknown key".into(),
        });
    }

    let invalid = |field: &str, value: &str, what: &str| Error::InvalidField {
        path: path.to_path_buf(),
        field: field.to_string(),
        message: format!("`{value}` is not {what}"),
    };
    let binding_ev: f64 = binding
        .parse()
        .map_err(|_| invalid("binding_energy_eV", &binding, "a number"))?;
    let g_initial: u32 = g_initial
        .parse()
        .map_err(|_| invalid("g_initial", &g_initial, "a positive integer"))?;
    let g_final: u32 = g_final
        .parse()
        .map_err(|_| invalid("g_final", &g_final, "a positive integer"))?;
    let radius = match radius {
        Some(r) => {
            let nm: f64 = r.parse().map_err(|_| invalid("radius_nm", &r, "a number"))?;
            Some(Length::new(nm, crate::units::LengthUnit::Nanometer)?)
        }
        None => None,
    };

    let curve_path = path.parent().unwrap_or(Path::new(".")).join(&curve_ref);
    let curve = load_curve(&curve_path).map_err(|source| Error::DanglingCurve {
        species: name.clone(),
        path: curve_path.clone(),
        source: Box::new(source),
    })?;
    let binding = Energy::new(binding_ev, EnergyUnit::ElectronVolt)?;
    Ok(SpeciesRecord::new(name, binding, g_initial, g_final, curve)?.with_radius(radius))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn curve(text: &str) -> Result<CrossSectionCurve> {
        parse_curve(Path::new("test.csv"), text)
    }

    #[test]
    fn parses_well_formed_table() {
        let c = curve("# parameterization=photoelectron, units=eV,Mb, l=0\n# source: unit test\n0.1,1.0\n0.2,2.0\n0.4,3.0\n").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.partial_wave(), Some(0));
        assert_eq!(c.source_label(), "unit test");
        assert_eq!(c.parameterization(), Parameterization::Photoelectron);
    }

    #[test]
    fn descending_energy_names_the_row() {
        let err = curve("# parameterization=photon, units=eV,Mb\n1.0,1.0\n2.0,1.0\n1.5,1.0\n").unwrap_err();
        assert!(matches!(err, Error::NonMonotoneEnergy { line: 4, .. }), "{err}");
    }

    #[test]
    fn negative_sigma_rejected() {
        let err = curve("# parameterization=photon, units=eV,Mb\n1.0,1.0\n2.0,-1\n").unwrap_err();
        assert!(matches!(err, Error::NegativeSigma { line: 3, .. }), "{err}");
    }

    #[test]
    fn missing_parameterization_rejected() {
        let err = curve("# units=eV,Mb\n1.0,1.0\n2.0,1.0\n").unwrap_err();
        assert!(matches!(err, Error::MissingParameterization { .. }));
        let err = curve("1.0,1.0\n2.0,1.0\n").unwrap_err();
        assert!(matches!(err, Error::MissingParameterization { .. }));
    }

    #[test]
    fn single_row_rejected() {
        let err = curve("# parameterization=photon, units=eV,Mb\n1.0,1.0\n").unwrap_err();
        assert!(matches!(err, Error::TooFewPoints { found: 1, .. }));
    }

    #[test]
    fn interpolation_nodes_and_midpoints() {
        let c = curve("# parameterization=photoelectron, units=eV,Mb\n0.1,1.0\n0.3,2.0\n0.5,7.0\n").unwrap();
        let at = |e: f64| c.interpolate(Energy::ev(e), ThresholdExtension::Disabled).unwrap().as_mb();
        assert_relative_eq!(at(0.3), 2.0, max_relative = 1e-14);
        assert_relative_eq!(at(0.2), 1.5, max_relative = 1e-12);
        assert_relative_eq!(at(0.4), 4.5, max_relative = 1e-12);
        match c.interpolate(Energy::ev(0.6), ThresholdExtension::Disabled) {
            Err(Error::OutOfRange { min_ev, max_ev, .. }) => {
                assert_relative_eq!(min_ev, 0.1, max_relative = 1e-12);
                assert_relative_eq!(max_ev, 0.5, max_relative = 1e-12);
            }
            other => panic!("expected out-of-range, got {other:?}"),
        }
    }

    #[test]
    fn wigner_extension_s_wave() {
        let c = curve("# parameterization=photoelectron, units=eV,Mb, l=0\n0.04,2.0\n0.5,7.0\n").unwrap();
        assert!(c.interpolate(Energy::ev(0.01), ThresholdExtension::Disabled).is_err());
        let s = c.interpolate(Energy::ev(0.01), ThresholdExtension::Wigner).unwrap().as_mb();
        // sigma ~ k^(2l+1) = k for l = 0, i.e. sqrt(eps / eps_min)
        assert_relative_eq!(s, 2.0 * (0.01f64 / 0.04).sqrt(), max_relative = 1e-12);
        assert_eq!(c.interpolate(Energy::ev(0.0), ThresholdExtension::Wigner).unwrap().as_mb(), 0.0);

        let no_l = curve("# parameterization=photoelectron, units=eV,Mb\n0.04,2.0\n0.5,7.0\n").unwrap();
        assert!(no_l.interpolate(Energy::ev(0.01), ThresholdExtension::Wigner).is_err());
    }

    #[test]
    fn loglog_interpolation_follows_power_law() {
        let c = curve("# parameterization=photoelectron, units=eV,Mb, interpolation=loglog\n1.0,1.0\n4.0,16.0\n")
            .unwrap();
        let s = c.interpolate(Energy::ev(2.0), ThresholdExtension::Disabled).unwrap().as_mb();
        assert_relative_eq!(s, 4.0, max_relative = 1e-12);
    }

    #[test]
    fn photon_curve_shifts_by_binding() {
        let c = curve("# parameterization=photon, units=eV,Mb\n3.601,0.0\n4.0,10.0\n").unwrap();
        let shifted = c.to_photoelectron(Energy::ev(3.601)).unwrap();
        assert_eq!(shifted.parameterization(), Parameterization::Photoelectron);
        assert_eq!(shifted.min_energy().atomic(), 0.0);
        assert_relative_eq!(shifted.max_energy().as_ev(), 0.399, max_relative = 1e-10);
        assert!(matches!(
            c.to_photoelectron(Energy::ev(3.7)),
            Err(Error::BelowBinding { .. })
        ));
    }

    #[test]
    fn serialization_round_trips() {
        let c = curve("# parameterization=photon, units=eV,Mb, l=1, kind=PR\n# source: demo, with comma\n1.23456789012,0.5\n2.5,1e-4\n").unwrap();
        let text = c.to_csv();
        let back = curve(&text).unwrap();
        assert_eq!(back.to_csv(), text);
        assert_eq!(back.kind(), CurveKind::Photorecombination);
        assert_eq!(back.source_label(), "demo, with comma");
    }
}
