//! Scenario and oracle specification files.
//!
//! Both are flat `key=value` text with `#` comments. Scenarios additionally
//! contain repeated neighbor blocks:
//!
//! ```text
//! capture_species = ../species/mg2plus.species
//! neighbor { species = ../species/h2o.species; R_angstrom = 5; count = 6 }
//! neighbor {
//!     species = ../species/h2o.species
//!     R_nm = 1.0
//!     count = 6
//! }
//! grid.start_eV = 0.01
//! grid.stop_eV = 5
//! grid.points = 60
//! grid.spacing = log
//! options.C_S = 1
//! options.wigner_extension = false
//! ```
//!
//! Syntax problems are reported as [`Error::Schema`] with a line number;
//! problems with the referenced data files surface when the scenario is
//! loaded.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::icec::{Neighbor, Scenario, ScenarioOptions};
use crate::oracle::{DipoleModel, FactorizationCheck, QuadratureSpec, TargetAveraging, DIPOLE_DIPOLE};
use crate::tables::{load_species, ThresholdExtension};
use crate::units::{Energy, Length};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start_ev: f64,
    pub stop_ev: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    /// Grid energies with both endpoints hit exactly.
    pub fn energies(&self) -> Vec<Energy> {
        let n = self.points;
        if n == 1 {
            return vec![Energy::ev(self.start_ev)];
        }
        let last = (n - 1) as f64;
        (0..n)
            .map(|i| {
                let t = i as f64 / last;
                let ev = if i == 0 {
                    self.start_ev
                } else if i == n - 1 {
                    self.stop_ev
                } else {
                    match self.spacing {
                        Spacing::Linear => self.start_ev + t * (self.stop_ev - self.start_ev),
                        Spacing::Log => (self.start_ev.ln() + t * (self.stop_ev / self.start_ev).ln()).exp(),
                    }
                };
                Energy::ev(ev)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeighborSpec {
    pub species: PathBuf,
    pub distance: Length,
    pub count: u32,
    pub line: usize,
}

/// A parsed scenario file whose species files have not been read yet.
/// Paths are already resolved against the scenario's directory.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec {
    pub path: PathBuf,
    pub capture_species: PathBuf,
    pub neighbors: Vec<NeighborSpec>,
    pub grid: GridSpec,
    pub options: ScenarioOptions,
}

impl ScenarioSpec {
    /// Reads all species and curve files.
    pub fn load(&self) -> Result<Scenario> {
        let capture = load_species(&self.capture_species)?;
        // identical species files are read once
        let mut cache: BTreeMap<&Path, _> = BTreeMap::new();
        let mut neighbors = Vec::with_capacity(self.neighbors.len());
        for n in &self.neighbors {
            let species = match cache.get(n.species.as_path()) {
                Some(s) => Clone::clone(s),
                None => {
                    let s = load_species(&n.species)?;
                    cache.insert(&n.species, s.clone());
                    s
                }
            };
            neighbors.push(Neighbor::new(species, n.distance, n.count)?);
        }
        Scenario::new(capture, neighbors, self.grid.energies(), self.options)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Open { line: usize, name: String },
    Close { line: usize },
    Statement { line: usize, text: String },
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut buf = String::new();
        let flush = |buf: &mut String, tokens: &mut Vec<Token>| {
            let t = buf.trim();
            if !t.is_empty() {
                tokens.push(Token::Statement {
                    line,
                    text: t.to_string(),
                });
            }
            buf.clear();
        };
        for ch in content.chars() {
            match ch {
                '{' => {
                    tokens.push(Token::Open {
                        line,
                        name: buf.trim().to_string(),
                    });
                    buf.clear();
                }
                '}' => {
                    flush(&mut buf, &mut tokens);
                    tokens.push(Token::Close { line });
                }
                ';' => flush(&mut buf, &mut tokens),
                c => buf.push(c),
            }
        }
        flush(&mut buf, &mut tokens);
    }
    tokens
}

struct Ctx<'a> {
    path: &'a Path,
}

impl Ctx<'_> {
    fn err(&self, line: usize, message: impl Into<String>) -> Error {
        Error::Schema {
            path: self.path.to_path_buf(),
            line,
            message: message.into(),
        }
    }

    fn split<'t>(&self, line: usize, text: &'t str) -> Result<(&'t str, &'t str)> {
        let (k, v) = text
            .split_once('=')
            .ok_or_else(|| self.err(line, format!("expected key=value, found `{text}`")))?;
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() || v.is_empty() {
            return Err(self.err(line, format!("expected key=value, found `{text}`")));
        }
        Ok((k, v))
    }

    fn real(&self, line: usize, key: &str, value: &str) -> Result<f64> {
        value
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| self.err(line, format!("`{key}`: `{value}` is not a finite number")))
    }

    fn positive(&self, line: usize, key: &str, value: &str) -> Result<f64> {
        let x = self.real(line, key, value)?;
        if x <= 0.0 {
            return Err(self.err(line, format!("`{key}` must be positive, got {value}")));
        }
        Ok(x)
    }

    fn integer(&self, line: usize, key: &str, value: &str) -> Result<u32> {
        value
            .parse()
            .map_err(|_| self.err(line, format!("`{key}`: `{value}` is not a non-negative integer")))
    }

    fn boolean(&self, line: usize, key: &str, value: &str) -> Result<bool> {
        match value {
            "true" => Ok(true),
            "false" => Ok(false),
            _ => Err(self.err(line, format!("`{key}` must be true or false, got `{value}`"))),
        }
    }
}

/// Key-value store that rejects duplicates and remembers line numbers.
#[derive(Default)]
struct Fields {
    map: BTreeMap<String, (usize, String)>,
}

impl Fields {
    fn insert(&mut self, ctx: &Ctx, line: usize, key: &str, value: &str) -> Result<()> {
        if let Some((first, _)) = self.map.get(key) {
            return Err(ctx.err(line, format!("duplicate key `{key}` (first set on line {first})")));
        }
        self.map.insert(key.to_string(), (line, value.to_string()));
        Ok(())
    }

    fn take(&mut self, key: &str) -> Option<(usize, String)> {
        self.map.remove(key)
    }

    fn require(&mut self, ctx: &Ctx, key: &str, block_line: usize, block: &str) -> Result<(usize, String)> {
        self.take(key)
            .ok_or_else(|| ctx.err(block_line, format!("missing key `{key}` in {block}")))
    }

    fn reject_rest(&self, ctx: &Ctx) -> Result<()> {
        match self.map.iter().next() {
            Some((k, (line, _))) => Err(ctx.err(*line, format!("unknown key `{k}`"))),
            None => Ok(()),
        }
    }
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(rel)
}

fn parse_neighbor(ctx: &Ctx, open_line: usize, mut fields: Fields) -> Result<NeighborSpec> {
    let block = "neighbor block";
    let (_, species) = fields.require(ctx, "species", open_line, block)?;
    let nm = fields.take("R_nm");
    let angstrom = fields.take("R_angstrom");
    let distance = match (nm, angstrom) {
        (Some((line, v)), None) => Length::nm(ctx.positive(line, "R_nm", &v)?),
        (None, Some((line, v))) => Length::angstrom(ctx.positive(line, "R_angstrom", &v)?),
        (Some(_), Some((line, _))) => return Err(ctx.err(line, "give either R_nm or R_angstrom, not both")),
        (None, None) => return Err(ctx.err(open_line, "missing key `R_nm` or `R_angstrom` in neighbor block")),
    };
    let count = match fields.take("count") {
        Some((line, v)) => {
            let n = ctx.integer(line, "count", &v)?;
            if n == 0 {
                return Err(ctx.err(line, "`count` must be at least 1"));
            }
            n
        }
        None => 1,
    };
    fields.reject_rest(ctx)?;
    Ok(NeighborSpec {
        species: resolve(ctx.path, &species),
        distance,
        count,
        line: open_line,
    })
}

/// Parses scenario text. `path` anchors relative species paths and labels
/// error messages.
pub fn parse_scenario(path: &Path, text: &str) -> Result<ScenarioSpec> {
    let ctx = Ctx { path };
    let mut top = Fields::default();
    let mut neighbors = Vec::new();
    let mut block: Option<(usize, Fields)> = None;
    let mut last_line = 0;

    for token in tokenize(text) {
        match token {
            Token::Open { line, name } => {
                last_line = line;
                if let Some((open, _)) = &block {
                    return Err(ctx.err(line, format!("nested block: the block opened on line {open} is not closed")));
                }
                if name != "neighbor" {
                    return Err(ctx.err(line, format!("unknown block `{name}`, expected `neighbor`")));
                }
                block = Some((line, Fields::default()));
            }
            Token::Close { line } => {
                last_line = line;
                let (open, fields) = block.take().ok_or_else(|| ctx.err(line, "`}` without an open block"))?;
                neighbors.push(parse_neighbor(&ctx, open, fields)?);
            }
            Token::Statement { line, text } => {
                last_line = line;
                let (k, v) = ctx.split(line, &text)?;
                match &mut block {
                    Some((_, fields)) => fields.insert(&ctx, line, k, v)?,
                    None => top.insert(&ctx, line, k, v)?,
                }
            }
        }
    }
    if let Some((open, _)) = block {
        return Err(ctx.err(open, "neighbor block is never closed"));
    }
    let end = last_line.max(1);

    let (_, capture) = top.require(&ctx, "capture_species", end, "scenario")?;
    if neighbors.is_empty() {
        return Err(ctx.err(end, "at least one neighbor block is required"));
    }

    let (l_start, start) = top.require(&ctx, "grid.start_eV", end, "scenario")?;
    let (l_stop, stop) = top.require(&ctx, "grid.stop_eV", end, "scenario")?;
    let (l_points, points) = top.require(&ctx, "grid.points", end, "scenario")?;
    let start_ev = ctx.positive(l_start, "grid.start_eV", &start)?;
    let stop_ev = ctx.positive(l_stop, "grid.stop_eV", &stop)?;
    let points = ctx.integer(l_points, "grid.points", &points)? as usize;
    let spacing = match top.take("grid.spacing") {
        None => Spacing::Linear,
        Some((_, v)) if v == "linear" => Spacing::Linear,
        Some((_, v)) if v == "log" => Spacing::Log,
        Some((line, v)) => return Err(ctx.err(line, format!("`grid.spacing` must be linear or log, got `{v}`"))),
    };
    if points == 0 {
        return Err(ctx.err(l_points, "`grid.points` must be at least 1"));
    }
    if points == 1 && start_ev != stop_ev {
        return Err(ctx.err(l_points, "a single-point grid needs grid.start_eV = grid.stop_eV"));
    }
    if points > 1 && stop_ev <= start_ev {
        return Err(ctx.err(l_stop, "`grid.stop_eV` must exceed `grid.start_eV`"));
    }

    let mut options = ScenarioOptions::default();
    if let Some((line, v)) = top.take("options.C_S") {
        options.spin_coefficient = ctx.real(line, "options.C_S", &v)?;
    }
    if let Some((line, v)) = top.take("options.wigner_extension") {
        if ctx.boolean(line, "options.wigner_extension", &v)? {
            options.extension = ThresholdExtension::Wigner;
        }
    }
    top.reject_rest(&ctx)?;

    Ok(ScenarioSpec {
        path: path.to_path_buf(),
        capture_species: resolve(path, &capture),
        neighbors,
        grid: GridSpec {
            start_ev,
            stop_ev,
            points,
            spacing,
        },
        options,
    })
}

pub fn read_scenario_spec(path: &Path) -> Result<ScenarioSpec> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_scenario(path, &text)
}

/// Parses and loads a scenario file with all of its data.
pub fn load_scenario(path: &Path) -> Result<Scenario> {
    read_scenario_spec(path)?.load()
}

/// Input of the factorization check.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleSpec {
    pub model: DipoleModel,
    pub distances: Vec<Length>,
    pub quadrature: QuadratureSpec,
    pub check: FactorizationCheck,
}

const M_KEYS: [&str; 3] = ["m-1", "m0", "m+1"];

/// Parses an oracle specification:
///
/// ```text
/// d_capture.m0 = 1.0, 0.0      # real, imaginary
/// d_ionize.m+1 = 0.3, -0.2
/// E_vph_eV = 3.9
/// EA_eV = 3.313
/// IP_eV = 3.601
/// R_bohr = 10, 20, 40
/// ```
///
/// Optional: `C_S`, `averaging = isotropic|aligned`, `quadrature.order`,
/// `quadrature.tolerance`. Unlisted m components are zero. `coupling.B0`
/// and `check.prefactor` override the physical constants and exist only to
/// demonstrate that a wrong value is detected.
pub fn parse_oracle_spec(path: &Path, text: &str) -> Result<OracleSpec> {
    let ctx = Ctx { path };
    let mut fields = Fields::default();
    for token in tokenize(text) {
        match token {
            Token::Statement { line, text } => {
                let (k, v) = ctx.split(line, &text)?;
                fields.insert(&ctx, line, k, v)?;
            }
            Token::Open { line, .. } | Token::Close { line } => {
                return Err(ctx.err(line, "blocks are not allowed in an oracle spec"))
            }
        }
    }
    let end = text.lines().count().max(1);

    let complex = |line: usize, key: &str, v: &str| -> Result<Complex64> {
        let parts: Vec<&str> = v.split(',').map(str::trim).collect();
        match parts.as_slice() {
            [re] => Ok(Complex64::new(ctx.real(line, key, re)?, 0.0)),
            [re, im] => Ok(Complex64::new(ctx.real(line, key, re)?, ctx.real(line, key, im)?)),
            _ => Err(ctx.err(line, format!("`{key}` expects `re` or `re, im`"))),
        }
    };
    let mut dipole = |prefix: &str| -> Result<[Complex64; 3]> {
        let mut d = [Complex64::new(0.0, 0.0); 3];
        for (slot, m) in d.iter_mut().zip(M_KEYS) {
            let key = format!("{prefix}.{m}");
            if let Some((line, v)) = fields.take(&key) {
                *slot = complex(line, &key, &v)?;
            }
        }
        Ok(d)
    };
    let d_capture = dipole("d_capture")?;
    let d_ionize = dipole("d_ionize")?;

    let mut energy = |key: &str| -> Result<Energy> {
        let (line, v) = fields.require(&ctx, key, end, "oracle spec")?;
        Ok(Energy::ev(ctx.real(line, key, &v)?))
    };
    let e_vph = energy("E_vph_eV")?;
    let ea = energy("EA_eV")?;
    let ip = energy("IP_eV")?;

    let (r_line, r_list) = fields.require(&ctx, "R_bohr", end, "oracle spec")?;
    let distances = r_list
        .split(',')
        .map(|r| ctx.positive(r_line, "R_bohr", r.trim()).map(Length::bohr))
        .collect::<Result<Vec<_>>>()?;

    let spin = match fields.take("C_S") {
        Some((line, v)) => ctx.real(line, "C_S", &v)?,
        None => 1.0,
    };
    let targets = match fields.take("averaging") {
        None => TargetAveraging::Isotropic,
        Some((_, v)) if v == "isotropic" => TargetAveraging::Isotropic,
        Some((_, v)) if v == "aligned" => TargetAveraging::Aligned,
        Some((line, v)) => return Err(ctx.err(line, format!("`averaging` must be isotropic or aligned, got `{v}`"))),
    };
    let defaults = QuadratureSpec::default();
    let order = match fields.take("quadrature.order") {
        Some((line, v)) => {
            let n = ctx.integer(line, "quadrature.order", &v)? as usize;
            if n < 2 {
                return Err(ctx.err(line, "`quadrature.order` must be at least 2"));
            }
            n
        }
        None => defaults.order,
    };
    let tolerance = match fields.take("quadrature.tolerance") {
        Some((line, v)) => ctx.positive(line, "quadrature.tolerance", &v)?,
        None => defaults.tolerance,
    };
    let mut coupling = DIPOLE_DIPOLE;
    if let Some((line, v)) = fields.take("coupling.B0") {
        coupling[1] = ctx.real(line, "coupling.B0", &v)?;
    }
    let mut check = FactorizationCheck::default();
    if let Some((line, v)) = fields.take("check.prefactor") {
        check.prefactor = ctx.positive(line, "check.prefactor", &v)?;
    }
    fields.reject_rest(&ctx)?;

    let model = DipoleModel::new(d_capture, d_ionize, e_vph, ea, ip, distances[0])?
        .with_spin_coefficient(spin)
        .with_targets(targets)
        .with_coupling(coupling);
    Ok(OracleSpec {
        model,
        distances,
        quadrature: QuadratureSpec::new(order, tolerance)?,
        check,
    })
}

pub fn load_oracle_spec(path: &Path) -> Result<OracleSpec> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_oracle_spec(path, &text)
}
