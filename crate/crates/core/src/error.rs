use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad class of a failure, used to pick a process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed scenario or oracle specification file.
    Schema,
    /// Bad physical input: tables, species records, out-of-range lookups.
    Data,
    /// Numerical failure in the dipole oracle (quadrature did not converge).
    Numerics,
    /// The dipole oracle disagrees with the factorized formula.
    Assertion,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown {kind} unit `{tag}`")]
    UnknownUnit { kind: &'static str, tag: String },

    #[error("{quantity} must be {requirement}, got {value}")]
    Domain {
        quantity: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("photorecombination is singular at zero incident energy")]
    SingularWavenumber,

    #[error("{path}: missing `parameterization` in header line")]
    MissingParameterization { path: PathBuf },

    #[error("{path}:{line}: {message}")]
    MalformedTable {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}:{line}: energy {energy} eV does not exceed the previous node {previous} eV")]
    NonMonotoneEnergy {
        path: PathBuf,
        line: usize,
        energy: f64,
        previous: f64,
    },

    #[error("{path}:{line}: negative cross section {sigma} Mb")]
    NegativeSigma {
        path: PathBuf,
        line: usize,
        sigma: f64,
    },

    #[error("{path}: a curve needs at least 2 points, found {found}")]
    TooFewPoints { path: PathBuf, found: usize },

    #[error("curve `{label}`: photon energy {energy_ev} eV lies below the binding energy {binding_ev} eV")]
    BelowBinding {
        label: String,
        energy_ev: f64,
        binding_ev: f64,
    },

    #[error("curve `{label}`: energy {energy_ev} eV outside the admissible interval [{min_ev}, {max_ev}] eV")]
    OutOfRange {
        label: String,
        energy_ev: f64,
        min_ev: f64,
        max_ev: f64,
    },

    #[error("{path}: missing field `{field}`")]
    MissingField { path: PathBuf, field: &'static str },

    #[error("{path}: field `{field}`: {message}")]
    InvalidField {
        path: PathBuf,
        field: String,
        message: String,
    },

    #[error("species `{species}`: curve file {path} cannot be read: {source}")]
    DanglingCurve {
        species: String,
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error("channel closed: incident energy {energy_ev} eV is below the threshold {threshold_ev} eV")]
    ChannelClosed { energy_ev: f64, threshold_ev: f64 },

    #[error("neighbor {index} ({species}) at {energy_ev} eV: {source}")]
    Channel {
        index: usize,
        species: String,
        energy_ev: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("at {energy_ev} eV: {source}")]
    AtEnergy {
        energy_ev: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("{path}:{line}: {message}")]
    Schema {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("quadrature did not converge: estimate {estimate:e}, relative change {achieved:e} exceeds tolerance {tolerance:e}")]
    Convergence {
        estimate: f64,
        achieved: f64,
        tolerance: f64,
    },

    #[error("factorization check `{check}` failed: measured {measured:e}, limit {limit:e}")]
    FactorizationMismatch {
        check: &'static str,
        measured: f64,
        limit: f64,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn domain(quantity: &'static str, requirement: &'static str, value: f64) -> Self {
        Error::Domain {
            quantity,
            requirement,
            value,
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Schema { .. } | Error::UnknownUnit { .. } => ErrorClass::Schema,
            Error::Convergence { .. } => ErrorClass::Numerics,
            Error::FactorizationMismatch { .. } => ErrorClass::Assertion,
            Error::Channel { source, .. } | Error::AtEnergy { source, .. } => source.class(),
            _ => ErrorClass::Data,
        }
    }
}
