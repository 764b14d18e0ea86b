//! Cross sections for interatomic Coulombic electron capture (ICEC).
//!
//! An electron captured by a species A can hand its excess energy to a
//! neighbor B and ionize it instead of emitting a photon. At large A-B
//! distances the cross section factorizes into the photorecombination cross
//! section of A and the photoionization cross section of B. This crate
//! evaluates that factorized form from tabulated data and checks it against
//! a direct dipole-dipole scattering calculation.

pub mod balance;
pub mod cli;
pub mod error;
pub mod icec;
pub mod oracle;
pub mod scenario;
pub mod tables;
pub mod units;

pub use error::{Error, ErrorClass, Result};
