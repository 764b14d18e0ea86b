//! Physical constants and conversions between laboratory units and Hartree
//! atomic units.
//!
//! All kernels in this crate compute in atomic units (hbar = m_e = e = 1).
//! Quantities carry their unit tag so that conversion happens exactly once,
//! at the boundary where data enters or leaves the library.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// CODATA 2018 values, frozen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Speed of light in atomic units (inverse fine-structure constant).
    pub c_au: f64,
    pub bohr_in_nm: f64,
    pub hartree_in_ev: f64,
    /// One megabarn (1e-18 cm^2) expressed in bohr^2.
    pub mb_in_au_area: f64,
}

pub const C_AU: f64 = 137.035_999_084;
pub const BOHR_IN_NM: f64 = 0.052_917_721_090_3;
pub const HARTREE_IN_EV: f64 = 27.211_386_245_988;
pub const ANGSTROM_IN_NM: f64 = 0.1;

const MB_IN_CM2: f64 = 1.0e-18;
const NM_IN_CM: f64 = 1.0e-7;
const BOHR_IN_CM: f64 = BOHR_IN_NM * NM_IN_CM;

/// Derived from the bohr radius; not an independent literal.
pub const MB_IN_AU_AREA: f64 = MB_IN_CM2 / (BOHR_IN_CM * BOHR_IN_CM);

pub const CODATA_2018: Constants = Constants {
    c_au: C_AU,
    bohr_in_nm: BOHR_IN_NM,
    hartree_in_ev: HARTREE_IN_EV,
    mb_in_au_area: MB_IN_AU_AREA,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnergyUnit {
    ElectronVolt,
    Hartree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AreaUnit {
    Megabarn,
    /// bohr^2
    AtomicArea,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthUnit {
    Nanometer,
    Angstrom,
    Bohr,
}

impl EnergyUnit {
    /// Size of one unit in hartree.
    fn in_atomic(self) -> f64 {
        match self {
            EnergyUnit::ElectronVolt => 1.0 / HARTREE_IN_EV,
            EnergyUnit::Hartree => 1.0,
        }
    }
}

impl AreaUnit {
    fn in_atomic(self) -> f64 {
        match self {
            AreaUnit::Megabarn => MB_IN_AU_AREA,
            AreaUnit::AtomicArea => 1.0,
        }
    }
}

impl LengthUnit {
    fn in_atomic(self) -> f64 {
        match self {
            LengthUnit::Nanometer => 1.0 / BOHR_IN_NM,
            LengthUnit::Angstrom => ANGSTROM_IN_NM / BOHR_IN_NM,
            LengthUnit::Bohr => 1.0,
        }
    }
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "eV" | "ev" => Ok(EnergyUnit::ElectronVolt),
            "hartree" | "Eh" | "au" => Ok(EnergyUnit::Hartree),
            other => Err(Error::UnknownUnit {
                kind: "energy",
                tag: other.to_string(),
            }),
        }
    }
}

impl FromStr for AreaUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Mb" | "mb" => Ok(AreaUnit::Megabarn),
            "bohr2" | "bohr^2" | "au" => Ok(AreaUnit::AtomicArea),
            other => Err(Error::UnknownUnit {
                kind: "area",
                tag: other.to_string(),
            }),
        }
    }
}

impl FromStr for LengthUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "nm" => Ok(LengthUnit::Nanometer),
            "angstrom" | "A" | "Å" => Ok(LengthUnit::Angstrom),
            "bohr" | "au" => Ok(LengthUnit::Bohr),
            other => Err(Error::UnknownUnit {
                kind: "length",
                tag: other.to_string(),
            }),
        }
    }
}

macro_rules! quantity {
    ($(#[$meta:meta])* $name:ident, $unit:ty, $atomic:expr) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq)]
        pub struct $name {
            value: f64,
            unit: $unit,
        }

        impl $name {
            pub fn value(&self) -> f64 {
                self.value
            }

            pub fn unit(&self) -> $unit {
                self.unit
            }

            /// Same quantity expressed in atomic units.
            pub fn to_atomic(self) -> Self {
                self.to_unit($atomic)
            }

            pub fn to_unit(self, unit: $unit) -> Self {
                if unit == self.unit {
                    return self;
                }
                let value = self.value * self.unit.in_atomic() / unit.in_atomic();
                Self { value, unit }
            }

            /// Numeric value in atomic units.
            pub fn atomic(&self) -> f64 {
                self.to_atomic().value
            }

            pub fn in_unit(&self, unit: $unit) -> f64 {
                self.to_unit(unit).value
            }
        }
    };
}

quantity!(
    /// An energy. Finite, any sign.
    Energy,
    EnergyUnit,
    EnergyUnit::Hartree
);
quantity!(
    /// A cross-section area, never negative.
    Area,
    AreaUnit,
    AreaUnit::AtomicArea
);
quantity!(
    /// A distance, strictly positive.
    Length,
    LengthUnit,
    LengthUnit::Bohr
);

impl Energy {
    pub fn new(value: f64, unit: EnergyUnit) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::domain("energy", "finite", value));
        }
        Ok(Energy { value, unit })
    }

    pub fn ev(value: f64) -> Self {
        debug_assert!(value.is_finite());
        Energy {
            value,
            unit: EnergyUnit::ElectronVolt,
        }
    }

    pub fn hartree(value: f64) -> Self {
        debug_assert!(value.is_finite());
        Energy {
            value,
            unit: EnergyUnit::Hartree,
        }
    }

    pub fn as_ev(&self) -> f64 {
        self.in_unit(EnergyUnit::ElectronVolt)
    }
}

impl Area {
    pub fn new(value: f64, unit: AreaUnit) -> Result<Self> {
        if !(value.is_finite() && value >= 0.0) {
            return Err(Error::domain("cross section", "finite and non-negative", value));
        }
        Ok(Area { value, unit })
    }

    pub fn megabarn(value: f64) -> Self {
        debug_assert!(value >= 0.0);
        Area {
            value,
            unit: AreaUnit::Megabarn,
        }
    }

    pub fn atomic_area(value: f64) -> Self {
        debug_assert!(value >= 0.0);
        Area {
            value,
            unit: AreaUnit::AtomicArea,
        }
    }

    pub fn as_mb(&self) -> f64 {
        self.in_unit(AreaUnit::Megabarn)
    }
}

impl Length {
    pub fn new(value: f64, unit: LengthUnit) -> Result<Self> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::domain("distance", "finite and positive", value));
        }
        Ok(Length { value, unit })
    }

    pub fn nm(value: f64) -> Self {
        debug_assert!(value > 0.0);
        Length {
            value,
            unit: LengthUnit::Nanometer,
        }
    }

    pub fn angstrom(value: f64) -> Self {
        debug_assert!(value > 0.0);
        Length {
            value,
            unit: LengthUnit::Angstrom,
        }
    }

    pub fn bohr(value: f64) -> Self {
        debug_assert!(value > 0.0);
        Length {
            value,
            unit: LengthUnit::Bohr,
        }
    }

    pub fn as_nm(&self) -> f64 {
        self.in_unit(LengthUnit::Nanometer)
    }
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergyUnit::ElectronVolt => "eV",
            EnergyUnit::Hartree => "hartree",
        })
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value, self.unit)
    }
}

/// Electron wavenumber k = sqrt(2 eps), atomic units.
pub fn electron_wavenumber(eps: Energy) -> Result<f64> {
    let e = eps.atomic();
    if e < 0.0 {
        return Err(Error::domain("electron energy", "non-negative", eps.value()));
    }
    Ok((2.0 * e).sqrt())
}

/// Photon wavenumber k_ph = E / c, atomic units.
pub fn photon_wavenumber(energy: Energy) -> Result<f64> {
    let e = energy.atomic();
    if e <= 0.0 {
        return Err(Error::domain("photon energy", "positive", energy.value()));
    }
    Ok(e / C_AU)
}
