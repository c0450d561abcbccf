use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Polarization component of the emitted power.
///
/// The numeric labels follow the usual synchrotron convention:
/// 0 total, +1/-1 right/left circular, 2 sigma-linear, 3 pi-linear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PolarizationLabel {
    Total,
    Right,
    Left,
    Sigma,
    Pi,
}

impl PolarizationLabel {
    pub const ALL: [PolarizationLabel; 5] = [
        PolarizationLabel::Total,
        PolarizationLabel::Right,
        PolarizationLabel::Left,
        PolarizationLabel::Sigma,
        PolarizationLabel::Pi,
    ];

    pub fn from_index(s: i32) -> Result<Self> {
        match s {
            0 => Ok(PolarizationLabel::Total),
            1 => Ok(PolarizationLabel::Right),
            -1 => Ok(PolarizationLabel::Left),
            2 => Ok(PolarizationLabel::Sigma),
            3 => Ok(PolarizationLabel::Pi),
            other => Err(domain(format!(
                "polarization label must be one of 0, 1, -1, 2, 3; got {other}"
            ))),
        }
    }

    pub fn index(self) -> i32 {
        match self {
            PolarizationLabel::Total => 0,
            PolarizationLabel::Right => 1,
            PolarizationLabel::Left => -1,
            PolarizationLabel::Sigma => 2,
            PolarizationLabel::Pi => 3,
        }
    }

    /// Helicity `g` for the circular components.
    pub fn helicity(self) -> Option<f64> {
        match self {
            PolarizationLabel::Right => Some(1.0),
            PolarizationLabel::Left => Some(-1.0),
            _ => None,
        }
    }

    /// The label whose upper-half-plane power equals this label's
    /// lower-half-plane power (circular components swap, others stay).
    pub fn mirrored(self) -> Self {
        match self {
            PolarizationLabel::Right => PolarizationLabel::Left,
            PolarizationLabel::Left => PolarizationLabel::Right,
            other => other,
        }
    }
}

impl fmt::Display for PolarizationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

impl FromStr for PolarizationLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "total" => Ok(PolarizationLabel::Total),
            "right" => Ok(PolarizationLabel::Right),
            "left" => Ok(PolarizationLabel::Left),
            "sigma" => Ok(PolarizationLabel::Sigma),
            "pi" => Ok(PolarizationLabel::Pi),
            t => t
                .trim_start_matches('+')
                .parse::<i32>()
                .map_err(|_| domain(format!("unrecognised polarization label {s:?}")))
                .and_then(PolarizationLabel::from_index),
        }
    }
}

/// Upper or lower half of the sphere, split by the orbit plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPlane {
    /// 0 <= theta <= pi/2
    Upper,
    /// pi/2 <= theta <= pi
    Lower,
}
