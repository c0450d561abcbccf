//! Energy, speed and field strength of a transverse Landau level, and the
//! frequencies of the photons it can emit.
//!
//! Frequencies are in units of `m0 c^2 / hbar`, fields in units of the
//! critical field `H0 = m0^2 c^3 / (|e| hbar)`. Only negatively charged
//! particles without longitudinal motion are described.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_beta, check_theta, domain, Result};

/// Transverse spin orientation of an electron in its initial state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Spin {
    /// zeta = +1, spin along the field.
    Parallel,
    /// zeta = -1, spin against the field.
    Antiparallel,
}

impl Spin {
    pub fn from_zeta(zeta: i32) -> Result<Spin> {
        match zeta {
            1 => Ok(Spin::Parallel),
            -1 => Ok(Spin::Antiparallel),
            z => Err(domain(format!(
                "spin quantum number must be +1 or -1, got {z}"
            ))),
        }
    }

    pub fn zeta(self) -> i32 {
        match self {
            Spin::Parallel => 1,
            Spin::Antiparallel => -1,
        }
    }

    pub fn flipped(self) -> Spin {
        match self {
            Spin::Parallel => Spin::Antiparallel,
            Spin::Antiparallel => Spin::Parallel,
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.zeta())
    }
}

/// The n=1 -> n'=0 transition of an electron. The final spin is always
/// antiparallel, so a parallel initial spin must flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinChannel {
    pub initial: Spin,
    pub flip: bool,
}

impl SpinChannel {
    pub const FINAL: Spin = Spin::Antiparallel;

    pub fn from_initial(initial: Spin) -> Self {
        SpinChannel {
            initial,
            flip: initial != Self::FINAL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParticleKind {
    Boson,
    Electron,
}

impl fmt::Display for ParticleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParticleKind::Boson => "boson",
            ParticleKind::Electron => "electron",
        })
    }
}

/// A spin-0 particle, or a spin-1/2 particle with a definite transverse spin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParticleSpec {
    Boson,
    Electron(Spin),
}

impl ParticleSpec {
    pub fn kind(self) -> ParticleKind {
        match self {
            ParticleSpec::Boson => ParticleKind::Boson,
            ParticleSpec::Electron(_) => ParticleKind::Electron,
        }
    }

    pub fn spin(self) -> Option<Spin> {
        match self {
            ParticleSpec::Boson => None,
            ParticleSpec::Electron(s) => Some(s),
        }
    }

    /// Coefficient `c` in `gamma^2 = 1 + c B`.
    fn field_coefficient(self, level: u32) -> f64 {
        let n = f64::from(level);
        match self {
            ParticleSpec::Boson => 2.0 * n + 1.0,
            ParticleSpec::Electron(_) => 2.0 * n,
        }
    }

    /// Effective level `n_bar` entering the frequency formula.
    pub fn effective_level(self, level: u32) -> f64 {
        let n = f64::from(level);
        match self {
            ParticleSpec::Boson => n + 0.5,
            ParticleSpec::Electron(_) => n,
        }
    }
}

/// A mutually consistent (beta, gamma, B, n) tuple.
///
/// `beta = 1` is representable, with `gamma` and `field` infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KinematicState {
    pub beta: f64,
    pub gamma: f64,
    pub field: f64,
    pub level: u32,
}

impl KinematicState {
    /// `1 - beta^2`, evaluated from gamma when that is more accurate.
    pub fn one_minus_beta2(&self) -> f64 {
        if self.gamma.is_infinite() {
            0.0
        } else {
            1.0 / (self.gamma * self.gamma)
        }
    }
}

/// Emitted harmonic and emission angle measured from the field direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonRequest {
    pub harmonic: u32,
    pub theta: f64,
}

impl PhotonRequest {
    pub fn new(harmonic: u32, theta: f64) -> Result<Self> {
        if harmonic == 0 {
            return Err(domain("harmonic number must be at least 1"));
        }
        check_theta(theta)?;
        Ok(PhotonRequest { harmonic, theta })
    }
}

pub fn state_from_field(spec: ParticleSpec, level: u32, field: f64) -> Result<KinematicState> {
    if !field.is_finite() || field < 0.0 {
        return Err(domain(format!(
            "field B = {field} must be finite and non-negative"
        )));
    }
    let cb = spec.field_coefficient(level) * field;
    let gamma = (1.0 + cb).sqrt();
    let beta = (cb / (1.0 + cb)).sqrt();
    Ok(KinematicState {
        beta,
        gamma,
        field,
        level,
    })
}

pub fn state_from_beta(spec: ParticleSpec, level: u32, beta: f64) -> Result<KinematicState> {
    check_beta(beta)?;
    let c = spec.field_coefficient(level);
    if c == 0.0 && beta > 0.0 {
        return Err(domain(format!(
            "an electron at level 0 is at rest for every field; beta = {beta} is unreachable"
        )));
    }
    if beta == 1.0 {
        return Ok(KinematicState {
            beta,
            gamma: f64::INFINITY,
            field: f64::INFINITY,
            level,
        });
    }
    let b2 = beta * beta;
    let one_minus = (1.0 - beta) * (1.0 + beta);
    let field = if c == 0.0 { 0.0 } else { b2 / (c * one_minus) };
    Ok(KinematicState {
        beta,
        gamma: one_minus.sqrt().recip(),
        field,
        level,
    })
}

/// Lorentz factor for a given speed (infinite at beta = 1).
pub fn gamma_from_beta(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(((1.0 - beta) * (1.0 + beta)).sqrt().recip())
}

pub fn beta_from_gamma(gamma: f64) -> Result<f64> {
    if gamma.is_nan() || gamma < 1.0 {
        return Err(domain(format!("gamma = {gamma} must be at least 1")));
    }
    Ok((1.0 - 1.0 / (gamma * gamma)).sqrt())
}

/// Photon energy `hbar omega / (m0 c^2)` for harmonic `nu` at angle `theta`.
pub fn photon_frequency(
    spec: ParticleSpec,
    state: &KinematicState,
    req: PhotonRequest,
) -> Result<f64> {
    check_beta(state.beta)?;
    check_theta(req.theta)?;
    if req.harmonic == 0 || req.harmonic > state.level {
        return Err(domain(format!(
            "harmonic {} is not emitted from level {}",
            req.harmonic, state.level
        )));
    }
    let ratio = f64::from(req.harmonic) / spec.effective_level(state.level);
    let b2 = state.beta * state.beta;
    if state.gamma.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let sin = req.theta.sin();
    Ok(ratio * state.gamma * b2 / (1.0 + (1.0 - ratio * b2 * sin * sin).sqrt()))
}

/// `(sin θ, cos θ)` with the orbit plane snapped: within 1e-14 of π/2 the
/// cosine is exactly zero, so densities that vanish there print as 0.
pub fn polar_sin_cos(theta: f64) -> (f64, f64) {
    if (theta - std::f64::consts::FRAC_PI_2).abs() <= 1e-14 {
        (1.0, 0.0)
    } else {
        theta.sin_cos()
    }
}

/// `A(beta) = beta^6 / (1 - beta^2) = (gamma^2 - 1)^3 / gamma^4`, the common
/// energy scale of every n=1 power (infinite at beta = 1).
pub fn power_amplitude(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    if beta == 1.0 {
        return Ok(f64::INFINITY);
    }
    Ok(beta.powi(6) / ((1.0 - beta) * (1.0 + beta)))
}
