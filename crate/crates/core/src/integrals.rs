//! The one-parameter integrals `f_k(x)` that fix every n=1 normalization.
//!
//! `f_1` is elementary for both particles. `f_2` and `f_3` are integrated
//! after the change of variable `y = (1 - t^2) / (1 - x^2 t^2)`, which turns
//! the inverse square-root endpoint singularity of the original integrand
//! into a bounded integrand on `t in [0, 1]`. `k = 0` is `f_2 + f_3`.

use std::f64::consts::E;

use crate::error::{domain, Result};
use crate::kinematics::ParticleKind;
use crate::quadrature::{integrate, QuadratureConfig};

/// Below this distance from `x = 1` the electron integrals switch to their
/// logarithmic boundary expansion.
pub const ELECTRON_BOUNDARY_EPS: f64 = 1e-6;

/// Below this argument the `f_1` closed forms are replaced by Taylor series.
pub const SMALL_X: f64 = 1e-4;

/// Which of the four integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralIndex {
    /// `f_0 = f_2 + f_3`
    Sum,
    One,
    Two,
    Three,
}

impl IntegralIndex {
    pub fn from_k(k: u8) -> Result<Self> {
        match k {
            0 => Ok(IntegralIndex::Sum),
            1 => Ok(IntegralIndex::One),
            2 => Ok(IntegralIndex::Two),
            3 => Ok(IntegralIndex::Three),
            _ => Err(domain(format!("integral index k = {k} not in 0..=3"))),
        }
    }
}

fn check_x(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(domain(format!("integral argument x = {x} outside [0, 1]")))
    }
}

/// `exp(-x (1 - t^2) / (1 - x^2 t^2))`, factored to keep precision near t=1.
fn substituted_exp(x: f64, t: f64) -> f64 {
    let num = (1.0 - t) * (1.0 + t);
    let den = (1.0 - x * t) * (1.0 + x * t);
    (-x * num / den).exp()
}

/// Integrand in `t` of the substituted boson `f_2` (without prefactor).
pub fn boson_f2_integrand(x: f64, t: f64) -> f64 {
    let t2 = t * t;
    let den = (1.0 - x * t) * (1.0 + x * t);
    (1.0 - x * t2) * (1.0 + x * t2).powi(2) / den.powi(4) * substituted_exp(x, t)
}

/// Integrand in `t` of the substituted boson `f_3` (without prefactor).
pub fn boson_f3_integrand(x: f64, t: f64) -> f64 {
    let t2 = t * t;
    let den = (1.0 - x * t) * (1.0 + x * t);
    (1.0 - x * t2) * t2 / den.powi(4) * substituted_exp(x, t)
}

/// Integrand in `t` of the substituted electron `f_2` (without prefactor).
pub fn electron_f2_integrand(x: f64, t: f64) -> f64 {
    let den = (1.0 - x * t) * (1.0 + x * t);
    (1.0 - x * t * t) / den.powi(3) * substituted_exp(x, t)
}

/// Integrand in `t` of the substituted electron `f_3` (without prefactor).
pub fn electron_f3_integrand(x: f64, t: f64) -> f64 {
    let t2 = t * t;
    let den = (1.0 - x * t) * (1.0 + x * t);
    (1.0 - x * t2) * t2 / den.powi(3) * substituted_exp(x, t)
}

/// `f_1^b(x) = ((1 + x)^2 e^{-x} - 1) / x`, equal to 1 at x = 0.
pub fn boson_f1(x: f64) -> f64 {
    if x < SMALL_X {
        1.0 - x / 2.0 - x * x / 6.0 + 5.0 * x.powi(3) / 24.0
    } else {
        ((1.0 + x).powi(2) * (-x).exp() - 1.0) / x
    }
}

/// `f_1^e(x) = (2 - (2 + x) e^{-x}) / x`, equal to 1 at x = 0.
pub fn electron_f1(x: f64) -> f64 {
    if x < SMALL_X {
        1.0 - x * x / 6.0 + x.powi(3) / 12.0
    } else {
        (2.0 - (2.0 + x) * (-x).exp()) / x
    }
}

/// Common value `2 - 3/e` of all three electron integrals at x = 1.
pub fn electron_boundary_value() -> f64 {
    2.0 - 3.0 / E
}

/// Boson integrals `f_k^b(x)`.
pub fn f_b(k: u8, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    boson_integral(IntegralIndex::from_k(k)?, x, cfg)
}

pub fn boson_integral(idx: IntegralIndex, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_x(x)?;
    match idx {
        IntegralIndex::One => Ok(boson_f1(x)),
        IntegralIndex::Two => boson_f2(x, cfg),
        IntegralIndex::Three => boson_f3(x, cfg),
        IntegralIndex::Sum => Ok(boson_f2(x, cfg)? + boson_f3(x, cfg)?),
    }
}

fn boson_f2(x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if x == 1.0 {
        // The y-form reduces to the integral of (1 - y^2) e^{-y}.
        return Ok(4.0 / E - 1.0);
    }
    let pre = 2.0 * (1.0 + x) * (1.0 - x).powi(2);
    Ok(pre * integrate(|t| boson_f2_integrand(x, t), 0.0, 1.0, cfg)?)
}

fn boson_f3(x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if x == 1.0 {
        return Ok(4.0 / E - 1.0);
    }
    let pre = 2.0 * (1.0 + x) * ((1.0 - x) * (1.0 + x)).powi(2);
    Ok(pre * integrate(|t| boson_f3_integrand(x, t), 0.0, 1.0, cfg)?)
}

/// Electron integrals `f_k^e(x)`.
pub fn f_e(k: u8, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    electron_integral(IntegralIndex::from_k(k)?, x, cfg)
}

pub fn electron_integral(idx: IntegralIndex, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_x(x)?;
    match idx {
        IntegralIndex::One => Ok(electron_f1(x)),
        IntegralIndex::Two => electron_f2(x, cfg),
        IntegralIndex::Three => electron_f3(x, cfg),
        IntegralIndex::Sum => Ok(electron_f2(x, cfg)? + electron_f3(x, cfg)?),
    }
}

/// `(1 - x) ln(1 - x)`, zero at x = 1.
fn boundary_log(x: f64) -> f64 {
    let d = 1.0 - x;
    if d <= 0.0 {
        0.0
    } else {
        d * d.ln()
    }
}

fn electron_f2(x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if 1.0 - x < ELECTRON_BOUNDARY_EPS {
        return Ok(electron_boundary_value() - 4.0 / E * boundary_log(x));
    }
    let pre = 2.0 * (1.0 + x) * (1.0 - x) * (1.0 + x);
    Ok(pre * integrate(|t| electron_f2_integrand(x, t), 0.0, 1.0, cfg)?)
}

fn electron_f3(x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if 1.0 - x < ELECTRON_BOUNDARY_EPS {
        return Ok(electron_boundary_value() + 2.0 / E * boundary_log(x));
    }
    let pre = 2.0 * (1.0 + x) * (1.0 - x) * (1.0 + x);
    Ok(pre * integrate(|t| electron_f3_integrand(x, t), 0.0, 1.0, cfg)?)
}

/// Dispatch on particle kind.
pub fn integral(
    kind: ParticleKind,
    idx: IntegralIndex,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    match kind {
        ParticleKind::Boson => boson_integral(idx, x, cfg),
        ParticleKind::Electron => electron_integral(idx, x, cfg),
    }
}
