//! Spin-0 particle in the first excited level (n = nu = 1).
//!
//! Every quantity is a function of the deformation pair
//! `xbar0(beta) = (sqrt3 - sqrt(3 - 2 beta^2)) / (sqrt3 + sqrt(3 - 2 beta^2))`
//! and `xbar(beta, theta)`, the same expression with `beta sin(theta)`.
//! Normalizations come from `f_k^b(xbar0)`; see [`crate::integrals`].

use crate::error::{check_beta, check_theta, Result};
use crate::integrals::{boson_integral, IntegralIndex};
use crate::kinematics::{polar_sin_cos, power_amplitude};
use crate::polarization::{HalfPlane, PolarizationLabel};
use crate::quadrature::QuadratureConfig;

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BosonDeformation {
    pub xbar0: f64,
    pub xbar: f64,
}

/// `xbar` as a function of `b2 = beta^2 sin^2(theta)`, written as
/// `2 b2 / (sqrt3 + r)^2` to avoid cancelling `sqrt3 - r` at small speeds.
fn deformation_of(b2: f64, cos2: f64, beta2: f64) -> f64 {
    // r^2 = 3 - 2 beta^2 sin^2 = 3 - 2 beta^2 + 2 beta^2 cos^2
    let r = (3.0 - 2.0 * beta2 + 2.0 * beta2 * cos2).sqrt();
    2.0 * b2 / (SQRT3 + r).powi(2)
}

pub fn boson_boundary(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let b2 = beta * beta;
    Ok(deformation_of(b2, 0.0, b2))
}

pub fn boson_deformation(beta: f64, theta: f64) -> Result<BosonDeformation> {
    check_beta(beta)?;
    check_theta(theta)?;
    let b2 = beta * beta;
    let (sin, cos) = polar_sin_cos(theta);
    Ok(BosonDeformation {
        xbar0: deformation_of(b2, 0.0, b2),
        xbar: deformation_of(b2 * sin * sin, cos * cos, b2),
    })
}

fn shape(s: PolarizationLabel, xbar: f64, cos: f64) -> f64 {
    let sigma = 1.0 - xbar;
    let pi = (1.0 + xbar).powi(2) * cos * cos / (1.0 - xbar);
    match s {
        PolarizationLabel::Sigma => sigma,
        PolarizationLabel::Pi => pi,
        PolarizationLabel::Total => sigma + pi,
        PolarizationLabel::Right => 0.5 * (sigma + pi) + (1.0 + xbar) * cos,
        PolarizationLabel::Left => 0.5 * (sigma + pi) - (1.0 + xbar) * cos,
    }
}

/// Angular shape `phi_s^b(beta; theta)`.
pub fn phi_b(s: PolarizationLabel, beta: f64, theta: f64) -> Result<f64> {
    let d = boson_deformation(beta, theta)?;
    Ok(shape(s, d.xbar, polar_sin_cos(theta).1))
}

/// Local polarization fraction `q_s^b(beta; theta) = phi_s / phi_0`.
pub fn local_polarization_b(s: PolarizationLabel, beta: f64, theta: f64) -> Result<f64> {
    let d = boson_deformation(beta, theta)?;
    let cos = polar_sin_cos(theta).1;
    Ok(shape(s, d.xbar, cos) / shape(PolarizationLabel::Total, d.xbar, cos))
}

/// Total power and its shape factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerReport {
    /// Total radiated power in units of `Q0 = e^2 m0^2 c^3 / hbar^2`;
    /// infinite at beta = 1.
    pub power: f64,
    /// Finite factor `f(beta)` with `f(0) = 1`.
    pub shape_factor: f64,
}

/// Precomputed normalization for one value of beta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BosonDistribution {
    beta: f64,
    xbar0: f64,
    f1: f64,
    f2: f64,
    f0: f64,
}

impl BosonDistribution {
    pub fn new(beta: f64, cfg: &QuadratureConfig) -> Result<Self> {
        let xbar0 = boson_boundary(beta)?;
        let f1 = boson_integral(IntegralIndex::One, xbar0, cfg)?;
        let f2 = boson_integral(IntegralIndex::Two, xbar0, cfg)?;
        let f3 = boson_integral(IntegralIndex::Three, xbar0, cfg)?;
        Ok(BosonDistribution {
            beta,
            xbar0,
            f1,
            f2,
            f0: f2 + f3,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn xbar0(&self) -> f64 {
        self.xbar0
    }

    /// `f_0^b(xbar0)`
    pub fn f0(&self) -> f64 {
        self.f0
    }

    /// `f^b(beta) = 3 (1 + xbar0)^2 f_0^b(xbar0) / 8`
    pub fn shape_factor(&self) -> f64 {
        3.0 * (1.0 + self.xbar0).powi(2) / 8.0 * self.f0
    }

    pub fn total_power(&self) -> PowerReport {
        let f = self.shape_factor();
        let a = power_amplitude(self.beta).expect("beta validated on construction");
        PowerReport {
            power: 4.0 * a / 81.0 * f,
            shape_factor: f,
        }
    }

    /// Fraction `q_s^b(beta)` of the power in component `s` emitted into the
    /// upper half-plane, normalized so that `W_s^(+) = W_0 q_s / 2`.
    pub fn half_plane_fraction(&self, s: PolarizationLabel) -> f64 {
        match s {
            PolarizationLabel::Total => 1.0,
            PolarizationLabel::Right => 0.5 + self.f1 / self.f0,
            PolarizationLabel::Left => 0.5 - self.f1 / self.f0,
            PolarizationLabel::Sigma => self.f2 / self.f0,
            PolarizationLabel::Pi => 1.0 - self.f2 / self.f0,
        }
    }

    /// Power of component `s` radiated into one half-plane. The lower
    /// half-plane mirrors the upper with the circular components swapped.
    pub fn half_plane_power(&self, s: PolarizationLabel, half: HalfPlane) -> f64 {
        let label = match half {
            HalfPlane::Upper => s,
            HalfPlane::Lower => s.mirrored(),
        };
        0.5 * self.total_power().power * self.half_plane_fraction(label)
    }

    /// Angular density `p_s^b(beta; theta)`; `p_0` integrates to one over
    /// the sphere with `dOmega = sin(theta) dtheta`.
    pub fn density(&self, s: PolarizationLabel, theta: f64) -> Result<f64> {
        check_theta(theta)?;
        let b2 = self.beta * self.beta;
        let (sin, cos) = polar_sin_cos(theta);
        let xbar = deformation_of(b2 * sin * sin, cos * cos, b2);
        Ok((1.0 + xbar).powi(3) * (-xbar).exp() * shape(s, xbar, cos)
            / ((1.0 + self.xbar0).powi(2) * self.f0))
    }
}

pub fn total_power_b(beta: f64, cfg: &QuadratureConfig) -> Result<PowerReport> {
    Ok(BosonDistribution::new(beta, cfg)?.total_power())
}

pub fn half_plane_fraction_b(
    s: PolarizationLabel,
    beta: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    Ok(BosonDistribution::new(beta, cfg)?.half_plane_fraction(s))
}

pub fn angular_density_b(
    s: PolarizationLabel,
    beta: f64,
    theta: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    BosonDistribution::new(beta, cfg)?.density(s, theta)
}
