//! Spin-1/2 particle in the first excited level (n = nu = 1) with transverse
//! spin `zeta`.
//!
//! The deformation pair is `x0 = (gamma - 1) / (gamma + 1)` and
//! `x(beta, theta)`, the same expression built from `beta sin(theta)`. The
//! final state always has antiparallel spin, so `zeta = +1` transitions flip
//! the spin and are suppressed by the factor `x0`.
//!
//! The sigma- and pi-linear shapes of the two spin states are exchanged:
//! `phi_2(zeta) = phi_3(-zeta)`. The code computes the two linear shapes once
//! and hands them out according to the spin, so the identity is exact.

use std::f64::consts::{E, FRAC_PI_2};

use crate::boson::PowerReport;
use crate::error::{check_beta, check_theta, Error, Result};
use crate::integrals::{electron_integral, IntegralIndex};
use crate::kinematics::{polar_sin_cos, power_amplitude, Spin};
use crate::polarization::{HalfPlane, PolarizationLabel};
use crate::quadrature::QuadratureConfig;

/// Angles closer than this to pi/2 are treated as lying in the orbit plane
/// when beta = 1.
pub const ORBIT_PLANE_TOL: f64 = 1e-14;

pub(crate) fn is_orbit_plane(theta: f64) -> bool {
    (theta - FRAC_PI_2).abs() <= ORBIT_PLANE_TOL
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectronDeformation {
    pub x0: f64,
    pub x: f64,
}

/// `(x, 1 - x)` from `b2 = beta^2 sin^2(theta)` and
/// `r^2 = 1 - b2 = (1 - beta^2) + beta^2 cos^2(theta)`.
fn deformation_of(b2: f64, r2: f64) -> (f64, f64) {
    let r = r2.sqrt();
    (b2 / (1.0 + r).powi(2), 2.0 * r / (1.0 + r))
}

fn boundary_parts(beta: f64) -> (f64, f64) {
    let b2 = beta * beta;
    deformation_of(b2, (1.0 - beta) * (1.0 + beta))
}

fn angular_parts(beta: f64, cos: f64) -> (f64, f64) {
    let b2 = beta * beta;
    let c2 = cos * cos;
    deformation_of(b2 * (1.0 - c2), (1.0 - beta) * (1.0 + beta) + b2 * c2)
}

pub fn electron_boundary(beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(boundary_parts(beta).0)
}

pub fn electron_deformation(beta: f64, theta: f64) -> Result<ElectronDeformation> {
    check_beta(beta)?;
    check_theta(theta)?;
    Ok(ElectronDeformation {
        x0: boundary_parts(beta).0,
        x: angular_parts(beta, polar_sin_cos(theta).1).0,
    })
}

/// Relative transition strength `d(zeta; beta)`: `x0` with a spin flip,
/// 1 without.
pub fn spin_factor(spin: Spin, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(match spin {
        Spin::Parallel => boundary_parts(beta).0,
        Spin::Antiparallel => 1.0,
    })
}

/// Shapes at one point, before spin assignment.
#[derive(Debug, Clone, Copy)]
struct Shapes {
    /// `1 - x0 x`
    plain: f64,
    /// `(1 + x)^2 cos^2 / (1 - x0 x)`
    cosine: f64,
    /// `(1 + x) cos`
    circular: f64,
}

impl Shapes {
    fn new(x: f64, one_minus_x: f64, one_minus_x0: f64, cos: f64) -> Self {
        // 1 - x0 x = d0 + d - d0 d with d = 1 - x; exact cancellation-free form.
        let plain = one_minus_x0 + one_minus_x - one_minus_x0 * one_minus_x;
        Shapes {
            plain,
            cosine: (1.0 + x).powi(2) * cos * cos / plain,
            circular: (1.0 + x) * cos,
        }
    }

    fn get(&self, s: PolarizationLabel, spin: Spin) -> f64 {
        let total = self.plain + self.cosine;
        let (sigma, pi) = match spin {
            Spin::Antiparallel => (self.plain, self.cosine),
            Spin::Parallel => (self.cosine, self.plain),
        };
        match s {
            PolarizationLabel::Total => total,
            PolarizationLabel::Sigma => sigma,
            PolarizationLabel::Pi => pi,
            PolarizationLabel::Right => 0.5 * total + self.circular,
            PolarizationLabel::Left => 0.5 * total - self.circular,
        }
    }
}

fn shapes_at(beta: f64, theta: f64) -> Result<Shapes> {
    check_beta(beta)?;
    check_theta(theta)?;
    let cos = polar_sin_cos(theta).1;
    let (x, omx) = angular_parts(beta, cos);
    let (_, omx0) = boundary_parts(beta);
    Ok(Shapes::new(x, omx, omx0, cos))
}

fn ambiguous(what: &str) -> Error {
    Error::AmbiguousLimit(what.to_string())
}

/// Angular shape `phi_s^e(zeta; beta; theta)`.
///
/// Undefined at beta = 1, theta = pi/2, where the linear shapes are 0/0.
pub fn phi_e(s: PolarizationLabel, spin: Spin, beta: f64, theta: f64) -> Result<f64> {
    if beta == 1.0 && is_orbit_plane(theta) {
        return Err(ambiguous("the electron angular shape"));
    }
    Ok(shapes_at(beta, theta)?.get(s, spin))
}

/// Local polarization fraction `q_s^e(zeta; beta; theta) = phi_s / phi_0`.
pub fn local_polarization_e(
    s: PolarizationLabel,
    spin: Spin,
    beta: f64,
    theta: f64,
) -> Result<f64> {
    if beta == 1.0 && is_orbit_plane(theta) {
        return Err(ambiguous("the electron local polarization"));
    }
    let sh = shapes_at(beta, theta)?;
    Ok(sh.get(s, spin) / sh.get(PolarizationLabel::Total, spin))
}

/// `Theta(theta) = (1 + |cos|)^-3 exp(2 |cos| / (1 + |cos|))`.
pub fn ultrarelativistic_profile(theta: f64) -> f64 {
    let c = polar_sin_cos(theta).1.abs();
    (2.0 * c / (1.0 + c)).exp() / (1.0 + c).powi(3)
}

/// `2e - 3`, the normalization of the beta -> 1 densities.
fn ur_norm() -> f64 {
    2.0 * E - 3.0
}

/// Limit of `p_s^e(zeta; beta; theta)` as beta -> 1 at fixed theta.
///
/// The circular components carry `1 + g sign(cos theta)`; in the orbit plane
/// both take the value `Theta / (2e - 3)`. The result does not depend on spin.
pub fn ultrarelativistic_density(s: PolarizationLabel, _spin: Spin, theta: f64) -> Result<f64> {
    check_theta(theta)?;
    let base = ultrarelativistic_profile(theta) / ur_norm();
    Ok(match s {
        PolarizationLabel::Total => 2.0 * base,
        PolarizationLabel::Sigma | PolarizationLabel::Pi => base,
        PolarizationLabel::Right | PolarizationLabel::Left => {
            if is_orbit_plane(theta) {
                base
            } else {
                let g = s.helicity().expect("circular label");
                base * (1.0 + g * polar_sin_cos(theta).1.signum())
            }
        }
    })
}

/// A density that may sit on the beta = 1, theta = pi/2 point where the two
/// iterated limits disagree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensityValue {
    Regular(f64),
    Ambiguous {
        /// theta -> pi/2 at fixed beta < 1, then beta -> 1.
        fixed_beta: f64,
        /// beta -> 1 at fixed theta, then theta -> pi/2.
        fixed_theta: f64,
    },
}

impl DensityValue {
    /// Regular value, or the fixed-beta limit at the ambiguous point.
    pub fn value(self) -> f64 {
        match self {
            DensityValue::Regular(v) => v,
            DensityValue::Ambiguous { fixed_beta, .. } => fixed_beta,
        }
    }

    pub fn is_ambiguous(self) -> bool {
        matches!(self, DensityValue::Ambiguous { .. })
    }
}

/// Precomputed normalization for one value of beta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectronDistribution {
    beta: f64,
    x0: f64,
    one_minus_x0: f64,
    f1: f64,
    f2: f64,
    f0: f64,
}

impl ElectronDistribution {
    pub fn new(beta: f64, cfg: &QuadratureConfig) -> Result<Self> {
        check_beta(beta)?;
        let (x0, one_minus_x0) = boundary_parts(beta);
        let f1 = electron_integral(IntegralIndex::One, x0, cfg)?;
        let f2 = electron_integral(IntegralIndex::Two, x0, cfg)?;
        let f3 = electron_integral(IntegralIndex::Three, x0, cfg)?;
        Ok(ElectronDistribution {
            beta,
            x0,
            one_minus_x0,
            f1,
            f2,
            f0: f2 + f3,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    /// `f_0^e(x0)`
    pub fn f0(&self) -> f64 {
        self.f0
    }

    /// `f^e(beta) = 3 (1 + x0) f_0^e(x0) / 8`
    pub fn shape_factor(&self) -> f64 {
        3.0 * (1.0 + self.x0) / 8.0 * self.f0
    }

    pub fn spin_factor(&self, spin: Spin) -> f64 {
        match spin {
            Spin::Parallel => self.x0,
            Spin::Antiparallel => 1.0,
        }
    }

    pub fn total_power(&self, spin: Spin) -> PowerReport {
        let f = self.shape_factor();
        let a = power_amplitude(self.beta).expect("beta validated on construction");
        PowerReport {
            power: self.spin_factor(spin) * a / 6.0 * f,
            shape_factor: f,
        }
    }

    /// `q_s^e(zeta; beta)`, the upper-half-plane fraction of component `s`.
    pub fn half_plane_fraction(&self, s: PolarizationLabel, spin: Spin) -> f64 {
        let q_sigma_anti = self.f2 / self.f0;
        let zeta = f64::from(spin.zeta());
        let q_sigma = 0.5 * (1.0 + zeta - 2.0 * zeta * q_sigma_anti);
        match s {
            PolarizationLabel::Total => 1.0,
            PolarizationLabel::Right => 0.5 + self.f1 / self.f0,
            PolarizationLabel::Left => 0.5 - self.f1 / self.f0,
            PolarizationLabel::Sigma => q_sigma,
            PolarizationLabel::Pi => 1.0 - q_sigma,
        }
    }

    pub fn half_plane_power(&self, s: PolarizationLabel, spin: Spin, half: HalfPlane) -> f64 {
        let label = match half {
            HalfPlane::Upper => s,
            HalfPlane::Lower => s.mirrored(),
        };
        0.5 * self.total_power(spin).power * self.half_plane_fraction(label, spin)
    }

    /// Angular density `p_s^e(zeta; beta; theta)` with the ambiguity flag.
    pub fn density_value(
        &self,
        s: PolarizationLabel,
        spin: Spin,
        theta: f64,
    ) -> Result<DensityValue> {
        check_theta(theta)?;
        if self.beta == 1.0 {
            let fixed_theta = ultrarelativistic_density(s, spin, theta)?;
            if !is_orbit_plane(theta) {
                return Ok(DensityValue::Regular(fixed_theta));
            }
            let peak = 2.0 / ur_norm();
            let fixed_beta = match (s, spin) {
                (PolarizationLabel::Total, _) => peak,
                (PolarizationLabel::Right | PolarizationLabel::Left, _) => 0.5 * peak,
                (PolarizationLabel::Sigma, Spin::Antiparallel)
                | (PolarizationLabel::Pi, Spin::Parallel) => peak,
                (PolarizationLabel::Sigma, Spin::Parallel)
                | (PolarizationLabel::Pi, Spin::Antiparallel) => 0.0,
            };
            return Ok(DensityValue::Ambiguous {
                fixed_beta,
                fixed_theta,
            });
        }
        let cos = polar_sin_cos(theta).1;
        let (x, one_minus_x) = angular_parts(self.beta, cos);
        let shapes = Shapes::new(x, one_minus_x, self.one_minus_x0, cos);
        Ok(DensityValue::Regular(
            (1.0 + x).powi(3) * (-x).exp() * shapes.get(s, spin)
                / (one_minus_x * (1.0 + self.x0).powi(2) * self.f0),
        ))
    }

    /// Angular density; at the ambiguous point returns the fixed-beta limit.
    pub fn density(&self, s: PolarizationLabel, spin: Spin, theta: f64) -> Result<f64> {
        self.density_value(s, spin, theta).map(DensityValue::value)
    }
}

pub fn total_power_e(spin: Spin, beta: f64, cfg: &QuadratureConfig) -> Result<PowerReport> {
    Ok(ElectronDistribution::new(beta, cfg)?.total_power(spin))
}

pub fn half_plane_fraction_e(
    s: PolarizationLabel,
    spin: Spin,
    beta: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    Ok(ElectronDistribution::new(beta, cfg)?.half_plane_fraction(s, spin))
}

pub fn angular_density_e(
    s: PolarizationLabel,
    spin: Spin,
    beta: f64,
    theta: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    ElectronDistribution::new(beta, cfg)?.density(s, spin, theta)
}
