//! Synchrotron radiation of a charged boson (spin 0) and an electron
//! (spin 1/2) in the first excited Landau level, from the exact n = nu = 1
//! quantum expressions.
//!
//! The crate evaluates emitted frequencies, angular power densities for
//! every polarization component, local and half-plane polarization
//! fractions, total powers, the electron/boson power ratio, and the
//! ultrarelativistic limits. Units are natural throughout: frequencies in
//! `m0 c^2 / hbar`, powers in `Q0 = e^2 m0^2 c^3 / hbar^2`, fields in the
//! critical field `H0`, angles in radians measured from the field.
//!
//! ```
//! use synrad::{ElectronDistribution, PolarizationLabel, QuadratureConfig, Spin};
//!
//! let dist = ElectronDistribution::new(0.9, &QuadratureConfig::default()).unwrap();
//! let p = dist.density(PolarizationLabel::Total, Spin::Antiparallel, 1.2).unwrap();
//! assert!(p > 0.0);
//! ```

pub mod analysis;
pub mod boson;
pub mod cli;
pub mod electron;
pub mod error;
pub mod figures;
pub mod integrals;
pub mod kinematics;
pub mod polarization;
pub mod quadrature;
pub mod scan;

pub use analysis::{
    asymptotic_max_angle, crossover_beta, effective_angle, max_angle, power_ratio, table1,
    Crossover, EffectiveAngleReport, ExtremumReport, RatioRow,
};
pub use boson::{BosonDistribution, PowerReport};
pub use electron::{DensityValue, ElectronDistribution};
pub use error::{Error, Result};
pub use kinematics::{KinematicState, ParticleKind, ParticleSpec, PhotonRequest, Spin};
pub use polarization::{HalfPlane, PolarizationLabel};
pub use quadrature::QuadratureConfig;
pub use scan::{Cell, ScanResult};
