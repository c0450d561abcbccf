//! Half-plane and local polarization fractions.
//!
//! ```bash
//! cargo run --example polarization
//! ```

use std::f64::consts::FRAC_PI_4;

use synrad::boson::local_polarization_b;
use synrad::electron::local_polarization_e;
use synrad::{BosonDistribution, ElectronDistribution, PolarizationLabel, QuadratureConfig, Spin};

fn main() -> synrad::Result<()> {
    let cfg = QuadratureConfig::default();
    println!("upper half-plane fractions (electron: zeta = -1)");
    println!(
        "{:>5} {:>9} {:>9} {:>9} {:>9}",
        "beta", "q1_b", "q2_b", "q1_e", "q2_e"
    );
    for i in 0..=10 {
        let beta = i as f64 / 10.0;
        let b = BosonDistribution::new(beta, &cfg)?;
        let e = ElectronDistribution::new(beta, &cfg)?;
        println!(
            "{beta:>5.1} {:>9.6} {:>9.6} {:>9.6} {:>9.6}",
            b.half_plane_fraction(PolarizationLabel::Right),
            b.half_plane_fraction(PolarizationLabel::Sigma),
            e.half_plane_fraction(PolarizationLabel::Right, Spin::Antiparallel),
            e.half_plane_fraction(PolarizationLabel::Sigma, Spin::Antiparallel),
        );
    }

    let theta = FRAC_PI_4;
    println!("\nlocal fractions at theta = pi/4");
    for beta in [0.0, 0.7, 0.99] {
        println!(
            "beta={beta:<4}  boson q1={:.6} q2={:.6}  electron q1={:.6} q2={:.6}",
            local_polarization_b(PolarizationLabel::Right, beta, theta)?,
            local_polarization_b(PolarizationLabel::Sigma, beta, theta)?,
            local_polarization_e(PolarizationLabel::Right, Spin::Antiparallel, beta, theta)?,
            local_polarization_e(PolarizationLabel::Sigma, Spin::Antiparallel, beta, theta)?,
        );
    }
    Ok(())
}
