//! The beta -> 1 electron distribution and the ambiguous orbit-plane point.
//!
//! ```bash
//! cargo run --example limits
//! ```

use std::f64::consts::FRAC_PI_2;

use synrad::electron::{ultrarelativistic_density, ultrarelativistic_profile};
use synrad::{DensityValue, ElectronDistribution, PolarizationLabel, QuadratureConfig, Spin};

fn main() -> synrad::Result<()> {
    let cfg = QuadratureConfig::default();
    let s = PolarizationLabel::Sigma;
    let spin = Spin::Antiparallel;

    println!(
        "{:>7} {:>10} {:>12} {:>12} {:>12}",
        "theta", "profile", "beta=1-1e-4", "beta=1-1e-8", "limit"
    );
    let near = ElectronDistribution::new(1.0 - 1e-4, &cfg)?;
    let nearer = ElectronDistribution::new(1.0 - 1e-8, &cfg)?;
    for i in 0..=6 {
        let theta = (FRAC_PI_2 - 0.1) * i as f64 / 6.0;
        println!(
            "{theta:>7.4} {:>10.6} {:>12.6} {:>12.6} {:>12.6}",
            ultrarelativistic_profile(theta),
            near.density(s, spin, theta)?,
            nearer.density(s, spin, theta)?,
            ultrarelativistic_density(s, spin, theta)?,
        );
    }

    let at_one = ElectronDistribution::new(1.0, &cfg)?;
    if let DensityValue::Ambiguous {
        fixed_beta,
        fixed_theta,
    } = at_one.density_value(s, spin, FRAC_PI_2)?
    {
        println!("\norbit plane at beta = 1 depends on the order of limits:");
        println!("  theta -> pi/2 first: {fixed_beta:.6}");
        println!("  beta -> 1 first:     {fixed_theta:.6}");
    }
    Ok(())
}
