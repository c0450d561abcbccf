//! Angular power densities of each polarization component for both
//! particles, and the total radiated power.
//!
//! ```bash
//! cargo run --example angular_density
//! ```

use std::f64::consts::PI;

use synrad::{BosonDistribution, ElectronDistribution, PolarizationLabel, QuadratureConfig, Spin};

fn main() -> synrad::Result<()> {
    let cfg = QuadratureConfig::default();
    let beta = 0.9;
    let boson = BosonDistribution::new(beta, &cfg)?;
    let electron = ElectronDistribution::new(beta, &cfg)?;

    println!("beta = {beta}");
    println!("W_b = {:.6e} Q0", boson.total_power().power);
    for spin in [Spin::Antiparallel, Spin::Parallel] {
        println!(
            "W_e(zeta={spin}) = {:.6e} Q0",
            electron.total_power(spin).power
        );
    }

    println!(
        "\n{:>6}  {:>30}  {:>30}",
        "theta", "boson p_0 p_2 p_3", "electron(-1) p_0 p_2 p_3"
    );
    for i in 0..=8 {
        let theta = PI * i as f64 / 8.0;
        let b: Vec<String> = [
            PolarizationLabel::Total,
            PolarizationLabel::Sigma,
            PolarizationLabel::Pi,
        ]
        .iter()
        .map(|&s| format!("{:9.6}", boson.density(s, theta).unwrap()))
        .collect();
        let e: Vec<String> = [
            PolarizationLabel::Total,
            PolarizationLabel::Sigma,
            PolarizationLabel::Pi,
        ]
        .iter()
        .map(|&s| {
            format!(
                "{:9.6}",
                electron.density(s, Spin::Antiparallel, theta).unwrap()
            )
        })
        .collect();
        println!("{theta:6.3}  {}  {}", b.join(" "), e.join(" "));
    }
    Ok(())
}
