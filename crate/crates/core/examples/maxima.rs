//! Interior maxima of the electron angular densities and how they approach
//! the orbit plane as the energy grows.
//!
//! ```bash
//! cargo run --example maxima
//! ```

use std::f64::consts::FRAC_PI_2;

use synrad::kinematics::beta_from_gamma;
use synrad::{
    asymptotic_max_angle, max_angle, ParticleKind, PolarizationLabel, QuadratureConfig, Spin,
};

fn main() -> synrad::Result<()> {
    let cfg = QuadratureConfig::default();
    let labels = [
        PolarizationLabel::Total,
        PolarizationLabel::Right,
        PolarizationLabel::Pi,
    ];

    // Below beta^2 = 1/2 (3/4 for p_3) the densities are monotone.
    for s in labels {
        for b2 in [0.45, 0.55, 0.7, 0.8] {
            let r = max_angle(
                ParticleKind::Electron,
                s,
                Some(Spin::Antiparallel),
                f64::sqrt(b2),
                &cfg,
            )?;
            println!("s={s:<5} beta^2={b2:.2}  interior maximum: {}", r.exists);
        }
    }

    println!(
        "\n{:>5} {:>6} {:>14} {:>14}",
        "s", "gamma", "pi/2-theta", "asymptotic"
    );
    for s in labels {
        for gamma in [20.0, 40.0, 80.0] {
            let r = max_angle(
                ParticleKind::Electron,
                s,
                Some(Spin::Antiparallel),
                beta_from_gamma(gamma)?,
                &cfg,
            )?;
            let offset = FRAC_PI_2 - r.theta_max.unwrap_or(FRAC_PI_2);
            let asym = FRAC_PI_2 - asymptotic_max_angle(s, gamma)?;
            println!("{s:>5} {gamma:>6} {offset:>14.6e} {asym:>14.6e}");
        }
    }
    Ok(())
}
