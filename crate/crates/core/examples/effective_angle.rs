//! RMS angular width about the orbit plane, per polarization component.
//!
//! ```bash
//! cargo run --example effective_angle
//! ```

use synrad::{effective_angle, ParticleKind, PolarizationLabel, QuadratureConfig, Spin};

fn main() -> synrad::Result<()> {
    let cfg = QuadratureConfig::default();
    println!(
        "{:>5} {:>4} {:>10} {:>10}",
        "beta", "s", "boson", "electron"
    );
    for beta in [0.0, 0.5, 0.9, 0.99] {
        for s in [
            PolarizationLabel::Total,
            PolarizationLabel::Right,
            PolarizationLabel::Sigma,
            PolarizationLabel::Pi,
        ] {
            let b = effective_angle(ParticleKind::Boson, s, None, beta, &cfg)?;
            let e = effective_angle(
                ParticleKind::Electron,
                s,
                Some(Spin::Antiparallel),
                beta,
                &cfg,
            )?;
            println!(
                "{beta:>5} {:>4} {:>10.6} {:>10.6}",
                s.index(),
                b.delta,
                e.delta
            );
        }
    }
    Ok(())
}
