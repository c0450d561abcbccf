//! Emitted photon energy for the n = 1 -> 0 transition, from the field
//! strength or from the speed.
//!
//! ```bash
//! cargo run --example frequencies
//! ```

use std::f64::consts::PI;

use synrad::kinematics::{photon_frequency, state_from_field};
use synrad::{ParticleSpec, PhotonRequest, Spin};

fn main() -> synrad::Result<()> {
    let field = 1.0; // in units of the critical field
    for spec in [
        ParticleSpec::Boson,
        ParticleSpec::Electron(Spin::Antiparallel),
    ] {
        let state = state_from_field(spec, 1, field)?;
        println!(
            "{spec:?}: beta = {:.6}, gamma = {:.6}",
            state.beta, state.gamma
        );
        for i in 0..=4 {
            let theta = PI / 2.0 * i as f64 / 4.0;
            let w = photon_frequency(spec, &state, PhotonRequest::new(1, theta)?)?;
            println!("  theta = {theta:.4}  omega = {w:.6} m0 c^2 / hbar");
        }
    }
    Ok(())
}
