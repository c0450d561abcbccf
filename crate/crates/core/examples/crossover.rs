//! Speed above which an electron with its spin along the field outshines a
//! boson in the same level.
//!
//! ```bash
//! cargo run --example crossover
//! ```

use synrad::{crossover_beta, power_ratio, QuadratureConfig, Spin};

fn main() -> synrad::Result<()> {
    let cfg = QuadratureConfig::default();
    let c = crossover_beta(&cfg)?;
    println!("beta0  = {:.10}", c.beta0);
    println!("gamma0 = {:.10}", c.gamma0);

    for beta in [0.5, 0.8, c.beta0, 0.85, 0.99] {
        let k = power_ratio(Spin::Parallel, beta, &cfg)?;
        println!("k(+1; {beta:.6}) = {k:.6}");
    }
    Ok(())
}
