//! Shape factors and the electron/boson power ratio at beta = 0, 0.1, ..., 1.
//!
//! ```bash
//! cargo run --example table1
//! ```

use synrad::{table1, QuadratureConfig};

fn main() -> synrad::Result<()> {
    let rows = table1(&QuadratureConfig::default())?;
    println!(
        "{:>5} {:>9} {:>9} {:>9} {:>9}",
        "beta", "f_b", "f_e", "k(-1)", "k(+1)"
    );
    for r in rows {
        println!(
            "{:>5.1} {:>9.5} {:>9.5} {:>9.5} {:>9.5}",
            r.beta, r.f_b, r.f_e, r.k_minus, r.k_plus
        );
    }
    Ok(())
}
