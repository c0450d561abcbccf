//! Regenerate the data behind every figure as CSV files in a directory.
//!
//! ```bash
//! cargo run --example figures -- out/
//! ```

use std::fs;
use std::path::PathBuf;

use synrad::cli::run_cli;
use synrad::figures::{argv, FIGURES};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    fs::create_dir_all(&dir)?;
    for fig in FIGURES {
        for (i, args) in argv(fig).iter().enumerate() {
            let mut out = Vec::new();
            let code = run_cli(args, &mut out, &mut std::io::stderr());
            if code != 0 {
                eprintln!("figure {} failed with exit code {code}", fig.figure);
                continue;
            }
            let path = dir.join(format!("fig{:02}_{}.csv", fig.figure, i + 1));
            fs::write(&path, out)?;
            println!("{}  {}", path.display(), fig.title);
        }
    }
    Ok(())
}
