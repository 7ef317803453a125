//! Run the detector grid from a config's `[sweep]` section and print the mean NMI
//! per grid point; the full per-run table goes to CSV.
//!
//! cargo run --release --example nmi_sweep -- [config.toml] [out.csv]

use std::path::PathBuf;

use multinet::detection::{grid_mean, nmi_sweep, write_sweep_csv};
use multinet::io::load_config;

fn main() -> multinet::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/temporal.toml")));
    let config = load_config(&path)?;
    let grid = config.sweep.clone().expect("config has a [sweep] section");
    let rows = nmi_sweep(&config, &grid)?;

    print!("{:<16}", "rule / mu");
    for omega in &grid.omega {
        print!("  omega={omega:<5}");
    }
    println!();
    for &rule in &grid.rules {
        for &mu in &grid.mu {
            print!("{:<16}", format!("{} {mu}", rule.name()));
            for &omega in &grid.omega {
                print!("  {:<11.3}", grid_mean(&rows, mu, omega, rule).unwrap_or(f64::NAN));
            }
            println!();
        }
    }
    if let Some(out) = args.next() {
        write_sweep_csv(&rows, std::fs::File::create(&out)?)?;
        println!("wrote {} rows to {out}", rows.len());
    }
    Ok(())
}
