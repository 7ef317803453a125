//! Generate a benchmark from a TOML config into a directory: partition, network
//! and a manifest that regenerates both.
//!
//! cargo run --release --example generate_from_config -- [config.toml] [out_dir]

use std::path::PathBuf;

use multinet::io::{generate_to_dir, load_config, load_manifest};

fn main() -> multinet::Result<()> {
    let mut args = std::env::args().skip(1);
    let config_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/temporal.toml")));
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("multinet-example"));
    let config = load_config(&config_path)?;
    for file in generate_to_dir(&config, &out)? {
        println!("wrote {} ({} bytes)", file.display(), std::fs::metadata(&file)?.len());
    }
    let manifest = load_manifest(&out.join("manifest.toml"))?;
    for s in &manifest.stats {
        println!(
            "chain {}: {} edges, {} Bernoulli blocks, {} rejection fallbacks, {} clamped pairs",
            s.chain, s.edges, s.bernoulli_blocks, s.fallback_blocks, s.clamped_pairs
        );
    }
    Ok(())
}
