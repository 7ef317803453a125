//! Uniform multiplex copying: every layer copies from all others. With p̂ close to
//! one, nodes keep the same label across most layers.
//!
//! cargo run --example multiplex_partition -- [p_hat]

use multinet::dependency::build_uniform_multiplex;
use multinet::metrics::{mean_by_distance, pairwise_layer_nmi};
use multinet::nulldist::{build_null_set, NullSpec};
use multinet::sampler::{sample_partition, SamplerConfig};
use multinet::streams::derive;
use multinet::MultilayerShape;

fn main() -> multinet::Result<()> {
    let p_hat: f64 = std::env::args().nth(1).map_or(0.95, |a| a.parse().expect("p_hat must be a number"));
    let (n, l) = (100, 10);
    let shape = MultilayerShape::multiplex(n, l)?;
    let tensor = build_uniform_multiplex(&shape, p_hat)?;
    let nulls = build_null_set(&shape, &NullSpec::full(5, 1.0), &mut derive(2, "nulls"))?;
    let config = SamplerConfig::new(2).with_chains(3);
    for (k, s) in sample_partition(&tensor, &nulls, &config)?.iter().enumerate() {
        // fraction of nodes whose label is identical in every layer
        let fixed = (0..n)
            .filter(|&i| (1..l).all(|a| s.induced(a)[i] == s.induced(0)[i]))
            .count();
        let off_diagonal = mean_by_distance(&pairwise_layer_nmi(s))[1..].iter().sum::<f64>() / (l - 1) as f64;
        println!(
            "chain {k}: {} labels, {fixed}/{n} nodes never change, mean interlayer NMI {off_diagonal:.3}",
            s.community_count()
        );
    }
    Ok(())
}
