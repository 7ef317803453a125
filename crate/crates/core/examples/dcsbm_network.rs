//! Sample edges for a fixed multilayer partition with the degree-corrected block
//! model, then a directed variant with edges between consecutive layers.

use multinet::edges::{
    build_dcsbm, build_directed_interlayer_dcsbm, sample_directed_network, sample_expected_degrees,
    sample_network, EdgeSamplerConfig, LayerPairDegrees, TruncatedPowerLaw,
};
use multinet::streams::derive;
use multinet::{MultilayerPartition, MultilayerShape};

fn main() -> multinet::Result<()> {
    let (n, l) = (200, 3);
    let shape = MultilayerShape::temporal(n, l)?;
    let labels = (0..n * l).map(|k| (k % n) * 4 / n + 1).collect();
    let s = MultilayerPartition::from_labels(shape, labels)?;
    let dist = TruncatedPowerLaw::from_config_exponent(-2.0, 3.0, 30.0)?;
    let degrees = sample_expected_degrees(&dist, s.shape(), &mut derive(5, "degrees"));
    println!("expected degree: mean {:.2} (analytic {:.2})", degrees.iter().sum::<f64>() / degrees.len() as f64, dist.mean());

    for mu in [0.0, 0.3, 1.0] {
        let params = build_dcsbm(&s, &degrees, mu)?;
        let out = sample_network(&params, 5, &EdgeSamplerConfig::default())?;
        let crossing = out
            .network
            .edges()
            .iter()
            .filter(|e| s.label(e.source) != s.label(e.target))
            .count();
        println!(
            "mu={mu}: {} edges (w per layer {:.0}), {:.1}% between communities, {} Bernoulli blocks, {} clamped pairs",
            out.network.edge_count(),
            params.layer_total(0),
            100.0 * crossing as f64 / out.network.edge_count() as f64,
            out.stats.bernoulli_blocks,
            out.stats.clamped_pairs
        );
    }

    let pairs: Vec<LayerPairDegrees> = (0..l - 1)
        .map(|a| {
            let out_degrees: Vec<f64> = degrees[a * n..(a + 1) * n].to_vec();
            let mut in_degrees = out_degrees.clone();
            in_degrees.reverse();
            LayerPairDegrees {
                from: a,
                to: a + 1,
                out_degrees,
                in_degrees,
            }
        })
        .collect();
    let directed = build_directed_interlayer_dcsbm(&s, &pairs, 0.2)?;
    let out = sample_directed_network(&directed, 6, &EdgeSamplerConfig::default())?;
    println!(
        "directed interlayer model: {} edges (expected {:.0})",
        out.network.edge_count(),
        (0..l - 1).map(|a| directed.pair_total(a, a + 1)).sum::<f64>()
    );
    Ok(())
}
