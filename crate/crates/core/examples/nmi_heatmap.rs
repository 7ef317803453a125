//! Pairwise-layer NMI of temporal partitions for several copying probabilities,
//! written as CSV (`p,layer_a,layer_b,nmi`) for plotting as heatmaps.
//!
//! cargo run --release --example nmi_heatmap > heatmap.csv

use multinet::dependency::build_temporal;
use multinet::metrics::{mean_by_distance, pairwise_layer_nmi};
use multinet::nulldist::{build_null_set, NullSpec};
use multinet::sampler::{sample_partition, SamplerConfig};
use multinet::streams::derive;
use multinet::MultilayerShape;

fn main() -> multinet::Result<()> {
    let (n, l) = (150, 100);
    let shape = MultilayerShape::temporal(n, l)?;
    let mut out = csv::Writer::from_writer(std::io::stdout().lock());
    out.write_record(["p", "layer_a", "layer_b", "nmi"])?;
    for p in [0.5, 0.95, 1.0] {
        let tensor = build_temporal(&shape, &vec![p; l - 1])?;
        let nulls = build_null_set(&shape, &NullSpec::full(5, 1.0), &mut derive(7, "nulls"))?;
        let s = sample_partition(&tensor, &nulls, &SamplerConfig::new(7))?.remove(0);
        let m = pairwise_layer_nmi(&s);
        for (a, row) in m.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                out.write_record([p.to_string(), (a + 1).to_string(), (b + 1).to_string(), v.to_string()])?;
            }
        }
        let by_distance = mean_by_distance(&m);
        eprintln!(
            "p={p}: mean NMI at distance 1 {:.3}, 10 {:.3}, 50 {:.3}",
            by_distance[1], by_distance[10], by_distance[50]
        );
    }
    out.flush()?;
    Ok(())
}
