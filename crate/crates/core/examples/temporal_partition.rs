//! Sample a temporal multilayer partition and watch communities persist and drift.
//!
//! cargo run --example temporal_partition -- [p]

use multinet::dependency::build_temporal;
use multinet::metrics::nmi_joint;
use multinet::nulldist::{build_null_set, NullSpec};
use multinet::sampler::{sample_partition, SamplerConfig};
use multinet::streams::derive;
use multinet::MultilayerShape;

fn main() -> multinet::Result<()> {
    let p: f64 = std::env::args().nth(1).map_or(0.9, |a| a.parse().expect("p must be a number"));
    let (n, l) = (100, 20);
    let shape = MultilayerShape::temporal(n, l)?;
    let tensor = build_temporal(&shape, &vec![p; l - 1])?;
    let nulls = build_null_set(&shape, &NullSpec::full(5, 1.0), &mut derive(1, "nulls"))?;
    let s = sample_partition(&tensor, &nulls, &SamplerConfig::new(1))?.remove(0);

    println!("layer  communities  sizes                 NMI to previous");
    for a in 0..l {
        let mut sizes = vec![0; s.max_label()];
        for &x in s.induced(a) {
            sizes[x - 1] += 1;
        }
        sizes.retain(|&c| c > 0);
        let nmi = if a == 0 {
            String::from("-")
        } else {
            format!("{:.3}", nmi_joint(s.induced(a - 1), s.induced(a))?)
        };
        println!("{:>5}  {:>11}  {:<20}  {nmi}", a + 1, sizes.len(), format!("{sizes:?}"));
    }
    Ok(())
}
