//! Two aspects: three platforms observed over eight time steps. Each layer copies
//! from the other platforms at the same time and from itself one step earlier.

use multinet::dependency::build_temporal_multiplex;
use multinet::metrics::nmi_joint;
use multinet::nulldist::{build_null_set, NullSpec};
use multinet::sampler::{sample_partition, SamplerConfig};
use multinet::streams::derive;
use multinet::{AspectSpec, MultilayerShape};

fn main() -> multinet::Result<()> {
    let (platforms, steps) = (3, 8);
    let shape = MultilayerShape::new(80, vec![AspectSpec::unordered(platforms), AspectSpec::ordered(steps)])?;
    let tensor = build_temporal_multiplex(&shape, &vec![vec![0.3; steps]; platforms])?;
    let nulls = build_null_set(&shape, &NullSpec::full(6, 1.0), &mut derive(3, "nulls"))?;
    let s = sample_partition(&tensor, &nulls, &SamplerConfig::new(3))?.remove(0);

    let layer = |b1: usize, b2: usize| shape.flatten(&[b1, b2]).expect("in range");
    println!("time  platform 1-2  platform 1-3  platform 1 vs previous step");
    for t in 0..steps {
        let same_time = |b| nmi_joint(s.induced(layer(0, t)), s.induced(layer(b, t)));
        let previous = if t == 0 {
            String::from("-")
        } else {
            format!("{:.3}", nmi_joint(s.induced(layer(0, t - 1)), s.induced(layer(0, t)))?)
        };
        println!("{:>4}  {:>12.3}  {:>12.3}  {previous:>12}", t + 1, same_time(1)?, same_time(2)?);
    }
    Ok(())
}
