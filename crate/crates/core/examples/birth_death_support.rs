//! Temporal null distributions whose label supports evolve: each active label dies
//! with probability r_d and Poisson(r_b) new labels are born per layer. The support
//! size settles around r_b / r_d.

use multinet::nulldist::{build_null_set, NullSpec, SupportProcess};
use multinet::streams::derive;
use multinet::MultilayerShape;

fn main() -> multinet::Result<()> {
    let (removal, birth_rate) = (0.2, 1.0);
    let shape = MultilayerShape::temporal(50, 400)?;
    let spec = NullSpec {
        communities: 1,
        theta: 1.0,
        support: SupportProcess::TemporalBirthDeath {
            removal,
            birth_rate,
            initial: 1,
        },
        shared: false,
    };
    let nulls = build_null_set(&shape, &spec, &mut derive(4, "nulls"))?;
    let sizes: Vec<usize> = nulls.iter().map(|n| n.support().len()).collect();
    for window in (0..400).step_by(50) {
        let chunk = &sizes[window..window + 50];
        let mean = chunk.iter().sum::<usize>() as f64 / 50.0;
        println!("layers {:>3}-{:>3}: mean support {mean:.2}", window + 1, window + 50);
    }
    println!("labels used overall: {}", nulls.community_count());
    println!("stationary mean r_b / r_d = {}", birth_rate / removal);
    Ok(())
}
