//! Closed-form label dynamics of the temporal sampler next to simulation.

use multinet::nulldist::NullSet;
use multinet::sampler::{
    label_appearance_probability, label_disappearance_probability, marginal_label_probability,
    sample_temporal_partition,
};
use multinet::streams::derive;
use multinet::MultilayerShape;

fn main() -> multinet::Result<()> {
    let (n, l, p, trials) = (4, 4, 0.5, 100_000);
    let nulls = NullSet::from_probabilities(vec![
        vec![0.5, 0.3, 0.2],
        vec![0.2, 0.5, 0.3],
        vec![0.3, 0.2, 0.5],
        vec![0.6, 0.3, 0.1],
    ])?;
    let shape = MultilayerShape::temporal(n, l)?;
    let mut rng = derive(6, "simulation");
    let samples: Vec<_> = (0..trials)
        .map(|_| sample_temporal_partition(p, &nulls, &shape, &mut rng))
        .collect::<multinet::Result<_>>()?;

    println!("P[label 1 in layer a]");
    for a in 0..l {
        let hits: usize = samples.iter().map(|s| s.induced(a).iter().filter(|&&x| x == 1).count()).sum();
        println!(
            "  layer {}: formula {:.4}  simulated {:.4}",
            a + 1,
            marginal_label_probability(p, &nulls, a, 1)?,
            hits as f64 / (n * trials) as f64
        );
    }

    println!("P[label 2 held by m nodes in layer 2 vanishes in layer 3]");
    for m in 1..=n {
        let cases: Vec<_> = samples
            .iter()
            .filter(|s| s.induced(1).iter().filter(|&&x| x == 2).count() == m)
            .collect();
        let gone = cases.iter().filter(|s| !s.induced(2).contains(&2)).count();
        println!(
            "  m={m}: formula {:.4}  simulated {:.4}  ({} cases)",
            label_disappearance_probability(p, nulls.layer(2).probability(2), m, n)?,
            gone as f64 / cases.len() as f64,
            cases.len()
        );
    }

    // layer 3 holds only label 1: how often does label 2 or 3 show up in layer 4?
    let cases: Vec<_> = samples.iter().filter(|s| s.induced(2).iter().all(|&x| x == 1)).collect();
    let fresh = cases.iter().filter(|s| s.induced(3).iter().any(|&x| x != 1)).count();
    println!(
        "P[a new label appears in layer 4 | layer 3 all label 1]: formula {:.4}  simulated {:.4}",
        label_appearance_probability(p, nulls.layer(3), &[1; 4], 2)?,
        fresh as f64 / cases.len() as f64
    );
    Ok(())
}
