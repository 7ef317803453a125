//! Sampling multilayer partitions by label copying.
//!
//! A state node either copies the current label of one of its sources (with the
//! probability given by the copy structure) or draws a fresh label from the null
//! distribution of its layer. Partitions are sampled by initializing every state node
//! from its null and then sweeping all state nodes in an order that respects the
//! partial order of the layers.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{CopyStructure, MultilayerPartition, MultilayerShape, StateNode};
use crate::nulldist::{CategoricalNull, NullSet};
use crate::streams;

/// Sweeps used when the shape has an unordered aspect and none are configured.
pub const DEFAULT_ITERATIONS: usize = 200;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplerConfig {
    /// Number of sweeps (burn-in). Ignored for fully ordered shapes, which need one.
    #[serde(default)]
    pub iterations: Option<usize>,
    /// Independent chains, each reinitialized from the nulls.
    #[serde(default = "one")]
    pub chains: usize,
    /// Master seed. Not part of the serialized form; benchmarks supply their own.
    #[serde(skip)]
    pub seed: u64,
}

fn one() -> usize {
    1
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig::new(0)
    }
}

impl SamplerConfig {
    pub fn new(seed: u64) -> Self {
        SamplerConfig {
            iterations: None,
            chains: 1,
            seed,
        }
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.iterations = Some(iterations);
        self
    }

    pub fn with_chains(mut self, chains: usize) -> Self {
        self.chains = chains;
        self
    }

    pub fn effective_iterations(&self, shape: &MultilayerShape) -> usize {
        if shape.is_fully_ordered() {
            1
        } else {
            self.iterations.unwrap_or(DEFAULT_ITERATIONS)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.chains == 0 {
            return Err(Error::domain("chains", "must be at least 1"));
        }
        if self.iterations == Some(0) {
            return Err(Error::domain("iterations", "must be at least 1"));
        }
        Ok(())
    }
}

/// Every state node labelled independently from its layer's null.
pub fn sample_null_partition<R: Rng + ?Sized>(
    nulls: &NullSet,
    shape: &MultilayerShape,
    rng: &mut R,
) -> Result<MultilayerPartition> {
    nulls.check_shape(shape)?;
    let n = shape.nodes();
    let labels = (0..shape.state_node_count())
        .map(|idx| nulls.layer(idx / n).draw(rng))
        .collect();
    MultilayerPartition::from_labels(shape.clone(), labels)
}

// One uniform per update: [0, p̂) selects a source by cumulative weight,
// [p̂, 1) is rescaled and used for the null draw.
fn update_with<C: CopyStructure + ?Sized>(
    partition: &MultilayerPartition,
    copies: &C,
    null: &CategoricalNull,
    target: StateNode,
    u: f64,
) -> usize {
    let mut acc = 0.0;
    let mut chosen = None;
    let mut last = None;
    copies.for_each_source(target, &mut |src, w| {
        if chosen.is_some() {
            return;
        }
        acc += w;
        last = Some(src);
        if u < acc {
            chosen = Some(src);
        }
    });
    if let Some(src) = chosen {
        return partition.label(src);
    }
    let p_hat = acc;
    if p_hat >= 1.0 {
        // rounding left u just above the summed weights
        return partition.label(last.expect("p̂ >= 1 implies a source"));
    }
    null.draw_with((u - p_hat) / (1.0 - p_hat))
}

/// New label for `target` given the current partition, without modifying it.
pub fn update_state_node<C: CopyStructure + ?Sized, R: Rng + ?Sized>(
    partition: &MultilayerPartition,
    copies: &C,
    nulls: &NullSet,
    target: StateNode,
    rng: &mut R,
) -> usize {
    update_with(partition, copies, nulls.layer(target.layer), target, rng.random::<f64>())
}

/// Updates every state node once, layer by layer in `order`, nodes ascending.
pub fn gibbs_sweep<C: CopyStructure + ?Sized, R: Rng + ?Sized>(
    partition: &mut MultilayerPartition,
    copies: &C,
    nulls: &NullSet,
    order: &[usize],
    rng: &mut R,
) {
    let n = partition.shape().nodes();
    for &layer in order {
        let null = nulls.layer(layer);
        for node in 0..n {
            let target = StateNode::new(node, layer);
            let label = update_with(partition, copies, null, target, rng.random::<f64>());
            partition.set_label(target, label);
        }
    }
}

fn check_inputs<C: CopyStructure + ?Sized>(copies: &C, nulls: &NullSet) -> Result<()> {
    nulls.check_shape(copies.shape())
}

fn run_chain<C: CopyStructure + ?Sized, R: Rng + ?Sized>(
    copies: &C,
    nulls: &NullSet,
    iterations: usize,
    rng: &mut R,
) -> Result<MultilayerPartition> {
    let shape = copies.shape();
    let order = shape.update_order();
    let mut s = sample_null_partition(nulls, shape, rng)?;
    for _ in 0..iterations {
        gibbs_sweep(&mut s, copies, nulls, &order, rng);
    }
    Ok(s)
}

/// One partition per chain. Chain `k` uses the sub-stream `partition/chain-k` of
/// `config.seed`, so results do not depend on how chains are scheduled.
pub fn sample_partition<C: CopyStructure + ?Sized>(
    copies: &C,
    nulls: &NullSet,
    config: &SamplerConfig,
) -> Result<Vec<MultilayerPartition>> {
    config.validate()?;
    check_inputs(copies, nulls)?;
    let iterations = config.effective_iterations(copies.shape());
    (0..config.chains)
        .into_par_iter()
        .map(|k| {
            let mut rng = streams::derive(config.seed, &format!("partition/chain-{k}"));
            run_chain(copies, nulls, iterations, &mut rng)
        })
        .collect()
}

/// Fraction of state nodes whose label at sweep `t` equals their label at sweep
/// `t - lag`, for `t = lag..=iterations`. A diagnostic only; sampling never stops early.
pub fn label_agreement_trace<C: CopyStructure + ?Sized, R: Rng + ?Sized>(
    copies: &C,
    nulls: &NullSet,
    iterations: usize,
    lag: usize,
    rng: &mut R,
) -> Result<Vec<f64>> {
    check_inputs(copies, nulls)?;
    if lag == 0 {
        return Err(Error::domain("lag", "must be at least 1"));
    }
    let shape = copies.shape();
    let order = shape.update_order();
    let mut s = sample_null_partition(nulls, shape, rng)?;
    let mut history = vec![s.labels().to_vec()];
    let mut trace = Vec::new();
    for t in 1..=iterations {
        gibbs_sweep(&mut s, copies, nulls, &order, rng);
        history.push(s.labels().to_vec());
        if t >= lag {
            let past = &history[t - lag];
            let same = past.iter().zip(s.labels()).filter(|(a, b)| a == b).count();
            trace.push(same as f64 / past.len() as f64);
        }
    }
    Ok(trace)
}

fn check_temporal(shape: &MultilayerShape) -> Result<()> {
    if shape.aspects().len() != 1 || !shape.aspects()[0].is_ordered() {
        return Err(Error::Unsupported(
            "temporal sampling needs a single ordered aspect".into(),
        ));
    }
    Ok(())
}

fn check_unit(name: &'static str, p: f64) -> Result<()> {
    if p.is_finite() && (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::domain(name, format!("{p} is outside [0, 1]")))
    }
}

/// Temporal partition with uniform copy probability `p` between consecutive layers.
///
/// The first layer comes from its null; afterwards each node copies its label from
/// the previous layer with probability `p` and otherwise draws from the null.
pub fn sample_temporal_partition<R: Rng + ?Sized>(
    p: f64,
    nulls: &NullSet,
    shape: &MultilayerShape,
    rng: &mut R,
) -> Result<MultilayerPartition> {
    check_temporal(shape)?;
    check_unit("copy probability p", p)?;
    nulls.check_shape(shape)?;
    let n = shape.nodes();
    let mut layers: Vec<Vec<usize>> = Vec::with_capacity(shape.layer_count());
    layers.push((0..n).map(|_| nulls.layer(0).draw(rng)).collect());
    for a in 1..shape.layer_count() {
        let null = nulls.layer(a);
        let prev = &layers[a - 1];
        let next = (0..n)
            .map(|i| {
                if rng.random::<f64>() < p {
                    prev[i]
                } else {
                    null.draw(rng)
                }
            })
            .collect();
        layers.push(next);
    }
    MultilayerPartition::from_layers(shape.clone(), layers)
}

/// `P[S_{i,α} = s]` for the temporal model with uniform copy probability `p`.
/// `layer` is the 0-based layer index.
pub fn marginal_label_probability(p: f64, nulls: &NullSet, layer: usize, label: usize) -> Result<f64> {
    check_unit("copy probability p", p)?;
    if layer >= nulls.layer_count() {
        return Err(Error::OutOfBounds {
            what: "layer",
            value: layer,
            bound: nulls.layer_count(),
        });
    }
    let null = |a: usize| nulls.layer(a).probability(label);
    if layer == 0 {
        return Ok(null(0));
    }
    let mut total = null(0) * p.powi(layer as i32);
    for b in 1..layer {
        total += (1.0 - p) * null(b) * p.powi((layer - b) as i32);
    }
    total += (1.0 - p) * null(layer);
    Ok(total)
}

/// Probability that a label held by `m` of the `n` nodes in the previous layer is
/// held by none in the current layer, whose null gives it probability `null_probability`.
pub fn label_disappearance_probability(p: f64, null_probability: f64, m: usize, n: usize) -> Result<f64> {
    check_unit("copy probability p", p)?;
    check_unit("null probability", null_probability)?;
    if m > n {
        return Err(Error::domain("community size", format!("{m} exceeds node count {n}")));
    }
    let miss = (1.0 - p) * (1.0 - null_probability);
    Ok(miss.powi(m as i32) * (p + miss).powi((n - m) as i32))
}

/// Probability that a label absent from the previous layer's induced partition
/// `previous` appears in the current layer with null `null`.
///
/// This is the chance that at least one node neither copies nor draws a label
/// present in `previous`. It is the appearance probability of `label` itself
/// when `label` is the only absent label in the null's support.
pub fn label_appearance_probability(
    p: f64,
    null: &CategoricalNull,
    previous: &[usize],
    label: usize,
) -> Result<f64> {
    check_unit("copy probability p", p)?;
    if previous.contains(&label) {
        return Err(Error::domain(
            "label",
            format!("label {label} is present in the previous layer"),
        ));
    }
    let mut present: Vec<usize> = previous.to_vec();
    present.sort_unstable();
    present.dedup();
    let mass: f64 = present.iter().map(|&r| null.probability(r)).sum();
    Ok(1.0 - (p + (1.0 - p) * mass).powi(previous.len() as i32))
}
