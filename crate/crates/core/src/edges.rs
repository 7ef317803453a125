//! Planting networks on a multilayer partition with a degree-corrected block model.
//!
//! Each layer gets expected degrees `e`, community totals `κ`, node shares
//! `σ = e / κ` and a block matrix
//! `W[r][s] = (1 - μ) δ(r, s) κ_s + μ κ_r κ_s / (2 w)`.
//! The expected number of edges between `i` and `j` is `σ_i W[r][s] σ_j`.

use std::collections::HashSet;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;
use rand_distr::Poisson;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Edge, MultilayerNetwork, MultilayerPartition, MultilayerShape, StateNode};
use crate::streams::{self, StreamRng};

/// Continuous power law `p(x) = C x^{-τ}` on `[k_min, k_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedPowerLaw {
    tau: f64,
    k_min: f64,
    k_max: f64,
}

impl TruncatedPowerLaw {
    pub fn new(tau: f64, k_min: f64, k_max: f64) -> Result<Self> {
        if !(tau.is_finite() && tau > 1.0) {
            return Err(Error::domain("power-law exponent", format!("τ = {tau} must exceed 1")));
        }
        if !(k_min.is_finite() && k_min > 0.0) {
            return Err(Error::domain("k_min", format!("{k_min} must be positive")));
        }
        if !(k_max.is_finite() && k_max >= k_min) {
            return Err(Error::domain("k_max", format!("{k_max} must be at least k_min = {k_min}")));
        }
        Ok(TruncatedPowerLaw { tau, k_min, k_max })
    }

    /// From a configuration exponent given as the literal power of `x`, so `-2`
    /// means `p(x) ∝ x^{-2}`.
    pub fn from_config_exponent(exponent: f64, k_min: f64, k_max: f64) -> Result<Self> {
        Self::new(-exponent, k_min, k_max)
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn k_min(&self) -> f64 {
        self.k_min
    }

    pub fn k_max(&self) -> f64 {
        self.k_max
    }

    pub fn is_degenerate(&self) -> bool {
        self.k_min == self.k_max
    }

    // k_min^{-g} - k_max^{-g}
    fn span(&self) -> f64 {
        let g = self.tau - 1.0;
        self.k_min.powf(-g) - self.k_max.powf(-g)
    }

    /// `C`; infinite when `k_min == k_max`.
    pub fn normalization(&self) -> f64 {
        (self.tau - 1.0) / self.span()
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x < self.k_min {
            return 0.0;
        }
        if x >= self.k_max {
            return 1.0;
        }
        let g = self.tau - 1.0;
        (self.k_min.powf(-g) - x.powf(-g)) / self.span()
    }

    pub fn mean(&self) -> f64 {
        if self.is_degenerate() {
            return self.k_min;
        }
        let c = self.normalization();
        let a = 2.0 - self.tau;
        if a.abs() < 1e-12 {
            c * (self.k_max / self.k_min).ln()
        } else {
            c * (self.k_max.powf(a) - self.k_min.powf(a)) / a
        }
    }

    /// Inverse CDF at `u ∈ [0, 1)`.
    pub fn quantile(&self, u: f64) -> f64 {
        if self.is_degenerate() {
            return self.k_min;
        }
        let g = self.tau - 1.0;
        let y = self.k_min.powf(-g) - u * self.span();
        y.powf(-1.0 / g).clamp(self.k_min, self.k_max)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.quantile(rng.random::<f64>())
    }
}

/// Independent expected degrees for every state node, in supra-index order.
pub fn sample_expected_degrees<R: Rng + ?Sized>(
    dist: &TruncatedPowerLaw,
    shape: &MultilayerShape,
    rng: &mut R,
) -> Vec<f64> {
    (0..shape.state_node_count()).map(|_| dist.sample(rng)).collect()
}

/// Communities of one layer (or one side of a layer pair) with their degree totals.
#[derive(Debug, Clone, PartialEq)]
struct Groups {
    labels: Vec<usize>,
    members: Vec<Vec<usize>>,
    kappa: Vec<f64>,
    // per node: index into `labels`, and σ
    group_of: Vec<usize>,
    sigma: Vec<f64>,
}

impl Groups {
    fn new(induced: &[usize], degrees: &[f64], layer: usize) -> Result<Self> {
        let mut labels: Vec<usize> = induced.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let mut members = vec![Vec::new(); labels.len()];
        let mut kappa = vec![0.0; labels.len()];
        let mut group_of = Vec::with_capacity(induced.len());
        for (i, (&s, &e)) in induced.iter().zip(degrees).enumerate() {
            let g = labels.binary_search(&s).expect("label collected above");
            members[g].push(i);
            kappa[g] += e;
            group_of.push(g);
        }
        if let Some(g) = kappa.iter().position(|&k| !(k > 0.0)) {
            return Err(Error::DegenerateCommunity {
                label: labels[g],
                layer: layer + 1,
            });
        }
        let sigma = degrees
            .iter()
            .zip(&group_of)
            .map(|(&e, &g)| e / kappa[g])
            .collect();
        Ok(Groups {
            labels,
            members,
            kappa,
            group_of,
            sigma,
        })
    }

    fn index_of(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    fn total(&self) -> f64 {
        self.kappa.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
struct LayerBlocks {
    groups: Groups,
    w: f64,
}

/// Parameters of the undirected, intralayer-only degree-corrected block model.
#[derive(Debug, Clone, PartialEq)]
pub struct DcsbmParams {
    partition: MultilayerPartition,
    degrees: Vec<f64>,
    mu: f64,
    layers: Vec<LayerBlocks>,
}

fn check_mu(mu: f64) -> Result<()> {
    if mu.is_finite() && (0.0..=1.0).contains(&mu) {
        Ok(())
    } else {
        Err(Error::domain("mixing parameter μ", format!("{mu} is outside [0, 1]")))
    }
}

fn check_degrees(degrees: &[f64]) -> Result<()> {
    match degrees.iter().position(|e| !(e.is_finite() && *e >= 0.0)) {
        Some(i) => Err(Error::domain(
            "expected degree",
            format!("entry {} = {} must be finite and non-negative", i + 1, degrees[i]),
        )),
        None => Ok(()),
    }
}

/// Builds `κ`, `w`, `σ` and `W` for every layer from the planted partition and
/// expected degrees (supra-index order).
pub fn build_dcsbm(partition: &MultilayerPartition, degrees: &[f64], mu: f64) -> Result<DcsbmParams> {
    check_mu(mu)?;
    let shape = partition.shape();
    if degrees.len() != shape.state_node_count() {
        return Err(Error::ShapeMismatch(format!(
            "{} expected degrees for {} state nodes",
            degrees.len(),
            shape.state_node_count()
        )));
    }
    check_degrees(degrees)?;
    let n = shape.nodes();
    let layers = (0..shape.layer_count())
        .map(|a| {
            let groups = Groups::new(partition.induced(a), &degrees[a * n..(a + 1) * n], a)?;
            let w = groups.total() / 2.0;
            Ok(LayerBlocks { groups, w })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DcsbmParams {
        partition: partition.clone(),
        degrees: degrees.to_vec(),
        mu,
        layers,
    })
}

impl DcsbmParams {
    pub fn shape(&self) -> &MultilayerShape {
        self.partition.shape()
    }

    pub fn partition(&self) -> &MultilayerPartition {
        &self.partition
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn expected_degree(&self, s: StateNode) -> f64 {
        self.degrees[self.shape().supra_index(s)]
    }

    pub fn expected_degrees(&self) -> &[f64] {
        &self.degrees
    }

    /// `w_α`, the expected number of edges in `layer`.
    pub fn layer_total(&self, layer: usize) -> f64 {
        self.layers[layer].w
    }

    /// Labels present in `layer`, ascending; these index [`Self::block_matrix`].
    pub fn community_labels(&self, layer: usize) -> &[usize] {
        &self.layers[layer].groups.labels
    }

    /// `κ_{s,α}`, or `None` if `label` is absent from `layer`.
    pub fn community_total(&self, label: usize, layer: usize) -> Option<f64> {
        let g = &self.layers[layer].groups;
        g.index_of(label).map(|k| g.kappa[k])
    }

    pub fn sigma(&self, s: StateNode) -> f64 {
        self.layers[s.layer].groups.sigma[s.node]
    }

    fn block_by_index(&self, layer: usize, r: usize, s: usize) -> f64 {
        let lb = &self.layers[layer];
        let k = &lb.groups.kappa;
        let delta = if r == s { (1.0 - self.mu) * k[s] } else { 0.0 };
        delta + self.mu * k[r] * k[s] / (2.0 * lb.w)
    }

    /// `W_{r,α}^{s,α}` for labels `r`, `s` (zero if either is absent from `layer`).
    pub fn block(&self, layer: usize, r: usize, s: usize) -> f64 {
        let g = &self.layers[layer].groups;
        match (g.index_of(r), g.index_of(s)) {
            (Some(a), Some(b)) => self.block_by_index(layer, a, b),
            _ => 0.0,
        }
    }

    /// Dense block matrix of `layer`, rows and columns in [`Self::community_labels`] order.
    pub fn block_matrix(&self, layer: usize) -> Vec<Vec<f64>> {
        let c = self.layers[layer].groups.labels.len();
        (0..c)
            .map(|r| (0..c).map(|s| self.block_by_index(layer, r, s)).collect())
            .collect()
    }
}

/// Expected number of edges between two state nodes, `σ_a W σ_b`; zero across layers.
pub fn edge_probability(params: &DcsbmParams, a: StateNode, b: StateNode) -> f64 {
    if a.layer != b.layer {
        return 0.0;
    }
    let g = &params.layers[a.layer].groups;
    let w = params.block_by_index(a.layer, g.group_of[a.node], g.group_of[b.node]);
    g.sigma[a.node] * w * g.sigma[b.node]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSamplerConfig {
    /// Blocks whose expected edges per node pair exceed this are sampled pair by pair.
    #[serde(default = "default_dense_threshold")]
    pub dense_threshold: f64,
    /// Rejection sampling gives up after `retry_factor · m` endpoint draws.
    #[serde(default = "default_retry_factor")]
    pub retry_factor: usize,
}

fn default_dense_threshold() -> f64 {
    0.25
}

fn default_retry_factor() -> usize {
    100
}

impl Default for EdgeSamplerConfig {
    fn default() -> Self {
        EdgeSamplerConfig {
            dense_threshold: default_dense_threshold(),
            retry_factor: default_retry_factor(),
        }
    }
}

impl EdgeSamplerConfig {
    /// Forces every block into pair-by-pair mode.
    pub fn bernoulli_only() -> Self {
        EdgeSamplerConfig {
            dense_threshold: -1.0,
            ..Default::default()
        }
    }

    /// Keeps every block in rejection mode unless the retry budget runs out.
    pub fn rejection_only() -> Self {
        EdgeSamplerConfig {
            dense_threshold: f64::INFINITY,
            ..Default::default()
        }
    }
}

/// Counters collected while sampling edges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SamplingStats {
    pub rejection_blocks: usize,
    pub bernoulli_blocks: usize,
    /// Rejection blocks that hit the retry budget and were redone pair by pair.
    pub fallback_blocks: usize,
    /// Pairs whose expected edge count exceeded one and was clamped.
    pub clamped_pairs: usize,
    pub rejected_draws: usize,
}

impl SamplingStats {
    fn merge(mut self, other: SamplingStats) -> Self {
        self.rejection_blocks += other.rejection_blocks;
        self.bernoulli_blocks += other.bernoulli_blocks;
        self.fallback_blocks += other.fallback_blocks;
        self.clamped_pairs += other.clamped_pairs;
        self.rejected_draws += other.rejected_draws;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledNetwork {
    pub network: MultilayerNetwork,
    pub stats: SamplingStats,
}

// One block of node pairs: sources from one community, targets from another.
struct Block<'a> {
    name: String,
    src_layer: usize,
    dst_layer: usize,
    src: &'a [usize],
    src_sigma: &'a [f64],
    dst: &'a [usize],
    dst_sigma: &'a [f64],
    w: f64,
    // Poisson mean of the number of edges
    expected: f64,
    // both sides are the same community in the same layer
    same: bool,
    directed: bool,
}

impl Block<'_> {
    fn pair_count(&self) -> usize {
        let (a, b) = (self.src.len(), self.dst.len());
        match (self.same, self.directed) {
            (true, false) => a * a.saturating_sub(1) / 2,
            (true, true) => a * a.saturating_sub(1),
            _ => a * b,
        }
    }

    fn edge(&self, i: usize, j: usize) -> Edge {
        Edge {
            source: StateNode::new(i, self.src_layer),
            target: StateNode::new(j, self.dst_layer),
            weight: 1.0,
        }
    }

    fn bernoulli(&self, rng: &mut StreamRng, stats: &mut SamplingStats) -> Vec<Edge> {
        let mut out = Vec::new();
        for (x, (&i, &si)) in self.src.iter().zip(self.src_sigma).enumerate() {
            for (y, (&j, &sj)) in self.dst.iter().zip(self.dst_sigma).enumerate() {
                if self.same && (x == y || (!self.directed && y < x)) {
                    continue;
                }
                let mut p = si * self.w * sj;
                if p > 1.0 {
                    stats.clamped_pairs += 1;
                    p = 1.0;
                }
                if rng.random::<f64>() < p {
                    out.push(self.edge(i, j));
                }
            }
        }
        out
    }

    // None when the retry budget is exhausted.
    fn rejection(
        &self,
        rng: &mut StreamRng,
        retry_factor: usize,
        stats: &mut SamplingStats,
    ) -> Option<Vec<Edge>> {
        let m = if self.expected > 0.0 {
            Poisson::new(self.expected).expect("positive finite mean").sample(rng) as usize
        } else {
            0
        };
        if m == 0 {
            return Some(Vec::new());
        }
        if m > self.pair_count() {
            return None;
        }
        let src_pick = WeightedIndex::new(self.src_sigma).ok()?;
        let dst_pick = WeightedIndex::new(self.dst_sigma).ok()?;
        let budget = retry_factor.saturating_mul(m);
        let mut seen = HashSet::with_capacity(m);
        let mut out = Vec::with_capacity(m);
        let mut draws = 0;
        while out.len() < m {
            if draws >= budget {
                return None;
            }
            draws += 1;
            let i = self.src[src_pick.sample(rng)];
            let j = self.dst[dst_pick.sample(rng)];
            if self.same && i == j {
                stats.rejected_draws += 1;
                continue;
            }
            let key = if self.same && !self.directed { (i.min(j), i.max(j)) } else { (i, j) };
            if !seen.insert(key) {
                stats.rejected_draws += 1;
                continue;
            }
            out.push(self.edge(i, j));
        }
        Some(out)
    }

    fn sample(&self, master: u64, config: &EdgeSamplerConfig) -> (Vec<Edge>, SamplingStats) {
        let mut stats = SamplingStats::default();
        let pairs = self.pair_count();
        if pairs == 0 || self.w <= 0.0 {
            return (Vec::new(), stats);
        }
        let mut rng = streams::derive(master, &self.name);
        if self.expected / pairs as f64 > config.dense_threshold {
            stats.bernoulli_blocks += 1;
            let edges = self.bernoulli(&mut rng, &mut stats);
            return (edges, stats);
        }
        stats.rejection_blocks += 1;
        match self.rejection(&mut rng, config.retry_factor, &mut stats) {
            Some(edges) => (edges, stats),
            None => {
                stats.fallback_blocks += 1;
                let edges = self.bernoulli(&mut rng, &mut stats);
                (edges, stats)
            }
        }
    }
}

fn sample_blocks(
    shape: &MultilayerShape,
    directed: bool,
    blocks: Vec<Block<'_>>,
    seed: u64,
    config: &EdgeSamplerConfig,
) -> Result<SampledNetwork> {
    let results: Vec<(Vec<Edge>, SamplingStats)> =
        blocks.par_iter().map(|b| b.sample(seed, config)).collect();
    let mut edges = Vec::new();
    let mut stats = SamplingStats::default();
    for (e, s) in results {
        edges.extend(e);
        stats = stats.merge(s);
    }
    let network = MultilayerNetwork::new(shape.clone(), directed, edges)?;
    Ok(SampledNetwork { network, stats })
}

fn member_sigma(groups: &Groups) -> Vec<Vec<f64>> {
    groups
        .members
        .iter()
        .map(|m| m.iter().map(|&i| groups.sigma[i]).collect())
        .collect()
}

/// Samples an undirected network without interlayer edges.
///
/// For every layer and community pair `r ≤ s` the number of edges is Poisson with
/// mean `W/2` (diagonal) or `W` (off-diagonal); endpoints are drawn in proportion to
/// `σ` and self-loops or repeated pairs are redrawn. Dense blocks are sampled pair
/// by pair instead. Block `(α, r, s)` uses the sub-stream `edges/layer-α/r-s` of `seed`.
pub fn sample_network(params: &DcsbmParams, seed: u64, config: &EdgeSamplerConfig) -> Result<SampledNetwork> {
    let sigmas: Vec<Vec<Vec<f64>>> = params.layers.iter().map(|lb| member_sigma(&lb.groups)).collect();
    let mut blocks = Vec::new();
    for (a, lb) in params.layers.iter().enumerate() {
        let g = &lb.groups;
        for r in 0..g.labels.len() {
            for s in r..g.labels.len() {
                let w = params.block_by_index(a, r, s);
                blocks.push(Block {
                    name: format!("edges/layer-{}/{}-{}", a + 1, g.labels[r], g.labels[s]),
                    src_layer: a,
                    dst_layer: a,
                    src: &g.members[r],
                    src_sigma: &sigmas[a][r],
                    dst: &g.members[s],
                    dst_sigma: &sigmas[a][s],
                    w,
                    expected: if r == s { w / 2.0 } else { w },
                    same: r == s,
                    directed: false,
                });
            }
        }
    }
    sample_blocks(params.shape(), false, blocks, seed, config)
}

/// Layer-specific expected degrees for edges from layer `from` to layer `to`.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerPairDegrees {
    pub from: usize,
    pub to: usize,
    /// `e_{i,from}^{to}` for every node `i`.
    pub out_degrees: Vec<f64>,
    /// `e_{from}^{j,to}` for every node `j`.
    pub in_degrees: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
struct PairBlocks {
    from: usize,
    to: usize,
    out: Groups,
    inn: Groups,
    w: f64,
}

/// Directed block model with edges between any ordered pair of layers.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedDcsbmParams {
    partition: MultilayerPartition,
    mu: f64,
    pairs: Vec<PairBlocks>,
}

/// Builds the directed model from layer-pair degrees. For every pair the total
/// out-degree must equal the total in-degree.
pub fn build_directed_interlayer_dcsbm(
    partition: &MultilayerPartition,
    degrees: &[LayerPairDegrees],
    mu: f64,
) -> Result<DirectedDcsbmParams> {
    check_mu(mu)?;
    let shape = partition.shape();
    let (n, l) = (shape.nodes(), shape.layer_count());
    let mut seen = HashSet::new();
    let mut pairs = Vec::with_capacity(degrees.len());
    for d in degrees {
        for (what, layer) in [("from layer", d.from), ("to layer", d.to)] {
            if layer >= l {
                return Err(Error::OutOfBounds { what, value: layer, bound: l });
            }
        }
        if !seen.insert((d.from, d.to)) {
            return Err(Error::domain(
                "layer pair",
                format!("degrees for ({}, {}) given twice", d.from + 1, d.to + 1),
            ));
        }
        if d.out_degrees.len() != n || d.in_degrees.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "layer pair ({}, {}) needs {n} out- and in-degrees",
                d.from + 1,
                d.to + 1
            )));
        }
        check_degrees(&d.out_degrees)?;
        check_degrees(&d.in_degrees)?;
        let out = Groups::new(partition.induced(d.from), &d.out_degrees, d.from)?;
        let inn = Groups::new(partition.induced(d.to), &d.in_degrees, d.to)?;
        let (wo, wi) = (out.total(), inn.total());
        if (wo - wi).abs() > 1e-9 * wo.abs().max(1.0) {
            return Err(Error::domain(
                "layer-pair degrees",
                format!(
                    "out-degrees of ({}, {}) sum to {wo} but in-degrees sum to {wi}",
                    d.from + 1,
                    d.to + 1
                ),
            ));
        }
        pairs.push(PairBlocks {
            from: d.from,
            to: d.to,
            out,
            inn,
            w: wo,
        });
    }
    pairs.sort_by_key(|p| (p.from, p.to));
    Ok(DirectedDcsbmParams {
        partition: partition.clone(),
        mu,
        pairs,
    })
}

impl DirectedDcsbmParams {
    pub fn shape(&self) -> &MultilayerShape {
        self.partition.shape()
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    fn pair(&self, from: usize, to: usize) -> Option<&PairBlocks> {
        self.pairs
            .binary_search_by_key(&(from, to), |p| (p.from, p.to))
            .ok()
            .map(|k| &self.pairs[k])
    }

    fn block_in(&self, p: &PairBlocks, r: usize, s: usize) -> f64 {
        let (ko, ki) = (p.out.kappa[r], p.inn.kappa[s]);
        let same = p.out.labels[r] == p.inn.labels[s];
        let delta = if same {
            (1.0 - self.mu) * (ko + ki) / 2.0
        } else {
            0.0
        };
        delta + self.mu * ko * ki / p.w
    }

    /// `W_{r,from}^{s,to}` for labels `r` (in `from`) and `s` (in `to`).
    pub fn block(&self, from: usize, to: usize, r: usize, s: usize) -> f64 {
        let Some(p) = self.pair(from, to) else {
            return 0.0;
        };
        match (p.out.index_of(r), p.inn.index_of(s)) {
            (Some(a), Some(b)) => self.block_in(p, a, b),
            _ => 0.0,
        }
    }

    /// Expected number of edges from `a` to `b`.
    pub fn edge_probability(&self, a: StateNode, b: StateNode) -> f64 {
        let Some(p) = self.pair(a.layer, b.layer) else {
            return 0.0;
        };
        let (r, s) = (p.out.group_of[a.node], p.inn.group_of[b.node]);
        p.out.sigma[a.node] * self.block_in(p, r, s) * p.inn.sigma[b.node]
    }

    /// `w_from^to`.
    pub fn pair_total(&self, from: usize, to: usize) -> f64 {
        self.pair(from, to).map_or(0.0, |p| p.w)
    }
}

/// Samples a directed network: Poisson(`W`) edges per ordered block, endpoints drawn
/// in proportion to the out- and in-shares. Block streams are named
/// `edges/directed/α-β/r-s`.
pub fn sample_directed_network(
    params: &DirectedDcsbmParams,
    seed: u64,
    config: &EdgeSamplerConfig,
) -> Result<SampledNetwork> {
    let sigmas: Vec<(Vec<Vec<f64>>, Vec<Vec<f64>>)> = params
        .pairs
        .iter()
        .map(|p| (member_sigma(&p.out), member_sigma(&p.inn)))
        .collect();
    let mut blocks = Vec::new();
    for (k, p) in params.pairs.iter().enumerate() {
        for r in 0..p.out.labels.len() {
            for s in 0..p.inn.labels.len() {
                let w = params.block_in(p, r, s);
                blocks.push(Block {
                    name: format!(
                        "edges/directed/{}-{}/{}-{}",
                        p.from + 1,
                        p.to + 1,
                        p.out.labels[r],
                        p.inn.labels[s]
                    ),
                    src_layer: p.from,
                    dst_layer: p.to,
                    src: &p.out.members[r],
                    src_sigma: &sigmas[k].0[r],
                    dst: &p.inn.members[s],
                    dst_sigma: &sigmas[k].1[s],
                    w,
                    expected: w,
                    same: p.from == p.to && p.out.labels[r] == p.inn.labels[s],
                    directed: true,
                });
            }
        }
    }
    sample_blocks(params.shape(), true, blocks, seed, config)
}
