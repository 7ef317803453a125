//! Per-layer categorical null distributions and the processes that choose their supports.

use rand::Rng;
use rand_distr::{Distribution, Gamma, Poisson};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::MultilayerShape;

/// Retry bound for resampling an empty support.
pub const SUPPORT_RETRIES: usize = 1000;

/// Draws from the symmetric Dirichlet distribution `Dir(θ, q)`.
///
/// Uses normalized Gamma variates, computed in log space so that small
/// concentrations do not underflow to an all-zero vector.
pub fn sample_dirichlet<R: Rng + ?Sized>(theta: f64, q: usize, rng: &mut R) -> Result<Vec<f64>> {
    if !(theta.is_finite() && theta > 0.0) {
        return Err(Error::domain("Dirichlet concentration", format!("{theta} must be > 0")));
    }
    if q == 0 {
        return Err(Error::domain("Dirichlet dimension", "must be at least 1"));
    }
    if q == 1 {
        return Ok(vec![1.0]);
    }
    let logs: Vec<f64> = if theta >= 1.0 {
        let gamma = Gamma::new(theta, 1.0).map_err(|e| Error::domain("Gamma", e.to_string()))?;
        (0..q).map(|_| gamma.sample(rng).ln()).collect()
    } else {
        // X ~ Gamma(θ) equals Gamma(θ + 1) · U^(1/θ)
        let gamma =
            Gamma::new(theta + 1.0, 1.0).map_err(|e| Error::domain("Gamma", e.to_string()))?;
        (0..q)
            .map(|_| {
                let u: f64 = rng.random_range(f64::MIN_POSITIVE..1.0);
                gamma.sample(rng).ln() + u.ln() / theta
            })
            .collect()
    };
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut x: Vec<f64> = logs.iter().map(|l| (l - max).exp()).collect();
    let sum: f64 = x.iter().sum();
    for v in &mut x {
        *v /= sum;
    }
    Ok(x)
}

/// Categorical null distribution of one layer over labels `1..=n_c`.
#[derive(Debug, Clone, PartialEq)]
pub struct CategoricalNull {
    layer: usize,
    probabilities: Vec<f64>,
    cumulative: Vec<f64>,
}

impl CategoricalNull {
    /// `probabilities[s - 1]` is the probability of label `s`.
    pub fn new(layer: usize, probabilities: Vec<f64>) -> Result<Self> {
        if probabilities.iter().any(|p| !(p.is_finite() && *p >= 0.0)) {
            return Err(Error::domain(
                "null probabilities",
                format!("layer {}: entries must be finite and nonnegative", layer + 1),
            ));
        }
        let sum: f64 = probabilities.iter().sum();
        if probabilities.is_empty() || (sum - 1.0).abs() > 1e-12 {
            return Err(Error::domain(
                "null probabilities",
                format!("layer {}: entries sum to {sum}, not 1", layer + 1),
            ));
        }
        let cumulative = probabilities
            .iter()
            .scan(0.0, |acc, p| {
                *acc += p;
                Some(*acc)
            })
            .collect();
        Ok(CategoricalNull {
            layer,
            probabilities,
            cumulative,
        })
    }

    pub fn layer(&self) -> usize {
        self.layer
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    /// `𝕡₀^α[s]`; zero for labels outside `1..=n_c`.
    pub fn probability(&self, label: usize) -> f64 {
        if label == 0 {
            return 0.0;
        }
        self.probabilities.get(label - 1).copied().unwrap_or(0.0)
    }

    /// Active labels `G^α`, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.probabilities
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0.0)
            .map(|(s, _)| s + 1)
            .collect()
    }

    /// Inverse-CDF draw from a uniform `u ∈ [0, 1)`. Never returns an inactive label.
    pub fn draw_with(&self, u: f64) -> usize {
        let idx = self.cumulative.partition_point(|&c| c <= u);
        if idx < self.probabilities.len() {
            return idx + 1;
        }
        // u beyond the rounded total: last active label
        self.probabilities
            .iter()
            .rposition(|&p| p > 0.0)
            .map(|i| i + 1)
            .expect("support is nonempty")
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.draw_with(rng.random::<f64>())
    }
}

/// One categorical null per layer over a shared label set `1..=n_c`.
#[derive(Debug, Clone, PartialEq)]
pub struct NullSet {
    nulls: Vec<CategoricalNull>,
    communities: usize,
}

impl NullSet {
    /// Null set from explicit per-layer probability vectors (flat layer order).
    pub fn from_probabilities(layers: Vec<Vec<f64>>) -> Result<Self> {
        let communities = layers.first().map(Vec::len).unwrap_or(0);
        if layers.iter().any(|p| p.len() != communities) {
            return Err(Error::domain(
                "null probabilities",
                "all layers must share the same label set",
            ));
        }
        let nulls = layers
            .into_iter()
            .enumerate()
            .map(|(a, p)| CategoricalNull::new(a, p))
            .collect::<Result<Vec<_>>>()?;
        if nulls.is_empty() {
            return Err(Error::domain("null set", "at least one layer is required"));
        }
        Ok(NullSet { nulls, communities })
    }

    /// The same null in each of `layers` layers.
    pub fn shared(layers: usize, probabilities: Vec<f64>) -> Result<Self> {
        Self::from_probabilities(vec![probabilities; layers])
    }

    pub fn layer_count(&self) -> usize {
        self.nulls.len()
    }

    /// `n_c`
    pub fn community_count(&self) -> usize {
        self.communities
    }

    pub fn layer(&self, layer: usize) -> &CategoricalNull {
        &self.nulls[layer]
    }

    pub fn iter(&self) -> impl Iterator<Item = &CategoricalNull> {
        self.nulls.iter()
    }

    pub(crate) fn check_shape(&self, shape: &MultilayerShape) -> Result<()> {
        if self.nulls.len() != shape.layer_count() {
            return Err(Error::ShapeMismatch(format!(
                "null set covers {} layers, shape has {}",
                self.nulls.len(),
                shape.layer_count()
            )));
        }
        Ok(())
    }
}

/// Draws a label for flat layer `layer` from its null distribution.
pub fn null_draw<R: Rng + ?Sized>(nulls: &NullSet, layer: usize, rng: &mut R) -> Result<usize> {
    if layer >= nulls.layer_count() {
        return Err(Error::OutOfBounds {
            what: "layer",
            value: layer,
            bound: nulls.layer_count(),
        });
    }
    Ok(nulls.layer(layer).draw(rng))
}

/// How the supports `G^α` of the nulls are chosen.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SupportProcess {
    /// All `n_c` labels active in every layer.
    #[default]
    Full,
    /// Along the temporal order, each active label dies with probability
    /// `removal` and `Poisson(birth_rate)` fresh labels are born per layer.
    TemporalBirthDeath {
        removal: f64,
        birth_rate: f64,
        initial: usize,
    },
    /// Each of the `n_c` labels is active in a layer with probability `presence`.
    MultiplexPresence { presence: f64 },
}

/// Parameters of the null distributions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NullSpec {
    /// `n_c`; ignored by the birth/death process, which allocates its own labels.
    pub communities: usize,
    /// Symmetric Dirichlet concentration `θ`.
    pub theta: f64,
    #[serde(default)]
    pub support: SupportProcess,
    /// Draw one probability vector and reuse it in every layer (full support only).
    #[serde(default)]
    pub shared: bool,
}

impl NullSpec {
    pub fn full(communities: usize, theta: f64) -> Self {
        NullSpec {
            communities,
            theta,
            support: SupportProcess::Full,
            shared: false,
        }
    }
}

fn sample_supports<R: Rng + ?Sized>(
    shape: &MultilayerShape,
    spec: &NullSpec,
    rng: &mut R,
) -> Result<Vec<Vec<usize>>> {
    let l = shape.layer_count();
    match &spec.support {
        SupportProcess::Full => {
            if spec.communities == 0 {
                return Err(Error::domain("community count n_c", "must be at least 1"));
            }
            Ok(vec![(1..=spec.communities).collect(); l])
        }
        SupportProcess::TemporalBirthDeath {
            removal,
            birth_rate,
            initial,
        } => {
            if shape.aspects().len() != 1 || !shape.aspects()[0].is_ordered() {
                return Err(Error::Unsupported(
                    "the birth/death support process needs a single ordered aspect".into(),
                ));
            }
            if !(0.0..=1.0).contains(removal) {
                return Err(Error::domain("removal probability r_d", format!("{removal} not in [0, 1]")));
            }
            if !(birth_rate.is_finite() && *birth_rate >= 0.0) {
                return Err(Error::domain("birth rate r_b", format!("{birth_rate} must be >= 0")));
            }
            if *initial == 0 {
                return Err(Error::domain("initial support size", "must be at least 1"));
            }
            let births = if *birth_rate > 0.0 {
                Some(Poisson::new(*birth_rate).map_err(|e| Error::domain("birth rate r_b", e.to_string()))?)
            } else {
                None
            };
            let mut supports = Vec::with_capacity(l);
            supports.push((1..=*initial).collect::<Vec<usize>>());
            let mut next_label = initial + 1;
            for layer in 1..l {
                let prev = &supports[layer - 1];
                let mut attempt = 0;
                let support = loop {
                    attempt += 1;
                    let mut g: Vec<usize> =
                        prev.iter().copied().filter(|_| rng.random::<f64>() >= *removal).collect();
                    let born = births.as_ref().map_or(0, |p| p.sample(rng) as usize);
                    g.extend(next_label..next_label + born);
                    if !g.is_empty() {
                        next_label += born;
                        break g;
                    }
                    if attempt >= SUPPORT_RETRIES {
                        return Err(Error::EmptySupport { layer: layer + 1, attempts: attempt });
                    }
                };
                supports.push(support);
            }
            Ok(supports)
        }
        SupportProcess::MultiplexPresence { presence } => {
            if !(0.0..=1.0).contains(presence) || *presence == 0.0 {
                return Err(Error::domain("presence probability", format!("{presence} not in (0, 1]")));
            }
            if spec.communities == 0 {
                return Err(Error::domain("community count n_c", "must be at least 1"));
            }
            (0..l)
                .map(|layer| {
                    for _ in 0..SUPPORT_RETRIES {
                        let g: Vec<usize> = (1..=spec.communities)
                            .filter(|_| rng.random::<f64>() < *presence)
                            .collect();
                        if !g.is_empty() {
                            return Ok(g);
                        }
                    }
                    Err(Error::EmptySupport { layer: layer + 1, attempts: SUPPORT_RETRIES })
                })
                .collect()
        }
    }
}

/// Samples supports, then Dirichlet probabilities on each support.
///
/// The label universe is `1..=n_c` with `n_c` the largest active label in any layer.
pub fn build_null_set<R: Rng + ?Sized>(
    shape: &MultilayerShape,
    spec: &NullSpec,
    rng: &mut R,
) -> Result<NullSet> {
    if spec.shared && spec.support != SupportProcess::Full {
        return Err(Error::Unsupported(
            "shared null probabilities need the full support process".into(),
        ));
    }
    let supports = sample_supports(shape, spec, rng)?;
    let n_c = supports
        .iter()
        .filter_map(|g| g.last().copied())
        .max()
        .unwrap_or(0);
    if n_c > shape.state_node_count() {
        return Err(Error::domain(
            "community count n_c",
            format!("{n_c} labels exceed the {} state nodes", shape.state_node_count()),
        ));
    }
    let shared = if spec.shared {
        Some(sample_dirichlet(spec.theta, n_c, rng)?)
    } else {
        None
    };
    let layers = supports
        .iter()
        .map(|g| {
            let mut p = vec![0.0; n_c];
            let draw = match &shared {
                Some(s) => s.clone(),
                None => sample_dirichlet(spec.theta, g.len(), rng)?,
            };
            for (&s, v) in g.iter().zip(draw) {
                p[s - 1] = v;
            }
            Ok(p)
        })
        .collect::<Result<Vec<_>>>()?;
    NullSet::from_probabilities(layers)
}
