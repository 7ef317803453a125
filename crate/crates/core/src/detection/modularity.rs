use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{MultilayerNetwork, MultilayerPartition};

/// Which layer pairs are joined by interlayer coupling edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CouplingTopology {
    /// Consecutive layers `(α, α + 1)`.
    #[default]
    Ordinal,
    /// Every pair of layers.
    Categorical,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModularityConfig {
    /// Interlayer coupling `ω`.
    pub omega: f64,
    #[serde(default)]
    pub topology: CouplingTopology,
    /// Resolution `γ`, shared by all layers.
    #[serde(default = "unit")]
    pub gamma: f64,
}

fn unit() -> f64 {
    1.0
}

impl ModularityConfig {
    pub fn ordinal(omega: f64) -> Self {
        ModularityConfig {
            omega,
            topology: CouplingTopology::Ordinal,
            gamma: 1.0,
        }
    }

    pub fn categorical(omega: f64) -> Self {
        ModularityConfig {
            omega,
            topology: CouplingTopology::Categorical,
            gamma: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega.is_finite() && self.omega >= 0.0) {
            return Err(Error::domain("ω", format!("{} must be finite and non-negative", self.omega)));
        }
        if !(self.gamma.is_finite() && self.gamma > 0.0) {
            return Err(Error::domain("γ", format!("{} must be positive", self.gamma)));
        }
        Ok(())
    }
}

/// Weighted graph with a per-layer configuration null model, as seen by the
/// Louvain heuristics. Nodes are state nodes at the first level and groups of them
/// after aggregation.
#[derive(Debug, Clone, PartialEq)]
pub struct ModularityGraph {
    // symmetric, no self entries
    adjacency: Vec<Vec<(usize, f64)>>,
    // ordered sum of weights inside each node
    self_weight: Vec<f64>,
    // sparse (layer, degree) per node, ascending layer
    layer_degrees: Vec<Vec<(usize, f64)>>,
    // γ / (2 m_α), zero for empty layers
    layer_scale: Vec<f64>,
    // 2 μ_tot
    total: f64,
}

impl ModularityGraph {
    /// One node per state node, in supra-index order.
    pub fn from_network(network: &MultilayerNetwork, config: &ModularityConfig) -> Result<Self> {
        config.validate()?;
        let shape = network.shape();
        if shape.aspects().len() != 1 {
            return Err(Error::Unsupported(
                "multilayer modularity needs a single-aspect shape".into(),
            ));
        }
        if network.is_directed() {
            return Err(Error::Unsupported("multilayer modularity needs an undirected network".into()));
        }
        if network.interlayer_edges().next().is_some() {
            return Err(Error::Unsupported(
                "multilayer modularity takes intralayer edges only".into(),
            ));
        }
        let (n, l) = (shape.nodes(), shape.layer_count());
        let mut adjacency = vec![Vec::new(); n * l];
        let mut degree = vec![0.0; n * l];
        let mut two_m = vec![0.0; l];
        for e in network.edges() {
            let (a, b) = (shape.supra_index(e.source), shape.supra_index(e.target));
            adjacency[a].push((b, e.weight));
            adjacency[b].push((a, e.weight));
            degree[a] += e.weight;
            degree[b] += e.weight;
            two_m[e.source.layer] += 2.0 * e.weight;
        }
        let mut coupled_pairs = 0usize;
        if config.omega > 0.0 {
            let pairs: Vec<(usize, usize)> = match config.topology {
                CouplingTopology::Ordinal => (1..l).map(|b| (b - 1, b)).collect(),
                CouplingTopology::Categorical => {
                    (0..l).flat_map(|a| (a + 1..l).map(move |b| (a, b))).collect()
                }
            };
            for &(a, b) in &pairs {
                for i in 0..n {
                    adjacency[a * n + i].push((b * n + i, config.omega));
                    adjacency[b * n + i].push((a * n + i, config.omega));
                }
            }
            coupled_pairs = pairs.len() * n;
        }
        let total = two_m.iter().sum::<f64>() + 2.0 * config.omega * coupled_pairs as f64;
        for row in &mut adjacency {
            row.sort_by_key(|&(v, _)| v);
        }
        let layer_degrees = degree
            .iter()
            .enumerate()
            .map(|(u, &k)| if k != 0.0 { vec![(u / n, k)] } else { Vec::new() })
            .collect();
        let layer_scale = two_m
            .iter()
            .map(|&m| if m > 0.0 { config.gamma / m } else { 0.0 })
            .collect();
        Ok(ModularityGraph {
            adjacency,
            self_weight: vec![0.0; n * l],
            layer_degrees,
            layer_scale,
            total,
        })
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn layer_count(&self) -> usize {
        self.layer_scale.len()
    }

    /// `2 μ_tot`, total edge weight including couplings, counted in both directions.
    pub fn total_weight(&self) -> f64 {
        self.total
    }

    pub(crate) fn neighbors(&self, u: usize) -> &[(usize, f64)] {
        &self.adjacency[u]
    }

    pub(crate) fn layer_degrees(&self, u: usize) -> &[(usize, f64)] {
        &self.layer_degrees[u]
    }

    pub(crate) fn layer_scale(&self) -> &[f64] {
        &self.layer_scale
    }

    /// Modularity of `assignment` (community id per node, any non-negative ids).
    pub fn quality(&self, assignment: &[usize]) -> f64 {
        assert_eq!(assignment.len(), self.node_count(), "one community per node");
        if self.total == 0.0 {
            return 0.0;
        }
        let c = assignment.iter().max().map_or(0, |&m| m + 1);
        let l = self.layer_count();
        let mut k = vec![0.0; c * l];
        let mut inside = 0.0;
        for u in 0..self.node_count() {
            let cu = assignment[u];
            inside += self.self_weight[u];
            for &(v, w) in &self.adjacency[u] {
                if assignment[v] == cu {
                    inside += w;
                }
            }
            for &(a, d) in &self.layer_degrees[u] {
                k[cu * l + a] += d;
            }
        }
        let null: f64 = k
            .iter()
            .enumerate()
            .map(|(idx, &x)| self.layer_scale[idx % l] * x * x)
            .sum();
        (inside - null) / self.total
    }

    /// Graph with one node per community; `assignment` must use ids `0..count`.
    pub fn aggregate(&self, assignment: &[usize], count: usize) -> ModularityGraph {
        let l = self.layer_count();
        let mut self_weight = vec![0.0; count];
        let mut dense_degrees = vec![0.0; count * l];
        let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); count];
        for u in 0..self.node_count() {
            let cu = assignment[u];
            self_weight[cu] += self.self_weight[u];
            for &(v, w) in &self.adjacency[u] {
                let cv = assignment[v];
                if cv == cu {
                    self_weight[cu] += w;
                } else {
                    rows[cu].push((cv, w));
                }
            }
            for &(a, d) in &self.layer_degrees[u] {
                dense_degrees[cu * l + a] += d;
            }
        }
        let adjacency = rows
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|&(v, _)| v);
                let mut merged: Vec<(usize, f64)> = Vec::with_capacity(r.len());
                for (v, w) in r {
                    match merged.last_mut() {
                        Some(last) if last.0 == v => last.1 += w,
                        _ => merged.push((v, w)),
                    }
                }
                merged
            })
            .collect();
        let layer_degrees = (0..count)
            .map(|c| {
                (0..l)
                    .filter_map(|a| {
                        let d = dense_degrees[c * l + a];
                        (d != 0.0).then_some((a, d))
                    })
                    .collect()
            })
            .collect();
        ModularityGraph {
            adjacency,
            self_weight,
            layer_degrees,
            layer_scale: self.layer_scale.clone(),
            total: self.total,
        }
    }
}

/// Multilayer modularity of `partition` on `network` with uniform diagonal coupling.
pub fn multilayer_modularity(
    partition: &MultilayerPartition,
    network: &MultilayerNetwork,
    config: &ModularityConfig,
) -> Result<f64> {
    if partition.shape() != network.shape() {
        return Err(Error::ShapeMismatch(
            "partition and network have different shapes".into(),
        ));
    }
    let graph = ModularityGraph::from_network(network, config)?;
    Ok(graph.quality(partition.labels()))
}
