use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::detection::modularity::{ModularityConfig, ModularityGraph};
use crate::error::{Error, Result};
use crate::model::{MultilayerNetwork, MultilayerPartition};

// Gains at or below this are treated as no improvement.
const GAIN_EPS: f64 = 1e-12;

/// How phase 1 picks among the moves that increase modularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveRule {
    /// Largest gain; ties go to the lowest community id. Visits nodes in index order.
    #[serde(rename = "genlouvain")]
    MaxGain,
    /// Random positive-gain move with probability proportional to its gain.
    /// Visits nodes in a fresh random order every sweep.
    #[serde(rename = "genlouvainrand")]
    ProportionalGain,
}

impl MoveRule {
    pub fn name(&self) -> &'static str {
        match self {
            MoveRule::MaxGain => "genlouvain",
            MoveRule::ProportionalGain => "genlouvainrand",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "genlouvain" => Ok(MoveRule::MaxGain),
            "genlouvainrand" => Ok(MoveRule::ProportionalGain),
            other => Err(Error::domain(
                "rule",
                format!("unknown rule {other:?}; expected genlouvain or genlouvainrand"),
            )),
        }
    }
}

/// Result of one optimization run.
#[derive(Debug, Clone, PartialEq)]
pub struct LouvainResult {
    pub partition: MultilayerPartition,
    /// Modularity after each level, starting with the singleton partition.
    pub trace: Vec<f64>,
}

impl LouvainResult {
    pub fn modularity(&self) -> f64 {
        *self.trace.last().expect("trace starts with the singleton value")
    }
}

/// Picks a target among `(community, gain)` candidates, all with positive gain and
/// sorted by community id. Returns `None` when there are none.
pub(crate) fn choose_move<R: Rng + ?Sized>(
    rule: MoveRule,
    candidates: &[(usize, f64)],
    rng: &mut R,
) -> Option<usize> {
    match rule {
        MoveRule::MaxGain => {
            let mut best: Option<(usize, f64)> = None;
            for &(c, g) in candidates {
                if best.is_none_or(|(_, b)| g > b) {
                    best = Some((c, g));
                }
            }
            best.map(|(c, _)| c)
        }
        MoveRule::ProportionalGain => {
            let total: f64 = candidates.iter().map(|&(_, g)| g).sum();
            if candidates.is_empty() {
                return None;
            }
            if candidates.len() == 1 {
                return Some(candidates[0].0);
            }
            let mut x = rng.random::<f64>() * total;
            for &(c, g) in candidates {
                if x < g {
                    return Some(c);
                }
                x -= g;
            }
            candidates.last().map(|&(c, _)| c)
        }
    }
}

/// Local moving on `graph` from the singleton partition. Returns the community id
/// of every node and whether any node moved.
fn local_moves<R: Rng + ?Sized>(
    graph: &ModularityGraph,
    rule: MoveRule,
    rng: &mut R,
) -> (Vec<usize>, bool) {
    let count = graph.node_count();
    let l = graph.layer_count();
    let scale = graph.layer_scale();
    let mut comm: Vec<usize> = (0..count).collect();
    let mut totals = vec![0.0; count * l];
    for u in 0..count {
        for &(a, d) in graph.layer_degrees(u) {
            totals[u * l + a] += d;
        }
    }
    let mut weight_to = vec![0.0; count];
    let mut seen = vec![false; count];
    let mut touched: Vec<usize> = Vec::new();
    let mut candidates: Vec<(usize, f64)> = Vec::new();
    let mut order: Vec<usize> = (0..count).collect();
    let mut any_move = false;
    loop {
        if rule == MoveRule::ProportionalGain {
            order.shuffle(rng);
        }
        let mut moved = false;
        for &u in &order {
            let own = comm[u];
            let degrees = graph.layer_degrees(u);
            for &(a, d) in degrees {
                totals[own * l + a] -= d;
            }
            touched.clear();
            touched.push(own);
            seen[own] = true;
            for &(v, w) in graph.neighbors(u) {
                let c = comm[v];
                if !seen[c] {
                    seen[c] = true;
                    touched.push(c);
                }
                weight_to[c] += w;
            }
            touched.sort_unstable();
            let gain = |c: usize, weight_to: &[f64]| {
                let null: f64 = degrees.iter().map(|&(a, d)| scale[a] * d * totals[c * l + a]).sum();
                weight_to[c] - null
            };
            let stay = gain(own, &weight_to);
            candidates.clear();
            for &c in &touched {
                if c != own {
                    let delta = gain(c, &weight_to) - stay;
                    if delta > GAIN_EPS {
                        candidates.push((c, delta));
                    }
                }
            }
            let target = choose_move(rule, &candidates, rng).unwrap_or(own);
            for &c in &touched {
                weight_to[c] = 0.0;
                seen[c] = false;
            }
            for &(a, d) in degrees {
                totals[target * l + a] += d;
            }
            if target != own {
                comm[u] = target;
                moved = true;
                any_move = true;
            }
        }
        if !moved {
            break;
        }
    }
    (comm, any_move)
}

// Renumbers community ids to 0..count preserving their order.
fn compact(comm: &[usize]) -> (Vec<usize>, usize) {
    let mut ids: Vec<usize> = comm.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mapped = comm
        .iter()
        .map(|c| ids.binary_search(c).expect("id collected above"))
        .collect();
    (mapped, ids.len())
}

/// Two-phase Louvain maximization of multilayer modularity.
pub fn genlouvain<R: Rng + ?Sized>(
    network: &MultilayerNetwork,
    config: &ModularityConfig,
    rule: MoveRule,
    rng: &mut R,
) -> Result<LouvainResult> {
    let base = ModularityGraph::from_network(network, config)?;
    let mut membership: Vec<usize> = (0..base.node_count()).collect();
    let mut trace = vec![base.quality(&membership)];
    let mut graph = base;
    loop {
        let (comm, moved) = local_moves(&graph, rule, rng);
        if !moved {
            break;
        }
        let (comm, count) = compact(&comm);
        let q = graph.quality(&comm);
        debug_assert!(q >= trace.last().copied().unwrap_or(f64::NEG_INFINITY) - 1e-9);
        trace.push(q);
        for m in membership.iter_mut() {
            *m = comm[*m];
        }
        if count == graph.node_count() {
            break;
        }
        graph = graph.aggregate(&comm, count);
    }
    let labels = membership.iter().map(|&m| m + 1).collect();
    let partition = MultilayerPartition::from_labels(network.shape().clone(), labels)?.canonical();
    Ok(LouvainResult { partition, trace })
}
