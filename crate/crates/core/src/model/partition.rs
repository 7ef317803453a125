use crate::error::{Error, Result};
use crate::model::shape::{MultilayerShape, StateNode};

/// Community assignment for every state node.
///
/// Labels are positive integers. Storage is layer-major, so the partition induced on
/// a layer is a contiguous slice indexed by node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilayerPartition {
    shape: MultilayerShape,
    labels: Vec<usize>,
}

impl MultilayerPartition {
    /// Every state node in one community.
    pub fn constant(shape: MultilayerShape, label: usize) -> Result<Self> {
        let n = shape.state_node_count();
        Self::from_labels(shape, vec![label; n])
    }

    /// Labels in supra-index order (layer-major, then node).
    pub fn from_labels(shape: MultilayerShape, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != shape.state_node_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for {} state nodes",
                labels.len(),
                shape.state_node_count()
            )));
        }
        if let Some(pos) = labels.iter().position(|&s| s == 0) {
            return Err(Error::domain(
                "community label",
                format!("labels are positive integers, state node {pos} has 0"),
            ));
        }
        Ok(MultilayerPartition { shape, labels })
    }

    /// Builds a partition from one induced partition per flat layer.
    pub fn from_layers(shape: MultilayerShape, layers: Vec<Vec<usize>>) -> Result<Self> {
        if layers.len() != shape.layer_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} layers given for shape with {}",
                layers.len(),
                shape.layer_count()
            )));
        }
        if layers.iter().any(|l| l.len() != shape.nodes()) {
            return Err(Error::ShapeMismatch(
                "induced partition length differs from node count".into(),
            ));
        }
        Self::from_labels(shape, layers.concat())
    }

    pub fn shape(&self) -> &MultilayerShape {
        &self.shape
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, s: StateNode) -> usize {
        self.labels[self.shape.supra_index(s)]
    }

    pub(crate) fn set_label(&mut self, s: StateNode, label: usize) {
        let idx = self.shape.supra_index(s);
        self.labels[idx] = label;
    }

    /// `S|_α`: labels of all nodes in flat layer `layer`.
    pub fn induced(&self, layer: usize) -> &[usize] {
        let n = self.shape.nodes();
        &self.labels[layer * n..(layer + 1) * n]
    }

    /// Largest label in use.
    pub fn max_label(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct labels across all layers.
    pub fn community_count(&self) -> usize {
        let mut seen: Vec<usize> = self.labels.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Relabels communities `1..=c` in order of first appearance.
    pub fn canonical(&self) -> MultilayerPartition {
        let mut map = std::collections::HashMap::new();
        let labels = self
            .labels
            .iter()
            .map(|&s| {
                let next = map.len() + 1;
                *map.entry(s).or_insert(next)
            })
            .collect();
        MultilayerPartition {
            shape: self.shape.clone(),
            labels,
        }
    }
}

/// Induced partition of `partition` on layer `layer`, as an owned vector.
pub fn induced_partition(partition: &MultilayerPartition, layer: usize) -> Result<Vec<usize>> {
    let l = partition.shape().layer_count();
    if layer >= l {
        return Err(Error::OutOfBounds {
            what: "layer",
            value: layer,
            bound: l,
        });
    }
    Ok(partition.induced(layer).to_vec())
}
