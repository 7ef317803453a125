use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether the elements of an aspect carry an order (time) or not (platform, relation type).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AspectOrdering {
    Ordered,
    Unordered,
}

/// One dimension of the layer structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AspectSpec {
    pub size: usize,
    pub ordering: AspectOrdering,
}

impl AspectSpec {
    pub fn ordered(size: usize) -> Self {
        AspectSpec {
            size,
            ordering: AspectOrdering::Ordered,
        }
    }

    pub fn unordered(size: usize) -> Self {
        AspectSpec {
            size,
            ordering: AspectOrdering::Unordered,
        }
    }

    pub fn is_ordered(&self) -> bool {
        self.ordering == AspectOrdering::Ordered
    }
}

/// A layer, given by one 0-based coordinate per aspect together with its flat index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LayerIndex {
    coords: Vec<usize>,
    flat: usize,
}

impl LayerIndex {
    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn flat(&self) -> usize {
        self.flat
    }
}

/// A (node, layer) pair. Both indices are 0-based; `layer` is the flat layer index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateNode {
    pub node: usize,
    pub layer: usize,
}

impl StateNode {
    pub fn new(node: usize, layer: usize) -> Self {
        StateNode { node, layer }
    }
}

/// Node count plus the aspect structure of a fully interconnected multilayer network.
///
/// Layers are flattened in mixed radix with the first aspect varying fastest, so for
/// aspects `(l_1, l_2)` the layer `(a_1, a_2)` has flat index `a_1 + l_1 * a_2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ShapeFields")]
pub struct MultilayerShape {
    nodes: usize,
    aspects: Vec<AspectSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ShapeFields {
    nodes: usize,
    aspects: Vec<AspectSpec>,
}

impl TryFrom<ShapeFields> for MultilayerShape {
    type Error = Error;

    fn try_from(f: ShapeFields) -> Result<Self> {
        MultilayerShape::new(f.nodes, f.aspects)
    }
}

impl MultilayerShape {
    pub fn new(nodes: usize, aspects: Vec<AspectSpec>) -> Result<Self> {
        if nodes == 0 {
            return Err(Error::domain("node count", "must be at least 1"));
        }
        if aspects.is_empty() {
            return Err(Error::domain("aspects", "at least one aspect is required"));
        }
        if let Some(pos) = aspects.iter().position(|a| a.size == 0) {
            return Err(Error::domain(
                "aspects",
                format!("aspect {} has size 0", pos + 1),
            ));
        }
        aspects
            .iter()
            .try_fold(1usize, |acc, a| acc.checked_mul(a.size))
            .and_then(|l| l.checked_mul(nodes))
            .ok_or_else(|| Error::domain("shape", "state-node count overflows usize"))?;
        Ok(MultilayerShape { nodes, aspects })
    }

    /// Single ordered aspect with `layers` elements.
    pub fn temporal(nodes: usize, layers: usize) -> Result<Self> {
        Self::new(nodes, vec![AspectSpec::ordered(layers)])
    }

    /// Single unordered aspect with `layers` elements.
    pub fn multiplex(nodes: usize, layers: usize) -> Result<Self> {
        Self::new(nodes, vec![AspectSpec::unordered(layers)])
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn aspects(&self) -> &[AspectSpec] {
        &self.aspects
    }

    pub fn layer_count(&self) -> usize {
        self.aspects.iter().map(|a| a.size).product()
    }

    pub fn state_node_count(&self) -> usize {
        self.nodes * self.layer_count()
    }

    /// No unordered aspects, so one ordered sweep suffices for sampling.
    pub fn is_fully_ordered(&self) -> bool {
        self.aspects.iter().all(AspectSpec::is_ordered)
    }

    pub fn flatten(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.aspects.len() {
            return Err(Error::ShapeMismatch(format!(
                "layer index has {} coordinates, shape has {} aspects",
                coords.len(),
                self.aspects.len()
            )));
        }
        let mut flat = 0;
        let mut stride = 1;
        for (&c, aspect) in coords.iter().zip(&self.aspects) {
            if c >= aspect.size {
                return Err(Error::OutOfBounds {
                    what: "aspect coordinate",
                    value: c,
                    bound: aspect.size,
                });
            }
            flat += c * stride;
            stride *= aspect.size;
        }
        Ok(flat)
    }

    pub fn unflatten(&self, flat: usize) -> Result<Vec<usize>> {
        let l = self.layer_count();
        if flat >= l {
            return Err(Error::OutOfBounds {
                what: "flat layer index",
                value: flat,
                bound: l,
            });
        }
        let mut rest = flat;
        Ok(self
            .aspects
            .iter()
            .map(|a| {
                let c = rest % a.size;
                rest /= a.size;
                c
            })
            .collect())
    }

    pub fn layer(&self, coords: &[usize]) -> Result<LayerIndex> {
        let flat = self.flatten(coords)?;
        Ok(LayerIndex {
            coords: coords.to_vec(),
            flat,
        })
    }

    pub fn layer_at(&self, flat: usize) -> Result<LayerIndex> {
        let coords = self.unflatten(flat)?;
        Ok(LayerIndex { coords, flat })
    }

    /// Layer from 1-based coordinates, as written in files and configs.
    pub fn layer_one_based(&self, coords: &[usize]) -> Result<LayerIndex> {
        if coords.contains(&0) {
            return Err(Error::domain("layer index", "coordinates are 1-based"));
        }
        let zero: Vec<usize> = coords.iter().map(|c| c - 1).collect();
        self.layer(&zero)
    }

    /// `a ⪯ b`: every ordered coordinate of `a` is at most that of `b`.
    pub fn precedes_or_equal(&self, a: usize, b: usize) -> bool {
        let (ca, cb) = match (self.unflatten(a), self.unflatten(b)) {
            (Ok(ca), Ok(cb)) => (ca, cb),
            _ => return false,
        };
        self.aspects
            .iter()
            .zip(ca.iter().zip(&cb))
            .all(|(asp, (x, y))| !asp.is_ordered() || x <= y)
    }

    /// Flat layer indices in an order that is a linear extension of `⪯`.
    ///
    /// Layers are sorted by their ordered coordinates, slowest aspect first, with the
    /// flat index breaking ties; componentwise `≤` implies lexicographic `≤`.
    pub fn update_order(&self) -> Vec<usize> {
        let mut keyed: Vec<(Vec<usize>, usize)> = (0..self.layer_count())
            .map(|flat| {
                let coords = self.unflatten(flat).expect("flat index in range");
                let key = self
                    .aspects
                    .iter()
                    .zip(coords)
                    .rev()
                    .filter(|(a, _)| a.is_ordered())
                    .map(|(_, c)| c)
                    .collect();
                (key, flat)
            })
            .collect();
        keyed.sort();
        keyed.into_iter().map(|(_, flat)| flat).collect()
    }

    pub fn check_state_node(&self, s: StateNode) -> Result<()> {
        if s.node >= self.nodes {
            return Err(Error::OutOfBounds {
                what: "node",
                value: s.node,
                bound: self.nodes,
            });
        }
        let l = self.layer_count();
        if s.layer >= l {
            return Err(Error::OutOfBounds {
                what: "layer",
                value: s.layer,
                bound: l,
            });
        }
        Ok(())
    }

    /// Index of a state node in the flattened (supra-adjacency) ordering.
    pub fn supra_index(&self, s: StateNode) -> usize {
        s.layer * self.nodes + s.node
    }

    pub fn state_node_at(&self, supra: usize) -> StateNode {
        StateNode {
            node: supra % self.nodes,
            layer: supra / self.nodes,
        }
    }
}
