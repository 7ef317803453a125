use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::model::shape::{MultilayerShape, StateNode};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub source: StateNode,
    pub target: StateNode,
    pub weight: f64,
}

impl Edge {
    pub fn is_intralayer(&self) -> bool {
        self.source.layer == self.target.layer
    }
}

/// Edges between state nodes of a fully interconnected multilayer network.
///
/// Undirected edges are stored once with `source <= target` in (layer, node) order.
/// Edges are kept sorted by (source layer, target layer, source node, target node).
#[derive(Debug, Clone, PartialEq)]
pub struct MultilayerNetwork {
    shape: MultilayerShape,
    directed: bool,
    edges: Vec<Edge>,
}

fn sort_key(e: &Edge) -> (usize, usize, usize, usize) {
    (e.source.layer, e.target.layer, e.source.node, e.target.node)
}

impl MultilayerNetwork {
    /// Validates and canonicalizes `edges`: bounds, no self-loops, no duplicates.
    pub fn new(shape: MultilayerShape, directed: bool, edges: Vec<Edge>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for mut e in edges {
            shape.check_state_node(e.source)?;
            shape.check_state_node(e.target)?;
            if e.source == e.target {
                return Err(Error::domain(
                    "edge",
                    format!("self-loop on {:?}", e.source),
                ));
            }
            if !e.weight.is_finite() {
                return Err(Error::domain("edge weight", "must be finite"));
            }
            if !directed && (e.target.layer, e.target.node) < (e.source.layer, e.source.node) {
                std::mem::swap(&mut e.source, &mut e.target);
            }
            out.push(e);
        }
        out.sort_by_key(sort_key);
        if let Some(w) = out.windows(2).find(|w| sort_key(&w[0]) == sort_key(&w[1])) {
            return Err(Error::domain(
                "edge",
                format!("duplicate edge {:?} -> {:?}", w[0].source, w[0].target),
            ));
        }
        Ok(MultilayerNetwork {
            shape,
            directed,
            edges: out,
        })
    }

    pub fn shape(&self) -> &MultilayerShape {
        &self.shape
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `E_L`
    pub fn intralayer_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.is_intralayer())
    }

    /// `E_C`
    pub fn interlayer_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| !e.is_intralayer())
    }

    /// Number of edges in layer `layer`.
    pub fn layer_edge_count(&self, layer: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.source.layer == layer && e.target.layer == layer)
            .count()
    }

    /// Layer-`to`-specific out-degree of every node in layer `from`: `k_{i,from}^{to}`.
    /// For undirected networks this equals the in-degree accessor.
    pub fn out_degrees(&self, from: usize, to: usize) -> Vec<f64> {
        let mut k = vec![0.0; self.shape.nodes()];
        for e in &self.edges {
            if e.source.layer == from && e.target.layer == to {
                k[e.source.node] += e.weight;
            }
            if !self.directed && e.target.layer == from && e.source.layer == to {
                k[e.target.node] += e.weight;
            }
        }
        k
    }

    /// Layer-`from`-specific in-degree of every node in layer `to`: `k_{from}^{j,to}`.
    pub fn in_degrees(&self, from: usize, to: usize) -> Vec<f64> {
        let mut k = vec![0.0; self.shape.nodes()];
        for e in &self.edges {
            if e.source.layer == from && e.target.layer == to {
                k[e.target.node] += e.weight;
            }
            if !self.directed && e.target.layer == from && e.source.layer == to {
                k[e.source.node] += e.weight;
            }
        }
        k
    }

    /// Intralayer degree of every node in `layer`.
    pub fn intralayer_degrees(&self, layer: usize) -> Vec<f64> {
        self.out_degrees(layer, layer)
    }

    /// Supra-adjacency entries `(row, column, weight)` in supra-index coordinates.
    /// Undirected edges appear in both orientations.
    pub fn supra_adjacency(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::with_capacity(self.edges.len() * 2);
        for e in &self.edges {
            let (a, b) = (
                self.shape.supra_index(e.source),
                self.shape.supra_index(e.target),
            );
            out.push((a, b, e.weight));
            if !self.directed {
                out.push((b, a, e.weight));
            }
        }
        out.sort_by_key(|x| (x.0, x.1));
        out
    }

    pub fn contains(&self, a: StateNode, b: StateNode) -> bool {
        let (a, b) = if !self.directed && (b.layer, b.node) < (a.layer, a.node) {
            (b, a)
        } else {
            (a, b)
        };
        let key = (a.layer, b.layer, a.node, b.node);
        self.edges.binary_search_by_key(&key, sort_key).is_ok()
    }

    /// Set of unordered (undirected) or ordered (directed) endpoint pairs.
    pub fn edge_set(&self) -> HashSet<(StateNode, StateNode)> {
        self.edges.iter().map(|e| (e.source, e.target)).collect()
    }
}
