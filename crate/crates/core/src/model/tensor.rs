use crate::error::{Error, Result};
use crate::model::shape::{MultilayerShape, StateNode};

/// Absolute slack allowed when checking that incoming copy mass is at most one.
pub const MASS_TOLERANCE: f64 = 1e-12;

/// Copying probabilities into each state node.
///
/// Implemented by the node-level [`InterlayerDependencyTensor`] and by the
/// layer-coupled [`LayerDependencyTensor`].
pub trait CopyStructure: Sync {
    fn shape(&self) -> &MultilayerShape;

    /// Calls `f(source, weight)` for every state node `target` may copy from,
    /// in a fixed order.
    fn for_each_source(&self, target: StateNode, f: &mut dyn FnMut(StateNode, f64));

    /// `p̂` for `target`.
    fn incoming_mass(&self, target: StateNode) -> f64 {
        let mut total = 0.0;
        self.for_each_source(target, &mut |_, w| total += w);
        total
    }
}

/// Node-level interlayer dependency tensor `P`, stored as sparse triplets grouped by target.
#[derive(Debug, Clone, PartialEq)]
pub struct InterlayerDependencyTensor {
    shape: MultilayerShape,
    // CSR over targets in supra-index order
    offsets: Vec<usize>,
    sources: Vec<(StateNode, f64)>,
}

impl InterlayerDependencyTensor {
    /// Builds `P` from `(source, target, weight)` entries. Zero weights are dropped;
    /// repeated pairs are summed.
    pub fn from_entries(
        shape: MultilayerShape,
        entries: impl IntoIterator<Item = (StateNode, StateNode, f64)>,
    ) -> Result<Self> {
        let mut triplets = Vec::new();
        for (src, tgt, w) in entries {
            shape.check_state_node(src)?;
            shape.check_state_node(tgt)?;
            if !(w.is_finite() && (0.0..=1.0).contains(&w)) {
                return Err(Error::domain(
                    "copy probability",
                    format!("{w} for ({src:?} -> {tgt:?}) is outside [0, 1]"),
                ));
            }
            if w == 0.0 {
                continue;
            }
            if src.layer == tgt.layer {
                return Err(Error::domain(
                    "copy probability",
                    format!("intralayer entry {src:?} -> {tgt:?}; copying is only between layers"),
                ));
            }
            triplets.push((shape.supra_index(tgt), shape.supra_index(src), w));
        }
        triplets.sort_by_key(|t| (t.0, t.1));
        let mut merged: Vec<(usize, usize, f64)> = Vec::with_capacity(triplets.len());
        for t in triplets {
            match merged.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 += t.2,
                _ => merged.push(t),
            }
        }

        let total = shape.state_node_count();
        let mut offsets = vec![0usize; total + 1];
        for &(tgt, _, _) in &merged {
            offsets[tgt + 1] += 1;
        }
        for i in 0..total {
            offsets[i + 1] += offsets[i];
        }
        let sources: Vec<(StateNode, f64)> = merged
            .iter()
            .map(|&(_, src, w)| (shape.state_node_at(src), w))
            .collect();

        for tgt in 0..total {
            let mass: f64 = sources[offsets[tgt]..offsets[tgt + 1]]
                .iter()
                .map(|s| s.1)
                .sum();
            if mass > 1.0 + MASS_TOLERANCE {
                let s = shape.state_node_at(tgt);
                return Err(Error::CopyMass {
                    location: format!("state node (node {}, layer {})", s.node + 1, s.layer + 1),
                    mass,
                });
            }
        }
        Ok(InterlayerDependencyTensor {
            shape,
            offsets,
            sources,
        })
    }

    pub fn nonzero_count(&self) -> usize {
        self.sources.len()
    }

    /// All entries as `(source, target, weight)`, ordered by target then source.
    pub fn entries(&self) -> Vec<(StateNode, StateNode, f64)> {
        let mut out = Vec::with_capacity(self.sources.len());
        for tgt in 0..self.shape.state_node_count() {
            let t = self.shape.state_node_at(tgt);
            for &(s, w) in &self.sources[self.offsets[tgt]..self.offsets[tgt + 1]] {
                out.push((s, t, w));
            }
        }
        out
    }
}

impl CopyStructure for InterlayerDependencyTensor {
    fn shape(&self) -> &MultilayerShape {
        &self.shape
    }

    fn for_each_source(&self, target: StateNode, f: &mut dyn FnMut(StateNode, f64)) {
        let t = self.shape.supra_index(target);
        for &(s, w) in &self.sources[self.offsets[t]..self.offsets[t + 1]] {
            f(s, w);
        }
    }
}

/// Layer-coupled dependency tensor `P̃`: `P_{i,α}^{j,β} = δ(i,j) P̃_α^β`.
///
/// Dense `l × l`, row = source layer, column = target layer.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerDependencyTensor {
    shape: MultilayerShape,
    matrix: Vec<f64>,
    // nonzero (source layer, weight) per target layer, ascending source
    incoming: Vec<Vec<(usize, f64)>>,
}

impl LayerDependencyTensor {
    /// Wraps a dense row-major `l × l` matrix (row = source, column = target).
    ///
    /// Rejects negative or non-finite entries, a nonzero diagonal and targets whose
    /// incoming mass exceeds one. Causal ordering is not enforced here; see
    /// [`crate::dependency::validate`].
    pub fn from_matrix(shape: MultilayerShape, matrix: Vec<f64>) -> Result<Self> {
        let l = shape.layer_count();
        if matrix.len() != l * l {
            return Err(Error::ShapeMismatch(format!(
                "layer dependency matrix has {} entries, expected {}x{}",
                matrix.len(),
                l,
                l
            )));
        }
        if let Some(pos) = matrix
            .iter()
            .position(|w| !(w.is_finite() && (0.0..=1.0).contains(w)))
        {
            return Err(Error::domain(
                "copy probability",
                format!(
                    "entry ({}, {}) = {} is outside [0, 1]",
                    pos / l + 1,
                    pos % l + 1,
                    matrix[pos]
                ),
            ));
        }
        for a in 0..l {
            if matrix[a * l + a] != 0.0 {
                return Err(Error::domain(
                    "copy probability",
                    format!("diagonal entry for layer {} must be zero", a + 1),
                ));
            }
        }
        let tensor = Self::unchecked(shape, matrix);
        for b in 0..l {
            let mass = tensor.incoming_layer_mass(b);
            if mass > 1.0 + MASS_TOLERANCE {
                return Err(Error::CopyMass {
                    location: format!("layer {}", tensor.shape.layer_label(b)),
                    mass,
                });
            }
        }
        Ok(tensor)
    }

    pub(crate) fn unchecked(shape: MultilayerShape, matrix: Vec<f64>) -> Self {
        let l = shape.layer_count();
        let incoming = (0..l)
            .map(|b| {
                (0..l)
                    .filter_map(|a| {
                        let w = matrix[a * l + b];
                        (w != 0.0).then_some((a, w))
                    })
                    .collect()
            })
            .collect();
        LayerDependencyTensor {
            shape,
            matrix,
            incoming,
        }
    }

    pub fn zeros(shape: MultilayerShape) -> Self {
        let l = shape.layer_count();
        Self::unchecked(shape, vec![0.0; l * l])
    }

    pub fn layer_count(&self) -> usize {
        self.shape.layer_count()
    }

    /// `P̃_α^β` for flat source `from` and flat target `to`.
    pub fn get(&self, from: usize, to: usize) -> f64 {
        self.matrix[from * self.layer_count() + to]
    }

    pub fn matrix(&self) -> &[f64] {
        &self.matrix
    }

    /// `p̂_β = Σ_α P̃_α^β`.
    pub fn incoming_layer_mass(&self, to: usize) -> f64 {
        self.incoming[to].iter().map(|&(_, w)| w).sum()
    }

    pub fn incoming_layers(&self, to: usize) -> &[(usize, f64)] {
        &self.incoming[to]
    }

    pub fn nonzero_count(&self) -> usize {
        self.incoming.iter().map(Vec::len).sum()
    }

    /// Node-level tensor with `P_{i,α}^{j,β} = δ(i,j) P̃_α^β`.
    pub fn expand(&self) -> Result<InterlayerDependencyTensor> {
        let n = self.shape.nodes();
        let entries = (0..self.layer_count()).flat_map(|b| {
            self.incoming[b].iter().flat_map(move |&(a, w)| {
                (0..n).map(move |i| (StateNode::new(i, a), StateNode::new(i, b), w))
            })
        });
        InterlayerDependencyTensor::from_entries(self.shape.clone(), entries)
    }
}

impl CopyStructure for LayerDependencyTensor {
    fn shape(&self) -> &MultilayerShape {
        &self.shape
    }

    fn for_each_source(&self, target: StateNode, f: &mut dyn FnMut(StateNode, f64)) {
        for &(a, w) in &self.incoming[target.layer] {
            f(StateNode::new(target.node, a), w);
        }
    }

    fn incoming_mass(&self, target: StateNode) -> f64 {
        self.incoming_layer_mass(target.layer)
    }
}

impl MultilayerShape {
    /// Human-readable 1-based layer label, e.g. `(2,3)`.
    pub fn layer_label(&self, flat: usize) -> String {
        match self.unflatten(flat) {
            Ok(c) => {
                let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", parts.join(","))
            }
            Err(_) => format!("#{flat}"),
        }
    }
}
