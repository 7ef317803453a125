//! Layer dependency tensors for the standard benchmark scenarios.
//!
//! All builders produce a [`LayerDependencyTensor`] whose entry `(α, β)` is the
//! probability that a state node in layer `β` copies the label of the same node in
//! layer `α`. Every builder output passes [`validate`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{LayerDependencyTensor, MultilayerShape, MASS_TOLERANCE};

fn check_probability(name: &'static str, p: f64) -> Result<()> {
    if p.is_finite() && (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::domain(name, format!("{p} is outside [0, 1]")))
    }
}

// Totals above one are left to the tensor's incoming-mass check, which names the layer.
fn check_total(name: &'static str, p: f64) -> Result<()> {
    if p.is_finite() && p >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(name, format!("{p} must be finite and nonnegative")))
    }
}

fn single_aspect(shape: &MultilayerShape, what: &str) -> Result<usize> {
    if shape.aspects().len() != 1 {
        return Err(Error::ShapeMismatch(format!(
            "{what} dependencies need a single-aspect shape, got {} aspects",
            shape.aspects().len()
        )));
    }
    Ok(shape.layer_count())
}

/// Consecutive-layer copying: `P̃_α^β = δ(α+1, β) p_β`.
///
/// `p[k]` is the probability that layer `k+1` copies from layer `k` (0-based), so
/// `p.len()` must be `l - 1`.
pub fn build_temporal(shape: &MultilayerShape, p: &[f64]) -> Result<LayerDependencyTensor> {
    let l = single_aspect(shape, "temporal")?;
    if l < 2 {
        return Err(Error::domain("layer count", "temporal dependencies need l >= 2"));
    }
    if p.len() != l - 1 {
        return Err(Error::domain(
            "temporal copy probabilities",
            format!("expected {} values (one per layer after the first), got {}", l - 1, p.len()),
        ));
    }
    let mut m = vec![0.0; l * l];
    for (k, &pk) in p.iter().enumerate() {
        check_probability("temporal copy probability", pk)?;
        m[k * l + k + 1] = pk;
    }
    LayerDependencyTensor::from_matrix(shape.clone(), m)
}

/// Every layer copies from every other layer with probability `p̂ / (l - 1)`.
pub fn build_uniform_multiplex(shape: &MultilayerShape, p_hat: f64) -> Result<LayerDependencyTensor> {
    let l = single_aspect(shape, "multiplex")?;
    if l < 2 {
        return Err(Error::domain("layer count", "multiplex dependencies need l >= 2"));
    }
    check_total("total copy probability p̂", p_hat)?;
    let p = p_hat / (l - 1) as f64;
    let mut m = vec![p; l * l];
    for a in 0..l {
        m[a * l + a] = 0.0;
    }
    LayerDependencyTensor::from_matrix(shape.clone(), m)
}

/// Two aspects: a multiplex aspect of size `l1` (first) and a temporal aspect of size
/// `l2` (second). Layer `(β1, β2)` copies with probability `p[β1][β2]` from each other
/// platform at the same time and from the same platform at the previous time.
pub fn build_temporal_multiplex(
    shape: &MultilayerShape,
    p: &[Vec<f64>],
) -> Result<LayerDependencyTensor> {
    let aspects = shape.aspects();
    if aspects.len() != 2 {
        return Err(Error::ShapeMismatch(format!(
            "temporal-multiplex dependencies need two aspects (multiplex, temporal), got {}",
            aspects.len()
        )));
    }
    let (l1, l2) = (aspects[0].size, aspects[1].size);
    if p.len() != l1 || p.iter().any(|row| row.len() != l2) {
        return Err(Error::domain(
            "temporal-multiplex copy table",
            format!("expected a {l1} x {l2} table"),
        ));
    }
    let l = l1 * l2;
    let mut m = vec![0.0; l * l];
    for (b1, row) in p.iter().enumerate() {
        for (b2, &pb) in row.iter().enumerate() {
            check_probability("temporal-multiplex copy probability", pb)?;
            let to = shape.flatten(&[b1, b2])?;
            for a1 in (0..l1).filter(|&a1| a1 != b1) {
                m[shape.flatten(&[a1, b2])? * l + to] = pb;
            }
            if b2 > 0 {
                m[shape.flatten(&[b1, b2 - 1])? * l + to] = pb;
            }
        }
    }
    LayerDependencyTensor::from_matrix(shape.clone(), m)
}

/// Uniform multiplex copying restricted to blocks of layers.
///
/// `blocks[α]` is the 0-based block id of layer `α` and `p_hat[b]` the total copy
/// probability within block `b`. Cross-block entries are zero.
pub fn build_block_multiplex(
    shape: &MultilayerShape,
    blocks: &[usize],
    p_hat: &[f64],
) -> Result<LayerDependencyTensor> {
    let l = single_aspect(shape, "block multiplex")?;
    if blocks.len() != l {
        return Err(Error::domain(
            "block assignment",
            format!("expected one block id per layer ({l}), got {}", blocks.len()),
        ));
    }
    let mut sizes = vec![0usize; p_hat.len()];
    for &b in blocks {
        if b >= p_hat.len() {
            return Err(Error::domain(
                "block assignment",
                format!("block id {b} has no p̂ (only {} given)", p_hat.len()),
            ));
        }
        sizes[b] += 1;
    }
    for (b, (&ph, &size)) in p_hat.iter().zip(&sizes).enumerate() {
        check_total("block p̂", ph)?;
        if ph > 0.0 && size < 2 {
            return Err(Error::domain(
                "block assignment",
                format!("block {} has {size} layer(s) but p̂ = {ph}", b + 1),
            ));
        }
    }
    let mut m = vec![0.0; l * l];
    for a in 0..l {
        for b in 0..l {
            if a != b && blocks[a] == blocks[b] {
                let blk = blocks[b];
                m[a * l + b] = p_hat[blk] / (sizes[blk] - 1) as f64;
            }
        }
    }
    LayerDependencyTensor::from_matrix(shape.clone(), m)
}

/// Accepts a user matrix (row = source, column = target) if it passes [`validate`].
pub fn build_custom(shape: &MultilayerShape, rows: &[Vec<f64>]) -> Result<LayerDependencyTensor> {
    let l = shape.layer_count();
    if rows.len() != l || rows.iter().any(|r| r.len() != l) {
        return Err(Error::domain(
            "custom dependency matrix",
            format!("expected {l} x {l}"),
        ));
    }
    let m: Vec<f64> = rows.concat();
    let report = validate_matrix(shape, &m)?;
    if let Some(err) = report.into_error(shape) {
        return Err(err);
    }
    LayerDependencyTensor::from_matrix(shape.clone(), m)
}

/// Violation of the causal ordering along one ordered aspect.
#[derive(Debug, Clone, PartialEq)]
pub struct CausalViolation {
    pub from: usize,
    pub to: usize,
    /// 0-based aspect index.
    pub aspect: usize,
}

/// Outcome of [`validate`]; passes iff every list is empty.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    /// `(layer, p̂)` for every target layer whose incoming mass exceeds one.
    pub mass: Vec<(usize, f64)>,
    /// Layers with a nonzero diagonal entry.
    pub diagonal: Vec<usize>,
    pub causal: Vec<CausalViolation>,
    /// Entries outside `[0, 1]`, as `(from, to, value)`.
    pub range: Vec<(usize, usize, f64)>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.mass.is_empty() && self.diagonal.is_empty() && self.causal.is_empty() && self.range.is_empty()
    }

    fn into_error(self, shape: &MultilayerShape) -> Option<Error> {
        if let Some(&(layer, mass)) = self.mass.first() {
            return Some(Error::CopyMass {
                location: format!("layer {}", shape.layer_label(layer)),
                mass,
            });
        }
        if let Some(&(a, b, v)) = self.range.first() {
            return Some(Error::domain(
                "copy probability",
                format!("entry {} -> {} = {v} is outside [0, 1]", shape.layer_label(a), shape.layer_label(b)),
            ));
        }
        if let Some(&layer) = self.diagonal.first() {
            return Some(Error::domain(
                "copy probability",
                format!("layer {} copies from itself", shape.layer_label(layer)),
            ));
        }
        self.causal.first().map(|v| {
            Error::domain(
                "causal ordering",
                format!(
                    "layer {} copies from later layer {} along ordered aspect {}",
                    shape.layer_label(v.to),
                    shape.layer_label(v.from),
                    v.aspect + 1
                ),
            )
        })
    }
}

/// Checks a layer dependency tensor against `shape`.
pub fn validate(tensor: &LayerDependencyTensor, shape: &MultilayerShape) -> Result<ValidationReport> {
    if tensor.layer_count() != shape.layer_count() {
        return Err(Error::ShapeMismatch(format!(
            "tensor has {} layers, shape has {}",
            tensor.layer_count(),
            shape.layer_count()
        )));
    }
    validate_matrix(shape, tensor.matrix())
}

/// Same as [`validate`] for a raw row-major matrix that may not satisfy the
/// [`LayerDependencyTensor`] construction invariants.
///
/// A causal violation is a nonzero entry copying from a layer that is strictly later
/// along some ordered aspect. Copying between layers that agree on every ordered
/// coordinate (e.g. two platforms at the same time) is allowed.
pub fn validate_matrix(shape: &MultilayerShape, m: &[f64]) -> Result<ValidationReport> {
    let l = shape.layer_count();
    if m.len() != l * l {
        return Err(Error::ShapeMismatch(format!(
            "matrix has {} entries, expected {}",
            m.len(),
            l * l
        )));
    }
    let coords: Vec<Vec<usize>> = (0..l).map(|f| shape.unflatten(f)).collect::<Result<_>>()?;
    let mut report = ValidationReport::default();
    for b in 0..l {
        let mut mass = 0.0;
        for a in 0..l {
            let w = m[a * l + b];
            if !(w.is_finite() && (0.0..=1.0).contains(&w)) {
                report.range.push((a, b, w));
            }
            mass += w;
            if w == 0.0 {
                continue;
            }
            if a == b {
                report.diagonal.push(a);
                continue;
            }
            for (k, asp) in shape.aspects().iter().enumerate() {
                if asp.is_ordered() && coords[a][k] > coords[b][k] {
                    report.causal.push(CausalViolation { from: a, to: b, aspect: k });
                }
            }
        }
        if mass > 1.0 + MASS_TOLERANCE {
            report.mass.push((b, mass));
        }
    }
    Ok(report)
}

/// A probability that is either shared by all layers or given per layer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PerLayer {
    Uniform(f64),
    Each(Vec<f64>),
}

/// Configuration form of the dependency builders. Layer and block ids are 1-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DependencySpec {
    /// `p` gives `p_β` for `β = 2..=l` (or one value for all). Layers listed in
    /// `change_points` instead copy with probability `change_point_p`.
    Temporal {
        p: PerLayer,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        change_points: Vec<usize>,
        #[serde(default)]
        change_point_p: f64,
    },
    UniformMultiplex {
        p_hat: f64,
    },
    /// `p` is a scalar or an `l1 x l2` table indexed by (platform, time).
    TemporalMultiplex {
        p: TableOrScalar,
    },
    BlockMultiplex {
        blocks: Vec<usize>,
        p_hat: Vec<f64>,
    },
    Custom {
        matrix: Vec<Vec<f64>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableOrScalar {
    Uniform(f64),
    Table(Vec<Vec<f64>>),
}

impl DependencySpec {
    pub fn build(&self, shape: &MultilayerShape) -> Result<LayerDependencyTensor> {
        match self {
            DependencySpec::Temporal {
                p,
                change_points,
                change_point_p,
            } => {
                let l = shape.layer_count();
                let mut values = match p {
                    PerLayer::Uniform(v) => vec![*v; l.saturating_sub(1)],
                    PerLayer::Each(v) => v.clone(),
                };
                for &cp in change_points {
                    if cp < 2 || cp > l {
                        return Err(Error::domain(
                            "change point",
                            format!("layer {cp} is not in 2..={l}"),
                        ));
                    }
                    if values.len() == l - 1 {
                        values[cp - 2] = *change_point_p;
                    }
                }
                build_temporal(shape, &values)
            }
            DependencySpec::UniformMultiplex { p_hat } => build_uniform_multiplex(shape, *p_hat),
            DependencySpec::TemporalMultiplex { p } => {
                let table = match p {
                    TableOrScalar::Table(t) => t.clone(),
                    TableOrScalar::Uniform(v) => {
                        let a = shape.aspects();
                        if a.len() != 2 {
                            return Err(Error::ShapeMismatch(
                                "temporal-multiplex dependencies need two aspects".into(),
                            ));
                        }
                        vec![vec![*v; a[1].size]; a[0].size]
                    }
                };
                build_temporal_multiplex(shape, &table)
            }
            DependencySpec::BlockMultiplex { blocks, p_hat } => {
                if blocks.contains(&0) {
                    return Err(Error::domain("block assignment", "block ids are 1-based"));
                }
                let zero: Vec<usize> = blocks.iter().map(|b| b - 1).collect();
                build_block_multiplex(shape, &zero, p_hat)
            }
            DependencySpec::Custom { matrix } => build_custom(shape, matrix),
        }
    }
}
