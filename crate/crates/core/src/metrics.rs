//! Normalized mutual information between partitions, normalized by joint entropy.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::MultilayerPartition;

// H = log2 N - (1/N) Σ c log2 c, from integer counts
fn entropy<I: IntoIterator<Item = usize>>(counts: I, total: usize) -> f64 {
    let n = total as f64;
    let s: f64 = counts
        .into_iter()
        .filter(|&c| c > 0)
        .map(|c| {
            let c = c as f64;
            c * c.log2()
        })
        .sum();
    (n.log2() - s / n).max(0.0)
}

// Multiplicities in ascending key order, so sums are reproducible.
fn counts<K: Ord>(items: impl Iterator<Item = K>) -> Vec<usize> {
    let mut keys: Vec<K> = items.collect();
    keys.sort_unstable();
    let mut out = Vec::new();
    let mut run = 0;
    for k in 0..keys.len() {
        run += 1;
        if k + 1 == keys.len() || keys[k + 1] != keys[k] {
            out.push(run);
            run = 0;
        }
    }
    out
}

/// `I(A; B) / H(A, B)` for two labelings of the same nodes.
///
/// Equal to one when both labelings are constant.
pub fn nmi_joint(a: &[usize], b: &[usize]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "partitions cover {} and {} nodes",
            a.len(),
            b.len()
        )));
    }
    if a.is_empty() {
        return Err(Error::domain("partition", "must cover at least one node"));
    }
    let n = a.len();
    let ha = entropy(counts(a.iter()), n);
    let hb = entropy(counts(b.iter()), n);
    let hab = entropy(counts(a.iter().zip(b)), n);
    if hab == 0.0 {
        return Ok(1.0);
    }
    Ok(((ha + hb - hab) / hab).clamp(0.0, 1.0))
}

/// Per-layer NMI between planted and found partitions over several runs.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerNmiSummary {
    /// `per_run[k][α]`: NMI of the induced partitions of layer `α` in run `k`.
    pub per_run: Vec<Vec<f64>>,
    /// Mean over layers for each run.
    pub run_means: Vec<f64>,
    /// `⟨NMI⟩`: mean over layers, then over runs.
    pub mean: f64,
}

impl LayerNmiSummary {
    /// Mean over runs for each layer.
    pub fn layer_means(&self) -> Vec<f64> {
        let l = self.per_run.first().map_or(0, Vec::len);
        (0..l)
            .map(|a| self.per_run.iter().map(|r| r[a]).sum::<f64>() / self.per_run.len() as f64)
            .collect()
    }
}

/// NMI of each layer's induced partition, found against planted.
pub fn layer_nmi(planted: &MultilayerPartition, found: &MultilayerPartition) -> Result<Vec<f64>> {
    if planted.shape() != found.shape() {
        return Err(Error::ShapeMismatch(
            "planted and found partitions have different shapes".into(),
        ));
    }
    (0..planted.shape().layer_count())
        .map(|a| nmi_joint(planted.induced(a), found.induced(a)))
        .collect()
}

pub fn per_layer_mean_nmi(
    planted: &MultilayerPartition,
    found: &[MultilayerPartition],
) -> Result<LayerNmiSummary> {
    if found.is_empty() {
        return Err(Error::domain("found partitions", "need at least one run"));
    }
    let per_run = found
        .iter()
        .map(|f| layer_nmi(planted, f))
        .collect::<Result<Vec<_>>>()?;
    let run_means: Vec<f64> = per_run
        .iter()
        .map(|r| r.iter().sum::<f64>() / r.len() as f64)
        .collect();
    let mean = run_means.iter().sum::<f64>() / run_means.len() as f64;
    Ok(LayerNmiSummary {
        per_run,
        run_means,
        mean,
    })
}

/// `l × l` matrix of NMI between the induced partitions of every pair of layers.
pub fn pairwise_layer_nmi(s: &MultilayerPartition) -> Vec<Vec<f64>> {
    let l = s.shape().layer_count();
    let upper: Vec<Vec<f64>> = (0..l)
        .into_par_iter()
        .map(|a| {
            (a..l)
                .map(|b| nmi_joint(s.induced(a), s.induced(b)).expect("layers have equal size"))
                .collect()
        })
        .collect();
    let mut m = vec![vec![0.0; l]; l];
    for (a, row) in upper.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            m[a][a + k] = v;
            m[a + k][a] = v;
        }
    }
    m
}

/// Mean of the entries at each layer distance `k = 0..l` of a pairwise matrix.
pub fn mean_by_distance(matrix: &[Vec<f64>]) -> Vec<f64> {
    let l = matrix.len();
    (0..l)
        .map(|k| {
            let vals: Vec<f64> = (0..l - k).map(|a| matrix[a][a + k]).collect();
            vals.iter().sum::<f64>() / vals.len() as f64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::MultilayerShape;
    use proptest::prelude::*;

    #[test]
    fn reference_values() {
        assert_eq!(nmi_joint(&[1, 1, 2, 2], &[1, 1, 2, 2]).unwrap(), 1.0);
        assert_eq!(nmi_joint(&[1, 1, 2, 2], &[1, 2, 1, 2]).unwrap(), 0.0);
        let v = nmi_joint(&[1, 1, 2, 2], &[1, 1, 1, 2]).unwrap();
        assert!((v - 0.207519).abs() < 1e-6, "{v}");
        assert_eq!(nmi_joint(&[3, 3, 3], &[7, 7, 7]).unwrap(), 1.0);
        assert_eq!(nmi_joint(&[1, 2, 3], &[1, 1, 1]).unwrap(), 0.0);
    }

    #[test]
    fn rejects_mismatched_inputs() {
        assert!(nmi_joint(&[1, 2], &[1]).is_err());
        assert!(nmi_joint(&[], &[]).is_err());
    }

    #[test]
    fn per_layer_summary() {
        let shape = MultilayerShape::temporal(4, 2).unwrap();
        let planted = MultilayerPartition::from_labels(shape.clone(), vec![1, 1, 2, 2, 1, 1, 2, 2]).unwrap();
        let permuted = MultilayerPartition::from_labels(shape.clone(), vec![5, 5, 9, 9, 5, 5, 9, 9]).unwrap();
        let s = per_layer_mean_nmi(&planted, &[planted.clone(), permuted]).unwrap();
        assert_eq!(s.mean, 1.0);
        assert_eq!(s.layer_means(), vec![1.0, 1.0]);

        let constant = MultilayerPartition::constant(shape.clone(), 1).unwrap();
        let singletons = MultilayerPartition::from_labels(shape, vec![1, 2, 3, 4, 1, 2, 3, 4]).unwrap();
        let s = per_layer_mean_nmi(&constant, &[singletons]).unwrap();
        assert_eq!(s.per_run[0], vec![0.0, 0.0]);
    }

    #[test]
    fn pairwise_matrix_is_symmetric_with_unit_diagonal() {
        let shape = MultilayerShape::temporal(6, 3).unwrap();
        let s = MultilayerPartition::from_labels(
            shape,
            vec![1, 1, 2, 2, 3, 3, 1, 2, 1, 2, 1, 2, 4, 4, 4, 5, 5, 5],
        )
        .unwrap();
        let m = pairwise_layer_nmi(&s);
        for a in 0..3 {
            assert_eq!(m[a][a], 1.0);
            for b in 0..3 {
                assert_eq!(m[a][b], m[b][a]);
            }
        }
        let d = mean_by_distance(&m);
        assert_eq!(d[0], 1.0);
        assert_eq!(d.len(), 3);
    }

    proptest! {
        #[test]
        fn bounded_symmetric_and_label_invariant(
            a in prop::collection::vec(1usize..5, 1..30),
            seed in any::<u64>(),
        ) {
            let b: Vec<usize> = a.iter().enumerate().map(|(i, &x)| (x * 7 + i + seed as usize % 3) % 4 + 1).collect();
            let v = nmi_joint(&a, &b).unwrap();
            prop_assert!((0.0..=1.0).contains(&v));
            prop_assert!((v - nmi_joint(&b, &a).unwrap()).abs() < 1e-12);
            let relabelled: Vec<usize> = a.iter().map(|&x| 100 - x * 3).collect();
            prop_assert!((v - nmi_joint(&relabelled, &b).unwrap()).abs() < 1e-12);
        }
    }
}
