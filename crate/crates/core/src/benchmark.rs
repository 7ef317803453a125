//! End-to-end benchmark generation: nulls, planted partitions and networks from one
//! configuration and one master seed.

use rand::RngCore;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dependency::{self, DependencySpec};
use crate::detection::{CouplingTopology, MoveRule};
use crate::edges::{
    build_dcsbm, sample_expected_degrees, sample_network, EdgeSamplerConfig, SampledNetwork,
    TruncatedPowerLaw,
};
use crate::error::{Error, Result};
use crate::model::{LayerDependencyTensor, MultilayerPartition, MultilayerShape};
use crate::nulldist::{build_null_set, NullSet, NullSpec};
use crate::sampler::{sample_partition, SamplerConfig};
use crate::streams;

/// Degree distribution, mixing and sampler settings for the planted networks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    /// Power of `x` in the degree density, e.g. `-2` for `p(x) ∝ x^{-2}`.
    #[serde(default = "default_exponent")]
    pub degree_exponent: f64,
    pub k_min: f64,
    pub k_max: f64,
    /// Mixing parameter `μ`.
    #[serde(default)]
    pub mu: f64,
    #[serde(default = "default_dense_threshold")]
    pub dense_threshold: f64,
    #[serde(default = "default_retry_factor")]
    pub retry_factor: usize,
}

fn default_exponent() -> f64 {
    -2.0
}

fn default_dense_threshold() -> f64 {
    EdgeSamplerConfig::default().dense_threshold
}

fn default_retry_factor() -> usize {
    EdgeSamplerConfig::default().retry_factor
}

impl EdgeSpec {
    pub fn degree_distribution(&self) -> Result<TruncatedPowerLaw> {
        TruncatedPowerLaw::from_config_exponent(self.degree_exponent, self.k_min, self.k_max)
    }

    pub fn sampler(&self) -> EdgeSamplerConfig {
        EdgeSamplerConfig {
            dense_threshold: self.dense_threshold,
            retry_factor: self.retry_factor,
        }
    }
}

/// Grid of detector settings evaluated by [`crate::detection::nmi_sweep`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub mu: Vec<f64>,
    pub omega: Vec<f64>,
    #[serde(default = "all_rules")]
    pub rules: Vec<MoveRule>,
    #[serde(default = "default_runs")]
    pub runs: usize,
    #[serde(default)]
    pub topology: CouplingTopology,
}

fn all_rules() -> Vec<MoveRule> {
    vec![MoveRule::MaxGain, MoveRule::ProportionalGain]
}

fn default_runs() -> usize {
    10
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.mu.is_empty() || self.omega.is_empty() || self.rules.is_empty() {
            return Err(Error::Config {
                field: "sweep".into(),
                reason: "mu, omega and rules must each list at least one value".into(),
            });
        }
        if self.runs == 0 {
            return Err(Error::Config {
                field: "sweep.runs".into(),
                reason: "must be at least 1".into(),
            });
        }
        for &mu in &self.mu {
            if !(0.0..=1.0).contains(&mu) {
                return Err(Error::Config {
                    field: "sweep.mu".into(),
                    reason: format!("{mu} is outside [0, 1]"),
                });
            }
        }
        for &w in &self.omega {
            if !(w.is_finite() && w >= 0.0) {
                return Err(Error::Config {
                    field: "sweep.omega".into(),
                    reason: format!("{w} must be finite and non-negative"),
                });
            }
        }
        Ok(())
    }
}

/// Everything needed to regenerate a benchmark instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchmarkConfig {
    pub seed: u64,
    pub shape: MultilayerShape,
    pub dependency: DependencySpec,
    pub null: NullSpec,
    #[serde(default)]
    pub sampler: SamplerConfig,
    pub edges: EdgeSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSpec>,
}

/// One generated benchmark: a planted partition and network per chain.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkInstance {
    pub nulls: NullSet,
    pub partitions: Vec<MultilayerPartition>,
    pub expected_degrees: Vec<Vec<f64>>,
    pub networks: Vec<SampledNetwork>,
}

fn field<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Config { .. } | Error::Io(_) | Error::Csv(_) => e,
        other => Error::Config {
            field: name.into(),
            reason: other.to_string(),
        },
    })
}

impl BenchmarkConfig {
    /// Copy structure after all validation; errors name the offending config section.
    pub fn dependency_tensor(&self) -> Result<LayerDependencyTensor> {
        let tensor = field("dependency", self.dependency.build(&self.shape))?;
        let report = field("dependency", dependency::validate(&tensor, &self.shape))?;
        debug_assert!(report.passes());
        Ok(tensor)
    }

    pub fn sampler_config(&self) -> SamplerConfig {
        SamplerConfig {
            seed: self.seed,
            ..self.sampler.clone()
        }
    }

    /// Checks every section without sampling anything.
    pub fn validate(&self) -> Result<()> {
        self.dependency_tensor()?;
        field("sampler", self.sampler.validate())?;
        field("edges", self.edges.degree_distribution())?;
        if !(0.0..=1.0).contains(&self.edges.mu) {
            return Err(Error::Config {
                field: "edges.mu".into(),
                reason: format!("{} is outside [0, 1]", self.edges.mu),
            });
        }
        if self.null.theta.is_nan() || self.null.theta <= 0.0 {
            return Err(Error::Config {
                field: "null.theta".into(),
                reason: format!("{} must be positive", self.null.theta),
            });
        }
        if let Some(sweep) = &self.sweep {
            sweep.validate()?;
        }
        Ok(())
    }

    pub fn sample_nulls(&self) -> Result<NullSet> {
        let mut rng = streams::derive(self.seed, "nulls");
        field("null", build_null_set(&self.shape, &self.null, &mut rng))
    }

    /// Nulls and one planted partition per chain.
    pub fn sample_partitions(&self) -> Result<(NullSet, Vec<MultilayerPartition>)> {
        self.validate()?;
        let tensor = self.dependency_tensor()?;
        let nulls = self.sample_nulls()?;
        let partitions = sample_partition(&tensor, &nulls, &self.sampler_config())?;
        Ok((nulls, partitions))
    }

    /// Expected degrees for chain `chain`, from the sub-stream `degrees/chain-k`.
    pub fn sample_degrees(&self, chain: usize) -> Result<Vec<f64>> {
        let dist = field("edges", self.edges.degree_distribution())?;
        let mut rng = streams::derive(self.seed, &format!("degrees/chain-{chain}"));
        Ok(sample_expected_degrees(&dist, &self.shape, &mut rng))
    }

    /// Network planted on `partition` with mixing `mu`. Edge blocks draw from
    /// sub-streams of a seed taken from the stream named `tag`.
    pub fn sample_network_on(
        &self,
        partition: &MultilayerPartition,
        degrees: &[f64],
        mu: f64,
        tag: &str,
    ) -> Result<SampledNetwork> {
        let params = build_dcsbm(partition, degrees, mu)?;
        let seed = streams::derive(self.seed, tag).next_u64();
        sample_network(&params, seed, &self.edges.sampler())
    }

    /// Full generation: nulls, partitions, degrees and networks for every chain.
    pub fn generate(&self) -> Result<BenchmarkInstance> {
        let (nulls, partitions) = self.sample_partitions()?;
        let expected_degrees = (0..partitions.len())
            .map(|k| self.sample_degrees(k))
            .collect::<Result<Vec<_>>>()?;
        let networks = partitions
            .par_iter()
            .zip(&expected_degrees)
            .enumerate()
            .map(|(k, (s, e))| self.sample_network_on(s, e, self.edges.mu, &format!("edges/chain-{k}")))
            .collect::<Result<Vec<_>>>()?;
        Ok(BenchmarkInstance {
            nulls,
            partitions,
            expected_degrees,
            networks,
        })
    }
}
