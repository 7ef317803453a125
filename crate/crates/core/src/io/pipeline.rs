//! File-level workflows: generate a benchmark into a directory, score found
//! partitions, run detector sweeps.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::benchmark::BenchmarkConfig;
use crate::detection::{nmi_sweep, write_sweep_csv};
use crate::edges::SamplingStats;
use crate::error::{Error, Result};
use crate::io::formats::{read_partition, write_network, write_partition};
use crate::metrics::per_layer_mean_nmi;
use crate::model::MultilayerPartition;

pub const TOOL_NAME: &str = "multinet";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Record written next to generated files; its `config` regenerates them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub files: Vec<String>,
    pub stats: Vec<ManifestStats>,
    pub config: BenchmarkConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestStats {
    pub chain: usize,
    pub edges: usize,
    pub bernoulli_blocks: usize,
    pub fallback_blocks: usize,
    pub clamped_pairs: usize,
}

impl ManifestStats {
    fn new(chain: usize, edges: usize, s: &SamplingStats) -> Self {
        ManifestStats {
            chain,
            edges,
            bernoulli_blocks: s.bernoulli_blocks,
            fallback_blocks: s.fallback_blocks,
            clamped_pairs: s.clamped_pairs,
        }
    }
}

/// Parses a TOML benchmark configuration. Unknown keys are rejected.
pub fn parse_config(text: &str) -> Result<BenchmarkConfig> {
    let config: BenchmarkConfig = toml::from_str(text).map_err(|e| {
        let field = e
            .span()
            .map(|s| {
                let line = text[..s.start].matches('\n').count() + 1;
                format!("line {line}")
            })
            .unwrap_or_else(|| "config".into());
        Error::Config {
            field,
            reason: e.message().to_string(),
        }
    })?;
    config.validate()?;
    Ok(config)
}

pub fn load_config(path: &Path) -> Result<BenchmarkConfig> {
    parse_config(&fs::read_to_string(path)?)
}

pub fn config_to_toml(config: &BenchmarkConfig) -> String {
    toml::to_string(config).expect("benchmark config serializes to TOML")
}

pub fn load_manifest(path: &Path) -> Result<Manifest> {
    let text = fs::read_to_string(path)?;
    toml::from_str(&text).map_err(|e| Error::Config {
        field: "manifest".into(),
        reason: e.message().to_string(),
    })
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

/// Generates the benchmark described by `config` into `out`.
///
/// Writes `partition.tsv`, `network.tsv` and `manifest.toml`; with several chains
/// the data files are numbered `partition-1.tsv`, `network-1.tsv`, and so on.
pub fn generate_to_dir(config: &BenchmarkConfig, out: &Path) -> Result<Vec<PathBuf>> {
    let instance = config.generate()?;
    fs::create_dir_all(out)?;
    let chains = instance.partitions.len();
    let suffix = |k: usize| if chains == 1 { String::new() } else { format!("-{}", k + 1) };
    let mut written = Vec::new();
    let mut stats = Vec::new();
    for (k, (s, net)) in instance.partitions.iter().zip(&instance.networks).enumerate() {
        let p = out.join(format!("partition{}.tsv", suffix(k)));
        write_partition(s, create(&p)?)?;
        let n = out.join(format!("network{}.tsv", suffix(k)));
        write_network(&net.network, create(&n)?)?;
        written.push(p);
        written.push(n);
        stats.push(ManifestStats::new(k + 1, net.network.edge_count(), &net.stats));
    }
    let manifest = Manifest {
        tool: TOOL_NAME.into(),
        version: TOOL_VERSION.into(),
        files: written
            .iter()
            .map(|p| p.file_name().expect("file path").to_string_lossy().into_owned())
            .collect(),
        stats,
        config: config.clone(),
    };
    let m = out.join("manifest.toml");
    let mut w = create(&m)?;
    w.write_all(toml::to_string(&manifest).expect("manifest serializes").as_bytes())?;
    w.flush()?;
    written.push(m);
    Ok(written)
}

pub fn read_partition_file(path: &Path) -> Result<MultilayerPartition> {
    read_partition(BufReader::new(File::open(path)?), None)
}

/// Per-layer NMI of each found partition against the planted one, as CSV with
/// header `run,layer,nmi` and a final `all,mean,<⟨NMI⟩>` row. Runs and layers are 1-based.
pub fn evaluate<W: Write>(planted: &MultilayerPartition, found: &[MultilayerPartition], out: W) -> Result<f64> {
    let summary = per_layer_mean_nmi(planted, found)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["run", "layer", "nmi"])?;
    for (k, row) in summary.per_run.iter().enumerate() {
        for (a, v) in row.iter().enumerate() {
            w.write_record([(k + 1).to_string(), (a + 1).to_string(), v.to_string()])?;
        }
    }
    w.write_record(["all".to_string(), "mean".to_string(), summary.mean.to_string()])?;
    w.flush()?;
    Ok(summary.mean)
}

pub fn evaluate_files<W: Write>(planted: &Path, found: &[PathBuf], out: W) -> Result<f64> {
    let planted = read_partition_file(planted)?;
    let found = found
        .iter()
        .map(|p| read_partition_file(p))
        .collect::<Result<Vec<_>>>()?;
    evaluate(&planted, &found, out)
}

/// Runs the `[sweep]` section of `config` and writes the result table.
pub fn sweep<W: Write>(config: &BenchmarkConfig, out: W) -> Result<usize> {
    let spec = config.sweep.as_ref().ok_or_else(|| Error::Config {
        field: "sweep".into(),
        reason: "section is required for a sweep".into(),
    })?;
    let rows = nmi_sweep(config, spec)?;
    write_sweep_csv(&rows, out)?;
    Ok(rows.len())
}
