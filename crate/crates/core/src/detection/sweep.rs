use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::benchmark::{BenchmarkConfig, SweepSpec};
use crate::detection::louvain::{genlouvain, MoveRule};
use crate::detection::modularity::ModularityConfig;
use crate::error::{Error, Result};
use crate::metrics::layer_nmi;
use crate::streams;

/// One detector run at one grid point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub mu: f64,
    pub omega: f64,
    pub rule: &'static str,
    pub run: usize,
    /// Mean over layers of the NMI between found and planted induced partitions.
    pub mean_nmi: f64,
}

/// Generates one planted partition (first chain) and, for each `μ`, one network on it;
/// then runs every (ω, rule) detector `runs` times on each network.
///
/// Run `j` at grid point (μ index `a`, ω index `b`, rule) uses the sub-stream
/// `detector/mu-a/omega-b/<rule>/run-j`. Rows are ordered by μ, ω, rule, run.
pub fn nmi_sweep(config: &BenchmarkConfig, sweep: &SweepSpec) -> Result<Vec<SweepRow>> {
    sweep.validate()?;
    let (_, partitions) = config.sample_partitions()?;
    let planted = &partitions[0];
    let degrees = config.sample_degrees(0)?;
    let networks = sweep
        .mu
        .par_iter()
        .enumerate()
        .map(|(a, &mu)| config.sample_network_on(planted, &degrees, mu, &format!("edges/mu-{a}")))
        .collect::<Result<Vec<_>>>()?;

    let mut jobs = Vec::new();
    for (a, &mu) in sweep.mu.iter().enumerate() {
        for (b, &omega) in sweep.omega.iter().enumerate() {
            for &rule in &sweep.rules {
                for run in 0..sweep.runs {
                    jobs.push((a, mu, b, omega, rule, run));
                }
            }
        }
    }
    jobs.par_iter()
        .map(|&(a, mu, b, omega, rule, run)| {
            let modularity = ModularityConfig {
                omega,
                topology: sweep.topology,
                gamma: 1.0,
            };
            let name = format!("detector/mu-{a}/omega-{b}/{}/run-{run}", rule.name());
            let mut rng = streams::derive(config.seed, &name);
            let found = genlouvain(&networks[a].network, &modularity, rule, &mut rng)?;
            let nmi = layer_nmi(planted, &found.partition)?;
            Ok(SweepRow {
                mu,
                omega,
                rule: rule.name(),
                run,
                mean_nmi: nmi.iter().sum::<f64>() / nmi.len() as f64,
            })
        })
        .collect()
}

/// Mean of `mean_nmi` over all rows matching `(mu, omega, rule)`.
pub fn grid_mean(rows: &[SweepRow], mu: f64, omega: f64, rule: MoveRule) -> Option<f64> {
    let vals: Vec<f64> = rows
        .iter()
        .filter(|r| r.mu == mu && r.omega == omega && r.rule == rule.name())
        .map(|r| r.mean_nmi)
        .collect();
    (!vals.is_empty()).then(|| vals.iter().sum::<f64>() / vals.len() as f64)
}

/// Writes the sweep table with header `mu,omega,rule,run,mean_nmi`. Runs are 1-based.
pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["mu", "omega", "rule", "run", "mean_nmi"])?;
    for r in rows {
        w.write_record([
            r.mu.to_string(),
            r.omega.to_string(),
            r.rule.to_string(),
            (r.run + 1).to_string(),
            r.mean_nmi.to_string(),
        ])?;
    }
    w.flush().map_err(Error::Io)
}
