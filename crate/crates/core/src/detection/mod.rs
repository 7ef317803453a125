//! Recovering planted partitions: multilayer modularity with uniform diagonal
//! coupling, maximized by Louvain-style heuristics.

mod louvain;
mod modularity;
mod sweep;

pub use louvain::{genlouvain, LouvainResult, MoveRule};
pub use modularity::{multilayer_modularity, CouplingTopology, ModularityConfig, ModularityGraph};
pub use sweep::{grid_mean, nmi_sweep, write_sweep_csv, SweepRow};
