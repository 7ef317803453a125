//! Generative benchmarks for community detection in multilayer networks.
//!
//! Partitions are sampled from a label-copying process driven by an interlayer
//! dependency tensor and per-layer null distributions; networks are then planted on
//! those partitions with a degree-corrected stochastic block model.

pub mod benchmark;
pub mod dependency;
pub mod detection;
pub mod edges;
pub mod error;
pub mod io;
pub mod metrics;
pub mod model;
pub mod nulldist;
pub mod sampler;
pub mod streams;

pub use error::{Error, Result};
pub use model::*;
