//! Configuration files, partition and network formats, and file-level pipelines.

pub mod formats;
pub mod pipeline;

pub use formats::{read_network, read_partition, write_network, write_partition};
pub use pipeline::{
    evaluate, evaluate_files, generate_to_dir, load_config, load_manifest, parse_config, sweep, Manifest,
};
