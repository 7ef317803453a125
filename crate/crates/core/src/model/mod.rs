//! Multilayer-network vocabulary: shapes and layer indexing, partitions,
//! copying-probability tensors and networks.

pub mod network;
pub mod partition;
pub mod shape;
pub mod tensor;

pub use network::{Edge, MultilayerNetwork};
pub use partition::{induced_partition, MultilayerPartition};
pub use shape::{AspectOrdering, AspectSpec, LayerIndex, MultilayerShape, StateNode};
pub use tensor::{CopyStructure, InterlayerDependencyTensor, LayerDependencyTensor, MASS_TOLERANCE};
