//! Maintenance of the maximal cliques of a graph under batches of edge
//! insertions and deletions.
//!
//! The work per batch is proportional to the change in the clique set
//! rather than to the size of the whole set. See [`delta`] for the update
//! algorithms, [`pivot`] for static enumeration and [`signature`] for the
//! hashed clique registry.

pub mod batch;
pub mod cli;
pub mod clique;
pub mod delta;
pub mod extremal;
pub mod graph;
pub mod oracle;
pub mod pivot;
pub mod signature;
mod sorted;
pub mod stream;

pub use batch::{BatchError, BatchMode, EdgeBatch};
pub use clique::{Clique, CliqueError};
pub use delta::{
    apply_delete_batch, apply_insert_batch, enum_new, enum_new_te, enum_subsumed, fully_dynamic, ChangeCounts,
    ChangeSet, DeltaError, DynamicCliques, NewCliqueAlgo,
};
pub use graph::{Edge, Graph, GraphError, VertexId};
pub use pivot::{maximal_cliques, maximal_cliques_excluding, EnumError, ExcludedEdgeSet};
pub use signature::{signature, CliqueRegistry, CliqueSignature, RegistryError};
