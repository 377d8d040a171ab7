//! Brute-force ground truth for small graphs.
//!
//! Vertices are packed into a `u32` bitmask and maximal cliques are found by
//! Bron–Kerbosch without pivoting. Nothing here touches the pivoting
//! enumerators, so agreement between the two is meaningful.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::batch::{BatchError, BatchMode, EdgeBatch};
use crate::clique::Clique;
use crate::delta::ChangeSet;
use crate::graph::{Graph, VertexId};

/// Largest graph the oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} vertices; the oracle accepts at most {ORACLE_MAX_VERTICES}")]
    TooLarge(usize),
    #[error(transparent)]
    Batch(#[from] BatchError),
}

pub fn oracle_cliques(g: &Graph) -> Result<BTreeSet<Clique>, OracleError> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(OracleError::TooLarge(n));
    }
    let labels: Vec<VertexId> = g.vertices().collect();
    let mut masks = vec![0u32; n];
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate() {
            if i != j && g.adjacent(a, b) {
                masks[i] |= 1 << j;
            }
        }
    }
    let mut found = Vec::new();
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    bron_kerbosch(&masks, 0, all, 0, &mut found);
    Ok(found
        .into_iter()
        .map(|m| Clique::from_vertices((0..n).filter(|&i| m & (1 << i) != 0).map(|i| labels[i])))
        .collect())
}

fn bron_kerbosch(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 {
        if x == 0 && r != 0 {
            out.push(r);
        }
        return;
    }
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        let bit = 1u32 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Change set obtained by enumerating both graphs from scratch.
pub fn oracle_change(g: &Graph, h: &EdgeBatch) -> Result<ChangeSet, OracleError> {
    let mut after = g.clone();
    h.apply(&mut after)?;
    let before_set = oracle_cliques(g)?;
    let after_set = oracle_cliques(&after)?;
    Ok(ChangeSet::from_sets(&before_set, &after_set))
}

/// Change set of a two-phase update: inserts first, then deletes.
pub fn oracle_mixed_change(g: &Graph, inserts: &EdgeBatch, deletes: &EdgeBatch) -> Result<ChangeSet, OracleError> {
    if inserts.mode() != BatchMode::Insert {
        return Err(BatchError::WrongMode { expected: BatchMode::Insert }.into());
    }
    if deletes.mode() != BatchMode::Delete {
        return Err(BatchError::WrongMode { expected: BatchMode::Delete }.into());
    }
    let mut after = g.clone();
    inserts.apply(&mut after)?;
    deletes.apply(&mut after)?;
    Ok(ChangeSet::from_sets(&oracle_cliques(g)?, &oracle_cliques(&after)?))
}
