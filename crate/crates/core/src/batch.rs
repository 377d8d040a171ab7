use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BatchMode {
    Insert,
    Delete,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BatchError {
    #[error("edge {0} appears more than once in the batch")]
    Repeated(Edge),
    #[error("cannot insert edge {0}: already in the graph")]
    AlreadyPresent(Edge),
    #[error("cannot delete edge {0}: not in the graph")]
    NotPresent(Edge),
    #[error("edge {0} is in both the insert and the delete batch")]
    Overlap(Edge),
    #[error("expected a {expected:?} batch")]
    WrongMode { expected: BatchMode },
}

/// Ordered set of distinct edges to insert or delete together.
///
/// The order is the processing order used by the new-clique enumerators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBatch {
    edges: Vec<Edge>,
    mode: BatchMode,
}

impl EdgeBatch {
    pub fn new(edges: Vec<Edge>, mode: BatchMode) -> Result<Self, BatchError> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &e in &edges {
            if !seen.insert(e) {
                return Err(BatchError::Repeated(e));
            }
        }
        Ok(EdgeBatch { edges, mode })
    }

    pub fn insert(edges: Vec<Edge>) -> Result<Self, BatchError> {
        Self::new(edges, BatchMode::Insert)
    }

    pub fn delete(edges: Vec<Edge>) -> Result<Self, BatchError> {
        Self::new(edges, BatchMode::Delete)
    }

    pub fn empty(mode: BatchMode) -> Self {
        EdgeBatch { edges: Vec::new(), mode }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn mode(&self) -> BatchMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Same edges, opposite mode.
    pub fn reversed(&self) -> Self {
        let mode = match self.mode {
            BatchMode::Insert => BatchMode::Delete,
            BatchMode::Delete => BatchMode::Insert,
        };
        EdgeBatch { edges: self.edges.clone(), mode }
    }

    /// Checks the batch against the graph it will be applied to.
    pub fn validate(&self, g: &Graph) -> Result<(), BatchError> {
        for &e in &self.edges {
            match (self.mode, g.has_edge(e)) {
                (BatchMode::Insert, true) => return Err(BatchError::AlreadyPresent(e)),
                (BatchMode::Delete, false) => return Err(BatchError::NotPresent(e)),
                _ => {}
            }
        }
        Ok(())
    }

    pub(crate) fn expect_mode(&self, expected: BatchMode) -> Result<(), BatchError> {
        if self.mode == expected {
            Ok(())
        } else {
            Err(BatchError::WrongMode { expected })
        }
    }

    /// Applies the batch to `g` after validating it; on error `g` is untouched.
    pub fn apply(&self, g: &mut Graph) -> Result<(), BatchError> {
        self.validate(g)?;
        for &e in &self.edges {
            let r = match self.mode {
                BatchMode::Insert => g.add_edge(e),
                BatchMode::Delete => g.remove_edge(e),
            };
            r.expect("validated");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u64, b: u64) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn rejects_repeats_after_normalization() {
        assert_eq!(EdgeBatch::insert(vec![e(1, 2), e(2, 1)]), Err(BatchError::Repeated(e(1, 2))));
    }

    #[test]
    fn validation_by_mode() {
        let g = Graph::from_edges([e(1, 2)]);
        let ins = EdgeBatch::insert(vec![e(1, 2)]).unwrap();
        assert_eq!(ins.validate(&g), Err(BatchError::AlreadyPresent(e(1, 2))));
        let del = EdgeBatch::delete(vec![e(2, 3)]).unwrap();
        assert_eq!(del.validate(&g), Err(BatchError::NotPresent(e(2, 3))));
    }

    #[test]
    fn failed_apply_leaves_graph() {
        let mut g = Graph::from_edges([e(1, 2)]);
        let before = g.clone();
        let b = EdgeBatch::insert(vec![e(3, 4), e(1, 2)]).unwrap();
        assert!(b.apply(&mut g).is_err());
        assert_eq!(g, before);
    }
}
