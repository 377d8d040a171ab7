use std::fmt;

use thiserror::Error;

use crate::graph::{Edge, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error("vertex list is not strictly increasing at position {0}")]
    NotCanonical(usize),
}

/// A clique in canonical form: vertices strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Clique(Vec<VertexId>);

impl Clique {
    /// Sorts and deduplicates.
    pub fn from_vertices<I, V>(vs: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut v: Vec<VertexId> = vs.into_iter().map(Into::into).collect();
        v.sort_unstable();
        v.dedup();
        Clique(v)
    }

    /// Accepts a list that is already strictly increasing.
    pub fn from_sorted(vs: Vec<VertexId>) -> Result<Self, CliqueError> {
        check_canonical(&vs)?;
        Ok(Clique(vs))
    }

    pub(crate) fn from_sorted_unchecked(vs: Vec<VertexId>) -> Self {
        debug_assert!(check_canonical(&vs).is_ok());
        Clique(vs)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.contains(e.u()) && self.contains(e.v())
    }

    /// Number of vertex pairs, `k(k-1)/2`.
    pub fn edge_count(&self) -> u64 {
        let k = self.0.len() as u64;
        k * k.saturating_sub(1) / 2
    }

    pub fn is_subset_of(&self, other: &Clique) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Copy without `v`.
    pub fn without(&self, v: VertexId) -> Clique {
        Clique(self.0.iter().copied().filter(|&w| w != v).collect())
    }
}

pub(crate) fn check_canonical(vs: &[VertexId]) -> Result<(), CliqueError> {
    match vs.windows(2).position(|w| w[0] >= w[1]) {
        Some(i) => Err(CliqueError::NotCanonical(i + 1)),
        None => Ok(()),
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
