//! Undirected simple graph with sorted adjacency lists.
//!
//! Vertex identifiers are the caller's own labels; the graph never remaps
//! them. Neighbor lists are kept sorted ascending so that neighborhood
//! intersection is a linear merge.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Externally visible vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for VertexId {
    fn from(id: u64) -> Self {
        VertexId(id)
    }
}

/// An undirected edge in normalized form (`u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Builds a normalized edge; endpoint order does not matter.
    pub fn new(a: impl Into<VertexId>, b: impl Into<VertexId>) -> Result<Self, GraphError> {
        let (a, b) = (a.into(), b.into());
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {0} already present")]
    DuplicateEdge(Edge),
    #[error("edge {0} not present")]
    AbsentEdge(Edge),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

/// Mutable undirected simple graph.
///
/// Isolated vertices are kept; removing an edge never removes its endpoints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from edges, silently skipping repeats.
    pub fn from_edges<I>(edges: I) -> Self
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::new();
        for e in edges {
            if !g.has_edge(e) {
                g.insert_unchecked(e);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    /// Adds `v` as an isolated vertex if it is not yet present.
    pub fn add_vertex(&mut self, v: impl Into<VertexId>) {
        self.adj.entry(v.into()).or_default();
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(&u, nbrs)| {
            let start = nbrs.partition_point(|&w| w <= u);
            nbrs[start..].iter().map(move |&v| Edge { u, v })
        })
    }

    /// Sorted neighbor list of `v`, or `None` if `v` is unknown.
    pub fn neighbors(&self, v: VertexId) -> Option<&[VertexId]> {
        self.adj.get(&v).map(Vec::as_slice)
    }

    pub fn degree(&self, v: VertexId) -> Option<usize> {
        self.adj.get(&v).map(Vec::len)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.adjacent(e.u, e.v)
    }

    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        match (self.adj.get(&a), self.adj.get(&b)) {
            (Some(na), Some(nb)) => {
                let (small, other) = if na.len() <= nb.len() { (na, b) } else { (nb, a) };
                small.binary_search(&other).is_ok()
            }
            _ => false,
        }
    }

    /// Inserts `e`, creating missing endpoints.
    pub fn add_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        if self.has_edge(e) {
            return Err(GraphError::DuplicateEdge(e));
        }
        self.insert_unchecked(e);
        Ok(())
    }

    /// Removes `e`; both endpoints stay in the graph.
    pub fn remove_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        if !self.has_edge(e) {
            return Err(GraphError::AbsentEdge(e));
        }
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            let list = self.adj.get_mut(&a).expect("endpoint present");
            let pos = list.binary_search(&b).expect("symmetric adjacency");
            list.remove(pos);
        }
        self.edge_count -= 1;
        Ok(())
    }

    fn insert_unchecked(&mut self, e: Edge) {
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            let list = self.adj.entry(a).or_default();
            let pos = list.binary_search(&b).unwrap_err();
            list.insert(pos, b);
        }
        self.edge_count += 1;
    }

    /// Sorted `Γ(u) ∩ Γ(v)`.
    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        let nu = self.neighbors(u).ok_or(GraphError::UnknownVertex(u))?;
        let nv = self.neighbors(v).ok_or(GraphError::UnknownVertex(v))?;
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < nu.len() && j < nv.len() {
            match nu[i].cmp(&nv[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(nu[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(out)
    }

    /// Subgraph induced by `vs`.
    pub fn induced_subgraph<I>(&self, vs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut keep: Vec<VertexId> = vs.into_iter().collect();
        keep.sort_unstable();
        keep.dedup();
        let mut sub = Graph::new();
        for &v in &keep {
            let nbrs = self.neighbors(v).ok_or(GraphError::UnknownVertex(v))?;
            let list: Vec<VertexId> = nbrs.iter().copied().filter(|w| keep.binary_search(w).is_ok()).collect();
            sub.edge_count += list.len();
            sub.adj.insert(v, list);
        }
        sub.edge_count /= 2;
        Ok(sub)
    }

    /// True if `vs` (sorted, distinct) is a clique of this graph that no
    /// outside vertex extends. The empty set counts only for an empty graph.
    pub fn is_maximal_clique(&self, vs: &[VertexId]) -> bool {
        if vs.is_empty() {
            return self.adj.is_empty();
        }
        for (i, &a) in vs.iter().enumerate() {
            if !self.contains_vertex(a) {
                return false;
            }
            if vs[i + 1..].iter().any(|&b| !self.adjacent(a, b)) {
                return false;
            }
        }
        let pivot = *vs.iter().min_by_key(|&&v| self.degree(v).unwrap_or(0)).expect("non-empty");
        let nbrs = self.neighbors(pivot).expect("checked above");
        !nbrs.iter().any(|&w| vs.binary_search(&w).is_err() && vs.iter().all(|&x| self.adjacent(x, w)))
    }
}
