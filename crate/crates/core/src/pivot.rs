//! Static maximal-clique enumeration by backtracking with pivoting, and the
//! variant that refuses to grow a clique across a set of excluded edges.
//!
//! Both enumerators work on a dense local copy of the relevant vertices,
//! indexed in ascending [`VertexId`] order. The search branches on extension
//! vertices in ascending id order, so emission order is depth-first in that
//! order. Callers should treat the output as a set.
//!
//! The pivot is the vertex of `cand ∪ fini` with the most neighbors in
//! `cand`; ties go to the smallest id.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::clique::Clique;
use crate::graph::{Edge, Graph, VertexId};
use crate::sorted;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} listed twice across clique, candidates and finished sets")]
    Overlap(VertexId),
    #[error("seed vertices {0} and {1} are not adjacent")]
    SeedNotClique(VertexId, VertexId),
    #[error("candidate {0} is not adjacent to every seed vertex")]
    NotExtension(VertexId),
    #[error("vertex {0} extends the seed but is in neither candidates nor finished")]
    MissingExtension(VertexId),
}

/// Edges a clique may not contain, indexed by endpoint.
#[derive(Debug, Clone, Default)]
pub struct ExcludedEdgeSet {
    edges: HashSet<Edge>,
    incident: HashMap<VertexId, Vec<VertexId>>,
}

impl ExcludedEdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        if !self.edges.insert(e) {
            return false;
        }
        self.incident.entry(e.u()).or_default().push(e.v());
        self.incident.entry(e.v()).or_default().push(e.u());
        true
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    fn incident(&self, v: VertexId) -> &[VertexId] {
        self.incident.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }
}

impl FromIterator<Edge> for ExcludedEdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut set = ExcludedEdgeSet::new();
        for e in iter {
            set.insert(e);
        }
        set
    }
}

/// Dense copy of (part of) a graph; local index order equals id order.
pub(crate) struct LocalGraph {
    ids: Vec<VertexId>,
    adj: Vec<Vec<u32>>,
}

impl LocalGraph {
    pub(crate) fn whole(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let adj = ids
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .expect("listed vertex")
                    .iter()
                    .map(|w| ids.binary_search(w).expect("symmetric graph") as u32)
                    .collect()
            })
            .collect();
        LocalGraph { ids, adj }
    }

    /// Induced on `vs`, which must be sorted, distinct, and present in `g`.
    pub(crate) fn induced(g: &Graph, vs: Vec<VertexId>) -> Self {
        let mut buf = Vec::new();
        let adj = vs
            .iter()
            .map(|&v| {
                sorted::intersect(g.neighbors(v).expect("present vertex"), &vs, &mut buf);
                buf.iter().map(|w| vs.binary_search(w).expect("intersected") as u32).collect()
            })
            .collect();
        LocalGraph { ids: vs, adj }
    }

    pub(crate) fn len(&self) -> usize {
        self.ids.len()
    }

    pub(crate) fn index_of(&self, v: VertexId) -> Option<u32> {
        self.ids.binary_search(&v).ok().map(|i| i as u32)
    }

    fn excluded_adjacency(&self, excl: &ExcludedEdgeSet) -> Option<Vec<Vec<u32>>> {
        if excl.is_empty() {
            return None;
        }
        let mut any = false;
        let adj = self
            .ids
            .iter()
            .map(|&v| {
                let mut list: Vec<u32> = excl.incident(v).iter().filter_map(|&w| self.index_of(w)).collect();
                list.sort_unstable();
                any |= !list.is_empty();
                list
            })
            .collect();
        any.then_some(adj)
    }
}

/// Recursive search state shared by both enumerators.
pub(crate) struct Search<'a, F> {
    graph: &'a LocalGraph,
    excluded: Option<Vec<Vec<u32>>>,
    clique: Vec<u32>,
    in_clique: Vec<bool>,
    emit: F,
}

impl<'a, F: FnMut(Clique)> Search<'a, F> {
    pub(crate) fn new(graph: &'a LocalGraph, excl: Option<&ExcludedEdgeSet>, emit: F) -> Self {
        let excluded = excl.and_then(|x| graph.excluded_adjacency(x));
        Search { graph, excluded, clique: Vec::new(), in_clique: vec![false; graph.len()], emit }
    }

    pub(crate) fn push(&mut self, q: u32) {
        self.clique.push(q);
        self.in_clique[q as usize] = true;
    }

    fn pop(&mut self) {
        let q = self.clique.pop().expect("non-empty clique");
        self.in_clique[q as usize] = false;
    }

    /// Whether adding `q` to the current clique would close an excluded edge.
    pub(crate) fn closes_excluded(&self, q: u32) -> bool {
        match &self.excluded {
            Some(adj) => adj[q as usize].iter().any(|&w| self.in_clique[w as usize]),
            None => false,
        }
    }

    pub(crate) fn run(&mut self, mut cand: Vec<u32>, mut fini: Vec<u32>) {
        if cand.is_empty() {
            if fini.is_empty() {
                self.report();
            }
            return;
        }
        let pivot = self.choose_pivot(&cand, &fini);
        let ext = sorted::difference(&cand, &self.graph.adj[pivot as usize]);
        let mut cand_q = Vec::new();
        let mut fini_q = Vec::new();
        for q in ext {
            if !self.closes_excluded(q) {
                let nbrs = &self.graph.adj[q as usize];
                sorted::intersect(&cand, nbrs, &mut cand_q);
                sorted::intersect(&fini, nbrs, &mut fini_q);
                self.push(q);
                self.run(std::mem::take(&mut cand_q), std::mem::take(&mut fini_q));
                self.pop();
            }
            sorted::remove(&mut cand, &q);
            sorted::insert(&mut fini, q);
        }
    }

    fn choose_pivot(&self, cand: &[u32], fini: &[u32]) -> u32 {
        let mut best: Option<(usize, u32)> = None;
        for &u in cand.iter().chain(fini) {
            let score = sorted::intersection_len(cand, &self.graph.adj[u as usize]);
            let better = match best {
                None => true,
                Some((s, b)) => score > s || (score == s && u < b),
            };
            if better {
                best = Some((score, u));
            }
        }
        best.expect("cand is non-empty").1
    }

    fn report(&mut self) {
        let mut ids: Vec<VertexId> = self.clique.iter().map(|&i| self.graph.ids[i as usize]).collect();
        ids.sort_unstable();
        (self.emit)(Clique::from_sorted_unchecked(ids));
    }
}

/// Enumerates every maximal clique of `g`, each exactly once.
/// Isolated vertices come out as singletons.
pub fn for_each_maximal_clique<F: FnMut(Clique)>(g: &Graph, emit: F) {
    let local = LocalGraph::whole(g);
    if local.len() == 0 {
        return;
    }
    let cand: Vec<u32> = (0..local.len() as u32).collect();
    Search::new(&local, None, emit).run(cand, Vec::new());
}

pub fn maximal_cliques(g: &Graph) -> Vec<Clique> {
    let mut out = Vec::new();
    for_each_maximal_clique(g, |c| out.push(c));
    out
}

/// Enumerates the maximal cliques `c` of `g` with `seed ⊆ c`,
/// `c \ seed ⊆ cand`, `c ∩ fini = ∅`, and no edge of `excl` inside `c`.
///
/// `cand ∪ fini` must be exactly the set of vertices outside `seed` that are
/// adjacent to every seed vertex (all of `V(g)` for an empty seed).
pub fn for_each_maximal_clique_excluding<F: FnMut(Clique)>(
    g: &Graph,
    seed: &[VertexId],
    cand: &[VertexId],
    fini: &[VertexId],
    excl: &ExcludedEdgeSet,
    emit: F,
) -> Result<(), EnumError> {
    check_extension_call(g, seed, cand, fini)?;

    let mut all: Vec<VertexId> = seed.iter().chain(cand).chain(fini).copied().collect();
    all.sort_unstable();
    if all.is_empty() {
        return Ok(());
    }
    let local = LocalGraph::induced(g, all);
    let local_set = |vs: &[VertexId]| -> Vec<u32> {
        let mut out: Vec<u32> = vs.iter().map(|&v| local.index_of(v).expect("collected")).collect();
        out.sort_unstable();
        out
    };
    let cand_local = local_set(cand);
    let fini_local = local_set(fini);

    let mut search = Search::new(&local, Some(excl), emit);
    for &s in seed {
        let idx = local.index_of(s).expect("collected");
        if search.closes_excluded(idx) {
            return Ok(());
        }
        search.push(idx);
    }
    search.run(cand_local, fini_local);
    Ok(())
}

pub fn maximal_cliques_excluding(
    g: &Graph,
    seed: &[VertexId],
    cand: &[VertexId],
    fini: &[VertexId],
    excl: &ExcludedEdgeSet,
) -> Result<Vec<Clique>, EnumError> {
    let mut out = Vec::new();
    for_each_maximal_clique_excluding(g, seed, cand, fini, excl, |c| out.push(c))?;
    Ok(out)
}

fn check_extension_call(g: &Graph, seed: &[VertexId], cand: &[VertexId], fini: &[VertexId]) -> Result<(), EnumError> {
    let mut seen = HashSet::new();
    for &v in seed.iter().chain(cand).chain(fini) {
        if !g.contains_vertex(v) {
            return Err(EnumError::UnknownVertex(v));
        }
        if !seen.insert(v) {
            return Err(EnumError::Overlap(v));
        }
    }
    for (i, &a) in seed.iter().enumerate() {
        for &b in &seed[i + 1..] {
            if !g.adjacent(a, b) {
                return Err(EnumError::SeedNotClique(a, b));
            }
        }
    }
    for &v in cand.iter().chain(fini) {
        if !seed.iter().all(|&s| g.adjacent(s, v)) {
            return Err(EnumError::NotExtension(v));
        }
    }
    let extenders: Vec<VertexId> = match seed.split_first() {
        None => g.vertices().collect(),
        Some((&first, rest)) => g
            .neighbors(first)
            .expect("checked")
            .iter()
            .copied()
            .filter(|&w| rest.iter().all(|&s| s != w && g.adjacent(s, w)))
            .collect(),
    };
    match extenders.into_iter().find(|v| !seen.contains(v)) {
        Some(v) => Err(EnumError::MissingExtension(v)),
        None => Ok(()),
    }
}
