//! Change-sensitive enumeration of the maximal cliques gained and lost when
//! a batch of edges is inserted into or deleted from a graph.
//!
//! Insertion of a batch `H` into `G` (with `G' = G + H`):
//!
//! * new cliques are the maximal cliques of `G'` that contain an edge of
//!   `H`. For the `i`-th batch edge `(u, v)` they are the maximal cliques of
//!   the subgraph induced by `{u, v} ∪ (Γ(u) ∩ Γ(v))`. Either every such
//!   clique is enumerated and the ones holding an earlier batch edge are
//!   dropped ([`NewCliqueAlgo::Filtered`]), or the search itself refuses to
//!   close an earlier batch edge ([`NewCliqueAlgo::Excluding`]).
//! * subsumed cliques are found by splitting every new clique along its
//!   batch edges (each split removes one endpoint) and keeping the pieces
//!   that are registered maximal cliques of `G`.
//!
//! Deletion runs the same machinery backwards: the cliques lost are the
//! "new" cliques of going from `G - H` to `G`, and the cliques gained are
//! the pieces of those that are maximal in `G - H`.

use std::collections::{BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::batch::{BatchError, BatchMode, EdgeBatch};
use crate::clique::Clique;
use crate::graph::{Edge, Graph, VertexId};
use crate::pivot::{self, ExcludedEdgeSet, LocalGraph, Search};
use crate::signature::{CliqueRegistry, RegistryError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error(transparent)]
    Batch(#[from] BatchError),
    #[error("registry out of sync with the graph: {0}")]
    Registry(#[from] RegistryError),
}

/// Maximal cliques gained (`new_cliques`) and lost (`del_cliques`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChangeSet {
    pub new_cliques: Vec<Clique>,
    pub del_cliques: Vec<Clique>,
}

impl ChangeSet {
    /// Symmetric difference of two clique sets, both halves sorted.
    pub fn from_sets(before: &BTreeSet<Clique>, after: &BTreeSet<Clique>) -> Self {
        ChangeSet {
            new_cliques: after.difference(before).cloned().collect(),
            del_cliques: before.difference(after).cloned().collect(),
        }
    }

    /// Both halves sorted, for order-insensitive comparison.
    pub fn normalized(mut self) -> Self {
        self.new_cliques.sort_unstable();
        self.del_cliques.sort_unstable();
        self
    }

    pub fn is_empty(&self) -> bool {
        self.new_cliques.is_empty() && self.del_cliques.is_empty()
    }

    pub fn len(&self) -> usize {
        self.new_cliques.len() + self.del_cliques.len()
    }

    pub fn swapped(self) -> Self {
        ChangeSet { new_cliques: self.del_cliques, del_cliques: self.new_cliques }
    }

    /// Net change of applying `self` and then `next`.
    ///
    /// A clique created by one step and destroyed by the other cancels.
    pub fn then(self, next: ChangeSet) -> ChangeSet {
        let first_new: HashSet<&Clique> = self.new_cliques.iter().collect();
        let first_del: HashSet<&Clique> = self.del_cliques.iter().collect();
        let next_new: HashSet<&Clique> = next.new_cliques.iter().collect();
        let next_del: HashSet<&Clique> = next.del_cliques.iter().collect();

        let mut new_cliques: Vec<Clique> = self.new_cliques.iter().filter(|c| !next_del.contains(c)).cloned().collect();
        new_cliques.extend(next.new_cliques.iter().filter(|c| !first_del.contains(c)).cloned());
        let mut del_cliques: Vec<Clique> = self.del_cliques.iter().filter(|c| !next_new.contains(c)).cloned().collect();
        del_cliques.extend(next.del_cliques.iter().filter(|c| !first_new.contains(c)).cloned());
        ChangeSet { new_cliques, del_cliques }
    }

    /// Sum of `k(k-1)/2` over every changed clique.
    pub fn total_change_size(&self) -> u64 {
        self.new_cliques.iter().chain(&self.del_cliques).map(Clique::edge_count).sum()
    }
}

/// How new cliques are enumerated per batch edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NewCliqueAlgo {
    /// Enumerate all maximal cliques of the edge's subgraph, drop those that
    /// contain an earlier batch edge.
    Filtered,
    /// Never grow a clique across an earlier batch edge.
    #[default]
    Excluding,
}

/// Counts reported by the streaming update.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ChangeCounts {
    pub new_count: usize,
    pub del_count: usize,
    pub total_change_size: u64,
}

/// Vertex set `{u, v} ∪ (Γ(u) ∩ Γ(v))`, sorted.
fn edge_neighborhood(g: &Graph, e: Edge) -> Vec<VertexId> {
    let mut vs = g.common_neighbors(e.u(), e.v()).expect("batch endpoints are in the graph");
    for x in [e.u(), e.v()] {
        let pos = vs.binary_search(&x).unwrap_err();
        vs.insert(pos, x);
    }
    vs
}

/// New cliques of `g_prime`, which must already contain `edges`, by full
/// enumeration per edge followed by suppression of repeats.
fn new_cliques_filtered<F: FnMut(Clique)>(g_prime: &Graph, edges: &[Edge], mut emit: F) {
    let mut earlier: HashMap<VertexId, Vec<(VertexId, usize)>> = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        earlier.entry(e.u()).or_default().push((e.v(), i));
        earlier.entry(e.v()).or_default().push((e.u(), i));
    }
    for (i, &e) in edges.iter().enumerate() {
        let local = LocalGraph::induced(g_prime, edge_neighborhood(g_prime, e));
        let cand: Vec<u32> = (0..local.len() as u32).collect();
        let holds_earlier = |c: &Clique| {
            c.vertices()
                .iter()
                .any(|a| earlier.get(a).is_some_and(|list| list.iter().any(|&(b, j)| j < i && c.contains(b))))
        };
        Search::new(&local, None, |c: Clique| {
            if !holds_earlier(&c) {
                emit(c);
            }
        })
        .run(cand, Vec::new());
    }
}

/// New cliques of `g_prime` without ever generating one twice: the search
/// for edge `i` excludes edges `0..i`.
fn new_cliques_excluding<F: FnMut(Clique)>(g_prime: &Graph, edges: &[Edge], mut emit: F) {
    let mut excl = ExcludedEdgeSet::new();
    for &e in edges {
        let vs = edge_neighborhood(g_prime, e);
        let local = LocalGraph::induced(g_prime, vs);
        let (iu, iv) = (local.index_of(e.u()).expect("endpoint"), local.index_of(e.v()).expect("endpoint"));
        let cand: Vec<u32> = (0..local.len() as u32).filter(|&i| i != iu && i != iv).collect();
        let mut search = Search::new(&local, Some(&excl), &mut emit);
        search.push(iu);
        search.push(iv);
        search.run(cand, Vec::new());
        excl.insert(e);
    }
}

fn new_cliques_with<F: FnMut(Clique)>(algo: NewCliqueAlgo, g_prime: &Graph, edges: &[Edge], emit: F) {
    match algo {
        NewCliqueAlgo::Filtered => new_cliques_filtered(g_prime, edges, emit),
        NewCliqueAlgo::Excluding => new_cliques_excluding(g_prime, edges, emit),
    }
}

/// Inserts `h` into `g` and emits every maximal clique that did not exist
/// before, once each, using full enumeration plus suppression.
///
/// On a validation error `g` is unchanged.
pub fn enum_new<F: FnMut(Clique)>(g: &mut Graph, h: &EdgeBatch, emit: F) -> Result<(), DeltaError> {
    h.expect_mode(BatchMode::Insert)?;
    h.apply(g)?;
    new_cliques_filtered(g, h.edges(), emit);
    Ok(())
}

/// As [`enum_new`], but the search for each edge skips cliques that hold an
/// earlier batch edge, so nothing is generated twice.
pub fn enum_new_te<F: FnMut(Clique)>(g: &mut Graph, h: &EdgeBatch, emit: F) -> Result<(), DeltaError> {
    h.expect_mode(BatchMode::Insert)?;
    h.apply(g)?;
    new_cliques_excluding(g, h.edges(), emit);
    Ok(())
}

/// Per-update bookkeeping of the candidate splitting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SplitStats {
    /// New cliques processed.
    pub examined: usize,
    /// Largest candidate set seen for any single new clique.
    pub peak_candidates: usize,
    /// New cliques whose candidate set outgrew `2^k`, `k` being the number of
    /// batch edges inside the clique. Always zero for a correct split.
    pub bound_exceeded: usize,
}

/// Splits cliques along batch edges and reports the pieces that pass a
/// membership test, each at most once.
struct SubsumedFinder {
    batch_incidence: HashMap<VertexId, Vec<VertexId>>,
    emitted: HashSet<Clique>,
    stats: SplitStats,
}

impl SubsumedFinder {
    fn new(h: &EdgeBatch) -> Self {
        let mut batch_incidence: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
        for e in h.edges() {
            batch_incidence.entry(e.u()).or_default().push(e.v());
        }
        SubsumedFinder { batch_incidence, emitted: HashSet::new(), stats: SplitStats::default() }
    }

    fn batch_edges_within(&self, c: &Clique) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for &a in c.vertices() {
            if let Some(others) = self.batch_incidence.get(&a) {
                out.extend(others.iter().filter(|&&b| c.contains(b)).map(|&b| (a, b)));
            }
        }
        out
    }

    /// Maximal cliques of `c` minus the batch edges it contains.
    fn pieces(&mut self, c: &Clique) -> Vec<Clique> {
        let inner = self.batch_edges_within(c);
        let mut current: BTreeSet<Clique> = BTreeSet::from([c.clone()]);
        let mut peak = 1;
        for (u, v) in &inner {
            let mut next = BTreeSet::new();
            for piece in current {
                if piece.contains(*u) && piece.contains(*v) {
                    next.insert(piece.without(*u));
                    next.insert(piece.without(*v));
                } else {
                    next.insert(piece);
                }
            }
            current = next;
            peak = peak.max(current.len());
        }
        self.stats.examined += 1;
        self.stats.peak_candidates = self.stats.peak_candidates.max(peak);
        let bound = 1usize.checked_shl(inner.len() as u32).unwrap_or(usize::MAX);
        if peak > bound {
            self.stats.bound_exceeded += 1;
        }
        current.into_iter().collect()
    }

    fn process<M, F, E>(&mut self, c: &Clique, is_member: &mut M, emit: &mut F) -> Result<(), E>
    where
        M: FnMut(&Clique) -> Result<bool, E>,
        F: FnMut(Clique),
    {
        for piece in self.pieces(c) {
            if !self.emitted.contains(&piece) && is_member(&piece)? {
                self.emitted.insert(piece.clone());
                emit(piece);
            }
        }
        Ok(())
    }
}

/// Emits the cliques of the pre-update graph that the new cliques subsume.
///
/// `registry` must describe the graph before `h` was inserted and
/// `new_cliques` must be the new cliques of that insertion; it is consumed
/// in one pass.
pub fn enum_subsumed<I, F>(
    h: &EdgeBatch,
    registry: &CliqueRegistry,
    new_cliques: I,
    mut emit: F,
) -> Result<SplitStats, DeltaError>
where
    I: IntoIterator<Item = Clique>,
    F: FnMut(Clique),
{
    let mut finder = SubsumedFinder::new(h);
    let mut member = |c: &Clique| registry.contains(c);
    for c in new_cliques {
        finder.process(&c, &mut member, &mut emit)?;
    }
    Ok(finder.stats)
}

/// Inserts `h`, returning the change and bringing `registry` up to date.
pub fn apply_insert_batch(
    g: &mut Graph,
    h: &EdgeBatch,
    registry: &mut CliqueRegistry,
) -> Result<ChangeSet, DeltaError> {
    apply_insert_batch_with(NewCliqueAlgo::Excluding, g, h, registry)
}

pub fn apply_insert_batch_with(
    algo: NewCliqueAlgo,
    g: &mut Graph,
    h: &EdgeBatch,
    registry: &mut CliqueRegistry,
) -> Result<ChangeSet, DeltaError> {
    let mut change = ChangeSet::default();
    let mut new_cliques = Vec::new();
    let mut del_cliques = Vec::new();
    apply_insert_batch_streaming(
        algo,
        g,
        h,
        registry,
        |c| new_cliques.push(c.clone()),
        |c| del_cliques.push(c.clone()),
    )?;
    change.new_cliques = new_cliques;
    change.del_cliques = del_cliques;
    Ok(change)
}

/// Insertion that hands each changed clique to a callback as soon as it is
/// known, without collecting the new cliques.
///
/// New cliques are fed straight into the subsumed-clique search. The
/// registry and graph are rolled back if the registry turns out to be out of
/// sync.
pub fn apply_insert_batch_streaming<N, D>(
    algo: NewCliqueAlgo,
    g: &mut Graph,
    h: &EdgeBatch,
    registry: &mut CliqueRegistry,
    mut on_new: N,
    mut on_del: D,
) -> Result<ChangeCounts, DeltaError>
where
    N: FnMut(&Clique),
    D: FnMut(&Clique),
{
    h.expect_mode(BatchMode::Insert)?;
    h.apply(g)?;

    let mut counts = ChangeCounts::default();
    let mut finder = SubsumedFinder::new(h);
    let mut subsumed: Vec<Clique> = Vec::new();
    let mut registered: Vec<Clique> = Vec::new();
    let mut failure: Option<RegistryError> = None;

    {
        let reg = &mut *registry;
        new_cliques_with(algo, g, h.edges(), |c| {
            if failure.is_some() {
                return;
            }
            // Pieces never contain a batch edge, so registering `c` first
            // cannot make a piece look maximal.
            if let Err(err) = reg.insert(&c) {
                failure = Some(err);
                return;
            }
            counts.new_count += 1;
            counts.total_change_size += c.edge_count();
            on_new(&c);
            let mut member = |p: &Clique| reg.contains(p);
            let mut record = |p: Clique| subsumed.push(p);
            if let Err(err) = finder.process(&c, &mut member, &mut record) {
                failure = Some(err);
            }
            registered.push(c);
        });
    }

    if failure.is_none() {
        if let Err(err) = registry.update(&subsumed, &[]) {
            failure = Some(err);
        }
    }
    if let Some(err) = failure {
        for c in &registered {
            let _ = registry.update(std::slice::from_ref(c), &[]);
        }
        for &e in h.edges() {
            g.remove_edge(e).expect("inserted above");
        }
        return Err(err.into());
    }

    for c in &subsumed {
        counts.del_count += 1;
        counts.total_change_size += c.edge_count();
        on_del(c);
    }
    Ok(counts)
}

/// Deletes `h`, returning the change and bringing `registry` up to date.
///
/// Lost cliques are the cliques of `G` holding a deleted edge, found exactly
/// like new cliques of the reverse insertion. Gained cliques are the pieces
/// of those that are maximal in `G - H`; maximality is checked on the graph
/// since the registry only knows `G`.
pub fn apply_delete_batch(
    g: &mut Graph,
    h: &EdgeBatch,
    registry: &mut CliqueRegistry,
) -> Result<ChangeSet, DeltaError> {
    apply_delete_batch_with(NewCliqueAlgo::Excluding, g, h, registry)
}

pub fn apply_delete_batch_with(
    algo: NewCliqueAlgo,
    g: &mut Graph,
    h: &EdgeBatch,
    registry: &mut CliqueRegistry,
) -> Result<ChangeSet, DeltaError> {
    h.expect_mode(BatchMode::Delete)?;
    h.validate(g)?;

    let mut lost = Vec::new();
    new_cliques_with(algo, g, h.edges(), |c| lost.push(c));
    h.apply(g).expect("validated");

    let mut gained = Vec::new();
    let mut finder = SubsumedFinder::new(h);
    let graph: &Graph = g;
    let mut maximal_after = |c: &Clique| -> Result<bool, RegistryError> { Ok(graph.is_maximal_clique(c.vertices())) };
    for c in &lost {
        finder.process(c, &mut maximal_after, &mut |p| gained.push(p)).expect("graph check is infallible");
    }

    if let Err(err) = registry.update(&lost, &gained) {
        h.reversed().apply(g).expect("edges were just removed");
        return Err(err.into());
    }
    Ok(ChangeSet { new_cliques: gained, del_cliques: lost })
}

/// Applies `inserts` and then `deletes`, returning the net change.
///
/// The two batches must be disjoint and both valid against `g`.
pub fn fully_dynamic(
    g: &mut Graph,
    inserts: &EdgeBatch,
    deletes: &EdgeBatch,
    registry: &mut CliqueRegistry,
) -> Result<ChangeSet, DeltaError> {
    inserts.expect_mode(BatchMode::Insert)?;
    deletes.expect_mode(BatchMode::Delete)?;
    let inserted: HashSet<Edge> = inserts.edges().iter().copied().collect();
    if let Some(&e) = deletes.edges().iter().find(|e| inserted.contains(e)) {
        return Err(BatchError::Overlap(e).into());
    }
    inserts.validate(g)?;
    deletes.validate(g)?;

    let first = apply_insert_batch(g, inserts, registry)?;
    let second = apply_delete_batch(g, deletes, registry)?;
    Ok(first.then(second))
}

/// Baseline: apply `h`, re-enumerate every maximal clique of the whole graph
/// and diff against `current`, which is then replaced.
pub fn naive_change(g: &mut Graph, h: &EdgeBatch, current: &mut HashSet<Clique>) -> Result<ChangeSet, DeltaError> {
    h.apply(g)?;
    let mut after = HashSet::with_capacity(current.len());
    pivot::for_each_maximal_clique(g, |c| {
        after.insert(c);
    });
    let change = ChangeSet {
        new_cliques: after.iter().filter(|c| !current.contains(*c)).cloned().collect(),
        del_cliques: current.iter().filter(|c| !after.contains(*c)).cloned().collect(),
    };
    *current = after;
    Ok(change)
}

/// A graph together with the registry of its maximal cliques.
#[derive(Debug, Clone)]
pub struct DynamicCliques {
    graph: Graph,
    registry: CliqueRegistry,
}

impl DynamicCliques {
    /// Enumerates the initial cliques to seed the registry.
    pub fn new(graph: Graph, verifying: bool) -> Result<Self, DeltaError> {
        let mut registry = if verifying { CliqueRegistry::verifying() } else { CliqueRegistry::new() };
        let mut failure = None;
        pivot::for_each_maximal_clique(&graph, |c| {
            if failure.is_none() {
                failure = registry.insert(&c).err();
            }
        });
        match failure {
            Some(err) => Err(err.into()),
            None => Ok(DynamicCliques { graph, registry }),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn registry(&self) -> &CliqueRegistry {
        &self.registry
    }

    pub fn into_parts(self) -> (Graph, CliqueRegistry) {
        (self.graph, self.registry)
    }

    pub fn insert(&mut self, h: &EdgeBatch) -> Result<ChangeSet, DeltaError> {
        apply_insert_batch(&mut self.graph, h, &mut self.registry)
    }

    pub fn insert_with(&mut self, algo: NewCliqueAlgo, h: &EdgeBatch) -> Result<ChangeSet, DeltaError> {
        apply_insert_batch_with(algo, &mut self.graph, h, &mut self.registry)
    }

    pub fn delete(&mut self, h: &EdgeBatch) -> Result<ChangeSet, DeltaError> {
        apply_delete_batch(&mut self.graph, h, &mut self.registry)
    }

    pub fn update(&mut self, inserts: &EdgeBatch, deletes: &EdgeBatch) -> Result<ChangeSet, DeltaError> {
        fully_dynamic(&mut self.graph, inserts, deletes, &mut self.registry)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_change, oracle_cliques};

    fn e(a: u64, b: u64) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn c(v: &[u64]) -> Clique {
        Clique::from_vertices(v.iter().copied())
    }

    fn graph(edges: &[(u64, u64)], isolated: &[u64]) -> Graph {
        let mut g = Graph::from_edges(edges.iter().map(|&(a, b)| e(a, b)));
        for &v in isolated {
            g.add_vertex(v);
        }
        g
    }

    fn batch(mode: BatchMode, edges: &[(u64, u64)]) -> EdgeBatch {
        EdgeBatch::new(edges.iter().map(|&(a, b)| e(a, b)).collect(), mode).unwrap()
    }

    fn registry_of(g: &Graph) -> CliqueRegistry {
        CliqueRegistry::from_cliques(&pivot::maximal_cliques(g), true).unwrap()
    }

    fn sorted(mut v: Vec<Clique>) -> Vec<Clique> {
        v.sort();
        v
    }

    #[test]
    fn enum_new_joins_isolated_vertex() {
        let mut g = graph(&[(1, 2)], &[3]);
        let mut out = Vec::new();
        enum_new(&mut g, &batch(BatchMode::Insert, &[(2, 3)]), |c| out.push(c)).unwrap();
        assert_eq!(out, vec![c(&[2, 3])]);
        assert!(g.has_edge(e(2, 3)));
    }

    #[test]
    fn enum_new_rejects_invalid_batch_without_mutation() {
        let mut g = graph(&[(1, 2)], &[]);
        let before = g.clone();
        let err = enum_new(&mut g, &batch(BatchMode::Insert, &[(3, 4), (1, 2)]), |_| {}).unwrap_err();
        assert_eq!(err, DeltaError::Batch(BatchError::AlreadyPresent(e(1, 2))));
        assert_eq!(g, before);
    }

    #[test]
    fn k4_from_empty_is_reported_once() {
        let k4 = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        for te in [false, true] {
            let mut g = graph(&[], &[1, 2, 3, 4]);
            let mut out = Vec::new();
            let h = batch(BatchMode::Insert, &k4);
            if te {
                enum_new_te(&mut g, &h, |c| out.push(c)).unwrap();
            } else {
                enum_new(&mut g, &h, |c| out.push(c)).unwrap();
            }
            assert_eq!(out, vec![c(&[1, 2, 3, 4])]);
        }
    }

    #[test]
    fn figure_style_edge_ordering() {
        // Inserting (3,6) then (4,6); {2,3,4,6} belongs to (3,6).
        let base = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5), (2, 6), (5, 6)];
        let mut g = graph(&base, &[]);
        let mut out = Vec::new();
        enum_new_te(&mut g, &batch(BatchMode::Insert, &[(3, 6), (4, 6)]), |c| out.push(c)).unwrap();
        let oracle = oracle_change(&graph(&base, &[]), &batch(BatchMode::Insert, &[(3, 6), (4, 6)])).unwrap();
        assert_eq!(sorted(out.clone()), oracle.new_cliques);
        let pos_2346 = out.iter().position(|x| *x == c(&[2, 3, 4, 6])).unwrap();
        let pos_456 = out.iter().position(|x| *x == c(&[4, 5, 6])).unwrap();
        assert!(pos_2346 < pos_456);
    }

    #[test]
    fn subsumed_for_closed_path_and_joined_singletons() {
        let path = graph(&[(1, 2), (2, 3)], &[]);
        let reg = registry_of(&path);
        let h = batch(BatchMode::Insert, &[(1, 3)]);
        let mut out = Vec::new();
        let stats = enum_subsumed(&h, &reg, [c(&[1, 2, 3])], |x| out.push(x)).unwrap();
        assert_eq!(sorted(out), vec![c(&[1, 2]), c(&[2, 3])]);
        assert_eq!(stats.bound_exceeded, 0);

        let iso = graph(&[], &[1, 2]);
        let reg = registry_of(&iso);
        let h = batch(BatchMode::Insert, &[(1, 2)]);
        let mut out = Vec::new();
        enum_subsumed(&h, &reg, [c(&[1, 2])], |x| out.push(x)).unwrap();
        assert_eq!(sorted(out), vec![c(&[1]), c(&[2])]);
    }

    #[test]
    fn subsumed_deduplicates_across_new_cliques() {
        // {1,2} is subsumed by both {1,2,3} and {1,2,4} after inserting
        // (1,3),(2,3),(1,4),(2,4) around an existing edge.
        let g = graph(&[(1, 2)], &[3, 4]);
        let reg = registry_of(&g);
        let h = batch(BatchMode::Insert, &[(1, 3), (2, 3), (1, 4), (2, 4)]);
        let mut out = Vec::new();
        enum_subsumed(&h, &reg, [c(&[1, 2, 3]), c(&[1, 2, 4])], |x| out.push(x)).unwrap();
        assert_eq!(sorted(out), vec![c(&[1, 2]), c(&[3]), c(&[4])]);
    }

    #[test]
    fn insert_updates_registry() {
        let mut g = graph(&[(1, 2), (2, 3)], &[]);
        let mut reg = registry_of(&g);
        let ch = apply_insert_batch(&mut g, &batch(BatchMode::Insert, &[(1, 3)]), &mut reg).unwrap();
        assert_eq!(ch.clone().normalized().new_cliques, vec![c(&[1, 2, 3])]);
        assert_eq!(ch.normalized().del_cliques, vec![c(&[1, 2]), c(&[2, 3])]);
        assert!(reg.same_signatures(&registry_of(&g)));
    }

    #[test]
    fn empty_batch_is_no_change() {
        let mut g = graph(&[(1, 2), (2, 3)], &[9]);
        let mut reg = registry_of(&g);
        let before = reg.clone();
        let ch = apply_insert_batch(&mut g, &EdgeBatch::empty(BatchMode::Insert), &mut reg).unwrap();
        assert!(ch.is_empty());
        assert_eq!(reg, before);
    }

    #[test]
    fn insert_with_stale_registry_rolls_back() {
        let mut g = graph(&[(1, 2), (2, 3)], &[]);
        let mut reg = registry_of(&g);
        reg.insert(&c(&[1, 2, 3])).unwrap();
        let before = (g.clone(), reg.clone());
        let err = apply_insert_batch(&mut g, &batch(BatchMode::Insert, &[(1, 3)]), &mut reg).unwrap_err();
        assert!(matches!(err, DeltaError::Registry(_)));
        assert_eq!((g, reg), before);
    }

    #[test]
    fn delete_from_triangle() {
        let mut g = graph(&[(1, 2), (2, 3), (1, 3)], &[]);
        let mut reg = registry_of(&g);
        let ch = apply_delete_batch(&mut g, &batch(BatchMode::Delete, &[(1, 3)]), &mut reg).unwrap();
        let ch = ch.normalized();
        assert_eq!(ch.del_cliques, vec![c(&[1, 2, 3])]);
        assert_eq!(ch.new_cliques, vec![c(&[1, 2]), c(&[2, 3])]);
        assert!(reg.same_signatures(&registry_of(&g)));
    }

    #[test]
    fn delete_all_triangle_edges() {
        let tri = [(1, 2), (2, 3), (1, 3)];
        let mut g = graph(&tri, &[]);
        let mut reg = registry_of(&g);
        let ch = apply_delete_batch(&mut g, &batch(BatchMode::Delete, &tri), &mut reg).unwrap().normalized();
        let expected = oracle_change(&graph(&tri, &[]), &batch(BatchMode::Delete, &tri)).unwrap();
        assert_eq!(ch, expected);
        assert_eq!(ch.new_cliques, vec![c(&[1]), c(&[2]), c(&[3])]);
        assert_eq!(ch.del_cliques, vec![c(&[1, 2, 3])]);
    }

    #[test]
    fn delete_absent_edge_is_rejected() {
        let mut g = graph(&[(1, 2)], &[3]);
        let mut reg = registry_of(&g);
        let before = (g.clone(), reg.clone());
        let err = apply_delete_batch(&mut g, &batch(BatchMode::Delete, &[(2, 3)]), &mut reg).unwrap_err();
        assert_eq!(err, DeltaError::Batch(BatchError::NotPresent(e(2, 3))));
        assert_eq!((g, reg), before);
    }

    #[test]
    fn fully_dynamic_without_inserts_matches_delete() {
        let base = [(1, 2), (2, 3), (1, 3), (3, 4)];
        let d = batch(BatchMode::Delete, &[(1, 3)]);
        let mut g1 = graph(&base, &[]);
        let mut r1 = registry_of(&g1);
        let a = fully_dynamic(&mut g1, &EdgeBatch::empty(BatchMode::Insert), &d, &mut r1).unwrap();
        let mut g2 = graph(&base, &[]);
        let mut r2 = registry_of(&g2);
        let b = apply_delete_batch(&mut g2, &d, &mut r2).unwrap();
        assert_eq!(a.normalized(), b.normalized());
        assert_eq!(g1, g2);
    }

    #[test]
    fn fully_dynamic_rejects_overlap() {
        let mut g = graph(&[(1, 2), (2, 3)], &[]);
        let mut reg = registry_of(&g);
        let err =
            fully_dynamic(&mut g, &batch(BatchMode::Insert, &[(1, 3)]), &batch(BatchMode::Delete, &[(1, 3)]), &mut reg)
                .unwrap_err();
        assert_eq!(err, DeltaError::Batch(BatchError::Overlap(e(1, 3))));
    }

    #[test]
    fn insert_then_delete_cancels() {
        let mut g = graph(&[(1, 2), (2, 3)], &[]);
        let mut reg = registry_of(&g);
        let up = apply_insert_batch(&mut g, &batch(BatchMode::Insert, &[(1, 3)]), &mut reg).unwrap();
        let down = apply_delete_batch(&mut g, &batch(BatchMode::Delete, &[(1, 3)]), &mut reg).unwrap();
        assert!(up.then(down).is_empty());
    }

    #[test]
    fn naive_matches_oracle() {
        let base = graph(&[(1, 2), (2, 3), (3, 4)], &[5]);
        let h = batch(BatchMode::Insert, &[(1, 3), (4, 5)]);
        let mut g = base.clone();
        let mut current: HashSet<Clique> = pivot::maximal_cliques(&g).into_iter().collect();
        let ch = naive_change(&mut g, &h, &mut current).unwrap().normalized();
        assert_eq!(ch, oracle_change(&base, &h).unwrap());
        let expect: HashSet<Clique> = oracle_cliques(&g).unwrap().into_iter().collect();
        assert_eq!(current, expect);
    }

    #[test]
    fn metric_example() {
        let ch = ChangeSet { new_cliques: vec![c(&[1, 2, 3]), c(&[4, 5, 6, 7])], del_cliques: vec![c(&[8, 9])] };
        assert_eq!(ch.total_change_size(), 10);
        let singles = ChangeSet { new_cliques: vec![c(&[1])], del_cliques: vec![] };
        assert_eq!(singles.total_change_size(), 0);
    }
}
