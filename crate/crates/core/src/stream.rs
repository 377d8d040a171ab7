//! Edge-list parsing, dynamic stream generation, and the stream file format.
//!
//! Edge lists are SNAP-style text: `#` starts a comment line, every other
//! non-blank line holds two integer vertex ids separated by whitespace.
//! A line with a single id declares an isolated vertex.
//!
//! Stream files look like
//!
//! ```text
//! initial 2
//! 1 2
//! 2 3
//! isolated 1
//! 7
//! batch 1
//! 1 3
//! ```
//!
//! The `isolated` section is written only when the initial graph has
//! isolated vertices. Batches are insert batches, in order.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::batch::EdgeBatch;
use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: expected section header `{expected}`, found `{found}`")]
    Header { line: usize, expected: &'static str, found: String },
    #[error("section `{section}` declares {declared} lines but {found} follow")]
    Count { section: &'static str, declared: usize, found: usize },
    #[error("line {line}: edge {edge} repeats an edge already in the stream")]
    Repeated { line: usize, edge: Edge },
}

/// Lines skipped while reading an edge list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl ParseReport {
    pub fn warnings(&self) -> usize {
        self.self_loops + self.duplicates
    }
}

fn parse_id(token: &str, line: usize) -> Result<VertexId, ParseError> {
    token
        .parse::<u64>()
        .map(VertexId)
        .map_err(|_| ParseError::Syntax { line, message: format!("`{token}` is not a non-negative integer vertex id") })
}

enum Entry {
    Vertex(VertexId),
    Pair(VertexId, VertexId),
}

fn parse_entry(text: &str, line: usize) -> Result<Option<Entry>, ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(None);
    }
    let tokens: Vec<&str> = trimmed.split_whitespace().collect();
    match tokens.as_slice() {
        [v] => Ok(Some(Entry::Vertex(parse_id(v, line)?))),
        [a, b] => Ok(Some(Entry::Pair(parse_id(a, line)?, parse_id(b, line)?))),
        _ => {
            Err(ParseError::Syntax { line, message: format!("expected two vertex ids, found {} tokens", tokens.len()) })
        }
    }
}

/// Reads an edge list. Direction is ignored; repeated edges and self loops
/// are dropped and counted in the report.
pub fn parse_edge_list(text: &str) -> Result<(Graph, ParseReport), ParseError> {
    let mut g = Graph::new();
    let mut report = ParseReport::default();
    for (idx, raw) in text.lines().enumerate() {
        match parse_entry(raw, idx + 1)? {
            None => {}
            Some(Entry::Vertex(v)) => g.add_vertex(v),
            Some(Entry::Pair(a, b)) => match Edge::new(a, b) {
                Err(_) => report.self_loops += 1,
                Ok(e) => {
                    if g.add_edge(e).is_err() {
                        report.duplicates += 1;
                    }
                }
            },
        }
    }
    Ok((g, report))
}

/// Writes `g` as an edge list: edges as `u\tv`, then isolated vertices one
/// per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        writeln!(out, "{}\t{}", e.u(), e.v()).expect("writing to a String");
    }
    for v in isolated_vertices(g) {
        writeln!(out, "{v}").expect("writing to a String");
    }
    out
}

fn isolated_vertices(g: &Graph) -> impl Iterator<Item = VertexId> + '_ {
    g.vertices().filter(|&v| g.degree(v) == Some(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamOrdering {
    Random,
    /// Keep only removed edges incident to the `k` highest-degree vertices
    /// of the initial graph.
    HighDegree(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StreamConfig {
    pub retain_prob: f64,
    pub batch_size: usize,
    pub seed: u64,
    pub ordering: StreamOrdering,
}

impl Default for StreamConfig {
    fn default() -> Self {
        StreamConfig { retain_prob: 0.1, batch_size: 1000, seed: 0, ordering: StreamOrdering::Random }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("retain probability {0} is outside [0, 1]")]
    RetainProb(f64),
    #[error("batch size must be positive")]
    BatchSize,
    #[error("high-degree ordering needs k > 0")]
    HighDegreeK,
}

impl StreamConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(0.0..=1.0).contains(&self.retain_prob) {
            return Err(ConfigError::RetainProb(self.retain_prob));
        }
        if self.batch_size == 0 {
            return Err(ConfigError::BatchSize);
        }
        if self.ordering == StreamOrdering::HighDegree(0) {
            return Err(ConfigError::HighDegreeK);
        }
        Ok(())
    }
}

/// An initial graph and the insert batches that follow it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeStream {
    pub initial: Graph,
    pub batches: Vec<EdgeBatch>,
}

impl EdgeStream {
    pub fn edge_count(&self) -> usize {
        self.batches.iter().map(EdgeBatch::len).sum()
    }
}

/// Turns a static graph into an initial graph plus batches of its removed
/// edges.
///
/// Each edge, visited in ascending order, is kept with probability
/// `retain_prob` using ChaCha8 seeded with `seed`. The removed edges are
/// shuffled with the same generator (after the high-degree filter, if any)
/// and cut into batches. Every vertex of `g` stays in the initial graph.
pub fn gen_stream(g: &Graph, cfg: &StreamConfig) -> Result<EdgeStream, ConfigError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut initial = Graph::new();
    for v in g.vertices() {
        initial.add_vertex(v);
    }
    let mut removed = Vec::new();
    for e in g.edges() {
        if rng.random::<f64>() < cfg.retain_prob {
            initial.add_edge(e).expect("edges of a simple graph are distinct");
        } else {
            removed.push(e);
        }
    }
    if let StreamOrdering::HighDegree(k) = cfg.ordering {
        let mut by_degree: Vec<(usize, VertexId)> =
            initial.vertices().map(|v| (initial.degree(v).unwrap_or(0), v)).collect();
        by_degree.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut hubs: Vec<VertexId> = by_degree.into_iter().take(k).map(|(_, v)| v).collect();
        hubs.sort_unstable();
        removed.retain(|e| hubs.binary_search(&e.u()).is_ok() || hubs.binary_search(&e.v()).is_ok());
    }
    removed.shuffle(&mut rng);
    let batches = removed
        .chunks(cfg.batch_size)
        .map(|chunk| EdgeBatch::insert(chunk.to_vec()).expect("distinct edges"))
        .collect();
    Ok(EdgeStream { initial, batches })
}

pub fn write_stream(stream: &EdgeStream) -> String {
    let mut out = String::new();
    writeln!(out, "initial {}", stream.initial.edge_count()).expect("writing to a String");
    for e in stream.initial.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).expect("writing to a String");
    }
    let isolated: Vec<VertexId> = isolated_vertices(&stream.initial).collect();
    if !isolated.is_empty() {
        writeln!(out, "isolated {}", isolated.len()).expect("writing to a String");
        for v in isolated {
            writeln!(out, "{v}").expect("writing to a String");
        }
    }
    for b in &stream.batches {
        writeln!(out, "batch {}", b.len()).expect("writing to a String");
        for e in b.edges() {
            writeln!(out, "{} {}", e.u(), e.v()).expect("writing to a String");
        }
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    /// Next non-blank line with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            if !l.trim().is_empty() {
                return Some((i + 1, l.trim()));
            }
        }
        None
    }

    fn peek_is_header(&mut self) -> bool {
        while let Some((_, l)) = self.inner.peek() {
            if l.trim().is_empty() {
                self.inner.next();
                continue;
            }
            let word = l.split_whitespace().next().unwrap_or("");
            return word.chars().all(|c| c.is_ascii_alphabetic());
        }
        true
    }
}

fn parse_header(line: usize, text: &str, expected: &'static str) -> Result<usize, ParseError> {
    let mut parts = text.split_whitespace();
    let bad = || ParseError::Header { line, expected, found: text.to_string() };
    if parts.next() != Some(expected) {
        return Err(bad());
    }
    let count = parts.next().and_then(|c| c.parse::<usize>().ok()).ok_or_else(bad)?;
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(count)
}

fn read_section<T>(
    lines: &mut Lines<'_>,
    section: &'static str,
    declared: usize,
    mut item: impl FnMut(usize, &str) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let mut out = Vec::with_capacity(declared.min(1 << 20));
    while !lines.peek_is_header() {
        let (line, text) = lines.next().expect("peeked");
        if out.len() == declared {
            return Err(ParseError::Count { section, declared, found: declared + 1 });
        }
        out.push(item(line, text)?);
    }
    if out.len() != declared {
        return Err(ParseError::Count { section, declared, found: out.len() });
    }
    Ok(out)
}

fn parse_edge_line(line: usize, text: &str) -> Result<Edge, ParseError> {
    match parse_entry(text, line)? {
        Some(Entry::Pair(a, b)) => {
            Edge::new(a, b).map_err(|_| ParseError::Syntax { line, message: format!("self loop on vertex {a}") })
        }
        _ => Err(ParseError::Syntax { line, message: "expected two vertex ids".into() }),
    }
}

/// Parses the stream file format; every edge may appear at most once across
/// the initial graph and all batches.
pub fn read_stream(text: &str) -> Result<EdgeStream, ParseError> {
    let mut lines = Lines { inner: text.lines().enumerate().peekable() };
    let (line, header) =
        lines.next().ok_or(ParseError::Header { line: 1, expected: "initial", found: String::new() })?;
    let declared = parse_header(line, header, "initial")?;
    let mut initial = Graph::new();
    let mut seen = std::collections::HashSet::new();
    for (line, e) in read_section(&mut lines, "initial", declared, |l, t| Ok((l, parse_edge_line(l, t)?)))? {
        if !seen.insert(e) {
            return Err(ParseError::Repeated { line, edge: e });
        }
        initial.add_edge(e).expect("checked for repeats");
    }

    let mut batches = Vec::new();
    while let Some((line, header)) = lines.next() {
        let word = header.split_whitespace().next().unwrap_or("");
        if word == "isolated" && batches.is_empty() {
            let k = parse_header(line, header, "isolated")?;
            for v in read_section(&mut lines, "isolated", k, |l, t| match parse_entry(t, l)? {
                Some(Entry::Vertex(v)) => Ok(v),
                _ => Err(ParseError::Syntax { line: l, message: "expected one vertex id".into() }),
            })? {
                initial.add_vertex(v);
            }
            continue;
        }
        let k = parse_header(line, header, "batch")?;
        let edges = read_section(&mut lines, "batch", k, |l, t| Ok((l, parse_edge_line(l, t)?)))?;
        let mut batch = Vec::with_capacity(edges.len());
        for (line, e) in edges {
            if !seen.insert(e) {
                return Err(ParseError::Repeated { line, edge: e });
            }
            batch.push(e);
        }
        batches.push(EdgeBatch::insert(batch).expect("checked for repeats"));
    }
    Ok(EdgeStream { initial, batches })
}

/// Uniform random simple graph with exactly `m` edges on vertices `0..n`.
pub fn random_graph(n: u64, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let max_edges = (n * n.saturating_sub(1) / 2) as usize;
    while g.edge_count() < m.min(max_edges) {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if let Ok(e) = Edge::new(a, b) {
            let _ = g.add_edge(e);
        }
    }
    g
}

/// Planted-community graph on vertices `0..n`: consecutive blocks of
/// `community` vertices with each inner pair joined with probability
/// `p_in`, plus `m_out` uniformly random extra edges.
pub fn community_graph(n: u64, community: u64, p_in: f64, m_out: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let community = community.max(1);
    let mut start = 0;
    while start < n {
        let end = (start + community).min(n);
        for a in start..end {
            for b in a + 1..end {
                if rng.random::<f64>() < p_in {
                    g.add_edge(Edge::new(a, b).expect("a < b")).expect("fresh pair");
                }
            }
        }
        start = end;
    }
    let target = g.edge_count() + m_out;
    let max_edges = (n * n.saturating_sub(1) / 2) as usize;
    while g.edge_count() < target.min(max_edges) {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if let Ok(e) = Edge::new(a, b) {
            let _ = g.add_edge(e);
        }
    }
    g
}
