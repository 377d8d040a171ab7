//! Extremal constructions for clique counts and clique change.
//!
//! All constructions number their vertices `1..=n`, laying out parts as
//! consecutive blocks of ascending ids, so output is reproducible.

use thiserror::Error;

use crate::batch::EdgeBatch;
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("n = {n} is out of range: {reason}")]
    BadSize { n: u64, reason: &'static str },
    #[error("eps = {eps} is out of range for n = {n}: {reason}")]
    BadSplit { n: u64, eps: u64, reason: &'static str },
    #[error("maximum clique count for n = {0} overflows u64")]
    Overflow(u64),
}

/// Largest number of maximal cliques in a graph on `n ≥ 2` vertices:
/// `3^(n/3)`, `4·3^((n-4)/3)` or `2·3^((n-2)/3)` by `n mod 3`.
pub fn f_max(n: u64) -> Result<u64, ExtremalError> {
    if n < 2 {
        return Err(ExtremalError::BadSize { n, reason: "need n >= 2" });
    }
    let (factor, exp) = match n % 3 {
        0 => (1u64, n / 3),
        1 => (4, (n - 4) / 3),
        _ => (2, (n - 2) / 3),
    };
    u32::try_from(exp)
        .ok()
        .and_then(|e| 3u64.checked_pow(e))
        .and_then(|p| p.checked_mul(factor))
        .ok_or(ExtremalError::Overflow(n))
}

/// Clique count of the block layout used by [`moon_moser`], also defined
/// for one vertex.
fn block_count(n: u64) -> Result<u64, ExtremalError> {
    if n == 1 {
        Ok(1)
    } else {
        f_max(n)
    }
}

/// Part sizes: one odd part (4 or 2) first when `n mod 3 ≠ 0`, then threes.
fn part_sizes(n: u64) -> Vec<u64> {
    let mut parts = Vec::new();
    let mut rest = n;
    match n % 3 {
        1 if n >= 4 => {
            parts.push(4);
            rest -= 4;
        }
        1 => {
            parts.push(1);
            rest -= 1;
        }
        2 => {
            parts.push(2);
            rest -= 2;
        }
        _ => {}
    }
    parts.extend(std::iter::repeat_n(3, (rest / 3) as usize));
    parts
}

/// Complete multipartite graph over consecutive blocks starting at `first`.
fn multipartite(first: u64, parts: &[u64]) -> Graph {
    let mut g = Graph::new();
    let mut blocks = Vec::new();
    let mut next = first;
    for &size in parts {
        blocks.push(next..next + size);
        for v in next..next + size {
            g.add_vertex(v);
        }
        next += size;
    }
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            for x in a.clone() {
                for y in b.clone() {
                    g.add_edge(Edge::new(x, y).expect("distinct")).expect("fresh");
                }
            }
        }
    }
    g
}

fn moon_moser_from(first: u64, n: u64) -> Graph {
    multipartite(first, &part_sizes(n))
}

/// Same as [`moon_moser_from`] but, when `n ≡ 1 (mod 3)`, the block of four
/// carries a 4-cycle, so every vertex has a neighbor in the block set.
fn moon_moser_cycle_from(first: u64, n: u64) -> Graph {
    let mut g = moon_moser_from(first, n);
    if n % 3 == 1 && n >= 4 {
        for e in square(first) {
            g.add_edge(e).expect("block of four is independent");
        }
    }
    g
}

fn square(first: u64) -> [Edge; 4] {
    let v = |i: u64| first + i;
    [
        Edge::new(v(0), v(1)).expect("distinct"),
        Edge::new(v(1), v(2)).expect("distinct"),
        Edge::new(v(2), v(3)).expect("distinct"),
        Edge::new(v(0), v(3)).expect("distinct"),
    ]
}

/// The complete multipartite graph with `f_max(n)` maximal cliques.
pub fn moon_moser(n: u64) -> Result<Graph, ExtremalError> {
    f_max(n)?;
    Ok(moon_moser_from(1, n))
}

/// Predicted clique counts for a construction and its update.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prediction {
    pub cliques_before: u64,
    pub cliques_after: u64,
    /// `|Λ|`; before and after share no clique in these constructions.
    pub change: u64,
}

#[derive(Debug, Clone)]
pub struct SingleEdgeInstance {
    pub graph: Graph,
    pub edge: Edge,
    pub predicted: Prediction,
}

/// Graph on `n > 2` vertices where inserting one edge changes `3·f(n-2)`
/// maximal cliques: `1..=n-2` form a Moon–Moser graph, `n-1` and `n` are
/// joined to all of them but not to each other, and the edge is `(n-1, n)`.
pub fn single_edge_extremal(n: u64) -> Result<SingleEdgeInstance, ExtremalError> {
    if n <= 2 {
        return Err(ExtremalError::BadSize { n, reason: "need n > 2" });
    }
    let core = n - 2;
    let mut g = moon_moser_from(1, core);
    for apex in [n - 1, n] {
        for v in 1..=core {
            g.add_edge(Edge::new(v, apex).expect("distinct")).expect("fresh");
        }
    }
    let f = block_count(core)?;
    let before = f.checked_mul(2).ok_or(ExtremalError::Overflow(n))?;
    Ok(SingleEdgeInstance {
        graph: g,
        edge: Edge::new(n - 1, n).expect("distinct"),
        predicted: Prediction {
            cliques_before: before,
            cliques_after: f,
            change: before.checked_add(f).ok_or(ExtremalError::Overflow(n))?,
        },
    })
}

#[derive(Debug, Clone)]
pub struct BatchInstance {
    pub graph: Graph,
    pub batch: EdgeBatch,
    pub predicted: Prediction,
}

/// Graph where an independent set `V1 = 1..=eps` is completely joined to a
/// Moon–Moser graph on `V2 = eps+1..=n`; the batch turns `V1` into a
/// Moon–Moser graph, changing `(eps + f(eps))·f(n - eps)` cliques.
///
/// For `eps ≡ 1 (mod 3)` the block of four in `V1` becomes a 4-cycle, which
/// keeps `f(eps)` cliques and leaves no vertex of `V1` isolated inside `V1`.
pub fn batch_extremal(n: u64, eps: u64) -> Result<BatchInstance, ExtremalError> {
    if eps <= 3 {
        return Err(ExtremalError::BadSplit { n, eps, reason: "need eps > 3" });
    }
    if n < eps + 2 {
        return Err(ExtremalError::BadSplit { n, eps, reason: "need n >= eps + 2" });
    }
    let rest = n - eps;
    let mut g = moon_moser_from(eps + 1, rest);
    for a in 1..=eps {
        g.add_vertex(a);
        for b in eps + 1..=n {
            g.add_edge(Edge::new(a, b).expect("distinct")).expect("fresh");
        }
    }
    let inner = moon_moser_cycle_from(1, eps);
    let batch = EdgeBatch::insert(inner.edges().collect()).expect("distinct edges");

    let f_rest = f_max(rest)?;
    let overflow = ExtremalError::Overflow(n);
    let before = eps.checked_mul(f_rest).ok_or(overflow.clone())?;
    let after = f_max(eps)?.checked_mul(f_rest).ok_or(overflow.clone())?;
    Ok(BatchInstance {
        graph: g,
        batch,
        predicted: Prediction {
            cliques_before: before,
            cliques_after: after,
            change: before.checked_add(after).ok_or(overflow)?,
        },
    })
}

/// `(ε + f(ε))·f(n - ε)` for every admissible `ε` in `4..=n-2`.
pub fn batch_change_profile(n: u64) -> Result<Vec<(u64, u64)>, ExtremalError> {
    let mut out = Vec::new();
    for eps in 4..=n.saturating_sub(2) {
        let value = eps
            .checked_add(f_max(eps)?)
            .and_then(|s| f_max(n - eps).ok().and_then(|f| s.checked_mul(f)))
            .ok_or(ExtremalError::Overflow(n))?;
        out.push((eps, value));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct CorrectionPair {
    /// Complete multipartite: block `1..=4`, then blocks of three.
    pub h: Graph,
    /// `h` plus the 4-cycle `1-2-3-4-1`.
    pub g: Graph,
    /// The four cycle edges, as an insert batch taking `h` to `g`.
    pub cycle: EdgeBatch,
    pub cliques_each: u64,
}

/// Two non-isomorphic graphs on `n ≡ 1 (mod 3)` vertices that both reach
/// `f_max(n)` maximal cliques.
pub fn moon_moser_correction_pair(n: u64) -> Result<CorrectionPair, ExtremalError> {
    if n < 4 || n % 3 != 1 {
        return Err(ExtremalError::BadSize { n, reason: "need n >= 4 and n = 1 (mod 3)" });
    }
    let h = moon_moser_from(1, n);
    let g = moon_moser_cycle_from(1, n);
    Ok(CorrectionPair {
        h,
        g,
        cycle: EdgeBatch::insert(square(1).to_vec()).expect("distinct edges"),
        cliques_each: f_max(n)?,
    })
}
