//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so the report is always visible.

use std::collections::{BTreeSet, HashSet};
use std::panic;
use std::time::{Duration, Instant};

use dynclique::cli::{replay_stream, Algo, Trial, TrialKind};
use dynclique::delta::{apply_delete_batch, apply_insert_batch, enum_subsumed, ChangeSet};
use dynclique::extremal::{batch_extremal, f_max, moon_moser, moon_moser_correction_pair, single_edge_extremal};
use dynclique::oracle::{oracle_change, oracle_cliques};
use dynclique::signature::signature;
use dynclique::stream::{community_graph, gen_stream, StreamConfig, StreamOrdering};
use dynclique::{enum_new, enum_new_te, maximal_cliques, Clique, CliqueRegistry, Edge, EdgeBatch, Graph, VertexId};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

fn f(n: u64) -> u64 {
    if n <= 1 {
        1
    } else {
        f_max(n).unwrap()
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:.2?}, limit {limit:?}");
    Ok(took)
}

fn registry_of(g: &Graph) -> CliqueRegistry {
    CliqueRegistry::from_cliques(maximal_cliques(g).iter(), true).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: u64) -> Graph {
    let p: f64 = rng.random_range(f64::EPSILON..1.0);
    let mut g = Graph::new();
    for v in 1..=n {
        g.add_vertex(v);
    }
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.random::<f64>() < p {
                g.add_edge(Edge::new(a, b).unwrap()).unwrap();
            }
        }
    }
    g
}

fn absent_edges(g: &Graph) -> Vec<Edge> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if !g.adjacent(a, b) {
                out.push(Edge::new(a, b).unwrap());
            }
        }
    }
    out
}

fn insert_change(g: &Graph, h: &EdgeBatch) -> ChangeSet {
    let mut g2 = g.clone();
    let mut reg = registry_of(g);
    apply_insert_batch(&mut g2, h, &mut reg).unwrap().normalized()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 2..=12 {
        let count = maximal_cliques(&moon_moser(n).unwrap()).len() as u64;
        ensure!(count == f_max(n).unwrap(), "n={n}: {count} cliques, expected {}", f_max(n).unwrap());
    }
    ensure!(f_max(6).unwrap() == 9 && f_max(7).unwrap() == 12, "f(6), f(7) wrong");
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("Moon-Moser counts equal f(n) for n=2..12 ({took:.2?})"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for n in 5..=11 {
        let inst = single_edge_extremal(n).unwrap();
        let h = EdgeBatch::insert(vec![inst.edge]).unwrap();
        let ours = insert_change(&inst.graph, &h);
        let oracle = oracle_change(&inst.graph, &h).unwrap().normalized();
        let fm = f(n - 2);
        ensure!(ours == oracle, "n={n}: incremental change differs from oracle");
        ensure!(
            ours.new_cliques.len() as u64 == fm
                && ours.del_cliques.len() as u64 == 2 * fm
                && ours.len() as u64 == 3 * fm,
            "n={n}: got new={} del={}, expected {fm} and {}",
            ours.new_cliques.len(),
            ours.del_cliques.len(),
            2 * fm
        );
    }
    let took = within(start, Duration::from_secs(5))?;
    Ok(format!("single-edge change is 3f(n-2) for n=5..11, incremental and oracle ({took:.2?})"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let cases = [(7u64, 4u64, 24u64), (9, 4, 48), (8, 5, 33)];
    for (n, eps, want) in cases {
        let inst = batch_extremal(n, eps).unwrap();
        let ours = insert_change(&inst.graph, &inst.batch);
        let oracle = oracle_change(&inst.graph, &inst.batch).unwrap().normalized();
        ensure!(ours == oracle, "({n},{eps}): incremental change differs from oracle");
        ensure!(ours.len() as u64 == want, "({n},{eps}): |change| = {}, expected {want}", ours.len());
    }
    ensure!(24 == 2 * f(7), "24 != 2f(7)");
    ensure!(9 * 48 == 16 * f(9), "48 != (16/9) f(9)");
    ensure!(6 * 33 == 11 * f(8), "33 != (11/6) f(8)");
    let took = within(start, Duration::from_secs(5))?;
    Ok(format!("batch constructions give 24, 48, 33 ({took:.2?})"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let pair = moon_moser_correction_pair(7).unwrap();
    let ch = oracle_cliques(&pair.h).unwrap().len();
    let cg = oracle_cliques(&pair.g).unwrap().len();
    ensure!(ch == 12 && cg == 12, "clique counts {ch} and {cg}, expected 12 each");
    ensure!(
        pair.g.edge_count() == pair.h.edge_count() + 4,
        "edge counts differ by {}",
        pair.g.edge_count() - pair.h.edge_count()
    );
    let change = insert_change(&pair.h, &pair.cycle);
    ensure!(change == oracle_change(&pair.h, &pair.cycle).unwrap().normalized(), "differs from oracle");
    ensure!(change.len() == 24, "|change| = {}, expected 24", change.len());
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("H7 and G7 both have 12 cliques, 4 edges apart, change 24 ({took:.2?})"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut per_kind = [0usize; 3];
    for t in 0..1000 {
        let trial = Trial::random(&mut rng, 25, 6);
        let expected = trial.expected().map_err(|e| e.to_string())?;
        let (got, registry) = trial.incremental().map_err(|e| format!("trial {t}: {e}"))?;
        ensure!(got == expected, "trial {t} disagrees with the oracle:\n{}", trial.repro());
        let before = oracle_cliques(&trial.graph).unwrap();
        let after = oracle_cliques(&trial.final_graph()).unwrap();
        let del: HashSet<&Clique> = got.del_cliques.iter().collect();
        let rebuilt: BTreeSet<Clique> =
            before.iter().filter(|c| !del.contains(c)).cloned().chain(got.new_cliques.iter().cloned()).collect();
        ensure!(rebuilt == after, "trial {t}: reconstruction fails:\n{}", trial.repro());
        ensure!(
            registry.same_signatures(&CliqueRegistry::from_cliques(after.iter(), false).unwrap()),
            "trial {t}: registry out of sync"
        );
        per_kind[match trial.kind {
            TrialKind::Insert => 0,
            TrialKind::Delete => 1,
            TrialKind::Mixed => 2,
        }] += 1;
    }
    ensure!(per_kind.iter().all(|&k| k > 0), "some batch kind never exercised: {per_kind:?}");
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "1000 trials match the oracle (insert {}, delete {}, mixed {}) ({took:.2?})",
        per_kind[0], per_kind[1], per_kind[2]
    ))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut done = 0;
    while done < 200 {
        let n = rng.random_range(2..=16);
        let g = random_graph(&mut rng, n);
        let mut present: Vec<Edge> = g.edges().collect();
        if present.is_empty() {
            continue;
        }
        present.shuffle(&mut rng);
        present.truncate(rng.random_range(1..=6));
        let del = EdgeBatch::delete(present).unwrap();
        let mut smaller = g.clone();
        let mut reg = registry_of(&g);
        let shrink = apply_delete_batch(&mut smaller, &del, &mut reg).unwrap().normalized();
        let grow = insert_change(&smaller, &del.reversed());
        ensure!(shrink.del_cliques == grow.new_cliques, "trial {done}: lost(G,G-H) != gained(G-H,G)");
        ensure!(shrink.new_cliques == grow.del_cliques, "trial {done}: gained(G,G-H) != lost(G-H,G)");
        ensure!(shrink == oracle_change(&g, &del).unwrap().normalized(), "trial {done}: differs from oracle");
        done += 1;
    }
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!("deletion and insertion are dual on 200 trials ({took:.2?})"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let check_local = |g: &Graph, cliques: &BTreeSet<Clique>, n: u64| -> Result<(), String> {
        for v in g.vertices() {
            let k = cliques.iter().filter(|c| c.contains(v)).count() as u64;
            ensure!(k <= f(n - 1), "vertex {v} in {k} cliques > f({})", n - 1);
        }
        for e in g.edges() {
            let k = cliques.iter().filter(|c| c.contains_edge(e)).count() as u64;
            ensure!(k <= f(n - 2), "edge {e} in {k} cliques > f({})", n - 2);
        }
        Ok(())
    };
    for i in 0..10_000 {
        let n = rng.random_range(1..=8);
        let g = random_graph(&mut rng, n);
        let cliques = oracle_cliques(&g).unwrap();
        ensure!(cliques.len() as u64 <= f(n), "graph {i}: {} cliques > f({n})", cliques.len());
        check_local(&g, &cliques, n).map_err(|e| format!("graph {i}: {e}"))?;
    }
    let mut pairs = 0;
    while pairs < 1000 {
        let n = rng.random_range(3..=10);
        let g = random_graph(&mut rng, n);
        let Some(&e) = absent_edges(&g).choose(&mut rng) else { continue };
        let h = EdgeBatch::insert(vec![e]).unwrap();
        let size = oracle_change(&g, &h).unwrap().len() as u64;
        ensure!(size <= 3 * f(n - 2), "pair {pairs}: |change| {size} > 3f({})", n - 2);
        ensure!(insert_change(&g, &h).len() as u64 == size, "pair {pairs}: incremental size differs");
        check_local(&g, &oracle_cliques(&g).unwrap(), n).map_err(|e| format!("pair {pairs}: {e}"))?;
        pairs += 1;
    }
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!("no bound violated on 10000 graphs and 1000 single-edge insertions ({took:.2?})"))
}

fn criterion_8() -> Outcome {
    let mut g = Graph::new();
    for v in 1..=4u64 {
        g.add_vertex(v);
    }
    let mut edges = Vec::new();
    for a in 1..=4u64 {
        for b in a + 1..=4 {
            edges.push(Edge::new(a, b).unwrap());
        }
    }
    let h = EdgeBatch::insert(edges).unwrap();
    let k4 = Clique::from_vertices([1u64, 2, 3, 4]);

    let mut te = Vec::new();
    enum_new_te(&mut g.clone(), &h, |c| te.push(c)).unwrap();
    ensure!(te == vec![k4.clone()], "enum_new_te emitted {te:?}");
    let mut plain = Vec::new();
    enum_new(&mut g.clone(), &h, |c| plain.push(c)).unwrap();
    ensure!(plain == vec![k4.clone()], "enum_new emitted {plain:?}");

    let registry = registry_of(&g);
    let mut subsumed = Vec::new();
    let stats = enum_subsumed(&h, &registry, te, |c| subsumed.push(c)).unwrap();
    subsumed.sort();
    let singles: Vec<Clique> = (1..=4u64).map(|v| Clique::from_vertices([v])).collect();
    ensure!(subsumed == singles, "subsumed {subsumed:?}");
    ensure!(stats.bound_exceeded == 0 && stats.peak_candidates <= 1 << 6, "split stats {stats:?}");

    let mut g2 = g.clone();
    let mut reg = registry_of(&g);
    let change = apply_insert_batch(&mut g2, &h, &mut reg).unwrap();
    ensure!(change.new_cliques == vec![k4], "insert reported {:?}", change.new_cliques);
    ensure!(change.del_cliques.len() == 4, "insert reported {} subsumed", change.del_cliques.len());
    Ok(format!("K4 emitted once by both enumerators; peak split set {} <= 64", stats.peak_candidates))
}

fn criterion_9() -> Outcome {
    let change = ChangeSet {
        new_cliques: vec![Clique::from_vertices([1u64, 2, 3]), Clique::from_vertices([4u64, 5, 6, 7])],
        del_cliques: vec![Clique::from_vertices([8u64, 9])],
    };
    ensure!(change.total_change_size() == 10, "total change {}", change.total_change_size());
    let singles = ChangeSet { new_cliques: vec![Clique::from_vertices([1u64])], del_cliques: vec![] };
    ensure!(singles.total_change_size() == 0, "singletons must count 0");
    Ok("sizes {3,4} new and {2} subsumed give 3 + 6 + 1 = 10".into())
}

fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].partial_cmp(&v[b]).unwrap());
        let mut r = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0 + 1.0;
            for &k in &idx[i..=j] {
                r[k] = avg;
            }
            i = j + 1;
        }
        r
    }
    let (rx, ry) = (ranks(xs), ranks(ys));
    let n = rx.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let g = community_graph(10_000, 20, 0.5, 52_500, 10);
    let cfg = StreamConfig { retain_prob: 0.1, batch_size: 1000, seed: 10, ordering: StreamOrdering::Random };
    let s = gen_stream(&g, &cfg).map_err(|e| e.to_string())?;

    let mut fast_rows = Vec::new();
    let fast = replay_stream(&s, Algo::Enumnte, false, |m, c| {
        fast_rows.push((
            m.new_count,
            m.del_count,
            m.total_change_size,
            c.new_cliques.iter().map(signature).fold(0u64, |a, x| a ^ x.0),
        ));
        Ok(())
    })
    .map_err(|e| e.to_string())?;
    let mut slow_rows = Vec::new();
    let slow = replay_stream(&s, Algo::Naive, false, |m, c| {
        slow_rows.push((
            m.new_count,
            m.del_count,
            m.total_change_size,
            c.new_cliques.iter().map(signature).fold(0u64, |a, x| a ^ x.0),
        ));
        Ok(())
    })
    .map_err(|e| e.to_string())?;
    ensure!(fast_rows == slow_rows, "per-batch changes of enumnte and naive differ");
    ensure!(fast.registry.same_signatures(&slow.registry), "final registries differ");

    let t_fast: Duration = fast.metrics.iter().map(|m| m.elapsed).sum();
    let t_slow: Duration = slow.metrics.iter().map(|m| m.elapsed).sum();
    let speedup = t_slow.as_secs_f64() / t_fast.as_secs_f64();
    let times: Vec<f64> = fast.metrics.iter().map(|m| m.elapsed.as_secs_f64()).collect();
    let sizes: Vec<f64> = fast.metrics.iter().map(|m| m.total_change_size as f64).collect();
    let rho = spearman(&times, &sizes);
    let summary = format!(
        "n={} m={} batches={} enumnte {t_fast:.2?} naive {t_slow:.2?} speedup {speedup:.1}x spearman {rho:.3}",
        g.vertex_count(),
        g.edge_count(),
        s.batches.len()
    );
    ensure!(speedup >= 5.0, "{summary}: speedup below 5x");
    ensure!(rho > 0.5, "{summary}: rank correlation not above 0.5");
    let took = within(start, Duration::from_secs(600))?;
    Ok(format!("{summary} ({took:.2?})"))
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let mut seen = HashSet::new();
    let mut registry = CliqueRegistry::verifying();
    for mask in 1u32..(1 << 16) {
        let c = Clique::from_vertices((0..16u64).filter(|&i| mask & (1 << i) != 0).map(|i| i + 1));
        ensure!(seen.insert(signature(&c)), "collision at subset {c}");
        registry.insert(&c).map_err(|e| e.to_string())?;
    }
    ensure!(seen.len() == 65_535, "{} signatures", seen.len());
    let bytes = registry.snapshot();
    let restored = CliqueRegistry::restore(&bytes).map_err(|e| e.to_string())?;
    ensure!(restored.snapshot() == bytes, "snapshot does not round-trip byte for byte");
    ensure!(restored.same_signatures(&registry), "restored registry differs");
    Ok(format!("65535 subset signatures distinct, snapshot round-trips ({:.2?})", start.elapsed()))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 11] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, run) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let outcome = panic::catch_unwind(run).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(msg) => println!("[PASS] criterion {id}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] criterion {id}: {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
