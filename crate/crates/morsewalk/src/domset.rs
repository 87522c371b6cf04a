//! Dominating sets of walk intersection graphs.
//!
//! A dominating set covers every vertex by its closed neighborhood. Three
//! constructions are provided:
//!
//! * a probabilistic one that samples a random vertex set with the density
//!   minimizing the expected cover size and retries until the sampled
//!   cover is within the first-moment bound it certifies,
//! * a deterministic greedy cover, and
//! * an exact branch-and-bound minimum for small graphs.

use crate::lattice_walk::trial_rng;
use crate::walkgraph::WalkGraph;
use rand::Rng;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DomSetError {
    #[error("exact search covers at most {cap} vertices, graph has {vertices}")]
    ExactTooLarge { vertices: usize, cap: usize },
    #[error("exact-search cap {cap} exceeds the hard limit of {limit} vertices")]
    CapTooLarge { cap: usize, limit: usize },
    #[error("no sampled cover met the target size {target} in {attempts} attempts")]
    AttemptsExhausted { attempts: u64, target: usize },
}

/// Default vertex-count cap for the exact minimum search.
pub const DEFAULT_EXACT_CAP: usize = 30;

/// Hard vertex-count limit for the exact search (one machine word of bits).
pub const EXACT_HARD_LIMIT: usize = 64;

/// How a dominating set was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DomSetMethod {
    Probabilistic,
    Greedy,
    Exact,
}

impl DomSetMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            DomSetMethod::Probabilistic => "probabilistic",
            DomSetMethod::Greedy => "greedy",
            DomSetMethod::Exact => "exact",
        }
    }
}

/// A dominating set together with the first-moment size bound of its graph.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct DomSetResult {
    /// Vertices of the dominating set, in increasing id order.
    pub vertex_ids: Vec<u32>,
    pub size: usize,
    /// `n (1 - d / (d+1)^{1 + 1/d})` for `n` vertices and minimum degree `d`.
    pub bound: f64,
    pub method: DomSetMethod,
    /// Sampling attempts consumed; `None` for deterministic methods.
    pub attempts: Option<u64>,
}

/// First-moment bound on the domination number of any `n`-vertex graph of
/// minimum degree `min_degree`: `n (1 - d / (d+1)^{1 + 1/d})`.
///
/// This equals the expected size of the random cover drawn by
/// [`probabilistic_dominating_set`], with the inclusion density chosen to
/// minimize that expectation.
pub fn alon_spencer_bound(n: usize, min_degree: usize) -> f64 {
    let n = n as f64;
    if min_degree == 0 {
        // Isolated vertices can only dominate themselves.
        return n;
    }
    let d = min_degree as f64;
    n * (1.0 - d / (d + 1.0).powf(1.0 + 1.0 / d))
}

/// Optimal inclusion density for the random cover: `1 - (d+1)^{-1/d}`.
fn optimal_density(min_degree: usize) -> f64 {
    if min_degree == 0 {
        return 0.0;
    }
    let d = min_degree as f64;
    1.0 - (d + 1.0).powf(-1.0 / d)
}

/// Checks that every vertex of `graph` is in `ids` or adjacent to it.
/// `ids` must be sorted in increasing order.
pub fn verify_dominating(graph: &WalkGraph<'_>, ids: &[u32]) -> bool {
    debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
    let words = graph.word_len();
    let mut chosen = vec![0u64; words];
    for &id in ids {
        if id as usize >= graph.vertex_count() {
            return false;
        }
        chosen[id as usize / 64] |= 1 << (id as usize % 64);
    }
    (0..graph.vertex_count()).all(|v| {
        chosen[v / 64] >> (v % 64) & 1 == 1
            || graph.row(v).iter().zip(&chosen).any(|(r, c)| r & c != 0)
    })
}

fn min_degree(graph: &WalkGraph<'_>) -> usize {
    (0..graph.vertex_count())
        .map(|v| graph.degree(v))
        .min()
        .unwrap_or(0)
}

fn ids_from_mask(mask: &[u64]) -> Vec<u32> {
    let mut out = Vec::new();
    for (wi, &word) in mask.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            out.push((wi * 64) as u32 + bits.trailing_zeros());
            bits &= bits - 1;
        }
    }
    out
}

/// Samples dominating sets by the first-moment construction until one is
/// no larger than the floor of [`alon_spencer_bound`].
///
/// Each vertex enters a set `X` independently with the density that
/// minimizes the expected cover size; the vertices whose closed
/// neighborhood misses `X` form `Y`, and `X u Y` always dominates. The
/// expected size of `X u Y` equals the bound, so a sample within its floor
/// exists with positive probability and resampling terminates almost
/// surely. Attempt `i` draws from the derived stream `(seed, i)`, making
/// the result reproducible. Fails only if `max_attempts` is exhausted.
pub fn probabilistic_dominating_set(
    graph: &WalkGraph<'_>,
    seed: u64,
    max_attempts: u64,
) -> Result<DomSetResult, DomSetError> {
    let n = graph.vertex_count();
    let words = graph.word_len();
    let delta = min_degree(graph);
    let bound = alon_spencer_bound(n, delta);
    let target = bound.floor() as usize;
    let density = optimal_density(delta);
    for attempt in 0..max_attempts {
        let mut rng = trial_rng(seed, attempt);
        let mut x_mask = vec![0u64; words];
        let mut size = 0usize;
        for v in 0..n {
            if rng.random_bool(density) {
                x_mask[v / 64] |= 1 << (v % 64);
                size += 1;
            }
        }
        let mut d_mask = x_mask.clone();
        for v in 0..n {
            let in_x = x_mask[v / 64] >> (v % 64) & 1 == 1;
            let covered = in_x
                || graph.row(v).iter().zip(&x_mask).any(|(r, x)| r & x != 0);
            if !covered {
                d_mask[v / 64] |= 1 << (v % 64);
                size += 1;
            }
        }
        if size <= target {
            let vertex_ids = ids_from_mask(&d_mask);
            debug_assert!(verify_dominating(graph, &vertex_ids));
            return Ok(DomSetResult {
                vertex_ids,
                size,
                bound,
                method: DomSetMethod::Probabilistic,
                attempts: Some(attempt + 1),
            });
        }
    }
    Err(DomSetError::AttemptsExhausted {
        attempts: max_attempts,
        target,
    })
}

/// Greedy dominating set: repeatedly take the vertex whose closed
/// neighborhood covers the most still-uncovered vertices, breaking ties
/// toward the smallest id.
pub fn greedy_dominating_set(graph: &WalkGraph<'_>) -> DomSetResult {
    let n = graph.vertex_count();
    let words = graph.word_len();
    let bound = alon_spencer_bound(n, min_degree(graph));
    let mut dominated = vec![0u64; words];
    let mut remaining = n;
    let mut chosen: Vec<u32> = Vec::new();
    while remaining > 0 {
        let mut best_v = usize::MAX;
        let mut best_gain = 0usize;
        for v in 0..n {
            let self_gain =
                usize::from(dominated[v / 64] >> (v % 64) & 1 == 0);
            let gain: usize = graph
                .row(v)
                .iter()
                .zip(&dominated)
                .map(|(r, d)| (r & !d).count_ones() as usize)
                .sum::<usize>()
                + self_gain;
            if gain > best_gain {
                best_gain = gain;
                best_v = v;
            }
        }
        debug_assert!(best_gain > 0, "undominated vertex always gains itself");
        for (r, d) in graph.row(best_v).iter().zip(&mut dominated) {
            *d |= r;
        }
        dominated[best_v / 64] |= 1 << (best_v % 64);
        remaining -= best_gain;
        chosen.push(best_v as u32);
    }
    chosen.sort_unstable();
    debug_assert!(verify_dominating(graph, &chosen));
    DomSetResult {
        size: chosen.len(),
        vertex_ids: chosen,
        bound,
        method: DomSetMethod::Greedy,
        attempts: None,
    }
}

/// Exact minimum dominating set under the default vertex cap.
pub fn exact_min_dominating_set(graph: &WalkGraph<'_>) -> Result<DomSetResult, DomSetError> {
    exact_min_dominating_set_capped(graph, DEFAULT_EXACT_CAP)
}

/// Exact minimum dominating set by branch and bound over one-word bit
/// masks. Refuses graphs larger than `cap`; `cap` itself may not exceed
/// [`EXACT_HARD_LIMIT`].
pub fn exact_min_dominating_set_capped(
    graph: &WalkGraph<'_>,
    cap: usize,
) -> Result<DomSetResult, DomSetError> {
    if cap > EXACT_HARD_LIMIT {
        return Err(DomSetError::CapTooLarge {
            cap,
            limit: EXACT_HARD_LIMIT,
        });
    }
    let n = graph.vertex_count();
    if n > cap {
        return Err(DomSetError::ExactTooLarge { vertices: n, cap });
    }
    let full: u64 = if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    };
    let closed: Vec<u64> = (0..n)
        .map(|v| graph.row(v)[0] | (1 << v))
        .collect();
    let max_cover = closed.iter().map(|m| m.count_ones()).max().unwrap_or(1);

    // Seed the search with the greedy cover so pruning bites immediately.
    let greedy = greedy_dominating_set(graph);
    let mut best_mask = 0u64;
    for &id in &greedy.vertex_ids {
        best_mask |= 1 << id;
    }
    let mut best = (greedy.size, best_mask);
    branch(&closed, full, max_cover, 0, 0, 0, &mut best);

    let mask = [best.1];
    let vertex_ids = ids_from_mask(&mask);
    debug_assert!(verify_dominating(graph, &vertex_ids));
    Ok(DomSetResult {
        size: best.0,
        vertex_ids,
        bound: greedy.bound,
        method: DomSetMethod::Exact,
        attempts: None,
    })
}

fn branch(
    closed: &[u64],
    full: u64,
    max_cover: u32,
    dominated: u64,
    chosen: u64,
    count: usize,
    best: &mut (usize, u64),
) {
    if dominated == full {
        if count < best.0 {
            *best = (count, chosen);
        }
        return;
    }
    let remaining = (full & !dominated).count_ones();
    let lower = remaining.div_ceil(max_cover) as usize;
    if count + lower >= best.0 {
        return;
    }
    // Some chosen vertex must cover the lowest undominated vertex, so it
    // suffices to branch over that vertex's closed neighborhood.
    let v = (full & !dominated).trailing_zeros() as usize;
    let mut candidates = closed[v];
    while candidates != 0 {
        let u = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        branch(
            closed,
            full,
            max_cover,
            dominated | closed[u],
            chosen | (1 << u),
            count + 1,
            best,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate_walks, WalkCatalog};
    use crate::lattice_walk::CompletedWalk;
    use crate::walkgraph::build_graph;

    #[test]
    fn bound_examples() {
        assert_eq!(alon_spencer_bound(2, 1), 1.5);
        assert_eq!(alon_spencer_bound(7, 0), 7.0);
        let k5 = alon_spencer_bound(5, 4);
        assert!((2.3..2.35).contains(&k5), "got {k5}");
    }

    #[test]
    fn bound_matches_expected_cover_size() {
        // Dual route: the closed form must equal n*p + n*(1-p)^(d+1) at the
        // optimal density p.
        for d in 1..=50usize {
            let n = 1000.0;
            let p = optimal_density(d);
            let direct = n * p + n * (1.0 - p).powi(d as i32 + 1);
            let closed = alon_spencer_bound(1000, d);
            assert!(
                (direct - closed).abs() <= 1e-9 * closed,
                "mismatch at d = {d}: {direct} vs {closed}"
            );
        }
    }

    #[test]
    fn bound_is_monotone_in_n() {
        for d in [1usize, 3, 10] {
            let mut prev = 0.0;
            for n in 1..200usize {
                let b = alon_spencer_bound(n, d);
                assert!(b > prev);
                prev = b;
            }
        }
    }

    #[test]
    fn probabilistic_on_single_edge_reaches_size_one() {
        let catalog = enumerate_walks(6, 2).unwrap();
        let graph = build_graph(&catalog).unwrap();
        for seed in 0..20 {
            let result = probabilistic_dominating_set(&graph, seed, 50).unwrap();
            assert_eq!(result.size, 1, "seed {seed}: {result:?}");
            assert_eq!(result.vertex_ids.len(), 1);
            assert_eq!(result.bound, 1.5);
            assert!(result.attempts.unwrap() >= 1);
            assert!(verify_dominating(&graph, &result.vertex_ids));
        }
    }

    #[test]
    fn probabilistic_is_reproducible() {
        let catalog = enumerate_walks(10, 2).unwrap();
        let graph = build_graph(&catalog).unwrap();
        let a = probabilistic_dominating_set(&graph, 42, 50).unwrap();
        let b = probabilistic_dominating_set(&graph, 42, 50).unwrap();
        assert_eq!(a, b);
        assert!(verify_dominating(&graph, &a.vertex_ids));
        assert!(a.size <= a.bound.floor() as usize);
    }

    #[test]
    fn zero_attempts_is_an_error() {
        let catalog = enumerate_walks(6, 2).unwrap();
        let graph = build_graph(&catalog).unwrap();
        assert_eq!(
            probabilistic_dominating_set(&graph, 7, 0),
            Err(DomSetError::AttemptsExhausted {
                attempts: 0,
                target: 1
            })
        );
    }

    /// Exhaustive search for any dominating set of exactly `k` vertices.
    fn any_dominating_subset(
        graph: &crate::walkgraph::WalkGraph<'_>,
        ids: &mut Vec<u32>,
        start: u32,
        k: usize,
    ) -> bool {
        if ids.len() == k {
            return verify_dominating(graph, ids);
        }
        let n = graph.vertex_count() as u32;
        let last = n - (k - ids.len()) as u32;
        for v in start..=last {
            ids.push(v);
            if any_dominating_subset(graph, ids, v + 1, k) {
                return true;
            }
            ids.pop();
        }
        false
    }

    fn edgeless_three_vertex_catalog() -> WalkCatalog {
        // Three genus-2 walks whose height-1 visits are pairwise disjoint:
        // (2,1), (4,1) and (6,1) respectively.
        let walks: Vec<CompletedWalk> = ["RRDD", "RRRRDDLL", "RRRRRRDDLLLL"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        WalkCatalog::from_walks(2, 12, walks)
    }

    #[test]
    fn greedy_on_edgeless_graph_takes_everything() {
        let catalog = edgeless_three_vertex_catalog();
        let graph = build_graph(&catalog).unwrap();
        assert_eq!(graph.edge_count(), 0);
        let result = greedy_dominating_set(&graph);
        assert_eq!(result.vertex_ids, vec![0, 1, 2]);
        assert_eq!(result.size, 3);
        assert_eq!(result.bound, 3.0);
        assert_eq!(result.attempts, None);
        let exact = exact_min_dominating_set(&graph).unwrap();
        assert_eq!(exact.size, 3);
        let prob = probabilistic_dominating_set(&graph, 0, 50).unwrap();
        assert_eq!(prob.size, 3);
        assert_eq!(prob.attempts, Some(1));
    }

    #[test]
    fn complete_graph_needs_one_vertex() {
        let catalog = enumerate_walks(8, 3).unwrap();
        let graph = build_graph(&catalog).unwrap();
        let greedy = greedy_dominating_set(&graph);
        assert_eq!(greedy.vertex_ids, vec![0]);
        let exact = exact_min_dominating_set(&graph).unwrap();
        assert_eq!(exact.size, 1);
        assert_eq!(exact.vertex_ids, vec![0]);
        let prob = probabilistic_dominating_set(&graph, 3, 50).unwrap();
        assert!(prob.size <= 2, "bound floor is 2: {prob:?}");
        assert!(verify_dominating(&graph, &prob.vertex_ids));
    }

    #[test]
    fn exact_never_beats_verified_lower_routes() {
        let catalog = enumerate_walks(8, 2).unwrap();
        let graph = build_graph(&catalog).unwrap();
        let greedy = greedy_dominating_set(&graph);
        let exact = exact_min_dominating_set(&graph).unwrap();
        assert!(exact.size <= greedy.size);
        assert!(exact.size >= 1);
        assert!(verify_dominating(&graph, &exact.vertex_ids));
        assert!(verify_dominating(&graph, &greedy.vertex_ids));
        // Oracle: no set one vertex smaller dominates, checked by exhausting
        // every subset of that size.
        let smaller = exact.size - 1;
        assert!(
            !any_dominating_subset(&graph, &mut Vec::new(), 0, smaller),
            "exact search missed a dominating set of size {smaller}"
        );
    }

    #[test]
    fn exact_respects_caps() {
        let catalog = enumerate_walks(8, 2).unwrap();
        let graph = build_graph(&catalog).unwrap();
        assert!(matches!(
            exact_min_dominating_set_capped(&graph, 5),
            Err(DomSetError::ExactTooLarge {
                vertices: 17,
                cap: 5
            })
        ));
        assert!(matches!(
            exact_min_dominating_set_capped(&graph, 65),
            Err(DomSetError::CapTooLarge { cap: 65, limit: 64 })
        ));
    }
}
