//! Intersection graph on a catalog of completed walks.
//!
//! Two distinct walks of the same genus `g` are adjacent when they visit a
//! common lattice point whose height lies strictly between the boundary
//! heights, i.e. in `1..=g-1`. Interior heights are where two skeleta can
//! share a splitting circle, so the graph is only defined for `g >= 2`:
//! lower genus leaves no interior height at all.
//!
//! Adjacency is stored as one dense bit row per vertex. Rows are built by
//! bucketing vertices per interior point and OR-ing each bucket (a clique)
//! into its members' rows, which costs `O(points * bucket * row_words)`
//! instead of comparing all vertex pairs.

use crate::enumeration::WalkCatalog;
use crate::lattice_walk::{CompletedWalk, LatticePoint};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("intersection graph needs genus >= 2, got {0}")]
    GenusTooSmall(u32),
    #[error("catalog of {vertices} walks exceeds the graph-size cap of {cap}")]
    TooManyVertices { vertices: usize, cap: usize },
}

/// Largest vertex count `build_graph` accepts before demanding an explicit
/// cap override; one row already costs `vertices / 8` bytes, so memory grows
/// quadratically.
pub const DEFAULT_GRAPH_CAP: usize = 100_000;

/// Intersection graph over the walks of a catalog, with dense adjacency rows.
#[derive(Debug, Clone)]
pub struct WalkGraph<'a> {
    catalog: &'a WalkCatalog,
    words: usize,
    rows: Vec<u64>,
    point_index: BTreeMap<LatticePoint, Vec<u32>>,
    edge_count: u64,
}

/// Summary of the degree sequence of a graph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DegreeReport {
    pub vertices: usize,
    pub edges: u64,
    pub min_degree: usize,
    pub max_degree: usize,
    /// degree -> number of vertices of that degree
    pub degree_histogram: BTreeMap<usize, usize>,
}

/// Interior lattice points (height in `1..=g-1`) visited by both walks.
pub fn shared_points(a: &CompletedWalk, b: &CompletedWalk, g: u32) -> BTreeSet<LatticePoint> {
    let interior = |p: &LatticePoint| p.y >= 1 && p.y < g as i64;
    let pa: BTreeSet<LatticePoint> = a.positions().into_iter().filter(interior).collect();
    b.positions()
        .into_iter()
        .filter(|p| interior(p) && pa.contains(p))
        .collect()
}

/// Builds the intersection graph of `catalog` under the default size cap.
pub fn build_graph(catalog: &WalkCatalog) -> Result<WalkGraph<'_>, GraphError> {
    build_graph_capped(catalog, DEFAULT_GRAPH_CAP)
}

/// Builds the intersection graph, refusing catalogs larger than `cap`.
pub fn build_graph_capped(catalog: &WalkCatalog, cap: usize) -> Result<WalkGraph<'_>, GraphError> {
    if catalog.g() < 2 {
        return Err(GraphError::GenusTooSmall(catalog.g()));
    }
    let n = catalog.len();
    if n > cap {
        return Err(GraphError::TooManyVertices { vertices: n, cap });
    }
    let g = catalog.g() as i64;

    let mut point_index: BTreeMap<LatticePoint, Vec<u32>> = BTreeMap::new();
    for (id, walk) in catalog.iter().enumerate() {
        // positions() may revisit a point; each vertex belongs to a bucket
        // at most once, which the sorted dedup below guarantees.
        let mut visited: Vec<LatticePoint> = walk
            .positions()
            .into_iter()
            .filter(|p| p.y >= 1 && p.y < g)
            .collect();
        visited.sort();
        visited.dedup();
        for p in visited {
            point_index.entry(p).or_default().push(id as u32);
        }
    }

    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    for ids in point_index.values() {
        if ids.len() < 2 {
            continue;
        }
        // The bucket is a clique: OR its membership mask into every row.
        let mut mask = vec![0u64; words];
        for &id in ids {
            mask[id as usize / 64] |= 1 << (id as usize % 64);
        }
        for &id in ids {
            let row = &mut rows[id as usize * words..(id as usize + 1) * words];
            for (r, m) in row.iter_mut().zip(&mask) {
                *r |= m;
            }
        }
    }
    let mut edge_count = 0u64;
    for id in 0..n {
        // Clear the self-loop bit the clique OR introduced.
        rows[id * words + id / 64] &= !(1 << (id % 64));
        edge_count += rows[id * words..(id + 1) * words]
            .iter()
            .map(|w| w.count_ones() as u64)
            .sum::<u64>();
    }
    debug_assert_eq!(edge_count % 2, 0);
    Ok(WalkGraph {
        catalog,
        words,
        rows,
        point_index,
        edge_count: edge_count / 2,
    })
}

impl<'a> WalkGraph<'a> {
    pub fn catalog(&self) -> &'a WalkCatalog {
        self.catalog
    }

    pub fn vertex_count(&self) -> usize {
        self.catalog.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    /// Interior points each mapped to the sorted ids of the walks visiting it.
    pub fn point_index(&self) -> &BTreeMap<LatticePoint, Vec<u32>> {
        &self.point_index
    }

    /// Number of `u64` words in each adjacency row.
    pub(crate) fn word_len(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as a bit mask over vertex ids.
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbor ids of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.degree(v));
        for (wi, &word) in self.row(v).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros();
                out.push((wi * 64) as u32 + b);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn degree_report(&self) -> DegreeReport {
        let n = self.vertex_count();
        let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
        let mut min_degree = usize::MAX;
        let mut max_degree = 0;
        for v in 0..n {
            let d = self.degree(v);
            min_degree = min_degree.min(d);
            max_degree = max_degree.max(d);
            *histogram.entry(d).or_default() += 1;
        }
        if n == 0 {
            min_degree = 0;
        }
        DegreeReport {
            vertices: n,
            edges: self.edge_count,
            min_degree,
            max_degree,
            degree_histogram: histogram,
        }
    }
}
