//! Cover-edge triangle counting and its variants.
//!
//! After a BFS, every triangle has one or three horizontal edges. Iterating
//! only horizontal edges `u < v` and accepting an apex `w` when it sits on a
//! different level, or on the same level with `v < w`, finds each triangle
//! exactly once.

use crate::algorithm::TriangleCount;
use crate::bfs::{bfs_levels, horizontal_count};
use crate::graph::{degree_order, Graph, VertexId};
use crate::intersect::{merge_for_each, Hash};

use super::forward::{tc_forward, tc_forward_hashed};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CetcConfig {
    /// Covering-ratio switch point for the forward-exchanging and recursive
    /// variants.
    pub threshold: f64,
    /// The recursive split stops once the horizontal subgraph has fewer
    /// edges than this.
    pub min_recursive_edges: usize,
}

impl Default for CetcConfig {
    fn default() -> Self {
        Self {
            threshold: 0.7,
            min_recursive_edges: 1024,
        }
    }
}

#[inline]
fn for_each_cover_triangle(
    g: &Graph,
    level: &[u32],
    mut f: impl FnMut(VertexId, VertexId, VertexId),
) {
    for u in g.vertices() {
        let lu = level[u as usize];
        for &v in g.neighbors_above(u, u) {
            if level[v as usize] != lu {
                continue;
            }
            merge_for_each(g.neighbors(u), g.neighbors(v), |w| {
                if level[w as usize] != lu || v < w {
                    f(u, v, w);
                }
            });
        }
    }
}

pub fn tc_cetc_with_levels(g: &Graph, level: &[u32]) -> TriangleCount {
    let mut t = 0u64;
    for_each_cover_triangle(g, level, |_, _, _| t += 1);
    TriangleCount(t)
}

pub fn tc_cetc(g: &Graph) -> TriangleCount {
    tc_cetc_with_levels(g, &bfs_levels(g))
}

pub fn tc_cetc_degree(g: &Graph) -> TriangleCount {
    tc_cetc(&degree_order(g))
}

/// Listing mode of [`tc_cetc`], used to check that no triangle is reported
/// twice. Triangles come back as sorted vertex triples.
#[doc(hidden)]
pub fn cetc_listing(g: &Graph) -> Vec<[VertexId; 3]> {
    let mut out = Vec::new();
    for_each_cover_triangle(g, &bfs_levels(g), |u, v, w| {
        let mut tri = [u, v, w];
        tri.sort_unstable();
        out.push(tri);
    });
    out
}

pub fn tc_cetc_fe(g: &Graph) -> TriangleCount {
    tc_cetc_fe_with(g, &CetcConfig::default())
}

/// Runs the BFS, then keeps the cover-edge kernel when the covering ratio is
/// below the threshold and falls back to forward otherwise.
pub fn tc_cetc_fe_with(g: &Graph, cfg: &CetcConfig) -> TriangleCount {
    let level = bfs_levels(g);
    let ratio = if g.m() == 0 {
        0.0
    } else {
        horizontal_count(g, &level) as f64 / g.m() as f64
    };
    if ratio < cfg.threshold {
        tc_cetc_with_levels(g, &level)
    } else {
        tc_forward(g)
    }
}

/// Splits the edges into horizontal (`G0`) and level-crossing (`G1`) graphs
/// over the same vertex set.
pub fn split_by_level(g: &Graph, level: &[u32]) -> (Graph, Graph) {
    let same = |&(u, v): &(VertexId, VertexId)| level[u as usize] == level[v as usize];
    let g0 = Graph::from_simple_pairs(g.n(), g.edges().filter(same));
    let g1 = Graph::from_simple_pairs(g.n(), g.edges().filter(|e| !same(e)));
    assert_eq!(g0.m() + g1.m(), g.m(), "split must partition the edge set");
    (g0, g1)
}

/// Triangles with exactly one horizontal edge: for each `u`, mark its
/// crossing neighbors and probe the crossing neighbors of every horizontal
/// neighbor `v > u`.
fn count_crossing(g0: &Graph, g1: &Graph) -> u64 {
    let mut hash = Hash::new(g0.n());
    let mut t = 0u64;
    for u in g0.vertices() {
        let horizontal = g0.neighbors_above(u, u);
        if horizontal.is_empty() {
            continue;
        }
        let crossing = g1.neighbors(u);
        hash.mark(crossing);
        for &v in horizontal {
            t += hash.probe(g1.neighbors(v));
        }
        hash.unmark(crossing);
    }
    t
}

fn split_count(g: &Graph, cfg: &CetcConfig, recursive: bool, prev_ratio: f64) -> u64 {
    let level = bfs_levels(g);
    let (g0, g1) = split_by_level(g, &level);
    let ratio = if g.m() == 0 {
        0.0
    } else {
        g0.m() as f64 / g.m() as f64
    };
    let inner = if recursive
        && ratio > cfg.threshold
        && ratio < prev_ratio
        && g0.m() >= cfg.min_recursive_edges
    {
        split_count(&g0, cfg, true, ratio)
    } else {
        tc_forward_hashed(&g0).0
    };
    inner + count_crossing(&g0, &g1)
}

pub fn tc_cetc_split(g: &Graph) -> TriangleCount {
    TriangleCount(split_count(g, &CetcConfig::default(), false, f64::INFINITY))
}

pub fn tc_cetc_split_degree(g: &Graph) -> TriangleCount {
    tc_cetc_split(&degree_order(g))
}

pub fn tc_cetc_split_recursive(g: &Graph) -> TriangleCount {
    tc_cetc_split_recursive_with(g, &CetcConfig::default())
}

pub fn tc_cetc_split_recursive_with(g: &Graph, cfg: &CetcConfig) -> TriangleCount {
    TriangleCount(split_count(g, cfg, true, f64::INFINITY))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bfs::bfs_levels;
    use crate::graph::fixtures::*;

    #[test]
    fn k4_per_edge_contributions() {
        let g = complete(4);
        let level = bfs_levels(&g);
        let mut per_edge = std::collections::BTreeMap::new();
        for_each_cover_triangle(&g, &level, |u, v, _| {
            *per_edge.entry((u, v)).or_insert(0) += 1
        });
        let want: Vec<_> = vec![((1, 2), 2), ((1, 3), 1), ((2, 3), 1)];
        assert_eq!(per_edge.into_iter().collect::<Vec<_>>(), want);
        assert_eq!(tc_cetc(&g).0, 4);
    }

    #[test]
    fn split_partitions_edges() {
        let g = complete(5);
        let level = bfs_levels(&g);
        let (g0, g1) = split_by_level(&g, &level);
        assert_eq!(g0.m(), 6);
        assert_eq!(g1.m(), 4);
    }

    #[test]
    fn threshold_switches_kernel() {
        // Both branches must still count exactly.
        let g = complete(6);
        for threshold in [0.0, 0.5, 1.1] {
            let cfg = CetcConfig {
                threshold,
                ..CetcConfig::default()
            };
            assert_eq!(tc_cetc_fe_with(&g, &cfg).0, 20);
            assert_eq!(tc_cetc_split_recursive_with(&g, &cfg).0, 20);
        }
    }

    #[test]
    fn recursion_engages_on_dense_levels() {
        // K_40: all but the 39 tree edges are horizontal, ratio ~0.95.
        let g = complete(40);
        let cfg = CetcConfig {
            threshold: 0.7,
            min_recursive_edges: 1,
        };
        assert_eq!(tc_cetc_split_recursive_with(&g, &cfg).0, 9880);
    }

    #[test]
    fn listing_is_duplicate_free() {
        let g = complete(6);
        let mut tris = cetc_listing(&g);
        let len = tris.len();
        tris.sort();
        tris.dedup();
        assert_eq!(tris.len(), len);
        assert_eq!(len, 20);
    }
}
