//! Breadth-first level assignment and tree/strut/horizontal edge classes.
//!
//! Roots are taken as the lowest-id unvisited vertex, neighbors are
//! enqueued in ascending id order, so the labeling is a pure function of
//! the graph. Levels differ by at most one across any edge, which makes the
//! three classes exhaustive.

use std::collections::{HashSet, VecDeque};
use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub const NO_PARENT: VertexId = VertexId::MAX;
const UNVISITED: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Tree,
    Strut,
    Horizontal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLabeling {
    level: Vec<u32>,
    parent: Vec<VertexId>,
    /// One tag per CSR slot; both orientations of an edge carry the same tag.
    edge_class: Vec<EdgeClass>,
    components: usize,
    max_level: u32,
}

impl BfsLabeling {
    pub fn levels(&self) -> &[u32] {
        &self.level
    }

    pub fn level(&self, v: VertexId) -> u32 {
        self.level[v as usize]
    }

    /// BFS parent, or [`NO_PARENT`] for component roots.
    pub fn parent(&self, v: VertexId) -> VertexId {
        self.parent[v as usize]
    }

    pub fn slot_classes(&self) -> &[EdgeClass] {
        &self.edge_class
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Deepest level over all components; stands in for the diameter.
    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    /// Every undirected edge once (`u < v`) with its class.
    pub fn classified_edges<'a>(
        &'a self,
        g: &'a Graph,
    ) -> impl Iterator<Item = (VertexId, VertexId, EdgeClass)> + 'a {
        g.vertices().flat_map(move |u| {
            let lo = g.offsets()[u as usize];
            g.neighbors(u)
                .iter()
                .enumerate()
                .filter(move |&(_, &v)| u < v)
                .map(move |(i, &v)| (u, v, self.edge_class[lo + i]))
        })
    }

    pub fn count(&self, class: EdgeClass) -> usize {
        self.edge_class.iter().filter(|&&c| c == class).count() / 2
    }
}

/// Levels, parents, component count and depth of the reference BFS forest.
pub(crate) struct Forest {
    pub level: Vec<u32>,
    pub parent: Vec<VertexId>,
    pub components: usize,
    pub max_level: u32,
}

pub(crate) fn bfs_forest(g: &Graph) -> Forest {
    let n = g.n();
    let mut level = vec![UNVISITED; n];
    let mut parent = vec![NO_PARENT; n];
    let mut components = 0;
    let mut max_level = 0;
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if level[root as usize] != UNVISITED {
            continue;
        }
        components += 1;
        level[root as usize] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let next = level[u as usize] + 1;
            for &v in g.neighbors(u) {
                if level[v as usize] == UNVISITED {
                    level[v as usize] = next;
                    parent[v as usize] = u;
                    max_level = max_level.max(next);
                    queue.push_back(v);
                }
            }
        }
    }
    Forest {
        level,
        parent,
        components,
        max_level,
    }
}

/// Levels only; what the counting kernels need.
pub fn bfs_levels(g: &Graph) -> Vec<u32> {
    bfs_forest(g).level
}

/// Level-synchronous BFS on the current rayon pool.
///
/// Component roots follow the same lowest-id policy as [`bfs_levels`], and
/// levels are shortest distances from those roots, so the result is
/// identical to the sequential reference regardless of worker count.
pub fn par_bfs_levels(g: &Graph) -> Vec<u32> {
    let level: Vec<AtomicU32> = (0..g.n()).map(|_| AtomicU32::new(UNVISITED)).collect();
    let mut frontier: Vec<VertexId> = Vec::new();
    for root in g.vertices() {
        if level[root as usize].load(Ordering::Relaxed) != UNVISITED {
            continue;
        }
        level[root as usize].store(0, Ordering::Relaxed);
        frontier.clear();
        frontier.push(root);
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let level = &level;
            frontier = frontier
                .par_iter()
                .flat_map_iter(|&u| {
                    g.neighbors(u).iter().copied().filter(move |&v| {
                        level[v as usize]
                            .compare_exchange(
                                UNVISITED,
                                depth,
                                Ordering::Relaxed,
                                Ordering::Relaxed,
                            )
                            .is_ok()
                    })
                })
                .collect();
        }
    }
    level.into_iter().map(AtomicU32::into_inner).collect()
}

pub fn bfs_label(g: &Graph) -> BfsLabeling {
    let Forest {
        level,
        parent,
        components,
        max_level,
    } = bfs_forest(g);
    let mut edge_class = Vec::with_capacity(g.adjacency().len());
    for u in g.vertices() {
        for &v in g.neighbors(u) {
            let class = if level[u as usize] == level[v as usize] {
                EdgeClass::Horizontal
            } else if parent[v as usize] == u || parent[u as usize] == v {
                EdgeClass::Tree
            } else {
                EdgeClass::Strut
            };
            edge_class.push(class);
        }
    }
    BfsLabeling {
        level,
        parent,
        edge_class,
        components,
        max_level,
    }
}

/// Number of edges whose endpoints share a level.
pub fn horizontal_count(g: &Graph, level: &[u32]) -> usize {
    g.edges()
        .filter(|&(u, v)| level[u as usize] == level[v as usize])
        .count()
}

/// Horizontal edges of a BFS labeling, which hit every triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverEdgeSet {
    edges: Vec<(VertexId, VertexId)>,
    m: usize,
}

impl CoverEdgeSet {
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Covering ratio `|S| / m`; zero for an edgeless graph.
    pub fn ratio(&self) -> f64 {
        if self.m == 0 {
            0.0
        } else {
            self.edges.len() as f64 / self.m as f64
        }
    }
}

pub fn cover_edges(lab: &BfsLabeling, g: &Graph) -> Result<CoverEdgeSet> {
    if lab.level.len() != g.n() || lab.edge_class.len() != g.adjacency().len() {
        return Err(Error::LabelingMismatch(format!(
            "labeling has {} vertices/{} slots, graph has {}/{}",
            lab.level.len(),
            lab.edge_class.len(),
            g.n(),
            g.adjacency().len()
        )));
    }
    let edges = lab
        .classified_edges(g)
        .filter(|&(_, _, c)| c == EdgeClass::Horizontal)
        .map(|(u, v, _)| (u, v))
        .collect();
    Ok(CoverEdgeSet { edges, m: g.m() })
}

/// Checks that every triangle of `g` has one or three of its edges in `s`.
///
/// Zero means `s` is not a cover; two cannot happen for a set of horizontal
/// edges, since a closed walk of length three crosses levels an even number
/// of times.
pub fn verify_cover(g: &Graph, s: &CoverEdgeSet) -> bool {
    let set: HashSet<(VertexId, VertexId)> =
        s.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    for a in g.vertices() {
        for &b in g.neighbors_above(a, a) {
            for &c in g.neighbors_above(b, b) {
                if !g.has_edge(a, c) {
                    continue;
                }
                let hits = [(a, b), (a, c), (b, c)]
                    .iter()
                    .filter(|e| set.contains(e))
                    .count();
                if hits != 1 && hits != 3 {
                    return false;
                }
            }
        }
    }
    true
}
