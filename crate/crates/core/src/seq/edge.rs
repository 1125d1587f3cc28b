use crate::algorithm::TriangleCount;
use crate::graph::Graph;
use crate::intersect::{Binary, Hash, Intersect, Merge, Partition};

/// Sums `|N(u) ∩ N(v)|` over both orientations of every edge, divided by 6.
pub fn edge_iterator<I: Intersect>(g: &Graph, mut isect: I) -> TriangleCount {
    let mut t = 0u64;
    for (u, v) in g.directed_edges() {
        t += isect.count(g.neighbors(u), g.neighbors(v));
    }
    TriangleCount(t / 6)
}

/// Edges `u < v` only, intersecting the neighbors above `v` on both sides,
/// so each triangle `u < v < w` is seen exactly once.
pub fn edge_iterator_do<I: Intersect>(g: &Graph, mut isect: I) -> TriangleCount {
    let mut t = 0u64;
    for (u, v) in g.edges() {
        t += isect.count(g.neighbors_above(u, v), g.neighbors_above(v, v));
    }
    TriangleCount(t)
}

pub fn tc_edge_merge(g: &Graph) -> TriangleCount {
    edge_iterator(g, Merge)
}

pub fn tc_edge_merge_do(g: &Graph) -> TriangleCount {
    edge_iterator_do(g, Merge)
}

pub fn tc_edge_binary(g: &Graph) -> TriangleCount {
    edge_iterator(g, Binary)
}

pub fn tc_edge_binary_do(g: &Graph) -> TriangleCount {
    edge_iterator_do(g, Binary)
}

pub fn tc_edge_partition(g: &Graph) -> TriangleCount {
    edge_iterator(g, Partition)
}

pub fn tc_edge_partition_do(g: &Graph) -> TriangleCount {
    edge_iterator_do(g, Partition)
}

pub fn tc_edge_hash(g: &Graph) -> TriangleCount {
    edge_iterator(g, Hash::new(g.n()))
}

pub fn tc_edge_hash_do(g: &Graph) -> TriangleCount {
    edge_iterator_do(g, Hash::new(g.n()))
}
