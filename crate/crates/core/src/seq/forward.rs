use crate::algorithm::TriangleCount;
use crate::graph::{degree_order, Graph, VertexId};
use crate::intersect::{merge_count, Hash};

/// Schank–Wagner forward: for each edge `u < v`, count `A(u) ∩ A(v)` and
/// then append `u` to `A(v)`. Edges are visited in CSR order, so every
/// `A(·)` stays sorted and `A(u)` is complete when row `u` is processed.
pub fn tc_forward(g: &Graph) -> TriangleCount {
    let mut a: Vec<Vec<VertexId>> = vec![Vec::new(); g.n()];
    let mut t = 0u64;
    for u in g.vertices() {
        for &v in g.neighbors_above(u, u) {
            t += merge_count(&a[u as usize], &a[v as usize]);
            a[v as usize].push(u);
        }
    }
    TriangleCount(t)
}

/// Forward with the `A(u)` side scattered into a mark array.
pub fn tc_forward_hashed(g: &Graph) -> TriangleCount {
    let mut a: Vec<Vec<VertexId>> = vec![Vec::new(); g.n()];
    let mut hash = Hash::new(g.n());
    let mut t = 0u64;
    for u in g.vertices() {
        // A(u) cannot change while row u is scanned; mark it once per row.
        hash.mark(&a[u as usize]);
        for &v in g.neighbors_above(u, u) {
            t += hash.probe(&a[v as usize]);
            a[v as usize].push(u);
        }
        hash.unmark(&a[u as usize]);
    }
    TriangleCount(t)
}

/// Degree relabeling followed by forward-hashed; relabeling is part of the cost.
pub fn tc_forward_hashed_degree(g: &Graph) -> TriangleCount {
    tc_forward_hashed(&degree_order(g))
}
