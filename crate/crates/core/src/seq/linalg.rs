use crate::algorithm::TriangleCount;
use crate::graph::Graph;
use crate::intersect::Hash;

/// Hashed edge iterator over the upper orientation, marking once per vertex:
/// for each `j`, mark `N⁺(j)`, then for each `k ∈ N⁺(j)` probe `N⁺(k)`.
pub fn tc_tri_simple(g: &Graph) -> TriangleCount {
    let mut hash = Hash::new(g.n());
    let mut t = 0u64;
    for j in g.vertices() {
        let upper = g.neighbors_above(j, j);
        if upper.len() < 2 {
            continue;
        }
        hash.mark(upper);
        for &k in upper {
            t += hash.probe(g.neighbors_above(k, k));
        }
        hash.unmark(upper);
    }
    TriangleCount(t)
}

/// Masked sparse product `sum((L · L) .* L)` over the strictly lower
/// triangle, row by row: row `u` of `L · L` is accumulated densely, then
/// reduced under the mask `L(u, :)`.
pub fn tc_linear_algebra(g: &Graph) -> TriangleCount {
    let mut acc = vec![0u32; g.n()];
    let mut t = 0u64;
    for u in g.vertices() {
        let row = g.neighbors_below(u, u);
        for &v in row {
            for &w in g.neighbors_below(v, v) {
                acc[w as usize] += 1;
            }
        }
        for &w in row {
            t += acc[w as usize] as u64;
        }
        for &v in row {
            for &w in g.neighbors_below(v, v) {
                acc[w as usize] = 0;
            }
        }
    }
    TriangleCount(t)
}
