use crate::algorithm::TriangleCount;
use crate::graph::Graph;

/// Checks every ordered neighbor pair of every vertex for a closing edge.
pub fn tc_wedge(g: &Graph) -> TriangleCount {
    let mut t = 0u64;
    for v in g.vertices() {
        let adj = g.neighbors(v);
        for &v1 in adj {
            for &v2 in adj {
                if v1 != v2 && g.has_edge(v1, v2) {
                    t += 1;
                }
            }
        }
    }
    TriangleCount(t / 6)
}

/// Wedges with `v < v1 < v2` only.
pub fn tc_wedge_do(g: &Graph) -> TriangleCount {
    let mut t = 0u64;
    for v in g.vertices() {
        let upper = g.neighbors_above(v, v);
        for (i, &v1) in upper.iter().enumerate() {
            for &v2 in &upper[i + 1..] {
                if g.has_edge(v1, v2) {
                    t += 1;
                }
            }
        }
    }
    TriangleCount(t)
}
