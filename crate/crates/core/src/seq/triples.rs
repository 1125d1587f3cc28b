use crate::algorithm::TriangleCount;
use crate::graph::{Graph, VertexId};

/// Dense bit matrix is used for the edge test up to this many vertices.
const DENSE_LIMIT: usize = 1 << 15;

/// Brute force over ordered vertex triples, divided by 6.
///
/// The innermost loop is skipped when `(u, v)` is not an edge, which leaves
/// the count unchanged and keeps the cost at `O(n^2 + m n)`.
pub fn tc_triples(g: &Graph) -> TriangleCount {
    let n = g.n();
    let total = if n <= DENSE_LIMIT {
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for (u, v) in g.directed_edges() {
            bits[u as usize * words + v as usize / 64] |= 1 << (v % 64);
        }
        let adj = |u: usize, v: usize| bits[u * words + v / 64] >> (v % 64) & 1 == 1;
        count_triples(n, adj)
    } else {
        count_triples(n, |u, v| g.has_edge(u as VertexId, v as VertexId))
    };
    TriangleCount(total / 6)
}

fn count_triples(n: usize, adj: impl Fn(usize, usize) -> bool) -> u64 {
    let mut t = 0u64;
    for u in 0..n {
        for v in 0..n {
            if !adj(u, v) {
                continue;
            }
            for w in 0..n {
                if adj(v, w) && adj(u, w) {
                    t += 1;
                }
            }
        }
    }
    t
}
