use std::collections::VecDeque;

use crate::algorithm::TriangleCount;
use crate::bfs::NO_PARENT;
use crate::graph::{Graph, VertexId};

/// Itai–Rodeh tree listing.
///
/// Each round builds a BFS spanning forest `K` of the remaining edges. A
/// triangle that contains a tree edge `(parent(x), x)` is detected at the
/// non-tree edge leaving `x` inside the triangle; when both endpoints of a
/// non-tree edge share a parent only one probe is made, so every such
/// triangle is counted exactly once. Removing `K` destroys exactly those
/// triangles, and the loop continues until no edge is left.
pub fn tc_treelist(g: &Graph) -> TriangleCount {
    let n = g.n();
    let mut adj: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    let mut remaining = g.m();
    let mut parent = vec![NO_PARENT; n];
    let mut visited = vec![false; n];
    let mut queue = VecDeque::new();
    let mut t = 0u64;

    while remaining > 0 {
        parent.fill(NO_PARENT);
        visited.fill(false);
        for root in 0..n {
            if visited[root] || adj[root].is_empty() {
                continue;
            }
            visited[root] = true;
            queue.push_back(root as VertexId);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u as usize] {
                    if !visited[v as usize] {
                        visited[v as usize] = true;
                        parent[v as usize] = u;
                        queue.push_back(v);
                    }
                }
            }
        }

        let has = |adj: &[Vec<VertexId>], a: VertexId, b: VertexId| {
            adj[a as usize].binary_search(&b).is_ok()
        };
        let is_tree = |u: VertexId, v: VertexId| parent[v as usize] == u || parent[u as usize] == v;
        for u in 0..n as VertexId {
            for &v in &adj[u as usize] {
                if v <= u || is_tree(u, v) {
                    continue;
                }
                let (pu, pv) = (parent[u as usize], parent[v as usize]);
                if pu != NO_PARENT && has(&adj, pu, v) {
                    t += 1;
                }
                if pv != NO_PARENT && pv != pu && has(&adj, pv, u) {
                    t += 1;
                }
            }
        }

        let mut removed_slots = 0;
        for u in 0..n as VertexId {
            let before = adj[u as usize].len();
            adj[u as usize].retain(|&v| !is_tree(u, v));
            removed_slots += before - adj[u as usize].len();
        }
        remaining -= removed_slots / 2;
    }
    TriangleCount(t)
}
