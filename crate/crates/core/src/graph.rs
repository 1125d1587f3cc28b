//! Edge lists and the immutable CSR graph every kernel consumes.

use crate::error::{Error, Result};

/// Dense 0-based vertex id.
///
/// Ids are stored in 32 bits; graphs that need more than `u32::MAX` vertices
/// are rejected at construction time.
pub type VertexId = u32;

pub(crate) const MAX_VERTICES: usize = VertexId::MAX as usize;

/// Raw vertex pairs as read from a file or produced by a generator.
///
/// May contain duplicates, both orientations of the same edge, and
/// self-loops. [`normalize`] turns it into a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    labels: Option<Vec<u64>>,
}

impl EdgeList {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Overflow(format!("{n} vertices exceed 32-bit ids")));
        }
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| u as usize >= n || v as usize >= n)
        {
            return Err(Error::InvalidParameter(format!(
                "pair ({u},{v}) out of range for n={n}"
            )));
        }
        Ok(Self {
            n,
            edges,
            labels: None,
        })
    }

    pub(crate) fn with_labels(mut self, labels: Vec<u64>) -> Self {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Original external id of each dense vertex, when the input ids were
    /// relabeled during parsing.
    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// External id for a dense vertex (identity when no relabeling happened).
    pub fn external_id(&self, v: VertexId) -> u64 {
        match &self.labels {
            Some(l) => l[v as usize],
            None => v as u64,
        }
    }
}

/// Undirected simple graph in compressed sparse row form.
///
/// Every adjacency slice is strictly increasing, contains no self-loop, and
/// the structure is symmetric. Each undirected edge occupies two slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
}

impl Graph {
    /// Builds a graph from CSR arrays, checking every structural invariant.
    pub fn from_csr(offsets: Vec<usize>, neighbors: Vec<VertexId>) -> Result<Self> {
        let bad = |msg: String| Err(Error::Format(msg));
        if offsets.is_empty() || offsets[0] != 0 {
            return bad("offsets must start at 0".into());
        }
        let n = offsets.len() - 1;
        if n > MAX_VERTICES {
            return Err(Error::Overflow(format!("{n} vertices exceed 32-bit ids")));
        }
        if *offsets.last().unwrap() != neighbors.len() || !neighbors.len().is_multiple_of(2) {
            return bad("offsets[n] must equal the even neighbor count".into());
        }
        if offsets.windows(2).any(|w| w[0] > w[1]) {
            return bad("offsets must be non-decreasing".into());
        }
        let g = Self { offsets, neighbors };
        for u in 0..n as VertexId {
            let adj = g.neighbors(u);
            if adj.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("adjacency of {u} is not strictly increasing"));
            }
            for &v in adj {
                if v as usize >= n || v == u {
                    return bad(format!("bad neighbor {v} of {u}"));
                }
                if !g.has_edge(v, u) {
                    return bad(format!("edge ({u},{v}) is not symmetric"));
                }
            }
        }
        Ok(g)
    }

    /// Assembles a graph from undirected pairs that are already known to be
    /// distinct and loop-free. Each pair is stored in both directions.
    pub(crate) fn from_simple_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (VertexId, VertexId)> + Clone,
    ) -> Self {
        let mut degree = vec![0usize; n];
        for (u, v) in pairs.clone() {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let offsets = prefix_sum(&degree);
        let mut cursor = offsets[..n].to_vec();
        let mut neighbors = vec![0 as VertexId; offsets[n]];
        for (u, v) in pairs {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for u in 0..n {
            neighbors[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        Self { offsets, neighbors }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Neighbors of `v` strictly greater than `bound`.
    #[inline]
    pub fn neighbors_above(&self, v: VertexId, bound: VertexId) -> &[VertexId] {
        let adj = self.neighbors(v);
        &adj[adj.partition_point(|&x| x <= bound)..]
    }

    /// Neighbors of `v` strictly less than `bound`.
    #[inline]
    pub fn neighbors_below(&self, v: VertexId, bound: VertexId) -> &[VertexId] {
        let adj = self.neighbors(v);
        &adj[..adj.partition_point(|&x| x < bound)]
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// The flat neighbor array (length `2m`).
    pub fn adjacency(&self) -> &[VertexId] {
        &self.neighbors
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n() as VertexId
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in CSR order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + Clone + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors_above(u, u).iter().map(move |&v| (u, v)))
    }

    /// Both orientations of every edge, in CSR slot order.
    pub fn directed_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |u| self.neighbors(u).iter().map(move |&v| (u, v)))
    }

    /// Source vertex of a CSR slot.
    #[inline]
    pub fn slot_source(&self, slot: usize) -> VertexId {
        (self.offsets.partition_point(|&o| o <= slot) - 1) as VertexId
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n(),
            edges: self.edges().collect(),
            labels: None,
        }
    }

    /// Relabels vertices with `perm[old] = new`.
    pub fn permute(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length");
        let n = self.n();
        let mut degree = vec![0usize; n];
        for old in self.vertices() {
            degree[perm[old as usize] as usize] = self.degree(old);
        }
        let offsets = prefix_sum(&degree);
        let mut neighbors = vec![0 as VertexId; offsets[n]];
        for old in self.vertices() {
            let new = perm[old as usize] as usize;
            let slot = &mut neighbors[offsets[new]..offsets[new + 1]];
            for (dst, &x) in slot.iter_mut().zip(self.neighbors(old)) {
                *dst = perm[x as usize];
            }
            slot.sort_unstable();
        }
        Graph { offsets, neighbors }
    }
}

fn prefix_sum(degree: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(degree.len() + 1);
    let mut acc = 0;
    offsets.push(0);
    for &d in degree {
        acc += d;
        offsets.push(acc);
    }
    offsets
}

/// Drops self-loops, symmetrizes, collapses duplicates, and sorts adjacency.
pub fn normalize(el: &EdgeList) -> Graph {
    let n = el.n();
    let mut degree = vec![0usize; n];
    for &(u, v) in el.edges() {
        if u != v {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
    }
    let raw_offsets = prefix_sum(&degree);
    let mut cursor = raw_offsets[..n].to_vec();
    let mut raw = vec![0 as VertexId; raw_offsets[n]];
    for &(u, v) in el.edges() {
        if u != v {
            raw[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            raw[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
    }

    // Sort and dedup each slice, compacting in place.
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    let mut write = 0;
    for u in 0..n {
        let (lo, hi) = (raw_offsets[u], raw_offsets[u + 1]);
        raw[lo..hi].sort_unstable();
        let mut last = None;
        for read in lo..hi {
            let x = raw[read];
            if last != Some(x) {
                raw[write] = x;
                write += 1;
                last = Some(x);
            }
        }
        offsets.push(write);
    }
    raw.truncate(write);
    raw.shrink_to_fit();
    Graph {
        offsets,
        neighbors: raw,
    }
}

/// Permutation `perm[old] = new` sorting vertices by non-increasing degree,
/// ties by ascending original id.
pub fn degree_permutation(g: &Graph) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut perm = vec![0 as VertexId; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old as usize] = new as VertexId;
    }
    perm
}

/// Isomorphic copy of `g` with vertex 0 of highest degree.
pub fn degree_order(g: &Graph) -> Graph {
    g.permute(&degree_permutation(g))
}

/// Number of 2-paths, `sum_v C(d(v), 2)`.
pub fn wedge_count(g: &Graph) -> u64 {
    g.vertices()
        .map(|v| {
            let d = g.degree(v) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn from_pairs(n: usize, pairs: &[(VertexId, VertexId)]) -> Graph {
        normalize(&EdgeList::new(n, pairs.to_vec()).unwrap())
    }

    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n as VertexId {
            for v in u + 1..n as VertexId {
                pairs.push((u, v));
            }
        }
        from_pairs(n, &pairs)
    }

    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n as VertexId).map(|v| (v - 1, v)).collect();
        from_pairs(n, &pairs)
    }

    pub fn ring(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n as VertexId)
            .map(|v| (v, (v + 1) % n as VertexId))
            .collect();
        from_pairs(n, &pairs)
    }

    /// Star with `leaves` leaves and the hub at `center`.
    pub fn star(leaves: usize, center: VertexId) -> Graph {
        let n = leaves + 1;
        let pairs: Vec<_> = (0..n as VertexId)
            .filter(|&v| v != center)
            .map(|v| (center, v))
            .collect();
        from_pairs(n, &pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_drops_loops_and_duplicates() {
        let g = from_pairs(3, &[(0, 1), (1, 0), (2, 2)]);
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
        assert!(g.neighbors(2).is_empty());
    }

    #[test]
    fn triangle_has_degree_two_everywhere() {
        let g = complete(3);
        assert_eq!(g.m(), 3);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn edge_list_rejects_out_of_range() {
        assert!(EdgeList::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn degree_order_moves_star_center_to_zero() {
        let g = star(3, 2);
        let h = degree_order(&g);
        assert_eq!(h.degree(0), 3);
        assert_eq!(degree_permutation(&g)[2], 0);
    }

    #[test]
    fn degree_order_of_ring_is_identity() {
        let g = ring(5);
        let perm = degree_permutation(&g);
        assert_eq!(perm, vec![0, 1, 2, 3, 4]);
        assert_eq!(degree_order(&g), g);
    }

    #[test]
    fn wedges_of_small_graphs() {
        assert_eq!(wedge_count(&path(3)), 1);
        assert_eq!(wedge_count(&complete(3)), 3);
        assert_eq!(wedge_count(&Graph::from_csr(vec![0], vec![]).unwrap()), 0);
    }

    #[test]
    fn from_csr_rejects_asymmetry() {
        assert!(Graph::from_csr(vec![0, 1, 1], vec![1]).is_err());
        assert!(Graph::from_csr(vec![0, 1, 2], vec![1, 0]).is_ok());
        assert!(Graph::from_csr(vec![0, 2, 2], vec![0, 0]).is_err());
    }

    #[test]
    fn slot_source_inverts_offsets() {
        let g = complete(4);
        for (slot, (u, _)) in g.directed_edges().enumerate() {
            assert_eq!(g.slot_source(slot), u);
        }
    }

    fn arb_edge_list() -> impl Strategy<Value = EdgeList> {
        (1usize..50).prop_flat_map(|n| {
            prop::collection::vec((0..n as VertexId, 0..n as VertexId), 0..200)
                .prop_map(move |e| EdgeList::new(n, e).unwrap())
        })
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(el in arb_edge_list()) {
            let g = normalize(&el);
            prop_assert_eq!(normalize(&g.to_edge_list()), g.clone());
            prop_assert!(Graph::from_csr(g.offsets().to_vec(), g.adjacency().to_vec()).is_ok());
        }

        #[test]
        fn handshake(el in arb_edge_list()) {
            let g = normalize(&el);
            let total: usize = g.vertices().map(|v| g.degree(v)).sum();
            prop_assert_eq!(total, 2 * g.m());
        }

        #[test]
        fn wedges_match_pair_enumeration(el in arb_edge_list()) {
            let g = normalize(&el);
            let mut brute = 0u64;
            for v in g.vertices() {
                let adj = g.neighbors(v);
                for i in 0..adj.len() {
                    for _ in i + 1..adj.len() {
                        brute += 1;
                    }
                }
            }
            prop_assert_eq!(wedge_count(&g), brute);
        }

        #[test]
        fn degree_order_is_sorted_isomorphism(el in arb_edge_list()) {
            let g = normalize(&el);
            let h = degree_order(&g);
            prop_assert_eq!(h.m(), g.m());
            prop_assert!(h.vertices().skip(1).all(|v| h.degree(v - 1) >= h.degree(v)));
            let perm = degree_permutation(&g);
            for (u, v) in g.edges() {
                prop_assert!(h.has_edge(perm[u as usize], perm[v as usize]));
            }
        }
    }
}
