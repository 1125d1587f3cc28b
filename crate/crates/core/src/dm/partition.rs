use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Contiguous vertex ranges, one per virtual processor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    p: usize,
    owner: Vec<u32>,
    ranges: Vec<Range<VertexId>>,
    /// Edge endpoints (sum of degrees) held by each processor.
    loads: Vec<usize>,
}

/// The CSR rows owned by one processor.
#[derive(Debug, Clone)]
pub struct LocalGraph<'g> {
    graph: &'g Graph,
    range: Range<VertexId>,
}

impl<'g> LocalGraph<'g> {
    pub fn vertices(&self) -> Range<VertexId> {
        self.range.clone()
    }

    pub fn neighbors(&self, v: VertexId) -> &'g [VertexId] {
        assert!(self.range.contains(&v), "vertex {v} is not local");
        self.graph.neighbors(v)
    }

    pub fn endpoints(&self) -> usize {
        let off = self.graph.offsets();
        off[self.range.end as usize] - off[self.range.start as usize]
    }
}

impl Partition {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn owner(&self, v: VertexId) -> usize {
        self.owner[v as usize] as usize
    }

    pub fn owners(&self) -> &[u32] {
        &self.owner
    }

    pub fn range(&self, i: usize) -> Range<VertexId> {
        self.ranges[i].clone()
    }

    pub fn loads(&self) -> &[usize] {
        &self.loads
    }

    pub fn local<'g>(&self, g: &'g Graph, i: usize) -> LocalGraph<'g> {
        assert_eq!(
            g.n(),
            self.owner.len(),
            "partition belongs to another graph"
        );
        LocalGraph {
            graph: g,
            range: self.range(i),
        }
    }
}

/// Greedy prefix split aiming at `2m/p` endpoints per processor.
///
/// Processor `i` is closed in front of vertex `v` when taking `v` would
/// overshoot the cumulative goal `(i+1)·2m/p` by more than stopping now
/// falls short of it. Every processor receives at least one vertex.
pub fn partition_graph(g: &Graph, p: usize) -> Result<Partition> {
    let n = g.n();
    if p == 0 {
        return Err(Error::InvalidParameter("p must be >= 1".into()));
    }
    if p > n {
        return Err(Error::InvalidParameter(format!(
            "p = {p} exceeds the {n} vertices"
        )));
    }
    let total = 2 * g.m() as u128;
    let p128 = p as u128;
    let mut owner = vec![0u32; n];
    let mut ranges = Vec::with_capacity(p);
    let mut loads = Vec::with_capacity(p);
    let (mut i, mut start, mut prefix, mut load) = (0usize, 0usize, 0u128, 0usize);
    for (v, slot) in owner.iter_mut().enumerate() {
        let d = g.degree(v as VertexId);
        if i + 1 < p && v > start {
            let must_close = n - v == p - 1 - i;
            // 2·prefix + d > 2·goal, scaled by p to stay in integers.
            let overshoots = p128 * (2 * prefix + d as u128) > 2 * (i as u128 + 1) * total;
            if must_close || overshoots {
                ranges.push(start as VertexId..v as VertexId);
                loads.push(load);
                i += 1;
                start = v;
                load = 0;
            }
        }
        *slot = i as u32;
        prefix += d as u128;
        load += d;
    }
    ranges.push(start as VertexId..n as VertexId);
    loads.push(load);
    debug_assert_eq!(ranges.len(), p);
    Ok(Partition {
        p,
        owner,
        ranges,
        loads,
    })
}
