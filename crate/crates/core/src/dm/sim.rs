//! Round-by-round simulation of cover-edge counting on `p` virtual
//! processors.
//!
//! Processor `i` owns a contiguous vertex range `V_i` and the cover edges
//! `S_i` whose smaller endpoint it owns. It first counts apexes `w ∈ V_i`
//! for its own edges, then in round `j = 1..p` it exchanges edge sets with
//! processor `i ^ j` and counts apexes for the received edges. Every cover
//! edge therefore meets every apex owner exactly once.

use rayon::prelude::*;

use crate::algorithm::TriangleCount;
use crate::bfs::{bfs_label, cover_edges};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::intersect::merge_for_each;

use super::partition::{partition_graph, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SimMode {
    /// Processors run one after another inside each round.
    #[default]
    Sequential,
    /// Processors of a round run on the current rayon pool.
    Parallel,
}

/// One shipment of a cover-edge set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transfer {
    pub round: usize,
    pub from: usize,
    pub to: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeLog {
    pub p: usize,
    /// `|S_i|`, the edges each processor scans locally before any exchange.
    pub local_edges: Vec<usize>,
    /// Shipments of rounds `1..p`, ordered by round then sender.
    pub transfers: Vec<Transfer>,
    /// Triangles found by each processor, `found[0]` for the local pass and
    /// `found[j]` for round `j`.
    pub found: Vec<Vec<u64>>,
}

impl ExchangeLog {
    pub fn rounds(&self) -> usize {
        self.p - 1
    }

    /// Cover edges sent over the network, `(p-1)·|S|`.
    pub fn shipped_edges(&self) -> usize {
        self.transfers.iter().map(|t| t.edges).sum()
    }

    /// Times a cover edge is delivered to a processor for scanning,
    /// including the local pass: `p·|S|`.
    pub fn deliveries(&self) -> usize {
        self.local_edges.iter().sum::<usize>() + self.shipped_edges()
    }

    /// Exchange traffic recounted from the log, one vertex id of
    /// `log_n` bits per delivery.
    pub fn recount_bits(&self, log_n: u32) -> u128 {
        self.deliveries() as u128 * log_n as u128
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmRun {
    pub triangles: TriangleCount,
    pub cover_edges: usize,
    pub log: ExchangeLog,
}

/// Per-processor reverse index: for every global vertex `x`, the local
/// vertices adjacent to `x`, ascending.
struct ApexIndex {
    offsets: Vec<usize>,
    apex: Vec<VertexId>,
}

impl ApexIndex {
    fn build(g: &Graph, part: &Partition, i: usize) -> Self {
        let local = part.local(g, i);
        let mut offsets = vec![0usize; g.n() + 1];
        for w in local.vertices() {
            for &x in local.neighbors(w) {
                offsets[x as usize + 1] += 1;
            }
        }
        for x in 0..g.n() {
            offsets[x + 1] += offsets[x];
        }
        let mut cursor = offsets.clone();
        let mut apex = vec![0; local.endpoints()];
        for w in local.vertices() {
            for &x in local.neighbors(w) {
                apex[cursor[x as usize]] = w;
                cursor[x as usize] += 1;
            }
        }
        Self { offsets, apex }
    }

    fn of(&self, x: VertexId) -> &[VertexId] {
        &self.apex[self.offsets[x as usize]..self.offsets[x as usize + 1]]
    }

    fn count(&self, edges: &[(VertexId, VertexId)], level: &[u32]) -> u64 {
        let mut t = 0;
        for &(u, v) in edges {
            let lu = level[u as usize];
            merge_for_each(self.of(u), self.of(v), |w| {
                if level[w as usize] != lu || v < w {
                    t += 1;
                }
            });
        }
        t
    }
}

pub fn simulate_cetc_dm(g: &Graph, p: usize) -> Result<DmRun> {
    simulate_cetc_dm_with(g, p, SimMode::Sequential)
}

pub fn simulate_cetc_dm_with(g: &Graph, p: usize, mode: SimMode) -> Result<DmRun> {
    if !p.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "p = {p} is not a power of two; the XOR exchange schedule needs one"
        )));
    }
    let part = partition_graph(g, p)?;
    let lab = bfs_label(g);
    let cover = cover_edges(&lab, g)?;
    let level = lab.levels();

    let mut s: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); p];
    for &(u, v) in cover.edges() {
        s[part.owner(u)].push((u, v));
    }
    let index: Vec<ApexIndex> = (0..p).map(|i| ApexIndex::build(g, &part, i)).collect();

    // Round 0 is the local pass; in round j processor i holds S_{i^j}.
    let run_round = |j: usize| -> Vec<u64> {
        let work = |i: usize| index[i].count(&s[i ^ j], level);
        match mode {
            SimMode::Sequential => (0..p).map(work).collect(),
            SimMode::Parallel => (0..p).into_par_iter().map(work).collect(),
        }
    };

    let mut found = Vec::with_capacity(p);
    let mut transfers = Vec::with_capacity(p * (p - 1));
    for j in 0..p {
        if j > 0 {
            transfers.extend((0..p).map(|i| Transfer {
                round: j,
                from: i,
                to: i ^ j,
                edges: s[i].len(),
            }));
        }
        found.push(run_round(j));
    }
    let triangles = found.iter().flatten().sum();
    Ok(DmRun {
        triangles: TriangleCount(triangles),
        cover_edges: cover.len(),
        log: ExchangeLog {
            p,
            local_edges: s.iter().map(Vec::len).collect(),
            transfers,
            found,
        },
    })
}
