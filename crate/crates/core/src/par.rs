//! Shared-memory edge-parallel kernels.
//!
//! Work is the CSR slot range `0..2m` cut into contiguous chunks. Each
//! worker keeps private scratch and a private counter; counters are summed
//! once at the end, so results are bit-identical for any worker count.

use std::ops::Add;

use rayon::prelude::*;

use crate::algorithm::{AlgorithmId, TriangleCount};
use crate::bfs::par_bfs_levels;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::intersect::{Binary, Hash, Intersect, Merge, Partition};

pub const DEFAULT_CHUNK: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParallelConfig {
    pub workers: usize,
    /// CSR slots per work item.
    pub chunk: usize,
}

impl ParallelConfig {
    pub fn new(workers: usize) -> Self {
        Self {
            workers,
            chunk: DEFAULT_CHUNK,
        }
    }

    pub fn with_chunk(mut self, chunk: usize) -> Self {
        self.chunk = chunk;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::InvalidParameter("workers must be >= 1".into()));
        }
        if self.chunk == 0 {
            return Err(Error::InvalidParameter("chunk must be >= 1".into()));
        }
        Ok(())
    }

    /// A fresh pool with exactly `workers` threads.
    pub fn thread_pool(&self) -> Result<rayon::ThreadPool> {
        self.validate()?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
    }

    /// Runs `f` on a pool of `workers` threads. When called from inside a
    /// pool of that size already, that pool is reused.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R> {
        self.validate()?;
        if rayon::current_thread_index().is_some() && rayon::current_num_threads() == self.workers {
            return Ok(f());
        }
        Ok(self.thread_pool()?.install(f))
    }
}

impl Default for ParallelConfig {
    fn default() -> Self {
        Self::new(1)
    }
}

/// Runs `body` on every directed edge `(u, v)` in parallel chunks.
fn for_each_slot<S, A, I, F>(g: &Graph, chunk: usize, init: I, body: F) -> A
where
    A: Default + Add<Output = A> + Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &mut A, VertexId, VertexId) + Sync + Send,
{
    let slots = g.adjacency().len();
    let chunks = slots.div_ceil(chunk);
    let offsets = g.offsets();
    let adj = g.adjacency();
    (0..chunks)
        .into_par_iter()
        .map_init(init, |scratch, c| {
            let (start, end) = (c * chunk, ((c + 1) * chunk).min(slots));
            let mut u = g.slot_source(start) as usize;
            let mut acc = A::default();
            for (slot, &v) in adj.iter().enumerate().take(end).skip(start) {
                while offsets[u + 1] <= slot {
                    u += 1;
                }
                body(scratch, &mut acc, u as VertexId, v);
            }
            acc
        })
        .reduce(A::default, |a, b| a + b)
}

fn par_edge_iterator<I, F>(g: &Graph, chunk: usize, oriented: bool, make: F) -> u64
where
    I: Intersect,
    F: Fn() -> I + Sync + Send,
{
    if oriented {
        for_each_slot(g, chunk, make, |isect, acc: &mut u64, u, v| {
            if u < v {
                *acc += isect.count(g.neighbors_above(u, v), g.neighbors_above(v, v));
            }
        })
    } else {
        for_each_slot(g, chunk, make, |isect, acc: &mut u64, u, v| {
            *acc += isect.count(g.neighbors(u), g.neighbors(v));
        }) / 6
    }
}

/// Apex-vertex wedge checks distributed by the edge `(center, v1)`.
fn par_wedge(g: &Graph, chunk: usize, oriented: bool) -> u64 {
    if oriented {
        for_each_slot(
            g,
            chunk,
            || (),
            |_, acc: &mut u64, v, v1| {
                if v < v1 {
                    *acc += g
                        .neighbors_above(v, v1)
                        .iter()
                        .filter(|&&v2| g.has_edge(v1, v2))
                        .count() as u64;
                }
            },
        )
    } else {
        for_each_slot(
            g,
            chunk,
            || (),
            |_, acc: &mut u64, v, v1| {
                *acc += g
                    .neighbors(v)
                    .iter()
                    .filter(|&&v2| v2 != v1 && g.has_edge(v1, v2))
                    .count() as u64;
            },
        ) / 6
    }
}

/// The two accumulators of the shared-memory cover-edge kernel.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CetcSmCounters {
    /// Apex on a different level: found once.
    pub c1: u64,
    /// All three vertices on one level: found once per horizontal edge, so 3×.
    pub c2: u64,
}

impl Add for CetcSmCounters {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self {
            c1: self.c1 + o.c1,
            c2: self.c2 + o.c2,
        }
    }
}

impl CetcSmCounters {
    pub fn triangles(&self) -> TriangleCount {
        assert_eq!(self.c2 % 3, 0, "same-level count must be a multiple of 3");
        TriangleCount(self.c1 + self.c2 / 3)
    }
}

pub fn cetc_sm_counters(g: &Graph, cfg: &ParallelConfig) -> Result<CetcSmCounters> {
    cfg.install(|| {
        let level = par_bfs_levels(g);
        let level = &level;
        for_each_slot(
            g,
            cfg.chunk,
            || (),
            |_, acc: &mut CetcSmCounters, u, v| {
                let lu = level[u as usize];
                if u >= v || level[v as usize] != lu {
                    return;
                }
                crate::intersect::merge_for_each(g.neighbors(u), g.neighbors(v), |w| {
                    if level[w as usize] != lu {
                        acc.c1 += 1;
                    } else {
                        acc.c2 += 1;
                    }
                });
            },
        )
    })
}

pub fn tc_cetc_sm(g: &Graph, cfg: &ParallelConfig) -> Result<TriangleCount> {
    Ok(cetc_sm_counters(g, cfg)?.triangles())
}

/// Runs one of the parallel algorithms with `cfg.workers` threads.
pub fn tc_par(alg: AlgorithmId, g: &Graph, cfg: &ParallelConfig) -> Result<TriangleCount> {
    use AlgorithmId::*;
    if !alg.is_parallel() {
        return Err(Error::UnsupportedAlgorithm(alg.to_string(), "parallel"));
    }
    if alg == CetcSm {
        return tc_cetc_sm(g, cfg);
    }
    let chunk = cfg.chunk;
    let n = g.n();
    let t = cfg.install(|| match alg {
        Wp => par_wedge(g, chunk, false),
        Wdp => par_wedge(g, chunk, true),
        Emp => par_edge_iterator(g, chunk, false, || Merge),
        Emdp => par_edge_iterator(g, chunk, true, || Merge),
        Ebp => par_edge_iterator(g, chunk, false, || Binary),
        Ebdp => par_edge_iterator(g, chunk, true, || Binary),
        Etp => par_edge_iterator(g, chunk, false, || Partition),
        Etdp => par_edge_iterator(g, chunk, true, || Partition),
        Ehp => par_edge_iterator(g, chunk, false, || Hash::new(n)),
        Ehdp => par_edge_iterator(g, chunk, true, || Hash::new(n)),
        _ => unreachable!("parallel set is closed"),
    })?;
    Ok(TriangleCount(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn zero_workers_is_rejected() {
        let g = complete(4);
        assert!(tc_par(AlgorithmId::Ebp, &g, &ParallelConfig::new(0)).is_err());
        let cfg = ParallelConfig::new(2).with_chunk(0);
        assert!(tc_par(AlgorithmId::Ebp, &g, &cfg).is_err());
    }

    #[test]
    fn sequential_ids_are_rejected() {
        let g = complete(4);
        assert!(matches!(
            tc_par(AlgorithmId::Fh, &g, &ParallelConfig::new(2)),
            Err(Error::UnsupportedAlgorithm(..))
        ));
    }

    #[test]
    fn k4_binary_search_four_workers() {
        let g = complete(4);
        assert_eq!(
            tc_par(AlgorithmId::Ebp, &g, &ParallelConfig::new(4))
                .unwrap()
                .0,
            4
        );
    }

    #[test]
    fn cetc_sm_counter_traces() {
        let k4 = cetc_sm_counters(&complete(4), &ParallelConfig::new(2)).unwrap();
        assert_eq!(k4, CetcSmCounters { c1: 3, c2: 3 });
        assert_eq!(k4.triangles().0, 4);
        let k3 = cetc_sm_counters(&complete(3), &ParallelConfig::new(2)).unwrap();
        assert_eq!(k3, CetcSmCounters { c1: 1, c2: 0 });
        assert_eq!(k3.triangles().0, 1);
    }

    #[test]
    fn tiny_chunks_cover_every_slot() {
        let g = complete(7);
        for alg in AlgorithmId::parallel() {
            let cfg = ParallelConfig::new(3).with_chunk(1);
            assert_eq!(tc_par(alg, &g, &cfg).unwrap().0, 35, "{alg}");
        }
    }

    #[test]
    fn reuses_enclosing_pool() {
        let cfg = ParallelConfig::new(3);
        let pool = cfg.thread_pool().unwrap();
        let t = pool
            .install(|| tc_par(AlgorithmId::Ehp, &complete(5), &cfg))
            .unwrap();
        assert_eq!(t.0, 10);
        let other = ParallelConfig::new(2);
        let t = pool
            .install(|| tc_par(AlgorithmId::Ehp, &complete(5), &other))
            .unwrap();
        assert_eq!(t.0, 10);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::from_csr(vec![0, 0, 0], vec![]).unwrap();
        for alg in AlgorithmId::parallel() {
            assert_eq!(tc_par(alg, &g, &ParallelConfig::new(2)).unwrap().0, 0);
        }
    }
}
