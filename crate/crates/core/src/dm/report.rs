use crate::bfs::{bfs_label, EdgeClass};
use crate::error::Result;
use crate::graph::{wedge_count, Graph};
use crate::seq::tc_cetc_with_levels;

use super::comm::{ceil_log2, comm_volume_cetc_dm, comm_volume_previous};

/// One row of the communication comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct CommReport {
    pub n: usize,
    pub m: usize,
    pub triangles: u64,
    pub wedges: u64,
    /// Covering ratio of the BFS, used as `k` in the volume formula.
    pub k: f64,
    pub p: usize,
    pub log_n: u32,
    pub log_d: u32,
    pub bits_previous: u128,
    pub bits_cetc_dm: u128,
    /// `bits_previous / bits_cetc_dm`.
    pub reduction: f64,
}

pub fn report(g: &Graph, p: usize) -> Result<CommReport> {
    let lab = bfs_label(g);
    let vol = comm_volume_cetc_dm(g, &lab, p)?;
    let bits_previous = comm_volume_previous(g);
    let bits_cetc_dm = vol.total();
    let horizontal = lab.count(EdgeClass::Horizontal);
    Ok(CommReport {
        n: g.n(),
        m: g.m(),
        triangles: tc_cetc_with_levels(g, lab.levels()).0,
        wedges: wedge_count(g),
        k: if g.m() == 0 {
            0.0
        } else {
            horizontal as f64 / g.m() as f64
        },
        p,
        log_n: ceil_log2(g.n() as u64),
        log_d: ceil_log2(lab.max_level() as u64),
        bits_previous,
        bits_cetc_dm,
        reduction: if bits_cetc_dm == 0 {
            f64::INFINITY
        } else {
            bits_previous as f64 / bits_cetc_dm as f64
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn triangle_row() {
        let r = report(&complete(3), 1).unwrap();
        assert_eq!((r.triangles, r.wedges, r.bits_previous), (1, 3, 12));
        assert_eq!(r.bits_cetc_dm, 20);
        assert!(r.reduction.is_finite() && r.reduction > 0.0);
        assert!((r.k - 1.0 / 3.0).abs() < 1e-12);
    }
}
