//! Communication volume of wedge checking versus cover-edge exchange.

use std::fmt;

use crate::bfs::BfsLabeling;
use crate::error::{Error, Result};
use crate::graph::{wedge_count, Graph};

/// `⌈log₂ x⌉`, with `0` for `x ≤ 1`.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Wedge checking ships one vertex pair per wedge: `wedges · 2⌈log n⌉` bits.
pub fn comm_volume_previous(g: &Graph) -> u128 {
    wedge_count(g) as u128 * 2 * ceil_log2(g.n() as u64) as u128
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CetcDmVolume {
    /// `m·(⌈log D⌉ + 3⌈log n⌉)`: level, vertex pair and degree per traversal.
    pub bfs_bits: u128,
    /// `|S|·p·⌈log n⌉` for the cover-edge exchange.
    pub cover_bits: u128,
    /// `(p-1)·⌈log n⌉` for the final sum.
    pub reduce_bits: u128,
}

impl CetcDmVolume {
    pub fn total(&self) -> u128 {
        self.bfs_bits + self.cover_bits + self.reduce_bits
    }
}

/// Evaluates the cover-edge volume with integer ceilings. `k·m` is the
/// number of horizontal edges and `D` is the deepest BFS level.
pub fn comm_volume_cetc_dm(g: &Graph, lab: &BfsLabeling, p: usize) -> Result<CetcDmVolume> {
    if p == 0 {
        return Err(Error::InvalidParameter("p must be >= 1".into()));
    }
    if lab.levels().len() != g.n() || lab.slot_classes().len() != g.adjacency().len() {
        return Err(Error::LabelingMismatch(
            "labeling was computed on a different graph".into(),
        ));
    }
    let log_n = ceil_log2(g.n() as u64) as u128;
    let log_d = ceil_log2(lab.max_level() as u64) as u128;
    let m = g.m() as u128;
    let s = lab.count(crate::bfs::EdgeClass::Horizontal) as u128;
    let p = p as u128;
    Ok(CetcDmVolume {
        bfs_bits: m * (log_d + 3 * log_n),
        cover_bits: s * p * log_n,
        reduce_bits: (p - 1) * log_n,
    })
}

/// The same volume for graphs known only by their parameters.
pub fn model_bits_cetc_dm(n: u64, m: u64, k: f64, log_d: u32, p: u64) -> f64 {
    let log_n = ceil_log2(n) as f64;
    m as f64 * (log_d as f64 + (k * p as f64 + 3.0) * log_n) + (p as f64 - 1.0) * log_n
}

pub fn model_bits_previous(n: u64, wedges: f64) -> f64 {
    wedges * 2.0 * ceil_log2(n) as f64
}

/// Binary byte units: `KB = 2¹⁰` bytes up to `EB = 2⁶⁰` bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ByteUnit {
    B,
    KB,
    MB,
    GB,
    TB,
    PB,
    EB,
}

impl ByteUnit {
    const ALL: [ByteUnit; 7] = [
        ByteUnit::B,
        ByteUnit::KB,
        ByteUnit::MB,
        ByteUnit::GB,
        ByteUnit::TB,
        ByteUnit::PB,
        ByteUnit::EB,
    ];

    pub fn bytes(self) -> f64 {
        (1u64 << (10 * self as u32)) as f64
    }
}

impl fmt::Display for ByteUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn bits_in_unit(bits: f64, unit: ByteUnit) -> f64 {
    bits / 8.0 / unit.bytes()
}

/// Three significant digits in the largest unit that keeps the value ≥ 1,
/// e.g. `526KB`, `2.02MB`.
pub fn format_bits(bits: f64) -> String {
    let unit = ByteUnit::ALL
        .iter()
        .rev()
        .copied()
        .find(|&u| bits_in_unit(bits, u) >= 1.0)
        .unwrap_or(ByteUnit::B);
    let v = bits_in_unit(bits, unit);
    let digits = if v >= 100.0 {
        0
    } else if v >= 10.0 {
        1
    } else {
        2
    };
    format!("{v:.digits$}{unit}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bfs::bfs_label;
    use crate::generate::generate_gnp;
    use crate::graph::fixtures::*;
    use crate::graph::normalize;

    #[test]
    fn ceil_log2_edges() {
        let got: Vec<_> = [0, 1, 2, 3, 4, 5, 5242, 1 << 36].map(ceil_log2).to_vec();
        assert_eq!(got, vec![0, 0, 1, 2, 2, 3, 13, 36]);
    }

    #[test]
    fn triangle_previous_volume() {
        assert_eq!(comm_volume_previous(&complete(3)), 12);
    }

    #[test]
    fn single_edge_volume() {
        // n=2, m=1, no horizontal edge, D=1, p=2: 1·(0 + 3) + 1 = 4.
        let g = complete(2);
        let lab = bfs_label(&g);
        assert_eq!(lab.max_level(), 1);
        let vol = comm_volume_cetc_dm(&g, &lab, 2).unwrap();
        assert_eq!(vol.total(), 4);
        assert_eq!(vol.cover_bits, 0);
    }

    #[test]
    fn triangle_volume_terms() {
        // n=3, m=3, one horizontal edge, D=1, p=1: 3·(0+6) + 1·2 + 0.
        let g = complete(3);
        let vol = comm_volume_cetc_dm(&g, &bfs_label(&g), 1).unwrap();
        assert_eq!((vol.bfs_bits, vol.cover_bits, vol.reduce_bits), (18, 2, 0));
    }

    #[test]
    fn volume_grows_with_p() {
        let g = normalize(&generate_gnp(100, 0.1, 2).unwrap());
        let lab = bfs_label(&g);
        let vols: Vec<_> = (1..=16)
            .map(|p| comm_volume_cetc_dm(&g, &lab, p).unwrap().total())
            .collect();
        assert!(vols.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn mismatched_labeling_is_rejected() {
        let lab = bfs_label(&complete(4));
        assert!(comm_volume_cetc_dm(&complete(5), &lab, 2).is_err());
        assert!(comm_volume_cetc_dm(&complete(4), &lab, 0).is_err());
    }

    #[test]
    fn model_agrees_with_exact_evaluation() {
        let g = normalize(&generate_gnp(200, 0.05, 9).unwrap());
        let lab = bfs_label(&g);
        let k = lab.count(crate::bfs::EdgeClass::Horizontal) as f64 / g.m() as f64;
        let exact = comm_volume_cetc_dm(&g, &lab, 4).unwrap().total() as f64;
        let model = model_bits_cetc_dm(200, g.m() as u64, k, ceil_log2(lab.max_level() as u64), 4);
        assert!((exact - model).abs() < 1e-6 * exact);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_bits(4_310_748.0), "526KB");
        assert_eq!(format_bits(8.0 * 1024.0 * 1024.0 * 2.02), "2.02MB");
        assert_eq!(format_bits(8.0 * (1u64 << 50) as f64 * 22.8), "22.8PB");
        assert_eq!(format_bits(12.0), "1.50B");
        assert_eq!(bits_in_unit(8.0 * 1024.0, ByteUnit::KB), 1.0);
    }
}
