//! Algorithm identifiers and the uniform dispatch entry point.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, ParallelConfig};
use crate::seq;

/// Exact number of triangles in a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TriangleCount(pub u64);

impl TriangleCount {
    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for TriangleCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<TriangleCount> for u64 {
    fn from(t: TriangleCount) -> u64 {
        t.0
    }
}

macro_rules! algorithms {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum AlgorithmId {
            $($variant),*
        }

        impl AlgorithmId {
            /// Every algorithm in declaration order.
            pub const ALL: &'static [AlgorithmId] = &[$(AlgorithmId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(AlgorithmId::$variant => $name),*
                }
            }
        }
    };
}

algorithms! {
    Triples => "Triples",
    W => "W",
    Wd => "WD",
    Em => "EM",
    Emd => "EMD",
    Eb => "EB",
    Ebd => "EBD",
    Et => "ET",
    Etd => "ETD",
    Eh => "EH",
    Ehd => "EHD",
    F => "F",
    Fh => "FH",
    Fhd => "FHD",
    Ts => "TS",
    La => "LA",
    Ir => "IR",
    Cetc => "CETC-Seq",
    CetcD => "CETC-Seq-D",
    CetcFe => "CETC-Seq-FE",
    CetcS => "CETC-Seq-S",
    CetcSd => "CETC-Seq-SD",
    CetcSr => "CETC-Seq-SR",
    Wp => "WP",
    Wdp => "WDP",
    Emp => "EMP",
    Emdp => "EMDP",
    Ebp => "EBP",
    Ebdp => "EBDP",
    Etp => "ETP",
    Etdp => "ETDP",
    Ehp => "EHP",
    Ehdp => "EHDP",
    CetcSm => "CETC-SM",
}

impl AlgorithmId {
    /// The 22 sequential benchmark algorithms (the brute-force oracle excluded).
    pub fn sequential() -> impl Iterator<Item = AlgorithmId> {
        Self::ALL
            .iter()
            .copied()
            .filter(|a| !a.is_parallel() && *a != AlgorithmId::Triples)
    }

    /// The 11 shared-memory parallel algorithms.
    pub fn parallel() -> impl Iterator<Item = AlgorithmId> {
        Self::ALL.iter().copied().filter(|a| a.is_parallel())
    }

    /// Algorithms built on the BFS cover-edge set.
    pub fn cetc_family() -> impl Iterator<Item = AlgorithmId> {
        Self::ALL
            .iter()
            .copied()
            .filter(|a| a.name().starts_with("CETC"))
    }

    pub fn is_parallel(self) -> bool {
        self >= AlgorithmId::Wp
    }

    /// Direction-oriented variants (each triangle found once).
    pub fn is_direction_oriented(self) -> bool {
        use AlgorithmId::*;
        matches!(
            self,
            Wd | Emd | Ebd | Etd | Ehd | Wdp | Emdp | Ebdp | Etdp | Ehdp
        )
    }

    /// Sequential algorithm computing the same quantity the same way.
    pub fn sequential_counterpart(self) -> AlgorithmId {
        use AlgorithmId::*;
        match self {
            Wp => W,
            Wdp => Wd,
            Emp => Em,
            Emdp => Emd,
            Ebp => Eb,
            Ebdp => Ebd,
            Etp => Et,
            Etdp => Etd,
            Ehp => Eh,
            Ehdp => Ehd,
            CetcSm => Cetc,
            other => other,
        }
    }

    /// For a direction-oriented variant, its duplicate-counting sibling.
    pub fn duplicate_counting_counterpart(self) -> Option<AlgorithmId> {
        use AlgorithmId::*;
        Some(match self {
            Wd => W,
            Emd => Em,
            Ebd => Eb,
            Etd => Et,
            Ehd => Eh,
            Wdp => Wp,
            Emdp => Emp,
            Ebdp => Ebp,
            Etdp => Etp,
            Ehdp => Ehp,
            _ => return None,
        })
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// Runs a sequential algorithm.
pub fn count_sequential(alg: AlgorithmId, g: &Graph) -> Result<TriangleCount> {
    use AlgorithmId::*;
    let t = match alg {
        Triples => seq::tc_triples(g),
        W => seq::tc_wedge(g),
        Wd => seq::tc_wedge_do(g),
        Em => seq::tc_edge_merge(g),
        Emd => seq::tc_edge_merge_do(g),
        Eb => seq::tc_edge_binary(g),
        Ebd => seq::tc_edge_binary_do(g),
        Et => seq::tc_edge_partition(g),
        Etd => seq::tc_edge_partition_do(g),
        Eh => seq::tc_edge_hash(g),
        Ehd => seq::tc_edge_hash_do(g),
        F => seq::tc_forward(g),
        Fh => seq::tc_forward_hashed(g),
        Fhd => seq::tc_forward_hashed_degree(g),
        Ts => seq::tc_tri_simple(g),
        La => seq::tc_linear_algebra(g),
        Ir => seq::tc_treelist(g),
        Cetc => seq::tc_cetc(g),
        CetcD => seq::tc_cetc_degree(g),
        CetcFe => seq::tc_cetc_fe(g),
        CetcS => seq::tc_cetc_split(g),
        CetcSd => seq::tc_cetc_split_degree(g),
        CetcSr => seq::tc_cetc_split_recursive(g),
        _ => return Err(Error::UnsupportedAlgorithm(alg.to_string(), "sequential")),
    };
    Ok(t)
}

/// Runs any algorithm; `cfg` is only consulted by parallel ones.
pub fn count(alg: AlgorithmId, g: &Graph, cfg: &ParallelConfig) -> Result<TriangleCount> {
    if alg.is_parallel() {
        par::tc_par(alg, g, cfg)
    } else {
        count_sequential(alg, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_sizes() {
        assert_eq!(AlgorithmId::sequential().count(), 22);
        assert_eq!(AlgorithmId::parallel().count(), 11);
        assert_eq!(AlgorithmId::cetc_family().count(), 7);
    }

    #[test]
    fn names_round_trip() {
        for &a in AlgorithmId::ALL {
            assert_eq!(a.name().parse::<AlgorithmId>().unwrap(), a);
            assert_eq!(a.name().to_lowercase().parse::<AlgorithmId>().unwrap(), a);
        }
        assert!("XYZ".parse::<AlgorithmId>().is_err());
    }

    #[test]
    fn parallel_pairs_with_sequential() {
        for a in AlgorithmId::parallel() {
            let s = a.sequential_counterpart();
            assert!(!s.is_parallel());
            assert_eq!(a.is_direction_oriented(), s.is_direction_oriented());
        }
    }
}
