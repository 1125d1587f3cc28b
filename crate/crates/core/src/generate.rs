//! Synthetic graph generators: Graph500-style RMAT and Erdős–Rényi G(n, p).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeList, VertexId};

/// Largest scale whose `2^scale` vertices still fit 32-bit ids.
pub const MAX_RMAT_SCALE: u32 = 31;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RmatParams {
    pub scale: u32,
    pub edge_factor: u32,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub seed: u64,
}

impl Default for RmatParams {
    fn default() -> Self {
        Self {
            scale: 10,
            edge_factor: 16,
            a: 0.57,
            b: 0.19,
            c: 0.19,
            d: 0.05,
            seed: 0,
        }
    }
}

impl RmatParams {
    pub fn new(scale: u32, edge_factor: u32, seed: u64) -> Self {
        Self {
            scale,
            edge_factor,
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.scale == 0 {
            return Err(Error::InvalidParameter("RMAT scale must be >= 1".into()));
        }
        if self.scale > MAX_RMAT_SCALE {
            return Err(Error::Overflow(format!(
                "RMAT scale {} exceeds 32-bit vertex ids (max {MAX_RMAT_SCALE})",
                self.scale
            )));
        }
        let probs = [self.a, self.b, self.c, self.d];
        if probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidParameter(
                "RMAT probabilities must lie in [0, 1]".into(),
            ));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "RMAT probabilities sum to {sum}, expected 1"
            )));
        }
        (1usize << self.scale)
            .checked_mul(self.edge_factor as usize)
            .ok_or_else(|| Error::Overflow("RMAT pair count overflows usize".into()))?;
        Ok(())
    }
}

/// Plain recursive-matrix sampling: each pair descends `scale` levels,
/// choosing a quadrant with probabilities `(a, b, c, d)` at every level.
pub fn generate_rmat(p: &RmatParams) -> Result<EdgeList> {
    p.validate()?;
    let n = 1usize << p.scale;
    let pairs = n * p.edge_factor as usize;
    let (ab, abc) = (p.a + p.b, p.a + p.b + p.c);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut edges = Vec::with_capacity(pairs);
    for _ in 0..pairs {
        let (mut u, mut v) = (0 as VertexId, 0 as VertexId);
        for level in (0..p.scale).rev() {
            let r: f64 = rng.random();
            let bit = 1 << level;
            if r < p.a {
            } else if r < ab {
                v |= bit;
            } else if r < abc {
                u |= bit;
            } else {
                u |= bit;
                v |= bit;
            }
        }
        edges.push((u, v));
    }
    EdgeList::new(n, edges)
}

/// Erdős–Rényi G(n, p): every unordered pair independently with probability `p`.
pub fn generate_gnp(n: usize, prob: f64, seed: u64) -> Result<EdgeList> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::InvalidParameter(format!("edge probability {prob}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.random::<f64>() < prob {
                edges.push((u, v));
            }
        }
    }
    EdgeList::new(n, edges)
}
