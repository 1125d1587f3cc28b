//! Sorted-set intersection strategies shared by the edge iterators.

use crate::graph::VertexId;

/// Counts `|a ∩ b|` for two strictly increasing slices.
pub trait Intersect {
    fn count(&mut self, a: &[VertexId], b: &[VertexId]) -> u64;
}

/// Two-pointer linear scan.
#[derive(Debug, Default, Clone, Copy)]
pub struct Merge;

/// Each element of the shorter list is binary-searched in the longer one.
#[derive(Debug, Default, Clone, Copy)]
pub struct Binary;

/// Recursive median split: the median of the longer list is located in the
/// shorter one by binary search and both halves recurse. Lists of at most
/// [`PARTITION_BASE`] elements fall back to a merge.
#[derive(Debug, Default, Clone, Copy)]
pub struct Partition;

pub const PARTITION_BASE: usize = 4;

/// Vertex-indexed mark array: scatter one list, probe with the other, clear.
#[derive(Debug, Clone)]
pub struct Hash {
    marks: Vec<bool>,
}

impl Hash {
    pub fn new(n: usize) -> Self {
        Self {
            marks: vec![false; n],
        }
    }

    pub fn mark(&mut self, set: &[VertexId]) {
        for &x in set {
            self.marks[x as usize] = true;
        }
    }

    pub fn unmark(&mut self, set: &[VertexId]) {
        for &x in set {
            self.marks[x as usize] = false;
        }
    }

    #[inline]
    pub fn is_marked(&self, x: VertexId) -> bool {
        self.marks[x as usize]
    }

    pub fn probe(&self, set: &[VertexId]) -> u64 {
        set.iter().filter(|&&x| self.marks[x as usize]).count() as u64
    }
}

impl Intersect for Merge {
    fn count(&mut self, a: &[VertexId], b: &[VertexId]) -> u64 {
        merge_count(a, b)
    }
}

impl Intersect for Binary {
    fn count(&mut self, a: &[VertexId], b: &[VertexId]) -> u64 {
        binary_count(a, b)
    }
}

impl Intersect for Partition {
    fn count(&mut self, a: &[VertexId], b: &[VertexId]) -> u64 {
        partition_count(a, b)
    }
}

impl Intersect for Hash {
    fn count(&mut self, a: &[VertexId], b: &[VertexId]) -> u64 {
        self.mark(a);
        let hits = self.probe(b);
        self.unmark(a);
        hits
    }
}

pub fn merge_count(a: &[VertexId], b: &[VertexId]) -> u64 {
    let mut hits = 0;
    merge_for_each(a, b, |_| hits += 1);
    hits
}

/// Calls `f` with every common element, in increasing order.
#[inline]
pub fn merge_for_each(a: &[VertexId], b: &[VertexId], mut f: impl FnMut(VertexId)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                f(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

pub fn binary_count(a: &[VertexId], b: &[VertexId]) -> u64 {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .filter(|x| large.binary_search(x).is_ok())
        .count() as u64
}

pub fn partition_count(a: &[VertexId], b: &[VertexId]) -> u64 {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.is_empty() {
        return 0;
    }
    if large.len() <= PARTITION_BASE {
        return merge_count(small, large);
    }
    let mid = large.len() / 2;
    let pivot = large[mid];
    let pos = small.partition_point(|&x| x < pivot);
    let found = small.get(pos) == Some(&pivot);
    let skip = pos + found as usize;
    found as u64
        + partition_count(&small[..pos], &large[..mid])
        + partition_count(&small[skip..], &large[mid + 1..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn sorted_set() -> impl Strategy<Value = Vec<VertexId>> {
        prop::collection::btree_set(0u32..200, 0..60).prop_map(|s| s.into_iter().collect())
    }

    #[test]
    fn small_cases() {
        assert_eq!(merge_count(&[1, 3, 5], &[3, 4, 5]), 2);
        assert_eq!(binary_count(&[], &[1, 2]), 0);
        assert_eq!(partition_count(&[0, 1, 2, 3, 4, 5, 6, 7], &[7]), 1);
        let mut h = Hash::new(10);
        assert_eq!(h.count(&[2, 4, 6], &[1, 2, 6, 9]), 2);
        assert!(!h.is_marked(2));
    }

    proptest! {
        #[test]
        fn strategies_agree(a in sorted_set(), b in sorted_set()) {
            let want = a.iter().collect::<BTreeSet<_>>()
                .intersection(&b.iter().collect()).count() as u64;
            prop_assert_eq!(Merge.count(&a, &b), want);
            prop_assert_eq!(Binary.count(&a, &b), want);
            prop_assert_eq!(Partition.count(&a, &b), want);
            prop_assert_eq!(Hash::new(200).count(&a, &b), want);
        }
    }
}
