mod common;

use std::collections::BTreeSet;

use tricount::intersect::merge_count;
use tricount::seq::cetc_listing;
use tricount::{
    count, degree_order, generate_rmat, normalize, AlgorithmId, Graph, ParallelConfig, RmatParams,
};

fn brute_force_triangles(g: &Graph) -> BTreeSet<[u32; 3]> {
    let mut out = BTreeSet::new();
    for (u, v) in g.edges() {
        for &w in g.neighbors_above(v, v) {
            if g.has_edge(u, w) {
                out.insert([u, v, w]);
            }
        }
    }
    out
}

fn all_counts(g: &Graph, workers: usize) -> Vec<(AlgorithmId, u64)> {
    let cfg = ParallelConfig::new(workers);
    AlgorithmId::ALL
        .iter()
        .map(|&a| (a, count(a, g, &cfg).unwrap().0))
        .collect()
}

#[test]
fn karate_has_45_triangles_everywhere() {
    let g = common::karate();
    assert_eq!((g.n(), g.m()), (34, 78));
    for (alg, t) in all_counts(&g, 4) {
        assert_eq!(t, 45, "{alg}");
    }
}

#[test]
fn every_algorithm_matches_enumeration() {
    for (name, g) in common::random_corpus(60, 2024) {
        let want = brute_force_triangles(&g).len() as u64;
        for (alg, t) in all_counts(&g, 3) {
            assert_eq!(t, want, "{alg} on {name}");
        }
    }
}

#[test]
fn rmat_scale_ten_agrees() {
    let g = normalize(&generate_rmat(&RmatParams::new(10, 16, 42)).unwrap());
    assert!(g.m() <= 16384);
    let counts = all_counts(&g, 4);
    let want = counts[0].1;
    assert!(want > 0);
    assert!(counts.iter().all(|&(_, t)| t == want), "{counts:?}");
}

#[test]
fn degree_order_preserves_counts() {
    for (name, g) in common::random_corpus(20, 7) {
        let h = degree_order(&g);
        for (a, b) in all_counts(&g, 2).into_iter().zip(all_counts(&h, 2)) {
            assert_eq!(a, b, "{name}");
        }
    }
}

#[test]
fn edge_intersections_sum_to_six_t() {
    for (name, g) in common::random_corpus(30, 99) {
        let sum: u64 = g
            .directed_edges()
            .map(|(u, v)| merge_count(g.neighbors(u), g.neighbors(v)))
            .sum();
        assert_eq!(sum, 6 * brute_force_triangles(&g).len() as u64, "{name}");
    }
}

#[test]
fn cover_edge_listing_is_exact() {
    for (name, g) in common::random_corpus(40, 5)
        .into_iter()
        .filter(|(_, g)| g.n() <= 64)
    {
        let listed = cetc_listing(&g);
        let unique: BTreeSet<[u32; 3]> = listed.iter().copied().collect();
        assert_eq!(unique.len(), listed.len(), "duplicate on {name}");
        assert_eq!(unique, brute_force_triangles(&g), "{name}");
    }
}
