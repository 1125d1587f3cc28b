mod common;

use tricount::bfs::EdgeClass;
use tricount::dm::{ceil_log2, comm_volume_cetc_dm, report, simulate_cetc_dm};
use tricount::seq::tc_cetc;
use tricount::{bfs_label, generate_rmat, normalize, RmatParams};

#[test]
fn karate_two_processors() {
    let g = common::karate();
    let run = simulate_cetc_dm(&g, 2).unwrap();
    assert_eq!(run.triangles.0, 45);
    assert_eq!(run.log.shipped_edges(), run.cover_edges);
    assert_eq!(run.log.transfers.len(), 2);
}

#[test]
fn simulation_matches_sequential_on_corpus() {
    for (name, g) in common::random_corpus(40, 31) {
        let want = tc_cetc(&g);
        for p in [1, 2, 4, 8].into_iter().filter(|&p| p <= g.n()) {
            assert_eq!(
                simulate_cetc_dm(&g, p).unwrap().triangles,
                want,
                "{name} p={p}"
            );
        }
    }
}

#[test]
fn recount_equals_cover_term() {
    let g = normalize(&generate_rmat(&RmatParams::new(9, 16, 4)).unwrap());
    let lab = bfs_label(&g);
    let log_n = ceil_log2(g.n() as u64);
    for p in [1, 2, 4, 8] {
        let run = simulate_cetc_dm(&g, p).unwrap();
        let vol = comm_volume_cetc_dm(&g, &lab, p).unwrap();
        assert_eq!(run.log.recount_bits(log_n), vol.cover_bits, "p={p}");
        assert_eq!(run.cover_edges, lab.count(EdgeClass::Horizontal));
    }
}

#[test]
fn karate_report_row() {
    let r = report(&common::karate(), 4).unwrap();
    assert_eq!((r.n, r.m, r.triangles), (34, 78, 45));
    assert_eq!(r.log_n, 6);
    assert_eq!(r.bits_previous, r.wedges as u128 * 12);
    assert!((r.reduction - r.bits_previous as f64 / r.bits_cetc_dm as f64).abs() < 1e-12);
}
