mod common;

use tricount::io::{load_csr, parse_edge_list_str, read_edge_list_file, save_csr};
use tricount::{normalize, wedge_count};

#[test]
fn karate_file_loads_with_identity_ids() {
    let el = read_edge_list_file(common::repo_root().join("data/karate.txt")).unwrap();
    assert_eq!((el.n(), el.len()), (34, 78));
    assert!(el.labels().is_none());
    let g = normalize(&el);
    assert_eq!(g.max_degree(), 17);
    assert_eq!(g.degree(33), 17);
    assert_eq!(wedge_count(&g), 528);
}

#[test]
fn csr_cache_round_trip() {
    let g = common::karate();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("karate.tcsr");
    save_csr(&g, &path).unwrap();
    assert_eq!(load_csr(&path).unwrap(), g);
}

#[test]
fn sparse_ids_are_relabeled_in_order_of_appearance() {
    let el = parse_edge_list_str("% snap style\n100 7\n7 3\n3 100\n").unwrap();
    assert_eq!(el.n(), 3);
    assert_eq!(el.labels(), Some(&[100, 7, 3][..]));
    assert_eq!(el.external_id(2), 3);
    let g = normalize(&el);
    assert_eq!(g.m(), 3);
}
