#![allow(dead_code)]

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tricount::io::read_edge_list_file;
use tricount::{generate_gnp, generate_rmat, normalize, Graph, RmatParams};

pub fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn karate() -> Graph {
    load(&repo_root().join("data/karate.txt"))
}

pub fn load(path: &Path) -> Graph {
    normalize(&read_edge_list_file(path).unwrap_or_else(|e| panic!("{}: {e}", path.display())))
}

/// Looks for a dataset in `$TC_DATA_DIR`, then in `<repo>/data`.
pub fn find_dataset(file_names: &[&str]) -> Option<PathBuf> {
    let mut dirs = Vec::new();
    if let Ok(dir) = std::env::var("TC_DATA_DIR") {
        dirs.push(PathBuf::from(dir));
    }
    dirs.push(repo_root().join("data"));
    dirs.iter()
        .flat_map(|d| file_names.iter().map(move |f| d.join(f)))
        .find(|p| p.is_file())
}

/// Erdős–Rényi graphs with `n ≤ 200` and RMAT graphs with scale `≤ 10`,
/// alternating, all derived from one seed.
pub fn random_corpus(count: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let s: u64 = rng.random();
            if i % 2 == 0 {
                let n = rng.random_range(1..=200usize);
                let p = rng.random_range(0.0..0.3f64);
                (
                    format!("gnp({n},{p:.3},{s})"),
                    normalize(&generate_gnp(n, p, s).unwrap()),
                )
            } else {
                let scale = rng.random_range(1..=10u32);
                let ef = [1, 2, 4, 8, 16][rng.random_range(0..5)];
                let el = generate_rmat(&RmatParams::new(scale, ef, s)).unwrap();
                (format!("rmat({scale},{ef},{s})"), normalize(&el))
            }
        })
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && tricount::bfs_label(g).components() == 1
}
