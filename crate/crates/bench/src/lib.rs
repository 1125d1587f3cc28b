//! Benchmark harness: load graphs, run algorithm sets with repetitions,
//! verify counts against a reference, and write CSV.
//!
//! Kernels receive the graph read-only; every allocation they make,
//! including the BFS of the cover-edge variants, is inside the timed call.
//! Thread pools are built once per worker count, outside the timing.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use tricount::bfs::{bfs_label, cover_edges};
use tricount::dm::report;
use tricount::io::read_edge_list_file;
use tricount::{
    count, count_sequential, generate_rmat, normalize, AlgorithmId, EdgeList, Graph,
    ParallelConfig, RmatParams, TriangleCount,
};

pub type Result<T, E = BenchError> = std::result::Result<T, E>;

#[derive(Debug)]
pub enum BenchError {
    Usage(String),
    Graph(tricount::Error),
    Csv(csv::Error),
    Io(std::io::Error),
}

impl fmt::Display for BenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchError::Usage(msg) => f.write_str(msg),
            BenchError::Graph(e) => e.fmt(f),
            BenchError::Csv(e) => e.fmt(f),
            BenchError::Io(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for BenchError {}

impl From<tricount::Error> for BenchError {
    fn from(e: tricount::Error) -> Self {
        BenchError::Graph(e)
    }
}

impl From<csv::Error> for BenchError {
    fn from(e: csv::Error) -> Self {
        BenchError::Csv(e)
    }
}

impl From<std::io::Error> for BenchError {
    fn from(e: std::io::Error) -> Self {
        BenchError::Io(e)
    }
}

/// Vertex count up to which the brute-force count is the reference.
pub const TRIPLES_REFERENCE_MAX_N: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    File(PathBuf),
    Rmat {
        scale: u32,
        edge_factor: u32,
        seed: u64,
    },
}

impl FromStr for GraphSpec {
    type Err = BenchError;

    /// `file:<path>`, `rmat:<scale>:<ef>:<seed>`, or a bare path.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("rmat:") {
            let parts: Vec<&str> = rest.split(':').collect();
            let bad = || BenchError::Usage(format!("expected rmat:<scale>:<ef>:<seed>, got `{s}`"));
            let [scale, ef, seed] = parts[..] else {
                return Err(bad());
            };
            return Ok(GraphSpec::Rmat {
                scale: scale.parse().map_err(|_| bad())?,
                edge_factor: ef.parse().map_err(|_| bad())?,
                seed: seed.parse().map_err(|_| bad())?,
            });
        }
        let path = s.strip_prefix("file:").unwrap_or(s);
        if path.is_empty() {
            return Err(BenchError::Usage("empty graph path".into()));
        }
        Ok(GraphSpec::File(PathBuf::from(path)))
    }
}

pub struct LoadedGraph {
    pub id: String,
    pub graph: Graph,
    /// Pairs before normalization (generated pairs for RMAT, lines for files).
    pub raw_pairs: usize,
}

pub fn load_graph(id: &str) -> Result<LoadedGraph> {
    let el: EdgeList = match id.parse::<GraphSpec>()? {
        GraphSpec::File(path) => read_edge_list_file(&path)?,
        GraphSpec::Rmat {
            scale,
            edge_factor,
            seed,
        } => generate_rmat(&RmatParams::new(scale, edge_factor, seed))?,
    };
    Ok(LoadedGraph {
        id: id.to_string(),
        raw_pairs: el.len(),
        graph: normalize(&el),
    })
}

/// Expands a comma list of algorithm ids and the groups `all-seq`,
/// `all-par`, `cetc-family`. Order of first mention is kept.
pub fn parse_algorithms(list: &str) -> Result<Vec<AlgorithmId>> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let group: Vec<AlgorithmId> = match item.to_ascii_lowercase().as_str() {
            "all-seq" => AlgorithmId::sequential().collect(),
            "all-par" => AlgorithmId::parallel().collect(),
            "cetc-family" => AlgorithmId::cetc_family().collect(),
            _ => vec![item
                .parse()
                .map_err(|e: tricount::Error| BenchError::Usage(e.to_string()))?],
        };
        for a in group {
            if !out.contains(&a) {
                out.push(a);
            }
        }
    }
    if out.is_empty() {
        return Err(BenchError::Usage("no algorithms selected".into()));
    }
    Ok(out)
}

pub fn parse_usize_list(list: &str, what: &str) -> Result<Vec<usize>> {
    let values = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| BenchError::Usage(format!("bad {what} value `{s}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    if values.is_empty() {
        return Err(BenchError::Usage(format!("empty {what} list")));
    }
    Ok(values)
}

#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub algorithms: Vec<AlgorithmId>,
    pub graphs: Vec<String>,
    pub reps: usize,
    /// Worker counts for parallel algorithms; sequential ones run once.
    pub workers: Vec<usize>,
    pub verify: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: AlgorithmId,
    pub graph: String,
    pub workers: usize,
    pub reps: usize,
    pub mean_seconds: f64,
    pub count: TriangleCount,
    pub verified: bool,
}

fn reference_count(g: &Graph) -> Result<TriangleCount> {
    let alg = if g.n() <= TRIPLES_REFERENCE_MAX_N {
        AlgorithmId::Triples
    } else {
        AlgorithmId::Fh
    };
    Ok(count_sequential(alg, g)?)
}

/// One untimed warm-up, then `reps` timed runs; the mean is reported.
pub fn run_bench(spec: &BenchSpec) -> Result<Vec<BenchRecord>> {
    if spec.reps == 0 {
        return Err(BenchError::Usage("reps must be >= 1".into()));
    }
    let mut records = Vec::new();
    for id in &spec.graphs {
        let loaded = load_graph(id)?;
        let g = &loaded.graph;
        let reference = if spec.verify {
            Some(reference_count(g)?)
        } else {
            None
        };
        for &alg in &spec.algorithms {
            let worker_counts: &[usize] = if alg.is_parallel() {
                &spec.workers
            } else {
                &[1]
            };
            for &workers in worker_counts {
                let cfg = ParallelConfig::new(workers);
                let pool = cfg.thread_pool()?;
                let (mean_seconds, t) = pool.install(|| -> Result<(f64, TriangleCount)> {
                    let t = count(alg, g, &cfg)?;
                    let start = Instant::now();
                    for _ in 0..spec.reps {
                        let again = count(alg, g, &cfg)?;
                        assert_eq!(again, t, "{alg} is not deterministic on {id}");
                    }
                    Ok((start.elapsed().as_secs_f64() / spec.reps as f64, t))
                })?;
                records.push(BenchRecord {
                    algorithm: alg,
                    graph: loaded.id.clone(),
                    workers,
                    reps: spec.reps,
                    mean_seconds,
                    count: t,
                    verified: reference == Some(t),
                });
            }
        }
    }
    Ok(records)
}

/// RFC 4180 CSV with a header row, sorted by algorithm then graph.
pub fn emit_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut sorted: Vec<&BenchRecord> = records.iter().collect();
    sorted.sort_by(|a, b| {
        (a.algorithm.name(), &a.graph, a.workers).cmp(&(b.algorithm.name(), &b.graph, b.workers))
    });
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "algorithm",
        "graph",
        "workers",
        "reps",
        "mean_seconds",
        "count",
        "verified",
    ])?;
    for r in sorted {
        w.write_record([
            r.algorithm.name().to_string(),
            r.graph.clone(),
            r.workers.to_string(),
            r.reps.to_string(),
            format!("{:.9}", r.mean_seconds),
            r.count.to_string(),
            r.verified.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Communication rows for every graph and processor count.
pub fn emit_dm_report<W: Write>(graphs: &[String], ps: &[usize], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "graph",
        "n",
        "m",
        "triangles",
        "wedges",
        "c",
        "p",
        "bits_previous",
        "bits_cetc_dm",
        "reduction",
    ])?;
    for id in graphs {
        let loaded = load_graph(id)?;
        for &p in ps {
            let r = report(&loaded.graph, p)?;
            w.write_record([
                id.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.triangles.to_string(),
                r.wedges.to_string(),
                format!("{:.6}", r.k),
                r.p.to_string(),
                r.bits_previous.to_string(),
                r.bits_cetc_dm.to_string(),
                format!("{:.4}", r.reduction),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Writes the horizontal (cover) edges of every graph as `graph,u,v`.
pub fn dump_cover<W: Write>(graphs: &[String], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["graph", "u", "v"])?;
    for id in graphs {
        let loaded = load_graph(id)?;
        let g = &loaded.graph;
        let cover = cover_edges(&bfs_label(g), g)?;
        for &(u, v) in cover.edges() {
            w.write_record([id.as_str(), &u.to_string(), &v.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}
