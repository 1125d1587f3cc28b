use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use tricount_bench::{
    dump_cover, emit_csv, emit_dm_report, load_graph, parse_algorithms, parse_usize_list,
    run_bench, BenchError, BenchSpec,
};

/// Worker list used when `--workers` is not given.
const WORKERS_ENV: &str = "TC_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "tricount",
    version,
    about = "Run and verify triangle counting kernels"
)]
struct Cli {
    /// Comma list of algorithm ids or groups (all-seq, all-par, cetc-family).
    #[arg(long, default_value = "all-seq")]
    algs: String,

    /// Comma list of graphs: file:<path>, rmat:<scale>:<ef>:<seed>, or a path.
    #[arg(long, required = true, value_delimiter = ',')]
    graphs: Vec<String>,

    /// Timed repetitions per algorithm, after one warm-up run.
    #[arg(long, default_value_t = 10)]
    reps: usize,

    /// Comma list of worker counts for parallel algorithms (falls back to
    /// $TC_WORKERS, then to the number of CPUs).
    #[arg(long)]
    workers: Option<String>,

    /// Check every count against Triples (n <= 2000) or FH.
    #[arg(long)]
    verify: bool,

    /// Output CSV path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Write the cover-edge set of every graph as CSV to this path.
    #[arg(long)]
    dump_cover: Option<PathBuf>,

    /// Emit communication-model rows instead of running benchmarks.
    #[arg(long)]
    dm_report: bool,

    /// Processor counts for --dm-report.
    #[arg(long, default_value = "4")]
    p: String,
}

fn output(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn worker_list(cli: &Cli) -> Result<Vec<usize>, BenchError> {
    if let Some(list) = &cli.workers {
        return parse_usize_list(list, "workers");
    }
    if let Ok(list) = std::env::var(WORKERS_ENV) {
        return parse_usize_list(&list, WORKERS_ENV);
    }
    Ok(vec![
        std::thread::available_parallelism().map_or(1, |n| n.get())
    ])
}

fn run(cli: &Cli) -> Result<bool, BenchError> {
    for id in &cli.graphs {
        let g = load_graph(id)?;
        eprintln!(
            "graph {id}: n={} pairs={} m={}",
            g.graph.n(),
            g.raw_pairs,
            g.graph.m()
        );
    }
    if let Some(path) = &cli.dump_cover {
        dump_cover(&cli.graphs, BufWriter::new(File::create(path)?))?;
    }
    if cli.dm_report {
        let ps = parse_usize_list(&cli.p, "p")?;
        emit_dm_report(&cli.graphs, &ps, output(&cli.out)?)?;
        return Ok(true);
    }
    let spec = BenchSpec {
        algorithms: parse_algorithms(&cli.algs)?,
        graphs: cli.graphs.clone(),
        reps: cli.reps,
        workers: worker_list(cli)?,
        verify: cli.verify,
    };
    let records = run_bench(&spec)?;
    emit_csv(&records, output(&cli.out)?)?;
    let failed: Vec<_> = records
        .iter()
        .filter(|r| spec.verify && !r.verified)
        .collect();
    for r in &failed {
        eprintln!(
            "verification failed: {} on {} (workers {}) counted {}",
            r.algorithm, r.graph, r.workers, r.count
        );
    }
    Ok(failed.is_empty())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
