//! Text edge-list ingestion and the binary CSR cache container.
//!
//! Text format: one pair per line, two whitespace-separated integers.
//! Lines starting with `#` or `%` are comments; blank lines are skipped.
//!
//! When the ids seen form exactly `0..=max` they are kept as-is. Otherwise
//! they are relabeled densely in order of first appearance and the mapping
//! is retained on the [`EdgeList`].
//!
//! Binary container (little-endian):
//!
//! ```text
//! magic     b"TCSR"
//! version   u8 (= 1)
//! n         u64
//! m         u64
//! offsets   [u64; n + 1]
//! neighbors [u32; 2m]
//! ```

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, VertexId, MAX_VERTICES};

pub const CSR_MAGIC: [u8; 4] = *b"TCSR";
pub const CSR_VERSION: u8 = 1;

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<EdgeList> {
    let mut raw: Vec<(u64, u64)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') || text.starts_with('%') {
            continue;
        }
        let mut tokens = text.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: lineno,
                reason: format!("expected two vertex ids, got `{text}`"),
            });
        };
        let parse = |tok: &str| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                reason: format!("`{tok}` is not a non-negative integer"),
            })
        };
        raw.push((parse(a)?, parse(b)?));
    }
    relabel(raw)
}

pub fn parse_edge_list_str(text: &str) -> Result<EdgeList> {
    parse_edge_list(text.as_bytes())
}

pub fn read_edge_list_file(path: impl AsRef<Path>) -> Result<EdgeList> {
    parse_edge_list(BufReader::new(File::open(path)?))
}

fn relabel(raw: Vec<(u64, u64)>) -> Result<EdgeList> {
    let mut dense: HashMap<u64, VertexId> = HashMap::new();
    let mut order: Vec<u64> = Vec::new();
    let mut max_id = None;
    for &(a, b) in &raw {
        for id in [a, b] {
            max_id = max_id.max(Some(id));
            if let Entry::Vacant(slot) = dense.entry(id) {
                if order.len() >= MAX_VERTICES {
                    return Err(Error::Overflow(format!(
                        "more than {MAX_VERTICES} distinct vertex ids"
                    )));
                }
                slot.insert(order.len() as VertexId);
                order.push(id);
            }
        }
    }
    let Some(max_id) = max_id else {
        return EdgeList::new(0, Vec::new());
    };
    if max_id + 1 == order.len() as u64 {
        let edges = raw
            .into_iter()
            .map(|(a, b)| (a as VertexId, b as VertexId))
            .collect();
        return EdgeList::new(order.len(), edges);
    }
    let edges = raw
        .into_iter()
        .map(|(a, b)| (dense[&a], dense[&b]))
        .collect();
    Ok(EdgeList::new(order.len(), edges)?.with_labels(order))
}

pub fn write_csr<W: Write>(g: &Graph, mut w: W) -> Result<()> {
    w.write_all(&CSR_MAGIC)?;
    w.write_all(&[CSR_VERSION])?;
    w.write_all(&(g.n() as u64).to_le_bytes())?;
    w.write_all(&(g.m() as u64).to_le_bytes())?;
    for &o in g.offsets() {
        w.write_all(&(o as u64).to_le_bytes())?;
    }
    for &v in g.adjacency() {
        w.write_all(&v.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csr<R: Read>(mut r: R) -> Result<Graph> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if magic != CSR_MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let mut version = [0u8; 1];
    r.read_exact(&mut version)?;
    if version[0] != CSR_VERSION {
        return Err(Error::Format(format!("unsupported version {}", version[0])));
    }
    let n = read_u64(&mut r)? as usize;
    let m = read_u64(&mut r)? as usize;
    if n > MAX_VERTICES {
        return Err(Error::Overflow(format!("{n} vertices exceed 32-bit ids")));
    }
    let mut offsets = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        offsets.push(read_u64(&mut r)? as usize);
    }
    let mut neighbors = Vec::with_capacity(2 * m);
    let mut buf = [0u8; 4];
    for _ in 0..2 * m {
        r.read_exact(&mut buf)?;
        neighbors.push(u32::from_le_bytes(buf));
    }
    Graph::from_csr(offsets, neighbors)
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

pub fn save_csr(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    write_csr(g, BufWriter::new(File::create(path)?))
}

pub fn load_csr(path: impl AsRef<Path>) -> Result<Graph> {
    read_csr(BufReader::new(File::open(path)?))
}
