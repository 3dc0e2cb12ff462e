//! Text formats.
//!
//! Graphs are tab-separated edge lists, `source<TAB>target[<TAB>weight]`, with
//! an optional `# nodes=<n>` header so isolated nodes survive a round trip.
//! Without the header the node count is one past the largest id seen. Other
//! lines starting with `#` and blank lines are ignored.
//!
//! Rank vectors are CSV with a `node_id,score` header, sorted by node id.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId, RootSet};
use crate::rank::RankVector;

const NODES_HEADER: &str = "# nodes=";

pub fn read_graph<R: Read>(reader: R) -> Result<DirectedGraph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix(NODES_HEADER) {
            let n = rest.trim().parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad node count {rest:?}: {e}"),
            })?;
            declared = Some(n);
            continue;
        }
        if trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split('\t').collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 2 or 3 tab-separated fields, found {}", fields.len()),
            });
        }
        let parse_id = |s: &str| {
            s.trim().parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad node id {s:?}: {e}"),
            })
        };
        let source = parse_id(fields[0])?;
        let target = parse_id(fields[1])?;
        let weight = match fields.get(2) {
            Some(w) => w.trim().parse::<f64>().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad weight {w:?}: {e}"),
            })?,
            None => 1.0,
        };
        max_id = Some(max_id.map_or(source.max(target), |m| m.max(source).max(target)));
        edges.push((source, target, weight));
    }
    let node_count = match (declared, max_id) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    DirectedGraph::from_edges(node_count, edges)
}

pub fn write_graph<W: Write>(graph: &DirectedGraph, writer: W) -> Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "{NODES_HEADER}{}", graph.node_count())?;
    for e in graph.edges() {
        writeln!(w, "{}\t{}\t{}", e.source, e.target, e.weight)?;
    }
    w.flush()?;
    Ok(())
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<DirectedGraph> {
    read_graph(File::open(path)?)
}

pub fn save_graph(graph: &DirectedGraph, path: impl AsRef<Path>) -> Result<()> {
    write_graph(graph, File::create(path)?)
}

/// Reads one node id per line.
pub fn read_roots<R: Read>(reader: R, node_count: usize) -> Result<RootSet> {
    let mut members = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let id = trimmed.parse::<usize>().map_err(|e| Error::Parse {
            line: i + 1,
            message: format!("bad node id {trimmed:?}: {e}"),
        })?;
        members.push(NodeId::from(id));
    }
    RootSet::new(node_count, members)
}

pub fn load_roots(path: impl AsRef<Path>, node_count: usize) -> Result<RootSet> {
    read_roots(File::open(path)?, node_count)
}

pub fn write_roots<W: Write>(roots: &RootSet, writer: W) -> Result<()> {
    let mut w = BufWriter::new(writer);
    for r in roots.members() {
        writeln!(w, "{r}")?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
struct ScoreRow {
    node_id: usize,
    score: f64,
}

pub fn write_rank_csv<W: Write>(rank: &RankVector, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for (node_id, &score) in rank.scores().iter().enumerate() {
        w.serialize(ScoreRow { node_id, score })?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a `node_id,score` CSV. Ids must be dense; rows may come in any order.
pub fn read_rank_csv<R: Read>(reader: R) -> Result<RankVector> {
    let mut rows: Vec<ScoreRow> = Vec::new();
    for (i, row) in csv::Reader::from_reader(reader).deserialize().enumerate() {
        rows.push(row.map_err(|e: csv::Error| Error::Parse {
            line: i + 2,
            message: e.to_string(),
        })?);
    }
    rows.sort_by_key(|r| r.node_id);
    let mut scores = Vec::with_capacity(rows.len());
    for (expected, row) in rows.into_iter().enumerate() {
        if row.node_id != expected {
            return Err(Error::param(format!("rank file is missing node {expected}")));
        }
        scores.push(row.score);
    }
    let rank = RankVector::from_raw(scores)?;
    let total = rank.sum();
    if (total - 1.0).abs() <= 1e-9 {
        Ok(RankVector::normalized_unchecked(rank.into_scores()))
    } else {
        Ok(rank)
    }
}
