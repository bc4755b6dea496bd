//! Instances from follower graphs: `c_ij = +1` if `i` follows `j`, else `-1`.
//!
//! The node set is taken exactly as given. In particular an ego node is part
//! of the instance only if the caller lists it (or it occurs in the edge list
//! when nodes are inferred).

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use super::Instance;
use crate::error::{Error, Result};

/// An ingested network with the node label of every element index.
#[derive(Clone, Debug)]
pub struct EgoNetwork {
    pub labels: Vec<String>,
    pub instance: Instance,
    /// Distinct non-loop edges after deduplication.
    pub edge_count: usize,
}

/// Builds the ±1 instance over `nodes` (in the given order). Duplicate edges
/// are ignored and self-loops dropped.
pub fn ingest_ego_network<S: AsRef<str>>(edges: &[(S, S)], nodes: &[S]) -> Result<EgoNetwork> {
    if nodes.is_empty() {
        return Err(Error::InvalidConfig("empty node list".into()));
    }
    let mut index = HashMap::with_capacity(nodes.len());
    let mut labels = Vec::with_capacity(nodes.len());
    for s in nodes {
        let s = s.as_ref();
        if index.insert(s.to_string(), labels.len()).is_none() {
            labels.push(s.to_string());
        }
    }
    let n = labels.len();
    let mut values = vec![-1.0; n * n];
    for p in 0..n {
        values[p * n + p] = 0.0;
    }
    let mut edge_count = 0;
    for (a, b) in edges {
        let look = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownNode(s.to_string()))
        };
        let (p, q) = (look(a.as_ref())?, look(b.as_ref())?);
        if p != q && values[p * n + q] < 0.0 {
            values[p * n + q] = 1.0;
            edge_count += 1;
        }
    }
    Ok(EgoNetwork {
        labels,
        instance: Instance::from_raw(n, values),
        edge_count,
    })
}

/// Parses whitespace-separated `src dst` lines. Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str, origin: &Path) -> Result<Vec<(String, String)>> {
    let mut edges = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => edges.push((a.to_string(), b.to_string())),
            _ => {
                return Err(Error::Parse {
                    path: origin.to_path_buf(),
                    line: k + 1,
                    msg: "expected `src dst`".into(),
                })
            }
        }
    }
    Ok(edges)
}

/// Loads an edge file. Without an explicit node list the nodes are the edge
/// endpoints in order of first appearance.
pub fn load_ego_network(
    edges_path: impl AsRef<Path>,
    nodes: Option<&[String]>,
) -> Result<EgoNetwork> {
    let path = edges_path.as_ref();
    let edges = parse_edge_list(&fs::read_to_string(path)?, path)?;
    match nodes {
        Some(nodes) => ingest_ego_network(&edges, nodes),
        None => {
            let mut seen = std::collections::HashSet::new();
            let mut order = Vec::new();
            for (a, b) in &edges {
                for s in [a, b] {
                    if seen.insert(s.clone()) {
                        order.push(s.clone());
                    }
                }
            }
            ingest_ego_network(&edges, &order)
        }
    }
}
