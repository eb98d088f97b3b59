//! The JSON document format for partially oriented graphs.

use std::fmt;

use pogcomp_core::graph::PartiallyOrientedGraph;
use pogcomp_core::GraphError;
use serde::{Deserialize, Serialize};

/// `{"n": 3, "edges": [[0, 1]], "arcs": [[1, 2]], "name": "..."}` with
/// 0-based vertices and arcs as `[tail, head]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PogDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocumentError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (Some(l), None) => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for DocumentError {}

impl PogDocument {
    pub fn from_graph(h: &PartiallyOrientedGraph, name: Option<String>) -> Self {
        PogDocument {
            n: h.order(),
            edges: h.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            arcs: h.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
            name,
        }
    }

    /// Parses and validates. Errors point at the offending line of `text`.
    pub fn parse(text: &str) -> Result<(PogDocument, PartiallyOrientedGraph), DocumentError> {
        let doc: PogDocument = serde_json::from_str(text).map_err(|e| DocumentError {
            line: Some(e.line()),
            column: Some(e.column()),
            message: e.to_string(),
        })?;
        let h = doc.to_graph_located(text)?;
        Ok((doc, h))
    }

    pub fn to_graph(&self) -> Result<PartiallyOrientedGraph, GraphError> {
        build(self.n, &self.edges, &self.arcs)
    }

    fn to_graph_located(&self, text: &str) -> Result<PartiallyOrientedGraph, DocumentError> {
        let err = match self.to_graph() {
            Ok(h) => return Ok(h),
            Err(e) => e,
        };
        // the first item whose inclusion fails is the one to blame
        for i in 0..self.edges.len() {
            if let Err(e) = build(self.n, &self.edges[..=i], &[]) {
                return Err(item_error(text, "edges", i, e));
            }
        }
        for i in 0..self.arcs.len() {
            if let Err(e) = build(self.n, &self.edges, &self.arcs[..=i]) {
                return Err(item_error(text, "arcs", i, e));
            }
        }
        Err(DocumentError {
            line: None,
            column: None,
            message: err.to_string(),
        })
    }
}

fn build(n: usize, edges: &[[usize; 2]], arcs: &[[usize; 2]]) -> Result<PartiallyOrientedGraph, GraphError> {
    let edges: Vec<(usize, usize)> = edges.iter().map(|&[u, v]| (u, v)).collect();
    let arcs: Vec<(usize, usize)> = arcs.iter().map(|&[u, v]| (u, v)).collect();
    PartiallyOrientedGraph::new(n, &edges, &arcs)
}

fn item_error(text: &str, key: &str, i: usize, e: GraphError) -> DocumentError {
    DocumentError {
        line: locate_item(text, key, i),
        column: None,
        message: format!("{key}[{i}]: {e}"),
    }
}

/// 1-based line of the `index`-th element of the array under `key`.
fn locate_item(text: &str, key: &str, index: usize) -> Option<usize> {
    let quoted = format!("\"{key}\"");
    let mut start = None;
    let mut from = 0;
    while let Some(off) = text[from..].find(&quoted) {
        let after = from + off + quoted.len();
        if text[after..].trim_start().starts_with(':') {
            start = Some(after);
            break;
        }
        from = after;
    }
    let bytes = text.as_bytes();
    let mut i = start?;
    while i < bytes.len() && bytes[i] != b'[' {
        i += 1;
    }
    let mut depth = 0;
    let mut count = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'[' => {
                depth += 1;
                if depth == 2 {
                    if count == index {
                        return Some(text[..i].matches('\n').count() + 1);
                    }
                    count += 1;
                }
            }
            b']' => {
                depth -= 1;
                if depth == 0 {
                    break;
                }
            }
            _ => {}
        }
        i += 1;
    }
    None
}
