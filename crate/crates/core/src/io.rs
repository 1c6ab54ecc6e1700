//! The `ddmog 1` line-record text format.
//!
//! ```text
//! # free-form comment
//! ddmog 1
//! n 5
//! e 1 2        directed edge 1 -> 2 (1-based)
//! l 1 3        vertex 1 carries label 3
//! ```
//!
//! Serialization is canonical: comments, header, `n`, edges in
//! lexicographic order, then labels by vertex.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::Labeling;
use crate::error::Error;
use crate::graph::{OrientedGraph, VertexId};
use crate::labeled::{LabeledGraph, Provenance};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {0}: expected header `ddmog 1`")]
    BadHeader(usize),
    #[error("line {line}: {reason}")]
    BadRecord { line: usize, reason: String },
    #[error("missing `n <order>` record")]
    MissingOrder,
    #[error("line {0}: vertex out of range")]
    VertexOutOfRange(usize),
    #[error("line {0}: vertex labeled twice")]
    DuplicateLabelAssignment(usize),
    #[error("line {0}: edge closes a 2-cycle")]
    TwoCycle(usize),
    #[error("line {0}: loop edge")]
    LoopEdge(usize),
    #[error("line {0}: duplicate edge")]
    DuplicateEdge(usize),
}

fn bad(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::BadRecord {
        line,
        reason: reason.into(),
    }
}

/// A parsed file: graph, optional per-vertex labels and comment lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub format_version: String,
    pub graph: OrientedGraph,
    pub labels: BTreeMap<VertexId, i64>,
    pub comments: Vec<String>,
}

impl GraphDocument {
    pub fn new(graph: OrientedGraph) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            graph,
            labels: BTreeMap::new(),
            comments: Vec::new(),
        }
    }

    pub fn from_labeled(lg: &LabeledGraph) -> Self {
        let mut doc = Self::new(lg.graph.clone());
        doc.labels = lg.labeling.as_slice().iter().copied().enumerate().collect();
        doc
    }

    pub fn with_comments(mut self, comments: impl IntoIterator<Item = String>) -> Self {
        self.comments = comments.into_iter().collect();
        self
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// `Ok(None)` without labels, the full labeling when every vertex is
    /// labeled, otherwise the first unlabeled vertex.
    pub fn labeling(&self) -> Result<Option<Labeling>, Error> {
        if self.labels.is_empty() {
            return Ok(None);
        }
        let labels = self
            .graph
            .vertices()
            .map(|v| self.labels.get(&v).copied().ok_or(Error::MissingLabel(v)))
            .collect::<Result<Vec<_>, _>>()?;
        Labeling::new(labels).map(Some)
    }

    /// The labeled graph; fails when any vertex lacks a label.
    pub fn to_labeled(&self, provenance: Provenance) -> Result<LabeledGraph, Error> {
        let labeling = self.labeling()?.ok_or(Error::MissingLabel(0))?;
        LabeledGraph::new(self.graph.clone(), labeling, provenance)
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| bad(line, format!("expected a non-negative integer, found {tok:?}")))
}

fn parse_vertex(tok: &str, line: usize, order: usize) -> Result<VertexId, ParseError> {
    let v = parse_usize(tok, line)?;
    if v == 0 || v > order {
        return Err(ParseError::VertexOutOfRange(line));
    }
    Ok(v - 1)
}

pub fn parse(text: &str) -> Result<GraphDocument, ParseError> {
    let mut comments = Vec::new();
    let mut header_seen = false;
    let mut order: Option<usize> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut edge_set = std::collections::HashSet::new();
    let mut labels = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(c) = trimmed.strip_prefix('#') {
            comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if !header_seen {
            if tokens != ["ddmog", FORMAT_VERSION] {
                return Err(ParseError::BadHeader(line));
            }
            header_seen = true;
            continue;
        }
        match tokens[0] {
            "ddmog" => return Err(bad(line, "repeated header")),
            "n" => {
                if order.is_some() {
                    return Err(bad(line, "repeated `n` record"));
                }
                let [_, n] = tokens[..] else {
                    return Err(bad(line, "expected `n <order>`"));
                };
                order = Some(parse_usize(n, line)?);
            }
            "e" => {
                let n = order.ok_or_else(|| bad(line, "`e` before `n`"))?;
                let [_, a, b] = tokens[..] else {
                    return Err(bad(line, "expected `e <u> <v>`"));
                };
                let (u, v) = (parse_vertex(a, line, n)?, parse_vertex(b, line, n)?);
                if u == v {
                    return Err(ParseError::LoopEdge(line));
                }
                if edge_set.contains(&(v, u)) {
                    return Err(ParseError::TwoCycle(line));
                }
                if !edge_set.insert((u, v)) {
                    return Err(ParseError::DuplicateEdge(line));
                }
                edges.push((u, v));
            }
            "l" => {
                let n = order.ok_or_else(|| bad(line, "`l` before `n`"))?;
                let [_, a, b] = tokens[..] else {
                    return Err(bad(line, "expected `l <v> <label>`"));
                };
                let v = parse_vertex(a, line, n)?;
                let label: i64 = b
                    .parse()
                    .ok()
                    .filter(|&l: &i64| l >= 1)
                    .ok_or_else(|| bad(line, format!("label must be a positive integer, found {b:?}")))?;
                if labels.insert(v, label).is_some() {
                    return Err(ParseError::DuplicateLabelAssignment(line));
                }
            }
            tag => return Err(bad(line, format!("unknown record tag {tag:?}"))),
        }
    }
    if !header_seen {
        return Err(ParseError::BadHeader(text.lines().count().max(1)));
    }
    let order = order.ok_or(ParseError::MissingOrder)?;
    let graph = OrientedGraph::new(order, edges).expect("edges validated while parsing");
    Ok(GraphDocument {
        format_version: FORMAT_VERSION.to_string(),
        graph,
        labels,
        comments,
    })
}

pub fn serialize(doc: &GraphDocument) -> String {
    let mut out = String::new();
    for c in &doc.comments {
        if c.is_empty() {
            out.push_str("#\n");
        } else {
            let _ = writeln!(out, "# {c}");
        }
    }
    let _ = writeln!(out, "ddmog {}", doc.format_version);
    let _ = writeln!(out, "n {}", doc.order());
    for &(u, v) in doc.graph.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    for (&v, &l) in &doc.labels {
        let _ = writeln!(out, "l {} {}", v + 1, l);
    }
    out
}
