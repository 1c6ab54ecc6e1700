use std::fmt;

use crate::algebra::{imbalance_vector, verify_ddm, weight_vector, Labeling, Verdict, WeightVector};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

/// How a labeled graph was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub step: String,
    pub detail: String,
    pub inputs: Vec<Provenance>,
}

impl Provenance {
    pub fn leaf(step: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            step: step.into(),
            detail: detail.into(),
            inputs: Vec::new(),
        }
    }

    pub fn node(step: impl Into<String>, detail: impl Into<String>, inputs: Vec<Provenance>) -> Self {
        Self {
            step: step.into(),
            detail: detail.into(),
            inputs,
        }
    }

    fn render(&self, depth: usize, out: &mut String) {
        out.push_str(&"  ".repeat(depth));
        out.push_str(&self.step);
        if !self.detail.is_empty() {
            out.push_str(": ");
            out.push_str(&self.detail);
        }
        out.push('\n');
        for input in &self.inputs {
            input.render(depth + 1, out);
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        f.write_str(s.trim_end())
    }
}

/// An oriented graph together with a labeling of every vertex.
///
/// Equality ignores provenance.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: OrientedGraph,
    pub labeling: Labeling,
    pub provenance: Provenance,
}

impl PartialEq for LabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.labeling == other.labeling
    }
}

impl Eq for LabeledGraph {}

impl LabeledGraph {
    pub fn new(graph: OrientedGraph, labeling: Labeling, provenance: Provenance) -> Result<Self> {
        if labeling.len() < graph.order() {
            return Err(Error::MissingLabel(labeling.len()));
        }
        if labeling.len() > graph.order() {
            return Err(Error::VertexOutOfRange {
                vertex: graph.order(),
                order: graph.order(),
            });
        }
        Ok(Self {
            graph,
            labeling,
            provenance,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn verify(&self) -> Verdict {
        verify_ddm(&self.graph, &self.labeling).expect("labeling covers the graph")
    }

    pub fn is_ddm(&self) -> bool {
        self.verify().is_ddm
    }

    pub fn weights(&self) -> WeightVector {
        weight_vector(&self.graph, &self.labeling).expect("labeling covers the graph")
    }

    pub fn imbalance(&self) -> i64 {
        imbalance_vector(&self.graph).graph_imbalance
    }

    pub(crate) fn require_ddm(&self, what: &'static str) -> Result<()> {
        if self.is_ddm() {
            Ok(())
        } else {
            Err(Error::NotDdm(what))
        }
    }

    /// Re-indexes vertices so the vertex labeled `i` becomes vertex `i − lo`.
    /// Requires the labels to be a bijection onto `lo..lo+n`.
    pub fn canonical_by_label(&self) -> Result<Self> {
        let lo = self.labeling.as_slice().iter().copied().min().unwrap_or(1);
        if !self.labeling.is_bijection_onto(lo) {
            return Err(Error::LabelRangeMismatch {
                operand: "labeled graph",
                lo,
                hi: lo + self.order() as i64 - 1,
            });
        }
        let perm: Vec<usize> = self.labeling.as_slice().iter().map(|&l| (l - lo) as usize).collect();
        Ok(Self {
            graph: self.graph.permuted(&perm),
            labeling: self.labeling.permuted(&perm),
            provenance: self.provenance.clone(),
        })
    }

    /// Edges rewritten as `(label(tail), label(head))`, sorted.
    pub fn labeled_edges(&self) -> Vec<(i64, i64)> {
        let l = self.labeling.as_slice();
        let mut e: Vec<_> = self.graph.edges().iter().map(|&(u, v)| (l[u], l[v])).collect();
        e.sort_unstable();
        e
    }
}
