//! Immutable oriented graphs.
//!
//! Vertices are dense indices `0..order`. The neighborhood naming follows
//! the labeling literature: [`OrientedGraph::in_neighbors`] is `N⁺(v)` (edges
//! *into* `v`) and [`OrientedGraph::out_neighbors`] is `N⁻(v)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// A directed graph with no loops, no duplicate edges and no pair of
/// opposite edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    order: usize,
    edges: Vec<(VertexId, VertexId)>,
    in_adj: Vec<Vec<VertexId>>,
    out_adj: Vec<Vec<VertexId>>,
}

impl OrientedGraph {
    /// Validates the edge list and builds the graph. Edges are stored in
    /// lexicographic order regardless of input order.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if set.contains(&(v, u)) {
                return Err(Error::TwoCycle(v, u));
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut in_adj = vec![Vec::new(); order];
        let mut out_adj = vec![Vec::new(); order];
        for &(u, v) in &edges {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Ok(Self {
            order,
            edges,
            in_adj,
            out_adj,
        })
    }

    /// The graph with one vertex and no edges.
    pub fn trivial() -> Self {
        Self::edgeless(1)
    }

    pub fn edgeless(order: usize) -> Self {
        Self {
            order,
            edges: Vec::new(),
            in_adj: vec![Vec::new(); order],
            out_adj: vec![Vec::new(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic `(tail, head)` order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    /// `N⁺(v)`: tails of edges ending at `v`, ascending.
    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v]
    }

    /// `N⁻(v)`: heads of edges leaving `v`, ascending.
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }

    /// Degree of `v` in the underlying undirected graph.
    pub fn degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len() + self.out_adj[v].len()
    }

    /// Every neighbor of `v` regardless of direction, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut all: Vec<_> = self.in_adj[v].iter().chain(&self.out_adj[v]).copied().collect();
        all.sort_unstable();
        all
    }

    /// Per-vertex `(|N⁺(v)|, |N⁻(v)|)`.
    pub fn degree_profile(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .map(|v| (self.in_adj[v].len(), self.out_adj[v].len()))
            .collect()
    }

    /// Vertices that cannot sit in a connected non-trivial DDM oriented
    /// graph: fewer than three incident arcs, or all arcs pointing the same
    /// way. Isolated vertices are reported as well.
    pub fn necessary_condition_violations(&self) -> Vec<VertexId> {
        self.vertices()
            .filter(|&v| {
                let (i, o) = (self.in_adj[v].len(), self.out_adj[v].len());
                i + o < 3 || i == 0 || o == 0
            })
            .collect()
    }

    /// Every edge reversed.
    pub fn reversed(&self) -> Self {
        Self {
            order: self.order,
            edges: {
                let mut e: Vec<_> = self.edges.iter().map(|&(u, v)| (v, u)).collect();
                e.sort_unstable();
                e
            },
            in_adj: self.out_adj.clone(),
            out_adj: self.in_adj.clone(),
        }
    }

    /// Connected components of the underlying graph, each sorted, ordered
    /// by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.in_adj[v].iter().chain(&self.out_adj[v]) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Unordered edge list of the underlying graph, each pair as `(min, max)`.
    pub fn underlying_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut e: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }

    /// Renames vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..order`.
    pub fn permuted(&self, perm: &[VertexId]) -> Self {
        debug_assert_eq!(perm.len(), self.order);
        Self::new(self.order, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation preserves validity")
    }
}
