//! Exhaustive search for DDM labelings and DDM orientations.
//!
//! Labeling search assigns labels `1..=n` to vertices by backtracking,
//! highest-degree vertices first. Each vertex keeps a running partial weight
//! and counts of its unlabeled in- and out-neighbours, which give an interval
//! of reachable final weights from the smallest and largest unused labels.

use crate::algebra::Labeling;
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, VertexId};
use crate::kernel::kernel_feasibility;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    First,
    All,
    Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SearchMode,
    /// Largest order accepted by labeling search.
    pub max_order: usize,
    /// Largest edge count accepted by orientation search.
    pub max_edges: usize,
    pub prune_with_kernel: bool,
    pub prune_with_property1: bool,
    /// Neighbourhood and interval-bound pruning inside the backtracking.
    pub prune_with_bounds: bool,
    /// Orientation search fixes the direction of the first edge.
    pub use_reversal_symmetry: bool,
    /// Stop a labeling search after this many nodes with `AbortedCap`.
    pub node_budget: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            mode: SearchMode::First,
            max_order: 12,
            max_edges: 20,
            prune_with_kernel: true,
            prune_with_property1: true,
            prune_with_bounds: true,
            use_reversal_symmetry: true,
            node_budget: None,
        }
    }
}

impl SearchConfig {
    pub fn with_mode(mode: SearchMode) -> Self {
        Self {
            mode,
            ..Self::default()
        }
    }

    /// Plain enumeration of all `n!` bijections.
    pub fn unpruned(mode: SearchMode) -> Self {
        Self {
            mode,
            prune_with_kernel: false,
            prune_with_property1: false,
            prune_with_bounds: false,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_order == 0 || self.max_edges == 0 || self.node_budget == Some(0) {
            return Err(Error::InvalidCap);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    ExhaustedNone,
    AbortedCap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Lexicographically sorted; empty in `Count` mode.
    pub labelings: Vec<Labeling>,
    pub count: u64,
    pub nodes_explored: u64,
    pub leaves_evaluated: u64,
}

impl SearchOutcome {
    fn filtered() -> Self {
        Self {
            status: SearchStatus::ExhaustedNone,
            labelings: Vec::new(),
            count: 0,
            nodes_explored: 0,
            leaves_evaluated: 0,
        }
    }
}

/// True when some non-isolated vertex cannot have weight zero under any
/// labeling: degree below three, or no in-edge, or no out-edge.
fn fails_property1(g: &OrientedGraph) -> bool {
    g.vertices().any(|v| {
        let (i, o) = (g.in_neighbors(v).len(), g.out_neighbors(v).len());
        i + o > 0 && (i + o < 3 || i == 0 || o == 0)
    })
}

struct Backtrack<'a> {
    g: &'a OrientedGraph,
    cfg: &'a SearchConfig,
    n: usize,
    order: Vec<VertexId>,
    labels: Vec<i64>,
    used: Vec<bool>,
    partial: Vec<i64>,
    open_in: Vec<usize>,
    open_out: Vec<usize>,
    found: Vec<Labeling>,
    count: u64,
    nodes: u64,
    leaves: u64,
    aborted: bool,
}

impl Backtrack<'_> {
    fn done(&self) -> bool {
        self.aborted || (self.cfg.mode == SearchMode::First && self.count > 0)
    }

    fn assign(&mut self, v: VertexId, label: i64, sign: i64) {
        let delta = label * sign;
        for &y in self.g.out_neighbors(v) {
            self.partial[y] += delta;
            self.open_in[y] = (self.open_in[y] as i64 - sign) as usize;
        }
        for &y in self.g.in_neighbors(v) {
            self.partial[y] -= delta;
            self.open_out[y] = (self.open_out[y] as i64 - sign) as usize;
        }
    }

    /// Unused labels in increasing order.
    fn unused(&self) -> Vec<i64> {
        (1..=self.n as i64).filter(|&l| !self.used[(l - 1) as usize]).collect()
    }

    fn feasible(&self) -> bool {
        let free = self.unused();
        let mut prefix = vec![0i64; free.len() + 1];
        for (i, &l) in free.iter().enumerate() {
            prefix[i + 1] = prefix[i] + l;
        }
        let smallest = |k: usize| prefix[k];
        let largest = |k: usize| prefix[free.len()] - prefix[free.len() - k];
        self.g.vertices().all(|y| {
            let (i, o) = (self.open_in[y], self.open_out[y]);
            let w = self.partial[y];
            if i + o == 0 {
                return w == 0;
            }
            let hi = w + largest(i) - smallest(o);
            let lo = w + smallest(i) - largest(o);
            lo <= 0 && 0 <= hi
        })
    }

    fn run(&mut self, depth: usize) {
        if self.done() {
            return;
        }
        self.nodes += 1;
        if self.cfg.node_budget.is_some_and(|b| self.nodes > b) {
            self.aborted = true;
            return;
        }
        if depth == self.n {
            self.leaves += 1;
            if self.partial.iter().all(|&w| w == 0) {
                self.count += 1;
                if self.cfg.mode != SearchMode::Count {
                    self.found
                        .push(Labeling::new(self.labels.clone()).expect("labels are positive"));
                }
            }
            return;
        }
        let v = self.order[depth];
        for label in 1..=self.n as i64 {
            if self.used[(label - 1) as usize] {
                continue;
            }
            self.used[(label - 1) as usize] = true;
            self.labels[v] = label;
            self.assign(v, label, 1);
            if !self.cfg.prune_with_bounds || self.feasible() {
                self.run(depth + 1);
            }
            self.assign(v, label, -1);
            self.labels[v] = 0;
            self.used[(label - 1) as usize] = false;
            if self.done() {
                return;
            }
        }
    }
}

pub fn search_labeling(g: &OrientedGraph, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let n = g.order();
    if n > cfg.max_order {
        return Err(Error::OrderExceedsCap {
            order: n,
            cap: cfg.max_order,
        });
    }
    if cfg.prune_with_property1 && fails_property1(g) {
        return Ok(SearchOutcome::filtered());
    }
    if cfg.prune_with_kernel && !kernel_feasibility(g).feasible {
        return Ok(SearchOutcome::filtered());
    }
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut bt = Backtrack {
        g,
        cfg,
        n,
        order,
        labels: vec![0; n],
        used: vec![false; n],
        partial: vec![0; n],
        open_in: g.vertices().map(|v| g.in_neighbors(v).len()).collect(),
        open_out: g.vertices().map(|v| g.out_neighbors(v).len()).collect(),
        found: Vec::new(),
        count: 0,
        nodes: 0,
        leaves: 0,
        aborted: false,
    };
    bt.run(0);
    let mut labelings = bt.found;
    labelings.sort_by(|a, b| a.as_slice().cmp(b.as_slice()));
    let status = if bt.count > 0 {
        SearchStatus::Found
    } else if bt.aborted {
        SearchStatus::AbortedCap
    } else {
        SearchStatus::ExhaustedNone
    };
    Ok(SearchOutcome {
        status,
        labelings,
        count: bt.count,
        nodes_explored: bt.nodes,
        leaves_evaluated: bt.leaves,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationOutcome {
    pub status: SearchStatus,
    pub is_ddmo: bool,
    pub witness: Option<(OrientedGraph, Labeling)>,
    pub orientations_examined: u64,
    pub labeling_searches: u64,
}

/// Decides whether some orientation of the simple graph on `order` vertices
/// with the given unordered edges admits a DDM labeling.
pub fn search_orientation(
    order: usize,
    undirected_edges: &[(VertexId, VertexId)],
    cfg: &SearchConfig,
) -> Result<OrientationOutcome> {
    cfg.validate()?;
    let mut edges: Vec<(VertexId, VertexId)> = undirected_edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    // Validates loops, range and repeated pairs.
    OrientedGraph::new(order, edges.iter().copied())?;
    if edges.len() > cfg.max_edges {
        return Err(Error::EdgeCountExceedsCap {
            edges: edges.len(),
            cap: cfg.max_edges,
        });
    }
    if order > cfg.max_order {
        return Err(Error::OrderExceedsCap {
            order,
            cap: cfg.max_order,
        });
    }
    let mut outcome = OrientationOutcome {
        status: SearchStatus::ExhaustedNone,
        is_ddmo: false,
        witness: None,
        orientations_examined: 0,
        labeling_searches: 0,
    };
    if cfg.prune_with_property1 {
        let mut degree = vec![0usize; order];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        if degree.iter().any(|&d| d == 1 || d == 2) {
            return Ok(outcome);
        }
    }
    let m = edges.len();
    let free_bits = if cfg.use_reversal_symmetry && m > 0 { m - 1 } else { m };
    let inner = SearchConfig {
        mode: SearchMode::First,
        ..cfg.clone()
    };
    let mut aborted = false;
    for mask in 0u64..(1u64 << free_bits) {
        // Bit i of the full mask flips edge i; with the symmetry, edge 0 is
        // always kept as (min, max).
        let full = if free_bits < m { mask << 1 } else { mask };
        let oriented = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if full >> i & 1 == 1 { (v, u) } else { (u, v) });
        let g = OrientedGraph::new(order, oriented).expect("orientation of a simple graph");
        outcome.orientations_examined += 1;
        if cfg.prune_with_property1 && fails_property1(&g) {
            continue;
        }
        outcome.labeling_searches += 1;
        let res = search_labeling(&g, &inner)?;
        match res.status {
            SearchStatus::Found => {
                outcome.status = SearchStatus::Found;
                outcome.is_ddmo = true;
                outcome.witness = Some((g, res.labelings[0].clone()));
                return Ok(outcome);
            }
            SearchStatus::AbortedCap => aborted = true,
            SearchStatus::ExhaustedNone => {}
        }
    }
    if aborted {
        outcome.status = SearchStatus::AbortedCap;
    }
    Ok(outcome)
}

pub fn reversal(g: &OrientedGraph) -> OrientedGraph {
    g.reversed()
}
