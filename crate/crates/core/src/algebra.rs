//! Labelings, vertex weights, imbalance and the skew-adjacency matrix.
//!
//! All arithmetic is exact `i64`. The weight of `v` under labeling `f` is
//! `Σ_{u∈N⁺(v)} f(u) − Σ_{u∈N⁻(v)} f(u)`, which is also row `v` of `S·x`
//! for the skew-adjacency matrix `S = Aᵀ − A` and label vector `x`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, VertexId};

/// Positive integer labels, one per vertex in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling(Vec<i64>);

impl Labeling {
    pub fn new(labels: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&l| l < 1) {
            return Err(Error::InvalidLabel(bad));
        }
        Ok(Self(labels))
    }

    /// Vertex `v` gets label `v + 1`.
    pub fn identity(n: usize) -> Self {
        Self((1..=n as i64).collect())
    }

    /// Every vertex labeled 1.
    pub fn ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: VertexId) -> Option<i64> {
        self.0.get(v).copied()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// True iff the labels are a bijection onto `1..=len`.
    pub fn is_standard(&self) -> bool {
        self.is_bijection_onto(1)
    }

    /// True iff the labels are a bijection onto `lo..lo+len`.
    pub fn is_bijection_onto(&self, lo: i64) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        self.0.iter().all(|&l| {
            let idx = l - lo;
            if idx < 0 || idx as usize >= n || seen[idx as usize] {
                return false;
            }
            seen[idx as usize] = true;
            true
        })
    }

    /// The first vertex carrying `label`.
    pub fn vertex_with_label(&self, label: i64) -> Option<VertexId> {
        self.0.iter().position(|&l| l == label)
    }

    /// `h(v) = f(v) + s`.
    pub fn shifted(&self, s: i64) -> Result<Self> {
        self.0
            .iter()
            .enumerate()
            .map(|(vertex, &l)| {
                let label = l + s;
                if label < 1 {
                    Err(Error::NonPositiveLabel { vertex, label })
                } else {
                    Ok(label)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// Concatenation: `self` covers the first vertices, `other` the rest.
    pub fn concat(&self, other: &Labeling) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Vertex `v` of the result is vertex `perm⁻¹(v)` here, i.e. vertex `v`
    /// moves to `perm[v]` as in [`OrientedGraph::permuted`].
    pub fn permuted(&self, perm: &[VertexId]) -> Self {
        let mut out = vec![0; self.0.len()];
        for (v, &l) in self.0.iter().enumerate() {
            out[perm[v]] = l;
        }
        Self(out)
    }

    fn check_covers(&self, g: &OrientedGraph) -> Result<()> {
        match self.0.len().cmp(&g.order()) {
            std::cmp::Ordering::Less => Err(Error::MissingLabel(self.0.len())),
            std::cmp::Ordering::Greater => Err(Error::VertexOutOfRange {
                vertex: g.order(),
                order: g.order(),
            }),
            std::cmp::Ordering::Equal => Ok(()),
        }
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    for (i, x) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Per-vertex weights `wt(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

/// Per-vertex `imb(v) = |N⁺(v)| − |N⁻(v)|` and the graph imbalance
/// `max |imb(v)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImbalanceVector {
    pub imbalances: Vec<i64>,
    pub graph_imbalance: i64,
}

impl ImbalanceVector {
    pub fn is_balanced(&self) -> bool {
        self.graph_imbalance == 0
    }
}

/// Dense `n×n` skew-adjacency matrix: `s_ij = −1` for an edge `i→j`, `+1`
/// for `j→i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SkewMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Self { n, entries }
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.n, "vector length must match matrix order");
        self.rows()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(<[i64]>::to_vec).collect()
    }
}

/// Result of checking a labeling against the DDM condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub is_standard_bijection: bool,
    pub weights: WeightVector,
    pub is_ddm: bool,
}

fn weights_by_neighborhood(g: &OrientedGraph, f: &[i64]) -> Vec<i64> {
    g.vertices()
        .map(|v| {
            let inn: i64 = g.in_neighbors(v).iter().map(|&u| f[u]).sum();
            let out: i64 = g.out_neighbors(v).iter().map(|&u| f[u]).sum();
            inn - out
        })
        .collect()
}

/// Vertex weights under `f`.
pub fn weight_vector(g: &OrientedGraph, f: &Labeling) -> Result<WeightVector> {
    f.check_covers(g)?;
    let w = weights_by_neighborhood(g, f.as_slice());
    debug_assert_eq!(
        w,
        skew_matrix(g).mul_vec(f.as_slice()),
        "S·x must equal the weight vector"
    );
    Ok(WeightVector(w))
}

pub fn imbalance_vector(g: &OrientedGraph) -> ImbalanceVector {
    let imbalances: Vec<i64> = g
        .degree_profile()
        .into_iter()
        .map(|(i, o)| i as i64 - o as i64)
        .collect();
    let graph_imbalance = imbalances.iter().map(|x| x.abs()).max().unwrap_or(0);
    ImbalanceVector {
        imbalances,
        graph_imbalance,
    }
}

pub fn skew_matrix(g: &OrientedGraph) -> SkewMatrix {
    let n = g.order();
    let mut entries = vec![0; n * n];
    for &(u, v) in g.edges() {
        entries[u * n + v] = -1;
        entries[v * n + u] = 1;
    }
    SkewMatrix { n, entries }
}

pub fn verify_ddm(g: &OrientedGraph, f: &Labeling) -> Result<Verdict> {
    let weights = weight_vector(g, f)?;
    let is_standard_bijection = f.is_standard();
    let is_ddm = is_standard_bijection && weights.is_zero();
    Ok(Verdict {
        is_standard_bijection,
        weights,
        is_ddm,
    })
}

/// `Σ imb(v)·f(v)`; zero for every DDM labeling.
pub fn check_orthogonality(g: &OrientedGraph, f: &Labeling) -> Result<i64> {
    f.check_covers(g)?;
    let imb = imbalance_vector(g);
    Ok(imb.imbalances.iter().zip(f.as_slice()).map(|(a, b)| a * b).sum())
}

pub fn shift_labeling(f: &Labeling, s: i64) -> Result<Labeling> {
    f.shifted(s)
}
