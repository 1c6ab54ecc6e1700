//! Constructions that build DDM labeled graphs from smaller ones.
//!
//! Every public builder that promises a DDM labeling returns a
//! [`LabeledGraph`] whose labeling verifies; preconditions are checked up
//! front and reported as [`Error`] values.
//!
//! Vertex numbering of results is deterministic: operands keep their own
//! order and are concatenated left to right (a coalesced vertex is dropped
//! from the second operand and everything after it shifts down by one).

use std::collections::BTreeMap;

use crate::algebra::{imbalance_vector, weight_vector, Labeling};
use crate::catalog;
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, VertexId};
use crate::labeled::{LabeledGraph, Provenance};

fn summary(lg: &LabeledGraph) -> Provenance {
    lg.provenance.clone()
}

/// Adds one vertex `v'` (label 1, appended as the last vertex) to a DDM
/// graph of imbalance exactly 1, wiring `v' → v` for every `imb(v) = −1` and
/// `v → v'` for every `imb(v) = +1`. All old labels move up by one.
pub fn augment_imbalance_one(lg: &LabeledGraph) -> Result<LabeledGraph> {
    lg.require_ddm("input")?;
    let imb = imbalance_vector(&lg.graph);
    if imb.graph_imbalance != 1 {
        return Err(Error::ImbalanceNotOne(imb.graph_imbalance));
    }
    let n = lg.order();
    let fresh = n;
    let mut edges = lg.graph.edges().to_vec();
    for (v, &i) in imb.imbalances.iter().enumerate() {
        match i {
            -1 => edges.push((fresh, v)),
            1 => edges.push((v, fresh)),
            _ => {}
        }
    }
    let graph = OrientedGraph::new(n + 1, edges)?;
    let mut labels = lg.labeling.shifted(1)?.into_vec();
    labels.push(1);
    let out = LabeledGraph::new(
        graph,
        Labeling::new(labels)?,
        Provenance::node(
            "augment_imbalance_one",
            format!("order {} -> {}, new vertex {} labeled 1", n, n + 1, fresh + 1),
            vec![summary(lg)],
        ),
    )?;
    debug_assert!(out.is_ddm() && out.imbalance() == 0);
    Ok(out)
}

/// Where vertex `x` of the second operand lands after coalescing `w` of
/// the second operand into `u` of the first (which has `n1` vertices).
pub fn coalesced_index(n1: usize, u: VertexId, w: VertexId, x: VertexId) -> VertexId {
    use std::cmp::Ordering::*;
    match x.cmp(&w) {
        Less => n1 + x,
        Equal => u,
        Greater => n1 + x - 1,
    }
}

/// Vertex coalescence `g1 ·_{uw} g2`: the disjoint union with `w` merged
/// into `u`.
pub fn coalesce(g1: &OrientedGraph, u: VertexId, g2: &OrientedGraph, w: VertexId) -> Result<OrientedGraph> {
    if u >= g1.order() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            order: g1.order(),
        });
    }
    if w >= g2.order() {
        return Err(Error::VertexOutOfRange {
            vertex: w,
            order: g2.order(),
        });
    }
    let n1 = g1.order();
    let map = |x| coalesced_index(n1, u, w, x);
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(a, b)| (map(a), map(b))));
    OrientedGraph::new(n1 + g2.order() - 1, edges)
}

/// Coalesces the vertex labeled `n` of a DDM graph of order `n` with the
/// vertex labeled 1 of a balanced DDM graph; the second graph's surviving
/// labels move up by `n − 1`.
pub fn chain(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<LabeledGraph> {
    g1.require_ddm("first operand")?;
    g2.require_ddm("second operand")?;
    let imb2 = g2.imbalance();
    if imb2 != 0 {
        return Err(Error::SecondOperandNotBalanced(imb2));
    }
    let n = g1.order();
    let u = g1.labeling.vertex_with_label(n as i64).expect("standard labeling");
    let w = g2.labeling.vertex_with_label(1).expect("standard labeling");
    let graph = coalesce(&g1.graph, u, &g2.graph, w)?;
    let shift = n as i64 - 1;
    let tail: Vec<i64> = g2
        .labeling
        .as_slice()
        .iter()
        .enumerate()
        .filter(|&(x, _)| x != w)
        .map(|(_, &l)| l + shift)
        .collect();
    let labeling = g1.labeling.concat(&Labeling::new(tail)?);
    let out = LabeledGraph::new(
        graph,
        labeling,
        Provenance::node(
            "chain",
            format!(
                "coalesce vertex {} (label {n}) with vertex {} (label 1); order {}",
                u + 1,
                w + 1,
                n + g2.order() - 1
            ),
            vec![summary(g1), summary(g2)],
        ),
    )?;
    debug_assert!(out.is_ddm());
    Ok(out)
}

/// A connected DDM graph on `n ≥ 5` vertices: reference graph `R_i` with
/// `i = 5 + (n − 5) mod 5`, chained with `R6` `(n − i) / 5` times.
pub fn construct_ddmog(n: usize) -> Result<LabeledGraph> {
    if n < 5 {
        return Err(Error::OrderTooSmall(n));
    }
    let base = 5 + (n - 5) % 5;
    let steps = (n - base) / 5;
    let mut current = catalog::labeled(&format!("R{base}"))?;
    let r6 = catalog::labeled("R6")?;
    for _ in 0..steps {
        current = chain(&current, &r6)?;
    }
    debug_assert_eq!(current.order(), n);
    Ok(current)
}

/// The windmill of `k` four-wheels sharing a hub, oriented and labeled so
/// every weight vanishes. Vertex 0 is the hub; blade `i` (1-based) occupies
/// vertices `4i−3..=4i` in the order rim-1, rim-2, rim-3, rim-4.
pub fn windmill(k: usize) -> Result<LabeledGraph> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    let n = 4 * k + 1;
    let hub = 0;
    let mut edges = Vec::with_capacity(8 * k);
    let mut labels = vec![0i64; n];
    labels[hub] = n as i64;
    for i in 1..=k {
        let base = 4 * (i - 1) + 1;
        let (a, b, c, d) = (base, base + 1, base + 2, base + 3);
        edges.extend([(a, b), (a, c), (d, c), (d, b), (hub, a), (b, hub), (hub, d), (c, hub)]);
        let (n, i) = (n as i64, i as i64);
        labels[a] = 2 * i - 1;
        labels[b] = 2 * i;
        labels[c] = n - 2 * i;
        labels[d] = n + 1 - 2 * i;
    }
    let out = LabeledGraph::new(
        OrientedGraph::new(n, edges)?,
        Labeling::new(labels)?,
        Provenance::leaf("windmill", format!("k = {k}, order {n}")),
    )?;
    debug_assert!(out.is_ddm());
    Ok(out)
}

fn disjoint_union(graphs: &[&OrientedGraph]) -> OrientedGraph {
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in graphs {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.order();
    }
    OrientedGraph::new(offset, edges).expect("disjoint union of valid graphs")
}

/// Disjoint union of a DDM graph with balanced DDM graphs; component `i`
/// has its labels shifted by the total order of the components before it.
pub fn disjoint_union_ddm(g1: &LabeledGraph, rest: &[LabeledGraph]) -> Result<LabeledGraph> {
    g1.require_ddm("first component")?;
    for (i, c) in rest.iter().enumerate() {
        c.require_ddm("component")?;
        let imbalance = c.imbalance();
        if imbalance != 0 {
            return Err(Error::ComponentNotBalanced {
                index: i + 1,
                imbalance,
            });
        }
    }
    let graphs: Vec<&OrientedGraph> = std::iter::once(&g1.graph)
        .chain(rest.iter().map(|c| &c.graph))
        .collect();
    let mut labeling = g1.labeling.clone();
    let mut offset = g1.order() as i64;
    for c in rest {
        labeling = labeling.concat(&c.labeling.shifted(offset)?);
        offset += c.order() as i64;
    }
    let inputs = std::iter::once(g1).chain(rest).map(summary).collect();
    let out = LabeledGraph::new(
        disjoint_union(&graphs),
        labeling,
        Provenance::node(
            "disjoint_union",
            format!("{} components, order {offset}", rest.len() + 1),
            inputs,
        ),
    )?;
    debug_assert!(out.is_ddm());
    Ok(out)
}

/// Vertices grouped by exact weight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightClasses(pub BTreeMap<i64, Vec<VertexId>>);

impl WeightClasses {
    pub fn class(&self, weight: i64) -> &[VertexId] {
        self.0.get(&weight).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn label_sum(&self, weight: i64, labeling: &Labeling) -> i64 {
        self.class(weight).iter().map(|&v| labeling.as_slice()[v]).sum()
    }

    pub fn max_abs_weight(&self) -> i64 {
        self.0.keys().map(|w| w.abs()).max().unwrap_or(0)
    }
}

pub fn weight_classes(g: &OrientedGraph, h: &Labeling) -> Result<WeightClasses> {
    let w = weight_vector(g, h)?;
    let mut classes: BTreeMap<i64, Vec<VertexId>> = BTreeMap::new();
    for (v, &x) in w.as_slice().iter().enumerate() {
        classes.entry(x).or_default().push(v);
    }
    Ok(WeightClasses(classes))
}

fn require_standard(g: &LabeledGraph, operand: &'static str, lo: i64) -> Result<()> {
    if g.labeling.is_bijection_onto(lo) {
        Ok(())
    } else {
        Err(Error::LabelRangeMismatch {
            operand,
            lo,
            hi: lo + g.order() as i64 - 1,
        })
    }
}

/// The weighted sum `G ⊕ˢ H`: the disjoint union (G re-indexed by label
/// first, then H in its own order) plus `v_i → u` for every `u` of weight
/// `−i−s` and `u → v_i` for every `u` of weight `i+s`, where `v_i` is the
/// vertex of G labeled `i`. No labeling is attached.
pub fn weighted_sum(g: &LabeledGraph, h: &LabeledGraph, s: i64) -> Result<OrientedGraph> {
    require_standard(g, "first operand", 1)?;
    let g = g.canonical_by_label()?;
    let n = g.order();
    let classes = weight_classes(&h.graph, &h.labeling)?;
    for &w in classes.0.keys() {
        if w != 0 && !(1..=n as i64).contains(&(w.abs() - s)) {
            return Err(Error::UncoveredWeightClass(w));
        }
    }
    let union = disjoint_union(&[&g.graph, &h.graph]);
    let mut edges = union.edges().to_vec();
    for i in 1..=n as i64 {
        let vi = (i - 1) as usize;
        edges.extend(classes.class(-i - s).iter().map(|&u| (vi, n + u)));
        edges.extend(classes.class(i + s).iter().map(|&u| (n + u, vi)));
    }
    OrientedGraph::new(n + h.order(), edges)
}

fn class_sums_match(classes: &WeightClasses, h: &Labeling, weights: impl IntoIterator<Item = i64>) -> Result<()> {
    for w in weights {
        if classes.label_sum(w, h) != classes.label_sum(-w, h) {
            return Err(Error::ClassSumMismatch(w));
        }
    }
    Ok(())
}

/// `G ⊕⁰ H` for a DDM graph `G` on `n` vertices and `H` labeled bijectively
/// with `n+1..=n+m`, whose weights are bounded by `n` and whose `±i` weight
/// classes carry equal label sums. The combined labeling is DDM.
pub fn weighted_sum_zero_shift_ddm(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph> {
    g.require_ddm("first operand")?;
    let n = g.order();
    require_standard(h, "second operand", n as i64 + 1)?;
    let classes = weight_classes(&h.graph, &h.labeling)?;
    let k = classes.max_abs_weight();
    if k > n as i64 {
        return Err(Error::MaxWeightExceedsN { max: k, order: n });
    }
    class_sums_match(&classes, &h.labeling, 1..=k)?;
    let graph = weighted_sum(g, h, 0)?;
    let out = LabeledGraph::new(
        graph,
        Labeling::identity(n).concat(&h.labeling),
        Provenance::node(
            "weighted_sum_zero_shift",
            format!("shift 0, max |weight| {k}, order {}", n + h.order()),
            vec![summary(g), summary(h)],
        ),
    )?;
    debug_assert!(out.is_ddm());
    Ok(out)
}

/// `ℓ` directed 4-cycles `a → b → c → d → a` where copy `i` is labeled
/// `n+i, n+ℓ+i, n+2ℓ+i, n+3ℓ+i`. Copy `i` occupies vertices `4(i−1)..4i`.
pub fn ornament_cycles(n: usize, ell: usize) -> LabeledGraph {
    let mut edges = Vec::with_capacity(4 * ell);
    let mut labels = Vec::with_capacity(4 * ell);
    let (n64, l64) = (n as i64, ell as i64);
    for i in 0..ell {
        let b = 4 * i;
        edges.extend([(b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b + 3, b)]);
        let i = i as i64 + 1;
        labels.extend([n64 + i, n64 + l64 + i, n64 + 2 * l64 + i, n64 + 3 * l64 + i]);
    }
    LabeledGraph {
        graph: OrientedGraph::new(4 * ell, edges).expect("disjoint 4-cycles"),
        labeling: Labeling::new(labels).expect("positive labels"),
        provenance: Provenance::leaf("ornament_cycles", format!("{ell} four-cycles labeled from {}", n + 1)),
    }
}

/// Attaches `ℓ` labeled 4-cycles to a DDM graph of order `n` through the
/// zero-shift weighted sum; every cross edge meets the vertex labeled `2ℓ`.
pub fn attach_ornaments(g: &LabeledGraph, ell: usize) -> Result<LabeledGraph> {
    g.require_ddm("base graph")?;
    let n = g.order();
    if ell < 1 || 2 * ell > n {
        return Err(Error::EllOutOfRange { ell, max: n / 2 });
    }
    let h = ornament_cycles(n, ell);
    let mut out = weighted_sum_zero_shift_ddm(g, &h)?;
    out.provenance = Provenance::node(
        "attach_ornaments",
        format!("{ell} four-cycles at the vertex labeled {}", 2 * ell),
        vec![out.provenance],
    );
    Ok(out)
}

/// `G ⊕ᵐ H` for a balanced DDM graph `G` on `n` vertices and `H` labeled
/// `1..=m` whose non-zero weights lie in `m+1..=m+n` in absolute value with
/// matching `±(i+m)` class sums. G's labels move up by `m`.
pub fn weighted_sum_shifted_ddm(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph> {
    g.require_ddm("first operand")?;
    let imbalance = g.imbalance();
    if imbalance != 0 {
        return Err(Error::NotBalanced(imbalance));
    }
    let n = g.order() as i64;
    let m = h.order() as i64;
    require_standard(h, "second operand", 1)?;
    let classes = weight_classes(&h.graph, &h.labeling)?;
    for &w in classes.0.keys() {
        if w != 0 && !(m + 1..=m + n).contains(&w.abs()) {
            return Err(Error::WeightOutOfWindow {
                weight: w,
                lo: m + 1,
                hi: m + n,
            });
        }
    }
    class_sums_match(&classes, &h.labeling, (1..=n).map(|i| i + m))?;
    let graph = weighted_sum(g, h, m)?;
    let out = LabeledGraph::new(
        graph,
        Labeling::identity(n as usize).shifted(m)?.concat(&h.labeling),
        Provenance::node(
            "weighted_sum_shifted",
            format!("shift {m}, order {}", n + m),
            vec![summary(g), summary(h)],
        ),
    )?;
    debug_assert!(out.is_ddm());
    Ok(out)
}
