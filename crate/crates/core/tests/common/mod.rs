#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ddmog::{Labeling, OrientedGraph};

/// Each unordered pair independently: absent, forward or backward.
pub fn random_oriented(rng: &mut ChaCha8Rng, order: usize, density: f64) -> OrientedGraph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.gen_bool(density) {
                edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    OrientedGraph::new(order, edges).unwrap()
}

/// Weight of every vertex straight from the edge list.
pub fn edge_weights(order: usize, edges: &[(usize, usize)], labels: &[i64]) -> Vec<i64> {
    let mut w = vec![0; order];
    for &(u, v) in edges {
        w[v] += labels[u];
        w[u] -= labels[v];
    }
    w
}

/// Every DDM labeling found by trying all n! bijections.
pub fn brute_force_labelings(g: &OrientedGraph) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut out: Vec<Vec<i64>> = (1..=n as i64)
        .permutations(n)
        .filter(|p| edge_weights(n, g.edges(), p).iter().all(|&x| x == 0))
        .collect();
    out.sort();
    out
}

/// Whether any orientation of the undirected edges has a DDM labeling.
pub fn brute_force_ddmo(order: usize, edges: &[(usize, usize)]) -> bool {
    let m = edges.len();
    (0u64..1 << m).any(|mask| {
        let oriented: Vec<_> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        let g = OrientedGraph::new(order, oriented).unwrap();
        !brute_force_labelings(&g).is_empty()
    })
}

pub fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn as_vecs(ls: &[Labeling]) -> Vec<Vec<i64>> {
    ls.iter().map(|l| l.as_slice().to_vec()).collect()
}
