//! Exact null space of the skew-adjacency matrix.
//!
//! A DDM labeling is a vector of distinct positive integers in `ker S`.
//! Row reduction is fraction-free over `BigInt`; the basis is returned over
//! `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::skew_matrix;
use crate::graph::OrientedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelInfo {
    pub dimension: usize,
    /// One vector per free column; the free coordinate is 1 and the other
    /// free coordinates are 0.
    pub basis: Vec<Vec<BigRational>>,
    /// Columns that carry a 1 in their own basis vector, in order.
    pub free_columns: Vec<usize>,
    /// False when no vector of distinct positive entries can lie in the
    /// kernel.
    pub feasible: bool,
}

impl KernelInfo {
    /// Expresses `x` in the basis. Since each free coordinate appears in a
    /// single basis vector, the coefficients are the free coordinates of `x`;
    /// `x` is in the kernel iff the recombination gives `x` back.
    pub fn contains(&self, x: &[i64]) -> bool {
        let n = x.len();
        let mut acc = vec![BigRational::zero(); n];
        for (b, &col) in self.basis.iter().zip(&self.free_columns) {
            let c = BigRational::from_integer(BigInt::from(x[col]));
            for (a, bi) in acc.iter_mut().zip(b) {
                *a += &c * bi;
            }
        }
        acc.iter()
            .zip(x)
            .all(|(a, &xi)| *a == BigRational::from_integer(BigInt::from(xi)))
    }
}

/// Row-reduces `m` in place to reduced echelon form (pivots not normalised
/// to 1) and returns the pivot column of each non-zero row.
fn reduce(m: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()))
        else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        let pv = pivot_row[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            if row[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[c]);
            let (mul_row, mul_piv) = (&pv / &g, &row[c] / &g);
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &mul_row - y * &mul_piv;
            }
            normalise(row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn normalise(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Null space of the skew-adjacency matrix of `g`, with a feasibility
/// verdict for DDM labelings.
pub fn kernel_feasibility(g: &OrientedGraph) -> KernelInfo {
    let s = skew_matrix(g);
    let n = s.order();
    let mut m: Vec<Vec<BigInt>> = s
        .rows()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let pivots = reduce(&mut m, n);
    let free_columns: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Vec<BigRational>> = free_columns
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); n];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -BigRational::new(m[r][f].clone(), m[r][p].clone());
            }
            v
        })
        .collect();

    let dimension = basis.len();
    let forced_zero = (0..n).any(|i| basis.iter().all(|b| b[i].is_zero()));
    let forced_equal = (0..n).any(|i| (i + 1..n).any(|j| basis.iter().all(|b| b[i] == b[j])));
    let feasible = dimension > 0 && !forced_zero && !forced_equal;
    KernelInfo {
        dimension,
        basis,
        free_columns,
        feasible,
    }
}
