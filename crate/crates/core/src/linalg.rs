//! Exact Gaussian elimination.
//!
//! Pivots are chosen as the first nonzero entry scanning rows top-down
//! within each column, columns left to right, so identical inputs always
//! produce identical echelon forms.

use crate::matrix::{zero_vec, Matrix};
use crate::scalar::Scalar;

/// Reduced row echelon form with its pivot columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon<S> {
    pub rref: Matrix<S>,
    pub pivots: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearSolveResult<S> {
    pub rank: usize,
    pub nullity: usize,
    pub nullspace_basis: Vec<Vec<S>>,
    pub particular_solution: Option<Vec<S>>,
}

pub fn rref<S: Scalar>(m: &Matrix<S>) -> Echelon<S> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = S::one() / a[(r, c)].clone();
        for j in c..cols {
            a[(r, j)] *= &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let delta = factor.times(&a[(r, j)]);
                a[(i, j)] -= &delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rref: a, pivots }
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    rref(m).pivots.len()
}

fn nullspace_from<S: Scalar>(e: &Echelon<S>, cols: usize) -> Vec<Vec<S>> {
    let mut is_pivot = vec![false; cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = zero_vec(cols);
            v[free] = S::one();
            for (row, &p) in e.pivots.iter().enumerate() {
                v[p] = -e.rref[(row, free)].clone();
            }
            v
        })
        .collect()
}

/// Rank, nullity and a nullspace basis (one vector per free column, with a
/// 1 in that column).
pub fn reduce<S: Scalar>(m: &Matrix<S>) -> LinearSolveResult<S> {
    let e = rref(m);
    let nullspace_basis = nullspace_from(&e, m.cols());
    LinearSolveResult {
        rank: e.pivots.len(),
        nullity: m.cols() - e.pivots.len(),
        nullspace_basis,
        particular_solution: None,
    }
}

/// As [`reduce`], plus a solution of `m x = rhs` with free variables set to
/// zero when one exists.
pub fn solve<S: Scalar>(m: &Matrix<S>, rhs: &[S]) -> LinearSolveResult<S> {
    assert_eq!(rhs.len(), m.rows(), "right-hand side length");
    let augmented = m.hstack(&Matrix::from_fn(m.rows(), 1, |i, _| rhs[i].clone()));
    let e = rref(&augmented);
    let cols = m.cols();
    let consistent = e.pivots.last().is_none_or(|&p| p < cols);
    let pivots: Vec<usize> = e.pivots.iter().copied().filter(|&p| p < cols).collect();
    let particular_solution = consistent.then(|| {
        let mut x = zero_vec(cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = e.rref[(row, cols)].clone();
        }
        x
    });
    let reduced = Echelon {
        rref: e.rref,
        pivots,
    };
    let nullspace_basis = nullspace_from(&reduced, cols);
    LinearSolveResult {
        rank: reduced.pivots.len(),
        nullity: cols - reduced.pivots.len(),
        nullspace_basis,
        particular_solution,
    }
}
