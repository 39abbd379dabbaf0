//! Leibniz algebras, linear operators, representations and their
//! modified Rota-Baxter enrichments.
//!
//! Structure constants follow `[e_i, e_j] = sum_k c[i][j][k] e_k` with
//! 0-based indices, and the left Leibniz identity
//! `[a,[b,c]] = [[a,b],c] + [b,[a,c]]`. Operator matrices store the image
//! of `e_j` in column `j`.

use crate::error::{check_dim, Error, Result};
use crate::matrix::{axpy, zero_vec, Matrix};
use crate::scalar::Scalar;

/// A finite-dimensional algebra given by structure constants. Whether it
/// satisfies the Leibniz identity is checked on demand by
/// [`validate_leibniz`](crate::validate::validate_leibniz).
#[derive(Debug, Clone, PartialEq)]
pub struct LeibnizAlgebra<S> {
    dim: usize,
    constants: Vec<S>,
    basis_names: Option<Vec<String>>,
}

impl<S: Scalar> LeibnizAlgebra<S> {
    /// `constants` is the flattened `d x d x d` tensor, `k` fastest.
    pub fn new(dim: usize, constants: Vec<S>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Malformed("algebra dimension must be positive".into()));
        }
        check_dim("structure constant count", dim * dim * dim, constants.len())?;
        Ok(Self {
            dim,
            constants,
            basis_names: None,
        })
    }

    pub fn abelian(dim: usize) -> Result<Self> {
        Self::new(dim, vec![S::zero(); dim * dim * dim])
    }

    /// Builds an algebra from its nonzero brackets `(i, j, k, c[i][j][k])`.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, S)]) -> Result<Self> {
        let mut alg = Self::abelian(dim)?;
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Malformed(format!(
                    "bracket index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            alg.constants[(i * dim + j) * dim + k] = v.clone();
        }
        Ok(alg)
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        check_dim("basis name count", self.dim, names.len())?;
        self.basis_names = Some(names);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn constants(&self) -> &[S] {
        &self.constants
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &S {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[S] {
        let start = (i * self.dim + j) * self.dim;
        &self.constants[start..start + self.dim]
    }

    pub fn bracket(&self, a: &[S], b: &[S]) -> Vec<S> {
        let mut out = zero_vec(self.dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                axpy(&mut out, &ai.times(bj), self.bracket_basis(i, j));
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(|c| c.is_zero())
    }

    /// Relabels the basis: old `e_i` becomes new `e_{perm[i]}`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.dim)?;
        let d = self.dim;
        let mut out = Self::abelian(d)?;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    out.constants[(perm[i] * d + perm[j]) * d + perm[k]] =
                        self.constant(i, j, k).clone();
                }
            }
        }
        Ok(out)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::Malformed(format!("not a permutation of 0..{n}")));
    }
    Ok(())
}

/// A linear map between coordinate spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearOperator<S> {
    matrix: Matrix<S>,
}

impl<S: Scalar> LinearOperator<S> {
    pub fn new(matrix: Matrix<S>) -> Self {
        Self { matrix }
    }

    pub fn square(matrix: Matrix<S>, dim: usize) -> Result<Self> {
        check_dim("operator rows", dim, matrix.rows())?;
        check_dim("operator columns", dim, matrix.cols())?;
        Ok(Self { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Matrix::identity(n))
    }

    pub fn zero(codomain: usize, domain: usize) -> Self {
        Self::new(Matrix::zeros(codomain, domain))
    }

    pub fn scalar(n: usize, c: S) -> Self {
        Self::new(Matrix::scalar(n, c))
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.apply(v)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.matrix.mul(&other.matrix))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.matrix.neg())
    }
}

/// A Leibniz algebra with an operator `T` and weight `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct MrbStructure<S> {
    pub algebra: LeibnizAlgebra<S>,
    pub operator: LinearOperator<S>,
    pub weight: S,
}

impl<S: Scalar> MrbStructure<S> {
    pub fn new(algebra: LeibnizAlgebra<S>, operator: LinearOperator<S>, weight: S) -> Result<Self> {
        check_dim("operator rows", algebra.dim(), operator.codomain_dim())?;
        check_dim("operator columns", algebra.dim(), operator.domain_dim())?;
        Ok(Self {
            algebra,
            operator,
            weight,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn t(&self, a: &[S]) -> Vec<S> {
        self.operator.apply(a)
    }

    /// Relabels the basis together with the operator.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        Self::new(
            self.algebra.permuted(perm)?,
            LinearOperator::new(self.operator.matrix().conjugate_by_permutation(perm)),
            self.weight.clone(),
        )
    }
}

/// Left and right actions of an algebra of dimension `d` on a space of
/// dimension `m`. `left[i]` is the matrix of `l(e_i, -)` and `right[i]` the
/// matrix of `r(-, e_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<S> {
    dim: usize,
    left: Vec<Matrix<S>>,
    right: Vec<Matrix<S>>,
}

impl<S: Scalar> Representation<S> {
    pub fn new(dim: usize, left: Vec<Matrix<S>>, right: Vec<Matrix<S>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Malformed("module dimension must be positive".into()));
        }
        check_dim("left action count", left.len(), right.len())?;
        for (side, mats) in [("left", &left), ("right", &right)] {
            for (i, m) in mats.iter().enumerate() {
                if m.rows() != dim || m.cols() != dim {
                    return Err(Error::DimensionMismatch(format!(
                        "{side} action {i} is {}x{}, expected {dim}x{dim}",
                        m.rows(),
                        m.cols()
                    )));
                }
            }
        }
        Ok(Self { dim, left, right })
    }

    pub fn zero(algebra_dim: usize, dim: usize) -> Result<Self> {
        Self::new(
            dim,
            vec![Matrix::zeros(dim, dim); algebra_dim],
            vec![Matrix::zeros(dim, dim); algebra_dim],
        )
    }

    /// The algebra acting on itself by its bracket.
    pub fn adjoint(alg: &LeibnizAlgebra<S>) -> Self {
        let d = alg.dim();
        let left = (0..d)
            .map(|i| Matrix::from_fn(d, d, |k, j| alg.constant(i, j, k).clone()))
            .collect();
        let right = (0..d)
            .map(|i| Matrix::from_fn(d, d, |k, j| alg.constant(j, i, k).clone()))
            .collect();
        Self { dim: d, left, right }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the acting algebra.
    pub fn algebra_dim(&self) -> usize {
        self.left.len()
    }

    pub fn left(&self) -> &[Matrix<S>] {
        &self.left
    }

    pub fn right(&self) -> &[Matrix<S>] {
        &self.right
    }

    /// `l(a, v)`
    pub fn act_left(&self, a: &[S], v: &[S]) -> Vec<S> {
        combine_actions(&self.left, a, v, self.dim)
    }

    /// `r(v, a)`
    pub fn act_right(&self, v: &[S], a: &[S]) -> Vec<S> {
        combine_actions(&self.right, a, v, self.dim)
    }

    /// Matrix of `v ↦ l(a, v)`.
    pub fn left_matrix(&self, a: &[S]) -> Matrix<S> {
        linear_combination(&self.left, a, self.dim)
    }

    /// Matrix of `v ↦ r(v, a)`.
    pub fn right_matrix(&self, a: &[S]) -> Matrix<S> {
        linear_combination(&self.right, a, self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.left.iter().chain(&self.right).all(Matrix::is_zero)
    }

    pub(crate) fn check_algebra(&self, alg: &LeibnizAlgebra<S>) -> Result<()> {
        check_dim("representation algebra dimension", alg.dim(), self.algebra_dim())
    }
}

fn combine_actions<S: Scalar>(mats: &[Matrix<S>], a: &[S], v: &[S], dim: usize) -> Vec<S> {
    let mut out = zero_vec(dim);
    for (ai, m) in a.iter().zip(mats) {
        if ai.is_zero() {
            continue;
        }
        axpy(&mut out, ai, &m.apply(v));
    }
    out
}

fn linear_combination<S: Scalar>(mats: &[Matrix<S>], a: &[S], dim: usize) -> Matrix<S> {
    let mut out = Matrix::zeros(dim, dim);
    for (ai, m) in a.iter().zip(mats) {
        if !ai.is_zero() {
            out = out.add(&m.scale(ai));
        }
    }
    out
}

/// A representation together with an operator `T_V` on the module.
#[derive(Debug, Clone, PartialEq)]
pub struct MrbRepresentation<S> {
    pub rep: Representation<S>,
    pub operator: LinearOperator<S>,
}

impl<S: Scalar> MrbRepresentation<S> {
    pub fn new(rep: Representation<S>, operator: LinearOperator<S>) -> Result<Self> {
        check_dim("module operator rows", rep.dim(), operator.codomain_dim())?;
        check_dim("module operator columns", rep.dim(), operator.domain_dim())?;
        Ok(Self { rep, operator })
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn t(&self, v: &[S]) -> Vec<S> {
        self.operator.apply(v)
    }

    pub(crate) fn check_structure(&self, s: &MrbStructure<S>) -> Result<()> {
        self.rep.check_algebra(&s.algebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn brackets_follow_structure_constants() {
        // [e2,e1] = [e2,e2] = e1
        let alg = LeibnizAlgebra::from_entries(2, &[(1, 0, 0, q(1)), (1, 1, 0, q(1))]).unwrap();
        assert_eq!(alg.bracket(&[q(0), q(1)], &[q(1), q(0)]), vec![q(1), q(0)]);
        assert_eq!(alg.bracket(&[q(1), q(0)], &[q(0), q(1)]), vec![q(0), q(0)]);
        assert_eq!(alg.bracket(&[q(2), q(3)], &[q(1), q(1)]), vec![q(6), q(0)]);
    }

    #[test]
    fn adjoint_actions_reproduce_bracket() {
        let alg = LeibnizAlgebra::from_entries(2, &[(1, 0, 0, q(1)), (1, 1, 0, q(1))]).unwrap();
        let ad = Representation::adjoint(&alg);
        let a = vec![q(1), q(-2)];
        let b = vec![q(3), q(5)];
        assert_eq!(ad.act_left(&a, &b), alg.bracket(&a, &b));
        assert_eq!(ad.act_right(&a, &b), alg.bracket(&a, &b));
        assert_eq!(ad.left_matrix(&a).apply(&b), alg.bracket(&a, &b));
    }

    #[test]
    fn constructor_rejects_bad_shapes() {
        assert!(LeibnizAlgebra::<Rational>::new(2, vec![q(0); 7]).is_err());
        assert!(LeibnizAlgebra::<Rational>::new(0, vec![]).is_err());
        let alg = LeibnizAlgebra::<Rational>::abelian(2).unwrap();
        assert!(MrbStructure::new(alg, LinearOperator::identity(3), q(0)).is_err());
        assert!(Representation::<Rational>::new(2, vec![Matrix::zeros(2, 2)], vec![Matrix::zeros(3, 3)]).is_err());
    }

    #[test]
    fn permutation_relabels_brackets() {
        let alg = LeibnizAlgebra::from_entries(2, &[(1, 0, 0, q(1)), (1, 1, 0, q(1))]).unwrap();
        let swapped = alg.permuted(&[1, 0]).unwrap();
        assert_eq!(swapped.bracket_basis(0, 1), &[q(0), q(1)]);
        assert_eq!(swapped.bracket_basis(0, 0), &[q(0), q(1)]);
        assert!(alg.permuted(&[0, 0]).is_err());
    }
}
