//! Cohomology dimensions, cocycle/coboundary membership and witnesses.

use crate::algebra::{MrbRepresentation, MrbStructure};
use crate::cochain::{assemble_matrix, chain_map_defect, Complex, ComplexOptions, DegreeZero, MrblaCochain};
use crate::error::{Error, Result};
use crate::linalg::{rank, reduce, solve};
use crate::matrix::{is_zero_vec, Matrix};
use crate::scalar::Scalar;

/// Dimensions of one cohomology group, with representative cocycles.
#[derive(Debug, Clone, PartialEq)]
pub struct CohomologyReport<S> {
    pub complex: Complex,
    pub degree: usize,
    pub options: ComplexOptions,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub betti: usize,
    /// Cocycles whose classes form a basis of the cohomology group.
    pub representatives: Vec<Vec<S>>,
}

fn ill_defined<S: Scalar>(
    complex: Complex,
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    degree: usize,
    opts: ComplexOptions,
) -> Error {
    let prev = degree - 1;
    let why = match complex {
        Complex::Mrbla if prev == 0 => format!(
            "d1∘d0 ≠ 0 under the `{}` degree-zero convention (∂0 does not vanish)",
            opts.degree_zero
        ),
        Complex::Mrbla => match chain_map_defect(s, r, prev, opts.variant) {
            Ok(defect) if !defect.is_zero() => format!(
                "phi variant `{}` is not a chain map in degree {prev} (weight {})",
                opts.variant, s.weight
            ),
            _ => format!("d{degree}∘d{prev} ≠ 0"),
        },
        _ => format!("{complex} differential squares to nonzero in degree {prev}"),
    };
    Error::IllDefinedComplex(why)
}

/// Reports for degrees `0..=max_degree`, assembling each differential once.
/// An entry is an error when its quotient is undefined.
pub fn cohomology_table<S: Scalar>(
    complex: Complex,
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    max_degree: usize,
    opts: ComplexOptions,
) -> Result<Vec<Result<CohomologyReport<S>>>> {
    let mut matrices = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        matrices.push(assemble_matrix(complex, s, r, n, opts)?);
    }
    Ok((0..=max_degree)
        .map(|n| report_from(complex, s, r, n, opts, &matrices[n], n.checked_sub(1).map(|p| &matrices[p])))
        .collect())
}

fn report_from<S: Scalar>(
    complex: Complex,
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    degree: usize,
    opts: ComplexOptions,
    current: &Matrix<S>,
    previous: Option<&Matrix<S>>,
) -> Result<CohomologyReport<S>> {
    if let Some(prev) = previous {
        if !current.mul(prev).is_zero() {
            return Err(ill_defined(complex, s, r, degree, opts));
        }
    }
    let z = reduce(current);
    let b_rank = previous.map_or(0, rank);
    let mut spanning = previous.cloned().unwrap_or_else(|| Matrix::zeros(current.cols(), 0));
    let mut span_rank = b_rank;
    let mut representatives = Vec::new();
    for v in &z.nullspace_basis {
        let col = Matrix::from_fn(v.len(), 1, |i, _| v[i].clone());
        let extended = spanning.hstack(&col);
        let extended_rank = rank(&extended);
        if extended_rank > span_rank {
            spanning = extended;
            span_rank = extended_rank;
            representatives.push(v.clone());
        }
    }
    Ok(CohomologyReport {
        complex,
        degree,
        options: opts,
        dim_cochains: current.cols(),
        dim_cocycles: z.nullity,
        dim_coboundaries: b_rank,
        betti: z.nullity - b_rank,
        representatives,
    })
}

/// Dimension of the degree-`n` cohomology of `complex`.
pub fn betti<S: Scalar>(
    complex: Complex,
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    degree: usize,
    opts: ComplexOptions,
) -> Result<CohomologyReport<S>> {
    let current = assemble_matrix(complex, s, r, degree, opts)?;
    let previous = match degree {
        0 => None,
        n => Some(assemble_matrix(complex, s, r, n - 1, opts)?),
    };
    report_from(complex, s, r, degree, opts, &current, previous.as_ref())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification<S> {
    pub is_cocycle: bool,
    pub is_coboundary: bool,
    /// A preimage under the previous differential, when one exists.
    pub witness: Option<MrblaCochain<S>>,
}

/// Decides whether `x ∈ C^n_mRBLA` is a cocycle and a coboundary.
pub fn classify<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    x: &MrblaCochain<S>,
    opts: ComplexOptions,
) -> Result<Classification<S>> {
    crate::error::check_dim("cochain module dimension", r.dim(), x.dim_v())?;
    crate::error::check_dim("cochain algebra dimension", s.dim(), x.dim_g())?;
    let n = x.degree();
    let v = x.to_vector();
    let current = assemble_matrix(Complex::Mrbla, s, r, n, opts)?;
    let is_cocycle = is_zero_vec(&current.apply(&v));
    if n == 0 {
        return Ok(Classification {
            is_cocycle,
            is_coboundary: is_zero_vec(&v),
            witness: None,
        });
    }
    let previous = assemble_matrix(Complex::Mrbla, s, r, n - 1, opts)?;
    if !current.mul(&previous).is_zero() {
        return Err(ill_defined(Complex::Mrbla, s, r, n, opts));
    }
    let witness = solve(&previous, &v)
        .particular_solution
        .map(|y| MrblaCochain::from_vector(n - 1, x.dim_v(), x.dim_g(), y))
        .transpose()?;
    Ok(Classification {
        is_cocycle,
        is_coboundary: witness.is_some(),
        witness,
    })
}

/// Solves `d¹(β, 0) = x` for a degree-2 pair, ignoring the degree-0 part.
pub(crate) fn solve_first_order_only<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    x: &MrblaCochain<S>,
    opts: ComplexOptions,
) -> Result<Option<crate::cochain::Cochain<S>>> {
    let d1 = assemble_matrix(Complex::Mrbla, s, r, 1, opts)?;
    let la_cols = r.dim() * s.dim();
    let restricted = Matrix::from_fn(d1.rows(), la_cols, |i, j| d1[(i, j)].clone());
    solve(&restricted, &x.to_vector())
        .particular_solution
        .map(|b| crate::cochain::Cochain::from_coeffs(1, r.dim(), s.dim(), b))
        .transpose()
}

/// All three degree-zero conventions side by side for the combined complex.
pub fn degree_zero_comparison<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    degree: usize,
    opts: ComplexOptions,
) -> Vec<(DegreeZero, Result<CohomologyReport<S>>)> {
    DegreeZero::ALL
        .iter()
        .map(|&dz| {
            let o = ComplexOptions { degree_zero: dz, ..opts };
            (dz, betti(Complex::Mrbla, s, r, degree, o))
        })
        .collect()
}
