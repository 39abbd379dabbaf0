//! Abelian extensions `0 → V → ĝ → g → 0` in the split model `ĝ = g ⊕ V`.
//!
//! Basis of the total space: `e_0..e_{d-1}` followed by `u_0..u_{m-1}`.

use crate::algebra::{LeibnizAlgebra, LinearOperator, MrbRepresentation, MrbStructure, Representation};
use crate::cochain::{Cochain, ComplexOptions, MrblaCochain};
use crate::cohomology::{classify, solve_first_order_only};
use crate::error::{check_dim, Error, Result};
use crate::matrix::{basis_vec, is_zero_vec, Matrix};
use crate::report::ViolationReport;
use crate::scalar::Scalar;
use crate::validate::{validate_leibniz, validate_morphism, validate_mrb, validate_mrb_representation};

#[derive(Debug, Clone, PartialEq)]
pub struct AbelianExtension<S> {
    pub base: MrbStructure<S>,
    pub fiber: MrbRepresentation<S>,
    pub total: MrbStructure<S>,
    pub incl: LinearOperator<S>,
    pub proj: LinearOperator<S>,
}

impl<S: Scalar> AbelianExtension<S> {
    /// Reassembles a split-model extension from its three structures and
    /// checks every invariant: the total structure is valid, `V` is an
    /// abelian ideal, the projection is a morphism and `V` carries exactly
    /// the given fiber actions.
    pub fn from_parts(base: MrbStructure<S>, fiber: MrbRepresentation<S>, total: MrbStructure<S>) -> Result<Self> {
        fiber.check_structure(&base)?;
        let (d, m) = (base.dim(), fiber.dim());
        check_dim("total dimension", d + m, total.dim())?;
        let report = extension_report(&total)?;
        if !report.ok() {
            return Err(Error::CocycleCondition(report.summary()));
        }
        let ext = Self {
            incl: LinearOperator::new(Matrix::from_fn(d + m, m, |i, j| if i == d + j { S::one() } else { S::zero() })),
            proj: LinearOperator::new(Matrix::from_fn(d, d + m, |i, j| if i == j { S::one() } else { S::zero() })),
            base,
            fiber,
            total,
        };
        validate_morphism(&ext.proj, &ext.total, &ext.base)?.into_precondition("projection is not a morphism")?;
        for u in d..d + m {
            for v in d..d + m {
                if !is_zero_vec(ext.total.algebra.bracket_basis(u, v)) {
                    return Err(Error::Precondition {
                        context: "extension".into(),
                        detail: format!("fiber bracket [u{}, u{}] is nonzero", u - d, v - d),
                    });
                }
            }
        }
        if induced_rep_from_extension(&ext, &canonical_section(&ext))? != ext.fiber {
            return Err(Error::Precondition {
                context: "extension".into(),
                detail: "fiber actions differ from the total bracket".into(),
            });
        }
        Ok(ext)
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber.dim()
    }

    /// The `V`-coordinates of a total-space vector.
    fn fiber_part(&self, x: &[S]) -> Vec<S> {
        x[self.base_dim()..].to_vec()
    }
}

/// `[(a,u),(b,v)] = ([a,b], ψ(a,b) + l(a,v) + r(u,b))` and
/// `T̂(a,u) = (Ta, χ(a) + T_V u)`, without any validation.
pub fn split_model<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    psi: &Cochain<S>,
    chi: &Cochain<S>,
) -> Result<MrbStructure<S>> {
    r.check_structure(s)?;
    let (d, m) = (s.dim(), r.dim());
    check_shape("psi", psi, 2, m, d)?;
    check_shape("chi", chi, 1, m, d)?;
    let n = d + m;
    let mut c = vec![S::zero(); n * n * n];
    let mut put = |i: usize, j: usize, k: usize, v: &S| c[(i * n + j) * n + k] = v.clone();
    for i in 0..d {
        for j in 0..d {
            for (k, v) in s.algebra.bracket_basis(i, j).iter().enumerate() {
                put(i, j, k, v);
            }
            for (k, v) in psi.value_at(&[i, j]).iter().enumerate() {
                put(i, j, d + k, v);
            }
        }
        for v in 0..m {
            for k in 0..m {
                put(i, d + v, d + k, &r.rep.left()[i][(k, v)]);
                put(d + v, i, d + k, &r.rep.right()[i][(k, v)]);
            }
        }
    }
    let algebra = LeibnizAlgebra::new(n, c)?;
    let t = Matrix::from_fn(n, n, |row, col| match (row < d, col < d) {
        (true, true) => s.operator.matrix()[(row, col)].clone(),
        (false, true) => chi.value_at(&[col])[row - d].clone(),
        (false, false) => r.operator.matrix()[(row - d, col - d)].clone(),
        (true, false) => S::zero(),
    });
    MrbStructure::new(algebra, LinearOperator::new(t), s.weight.clone())
}

fn check_shape<S: Scalar>(what: &str, f: &Cochain<S>, degree: usize, m: usize, d: usize) -> Result<()> {
    if f.degree() != degree || f.dim_v() != m || f.dim_g() != d {
        return Err(Error::DimensionMismatch(format!(
            "{what} must be a degree-{degree} cochain from a {d}-dimensional algebra into a {m}-dimensional module"
        )));
    }
    Ok(())
}

/// Axiom report of the split-model total structure.
pub fn extension_report<S: Scalar>(total: &MrbStructure<S>) -> Result<ViolationReport<S>> {
    let mut report = validate_leibniz(&total.algebra);
    if report.ok() {
        report.merge(validate_mrb(total)?);
    }
    Ok(report)
}

/// Builds and validates the split-model extension; fails with the residuals
/// when `(ψ, χ)` is not a 2-cocycle.
pub fn build_extension<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    psi: &Cochain<S>,
    chi: &Cochain<S>,
) -> Result<AbelianExtension<S>> {
    validate_mrb_representation(s, r)?.into_precondition("fiber is not a representation")?;
    let total = split_model(s, r, psi, chi)?;
    let report = extension_report(&total)?;
    if !report.ok() {
        return Err(Error::CocycleCondition(report.summary()));
    }
    AbelianExtension::from_parts(s.clone(), r.clone(), total)
}

/// A linear right inverse of the projection.
#[derive(Debug, Clone, PartialEq)]
pub struct Section<S> {
    map: LinearOperator<S>,
}

impl<S: Scalar> Section<S> {
    pub fn new(ext: &AbelianExtension<S>, map: LinearOperator<S>) -> Result<Self> {
        check_dim("section domain", ext.base_dim(), map.domain_dim())?;
        check_dim("section codomain", ext.total.dim(), map.codomain_dim())?;
        if ext.proj.compose(&map) != LinearOperator::identity(ext.base_dim()) {
            return Err(Error::Precondition {
                context: "section".into(),
                detail: "proj∘s is not the identity".into(),
            });
        }
        Ok(Self { map })
    }

    pub fn map(&self) -> &LinearOperator<S> {
        &self.map
    }

    /// `s + incl∘β` for a linear map `β: g → V`.
    pub fn shifted(&self, ext: &AbelianExtension<S>, beta: &Cochain<S>) -> Result<Self> {
        check_shape("beta", beta, 1, ext.fiber_dim(), ext.base_dim())?;
        let shift = ext.incl.compose(&beta.to_operator()?);
        Self::new(ext, LinearOperator::new(self.map.matrix().add(shift.matrix())))
    }

    fn apply(&self, a: &[S]) -> Vec<S> {
        self.map.apply(a)
    }
}

/// `s(a) = (a, 0)`.
pub fn canonical_section<S: Scalar>(ext: &AbelianExtension<S>) -> Section<S> {
    Section {
        map: LinearOperator::new(ext.proj.matrix().transpose()),
    }
}

/// `ψ(a,b) = [s a, s b] - s[a,b]` and `χ(a) = T̂ s a - s T a`, in `V`.
pub fn extract_cocycle<S: Scalar>(ext: &AbelianExtension<S>, sec: &Section<S>) -> Result<(Cochain<S>, Cochain<S>)> {
    let sec = Section::new(ext, sec.map.clone())?;
    let (d, m) = (ext.base_dim(), ext.fiber_dim());
    let images: Vec<Vec<S>> = (0..d).map(|i| sec.apply(&basis_vec(d, i))).collect();
    let mut psi = Cochain::zero(2, m, d);
    let mut chi = Cochain::zero(1, m, d);
    let in_fiber = |x: Vec<S>, what: &str| -> Result<Vec<S>> {
        if !is_zero_vec(&ext.proj.apply(&x)) {
            return Err(Error::Precondition {
                context: "extract_cocycle".into(),
                detail: format!("{what} does not lie in V; the projection is not a morphism"),
            });
        }
        Ok(ext.fiber_part(&x))
    };
    let mut psi_coeffs = psi.coeffs().to_vec();
    let mut chi_coeffs = chi.coeffs().to_vec();
    for i in 0..d {
        for j in 0..d {
            let mut x = ext.total.algebra.bracket(&images[i], &images[j]);
            crate::matrix::sub_assign(&mut x, &sec.apply(ext.base.algebra.bracket_basis(i, j)));
            for (v, val) in in_fiber(x, "psi")?.into_iter().enumerate() {
                psi_coeffs[v * d * d + i * d + j] = val;
            }
        }
        let mut x = ext.total.t(&images[i]);
        crate::matrix::sub_assign(&mut x, &sec.apply(&ext.base.t(&basis_vec(d, i))));
        for (v, val) in in_fiber(x, "chi")?.into_iter().enumerate() {
            chi_coeffs[v * d + i] = val;
        }
    }
    psi = Cochain::from_coeffs(2, m, d, psi_coeffs)?;
    chi = Cochain::from_coeffs(1, m, d, chi_coeffs)?;
    Ok((psi, chi))
}

/// `l(a,u) = [s a, u]`, `r(u,a) = [u, s a]`, `T_V u = T̂ u`, restricted to `V`.
pub fn induced_rep_from_extension<S: Scalar>(
    ext: &AbelianExtension<S>,
    sec: &Section<S>,
) -> Result<MrbRepresentation<S>> {
    let sec = Section::new(ext, sec.map.clone())?;
    let (d, m) = (ext.base_dim(), ext.fiber_dim());
    let fiber_vecs: Vec<Vec<S>> = (0..m).map(|v| ext.incl.apply(&basis_vec(m, v))).collect();
    let mut left = Vec::with_capacity(d);
    let mut right = Vec::with_capacity(d);
    for i in 0..d {
        let si = sec.apply(&basis_vec(d, i));
        let cols_l: Vec<Vec<S>> = fiber_vecs.iter().map(|u| ext.fiber_part(&ext.total.algebra.bracket(&si, u))).collect();
        let cols_r: Vec<Vec<S>> = fiber_vecs.iter().map(|u| ext.fiber_part(&ext.total.algebra.bracket(u, &si))).collect();
        left.push(Matrix::from_columns(m, &cols_l)?);
        right.push(Matrix::from_columns(m, &cols_r)?);
    }
    let cols_t: Vec<Vec<S>> = fiber_vecs.iter().map(|u| ext.fiber_part(&ext.total.t(u))).collect();
    MrbRepresentation::new(
        Representation::new(m, left, right)?,
        LinearOperator::new(Matrix::from_columns(m, &cols_t)?),
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassComparison<S> {
    pub same_class: bool,
    /// `w` with `d¹w` equal to the second extracted pair minus the first.
    pub witness: Option<MrblaCochain<S>>,
    /// `ξ(a,u) = (a, u - β(a))`, an isomorphism from the first extension to
    /// the second, when the witness has the form `(β, 0)`.
    pub isomorphism: Option<LinearOperator<S>>,
}

/// Compares the cocycles extracted with canonical sections modulo `im d¹`.
pub fn same_class<S: Scalar>(
    ext1: &AbelianExtension<S>,
    ext2: &AbelianExtension<S>,
    opts: ComplexOptions,
) -> Result<ClassComparison<S>> {
    if ext1.base != ext2.base || ext1.fiber != ext2.fiber {
        return Err(Error::Precondition {
            context: "same_class".into(),
            detail: "extensions have different base or fiber".into(),
        });
    }
    let pair = |ext: &AbelianExtension<S>| -> Result<MrblaCochain<S>> {
        let (psi, chi) = extract_cocycle(ext, &canonical_section(ext))?;
        MrblaCochain::new(psi, Some(chi))
    };
    let diff = pair(ext2)?.sub(&pair(ext1)?);
    let (s, r) = (&ext1.base, &ext1.fiber);
    if let Some(beta) = solve_first_order_only(s, r, &diff, opts)? {
        let iso = fiber_shift(ext1, &beta.neg())?;
        let iso = validate_morphism(&iso, &ext1.total, &ext2.total)?.ok().then_some(iso);
        let witness = MrblaCochain::new(beta, Some(Cochain::zero(0, r.dim(), s.dim())))?;
        return Ok(ClassComparison {
            same_class: true,
            witness: Some(witness),
            isomorphism: iso,
        });
    }
    let class = classify(s, r, &diff, opts)?;
    Ok(ClassComparison {
        same_class: class.is_coboundary,
        witness: class.witness,
        isomorphism: None,
    })
}

/// `(a, u) ↦ (a, u + γ(a))` on the total space.
fn fiber_shift<S: Scalar>(ext: &AbelianExtension<S>, gamma: &Cochain<S>) -> Result<LinearOperator<S>> {
    let d = ext.base_dim();
    let g = gamma.to_operator()?;
    let id = Matrix::<S>::identity(ext.total.dim());
    Ok(LinearOperator::new(Matrix::from_fn(id.rows(), id.cols(), |i, j| {
        if i >= d && j < d {
            g.matrix()[(i - d, j)].clone()
        } else {
            id[(i, j)].clone()
        }
    })))
}
