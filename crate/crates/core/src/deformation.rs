//! Truncated one-parameter formal deformations `(μ_t, T_t)` mod `t^{N+1}`.

use crate::algebra::{LinearOperator, MrbRepresentation, MrbStructure};
use crate::cochain::{d_full, delta, Cochain, ComplexOptions, MrblaCochain};
use crate::cohomology::{classify, Classification};
use crate::error::{check_dim, Error, Result};
use crate::matrix::{add_assign, sub_assign, Matrix};
use crate::report::ViolationReport;
use crate::scalar::Scalar;
use crate::validate::{adjoint_rep, validate_leibniz, validate_mrb};

pub const DEFORMATION_LEIBNIZ: &str = "deformation-leibniz";
pub const DEFORMATION_MRB: &str = "deformation-mrb";

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedDeformation<S> {
    base: MrbStructure<S>,
    mu: Vec<Cochain<S>>,
    operators: Vec<LinearOperator<S>>,
}

impl<S: Scalar> TruncatedDeformation<S> {
    /// `mu[0]` and `operators[0]` must reproduce the base structure.
    pub fn new(base: MrbStructure<S>, mu: Vec<Cochain<S>>, operators: Vec<LinearOperator<S>>) -> Result<Self> {
        if mu.is_empty() || mu.len() != operators.len() {
            return Err(Error::Malformed(format!(
                "deformation needs matching nonempty series, got {} brackets and {} operators",
                mu.len(),
                operators.len()
            )));
        }
        let d = base.dim();
        for (i, m) in mu.iter().enumerate() {
            if m.degree() != 2 || m.dim_v() != d || m.dim_g() != d {
                return Err(Error::DimensionMismatch(format!("mu[{i}] is not a bilinear map on a {d}-dimensional space")));
            }
        }
        for (i, t) in operators.iter().enumerate() {
            if t.domain_dim() != d || t.codomain_dim() != d {
                return Err(Error::DimensionMismatch(format!("T[{i}] is not a {d}×{d} operator")));
            }
        }
        if mu[0] != Cochain::bracket(&base.algebra) || operators[0] != base.operator {
            return Err(Error::Malformed("order-0 terms differ from the base structure".into()));
        }
        Ok(Self { base, mu, operators })
    }

    /// `μ_t = μ`, `T_t = T` truncated at `order`.
    pub fn constant(base: MrbStructure<S>, order: usize) -> Self {
        let d = base.dim();
        let mut mu = vec![Cochain::bracket(&base.algebra)];
        let mut operators = vec![base.operator.clone()];
        for _ in 0..order {
            mu.push(Cochain::zero(2, d, d));
            operators.push(LinearOperator::zero(d, d));
        }
        Self { base, mu, operators }
    }

    pub fn base(&self) -> &MrbStructure<S> {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.mu.len() - 1
    }

    pub fn mu(&self) -> &[Cochain<S>] {
        &self.mu
    }

    pub fn operators(&self) -> &[LinearOperator<S>] {
        &self.operators
    }

    /// The coefficient pair of `t^k` as a degree-2 combined cochain.
    pub fn term(&self, k: usize) -> MrblaCochain<S> {
        MrblaCochain {
            la: self.mu[k].clone(),
            mrbo: Some(Cochain::from_operator(&self.operators[k])),
        }
    }

    /// Smallest positive order with a nonzero coefficient.
    pub fn leading_order(&self) -> Option<usize> {
        (1..=self.order()).find(|&k| !self.mu[k].is_zero() || !self.operators[k].matrix().is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.leading_order().is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedIsomorphism<S> {
    psi: Vec<LinearOperator<S>>,
}

impl<S: Scalar> TruncatedIsomorphism<S> {
    pub fn new(psi: Vec<LinearOperator<S>>) -> Result<Self> {
        let Some(first) = psi.first() else {
            return Err(Error::Malformed("isomorphism series is empty".into()));
        };
        let d = first.domain_dim();
        if *first != LinearOperator::identity(d) {
            return Err(Error::Malformed("psi[0] must be the identity".into()));
        }
        for (i, p) in psi.iter().enumerate() {
            if p.domain_dim() != d || p.codomain_dim() != d {
                return Err(Error::DimensionMismatch(format!("psi[{i}] is not a {d}×{d} operator")));
            }
        }
        Ok(Self { psi })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        let mut psi = vec![LinearOperator::identity(dim)];
        psi.extend((0..order).map(|_| LinearOperator::zero(dim, dim)));
        Self { psi }
    }

    /// `Id + Σ_k ψ_k t^k` with `terms[k-1] = ψ_k`, padded with zeros.
    pub fn from_terms(dim: usize, order: usize, terms: &[LinearOperator<S>]) -> Result<Self> {
        if terms.len() > order {
            return Err(Error::Malformed(format!("{} terms exceed order {order}", terms.len())));
        }
        let mut psi = Self::identity(dim, order).psi;
        for (k, t) in terms.iter().enumerate() {
            psi[k + 1] = t.clone();
        }
        Self::new(psi)
    }

    pub fn order(&self) -> usize {
        self.psi.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.psi[0].domain_dim()
    }

    pub fn psi(&self) -> &[LinearOperator<S>] {
        &self.psi
    }

    /// Series inverse: `ψ⁻¹_0 = Id`, `ψ⁻¹_n = -Σ_{k=1..n} ψ_k ψ⁻¹_{n-k}`.
    pub fn inverse(&self) -> Self {
        let d = self.dim();
        let mut inv: Vec<Matrix<S>> = vec![Matrix::identity(d)];
        for n in 1..=self.order() {
            let mut acc = Matrix::zeros(d, d);
            for k in 1..=n {
                acc = acc.sub(&self.psi[k].matrix().mul(&inv[n - k]));
            }
            inv.push(acc);
        }
        Self {
            psi: inv.into_iter().map(LinearOperator::new).collect(),
        }
    }
}

/// One report per order `0..=N`; order 0 is the base structure check.
pub fn verify_truncated<S: Scalar>(defm: &TruncatedDeformation<S>) -> Result<Vec<ViolationReport<S>>> {
    let s = &defm.base;
    let mut reports = Vec::with_capacity(defm.order() + 1);
    let mut base = validate_leibniz(&s.algebra);
    if base.ok() {
        base.merge(validate_mrb(s)?);
    }
    reports.push(base);
    for n in 1..=defm.order() {
        let mut report = ViolationReport::new();
        leibniz_at(defm, n, &mut report);
        mrb_at(defm, n, &mut report);
        reports.push(report);
    }
    Ok(reports)
}

fn leibniz_at<S: Scalar>(defm: &TruncatedDeformation<S>, n: usize, report: &mut ViolationReport<S>) {
    report.mark_checked(DEFORMATION_LEIBNIZ);
    let d = defm.base.dim();
    let mu = &defm.mu;
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let mut res = vec![S::zero(); d];
                for i in 0..=n {
                    let j = n - i;
                    add_assign(&mut res, &mu[i].eval_with_slot(&[a, 0], 1, &mu[j].value_at(&[b, c])));
                    sub_assign(&mut res, &mu[i].eval_with_slot(&[0, c], 0, &mu[j].value_at(&[a, b])));
                    sub_assign(&mut res, &mu[i].eval_with_slot(&[b, 0], 1, &mu[j].value_at(&[a, c])));
                }
                report.record(DEFORMATION_LEIBNIZ, &[a, b, c], res);
            }
        }
    }
}

fn mrb_at<S: Scalar>(defm: &TruncatedDeformation<S>, n: usize, report: &mut ViolationReport<S>) {
    report.mark_checked(DEFORMATION_MRB);
    let d = defm.base.dim();
    let t = |k: usize| defm.operators[k].matrix();
    let mut res = defm.mu[n].scale(&-defm.base.weight.clone());
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            res = res.add(&defm.mu[i].precompose(&[Some(t(j)), Some(t(k))]));
            let inner = defm.mu[j]
                .precompose(&[Some(t(k)), None])
                .add(&defm.mu[j].precompose(&[None, Some(t(k))]));
            res = res.sub(&inner.postcompose(t(i)));
        }
    }
    for a in 0..d {
        for b in 0..d {
            report.record(DEFORMATION_MRB, &[a, b], res.value_at(&[a, b]));
        }
    }
}

fn require_valid_through<S: Scalar>(defm: &TruncatedDeformation<S>, order: usize) -> Result<()> {
    for (n, report) in verify_truncated(defm)?.into_iter().enumerate().take(order + 1) {
        report.into_precondition(&format!("deformation at order {n}"))?;
    }
    Ok(())
}

/// `(μ₁, T₁)` as a degree-2 combined cochain, with its classification in
/// the adjoint complex.
pub fn infinitesimal<S: Scalar>(
    defm: &TruncatedDeformation<S>,
    opts: ComplexOptions,
) -> Result<(MrblaCochain<S>, Classification<S>)> {
    if defm.order() < 1 {
        return Err(Error::Unsupported("infinitesimal needs truncation order at least 1".into()));
    }
    require_valid_through(defm, 1)?;
    let r = adjoint_rep(&defm.base)?;
    let x = defm.term(1);
    let class = classify(&defm.base, &r, &x, opts)?;
    Ok((x, class))
}

/// `μ'_t = ψ_t⁻¹∘μ_t∘(ψ_t ⊗ ψ_t)`, `T'_t = ψ_t⁻¹∘T_t∘ψ_t` mod `t^{N+1}`.
pub fn push_forward<S: Scalar>(
    defm: &TruncatedDeformation<S>,
    iso: &TruncatedIsomorphism<S>,
) -> Result<TruncatedDeformation<S>> {
    let order = defm.order();
    if iso.order() != order {
        return Err(Error::Precondition {
            context: "push_forward".into(),
            detail: format!("deformation order {order} vs isomorphism order {}", iso.order()),
        });
    }
    check_dim("isomorphism dimension", defm.base.dim(), iso.dim())?;
    let d = defm.base.dim();
    let inv = iso.inverse();
    let p = |k: usize| iso.psi[k].matrix();
    let q = |k: usize| inv.psi[k].matrix();
    let mut mu = Vec::with_capacity(order + 1);
    let mut operators = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut m = Cochain::zero(2, d, d);
        let mut t = Matrix::zeros(d, d);
        for j in 0..=n {
            for k in 0..=n - j {
                let rest = n - j - k;
                for l in 0..=rest {
                    let i = rest - l;
                    m = m.add(&defm.mu[j].precompose(&[Some(p(k)), Some(p(l))]).postcompose(q(i)));
                }
                let i = n - j - k;
                t = t.add(&q(i).mul(defm.operators[j].matrix()).mul(p(k)));
            }
        }
        mu.push(m);
        operators.push(LinearOperator::new(t));
    }
    Ok(TruncatedDeformation {
        base: defm.base.clone(),
        mu,
        operators,
    })
}

/// Removes the order-`k` terms, `k` being the leading order, by pushing
/// forward along `Id - (α + δ⁰x) t^k`. The pair `d¹(α, x)` must equal the
/// order-`k` coefficients.
pub fn rigidity_step<S: Scalar>(
    defm: &TruncatedDeformation<S>,
    alpha: &Cochain<S>,
    x: &[S],
    opts: ComplexOptions,
) -> Result<TruncatedDeformation<S>> {
    let k = defm.leading_order().unwrap_or(1).min(defm.order().max(1));
    rigidity_step_at(defm, k, alpha, x, opts)
}

pub fn rigidity_step_at<S: Scalar>(
    defm: &TruncatedDeformation<S>,
    k: usize,
    alpha: &Cochain<S>,
    x: &[S],
    opts: ComplexOptions,
) -> Result<TruncatedDeformation<S>> {
    let d = defm.base.dim();
    if k == 0 || k > defm.order() {
        return Err(Error::Unsupported(format!("cannot eliminate order {k} of a deformation truncated at {}", defm.order())));
    }
    if alpha.degree() != 1 || alpha.dim_v() != d || alpha.dim_g() != d {
        return Err(Error::DimensionMismatch(format!("alpha must be a {d}×{d} degree-1 cochain")));
    }
    check_dim("x", d, x.len())?;
    let s = &defm.base;
    let r = adjoint_rep(s)?;
    let x0 = Cochain::from_vector(x.to_vec(), d);
    let witness = MrblaCochain::new(alpha.clone(), Some(x0.clone()))?;
    let residual = d_full(s, &r, &witness, opts)?.sub(&defm.term(k));
    if !residual.is_zero() {
        return Err(Error::WitnessMismatch(format!(
            "d1(alpha, x) differs from the order-{k} term; residual {}",
            fmt_vec(&residual.to_vector())
        )));
    }
    let psi1 = alpha.add(&delta(&s.algebra, &r.rep, &x0)?).to_operator()?;
    let mut psi = TruncatedIsomorphism::identity(d, defm.order()).psi;
    psi[k] = psi1.neg();
    let out = push_forward(defm, &TruncatedIsomorphism { psi })?;
    if !out.term(k).is_zero() {
        return Err(Error::WitnessMismatch(format!("order-{k} terms survived elimination")));
    }
    Ok(out)
}

fn fmt_vec<S: Scalar>(v: &[S]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionStep<S> {
    pub order: usize,
    pub classification: Classification<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reduction<S> {
    pub deformation: TruncatedDeformation<S>,
    pub steps: Vec<ReductionStep<S>>,
    /// True when every order was eliminated.
    pub constant: bool,
}

/// Repeatedly classifies the leading term and eliminates it while it is a
/// coboundary. Stops at the first order whose term is not a cocycle or
/// not a coboundary.
pub fn reduce_to_constant<S: Scalar>(defm: &TruncatedDeformation<S>, opts: ComplexOptions) -> Result<Reduction<S>> {
    require_valid_through(defm, defm.order())?;
    let r: MrbRepresentation<S> = adjoint_rep(&defm.base)?;
    let mut current = defm.clone();
    let mut steps = Vec::new();
    while let Some(k) = current.leading_order() {
        let classification = classify(&current.base, &r, &current.term(k), opts)?;
        let witness = classification.witness.clone().filter(|_| classification.is_cocycle);
        steps.push(ReductionStep { order: k, classification });
        let Some(w) = witness else {
            return Ok(Reduction { deformation: current, steps, constant: false });
        };
        let x = w.mrbo.as_ref().map(|c| c.coeffs().to_vec()).unwrap_or_default();
        current = rigidity_step_at(&current, k, &w.la, &x, opts)?;
    }
    Ok(Reduction { deformation: current, steps, constant: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cochain::phi;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn op(rows: Vec<Vec<i64>>) -> LinearOperator<Rational> {
        LinearOperator::new(Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect()).unwrap())
    }

    fn all_ok(reports: &[ViolationReport<Rational>]) -> bool {
        reports.iter().all(ViolationReport::ok)
    }

    #[test]
    fn constant_deformation_verifies_and_has_zero_infinitesimal() {
        let defm = TruncatedDeformation::constant(catalog::example_structure::<Rational>(), 2);
        assert!(all_ok(&verify_truncated(&defm).unwrap()));
        let (x, c) = infinitesimal(&defm, ComplexOptions::default()).unwrap();
        assert!(x.is_zero() && c.is_cocycle && c.is_coboundary);
    }

    #[test]
    fn infinitesimal_rejects_order_zero() {
        let defm = TruncatedDeformation::constant(catalog::example_structure::<Rational>(), 0);
        assert!(matches!(infinitesimal(&defm, ComplexOptions::default()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn trivial_deformation_infinitesimal_is_d1_of_psi1() {
        let s = catalog::example_structure::<Rational>();
        let psi1 = op(vec![vec![1, -1], vec![2, 3]]);
        let iso = TruncatedIsomorphism::from_terms(2, 2, &[psi1.clone(), op(vec![vec![0, 1], vec![1, 0]])]).unwrap();
        let defm = push_forward(&TruncatedDeformation::constant(s.clone(), 2), &iso).unwrap();
        assert!(all_ok(&verify_truncated(&defm).unwrap()));
        let (x, c) = infinitesimal(&defm, ComplexOptions::default()).unwrap();
        let r = adjoint_rep(&s).unwrap();
        let expected = d_full(&s, &r, &MrblaCochain::new(Cochain::from_operator(&psi1), Some(Cochain::zero(0, 2, 2))).unwrap(), ComplexOptions::default()).unwrap();
        assert_eq!(x, expected);
        assert!(c.is_cocycle && c.is_coboundary);
    }

    #[test]
    fn inconsistent_operator_term_is_flagged() {
        let s = catalog::example_structure::<Rational>();
        let r = adjoint_rep(&s).unwrap();
        let psi1 = Cochain::from_operator(&op(vec![vec![1, 0], vec![0, 0]]));
        assert!(!phi(&s, &r, &psi1, Default::default()).unwrap().is_zero());
        let mut mu = vec![Cochain::bracket(&s.algebra)];
        mu.push(delta(&s.algebra, &r.rep, &psi1).unwrap());
        let ops = vec![s.operator.clone(), LinearOperator::zero(2, 2)];
        let defm = TruncatedDeformation::new(s, mu, ops).unwrap();
        let reports = verify_truncated(&defm).unwrap();
        assert!(reports[1].violations.iter().any(|v| v.axiom_id == DEFORMATION_MRB));
    }

    #[test]
    fn push_forward_round_trips_through_inverse() {
        let s = catalog::example_structure::<Rational>();
        let iso = TruncatedIsomorphism::from_terms(2, 3, &[op(vec![vec![1, 2], vec![0, 1]]), op(vec![vec![0, 0], vec![3, 1]])]).unwrap();
        let a = push_forward(&TruncatedDeformation::constant(s, 3), &iso).unwrap();
        let b = push_forward(&a, &iso).unwrap();
        assert_eq!(push_forward(&b, &iso.inverse()).unwrap(), a);
        assert_eq!(push_forward(&a, &TruncatedIsomorphism::identity(2, 3)).unwrap(), a);
    }

    #[test]
    fn reduction_of_trivial_deformation_reaches_constant() {
        let s = catalog::example_structure::<Rational>();
        let iso = TruncatedIsomorphism::from_terms(2, 3, &[op(vec![vec![1, 2], vec![0, 1]]), op(vec![vec![0, 0], vec![3, 1]])]).unwrap();
        let defm = push_forward(&TruncatedDeformation::constant(s, 3), &iso).unwrap();
        let red = reduce_to_constant(&defm, ComplexOptions::default()).unwrap();
        assert!(red.constant);
        assert!(red.deformation.is_constant());
        assert!(!red.steps.is_empty());
    }

    #[test]
    fn rigidity_step_requires_matching_witness() {
        let s = catalog::example_structure::<Rational>();
        let psi1 = op(vec![vec![1, 0], vec![0, 2]]);
        let iso = TruncatedIsomorphism::from_terms(2, 1, std::slice::from_ref(&psi1)).unwrap();
        let defm = push_forward(&TruncatedDeformation::constant(s, 1), &iso).unwrap();
        let zero = vec![q(0), q(0)];
        let err = rigidity_step(&defm, &Cochain::zero(1, 2, 2), &zero, ComplexOptions::default()).unwrap_err();
        assert!(matches!(err, Error::WitnessMismatch(_)));
        let out = rigidity_step(&defm, &Cochain::from_operator(&psi1), &zero, ComplexOptions::default()).unwrap();
        assert!(out.is_constant());
    }
}
