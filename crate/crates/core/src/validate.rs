//! Axiom checkers and the conversions between operator flavours.
//!
//! Every identity is multilinear, so each checker evaluates it on basis
//! tuples only and reports every nonzero residual.

use crate::algebra::{LeibnizAlgebra, LinearOperator, MrbRepresentation, MrbStructure, Representation};
use crate::error::{check_dim, Result};
use crate::matrix::{basis_vec, sub_assign, Matrix};
use crate::report::ViolationReport;
use crate::scalar::Scalar;

pub const LEIBNIZ: &str = "leibniz";
pub const LLV: &str = "LLV";
pub const LRV: &str = "LRV";
pub const RVV: &str = "RVV";
pub const MRB: &str = "mrb";
pub const RB: &str = "rb";
pub const MRB_LEFT: &str = "mrb-left";
pub const MRB_RIGHT: &str = "mrb-right";

/// `[a,[b,c]] - [[a,b],c] - [b,[a,c]]` on all basis triples.
pub fn validate_leibniz<S: Scalar>(alg: &LeibnizAlgebra<S>) -> ViolationReport<S> {
    let d = alg.dim();
    let mut report = ViolationReport::new();
    report.mark_checked(LEIBNIZ);
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let ea = basis_vec(d, a);
                let eb = basis_vec(d, b);
                let mut res = alg.bracket(&ea, alg.bracket_basis(b, c));
                sub_assign(&mut res, &alg.bracket(alg.bracket_basis(a, b), &basis_vec(d, c)));
                sub_assign(&mut res, &alg.bracket(&eb, alg.bracket_basis(a, c)));
                report.record(LEIBNIZ, &[a, b, c], res);
            }
        }
    }
    report
}

/// The three compatibility conditions between the bracket and the actions,
/// on all `(a, b, v)` basis tuples.
pub fn validate_representation<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
) -> Result<ViolationReport<S>> {
    rep.check_algebra(alg)?;
    let d = alg.dim();
    let m = rep.dim();
    let mut report = ViolationReport::new();
    for id in [LLV, LRV, RVV] {
        report.mark_checked(id);
    }
    for a in 0..d {
        let ea = basis_vec(d, a);
        for b in 0..d {
            let eb = basis_vec(d, b);
            let ab = alg.bracket_basis(a, b);
            for v in 0..m {
                let ev = basis_vec(m, v);

                let mut res = rep.act_left(&ea, &rep.act_left(&eb, &ev));
                sub_assign(&mut res, &rep.act_left(ab, &ev));
                sub_assign(&mut res, &rep.act_left(&eb, &rep.act_left(&ea, &ev)));
                report.record(LLV, &[a, b, v], res);

                let mut res = rep.act_left(&ea, &rep.act_right(&ev, &eb));
                sub_assign(&mut res, &rep.act_right(&rep.act_left(&ea, &ev), &eb));
                sub_assign(&mut res, &rep.act_right(&ev, ab));
                report.record(LRV, &[a, b, v], res);

                let mut res = rep.act_right(&ev, ab);
                sub_assign(&mut res, &rep.act_right(&rep.act_right(&ev, &ea), &eb));
                sub_assign(&mut res, &rep.act_left(&ea, &rep.act_right(&ev, &eb)));
                report.record(RVV, &[a, b, v], res);
            }
        }
    }
    Ok(report)
}

fn operator_identity<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    op: &LinearOperator<S>,
    weight: &S,
    rota_baxter: bool,
) -> Result<ViolationReport<S>> {
    let d = alg.dim();
    check_dim("operator rows", d, op.codomain_dim())?;
    check_dim("operator columns", d, op.domain_dim())?;
    validate_leibniz(alg).into_precondition("underlying algebra is not Leibniz")?;
    let id = if rota_baxter { RB } else { MRB };
    let mut report = ViolationReport::new();
    report.mark_checked(id);
    for i in 0..d {
        let ei = basis_vec(d, i);
        let ti = op.apply(&ei);
        for j in 0..d {
            let ej = basis_vec(d, j);
            let tj = op.apply(&ej);
            let mut inner = alg.bracket(&ei, &tj);
            crate::matrix::add_assign(&mut inner, &alg.bracket(&ti, &ej));
            let mut res = alg.bracket(&ti, &tj);
            sub_assign(&mut res, &op.apply(&inner));
            let bare = alg.bracket_basis(i, j);
            let tail = if rota_baxter { op.apply(bare) } else { bare.to_vec() };
            sub_assign(&mut res, &crate::matrix::scale_vec(&tail, weight));
            report.record(id, &[i, j], res);
        }
    }
    Ok(report)
}

/// `[Ta,Tb] - T([a,Tb] + [Ta,b]) - λ[a,b]` on all basis pairs.
pub fn validate_mrb<S: Scalar>(s: &MrbStructure<S>) -> Result<ViolationReport<S>> {
    operator_identity(&s.algebra, &s.operator, &s.weight, false)
}

/// `[Ta,Tb] - T([a,Tb] + [Ta,b]) - λT[a,b]` on all basis pairs.
pub fn validate_rb<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    op: &LinearOperator<S>,
    weight: &S,
) -> Result<ViolationReport<S>> {
    operator_identity(alg, op, weight, true)
}

/// Turns a Rota-Baxter operator `T` of weight `λ` into the modified
/// operator `S = -λ Id - 2T`, which has weight `-λ²`.
pub fn rb_to_mrb<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    op: &LinearOperator<S>,
    weight: &S,
) -> Result<MrbStructure<S>> {
    validate_rb(alg, op, weight)?.into_precondition("operator is not Rota-Baxter")?;
    let d = alg.dim();
    let modified = Matrix::scalar(d, -weight.clone()).sub(&op.matrix().scale(&S::from_int(2)));
    MrbStructure::new(
        alg.clone(),
        LinearOperator::new(modified),
        -weight.times(weight),
    )
}

/// Both operator compatibility conditions on all `(a, v)` basis pairs.
pub fn validate_mrb_representation<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
) -> Result<ViolationReport<S>> {
    r.check_structure(s)?;
    validate_mrb(s)?.into_precondition("operator is not modified Rota-Baxter")?;
    validate_representation(&s.algebra, &r.rep)?
        .into_precondition("actions do not form a representation")?;
    Ok(mrb_representation_conditions(s, r))
}

/// The operator conditions alone, without checking the preconditions.
pub(crate) fn mrb_representation_conditions<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
) -> ViolationReport<S> {
    let d = s.dim();
    let m = r.dim();
    let rep = &r.rep;
    let lambda = &s.weight;
    let mut report = ViolationReport::new();
    report.mark_checked(MRB_LEFT);
    report.mark_checked(MRB_RIGHT);
    for a in 0..d {
        let ea = basis_vec(d, a);
        let ta = s.t(&ea);
        for v in 0..m {
            let ev = basis_vec(m, v);
            let tv = r.t(&ev);

            let mut inner = rep.act_left(&ta, &ev);
            crate::matrix::add_assign(&mut inner, &rep.act_left(&ea, &tv));
            let mut res = rep.act_left(&ta, &tv);
            sub_assign(&mut res, &r.t(&inner));
            sub_assign(&mut res, &crate::matrix::scale_vec(&rep.act_left(&ea, &ev), lambda));
            report.record(MRB_LEFT, &[a, v], res);

            let mut inner = rep.act_right(&tv, &ea);
            crate::matrix::add_assign(&mut inner, &rep.act_right(&ev, &ta));
            let mut res = rep.act_right(&tv, &ta);
            sub_assign(&mut res, &r.t(&inner));
            sub_assign(&mut res, &crate::matrix::scale_vec(&rep.act_right(&ev, &ea), lambda));
            report.record(MRB_RIGHT, &[a, v], res);
        }
    }
    report
}

/// The adjoint representation `(g, [,], [,], T)`.
pub fn adjoint_rep<S: Scalar>(s: &MrbStructure<S>) -> Result<MrbRepresentation<S>> {
    validate_mrb(s)?.into_precondition("operator is not modified Rota-Baxter")?;
    MrbRepresentation::new(Representation::adjoint(&s.algebra), s.operator.clone())
}

/// Checks that `map: from -> to` intertwines brackets and operators.
pub fn validate_morphism<S: Scalar>(
    map: &LinearOperator<S>,
    from: &MrbStructure<S>,
    to: &MrbStructure<S>,
) -> Result<ViolationReport<S>> {
    check_dim("morphism domain", from.dim(), map.domain_dim())?;
    check_dim("morphism codomain", to.dim(), map.codomain_dim())?;
    let d = from.dim();
    let mut report = ViolationReport::new();
    report.mark_checked("morphism-bracket");
    report.mark_checked("morphism-operator");
    for i in 0..d {
        let ei = basis_vec(d, i);
        let fi = map.apply(&ei);
        for j in 0..d {
            let fj = map.apply(&basis_vec(d, j));
            let mut res = map.apply(from.algebra.bracket_basis(i, j));
            sub_assign(&mut res, &to.algebra.bracket(&fi, &fj));
            report.record("morphism-bracket", &[i, j], res);
        }
        let mut res = map.apply(&from.t(&ei));
        sub_assign(&mut res, &to.t(&fi));
        report.record("morphism-operator", &[i], res);
    }
    Ok(report)
}
