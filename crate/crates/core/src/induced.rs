//! The descendent algebra `[a,b]_T = [a,Tb] + [Ta,b]` and the induced
//! representation `l'(a,v) = l(Ta,v) - T_V l(a,v)`,
//! `r'(v,a) = r(v,Ta) - T_V r(v,a)`.

use crate::algebra::{LeibnizAlgebra, MrbRepresentation, MrbStructure, Representation};
use crate::error::Result;
use crate::matrix::{add_assign, basis_vec};
use crate::scalar::Scalar;
use crate::validate::{validate_mrb, validate_mrb_representation};

/// Structure constants of `[,]_T` without checking any precondition.
pub(crate) fn induced_bracket<S: Scalar>(s: &MrbStructure<S>) -> LeibnizAlgebra<S> {
    let d = s.dim();
    let alg = &s.algebra;
    let mut constants = Vec::with_capacity(d * d * d);
    for i in 0..d {
        let ei = basis_vec(d, i);
        let ti = s.t(&ei);
        for j in 0..d {
            let ej = basis_vec(d, j);
            let mut v = alg.bracket(&ei, &s.t(&ej));
            add_assign(&mut v, &alg.bracket(&ti, &ej));
            constants.extend(v);
        }
    }
    LeibnizAlgebra::new(d, constants).expect("shape preserved")
}

/// Induced actions without checking any precondition.
pub(crate) fn induced_actions<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
) -> MrbRepresentation<S> {
    let d = s.dim();
    let tv = r.operator.matrix();
    let mut left = Vec::with_capacity(d);
    let mut right = Vec::with_capacity(d);
    for i in 0..d {
        let ei = basis_vec(d, i);
        let ti = s.t(&ei);
        left.push(r.rep.left_matrix(&ti).sub(&tv.mul(&r.rep.left()[i])));
        right.push(r.rep.right_matrix(&ti).sub(&tv.mul(&r.rep.right()[i])));
    }
    let rep = Representation::new(r.dim(), left, right).expect("shape preserved");
    MrbRepresentation::new(rep, r.operator.clone()).expect("shape preserved")
}

/// `(g, [,]_T, T)` with the same weight.
pub fn induced_algebra<S: Scalar>(s: &MrbStructure<S>) -> Result<MrbStructure<S>> {
    validate_mrb(s)?.into_precondition("operator is not modified Rota-Baxter")?;
    MrbStructure::new(induced_bracket(s), s.operator.clone(), s.weight.clone())
}

/// `(V, l', r', T_V)` over [`induced_algebra`].
pub fn induced_representation<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
) -> Result<MrbRepresentation<S>> {
    validate_mrb_representation(s, r)?.into_precondition("not a representation of the structure")?;
    Ok(induced_actions(s, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LinearOperator;
    use crate::catalog;
    use crate::validate::{adjoint_rep, validate_leibniz};
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn example_induced_bracket() {
        let s = catalog::example_structure::<Rational>();
        let ind = induced_algebra(&s).unwrap();
        let a = &ind.algebra;
        assert_eq!(a.bracket_basis(1, 0), &[q(-2), q(0)]);
        assert_eq!(a.bracket_basis(1, 1), &[q(-2), q(0)]);
        assert_eq!(a.bracket_basis(0, 0), &[q(0), q(0)]);
        assert_eq!(a.bracket_basis(0, 1), &[q(0), q(0)]);
        assert!(validate_leibniz(a).ok());
        assert!(validate_mrb(&ind).unwrap().ok());
    }

    #[test]
    fn zero_operator_gives_zero_bracket() {
        let s = MrbStructure::new(catalog::example_algebra(), LinearOperator::zero(2, 2), q(0)).unwrap();
        assert!(induced_algebra(&s).unwrap().algebra.is_abelian());
        let r = adjoint_rep(&s).unwrap();
        let ir = induced_representation(&s, &r).unwrap();
        assert!(ir.rep.is_zero());
    }

    #[test]
    fn scalar_operator_rescales_bracket() {
        let s = catalog::scalar_structure(catalog::example_algebra(), q(3));
        let ind = induced_algebra(&s).unwrap();
        let expected: Vec<_> = s.algebra.constants().iter().map(|c| c * q(6)).collect();
        assert_eq!(ind.algebra.constants(), expected.as_slice());
    }

    #[test]
    fn example_induced_representation_is_valid() {
        let s = catalog::example_structure::<Rational>();
        let r = adjoint_rep(&s).unwrap();
        let ind = induced_algebra(&s).unwrap();
        let ir = induced_representation(&s, &r).unwrap();
        assert!(validate_mrb_representation(&ind, &ir).unwrap().ok());
        // l'(e2, e1) = [Te2, e1] - T[e2, e1] = [4e1 - 3e2, e1] - Te1 = -3e1 - e1
        assert_eq!(ir.rep.left()[1].column(0), vec![q(-4), q(0)]);
    }

    #[test]
    fn zero_representation_induces_zero() {
        let s = catalog::example_structure::<Rational>();
        let r = MrbRepresentation::new(
            Representation::zero(2, 3).unwrap(),
            LinearOperator::scalar(3, q(2)),
        )
        .unwrap();
        let ir = induced_representation(&s, &r).unwrap();
        assert!(ir.rep.is_zero());
    }
}
