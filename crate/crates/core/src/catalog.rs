//! Named test instances: the worked two-dimensional example and the
//! scalar-operator families over small abelian algebras.

use crate::algebra::{LeibnizAlgebra, LinearOperator, MrbRepresentation, MrbStructure};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::validate::adjoint_rep;

/// `[e2,e1] = [e2,e2] = e1`, all other brackets zero.
pub fn example_algebra<S: Scalar>() -> LeibnizAlgebra<S> {
    LeibnizAlgebra::from_entries(2, &[(1, 0, 0, S::one()), (1, 1, 0, S::one())])
        .expect("static shape")
}

/// `T = [[1, 4], [0, -3]]`, a modified Rota-Baxter operator of weight -1
/// on [`example_algebra`].
pub fn example_operator<S: Scalar>() -> LinearOperator<S> {
    LinearOperator::new(
        Matrix::from_rows(vec![
            vec![S::one(), S::from_int(4)],
            vec![S::zero(), S::from_int(-3)],
        ])
        .expect("static shape"),
    )
}

pub fn example_structure<S: Scalar>() -> MrbStructure<S> {
    MrbStructure::new(example_algebra(), example_operator(), S::from_int(-1)).expect("static shape")
}

/// One-dimensional abelian algebra with `T = 0`, `λ = 0`.
pub fn abelian_zero<S: Scalar>(dim: usize) -> MrbStructure<S> {
    MrbStructure::new(
        LeibnizAlgebra::abelian(dim).expect("positive dimension"),
        LinearOperator::zero(dim, dim),
        S::zero(),
    )
    .expect("static shape")
}

/// `T = c·Id` with weight `-c²`, modified Rota-Baxter on every algebra.
pub fn scalar_structure<S: Scalar>(alg: LeibnizAlgebra<S>, c: S) -> MrbStructure<S> {
    let d = alg.dim();
    let weight = -c.times(&c);
    MrbStructure::new(alg, LinearOperator::scalar(d, c), weight).expect("square operator")
}

/// A structure paired with its adjoint representation.
#[derive(Debug, Clone)]
pub struct Instance<S> {
    pub name: String,
    pub structure: MrbStructure<S>,
    pub representation: MrbRepresentation<S>,
}

impl<S: Scalar> Instance<S> {
    pub fn adjoint(name: impl Into<String>, structure: MrbStructure<S>) -> Self {
        let representation = adjoint_rep(&structure).expect("catalog structures are valid");
        Self {
            name: name.into(),
            structure,
            representation,
        }
    }
}

/// Abelian algebras of dimension 1 to 3 and the worked example, each with
/// `T = 0` (weight 0) and `T = c·Id` for `c ∈ {1, 2, -1}` (weight `-c²`),
/// plus the worked example's operator wherever the dimension is 2.
pub fn instances<S: Scalar>() -> Vec<Instance<S>> {
    let mut algebras: Vec<(String, LeibnizAlgebra<S>)> = (1..=3)
        .map(|d| (format!("abelian{d}"), LeibnizAlgebra::abelian(d).expect("positive")))
        .collect();
    algebras.push(("example".to_string(), example_algebra()));

    let mut out = Vec::new();
    for (name, alg) in algebras {
        let d = alg.dim();
        out.push(Instance::adjoint(
            format!("{name}/zero"),
            MrbStructure::new(alg.clone(), LinearOperator::zero(d, d), S::zero()).expect("square"),
        ));
        for c in [1, 2, -1] {
            out.push(Instance::adjoint(
                format!("{name}/scalar({c})"),
                scalar_structure(alg.clone(), S::from_int(c)),
            ));
        }
        if d == 2 {
            out.push(Instance::adjoint(
                format!("{name}/example-operator"),
                MrbStructure::new(alg.clone(), example_operator(), S::from_int(-1)).expect("square"),
            ));
        }
    }
    out
}

pub fn find<S: Scalar>(name: &str) -> Option<Instance<S>> {
    instances().into_iter().find(|i| i.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::{validate_leibniz, validate_mrb, validate_mrb_representation};
    use crate::Rational;

    #[test]
    fn every_instance_is_valid() {
        let all = instances::<Rational>();
        assert_eq!(all.len(), 18);
        for inst in &all {
            assert!(validate_leibniz(&inst.structure.algebra).ok(), "{}", inst.name);
            assert!(validate_mrb(&inst.structure).unwrap().ok(), "{}", inst.name);
            assert!(
                validate_mrb_representation(&inst.structure, &inst.representation).unwrap().ok(),
                "{}",
                inst.name
            );
        }
    }

    #[test]
    fn lookup_by_name() {
        assert!(find::<Rational>("example/example-operator").is_some());
        assert!(find::<Rational>("nope").is_none());
    }
}
