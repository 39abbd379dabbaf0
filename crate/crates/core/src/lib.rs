//! Exact computations for Leibniz algebras carrying a modified Rota-Baxter
//! operator of weight `λ`: axiom checks, the induced structures, the three
//! cochain complexes and their cohomology, truncated formal deformations,
//! and abelian extensions.
//!
//! Everything is generic over an exact [`Scalar`]; the aliases below fix
//! it to arbitrary-precision rationals, which is what the command-line tool
//! and the document format use.

pub mod algebra;
pub mod audit;
pub mod catalog;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod extension;
pub mod induced;
pub mod linalg;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod validate;

pub use algebra::{LeibnizAlgebra, LinearOperator, MrbRepresentation, MrbStructure, Representation};
pub use audit::LemmaAudit;
pub use cochain::{Cochain, Complex, ComplexOptions, DegreeZero, MrblaCochain, PhiVariant};
pub use cohomology::{Classification, CohomologyReport};
pub use deformation::{TruncatedDeformation, TruncatedIsomorphism};
pub use extension::{AbelianExtension, Section};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use report::{Violation, ViolationReport};
pub use scalar::Scalar;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

pub type RationalMatrix = Matrix<Rational>;
pub type RationalAlgebra = LeibnizAlgebra<Rational>;
pub type RationalOperator = LinearOperator<Rational>;
pub type RationalStructure = MrbStructure<Rational>;
pub type RationalRepresentation = Representation<Rational>;
pub type RationalMrbRepresentation = MrbRepresentation<Rational>;
pub type RationalCochain = Cochain<Rational>;
pub type RationalMrblaCochain = MrblaCochain<Rational>;
pub type RationalReport = ViolationReport<Rational>;
pub type RationalDeformation = TruncatedDeformation<Rational>;
pub type RationalIsomorphism = TruncatedIsomorphism<Rational>;
pub type RationalExtension = AbelianExtension<Rational>;
