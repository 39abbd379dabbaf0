//! Regenerates the documents in `documents/`.
//!
//! ```text
//! cargo run -p mrbla --example make_documents
//! ```

use std::fs;
use std::path::Path;

use mrbla::document::{serialize, Document};
use mrbla_core::cochain::{assemble_matrix, d_full, Cochain};
use mrbla_core::deformation::push_forward;
use mrbla_core::extension::{build_extension, canonical_section};
use mrbla_core::linalg::reduce;
use mrbla_core::validate::adjoint_rep;
use mrbla_core::{
    catalog, Complex, ComplexOptions, LeibnizAlgebra, LinearOperator, Matrix, MrbStructure, MrblaCochain, Rational,
    Scalar, TruncatedDeformation, TruncatedIsomorphism,
};

fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

fn op(rows: &[&[i64]]) -> LinearOperator<Rational> {
    LinearOperator::new(Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap())
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("documents");
    fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, doc: Document| fs::write(dir.join(name), serialize(&doc)).unwrap();

    let s = catalog::example_structure::<Rational>();
    let r = adjoint_rep(&s).unwrap();
    let opts = ComplexOptions::default();

    write("leibniz2.json", Document::Algebra(catalog::example_algebra()));
    write("mrb2.json", Document::MrbStructure(s.clone()));
    write("abelian1.json", Document::MrbStructure(catalog::abelian_zero(1)));
    write(
        "mrb2-adjoint.json",
        Document::MrbRepresentation {
            structure: s.clone(),
            rep: r.clone(),
        },
    );
    write(
        "not-leibniz.json",
        Document::Algebra(LeibnizAlgebra::from_entries(2, &[(0, 1, 0, q(1))]).unwrap()),
    );
    write(
        "not-mrb.json",
        Document::MrbStructure(MrbStructure::new(catalog::example_algebra(), LinearOperator::identity(2), q(0)).unwrap()),
    );

    let d2 = assemble_matrix(Complex::Mrbla, &s, &r, 2, opts).unwrap();
    let cocycle = MrblaCochain::from_vector(2, 2, 2, reduce(&d2).nullspace_basis[0].clone()).unwrap();
    write("cocycle.json", Document::Cochain(cocycle.clone()));
    let mut bad = cocycle.to_vector();
    bad[0] += q(1);
    write("non-cocycle.json", Document::Cochain(MrblaCochain::from_vector(2, 2, 2, bad).unwrap()));

    let beta = Cochain::from_coeffs(1, 2, 2, vec![q(1), q(-1), q(2), q(0)]).unwrap();
    let shift = d_full(&s, &r, &MrblaCochain::new(beta.clone(), Some(Cochain::zero(0, 2, 2))).unwrap(), opts).unwrap();
    write("coboundary.json", Document::Cochain(shift.clone()));

    let chi = |x: &MrblaCochain<Rational>| x.mrbo.clone().unwrap();
    let ext = build_extension(&s, &r, &cocycle.la, &chi(&cocycle)).unwrap();
    let shifted = cocycle.add(&shift);
    write(
        "extension-shifted.json",
        Document::Extension(build_extension(&s, &r, &shifted.la, &chi(&shifted)).unwrap()),
    );
    let section = canonical_section(&ext).shifted(&ext, &beta).unwrap();
    write("section.json", Document::Section(section.map().clone()));
    write("extension.json", Document::Extension(ext));

    let iso = TruncatedIsomorphism::from_terms(2, 3, &[op(&[&[1, 2], &[0, 1]]), op(&[&[0, 0], &[3, 1]])]).unwrap();
    write("isomorphism.json", Document::Isomorphism(iso.clone()));
    let constant = TruncatedDeformation::constant(s, 3);
    write("constant-deformation.json", Document::Deformation(constant.clone()));
    write(
        "trivial-deformation.json",
        Document::Deformation(push_forward(&constant, &iso).unwrap()),
    );
}
