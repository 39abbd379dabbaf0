//! Seeded randomized audits of the identity `φⁿ⁺¹∘δⁿ = ∂ⁿ∘φⁿ`
//! (with `φ⁰ = Id_V`).

use rand::Rng;

use crate::algebra::{MrbRepresentation, MrbStructure};
use crate::cochain::{delta, partial, phi, Cochain, MrblaCochain, PhiVariant};
use crate::error::Result;
use crate::scalar::Scalar;

/// Integer entries in `[-3, 3]`.
pub fn random_cochain<S: Scalar, R: Rng + ?Sized>(
    degree: usize,
    dim_v: usize,
    dim_g: usize,
    rng: &mut R,
) -> Cochain<S> {
    let len = dim_v * dim_g.pow(degree as u32);
    let coeffs = (0..len).map(|_| S::from_int(rng.gen_range(-3..=3))).collect();
    Cochain::from_coeffs(degree, dim_v, dim_g, coeffs).expect("length computed above")
}

pub fn random_mrbla<S: Scalar, R: Rng + ?Sized>(
    degree: usize,
    dim_v: usize,
    dim_g: usize,
    rng: &mut R,
) -> MrblaCochain<S> {
    let la = random_cochain(degree, dim_v, dim_g, rng);
    let mrbo = (degree > 0).then(|| random_cochain(degree - 1, dim_v, dim_g, rng));
    MrblaCochain::new(la, mrbo).expect("consistent shapes")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeAudit {
    pub degree: usize,
    pub trials: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaAudit {
    pub variant: PhiVariant,
    pub degrees: Vec<DegreeAudit>,
}

impl LemmaAudit {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|d| d.failures == 0)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.degrees.iter().find(|d| d.failures > 0).map(|d| d.degree)
    }
}

/// Checks the identity on `trials` random cochains in each degree
/// `0..=max_degree`.
pub fn audit_chain_map<S: Scalar, R: Rng + ?Sized>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    max_degree: usize,
    trials: usize,
    variant: PhiVariant,
    rng: &mut R,
) -> Result<LemmaAudit> {
    let (m, d) = (r.dim(), s.dim());
    let mut degrees = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let mut failures = 0;
        for _ in 0..trials {
            let f = random_cochain(n, m, d, rng);
            let lhs = phi(s, r, &delta(&s.algebra, &r.rep, &f)?, variant)?;
            let rhs = if n == 0 {
                partial(s, r, &f)?
            } else {
                partial(s, r, &phi(s, r, &f, variant)?)?
            };
            if lhs != rhs {
                failures += 1;
            }
        }
        degrees.push(DegreeAudit {
            degree: n,
            trials,
            failures,
        });
    }
    Ok(LemmaAudit { variant, degrees })
}
