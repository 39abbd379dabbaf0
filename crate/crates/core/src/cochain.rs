//! Cochains `g^{⊗n} → V` and the three differentials built on them.
//!
//! A degree-`n` cochain is stored densely with the module index outermost
//! and the argument indices `(j1, ..., jn)` in row-major order after it:
//! `f(e_{j1}, ..., e_{jn}) = sum_v F[v][j1]...[jn] u_v`. Degree 0 stores a
//! single vector of `V`.

use rayon::prelude::*;

use crate::algebra::{LeibnizAlgebra, LinearOperator, MrbRepresentation, MrbStructure, Representation};
use crate::error::{check_dim, Error, Result};
use crate::induced::{induced_actions, induced_bracket};
use crate::matrix::{add_assign, axpy, is_zero_vec, sub_assign, zero_vec, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<S> {
    degree: usize,
    dim_v: usize,
    dim_g: usize,
    coeffs: Vec<S>,
}

fn flat_len(degree: usize, dim_v: usize, dim_g: usize) -> usize {
    dim_v * dim_g.pow(degree as u32)
}

impl<S: Scalar> Cochain<S> {
    pub fn zero(degree: usize, dim_v: usize, dim_g: usize) -> Self {
        Self {
            degree,
            dim_v,
            dim_g,
            coeffs: vec![S::zero(); flat_len(degree, dim_v, dim_g)],
        }
    }

    pub fn from_coeffs(degree: usize, dim_v: usize, dim_g: usize, coeffs: Vec<S>) -> Result<Self> {
        check_dim("cochain coefficient count", flat_len(degree, dim_v, dim_g), coeffs.len())?;
        Ok(Self {
            degree,
            dim_v,
            dim_g,
            coeffs,
        })
    }

    /// The basis cochain with a single unit coefficient at flat index `idx`.
    pub fn basis(degree: usize, dim_v: usize, dim_g: usize, idx: usize) -> Self {
        let mut c = Self::zero(degree, dim_v, dim_g);
        c.coeffs[idx] = S::one();
        c
    }

    /// The bracket of `alg` as a 2-cochain with values in the adjoint module.
    pub fn bracket(alg: &LeibnizAlgebra<S>) -> Self {
        let d = alg.dim();
        let mut c = Self::zero(2, d, d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    c.coeffs[(k * d + i) * d + j] = alg.constant(i, j, k).clone();
                }
            }
        }
        c
    }

    /// A linear map `g → V` as a 1-cochain.
    pub fn from_operator(op: &LinearOperator<S>) -> Self {
        let m = op.matrix();
        Self {
            degree: 1,
            dim_v: m.rows(),
            dim_g: m.cols(),
            coeffs: (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect(),
        }
    }

    /// A vector of `V` as a 0-cochain.
    pub fn from_vector(v: Vec<S>, dim_g: usize) -> Self {
        Self {
            degree: 0,
            dim_v: v.len(),
            dim_g,
            coeffs: v,
        }
    }

    pub fn to_operator(&self) -> Result<LinearOperator<S>> {
        if self.degree != 1 {
            return Err(Error::Unsupported(format!(
                "degree-{} cochain is not a linear map",
                self.degree
            )));
        }
        Ok(LinearOperator::new(Matrix::from_fn(self.dim_v, self.dim_g, |i, j| {
            self.coeffs[i * self.dim_g + j].clone()
        })))
    }

    /// Reinterprets the coefficient tensor as the structure constants of an
    /// algebra on `V = g`.
    pub fn to_algebra(&self) -> Result<LeibnizAlgebra<S>> {
        if self.degree != 2 || self.dim_v != self.dim_g {
            return Err(Error::Unsupported("only degree-2 cochains g⊗g → g define a bracket".into()));
        }
        let d = self.dim_g;
        let mut constants = vec![S::zero(); d * d * d];
        for k in 0..d {
            for i in 0..d {
                for j in 0..d {
                    constants[(i * d + j) * d + k] = self.coeffs[(k * d + i) * d + j].clone();
                }
            }
        }
        LeibnizAlgebra::new(d, constants)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    /// Number of argument tuples, `d^n`.
    fn tuples(&self) -> usize {
        self.dim_g.pow(self.degree as u32)
    }

    /// Value on the basis tuple with flat index `tuple`.
    pub fn value_at_flat(&self, tuple: usize) -> Vec<S> {
        let stride = self.tuples();
        (0..self.dim_v).map(|v| self.coeffs[v * stride + tuple].clone()).collect()
    }

    /// Value on the basis tuple `(e_{j1}, ..., e_{jn})`.
    pub fn value_at(&self, indices: &[usize]) -> Vec<S> {
        debug_assert_eq!(indices.len(), self.degree);
        self.value_at_flat(flatten(indices, self.dim_g))
    }

    /// Multilinear evaluation on arbitrary arguments.
    pub fn eval(&self, args: &[&[S]]) -> Vec<S> {
        assert_eq!(args.len(), self.degree, "argument count must equal degree");
        let mut out = zero_vec(self.dim_v);
        let supports: Vec<Vec<usize>> = args
            .iter()
            .map(|a| (0..a.len()).filter(|&i| !a[i].is_zero()).collect())
            .collect();
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let mut pos = vec![0usize; self.degree];
        loop {
            let mut weight = S::one();
            let mut flat = 0;
            for (slot, &p) in pos.iter().enumerate() {
                let idx = supports[slot][p];
                weight *= &args[slot][idx];
                flat = flat * self.dim_g + idx;
            }
            axpy(&mut out, &weight, &self.value_at_flat(flat));
            if !advance(&mut pos, &supports) {
                return out;
            }
        }
    }

    /// `f(e_{j1}, ..., x, ..., e_{jn})` with `x` in slot `slot` and basis
    /// vectors elsewhere (`indices[slot]` is ignored).
    pub fn eval_with_slot(&self, indices: &[usize], slot: usize, x: &[S]) -> Vec<S> {
        let mut idx = indices.to_vec();
        let mut out = zero_vec(self.dim_v);
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            idx[slot] = k;
            axpy(&mut out, xk, &self.value_at(&idx));
        }
        out
    }

    /// `(a1, ..., an) ↦ f(A1 a1, ..., An an)`; `None` leaves a slot alone.
    pub fn precompose(&self, maps: &[Option<&Matrix<S>>]) -> Self {
        assert_eq!(maps.len(), self.degree);
        let mut out = self.clone();
        for (slot, map) in maps.iter().enumerate() {
            if let Some(a) = map {
                out = out.mode_product(slot, a);
            }
        }
        out
    }

    fn mode_product(&self, slot: usize, a: &Matrix<S>) -> Self {
        let d = self.dim_g;
        let inner = d.pow((self.degree - 1 - slot) as u32);
        let outer = self.dim_v * d.pow(slot as u32);
        let mut out = Self::zero(self.degree, self.dim_v, d);
        for o in 0..outer {
            for k in 0..d {
                for i in 0..inner {
                    let f = &self.coeffs[(o * d + k) * inner + i];
                    if f.is_zero() {
                        continue;
                    }
                    for j in 0..d {
                        out.coeffs[(o * d + j) * inner + i].add_product(f, &a[(k, j)]);
                    }
                }
            }
        }
        out
    }

    /// `M ∘ f`, possibly into a module of another dimension.
    pub fn postcompose(&self, m: &Matrix<S>) -> Self {
        assert_eq!(m.cols(), self.dim_v);
        let stride = self.tuples();
        let mut out = Self::zero(self.degree, m.rows(), self.dim_g);
        for w in 0..m.rows() {
            for v in 0..self.dim_v {
                let c = &m[(w, v)];
                if c.is_zero() {
                    continue;
                }
                for t in 0..stride {
                    out.coeffs[w * stride + t].add_product(c, &self.coeffs[v * stride + t]);
                }
            }
        }
        out
    }

    fn check_same_shape(&self, other: &Self) {
        assert_eq!(
            (self.degree, self.dim_v, self.dim_g),
            (other.degree, other.dim_v, other.dim_g),
            "cochain shape mismatch"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let mut out = self.clone();
        add_assign(&mut out.coeffs, &other.coeffs);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let mut out = self.clone();
        sub_assign(&mut out.coeffs, &other.coeffs);
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    fn check_dims(&self, dim_v: usize, dim_g: usize) -> Result<()> {
        check_dim("cochain module dimension", dim_v, self.dim_v)?;
        check_dim("cochain algebra dimension", dim_g, self.dim_g)
    }
}

fn flatten(indices: &[usize], d: usize) -> usize {
    indices.iter().fold(0, |acc, &i| acc * d + i)
}

fn unflatten(mut flat: usize, len: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in (0..len).rev() {
        out[slot] = flat % d;
        flat /= d;
    }
    out
}

fn advance(pos: &mut [usize], supports: &[Vec<usize>]) -> bool {
    for slot in (0..pos.len()).rev() {
        pos[slot] += 1;
        if pos[slot] < supports[slot].len() {
            return true;
        }
        pos[slot] = 0;
    }
    false
}

fn sign<S: Scalar>(odd: bool) -> S {
    if odd {
        -S::one()
    } else {
        S::one()
    }
}

/// Loday-Pirashvili coboundary of `f` for the given bracket and actions.
fn lp_differential<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    f: &Cochain<S>,
) -> Cochain<S> {
    let n = f.degree;
    let d = alg.dim();
    let m = rep.dim();
    let mut out = Cochain::zero(n + 1, m, d);
    if f.is_zero() {
        return out;
    }
    let out_tuples = out.tuples();
    for t in 0..out_tuples {
        let idx = unflatten(t, n + 1, d);
        let mut acc = zero_vec(m);
        let mut rest = Vec::with_capacity(n);
        for p in 0..n {
            rest.clear();
            rest.extend(idx.iter().enumerate().filter(|&(k, _)| k != p).map(|(_, &j)| j));
            let val = f.value_at(&rest);
            if !is_zero_vec(&val) {
                axpy(&mut acc, &sign(p % 2 == 1), &rep.left()[idx[p]].apply(&val));
            }
        }
        let val = f.value_at(&idx[..n]);
        if !is_zero_vec(&val) {
            axpy(&mut acc, &sign((n + 1) % 2 == 1), &rep.right()[idx[n]].apply(&val));
        }
        for p in 0..n + 1 {
            for q in p + 1..n + 1 {
                let bracket = alg.bracket_basis(idx[p], idx[q]);
                if is_zero_vec(bracket) {
                    continue;
                }
                rest.clear();
                rest.extend(idx.iter().enumerate().filter(|&(k, _)| k != p).map(|(_, &j)| j));
                let val = f.eval_with_slot(&rest, q - 1, bracket);
                axpy(&mut acc, &sign(p % 2 == 0), &val);
            }
        }
        for (v, x) in acc.into_iter().enumerate() {
            out.coeffs[v * out_tuples + t] = x;
        }
    }
    out
}

/// `δⁿ` on `C^n_LA(g, V)`.
pub fn delta<S: Scalar>(
    alg: &LeibnizAlgebra<S>,
    rep: &Representation<S>,
    f: &Cochain<S>,
) -> Result<Cochain<S>> {
    rep.check_algebra(alg)?;
    f.check_dims(rep.dim(), alg.dim())?;
    Ok(lp_differential(alg, rep, f))
}

/// `∂ⁿ` on `C^n_mRBO(g, V)`: the Loday-Pirashvili coboundary of the
/// induced algebra with coefficients in the induced representation.
pub fn partial<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    f: &Cochain<S>,
) -> Result<Cochain<S>> {
    r.check_structure(s)?;
    f.check_dims(r.dim(), s.dim())?;
    Ok(lp_differential(&induced_bracket(s), &induced_actions(s, r).rep, f))
}

/// `∂ⁿ` evaluated from its expansion in terms of `T`, `T_V` and the
/// original bracket and actions, without building the induced structures.
pub fn partial_expanded<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    f: &Cochain<S>,
) -> Result<Cochain<S>> {
    r.check_structure(s)?;
    f.check_dims(r.dim(), s.dim())?;
    let n = f.degree;
    let d = s.dim();
    let m = r.dim();
    let alg = &s.algebra;
    let rep = &r.rep;
    let basis: Vec<Vec<S>> = (0..d).map(|i| crate::matrix::basis_vec(d, i)).collect();
    let t_basis: Vec<Vec<S>> = basis.iter().map(|e| s.t(e)).collect();
    // [Ta, b] + [a, Tb] on basis pairs.
    let args: Vec<Vec<S>> = (0..d * d)
        .map(|ij| {
            let (i, j) = (ij / d, ij % d);
            let mut arg = alg.bracket(&t_basis[i], &basis[j]);
            add_assign(&mut arg, &alg.bracket(&basis[i], &t_basis[j]));
            arg
        })
        .collect();
    let mut out = Cochain::zero(n + 1, m, d);
    let out_tuples = out.tuples();
    for t in 0..out_tuples {
        let idx = unflatten(t, n + 1, d);
        let mut acc = zero_vec(m);
        for p in 0..n {
            let rest: Vec<usize> = idx.iter().enumerate().filter(|&(k, _)| k != p).map(|(_, &j)| j).collect();
            let val = f.value_at(&rest);
            if is_zero_vec(&val) {
                continue;
            }
            let ep = &basis[idx[p]];
            let mut term = rep.act_left(&t_basis[idx[p]], &val);
            sub_assign(&mut term, &r.t(&rep.act_left(ep, &val)));
            axpy(&mut acc, &sign(p % 2 == 1), &term);
        }
        let val = f.value_at(&idx[..n]);
        if !is_zero_vec(&val) {
            let mut term = rep.act_right(&val, &t_basis[idx[n]]);
            sub_assign(&mut term, &r.t(&rep.act_right(&val, &basis[idx[n]])));
            axpy(&mut acc, &sign((n + 1) % 2 == 1), &term);
        }
        for p in 0..n + 1 {
            for q in p + 1..n + 1 {
                let arg = &args[idx[p] * d + idx[q]];
                if is_zero_vec(arg) {
                    continue;
                }
                let rest: Vec<usize> = idx.iter().enumerate().filter(|&(k, _)| k != p).map(|(_, &j)| j).collect();
                axpy(&mut acc, &sign(p % 2 == 0), &f.eval_with_slot(&rest, q - 1, arg));
            }
        }
        for (v, x) in acc.into_iter().enumerate() {
            out.coeffs[v * out_tuples + t] = x;
        }
    }
    Ok(out)
}

/// Coefficient scheme for the map `φⁿ: C^n_LA → C^n_mRBO`.
///
/// Both schemes start from `f(Ta1, ..., Tan)` and add one term for every
/// nonempty set of `r` positions left without `T`:
///
/// | scheme      | odd `r`                        | even `r`                        |
/// |-------------|--------------------------------|---------------------------------|
/// | `Printed`   | `-(-λ)^((r-1)/2) T_V∘f(..)`    | `-(-λ)^(r/2+1) T_V∘f(..)`       |
/// | `Corrected` | `-(-λ)^((r-1)/2) T_V∘f(..)`    | `+(-λ)^(r/2) f(..)`             |
///
/// They agree when `λ = 0` and in degree 1. `Corrected` is the scheme that
/// commutes with the differentials (`φⁿ⁺¹∘δⁿ = ∂ⁿ∘φⁿ`) for every weight; in
/// degree 2 it reads `f(Ta,Tb) - T_V f(a,Tb) - T_V f(Ta,b) - λ f(a,b)`.
/// `Printed` is kept so the discrepancy can be measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PhiVariant {
    Printed,
    #[default]
    Corrected,
}

impl PhiVariant {
    pub const ALL: [PhiVariant; 2] = [PhiVariant::Printed, PhiVariant::Corrected];

    pub fn name(self) -> &'static str {
        match self {
            PhiVariant::Printed => "printed",
            PhiVariant::Corrected => "corrected",
        }
    }
}

impl std::str::FromStr for PhiVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(PhiVariant::Printed),
            "corrected" => Ok(PhiVariant::Corrected),
            other => Err(Error::Malformed(format!("unknown phi variant `{other}`"))),
        }
    }
}

impl std::fmt::Display for PhiVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// `φⁿ(f)` for `n ≥ 1`.
pub fn phi<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    f: &Cochain<S>,
    variant: PhiVariant,
) -> Result<Cochain<S>> {
    r.check_structure(s)?;
    f.check_dims(r.dim(), s.dim())?;
    let n = f.degree;
    if n == 0 {
        return Err(Error::Unsupported(
            "phi in degree 0 has no cochain-valued form; see DegreeZero".into(),
        ));
    }
    let t = s.operator.matrix();
    let lambda = &s.weight;
    let neg_lambda = -lambda.clone();
    let mut bare = f.precompose(&vec![Some(t); n]);
    let mut through_tv = Cochain::zero(n, f.dim_v, f.dim_g);
    for mask in 1u32..(1 << n) {
        let r_count = mask.count_ones();
        let maps: Vec<Option<&Matrix<S>>> =
            (0..n).map(|k| if mask & (1 << k) != 0 { None } else { Some(t) }).collect();
        let (coeff, composed) = match (variant, r_count % 2 == 1) {
            (PhiVariant::Printed, true) => (neg_lambda.pow_u32((r_count - 1) / 2), true),
            (PhiVariant::Printed, false) => (neg_lambda.pow_u32(r_count / 2 + 1), true),
            (PhiVariant::Corrected, true) => (neg_lambda.pow_u32((r_count - 1) / 2), true),
            (PhiVariant::Corrected, false) => (-neg_lambda.pow_u32(r_count / 2), false),
        };
        if coeff.is_zero() {
            continue;
        }
        let term = f.precompose(&maps).scale(&coeff);
        if composed {
            through_tv = through_tv.add(&term);
        } else {
            bare = bare.sub(&term);
        }
    }
    Ok(bare.sub(&through_tv.postcompose(r.operator.matrix())))
}

/// An element `(f, g)` of `C^n_mRBLA = C^n_LA ⊕ C^{n-1}_mRBO`; in degree 0
/// only `f` is present.
#[derive(Debug, Clone, PartialEq)]
pub struct MrblaCochain<S> {
    pub la: Cochain<S>,
    pub mrbo: Option<Cochain<S>>,
}

impl<S: Scalar> MrblaCochain<S> {
    pub fn new(la: Cochain<S>, mrbo: Option<Cochain<S>>) -> Result<Self> {
        match (&mrbo, la.degree) {
            (None, 0) => {}
            (None, n) => {
                return Err(Error::Malformed(format!(
                    "degree-{n} cochain pair needs a degree-{} operator part",
                    n - 1
                )))
            }
            (Some(_), 0) => {
                return Err(Error::Malformed("degree-0 cochain has no operator part".into()))
            }
            (Some(g), n) => {
                check_dim("operator part degree", n - 1, g.degree)?;
                check_dim("operator part module dimension", la.dim_v, g.dim_v)?;
                check_dim("operator part algebra dimension", la.dim_g, g.dim_g)?;
            }
        }
        Ok(Self { la, mrbo })
    }

    pub fn zero(degree: usize, dim_v: usize, dim_g: usize) -> Self {
        let mrbo = (degree > 0).then(|| Cochain::zero(degree - 1, dim_v, dim_g));
        Self {
            la: Cochain::zero(degree, dim_v, dim_g),
            mrbo,
        }
    }

    pub fn degree(&self) -> usize {
        self.la.degree
    }

    pub fn dim_v(&self) -> usize {
        self.la.dim_v
    }

    pub fn dim_g(&self) -> usize {
        self.la.dim_g
    }

    /// `la` coefficients followed by `mrbo` coefficients.
    pub fn to_vector(&self) -> Vec<S> {
        let mut v = self.la.coeffs.clone();
        if let Some(g) = &self.mrbo {
            v.extend(g.coeffs.iter().cloned());
        }
        v
    }

    pub fn from_vector(degree: usize, dim_v: usize, dim_g: usize, v: Vec<S>) -> Result<Self> {
        let la_len = flat_len(degree, dim_v, dim_g);
        let total = mrbla_len(degree, dim_v, dim_g);
        check_dim("cochain pair coefficient count", total, v.len())?;
        let mut la = v;
        let rest = la.split_off(la_len);
        let mrbo = if degree == 0 {
            None
        } else {
            Some(Cochain::from_coeffs(degree - 1, dim_v, dim_g, rest)?)
        };
        Self::new(Cochain::from_coeffs(degree, dim_v, dim_g, la)?, mrbo)
    }

    pub fn is_zero(&self) -> bool {
        self.la.is_zero() && self.mrbo.as_ref().is_none_or(Cochain::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            la: self.la.add(&other.la),
            mrbo: self.mrbo.as_ref().zip(other.mrbo.as_ref()).map(|(a, b)| a.add(b)),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            la: self.la.sub(&other.la),
            mrbo: self.mrbo.as_ref().zip(other.mrbo.as_ref()).map(|(a, b)| a.sub(b)),
        }
    }
}

/// Dimension of `C^n_mRBLA`.
pub fn mrbla_len(degree: usize, dim_v: usize, dim_g: usize) -> usize {
    flat_len(degree, dim_v, dim_g) + if degree == 0 { 0 } else { flat_len(degree - 1, dim_v, dim_g) }
}

/// How the combined differential acts on `C^0_mRBLA = V`.
///
/// The pair formula `d(f, g) = (δf, -∂g - φf)` has no operator part to
/// draw on in degree 0, so the map there is a convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DegreeZero {
    /// `d⁰v = (δ⁰v, 0)`. `d¹∘d⁰ = (0, -∂⁰v)`, which vanishes only when
    /// `∂⁰` does.
    #[default]
    ZeroSecond,
    /// `d⁰v = (δ⁰v, -v)`, reading `φ⁰` as the identity of `V`. Always
    /// squares to zero with `d¹` since `φ¹∘δ⁰ = ∂⁰`.
    PhiIdentity,
    /// `d⁰ = 0`: cohomology reported without the degree-0 map.
    Omitted,
}

impl DegreeZero {
    pub const ALL: [DegreeZero; 3] = [DegreeZero::ZeroSecond, DegreeZero::PhiIdentity, DegreeZero::Omitted];

    pub fn name(self) -> &'static str {
        match self {
            DegreeZero::ZeroSecond => "zero",
            DegreeZero::PhiIdentity => "identity",
            DegreeZero::Omitted => "omit",
        }
    }
}

impl std::str::FromStr for DegreeZero {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero" => Ok(DegreeZero::ZeroSecond),
            "identity" => Ok(DegreeZero::PhiIdentity),
            "omit" => Ok(DegreeZero::Omitted),
            other => Err(Error::Malformed(format!("unknown degree-zero convention `{other}`"))),
        }
    }
}

impl std::fmt::Display for DegreeZero {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Options that select a concrete combined complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ComplexOptions {
    pub variant: PhiVariant,
    pub degree_zero: DegreeZero,
}

/// `dⁿ(f, g) = (δⁿf, -∂ⁿ⁻¹g - φⁿf)`; degree 0 follows `opts.degree_zero`.
pub fn d_full<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    x: &MrblaCochain<S>,
    opts: ComplexOptions,
) -> Result<MrblaCochain<S>> {
    r.check_structure(s)?;
    x.la.check_dims(r.dim(), s.dim())?;
    let la = delta(&s.algebra, &r.rep, &x.la)?;
    let second = match &x.mrbo {
        None => match opts.degree_zero {
            DegreeZero::ZeroSecond => Cochain::zero(0, r.dim(), s.dim()),
            DegreeZero::PhiIdentity => x.la.neg(),
            DegreeZero::Omitted => {
                return Ok(MrblaCochain::zero(1, r.dim(), s.dim()));
            }
        },
        Some(g) => partial(s, r, g)?.add(&phi(s, r, &x.la, opts.variant)?).neg(),
    };
    MrblaCochain::new(la, Some(second))
}

/// Which of the three complexes a matrix or cohomology computation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Complex {
    /// `(C_LA, δ)` of the algebra with coefficients in the representation.
    La,
    /// `(C_mRBO, ∂)`, the same construction over the induced data.
    Mrbo,
    /// `(C_mRBLA, d)`, the mapping-cone style combination.
    Mrbla,
}

impl Complex {
    pub fn name(self) -> &'static str {
        match self {
            Complex::La => "la",
            Complex::Mrbo => "mrbo",
            Complex::Mrbla => "mrbla",
        }
    }

    /// Dimension of the degree-`n` cochain space.
    pub fn cochain_dim(self, degree: usize, dim_v: usize, dim_g: usize) -> usize {
        match self {
            Complex::La | Complex::Mrbo => flat_len(degree, dim_v, dim_g),
            Complex::Mrbla => mrbla_len(degree, dim_v, dim_g),
        }
    }
}

impl std::str::FromStr for Complex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "la" => Ok(Complex::La),
            "mrbo" => Ok(Complex::Mrbo),
            "mrbla" => Ok(Complex::Mrbla),
            other => Err(Error::Malformed(format!("unknown complex `{other}`"))),
        }
    }
}

impl std::fmt::Display for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn matrix_of<S: Scalar>(
    rows: usize,
    cols: usize,
    column: impl Fn(usize) -> Result<Vec<S>> + Sync,
) -> Result<Matrix<S>> {
    let columns: Vec<Vec<S>> = (0..cols).into_par_iter().map(&column).collect::<Result<_>>()?;
    Matrix::from_columns(rows, &columns)
}

/// Matrix of the degree-`n` differential of `complex` in the standard
/// cochain basis. Columns are images of basis cochains in the documented
/// vectorization order.
pub fn assemble_matrix<S: Scalar>(
    complex: Complex,
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    degree: usize,
    opts: ComplexOptions,
) -> Result<Matrix<S>> {
    r.check_structure(s)?;
    let (m, d) = (r.dim(), s.dim());
    let rows = complex.cochain_dim(degree + 1, m, d);
    let cols = complex.cochain_dim(degree, m, d);
    match complex {
        Complex::La => matrix_of(rows, cols, |i| {
            Ok(lp_differential(&s.algebra, &r.rep, &Cochain::basis(degree, m, d, i)).coeffs)
        }),
        Complex::Mrbo => {
            let alg = induced_bracket(s);
            let rep = induced_actions(s, r).rep;
            matrix_of(rows, cols, |i| {
                Ok(lp_differential(&alg, &rep, &Cochain::basis(degree, m, d, i)).coeffs)
            })
        }
        Complex::Mrbla => matrix_of(rows, cols, |i| {
            let mut v = vec![S::zero(); cols];
            v[i] = S::one();
            let x = MrblaCochain::from_vector(degree, m, d, v)?;
            Ok(d_full(s, r, &x, opts)?.to_vector())
        }),
    }
}

/// Matrix of `φⁿ` (`n ≥ 1`), or the identity of `V` for `n = 0`.
pub fn phi_matrix<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    degree: usize,
    variant: PhiVariant,
) -> Result<Matrix<S>> {
    let (m, d) = (r.dim(), s.dim());
    if degree == 0 {
        return Ok(Matrix::identity(m));
    }
    let n = flat_len(degree, m, d);
    matrix_of(n, n, |i| Ok(phi(s, r, &Cochain::basis(degree, m, d, i), variant)?.coeffs))
}

/// Matrix form of `φⁿ⁺¹∘δⁿ - ∂ⁿ∘φⁿ`. Zero exactly when the chain-map
/// identity holds in degree `n` for every cochain.
pub fn chain_map_defect<S: Scalar>(
    s: &MrbStructure<S>,
    r: &MrbRepresentation<S>,
    degree: usize,
    variant: PhiVariant,
) -> Result<Matrix<S>> {
    let opts = ComplexOptions::default();
    let delta_n = assemble_matrix(Complex::La, s, r, degree, opts)?;
    let partial_n = assemble_matrix(Complex::Mrbo, s, r, degree, opts)?;
    let lhs = phi_matrix(s, r, degree + 1, variant)?.mul(&delta_n);
    let rhs = partial_n.mul(&phi_matrix(s, r, degree, variant)?);
    Ok(lhs.sub(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::matrix::basis_vec;
    use crate::validate::adjoint_rep;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn example() -> (MrbStructure<Rational>, MrbRepresentation<Rational>) {
        let s = catalog::example_structure();
        let r = adjoint_rep(&s).unwrap();
        (s, r)
    }

    #[test]
    fn bracket_cochain_round_trips_to_algebra() {
        let alg = catalog::example_algebra::<Rational>();
        let mu = Cochain::bracket(&alg);
        assert_eq!(mu.to_algebra().unwrap(), alg);
        assert_eq!(mu.value_at(&[1, 0]), vec![q(1), q(0)]);
    }

    #[test]
    fn eval_matches_basis_lookup_and_multilinearity() {
        let alg = catalog::example_algebra::<Rational>();
        let mu = Cochain::bracket(&alg);
        let a = vec![q(2), q(-1)];
        let b = vec![q(1), q(3)];
        assert_eq!(mu.eval(&[&a, &b]), alg.bracket(&a, &b));
    }

    #[test]
    fn precompose_matches_pointwise_evaluation() {
        let (s, _) = example();
        let mu = Cochain::bracket(&s.algebra);
        let t = s.operator.matrix();
        let g = mu.precompose(&[Some(t), None]);
        for i in 0..2 {
            for j in 0..2 {
                let ei = basis_vec(2, i);
                let ej = basis_vec(2, j);
                assert_eq!(g.value_at(&[i, j]), s.algebra.bracket(&s.t(&ei), &ej));
            }
        }
    }

    #[test]
    fn delta_of_identity_is_the_bracket() {
        let (s, r) = example();
        let id = Cochain::from_operator(&LinearOperator::identity(2));
        let d1 = delta(&s.algebra, &r.rep, &id).unwrap();
        assert_eq!(d1, Cochain::bracket(&s.algebra));
    }

    #[test]
    fn delta_degree_one_hand_example() {
        // f(e1) = e2, f(e2) = 0
        let (s, r) = example();
        let f = Cochain::from_coeffs(1, 2, 2, vec![q(0), q(0), q(1), q(0)]).unwrap();
        let df = delta(&s.algebra, &r.rep, &f).unwrap();
        assert_eq!(df.value_at(&[1, 0]), vec![q(1), q(-1)]);
    }

    #[test]
    fn delta_degree_zero_is_minus_right_action() {
        let (s, r) = example();
        let x = Cochain::from_vector(vec![q(0), q(1)], 2);
        let dx = delta(&s.algebra, &r.rep, &x).unwrap();
        for j in 0..2 {
            let expected = crate::matrix::scale_vec(&r.rep.act_right(&[q(0), q(1)], &basis_vec(2, j)), &q(-1));
            assert_eq!(dx.value_at(&[j]), expected);
        }
    }

    #[test]
    fn zero_maps_to_zero() {
        let (s, r) = example();
        for n in 0..4 {
            let z = Cochain::zero(n, 2, 2);
            assert!(delta(&s.algebra, &r.rep, &z).unwrap().is_zero());
            assert!(partial(&s, &r, &z).unwrap().is_zero());
        }
    }

    #[test]
    fn partial_paths_agree_on_degree_zero() {
        let (s, r) = example();
        for v in 0..2 {
            let x = Cochain::from_vector(basis_vec(2, v), 2);
            let composed = partial(&s, &r, &x).unwrap();
            assert_eq!(composed, partial_expanded(&s, &r, &x).unwrap());
            // (∂⁰x)(a) = -r(x, Ta) + T_V r(x, a)
            for a in 0..2 {
                let ea = basis_vec(2, a);
                let mut expected = r.t(&r.rep.act_right(&basis_vec(2, v), &ea));
                sub_assign(&mut expected, &r.rep.act_right(&basis_vec(2, v), &s.t(&ea)));
                assert_eq!(composed.value_at(&[a]), expected);
            }
        }
    }

    #[test]
    fn zero_operators_kill_partial() {
        let s = MrbStructure::new(catalog::example_algebra(), LinearOperator::zero(2, 2), q(0)).unwrap();
        let r = adjoint_rep(&s).unwrap();
        let f = Cochain::from_coeffs(2, 2, 2, (0..8).map(q).collect()).unwrap();
        assert!(partial(&s, &r, &f).unwrap().is_zero());
    }

    #[test]
    fn phi_degree_two_corrected_formula() {
        let (s, r) = example();
        let f = Cochain::from_coeffs(2, 2, 2, vec![q(1), q(-2), q(0), q(3), q(5), q(1), q(-1), q(2)]).unwrap();
        let got = phi(&s, &r, &f, PhiVariant::Corrected).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let (a, b) = (basis_vec(2, i), basis_vec(2, j));
                let (ta, tb) = (s.t(&a), s.t(&b));
                let mut expected = f.eval(&[&ta, &tb]);
                sub_assign(&mut expected, &r.t(&f.eval(&[&a, &tb])));
                sub_assign(&mut expected, &r.t(&f.eval(&[&ta, &b])));
                axpy(&mut expected, &s.weight.clone(), &f.eval(&[&a, &b]).iter().map(|x| -x.clone()).collect::<Vec<_>>());
                assert_eq!(got.value_at(&[i, j]), expected);
            }
        }
    }

    #[test]
    fn phi_of_bracket_vanishes_for_corrected_variant() {
        let (s, r) = example();
        let mu = Cochain::bracket(&s.algebra);
        assert!(phi(&s, &r, &mu, PhiVariant::Corrected).unwrap().is_zero());
        assert!(!phi(&s, &r, &mu, PhiVariant::Printed).unwrap().is_zero());
    }

    #[test]
    fn phi_variants_agree_in_degree_one() {
        let (s, r) = example();
        let f = Cochain::from_coeffs(1, 2, 2, vec![q(1), q(2), q(3), q(4)]).unwrap();
        let a = phi(&s, &r, &f, PhiVariant::Printed).unwrap();
        assert_eq!(a, phi(&s, &r, &f, PhiVariant::Corrected).unwrap());
        // φ¹f = f∘T - T_V∘f
        let fm = f.to_operator().unwrap();
        let expected = fm.compose(&s.operator).matrix().sub(r.operator.compose(&fm).matrix());
        assert_eq!(a.to_operator().unwrap().matrix(), &expected);
    }

    #[test]
    fn phi_rejects_degree_zero() {
        let (s, r) = example();
        let x = Cochain::from_vector(vec![q(1), q(0)], 2);
        assert!(matches!(phi(&s, &r, &x, PhiVariant::Corrected), Err(Error::Unsupported(_))));
    }

    #[test]
    fn degree_zero_conventions() {
        let (s, r) = example();
        let v = MrblaCochain::new(Cochain::from_vector(vec![q(0), q(1)], 2), None).unwrap();
        let mut opts = ComplexOptions::default();
        let d0 = d_full(&s, &r, &v, opts).unwrap();
        assert!(d0.mrbo.as_ref().unwrap().is_zero());
        opts.degree_zero = DegreeZero::PhiIdentity;
        let d0 = d_full(&s, &r, &v, opts).unwrap();
        assert_eq!(d0.mrbo.as_ref().unwrap().coeffs(), &[q(0), q(-1)]);
        assert!(d_full(&s, &r, &d0, opts).unwrap().is_zero());
        opts.degree_zero = DegreeZero::Omitted;
        assert!(d_full(&s, &r, &v, opts).unwrap().is_zero());
    }

    #[test]
    fn mrbla_vector_round_trip() {
        let x = MrblaCochain::<Rational>::from_vector(2, 2, 2, (0..12).map(q).collect()).unwrap();
        assert_eq!(x.la.len(), 8);
        assert_eq!(x.mrbo.as_ref().unwrap().len(), 4);
        assert_eq!(x.to_vector(), (0..12).map(q).collect::<Vec<_>>());
        assert!(MrblaCochain::<Rational>::from_vector(2, 2, 2, vec![q(0); 11]).is_err());
    }

    #[test]
    fn assembled_la_matrix_degree_zero_reads_right_action() {
        let (s, r) = example();
        let m = assemble_matrix(Complex::La, &s, &r, 0, ComplexOptions::default()).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 2));
        // column k: δ⁰ e_k, entry (v, j) = -r(e_k, e_j)_v
        for k in 0..2 {
            for j in 0..2 {
                let val = r.rep.act_right(&basis_vec(2, k), &basis_vec(2, j));
                for v in 0..2 {
                    assert_eq!(m[(v * 2 + j, k)], -val[v].clone());
                }
            }
        }
    }

    #[test]
    fn abelian_zero_instance_has_zero_matrices() {
        let s = catalog::abelian_zero::<Rational>(1);
        let r = adjoint_rep(&s).unwrap();
        for c in [Complex::La, Complex::Mrbo, Complex::Mrbla] {
            for n in 0..4 {
                assert!(assemble_matrix(c, &s, &r, n, ComplexOptions::default()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn chain_map_defect_vanishes_for_corrected_variant_on_example() {
        let (s, r) = example();
        for n in 0..3 {
            assert!(chain_map_defect(&s, &r, n, PhiVariant::Corrected).unwrap().is_zero(), "degree {n}");
        }
    }
}
