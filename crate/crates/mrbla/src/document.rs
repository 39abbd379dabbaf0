//! Versioned JSON documents.
//!
//! Every document is `{"format_version": "1", "kind": ..., "payload": ...}`.
//! Scalars are strings `"p"` or `"p/q"` in lowest terms with `q > 0`;
//! matrices are lists of rows; flat coefficient lists follow the cochain
//! layout of the core crate (module index outermost, then arguments in
//! row-major order).

use std::fmt;
use std::str::FromStr;

use mrbla_core::cochain::Cochain;
use mrbla_core::{
    AbelianExtension, LeibnizAlgebra, LinearOperator, Matrix, MrbRepresentation, MrbStructure, MrblaCochain,
    Rational, Representation, TruncatedDeformation, TruncatedIsomorphism,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DocError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Semantic { path: String, message: String },
}

fn semantic(path: &str, message: impl Into<String>) -> DocError {
    DocError::Semantic {
        path: path.to_string(),
        message: message.into(),
    }
}

type Res<T> = std::result::Result<T, DocError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    MrbStructure,
    Representation,
    MrbRepresentation,
    Cochain,
    Deformation,
    Isomorphism,
    Extension,
    Section,
    Report,
}

impl Kind {
    pub const ALL: [Kind; 10] = [
        Kind::Algebra,
        Kind::MrbStructure,
        Kind::Representation,
        Kind::MrbRepresentation,
        Kind::Cochain,
        Kind::Deformation,
        Kind::Isomorphism,
        Kind::Extension,
        Kind::Section,
        Kind::Report,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::MrbStructure => "mrb_structure",
            Kind::Representation => "representation",
            Kind::MrbRepresentation => "mrb_representation",
            Kind::Cochain => "cochain",
            Kind::Deformation => "deformation",
            Kind::Isomorphism => "isomorphism",
            Kind::Extension => "extension",
            Kind::Section => "section",
            Kind::Report => "report",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown document kind `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Document {
    Algebra(LeibnizAlgebra<Rational>),
    MrbStructure(MrbStructure<Rational>),
    Representation {
        algebra: LeibnizAlgebra<Rational>,
        rep: Representation<Rational>,
    },
    MrbRepresentation {
        structure: MrbStructure<Rational>,
        rep: MrbRepresentation<Rational>,
    },
    Cochain(MrblaCochain<Rational>),
    Deformation(TruncatedDeformation<Rational>),
    Isomorphism(TruncatedIsomorphism<Rational>),
    Extension(AbelianExtension<Rational>),
    /// A linear map `g → g ⊕ V`, interpreted against an extension.
    Section(LinearOperator<Rational>),
    Report(Map<String, Value>),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Algebra(_) => Kind::Algebra,
            Document::MrbStructure(_) => Kind::MrbStructure,
            Document::Representation { .. } => Kind::Representation,
            Document::MrbRepresentation { .. } => Kind::MrbRepresentation,
            Document::Cochain(_) => Kind::Cochain,
            Document::Deformation(_) => Kind::Deformation,
            Document::Isomorphism(_) => Kind::Isomorphism,
            Document::Extension(_) => Kind::Extension,
            Document::Section(_) => Kind::Section,
            Document::Report(_) => Kind::Report,
        }
    }
}

/// Strict mode rejects unknown fields and non-canonical scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub strict: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self { strict: true }
    }
}

pub fn parse(text: &str, opts: ParseOptions) -> Res<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let r = Reader { strict: opts.strict };
    let mut top = r.object(&value, "$")?;
    let version = r.string(top.req("format_version")?)?;
    if version != FORMAT_VERSION {
        return Err(semantic("$.format_version", format!("unsupported version `{version}`, expected `{FORMAT_VERSION}`")));
    }
    let kind_at = top.req("kind")?;
    let kind_path = kind_at.1.clone();
    let kind: Kind = r.string(kind_at)?.parse().map_err(|e: String| semantic(&kind_path, e))?;
    let payload = top.req("payload")?;
    top.finish()?;
    r.document(kind, payload)
}

pub fn serialize(doc: &Document) -> String {
    let mut top = Map::new();
    top.insert("format_version".into(), FORMAT_VERSION.into());
    top.insert("kind".into(), doc.kind().name().into());
    top.insert("payload".into(), payload_value(doc));
    let mut text = serde_json::to_string_pretty(&Value::Object(top)).expect("values serialize");
    text.push('\n');
    text
}

pub fn scalar_value(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn scalars(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(scalar_value).collect())
}

pub fn matrix_value(m: &Matrix<Rational>) -> Value {
    Value::Array((0..m.rows()).map(|i| scalars(m.row(i))).collect())
}

fn object(entries: Vec<(&str, Value)>) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

fn algebra_value(a: &LeibnizAlgebra<Rational>) -> Value {
    let d = a.dim();
    let c = (0..d)
        .map(|i| Value::Array((0..d).map(|j| scalars(a.bracket_basis(i, j))).collect()))
        .collect();
    let mut entries = vec![("dim", Value::from(d)), ("c", Value::Array(c))];
    if let Some(names) = a.basis_names() {
        entries.push(("basis_names", Value::from(names.to_vec())));
    }
    object(entries)
}

fn structure_value(s: &MrbStructure<Rational>) -> Value {
    object(vec![
        ("algebra", algebra_value(&s.algebra)),
        ("operator", matrix_value(s.operator.matrix())),
        ("weight", scalar_value(&s.weight)),
    ])
}

fn actions(rep: &Representation<Rational>) -> Vec<(&'static str, Value)> {
    vec![
        ("dim", Value::from(rep.dim())),
        ("left", Value::Array(rep.left().iter().map(matrix_value).collect())),
        ("right", Value::Array(rep.right().iter().map(matrix_value).collect())),
    ]
}

fn fiber_value(r: &MrbRepresentation<Rational>) -> Value {
    let mut entries = actions(&r.rep);
    entries.push(("operator", matrix_value(r.operator.matrix())));
    object(entries)
}

pub fn cochain_value(x: &MrblaCochain<Rational>) -> Value {
    let mut entries = vec![
        ("degree", Value::from(x.degree())),
        ("dim_v", Value::from(x.dim_v())),
        ("dim_g", Value::from(x.dim_g())),
        ("la", scalars(x.la.coeffs())),
    ];
    if let Some(g) = &x.mrbo {
        entries.push(("mrbo", scalars(g.coeffs())));
    }
    object(entries)
}

fn payload_value(doc: &Document) -> Value {
    match doc {
        Document::Algebra(a) => algebra_value(a),
        Document::MrbStructure(s) => structure_value(s),
        Document::Representation { algebra, rep } => {
            let mut entries = actions(rep);
            entries.push(("algebra", algebra_value(algebra)));
            object(entries)
        }
        Document::MrbRepresentation { structure, rep } => {
            let Value::Object(mut map) = fiber_value(rep) else { unreachable!() };
            map.insert("structure".into(), structure_value(structure));
            Value::Object(map)
        }
        Document::Cochain(x) => cochain_value(x),
        Document::Deformation(defm) => object(vec![
            ("base", structure_value(defm.base())),
            ("order", Value::from(defm.order())),
            ("mu", Value::Array(defm.mu().iter().map(|m| scalars(m.coeffs())).collect())),
            (
                "operators",
                Value::Array(defm.operators().iter().map(|t| matrix_value(t.matrix())).collect()),
            ),
        ]),
        Document::Isomorphism(iso) => object(vec![
            ("dim", Value::from(iso.dim())),
            ("order", Value::from(iso.order())),
            ("psi", Value::Array(iso.psi().iter().map(|p| matrix_value(p.matrix())).collect())),
        ]),
        Document::Extension(ext) => object(vec![
            ("base", structure_value(&ext.base)),
            ("fiber", fiber_value(&ext.fiber)),
            ("total", structure_value(&ext.total)),
        ]),
        Document::Section(map) => object(vec![("matrix", matrix_value(map.matrix()))]),
        Document::Report(map) => Value::Object(map.clone()),
    }
}

/// A value together with its JSON path.
type At<'a> = (&'a Value, String);

struct Obj<'a> {
    map: &'a Map<String, Value>,
    path: String,
    strict: bool,
    seen: Vec<&'static str>,
}

impl<'a> Obj<'a> {
    fn opt(&mut self, key: &'static str) -> Option<At<'a>> {
        self.seen.push(key);
        self.map.get(key).map(|v| (v, format!("{}.{key}", self.path)))
    }

    fn req(&mut self, key: &'static str) -> Res<At<'a>> {
        self.opt(key)
            .ok_or_else(|| semantic(&self.path, format!("missing field `{key}`")))
    }

    fn finish(self) -> Res<()> {
        if self.strict {
            if let Some(k) = self.map.keys().find(|k| !self.seen.contains(&k.as_str())) {
                return Err(semantic(&format!("{}.{k}", self.path), "unknown field"));
            }
        }
        Ok(())
    }
}

struct Reader {
    strict: bool,
}

impl Reader {
    fn object<'a>(&self, v: &'a Value, path: &str) -> Res<Obj<'a>> {
        match v {
            Value::Object(map) => Ok(Obj {
                map,
                path: path.to_string(),
                strict: self.strict,
                seen: Vec::new(),
            }),
            _ => Err(semantic(path, "expected an object")),
        }
    }

    fn string<'a>(&self, (v, path): At<'a>) -> Res<&'a str> {
        v.as_str().ok_or_else(|| semantic(&path, "expected a string"))
    }

    fn count(&self, (v, path): At<'_>) -> Res<usize> {
        v.as_u64()
            .and_then(|n| usize::try_from(n).ok())
            .ok_or_else(|| semantic(&path, "expected a nonnegative integer"))
    }

    fn positive(&self, at: At<'_>) -> Res<usize> {
        let path = at.1.clone();
        match self.count(at)? {
            0 => Err(semantic(&path, "dimension must be positive")),
            n => Ok(n),
        }
    }

    fn array<'a>(&self, (v, path): At<'a>, len: Option<usize>) -> Res<Vec<At<'a>>> {
        let items = v.as_array().ok_or_else(|| semantic(&path, "expected an array"))?;
        if let Some(n) = len {
            if items.len() != n {
                return Err(semantic(&path, format!("expected {n} entries, found {}", items.len())));
            }
        }
        Ok(items
            .iter()
            .enumerate()
            .map(|(i, x)| (x, format!("{path}[{i}]")))
            .collect())
    }

    fn scalar(&self, (v, path): At<'_>) -> Res<Rational> {
        match v {
            Value::String(s) => parse_scalar(s, self.strict).map_err(|m| semantic(&path, m)),
            Value::Number(n) if !self.strict => n
                .as_i64()
                .map(|i| Rational::from_integer(i.into()))
                .ok_or_else(|| semantic(&path, "only integer numbers are accepted")),
            _ => Err(semantic(&path, "expected a rational string such as \"-3/4\"")),
        }
    }

    fn scalars(&self, at: At<'_>, len: usize) -> Res<Vec<Rational>> {
        self.array(at, Some(len))?.into_iter().map(|x| self.scalar(x)).collect()
    }

    fn matrix(&self, at: At<'_>, rows: usize, cols: usize) -> Res<Matrix<Rational>> {
        let data = self
            .array(at, Some(rows))?
            .into_iter()
            .map(|row| self.scalars(row, cols))
            .collect::<Res<Vec<_>>>()?;
        Ok(Matrix::from_rows(data).expect("shape checked while reading"))
    }

    fn matrices(&self, at: At<'_>, count: usize, n: usize) -> Res<Vec<Matrix<Rational>>> {
        self.array(at, Some(count))?
            .into_iter()
            .map(|m| self.matrix(m, n, n))
            .collect()
    }

    fn algebra(&self, at: At<'_>) -> Res<LeibnizAlgebra<Rational>> {
        let path = at.1.clone();
        let mut o = self.object(at.0, &at.1)?;
        let d = self.positive(o.req("dim")?)?;
        let mut c = Vec::with_capacity(d * d * d);
        for row in self.array(o.req("c")?, Some(d))? {
            for entry in self.array(row, Some(d))? {
                c.extend(self.scalars(entry, d)?);
            }
        }
        let names = match o.opt("basis_names") {
            Some(at) => Some(
                self.array(at, Some(d))?
                    .into_iter()
                    .map(|x| self.string(x).map(str::to_string))
                    .collect::<Res<Vec<_>>>()?,
            ),
            None => None,
        };
        o.finish()?;
        let alg = LeibnizAlgebra::new(d, c).map_err(|e| semantic(&path, e.to_string()))?;
        match names {
            Some(n) => alg.with_basis_names(n).map_err(|e| semantic(&path, e.to_string())),
            None => Ok(alg),
        }
    }

    fn structure(&self, at: At<'_>) -> Res<MrbStructure<Rational>> {
        let path = at.1.clone();
        let mut o = self.object(at.0, &at.1)?;
        let algebra = self.algebra(o.req("algebra")?)?;
        let d = algebra.dim();
        let op = self.matrix(o.req("operator")?, d, d)?;
        let weight = self.scalar(o.req("weight")?)?;
        o.finish()?;
        MrbStructure::new(algebra, LinearOperator::new(op), weight).map_err(|e| semantic(&path, e.to_string()))
    }

    /// Reads `dim`, `left`, `right` and optionally `operator` from `o`.
    fn actions(
        &self,
        o: &mut Obj<'_>,
        algebra_dim: usize,
        with_operator: bool,
    ) -> Res<(Representation<Rational>, Option<Matrix<Rational>>)> {
        let m = self.positive(o.req("dim")?)?;
        let left = self.matrices(o.req("left")?, algebra_dim, m)?;
        let right = self.matrices(o.req("right")?, algebra_dim, m)?;
        let op = if with_operator {
            Some(self.matrix(o.req("operator")?, m, m)?)
        } else {
            None
        };
        let rep = Representation::new(m, left, right).map_err(|e| semantic(&o.path, e.to_string()))?;
        Ok((rep, op))
    }

    fn fiber(&self, at: At<'_>, algebra_dim: usize) -> Res<MrbRepresentation<Rational>> {
        let mut o = self.object(at.0, &at.1)?;
        let (rep, op) = self.actions(&mut o, algebra_dim, true)?;
        let path = o.path.clone();
        o.finish()?;
        MrbRepresentation::new(rep, LinearOperator::new(op.expect("requested"))).map_err(|e| semantic(&path, e.to_string()))
    }

    fn cochain(&self, at: At<'_>) -> Res<MrblaCochain<Rational>> {
        let path = at.1.clone();
        let mut o = self.object(at.0, &at.1)?;
        let n = self.count(o.req("degree")?)?;
        let m = self.positive(o.req("dim_v")?)?;
        let d = self.positive(o.req("dim_g")?)?;
        let la = self.scalars(o.req("la")?, m * d.pow(n as u32))?;
        let mrbo = match (o.opt("mrbo"), n) {
            (None, 0) => None,
            (None, _) => return Err(semantic(&path, "missing field `mrbo` for positive degree")),
            (Some(at), 0) => return Err(semantic(&at.1, "degree-0 cochains have no `mrbo` part")),
            (Some(at), n) => Some(self.scalars(at, m * d.pow(n as u32 - 1))?),
        };
        o.finish()?;
        let la = Cochain::from_coeffs(n, m, d, la).map_err(|e| semantic(&path, e.to_string()))?;
        let mrbo = mrbo
            .map(|g| Cochain::from_coeffs(n - 1, m, d, g))
            .transpose()
            .map_err(|e| semantic(&path, e.to_string()))?;
        MrblaCochain::new(la, mrbo).map_err(|e| semantic(&path, e.to_string()))
    }

    fn document(&self, kind: Kind, at: At<'_>) -> Res<Document> {
        let path = at.1.clone();
        let wrap = |e: mrbla_core::Error| semantic(&path, e.to_string());
        if kind == Kind::Report {
            return match at.0 {
                Value::Object(map) => Ok(Document::Report(map.clone())),
                _ => Err(semantic(&path, "expected an object")),
            };
        }
        if matches!(kind, Kind::Algebra) {
            return self.algebra(at).map(Document::Algebra);
        }
        if matches!(kind, Kind::MrbStructure) {
            return self.structure(at).map(Document::MrbStructure);
        }
        if matches!(kind, Kind::Cochain) {
            return self.cochain(at).map(Document::Cochain);
        }
        let mut o = self.object(at.0, &at.1)?;
        let doc = match kind {
            Kind::Representation => {
                let algebra = self.algebra(o.req("algebra")?)?;
                let (rep, _) = self.actions(&mut o, algebra.dim(), false)?;
                Document::Representation { algebra, rep }
            }
            Kind::MrbRepresentation => {
                let structure = self.structure(o.req("structure")?)?;
                let (rep, op) = self.actions(&mut o, structure.dim(), true)?;
                let rep = MrbRepresentation::new(rep, LinearOperator::new(op.expect("requested"))).map_err(wrap)?;
                Document::MrbRepresentation { structure, rep }
            }
            Kind::Deformation => {
                let base = self.structure(o.req("base")?)?;
                let d = base.dim();
                let order = self.count(o.req("order")?)?;
                let mu = self
                    .array(o.req("mu")?, Some(order + 1))?
                    .into_iter()
                    .map(|m| {
                        let p = m.1.clone();
                        Cochain::from_coeffs(2, d, d, self.scalars(m, d * d * d)?).map_err(|e| semantic(&p, e.to_string()))
                    })
                    .collect::<Res<Vec<_>>>()?;
                let ops = self.matrices(o.req("operators")?, order + 1, d)?;
                let ops = ops.into_iter().map(LinearOperator::new).collect();
                Document::Deformation(TruncatedDeformation::new(base, mu, ops).map_err(wrap)?)
            }
            Kind::Isomorphism => {
                let d = self.positive(o.req("dim")?)?;
                let order = self.count(o.req("order")?)?;
                let psi = self.matrices(o.req("psi")?, order + 1, d)?;
                let psi = psi.into_iter().map(LinearOperator::new).collect();
                Document::Isomorphism(TruncatedIsomorphism::new(psi).map_err(wrap)?)
            }
            Kind::Extension => {
                let base = self.structure(o.req("base")?)?;
                let fiber = self.fiber(o.req("fiber")?, base.dim())?;
                let total = self.structure(o.req("total")?)?;
                Document::Extension(AbelianExtension::from_parts(base, fiber, total).map_err(wrap)?)
            }
            Kind::Section => {
                let at = o.req("matrix")?;
                let rows = self.array(at.clone(), None)?;
                let cols = rows
                    .first()
                    .and_then(|r| r.0.as_array())
                    .map_or(0, Vec::len);
                if rows.is_empty() || cols == 0 {
                    return Err(semantic(&at.1, "section matrix must be nonempty"));
                }
                Document::Section(LinearOperator::new(self.matrix(at, rows.len(), cols)?))
            }
            Kind::Algebra | Kind::MrbStructure | Kind::Cochain | Kind::Report => unreachable!(),
        };
        o.finish()?;
        Ok(doc)
    }
}

/// Parses `"p"` or `"p/q"`. Strict mode requires the canonical spelling.
pub fn parse_scalar(s: &str, strict: bool) -> Result<Rational, String> {
    let bad = || format!("`{s}` is not a rational number");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let is_int = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || den.is_some_and(|d| !is_int(d)) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(format!("`{s}` has a zero denominator"));
    }
    if strict && d.is_negative() {
        return Err(format!("`{s}` is not canonical: the denominator must be positive"));
    }
    let q = Rational::new(n, d);
    if strict && q.to_string() != s {
        return Err(format!("`{s}` is not canonical, write `{q}`"));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mrbla_core::catalog;

    fn strict() -> ParseOptions {
        ParseOptions::default()
    }

    #[test]
    fn canonical_scalars() {
        assert_eq!(parse_scalar("-3/4", true).unwrap().to_string(), "-3/4");
        for bad in ["2/4", "1/1", "-0", "+1", "3/-4", "01", "1.5", "", "1/0", " 1"] {
            assert!(parse_scalar(bad, true).is_err(), "{bad}");
        }
        assert_eq!(parse_scalar("2/4", false).unwrap().to_string(), "1/2");
        assert_eq!(parse_scalar("3/-4", false).unwrap().to_string(), "-3/4");
    }

    #[test]
    fn algebra_round_trip_is_byte_identical() {
        let text = serialize(&Document::Algebra(catalog::example_algebra()));
        assert!(text.contains("\"1\""));
        let doc = parse(&text, strict()).unwrap();
        assert_eq!(serialize(&doc), text);
        let Document::Algebra(a) = doc else { panic!() };
        assert_eq!(a.constant(1, 0, 0).to_string(), "1");
        assert_eq!(a.constant(1, 1, 0).to_string(), "1");
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert!(matches!(parse("", strict()), Err(DocError::Syntax { line: 1, .. })));
        let err = parse("{\n  \"kind\": ,\n}", strict()).unwrap_err();
        assert!(matches!(err, DocError::Syntax { line: 2, .. }), "{err}");
    }

    #[test]
    fn unknown_fields_are_located() {
        let text = serialize(&Document::MrbStructure(catalog::example_structure()));
        let edited = text.replacen("\"weight\"", "\"colour\": \"red\",\n    \"weight\"", 1);
        let err = parse(&edited, strict()).unwrap_err();
        assert_eq!(err.to_string(), "$.payload.colour: unknown field");
        assert!(parse(&edited, ParseOptions { strict: false }).is_ok());
    }

    #[test]
    fn non_canonical_scalar_is_semantic_error() {
        let text = serialize(&Document::MrbStructure(catalog::example_structure())).replace("\"-1\"\n", "\"-2/2\"\n");
        let err = parse(&text, strict()).unwrap_err();
        assert!(matches!(err, DocError::Semantic { ref path, .. } if path == "$.payload.weight"), "{err}");
    }

    #[test]
    fn every_kind_round_trips() {
        use mrbla_core::validate::adjoint_rep;
        let s = catalog::example_structure::<Rational>();
        let r = adjoint_rep(&s).unwrap();
        let ext = mrbla_core::extension::build_extension(&s, &r, &Cochain::zero(2, 2, 2), &Cochain::zero(1, 2, 2)).unwrap();
        let mut report = Map::new();
        report.insert("ok".into(), Value::Bool(true));
        let docs = vec![
            Document::Algebra(catalog::example_algebra()),
            Document::MrbStructure(s.clone()),
            Document::Representation {
                algebra: s.algebra.clone(),
                rep: r.rep.clone(),
            },
            Document::MrbRepresentation {
                structure: s.clone(),
                rep: r.clone(),
            },
            Document::Cochain(MrblaCochain::zero(2, 2, 2)),
            Document::Cochain(MrblaCochain::zero(0, 2, 2)),
            Document::Deformation(TruncatedDeformation::constant(s.clone(), 2)),
            Document::Isomorphism(TruncatedIsomorphism::identity(2, 2)),
            Document::Section(mrbla_core::extension::canonical_section(&ext).map().clone()),
            Document::Extension(ext),
            Document::Report(report),
        ];
        for doc in docs {
            let text = serialize(&doc);
            let back = parse(&text, strict()).unwrap_or_else(|e| panic!("{}: {e}", doc.kind()));
            assert_eq!(back, doc);
            assert_eq!(serialize(&back), text);
        }
    }
}
