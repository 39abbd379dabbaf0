//! Command-line surface. Every invocation prints a single report, either as
//! plain text or as a `report` document.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use mrbla_core::audit::audit_chain_map;
use mrbla_core::cohomology::{classify, cohomology_table};
use mrbla_core::deformation::{infinitesimal, push_forward, reduce_to_constant, verify_truncated};
use mrbla_core::extension::{build_extension, canonical_section, extension_report, extract_cocycle, same_class, Section};
use mrbla_core::induced::{induced_algebra, induced_representation};
use mrbla_core::validate::{
    adjoint_rep, validate_leibniz, validate_mrb, validate_mrb_representation, validate_representation,
};
use mrbla_core::{
    Complex, ComplexOptions, DegreeZero, Error, MrbRepresentation, MrbStructure, MrblaCochain, PhiVariant, Rational,
    ViolationReport,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::document::{cochain_value, matrix_value, parse, scalar_value, serialize, DocError, Document, ParseOptions};

#[derive(Debug, Parser)]
#[command(name = "mrbla", version, about = "Exact computations for modified Rota-Baxter Leibniz algebras")]
pub struct Cli {
    /// Report style.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Human)]
    pub output: OutputMode,
    /// Seed for randomized audits.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Reject unknown fields and non-canonical scalars (the default).
    #[arg(long, global = true, conflicts_with = "lenient")]
    pub strict: bool,
    /// Ignore unknown fields, accept integer numbers and unreduced fractions.
    #[arg(long, global = true)]
    pub lenient: bool,
    /// Coefficients of the map from the algebra complex to the operator complex.
    #[arg(long, global = true, env = "MRB_PHI_VARIANT", default_value = "corrected")]
    pub phi_variant: PhiVariant,
    /// Second component of the degree-0 differential: zero, identity or omit.
    #[arg(long, global = true, default_value = "zero")]
    pub degree_zero: DegreeZero,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every validator that applies to the document.
    Check { file: PathBuf },
    /// Write the induced algebra, or the induced representation.
    Induce {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Table of cohomology dimensions.
    Cohomology {
        file: PathBuf,
        #[arg(long, default_value = "mrbla")]
        complex: Complex,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Decide whether a cochain pair is a cocycle or a coboundary.
    Classify { file: PathBuf, cochain: PathBuf },
    /// Randomized audit of the chain-map identity for the selected variant.
    Lemma42 {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Truncated formal deformations.
    #[command(subcommand)]
    Deform(DeformCommand),
    /// Abelian extensions.
    #[command(subcommand)]
    Extend(ExtendCommand),
}

#[derive(Debug, Subcommand)]
pub enum DeformCommand {
    /// Check the deformation equations order by order.
    Verify { file: PathBuf },
    /// Transport a deformation along a truncated isomorphism.
    Push {
        file: PathBuf,
        iso: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Eliminate leading coboundary terms until a non-coboundary or the constant deformation remains.
    Reduce {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExtendCommand {
    /// Build the split extension of a 2-cocycle.
    Build {
        file: PathBuf,
        cocycle: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Extract the cocycle of an extension through a section.
    Extract {
        file: PathBuf,
        #[arg(long)]
        section: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compare the cohomology classes of two extensions.
    SameClass { first: PathBuf, second: PathBuf },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_ILL_DEFINED: i32 = 3;

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Malformed(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    IllDefined(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Malformed(_) => EXIT_MALFORMED,
            Failure::Validation(_) => EXIT_VALIDATION,
            Failure::IllDefined(_) => EXIT_ILL_DEFINED,
        }
    }

    fn label(&self) -> &'static str {
        match self {
            Failure::Malformed(_) => "malformed",
            Failure::Validation(_) => "validation",
            Failure::IllDefined(_) => "ill-defined",
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Malformed(_) | Error::DimensionMismatch(_) | Error::Unsupported(_) => Failure::Malformed(e.to_string()),
            Error::IllDefinedComplex(_) => Failure::IllDefined(e.to_string()),
            Error::Precondition { .. } | Error::CocycleCondition(_) | Error::WitnessMismatch(_) => {
                Failure::Validation(e.to_string())
            }
        }
    }
}

/// What a command produced: a report payload, text lines and an exit code.
struct Outcome {
    code: i32,
    payload: Map<String, Value>,
    lines: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            code: EXIT_OK,
            payload: Map::new(),
            lines: Vec::new(),
        }
    }

    fn set(&mut self, key: &str, value: Value) {
        self.payload.insert(key.to_string(), value);
    }

    fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    fn fail(&mut self, code: i32) {
        self.code = self.code.max(code);
    }
}

type Res<T> = Result<T, Failure>;

struct Context {
    parse: ParseOptions,
    opts: ComplexOptions,
    seed: u64,
}

impl Context {
    fn load(&self, path: &Path) -> Res<Document> {
        let text = fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))?;
        parse(&text, self.parse).map_err(|e: DocError| Failure::Malformed(format!("{}: {e}", path.display())))
    }

    /// A structure with a representation; bare structures use the adjoint one.
    fn load_pair(&self, path: &Path) -> Res<(MrbStructure<Rational>, MrbRepresentation<Rational>)> {
        match self.load(path)? {
            Document::MrbStructure(s) => {
                let r = adjoint_rep(&s)?;
                Ok((s, r))
            }
            Document::MrbRepresentation { structure, rep } => {
                validate_mrb_representation(&structure, &rep)?.into_result("representation")?;
                Ok((structure, rep))
            }
            other => Err(wrong_kind(path, &other, "mrb_structure or mrb_representation")),
        }
    }
}

fn wrong_kind(path: &Path, doc: &Document, expected: &str) -> Failure {
    Failure::Malformed(format!("{}: expected a {expected} document, found {}", path.display(), doc.kind()))
}

trait IntoResult {
    fn into_result(self, what: &str) -> Res<()>;
}

impl IntoResult for ViolationReport<Rational> {
    fn into_result(self, what: &str) -> Res<()> {
        if self.ok() {
            Ok(())
        } else {
            Err(Failure::Validation(format!("{what} fails its axioms: {}", self.summary())))
        }
    }
}

fn write_document(path: &Path, doc: &Document) -> Res<()> {
    fs::write(path, serialize(doc)).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

/// Writes `doc` to `out` if given, otherwise embeds it in the report.
fn emit(outcome: &mut Outcome, out: Option<&Path>, doc: &Document) -> Res<()> {
    match out {
        Some(path) => {
            write_document(path, doc)?;
            outcome.set("written", Value::String(path.display().to_string()));
            outcome.line(format!("wrote {} to {}", doc.kind(), path.display()));
        }
        None => {
            let value: Value = serde_json::from_str(&serialize(doc)).expect("serializer emits JSON");
            outcome.set("result", value);
            outcome.line(serialize(doc).trim_end().to_string());
        }
    }
    Ok(())
}

fn report_value(report: &ViolationReport<Rational>) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "axiom_id": v.axiom_id,
                "basis_indices": v.basis_indices,
                "residual": v.residual.iter().map(scalar_value).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "ok": report.ok(), "checked": report.checked, "violations": violations })
}

fn push_report_lines(outcome: &mut Outcome, label: &str, report: &ViolationReport<Rational>) {
    if report.ok() {
        outcome.line(format!("{label}: ok ({})", report.checked.join(", ")));
    } else {
        outcome.line(format!("{label}: FAILED"));
        for v in &report.violations {
            let residual: Vec<String> = v.residual.iter().map(ToString::to_string).collect();
            outcome.line(format!("  {} at {:?}: residual [{}]", v.axiom_id, v.basis_indices, residual.join(", ")));
        }
    }
}

type Step<'a> = Box<dyn FnOnce() -> Result<ViolationReport<Rational>, Error> + 'a>;

/// Runs validators in order, stopping before one whose preconditions failed.
fn check_chain(outcome: &mut Outcome, steps: Vec<Step<'_>>) -> Res<()> {
    let mut merged = ViolationReport::new();
    for step in steps {
        let report = step()?;
        let ok = report.ok();
        merged.merge(report);
        if !ok {
            break;
        }
    }
    push_report_lines(outcome, "axioms", &merged);
    outcome.set("report", report_value(&merged));
    if !merged.ok() {
        outcome.fail(EXIT_VALIDATION);
    }
    Ok(())
}

fn check(ctx: &Context, file: &Path, outcome: &mut Outcome) -> Res<()> {
    let doc = ctx.load(file)?;
    outcome.set("kind", Value::String(doc.kind().to_string()));
    match &doc {
        Document::Algebra(a) => check_chain(outcome, vec![Box::new(|| Ok(validate_leibniz(a)))]),
        Document::MrbStructure(s) => check_chain(
            outcome,
            vec![Box::new(|| Ok(validate_leibniz(&s.algebra))), Box::new(|| validate_mrb(s))],
        ),
        Document::Representation { algebra, rep } => check_chain(
            outcome,
            vec![
                Box::new(|| Ok(validate_leibniz(algebra))),
                Box::new(|| validate_representation(algebra, rep)),
            ],
        ),
        Document::MrbRepresentation { structure, rep } => check_chain(
            outcome,
            vec![
                Box::new(|| Ok(validate_leibniz(&structure.algebra))),
                Box::new(|| validate_mrb(structure)),
                Box::new(|| validate_representation(&structure.algebra, &rep.rep)),
                Box::new(|| validate_mrb_representation(structure, rep)),
            ],
        ),
        Document::Deformation(defm) => deform_verify(ctx, defm, outcome),
        Document::Extension(ext) => check_chain(outcome, vec![Box::new(|| extension_report(&ext.total))]),
        _ => {
            outcome.line(format!("{} document is well formed", doc.kind()));
            outcome.set("report", json!({ "ok": true, "checked": [], "violations": [] }));
            Ok(())
        }
    }
}

fn induce(ctx: &Context, file: &Path, out: &Path, outcome: &mut Outcome) -> Res<()> {
    let doc = match ctx.load(file)? {
        Document::MrbStructure(s) => {
            let induced = induced_algebra(&s)?;
            let mut report = validate_leibniz(&induced.algebra);
            report.merge(validate_mrb(&induced)?);
            push_report_lines(outcome, "induced structure", &report);
            outcome.set("report", report_value(&report));
            Document::MrbStructure(induced)
        }
        Document::MrbRepresentation { structure, rep } => {
            let algebra = induced_algebra(&structure)?;
            let induced = induced_representation(&structure, &rep)?;
            let report = validate_mrb_representation(&algebra, &induced)?;
            push_report_lines(outcome, "induced representation", &report);
            outcome.set("report", report_value(&report));
            Document::MrbRepresentation {
                structure: algebra,
                rep: induced,
            }
        }
        other => return Err(wrong_kind(file, &other, "mrb_structure or mrb_representation")),
    };
    emit(outcome, Some(out), &doc)
}

fn options_value(opts: ComplexOptions) -> Value {
    json!({ "phi_variant": opts.variant.name(), "degree_zero": opts.degree_zero.name() })
}

fn cohomology(ctx: &Context, file: &Path, complex: Complex, max_degree: usize, outcome: &mut Outcome) -> Res<()> {
    let (s, r) = ctx.load_pair(file)?;
    outcome.set("complex", Value::String(complex.name().into()));
    outcome.set("options", options_value(ctx.opts));
    let mut rows = Vec::new();
    for (n, row) in cohomology_table(complex, &s, &r, max_degree, ctx.opts)?.into_iter().enumerate() {
        match row {
            Ok(rep) => {
                outcome.line(format!(
                    "H^{n} = {} (cochains {}, cocycles {}, coboundaries {})",
                    rep.betti, rep.dim_cochains, rep.dim_cocycles, rep.dim_coboundaries
                ));
                rows.push(json!({
                    "degree": n,
                    "dim_cochains": rep.dim_cochains,
                    "dim_cocycles": rep.dim_cocycles,
                    "dim_coboundaries": rep.dim_coboundaries,
                    "betti": rep.betti,
                }));
            }
            Err(e) => {
                outcome.line(format!("H^{n}: undefined: {e}"));
                rows.push(json!({ "degree": n, "error": e.to_string() }));
                outcome.fail(EXIT_ILL_DEFINED);
            }
        }
    }
    outcome.set("rows", Value::Array(rows));
    Ok(())
}

fn classify_cmd(ctx: &Context, file: &Path, cochain: &Path, outcome: &mut Outcome) -> Res<()> {
    let (s, r) = ctx.load_pair(file)?;
    let x = match ctx.load(cochain)? {
        Document::Cochain(x) => x,
        other => return Err(wrong_kind(cochain, &other, "cochain")),
    };
    let c = classify(&s, &r, &x, ctx.opts)?;
    outcome.set("options", options_value(ctx.opts));
    outcome.set("degree", Value::from(x.degree()));
    outcome.set("is_cocycle", Value::Bool(c.is_cocycle));
    outcome.set("is_coboundary", Value::Bool(c.is_coboundary));
    outcome.set("witness", c.witness.as_ref().map_or(Value::Null, cochain_value));
    outcome.line(format!("degree {}: cocycle {}, coboundary {}", x.degree(), c.is_cocycle, c.is_coboundary));
    if let Some(w) = &c.witness {
        let coeffs: Vec<String> = w.to_vector().iter().map(ToString::to_string).collect();
        outcome.line(format!("witness: [{}]", coeffs.join(", ")));
    }
    Ok(())
}

fn lemma42(ctx: &Context, file: &Path, max_degree: usize, trials: usize, outcome: &mut Outcome) -> Res<()> {
    let (s, r) = ctx.load_pair(file)?;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let audit = audit_chain_map(&s, &r, max_degree, trials, ctx.opts.variant, &mut rng)?;
    let degrees: Vec<Value> = audit
        .degrees
        .iter()
        .map(|d| json!({ "degree": d.degree, "trials": d.trials, "failures": d.failures }))
        .collect();
    outcome.set(
        "instance",
        json!({
            "file": file.display().to_string(),
            "dim_g": s.dim(),
            "dim_v": r.dim(),
            "weight": scalar_value(&s.weight),
        }),
    );
    outcome.set("seed", Value::from(ctx.seed));
    outcome.set("phi_variant", Value::String(audit.variant.name().into()));
    outcome.set("degrees", Value::Array(degrees));
    outcome.set("passed", Value::Bool(audit.passed()));
    for d in &audit.degrees {
        outcome.line(format!(
            "variant {} degree {}: {}/{} trials hold",
            audit.variant,
            d.degree,
            d.trials - d.failures,
            d.trials
        ));
    }
    if !audit.passed() {
        outcome.fail(EXIT_ILL_DEFINED);
    }
    Ok(())
}

fn deform_verify(ctx: &Context, defm: &mrbla_core::TruncatedDeformation<Rational>, outcome: &mut Outcome) -> Res<()> {
    let reports = verify_truncated(defm)?;
    let all_ok = reports.iter().all(ViolationReport::ok);
    for (n, report) in reports.iter().enumerate() {
        push_report_lines(outcome, &format!("order {n}"), report);
    }
    outcome.set("orders", Value::Array(reports.iter().map(report_value).collect()));
    if !all_ok {
        outcome.fail(EXIT_VALIDATION);
        return Ok(());
    }
    if defm.order() >= 1 {
        match infinitesimal(defm, ctx.opts) {
            Ok((x, c)) => {
                outcome.line(format!("infinitesimal: cocycle {}, coboundary {}", c.is_cocycle, c.is_coboundary));
                outcome.set(
                    "infinitesimal",
                    json!({ "cochain": cochain_value(&x), "is_cocycle": c.is_cocycle, "is_coboundary": c.is_coboundary }),
                );
            }
            Err(e) => {
                outcome.line(format!("infinitesimal: {e}"));
                outcome.set("infinitesimal", json!({ "error": e.to_string() }));
            }
        }
    }
    Ok(())
}

fn load_deformation(ctx: &Context, path: &Path) -> Res<mrbla_core::TruncatedDeformation<Rational>> {
    match ctx.load(path)? {
        Document::Deformation(d) => Ok(d),
        other => Err(wrong_kind(path, &other, "deformation")),
    }
}

fn deform(ctx: &Context, cmd: &DeformCommand, outcome: &mut Outcome) -> Res<()> {
    match cmd {
        DeformCommand::Verify { file } => deform_verify(ctx, &load_deformation(ctx, file)?, outcome),
        DeformCommand::Push { file, iso, out } => {
            let defm = load_deformation(ctx, file)?;
            let iso = match ctx.load(iso)? {
                Document::Isomorphism(i) => i,
                other => return Err(wrong_kind(iso, &other, "isomorphism")),
            };
            let pushed = push_forward(&defm, &iso)?;
            emit(outcome, out.as_deref(), &Document::Deformation(pushed))
        }
        DeformCommand::Reduce { file, out } => {
            let defm = load_deformation(ctx, file)?;
            let red = reduce_to_constant(&defm, ctx.opts)?;
            let steps: Vec<Value> = red
                .steps
                .iter()
                .map(|st| {
                    json!({
                        "order": st.order,
                        "is_cocycle": st.classification.is_cocycle,
                        "is_coboundary": st.classification.is_coboundary,
                    })
                })
                .collect();
            for st in &red.steps {
                outcome.line(format!(
                    "order {}: cocycle {}, coboundary {}",
                    st.order, st.classification.is_cocycle, st.classification.is_coboundary
                ));
            }
            outcome.line(if red.constant {
                "reduced to the constant deformation"
            } else {
                "stopped at a term that is not a coboundary"
            });
            outcome.set("steps", Value::Array(steps));
            outcome.set("constant", Value::Bool(red.constant));
            emit(outcome, out.as_deref(), &Document::Deformation(red.deformation))
        }
    }
}

fn load_extension(ctx: &Context, path: &Path) -> Res<mrbla_core::AbelianExtension<Rational>> {
    match ctx.load(path)? {
        Document::Extension(e) => Ok(e),
        other => Err(wrong_kind(path, &other, "extension")),
    }
}

fn extend(ctx: &Context, cmd: &ExtendCommand, outcome: &mut Outcome) -> Res<()> {
    match cmd {
        ExtendCommand::Build { file, cocycle, out } => {
            let (s, r) = ctx.load_pair(file)?;
            let x = match ctx.load(cocycle)? {
                Document::Cochain(x) if x.degree() == 2 => x,
                Document::Cochain(x) => {
                    return Err(Failure::Malformed(format!("expected a degree-2 cochain, found degree {}", x.degree())))
                }
                other => return Err(wrong_kind(cocycle, &other, "cochain")),
            };
            let chi = x.mrbo.as_ref().expect("degree 2 has an operator part");
            let ext = build_extension(&s, &r, &x.la, chi)?;
            outcome.line(format!("extension of dimension {} is valid", ext.total.dim()));
            emit(outcome, out.as_deref(), &Document::Extension(ext))
        }
        ExtendCommand::Extract { file, section, out } => {
            let ext = load_extension(ctx, file)?;
            let sec = match section {
                None => canonical_section(&ext),
                Some(path) => match ctx.load(path)? {
                    Document::Section(map) => Section::new(&ext, map)?,
                    other => return Err(wrong_kind(path, &other, "section")),
                },
            };
            let (psi, chi) = extract_cocycle(&ext, &sec)?;
            let pair = MrblaCochain::new(psi, Some(chi))?;
            let c = classify(&ext.base, &ext.fiber, &pair, ctx.opts)?;
            outcome.set("is_cocycle", Value::Bool(c.is_cocycle));
            outcome.line(format!("extracted pair is a cocycle: {}", c.is_cocycle));
            emit(outcome, out.as_deref(), &Document::Cochain(pair))
        }
        ExtendCommand::SameClass { first, second } => {
            let e1 = load_extension(ctx, first)?;
            let e2 = load_extension(ctx, second)?;
            let cmp = same_class(&e1, &e2, ctx.opts)?;
            outcome.set("same_class", Value::Bool(cmp.same_class));
            outcome.set("witness", cmp.witness.as_ref().map_or(Value::Null, cochain_value));
            outcome.set(
                "isomorphism",
                cmp.isomorphism.as_ref().map_or(Value::Null, |m| matrix_value(m.matrix())),
            );
            outcome.line(format!("same class: {}", cmp.same_class));
            if let Some(iso) = &cmp.isomorphism {
                outcome.line(format!("isomorphism: {}", matrix_value(iso.matrix())));
            }
            Ok(())
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Check { .. } => "check",
        Command::Induce { .. } => "induce",
        Command::Cohomology { .. } => "cohomology",
        Command::Classify { .. } => "classify",
        Command::Lemma42 { .. } => "lemma42",
        Command::Deform(DeformCommand::Verify { .. }) => "deform verify",
        Command::Deform(DeformCommand::Push { .. }) => "deform push",
        Command::Deform(DeformCommand::Reduce { .. }) => "deform reduce",
        Command::Extend(ExtendCommand::Build { .. }) => "extend build",
        Command::Extend(ExtendCommand::Extract { .. }) => "extend extract",
        Command::Extend(ExtendCommand::SameClass { .. }) => "extend same-class",
    }
}

/// Executes `cli`, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let ctx = Context {
        parse: ParseOptions { strict: !cli.lenient },
        opts: ComplexOptions {
            variant: cli.phi_variant,
            degree_zero: cli.degree_zero,
        },
        seed: cli.seed,
    };
    let mut outcome = Outcome::new();
    let result = match &cli.command {
        Command::Check { file } => check(&ctx, file, &mut outcome),
        Command::Induce { file, out } => induce(&ctx, file, out, &mut outcome),
        Command::Cohomology {
            file,
            complex,
            max_degree,
        } => cohomology(&ctx, file, *complex, *max_degree, &mut outcome),
        Command::Classify { file, cochain } => classify_cmd(&ctx, file, cochain, &mut outcome),
        Command::Lemma42 {
            file,
            max_degree,
            trials,
        } => lemma42(&ctx, file, *max_degree, *trials, &mut outcome),
        Command::Deform(cmd) => deform(&ctx, cmd, &mut outcome),
        Command::Extend(cmd) => extend(&ctx, cmd, &mut outcome),
    };
    if let Err(f) = &result {
        outcome.fail(f.code());
        outcome.set("error", json!({ "kind": f.label(), "message": f.to_string() }));
    }
    outcome.set("command", Value::String(command_name(&cli.command).into()));
    outcome.set("exit_code", Value::from(outcome.code));
    let written = match cli.output {
        OutputMode::Machine => out.write_all(serialize(&Document::Report(outcome.payload)).as_bytes()),
        OutputMode::Human => {
            let mut res = Ok(());
            for line in &outcome.lines {
                res = res.and_then(|_| writeln!(out, "{line}"));
            }
            if let Err(f) = &result {
                res = res.and_then(|_| writeln!(err, "error: {f}"));
            }
            res
        }
    };
    if written.is_err() {
        return EXIT_MALFORMED;
    }
    outcome.code
}
