//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use mrbla::document::{parse, serialize, Document, ParseOptions};
use mrbla_core::audit::{audit_chain_map, random_cochain};
use mrbla_core::cochain::{assemble_matrix, d_full, partial_expanded, phi_matrix, Cochain};
use mrbla_core::cohomology::{betti, classify};
use mrbla_core::deformation::{infinitesimal, push_forward, rigidity_step, verify_truncated};
use mrbla_core::extension::{build_extension, canonical_section, extension_report, extract_cocycle, induced_rep_from_extension};
use mrbla_core::induced::{induced_algebra, induced_representation};
use mrbla_core::linalg::{rank, reduce, solve};
use mrbla_core::validate::{adjoint_rep, validate_leibniz, validate_morphism, validate_mrb, validate_mrb_representation};
use mrbla_core::{
    catalog, Complex, ComplexOptions, Matrix, MrbRepresentation, MrbStructure, MrblaCochain, PhiVariant, Rational,
    TruncatedDeformation, TruncatedIsomorphism,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn opts() -> ComplexOptions {
    ComplexOptions::default()
}

fn criterion_1() -> Outcome {
    let alg = catalog::example_algebra::<Rational>();
    let report = validate_leibniz(&alg);
    ensure(report.ok(), || format!("leibniz: {}", report.summary()))?;
    let s = catalog::example_structure::<Rational>();
    let report = validate_mrb(&s).map_err(|e| e.to_string())?;
    ensure(report.ok(), || format!("mrb: {}", report.summary()))?;
    Ok("8 basis triples and 4 basis pairs vanish".into())
}

fn criterion_2() -> Outcome {
    let instances = catalog::instances::<Rational>();
    for inst in &instances {
        let s = induced_algebra(&inst.structure).map_err(|e| e.to_string())?;
        ensure(validate_leibniz(&s.algebra).ok(), || format!("{}: induced bracket", inst.name))?;
        ensure(validate_mrb(&s).map_err(|e| e.to_string())?.ok(), || format!("{}: induced operator", inst.name))?;
        let r = induced_representation(&inst.structure, &inst.representation).map_err(|e| e.to_string())?;
        let report = validate_mrb_representation(&s, &r).map_err(|e| e.to_string())?;
        ensure(report.ok(), || format!("{}: induced representation", inst.name))?;
    }
    Ok(format!("{} instances", instances.len()))
}

fn expanded_matrix(s: &MrbStructure<Rational>, r: &MrbRepresentation<Rational>, n: usize) -> Matrix<Rational> {
    let (m, d) = (r.dim(), s.dim());
    let len = m * d.pow(n as u32);
    let cols: Vec<Vec<Rational>> = (0..len)
        .map(|i| partial_expanded(s, r, &Cochain::basis(n, m, d, i)).unwrap().into_coeffs())
        .collect();
    Matrix::from_columns(m * d.pow(n as u32 + 1), &cols).unwrap()
}

fn criterion_3() -> Outcome {
    let mut checks = 0;
    for inst in catalog::instances::<Rational>() {
        let (s, r) = (&inst.structure, &inst.representation);
        for complex in [Complex::La, Complex::Mrbo] {
            let mats: Vec<_> = (0..=4).map(|n| assemble_matrix(complex, s, r, n, opts()).unwrap()).collect();
            for n in 0..4 {
                ensure(mats[n + 1].mul(&mats[n]).is_zero(), || format!("{}: {complex} squares to nonzero at {n}", inst.name))?;
                checks += 1;
            }
            if complex == Complex::Mrbo {
                for (n, m) in mats.iter().enumerate() {
                    ensure(*m == expanded_matrix(s, r, n), || format!("{}: operator paths differ at {n}", inst.name))?;
                }
            }
        }
    }
    Ok(format!("{checks} compositions vanish, both operator paths agree through degree 4"))
}

fn criterion_4() -> Outcome {
    let mut printed = Vec::new();
    for (i, inst) in catalog::instances::<Rational>().into_iter().enumerate() {
        let (s, r) = (&inst.structure, &inst.representation);
        let seed = 4000 + i as u64;
        let run = |variant| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            audit_chain_map(s, r, 3, 20, variant, &mut rng).unwrap()
        };
        let corrected = run(PhiVariant::Corrected);
        ensure(corrected.passed(), || format!("{}: corrected fails at degree {:?}", inst.name, corrected.first_failure()))?;
        let printed_audit = run(PhiVariant::Printed);
        if s.weight.is_zero() {
            ensure(printed_audit.passed(), || format!("{}: printed fails at weight 0", inst.name))?;
            for n in 0..=4 {
                let a = phi_matrix(s, r, n, PhiVariant::Printed).unwrap();
                let b = phi_matrix(s, r, n, PhiVariant::Corrected).unwrap();
                ensure(a == b, || format!("{}: variants differ at weight 0", inst.name))?;
            }
        } else {
            printed.push(format!(
                "{}:{}",
                inst.name,
                printed_audit.first_failure().map_or("pass".to_string(), |n| format!("fails@{n}"))
            ));
        }
        let mats: Vec<_> = (0..=4).map(|n| assemble_matrix(Complex::Mrbla, s, r, n, opts()).unwrap()).collect();
        for n in 0..4 {
            ensure(mats[n + 1].mul(&mats[n]).is_zero(), || format!("{}: d∘d ≠ 0 at {n}", inst.name))?;
        }
    }
    let fails = printed.iter().filter(|p| p.contains("fails")).count();
    Ok(format!(
        "corrected holds through degree 3 everywhere; printed at nonzero weight fails on {fails}/{} instances",
        printed.len()
    ))
}

/// Rank by fraction-free elimination over the integers, written
/// independently of the engine's solver.
fn bareiss_rank(m: &Matrix<Rational>) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn criterion_5() -> Outcome {
    let s = catalog::abelian_zero::<Rational>(1);
    let r = adjoint_rep(&s).unwrap();
    let mut bettis = Vec::new();
    for n in 0..=3 {
        let rep = betti(Complex::Mrbla, &s, &r, n, opts()).map_err(|e| e.to_string())?;
        bettis.push(rep.betti);
    }
    ensure(bettis == [1, 2, 2, 2], || format!("betti numbers {bettis:?}"))?;
    let mut ranks = 0;
    for (name, s) in [("abelian1/zero", s), ("example/example-operator", catalog::example_structure())] {
        let r = adjoint_rep(&s).unwrap();
        for n in 0..=3 {
            let m = assemble_matrix(Complex::Mrbla, &s, &r, n, opts()).unwrap();
            let rep = betti(Complex::Mrbla, &s, &r, n, opts());
            let oracle = bareiss_rank(&m);
            ensure(rank(&m) == oracle, || format!("{name}: rank of d{n}"))?;
            if let Ok(rep) = rep {
                ensure(rep.dim_cocycles == m.cols() - oracle, || format!("{name}: cocycles in degree {n}"))?;
            }
            ranks += 1;
        }
    }
    Ok(format!("H = [1, 2, 2, 2]; {ranks} ranks reproduced by the integer oracle"))
}

fn random_op(d: usize, rng: &mut ChaCha8Rng) -> mrbla_core::LinearOperator<Rational> {
    random_cochain::<Rational, _>(1, d, d, rng).to_operator().unwrap()
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut count = 0;
    for inst in catalog::instances::<Rational>() {
        let (s, r) = (inst.structure.clone(), &inst.representation);
        let d = s.dim();
        let psi1 = random_op(d, &mut rng);
        let psi2 = random_op(d, &mut rng);
        let iso = TruncatedIsomorphism::from_terms(d, 3, &[psi1.clone(), psi2]).unwrap();
        let defm = push_forward(&TruncatedDeformation::constant(s.clone(), 3), &iso).map_err(|e| e.to_string())?;
        let reports = verify_truncated(&defm).map_err(|e| e.to_string())?;
        ensure(reports.iter().all(|x| x.ok()), || format!("{}: trivial deformation fails", inst.name))?;
        let (x, c) = infinitesimal(&defm, opts()).map_err(|e| e.to_string())?;
        ensure(c.is_cocycle && c.is_coboundary, || format!("{}: infinitesimal class", inst.name))?;

        let other = TruncatedIsomorphism::from_terms(d, 3, &[random_op(d, &mut rng), random_op(d, &mut rng)]).unwrap();
        let moved = push_forward(&defm, &other).map_err(|e| e.to_string())?;
        ensure(verify_truncated(&moved).unwrap().iter().all(|x| x.ok()), || format!("{}: pushed deformation", inst.name))?;
        let (y, _) = infinitesimal(&moved, opts()).map_err(|e| e.to_string())?;
        let d1 = assemble_matrix(Complex::Mrbla, &s, r, 1, opts()).unwrap();
        ensure(solve(&d1, &y.sub(&x).to_vector()).particular_solution.is_some(), || {
            format!("{}: infinitesimals differ outside im d1", inst.name)
        })?;

        let zero = vec![Rational::zero(); d];
        let out = rigidity_step(&defm, &Cochain::from_operator(&psi1), &zero, opts()).map_err(|e| e.to_string())?;
        ensure(out.term(1).is_zero(), || format!("{}: order-1 terms survive", inst.name))?;
        count += 1;
    }
    Ok(format!("{count} seeded order-3 trivial deformations"))
}

fn pair(x: &MrblaCochain<Rational>) -> (Cochain<Rational>, Cochain<Rational>) {
    (x.la.clone(), x.mrbo.clone().unwrap())
}

fn criterion_7() -> Outcome {
    let s = catalog::example_structure::<Rational>();
    let r = adjoint_rep(&s).unwrap();
    let d2 = assemble_matrix(Complex::Mrbla, &s, &r, 2, opts()).unwrap();
    let basis: Vec<MrblaCochain<Rational>> = reduce(&d2)
        .nullspace_basis
        .into_iter()
        .map(|v| MrblaCochain::from_vector(2, 2, 2, v).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (idx, x) in basis.iter().enumerate() {
        let (psi, chi) = pair(x);
        let ext = build_extension(&s, &r, &psi, &chi).map_err(|e| format!("cocycle {idx}: {e}"))?;
        ensure(extension_report(&ext.total).unwrap().ok(), || format!("cocycle {idx}: total structure"))?;
        ensure(validate_morphism(&ext.proj, &ext.total, &s).unwrap().ok(), || format!("cocycle {idx}: projection"))?;
        let s0 = canonical_section(&ext);
        ensure(extract_cocycle(&ext, &s0).unwrap() == (psi, chi), || format!("cocycle {idx}: round trip"))?;
        for _ in 0..20 {
            let beta = random_cochain::<Rational, _>(1, 2, 2, &mut rng);
            let s1 = s0.shifted(&ext, &beta).unwrap();
            let (p1, c1) = extract_cocycle(&ext, &s1).unwrap();
            let shift = MrblaCochain::new(p1, Some(c1)).unwrap().sub(x);
            let expected = d_full(&s, &r, &MrblaCochain::new(beta, Some(Cochain::zero(0, 2, 2))).unwrap(), opts()).unwrap();
            ensure(shift == expected, || format!("cocycle {idx}: section shift"))?;
            ensure(induced_rep_from_extension(&ext, &s1).unwrap() == r, || format!("cocycle {idx}: induced actions"))?;
        }
    }
    let mut cocycles = 0;
    for trial in 0..50 {
        let x = if trial % 2 == 0 {
            let mut acc = MrblaCochain::zero(2, 2, 2);
            for b in &basis {
                let c = Rational::from_integer(rng.gen_range(-3..=3).into());
                let scaled = MrblaCochain::from_vector(2, 2, 2, b.to_vector().iter().map(|v| v * &c).collect()).unwrap();
                acc = acc.add(&scaled);
            }
            acc
        } else {
            mrbla_core::audit::random_mrbla(2, 2, 2, &mut rng)
        };
        let is_cocycle = classify(&s, &r, &x, opts()).unwrap().is_cocycle;
        let (psi, chi) = pair(&x);
        let built = build_extension(&s, &r, &psi, &chi).is_ok();
        ensure(built == is_cocycle, || format!("random pair {trial}: builder {built}, cocycle {is_cocycle}"))?;
        cocycles += usize::from(is_cocycle);
    }
    Ok(format!(
        "{} basis cocycles, 20 shifts each; 50 random pairs ({cocycles} cocycles) agree with the builder",
        basis.len()
    ))
}

fn documents_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("documents")
}

fn mrbla(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_mrbla"))
        .args(args)
        .env_remove("MRB_PHI_VARIANT")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_8() -> Outcome {
    let dir = documents_dir();
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    for f in &files {
        let text = std::fs::read_to_string(f).unwrap();
        let doc: Document = parse(&text, ParseOptions::default()).map_err(|e| format!("{}: {e}", f.display()))?;
        ensure(serialize(&doc) == text, || format!("{}: round trip differs", f.display()))?;
    }
    let doc = |name: &str| dir.join(name).display().to_string();
    let tmp = std::env::temp_dir().join(format!("mrbla-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let bad_scalar = tmp.join("bad.json");
    std::fs::write(&bad_scalar, std::fs::read_to_string(doc("mrb2.json")).unwrap().replace("\"-3\"", "\"-6/2\"")).unwrap();
    let empty = tmp.join("empty.json");
    std::fs::write(&empty, "").unwrap();
    let table: Vec<(Vec<String>, i32)> = vec![
        (vec!["check".into(), doc("mrb2.json")], 0),
        (vec!["check".into(), doc("not-leibniz.json")], 1),
        (vec!["check".into(), doc("not-mrb.json")], 1),
        (vec!["check".into(), bad_scalar.display().to_string()], 2),
        (vec!["check".into(), empty.display().to_string()], 2),
        (vec!["extend".into(), "build".into(), doc("mrb2.json"), doc("non-cocycle.json")], 1),
        (vec!["cohomology".into(), doc("abelian1.json"), "--max-degree".into(), "3".into()], 0),
        (
            vec!["cohomology".into(), doc("mrb2.json"), "--max-degree".into(), "3".into(), "--phi-variant".into(), "printed".into()],
            3,
        ),
        (
            vec!["lemma42".into(), doc("mrb2.json"), "--max-degree".into(), "3".into(), "--trials".into(), "20".into(), "--phi-variant".into(), "printed".into()],
            3,
        ),
        (
            vec!["lemma42".into(), doc("mrb2.json"), "--max-degree".into(), "3".into(), "--trials".into(), "20".into(), "--phi-variant".into(), "corrected".into()],
            0,
        ),
    ];
    for (args, expected) in &table {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, _) = mrbla(&argv);
        ensure(code == *expected, || format!("`mrbla {}` exited {code}, expected {expected}", args.join(" ")))?;
    }
    let audit = ["--output", "machine", "--seed", "42", "lemma42", &doc("mrb2.json"), "--trials", "5"];
    let (_, first) = mrbla(&audit);
    let (_, second) = mrbla(&audit);
    ensure(!first.is_empty() && first == second, || "seeded audit output differs between runs".into())?;
    std::fs::remove_dir_all(&tmp).ok();
    Ok(format!("{} documents round-trip, {} exit codes match, audit reproducible", files.len(), table.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("worked examples", criterion_1, Duration::from_secs(1)),
        ("induced structures", criterion_2, Duration::from_secs(10)),
        ("complex well-formedness", criterion_3, Duration::from_secs(60)),
        ("chain-map audit", criterion_4, Duration::from_secs(120)),
        ("cohomology oracle", criterion_5, Duration::from_secs(1)),
        ("deformation theorems", criterion_6, Duration::from_secs(60)),
        ("extension round-trips", criterion_7, Duration::from_secs(60)),
        ("command-line contract", criterion_8, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed > budget {
                Err(format!("took {elapsed:.2?}, budget {budget:?}"))
            } else {
                Ok(msg)
            }
        });
        match result {
            Ok(msg) => println!("criterion {}: PASS {name} ({elapsed:.2?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
