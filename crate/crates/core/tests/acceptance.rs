//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use figmod::combi::{sigma, verify_lex_first, verify_span_identity};
use figmod::exactla::{Field, FieldSpec, Matrix, PrimeField, Rationals};
use figmod::functors::{present, shift};
use figmod::group::FiniteGroup;
use figmod::invariants::{Analyzer, Deg};
use figmod::module::{build_free, submodule, Ctx, ModuleFile, PresentedModule, Rep};
use figmod::report::{analyze, AnalyzeOptions};
use figmod::verify::{boundwidth, instance_file, verify, CheckKind, VerifyParams, VerifyReport};
use figmod::with_field;

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn groups() -> Vec<FiniteGroup> {
    vec![FiniteGroup::trivial(), FiniteGroup::cyclic(2)]
}

/// The seeded corpus: 100 presentations with `d ≤ 2`, `r ≤ 3`, alternating
/// trivial / Z2, fields Q, F2, F3, truncation 8.
fn corpus(checks: &[CheckKind]) -> VerifyParams {
    VerifyParams {
        seed: 42,
        count: 100,
        truncation: 8,
        groups: groups(),
        fields: vec![FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)],
        checks: checks.to_vec(),
        ..VerifyParams::default()
    }
}

/// Every listed check passed and was certified on every instance.
fn judge(report: &VerifyReport, kinds: &[CheckKind]) -> Outcome {
    let mut bad = Vec::new();
    let mut uncertified = Vec::new();
    for inst in &report.instances {
        for &kind in kinds {
            match inst.check(kind) {
                Some(c) if !c.passed => bad.push(format!("#{} {}: {}", inst.index, c.name, c.detail)),
                Some(c) if !c.certified => uncertified.push(format!("#{} {}: {}", inst.index, c.name, c.detail)),
                Some(_) => {}
                None => bad.push(format!("#{} missing {}", inst.index, kind.name())),
            }
        }
        if let Some(c) = inst.checks.iter().find(|c| c.name == "realize") {
            bad.push(format!("#{}: {}", inst.index, c.detail));
        }
    }
    let n = report.instances.len();
    if !bad.is_empty() {
        fail(format!("{} failures, first: {}", bad.len(), bad[0]))
    } else if !uncertified.is_empty() {
        fail(format!("{} uncertified, first: {}", uncertified.len(), uncertified[0]))
    } else {
        ok(format!("{n} instances"))
    }
}

fn sweep(kinds: &[CheckKind]) -> Outcome {
    judge(&verify(&corpus(kinds)), kinds)
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// One-dimensional character: `-1` on swaps, `dec_sign` on the decoration generators.
fn sign_rep<K: Field>(ctx: &Ctx<K>, m: usize, dec_sign: i64) -> Rep<K> {
    let k = &ctx.field;
    let gens = (0..ctx.num_generators(m))
        .map(|j| {
            let s = if j + 1 < m { -1 } else { dec_sign };
            Matrix::from_dense_rows(k, &[vec![k.from_i64(s)]])
        })
        .collect();
    Rep::new(ctx, m, 1, gens).expect("a character")
}

fn free_dims_for<K: Field>(k: K) -> Result<usize, String> {
    let mut cases = 0;
    for g in groups() {
        let ctx = Ctx::new(k.clone(), g.clone());
        for m in 0..=3 {
            let mut reps: Vec<Rep<K>> = (1..=4).map(|d| Rep::trivial(&ctx, m, d)).collect();
            let reg = Rep::regular(&ctx, m);
            if reg.dim <= 4 {
                reps.push(reg);
            }
            if m > 0 {
                reps.push(sign_rep(&ctx, m, 1));
                if g.order() > 1 {
                    reps.push(sign_rep(&ctx, m, -1));
                }
            }
            for w in &reps {
                let free = build_free(w, 8);
                for n in 0..=8 {
                    if free.dims[n] != binom(n, m) * w.dim {
                        return Err(format!("{} m={m} dim W={} n={n}: {}", g.name(), w.dim, free.dims[n]));
                    }
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn criterion_1() -> Outcome {
    let a = free_dims_for(Rationals);
    let b = free_dims_for(PrimeField::new(2).unwrap());
    match (a, b) {
        (Ok(x), Ok(y)) => ok(format!("{} representations, n ≤ 8", x + y)),
        (Err(e), _) | (_, Err(e)) => fail(e),
    }
}

fn criterion_2() -> Outcome {
    let k = Rationals;
    for g in groups() {
        let ctx = Ctx::new(k, g.clone());
        let order = g.order();
        for m in 1..=3 {
            let free = build_free(&Rep::regular(&ctx, m), 8);
            let lhs = match shift(&free, 1) {
                Ok(s) => s.dims,
                Err(e) => return fail(e.to_string()),
            };
            let lower = build_free(&Rep::regular(&ctx, m - 1), 7);
            for n in 0..=7 {
                let rhs = m * order * lower.dims[n] + free.dims[n];
                // |G|^m m! (C(n, m-1) + C(n, m)) = |G|^m m! C(n+1, m)
                let closed = order.pow(m as u32) * (1..=m).product::<usize>() * binom(n + 1, m);
                if lhs[n] != rhs || lhs[n] != closed {
                    return fail(format!("{} m={m} n={n}: {} vs {rhs} vs {closed}", g.name(), lhs[n]));
                }
            }
        }
    }
    ok("m ≤ 3, n ≤ 7, trivial and Z2")
}

fn criterion_6() -> Outcome {
    let a = sweep(&[CheckKind::TheoremA]);
    if !a.passed {
        return a;
    }
    let finite = VerifyParams { count: 20, finite_degree: true, ..corpus(&[CheckKind::Finlen, CheckKind::TheoremA]) };
    let report = verify(&finite);
    let degrees: Vec<String> = report
        .instances
        .iter()
        .map(|i| i.dims.iter().rposition(|&x| x > 0).map_or("-inf".into(), |x| x.to_string()))
        .collect();
    let b = judge(&report, &[CheckKind::Finlen, CheckKind::TheoremA]);
    if !b.passed {
        return b;
    }
    ok(format!("{}; 20 finite-degree instances, degrees {}", a.detail, degrees.join(",")))
}

fn criterion_7() -> Outcome {
    let report = verify(&corpus(&[CheckKind::TheoremC]));
    let sharp = report
        .instances
        .iter()
        .filter(|i| i.check(CheckKind::TheoremC).is_some_and(|c| c.detail.ends_with("sharp=true")))
        .count();
    let j = judge(&report, &[CheckKind::TheoremC]);
    if j.passed {
        ok(format!("{} non-sharp, {sharp} sharp", report.instances.len() - sharp))
    } else {
        j
    }
}

fn catalan(b: usize) -> usize {
    binom(2 * b, b) / (b + 1)
}

fn criterion_10() -> Outcome {
    for b in 0..=5 {
        if sigma(b).len() != catalan(b) {
            return fail(format!("|Sigma({b})| = {} != {}", sigma(b).len(), catalan(b)));
        }
    }
    for b in 0..=2 {
        for n in 0..=6 {
            if let Err(w) = verify_lex_first(b, n) {
                return fail(format!("lex-first b={b} n={n}: {w:?}"));
            }
        }
    }
    let mut lattices = 0;
    for g in groups() {
        for r in 0..=2 {
            for b in 0..=2 {
                for n in (b + r)..=5 {
                    let s = verify_span_identity(&g, r, b, n);
                    if !s.holds {
                        return fail(format!("span identity {} r={r} b={b} n={n}: rank {}", g.name(), s.rank));
                    }
                    lattices += 1;
                }
            }
        }
    }
    let params = corpus(&[]);
    let mut pairs = 0;
    let mut index = 0;
    while pairs < 20 {
        let (file, g, field) = instance_file(&params, index);
        index += 1;
        if file.relations.is_empty() {
            continue;
        }
        let res = with_field!(field, |k| boundwidth_pair(Ctx::new(k, g.clone()), &file, index));
        if let Err(e) = res {
            return fail(e);
        }
        pairs += 1;
    }
    ok(format!("Catalan b ≤ 5, lex-first b ≤ 2 n ≤ 6, {lattices} lattices, {pairs} pairs"))
}

fn boundwidth_pair<K: Field>(ctx: Ctx<K>, file: &ModuleFile, index: usize) -> Result<(), String> {
    let p = file.to_presentation(&ctx).and_then(|p| p.realize(8)).map_err(|e| e.to_string())?;
    let a = Analyzer::new(&p, 1);
    let (good, cert, detail) = boundwidth(&p, a.r, a.d);
    if good && cert {
        Ok(())
    } else {
        Err(format!("instance {index}: certified={cert} {detail}"))
    }
}

fn t0_file(group: &str, field: &str) -> ModuleFile {
    ModuleFile::parse(&format!(
        r#"{{"field":"{field}","group":"{group}","generators":[{{"degree":0}}],
            "relations":[{{"degree":1,"terms":[{{"gen":0,"inj":[],"coeff":[1]}}]}}]}}"#
    ))
    .unwrap()
}

fn syzygy<K: Field>(p: &PresentedModule<K>) -> Result<PresentedModule<K>, String> {
    let (k, _) = submodule(&p.cover, &p.relations);
    present(&k).map_err(|e| e.to_string())
}

/// Depth facts for one module: (depth, torsion free, H_1 = 0), all certified.
fn depth_facts<K: Field>(p: &PresentedModule<K>) -> Result<(Deg, bool, bool), String> {
    let a = Analyzer::new(p, 1);
    let depth = a.depth().map_err(|e| e.to_string())?;
    let t = a.torsion().map_err(|e| e.to_string())?;
    let h1 = a.hd1();
    if !(depth.certified && t.torsion_free.certified && h1.certified) {
        return Err(format!("uncertified at truncation {}", p.truncation()));
    }
    let sharp = h1.value == Deg::NegInf;
    let trichotomy = (depth.value == Deg::Fin(0)) == !t.torsion_free.value
        && (depth.value == Deg::PosInf) == sharp
        && (!matches!(depth.value, Deg::Fin(x) if x > 0) || (t.torsion_free.value && !sharp));
    if !trichotomy {
        return Err(format!("trichotomy broken: depth {} torsion free {} sharp {sharp}", depth.value, t.torsion_free.value));
    }
    Ok((depth.value, t.torsion_free.value, sharp))
}

fn depth_chain(group: &str, field: &str) -> Result<String, String> {
    let g = FiniteGroup::preset(group).unwrap();
    let spec = FieldSpec::parse(field).unwrap();
    with_field!(spec, |k| {
        let ctx = Ctx::new(k, g.clone());
        let v0 = t0_file(group, field).to_presentation(&ctx).and_then(|p| p.realize(9)).map_err(|e| e.to_string())?;
        let v1 = syzygy(&v0)?;
        let v2 = syzygy(&v1)?;
        let mut depths = Vec::new();
        for (i, p) in [&v0, &v1, &v2].into_iter().enumerate() {
            let (d, _, _) = depth_facts(p)?;
            if d != Deg::Fin(i as i64) {
                return Err(format!("{group}/{field}: syzygy {i} has depth {d}"));
            }
            depths.push(d);
        }
        for m in 0..=2 {
            let free = build_free(&Rep::regular(&ctx, m), 7);
            let p = present(&free).map_err(|e| e.to_string())?;
            let (d, tf, sharp) = depth_facts(&p)?;
            if d != Deg::PosInf || !tf || !sharp {
                return Err(format!("{group}/{field}: M({m}) has depth {d}"));
            }
        }
        Ok(format!("{group}/{field}"))
    })
}

fn criterion_11() -> Outcome {
    let mut done = Vec::new();
    for (g, f) in [("trivial", "Q"), ("trivial", "Fp:2"), ("Z2", "Q"), ("Z2", "Fp:3")] {
        match depth_chain(g, f) {
            Ok(s) => done.push(s),
            Err(e) => return fail(e),
        }
    }
    ok(format!("depths 0,1,2 along T(0) syzygies and inf on frees: {}", done.join(" ")))
}

fn criterion_12() -> Outcome {
    let params = VerifyParams { count: 20, ..corpus(&CheckKind::ALL) };
    let a = serde_json::to_vec(&verify(&params)).unwrap();
    let b = serde_json::to_vec(&verify(&params)).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let c = serde_json::to_vec(&pool.install(|| verify(&params))).unwrap();
    if a != b || a != c {
        return fail("verify reports differ between runs");
    }
    for group in ["trivial", "Z2"] {
        let f = t0_file(group, "Fp:3");
        let x = serde_json::to_vec(&analyze(&f, &AnalyzeOptions::default()).unwrap()).unwrap();
        let y = serde_json::to_vec(&analyze(&f, &AnalyzeOptions::default()).unwrap()).unwrap();
        if x != y {
            return fail(format!("analyze report differs ({group})"));
        }
    }
    ok(format!("verify report of {} bytes identical over 3 runs", a.len()))
}

fn main() -> ExitCode {
    type Criterion = (usize, &'static str, Option<u64>, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        (1, "free-module dimensions", Some(1), criterion_1),
        (2, "shift decomposition", Some(1), criterion_2),
        (3, "four-term exactness", Some(60), || sweep(&[CheckKind::FourTerm])),
        (4, "dual-algorithm oracle", Some(120), || sweep(&[CheckKind::DualAlgorithm])),
        (5, "Grothendieck additivity", None, || sweep(&[CheckKind::Grothendieck])),
        (6, "Theorem A and finite-degree bound", None, criterion_6),
        (7, "Theorem C", None, criterion_7),
        (8, "Theorem D", None, || sweep(&[CheckKind::TheoremD])),
        (9, "Theorem B equivalences", None, || sweep(&[CheckKind::TheoremB])),
        (10, "combinatorics and intersection identity", Some(300), criterion_10),
        (11, "depth trichotomy and increment", None, criterion_11),
        (12, "determinism", None, criterion_12),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let t = Instant::now();
        let mut out = run();
        let elapsed = t.elapsed();
        if let Some(b) = budget {
            if elapsed > Duration::from_secs(b) {
                out = fail(format!("took {elapsed:.2?}, budget {b}s; {}", out.detail));
            }
        }
        let tag = if out.passed { "PASS" } else { "FAIL" };
        println!("{tag} {id:>2} {name}: {} [{elapsed:.2?}]", out.detail);
        if !out.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("all 12 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} of 12 criteria failed");
        ExitCode::FAILURE
    }
}
