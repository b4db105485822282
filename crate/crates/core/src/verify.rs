//! Seeded sweeps checking the structural theorems on random presentations.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactla::{intersection, Field, FieldSpec, SparseVec, Subspace};
use crate::functors::{
    derivative, derived_derivative_from, fbg_dims, h1_of_pair, h1da_intersection, homology_from,
    present, shift, shift_derivative_swap, torsion_kernel,
};
use crate::group::FiniteGroup;
use crate::invariants::{sharp_filtration, width_bound, Analyzer, Certified, Deg};
use crate::module::{
    build_free, quotient, submodule, Ctx, Graded, ModuleError, ModuleFile, PresentedModule, TruncatedModule,
};
use crate::random::{random_finite_module, random_module, rng_for, RandomParams};
use crate::with_field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    FourTerm,
    DualAlgorithm,
    Grothendieck,
    TheoremA,
    Finlen,
    Homreg,
    Regbound,
    Finwidth,
    Boundwidth,
    TheoremB,
    TheoremC,
    NagpalConsistency,
    TheoremD,
    DepthTrichotomy,
    Adepth,
    Needtwo,
    NagpalLemma,
    Welldef,
    Inddeg,
    ShiftDerivative,
    IteratedDerivative,
}

impl CheckKind {
    pub const ALL: [CheckKind; 21] = [
        CheckKind::FourTerm,
        CheckKind::DualAlgorithm,
        CheckKind::Grothendieck,
        CheckKind::TheoremA,
        CheckKind::Finlen,
        CheckKind::Homreg,
        CheckKind::Regbound,
        CheckKind::Finwidth,
        CheckKind::Boundwidth,
        CheckKind::TheoremB,
        CheckKind::TheoremC,
        CheckKind::NagpalConsistency,
        CheckKind::TheoremD,
        CheckKind::DepthTrichotomy,
        CheckKind::Adepth,
        CheckKind::Needtwo,
        CheckKind::NagpalLemma,
        CheckKind::Welldef,
        CheckKind::Inddeg,
        CheckKind::ShiftDerivative,
        CheckKind::IteratedDerivative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::FourTerm => "four_term",
            CheckKind::DualAlgorithm => "dual_algorithm",
            CheckKind::Grothendieck => "grothendieck",
            CheckKind::TheoremA => "theorem_a",
            CheckKind::Finlen => "finlen",
            CheckKind::Homreg => "homreg",
            CheckKind::Regbound => "regbound",
            CheckKind::Finwidth => "finwidth",
            CheckKind::Boundwidth => "boundwidth",
            CheckKind::TheoremB => "theorem_b",
            CheckKind::TheoremC => "theorem_c",
            CheckKind::NagpalConsistency => "nagpal_consistency",
            CheckKind::TheoremD => "theorem_d",
            CheckKind::DepthTrichotomy => "depth_trichotomy",
            CheckKind::Adepth => "adepth",
            CheckKind::Needtwo => "needtwo",
            CheckKind::NagpalLemma => "nagpal_lemma",
            CheckKind::Welldef => "welldef",
            CheckKind::Inddeg => "inddeg",
            CheckKind::ShiftDerivative => "shift_derivative",
            CheckKind::IteratedDerivative => "iterated_derivative",
        }
    }

    pub fn parse(s: &str) -> Option<CheckKind> {
        CheckKind::ALL.into_iter().find(|c| c.name() == s.trim())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// False when part of the check lies outside the certified window.
    pub certified: bool,
    pub detail: String,
}

impl Check {
    fn new(kind: CheckKind, passed: bool, certified: bool, detail: String) -> Self {
        Check { name: kind.name(), passed, certified, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub index: usize,
    pub field: String,
    pub group: String,
    pub dims: Vec<usize>,
    pub module: ModuleFile,
    pub checks: Vec<Check>,
}

impl InstanceResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, kind: CheckKind) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == kind.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub uncertified: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub count: usize,
    pub truncation: usize,
    pub summary: BTreeMap<&'static str, Tally>,
    pub all_passed: bool,
    pub instances: Vec<InstanceResult>,
}

#[derive(Clone, Debug)]
pub struct VerifyParams {
    pub seed: u64,
    pub count: usize,
    pub truncation: usize,
    pub groups: Vec<FiniteGroup>,
    pub fields: Vec<FieldSpec>,
    pub random: RandomParams,
    pub checks: Vec<CheckKind>,
    /// Homological degrees examined for regularity and the acyclicity criterion.
    pub i_max: usize,
    /// Generate modules of finite degree instead.
    pub finite_degree: bool,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            seed: 42,
            count: 25,
            truncation: 8,
            groups: vec![FiniteGroup::trivial()],
            fields: vec![FieldSpec::Prime(2)],
            random: RandomParams::default(),
            checks: CheckKind::ALL.to_vec(),
            i_max: 3,
            finite_degree: false,
        }
    }
}

/// The module file for instance `index` of a sweep, with its field and group.
pub fn instance_file(params: &VerifyParams, index: usize) -> (ModuleFile, FiniteGroup, FieldSpec) {
    let g = params.groups[index % params.groups.len()].clone();
    let field = params.fields[(index / params.groups.len()) % params.fields.len()];
    let mut rng = rng_for(params.seed, index as u64);
    let file = if params.finite_degree {
        let top = params.random.d_max + 1;
        random_finite_module(&mut rng, &g, field, &params.random, top)
    } else {
        random_module(&mut rng, &g, field, &params.random)
    };
    (file, g, field)
}

pub fn verify(params: &VerifyParams) -> VerifyReport {
    let instances: Vec<InstanceResult> = (0..params.count)
        .into_par_iter()
        .map(|index| {
            let (file, g, field) = instance_file(params, index);
            let mut rng = rng_for(params.seed ^ 0x9e37_79b9_7f4a_7c15, index as u64);
            let (dims, checks) = with_field!(field, |k| {
                let ctx = Ctx::new(k, g.clone());
                match file.to_presentation(&ctx).and_then(|p| p.realize(params.truncation)) {
                    Ok(p) => (p.module.dims.clone(), run_checks(&p, params, &mut rng)),
                    Err(e) => (Vec::new(), vec![Check { name: "realize", passed: false, certified: true, detail: e.to_string() }]),
                }
            });
            InstanceResult { index, field: field.to_string(), group: g.name().to_string(), dims, module: file, checks }
        })
        .collect();
    let mut summary: BTreeMap<&'static str, Tally> = BTreeMap::new();
    for inst in &instances {
        for c in &inst.checks {
            let t = summary.entry(c.name).or_insert(Tally { passed: 0, failed: 0, uncertified: 0 });
            if c.passed {
                t.passed += 1;
            } else {
                t.failed += 1;
            }
            if !c.certified {
                t.uncertified += 1;
            }
        }
    }
    VerifyReport {
        seed: params.seed,
        count: params.count,
        truncation: params.truncation,
        all_passed: instances.iter().all(InstanceResult::passed),
        summary,
        instances,
    }
}

fn nonzero(dims: &[usize]) -> bool {
    dims.iter().any(|&x| x > 0)
}

fn deg_list(v: &[Certified<Deg>]) -> String {
    v.iter().map(|c| c.value.to_string()).collect::<Vec<_>>().join(",")
}

/// All selected checks on one realized module.
pub fn run_checks<K: Field>(p: &PresentedModule<K>, params: &VerifyParams, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let an = Analyzer::new(p, params.i_max.max(3) - 1);
    params
        .checks
        .iter()
        .map(|&kind| {
            check_one(kind, &an, params, rng)
                .unwrap_or_else(|e| Check::new(kind, false, true, format!("error: {e}")))
        })
        .collect()
}

fn check_one<K: Field>(
    kind: CheckKind,
    an: &Analyzer<'_, K>,
    params: &VerifyParams,
    rng: &mut ChaCha8Rng,
) -> Result<Check, ModuleError> {
    let p = an.p;
    let v = &p.module;
    let n = v.truncation;
    let c = match kind {
        CheckKind::FourTerm => {
            let (ok, detail) = four_term(p)?;
            Check::new(kind, ok, true, detail)
        }
        CheckKind::DualAlgorithm => {
            let res = an.resolution()?;
            let mut bad = Vec::new();
            for a in 1..=3.min(n) {
                let lhs = h1da_intersection(p, a)?;
                let rhs = derived_derivative_from(v, res, 1, a)?.dims;
                if lhs != rhs {
                    bad.push(format!("a={a}: {lhs:?} vs {rhs:?}"));
                }
            }
            Check::new(kind, bad.is_empty(), true, bad.join("; "))
        }
        CheckKind::Grothendieck => {
            let res = an.resolution()?;
            let mut bad = Vec::new();
            for i in 1..=2 {
                for a in 1..=2usize {
                    if a + 1 > n {
                        continue;
                    }
                    let big = derived_derivative_from(v, res, i, a + 1)?.dims;
                    let hi = derived_derivative_from(v, res, i, a)?;
                    let dh = derivative(&hi, 1)?.module.dims;
                    let prev = derived_derivative_from(v, res, i - 1, a)?;
                    let t = torsion_kernel(&prev)?.dims;
                    for m in 0..=n - a - 1 {
                        if big[m] != dh[m] + t[m] {
                            bad.push(format!("i={i} a={a} n={m}: {} != {} + {}", big[m], dh[m], t[m]));
                        }
                    }
                }
            }
            Check::new(kind, bad.is_empty(), true, bad.join("; "))
        }
        CheckKind::TheoremA => {
            let reg = an.regularity(params.i_max)?;
            let ok = reg.value.value <= reg.bound && reg.value.value <= reg.bound_hd;
            Check::new(
                kind,
                ok,
                reg.value.certified,
                format!("reg={} bound={} bound_hd={}", reg.value.value, reg.bound, reg.bound_hd),
            )
        }
        CheckKind::Finlen => {
            let deg = an.degree();
            if !deg.certified {
                return Ok(Check::new(kind, true, false, "degree of V not settled in window".into()));
            }
            let hd = an.homological_degrees(params.i_max)?;
            let ok = hd.iter().enumerate().skip(1).all(|(i, h)| h.value <= deg.value.plus(i as i64));
            let cert = hd.iter().all(|h| h.certified);
            Check::new(kind, ok, cert, format!("deg={} hd={}", deg.value, deg_list(&hd)))
        }
        CheckKind::Homreg => {
            let hd = an.homological_degrees(params.i_max)?;
            let dr = an.derived_regularity()?;
            let (h1, d) = (an.hd1().value, an.hd0().value);
            let base = dr.dwidth.value.plus(-1).max(h1.max(d).plus(-1));
            let ok = hd.iter().enumerate().skip(1).all(|(i, h)| h.value <= base.plus(i as i64));
            let in_dreg = hd
                .iter()
                .enumerate()
                .skip(1)
                .all(|(i, h)| h.value <= dr.dreg.value.add(h1.max(d)).plus(i as i64 - 1));
            let cert = hd.iter().all(|h| h.certified) && dr.dwidth.certified;
            Check::new(
                kind,
                ok,
                cert,
                format!("hd={} dwidth={} bound_base={} dreg_form_holds={in_dreg}", deg_list(&hd), dr.dwidth.value, base),
            )
        }
        CheckKind::Regbound => {
            let dr = an.derived_regularity()?;
            let res = an.resolution()?;
            let mut bad = Vec::new();
            for i in 1..=2 {
                for a in 1..=3.min(n) {
                    let deg = Deg::of_dims(&derived_derivative_from(v, res, i, a)?.dims);
                    let bound = dr.dwidth.value.plus(i as i64 - 1 - a as i64);
                    if deg > bound {
                        bad.push(format!("i={i} a={a}: deg {deg} > {bound}"));
                    }
                }
            }
            Check::new(kind, bad.is_empty(), dr.dwidth.certified, bad.join("; "))
        }
        CheckKind::Finwidth => {
            let dr = an.derived_regularity()?;
            let (h1, d) = (an.hd1().value, an.hd0().value);
            let (dreg, dwidth) = (dr.dreg.value, dr.dwidth.value);
            let mut ok = dwidth <= width_bound(h1, d) && dwidth <= width_bound(an.r, an.d);
            if dreg.is_finite() {
                ok &= dreg.plus(1) <= dwidth && dwidth <= dreg.add(h1.max(d));
            }
            Check::new(kind, ok, dr.dwidth.certified, format!("dreg={dreg} dwidth={dwidth} hd1={h1} hd0={d}"))
        }
        CheckKind::Boundwidth => {
            let (ok, cert, detail) = boundwidth(p, an.r, an.d);
            Check::new(kind, ok, cert, detail)
        }
        CheckKind::TheoremB => {
            let flag = an.hd1();
            let constructed = sharp_filtration(v)?.constructed;
            let hd = an.homological_degrees(3)?;
            let vanish: Vec<bool> = hd[1..=3].iter().map(|h| h.value == Deg::NegInf).collect();
            let ok = flag.value == Deg::NegInf
                && constructed
                && vanish.iter().all(|&x| x)
                || flag.value != Deg::NegInf && !constructed && vanish.iter().all(|&x| !x);
            let cert = hd[1..=3].iter().all(|h| h.certified);
            Check::new(kind, ok, cert, format!("flag={} constructed={constructed} H_i=0: {vanish:?}", flag.value == Deg::NegInf))
        }
        CheckKind::TheoremC => {
            let nag = an.nagpal_number()?;
            let dr = an.derived_regularity()?;
            let sharp = an.hd1().value == Deg::NegInf;
            let expected = if sharp { Some(0) } else { dr.dreg.value.plus(1).fin().map(|x| x.max(0) as usize) };
            Check::new(
                kind,
                nag.value.is_some() && nag.value == expected,
                nag.certified && dr.dreg.certified,
                format!("N(V)={:?} dreg={} sharp={sharp}", nag.value, dr.dreg.value),
            )
        }
        CheckKind::NagpalConsistency => {
            let nag = an.nagpal_number()?;
            match nag.value {
                None => Check::new(kind, false, nag.certified, "no Nagpal number in window".into()),
                Some(b) => {
                    let at = b == 0 || sharp_filtration(&shift(v, b)?)?.constructed;
                    let at0 = b == 0 && sharp_filtration(v)?.constructed;
                    let below = b == 0 || !sharp_filtration(&shift(v, b - 1)?)?.constructed;
                    Check::new(
                        kind,
                        (at || at0) && below,
                        nag.certified,
                        format!("b={b} filtered_at_b={} filtered_below={}", at || at0, !below),
                    )
                }
            }
        }
        CheckKind::TheoremD => {
            let h = an.hilbert();
            match h.agrees {
                Some(ok) => Check::new(
                    kind,
                    ok,
                    h.stable_range_start_hd.certified,
                    format!(
                        "P={} from {} (declared {}), earliest agreement {:?}",
                        h.polynomial.unwrap_or_default(),
                        h.fit_start,
                        h.stable_range_start,
                        h.earliest_agreement
                    ),
                ),
                None => Check::new(kind, true, false, format!("needs truncation {}", h.required_truncation)),
            }
        }
        CheckKind::DepthTrichotomy => {
            let depth = an.depth()?;
            let t = an.torsion()?;
            let h1 = an.hd1().value;
            let ok = (depth.value == Deg::Fin(0)) == !t.torsion_free.value
                && (depth.value == Deg::PosInf) == (h1 == Deg::NegInf);
            Check::new(
                kind,
                ok,
                depth.certified && t.torsion_free.certified,
                format!("depth={} torsion_free={} hd1={h1}", depth.value, t.torsion_free.value),
            )
        }
        CheckKind::Adepth => {
            let depth = an.depth()?;
            let (kmod, _) = submodule(&p.cover, &p.relations);
            let kp = present(&kmod)?;
            let ka = Analyzer::new(&kp, 1);
            let kd = ka.depth()?;
            let hd2 = an.homological_degrees(2)?;
            let expected = match depth.value {
                Deg::Fin(x) => Deg::Fin(x + 1),
                other => other,
            };
            Check::new(
                kind,
                kd.value == expected,
                depth.certified && kd.certified && hd2[2].certified,
                format!("depth(V)={} depth(K)={}", depth.value, kd.value),
            )
        }
        CheckKind::Needtwo => {
            let (ok, cert, detail) = needtwo(p)?;
            Check::new(kind, ok, cert, detail)
        }
        CheckKind::NagpalLemma => {
            let (ok, detail) = nagpal_lemma(p, rng)?;
            Check::new(kind, ok, true, detail)
        }
        CheckKind::Welldef => {
            let depth = an.depth()?;
            let dr = an.derived_regularity()?;
            let Deg::Fin(delta) = depth.value else {
                return Ok(Check::new(kind, true, depth.certified, format!("depth {}", depth.value)));
            };
            let res = an.resolution()?;
            let mut bad = Vec::new();
            for l in 1..=2usize {
                let a = delta as usize + l;
                if a > n {
                    continue;
                }
                let hl = derived_derivative_from(v, res, l, a)?.dims;
                if !nonzero(&hl) {
                    bad.push(format!("H_{l}^(D^{a}) vanishes"));
                }
                if l == 1 && nonzero(&derived_derivative_from(v, res, 2, a)?.dims) {
                    bad.push(format!("H_2^(D^{a}) nonzero"));
                }
            }
            let cert = depth.certified && dr.dwidth.value.plus(1).within(n) && delta as usize + 2 <= n;
            Check::new(kind, bad.is_empty(), cert, bad.join("; "))
        }
        CheckKind::Inddeg => {
            let dv = derivative(v, 1)?.module;
            let dp = present(&dv)?;
            let da = Analyzer::new(&dp, 1);
            let (g0, g1) = (da.hd0().value, da.hd1().value);
            let ok = g0 <= an.d.plus(-1) && g1 <= an.r.plus(-1);
            Check::new(kind, ok, an.r.plus(1).within(n), format!("hd0(DV)={g0} hd1(DV)={g1} d={} r={}", an.d, an.r))
        }
        CheckKind::ShiftDerivative => {
            let mut bad = Vec::new();
            for a in 1..=2usize {
                for b in 1..=2usize {
                    if a + b > n {
                        continue;
                    }
                    let sd = shift(&derivative(v, a)?.module, b)?.dims;
                    let ds = derivative(&shift(v, b)?, a)?.module.dims;
                    if sd != ds {
                        bad.push(format!("a={a} b={b}: {sd:?} vs {ds:?}"));
                    }
                }
            }
            if n >= 2 {
                let (sd, ds, tau) = shift_derivative_swap(v)?;
                if let Err(e) = sd.check_morphism(&ds, &tau) {
                    bad.push(format!("swap map: {e}"));
                }
                let k = &v.ctx.field;
                if tau.maps.iter().any(|m| m.rows != m.cols || crate::exactla::rank(k, m) != m.cols) {
                    bad.push("swap map not invertible".into());
                }
            }
            Check::new(kind, bad.is_empty(), true, bad.join("; "))
        }
        CheckKind::IteratedDerivative => {
            if n < 2 {
                return Ok(Check::new(kind, true, false, "truncation below 2".into()));
            }
            let direct = derivative(v, 2)?.module.dims;
            let iter = derivative(&derivative(v, 1)?.module, 1)?.module.dims;
            Check::new(kind, direct == iter, true, format!("{direct:?} vs {iter:?}"))
        }
    };
    Ok(c)
}

/// `dim H_1^D V_n - dim V_n + dim V_{n+1} - dim DV_n = 0`, with `H_1^D` from the intersection formula.
pub fn four_term<K: Field>(p: &PresentedModule<K>) -> Result<(bool, String), ModuleError> {
    let v = &p.module;
    if v.truncation == 0 {
        return Ok((true, String::new()));
    }
    let h = h1da_intersection(p, 1)?;
    let dv = derivative(v, 1)?.module.dims;
    let mut bad = Vec::new();
    for n in 0..v.truncation {
        let s = h[n] as i64 - v.dims[n] as i64 + v.dims[n + 1] as i64 - dv[n] as i64;
        if s != 0 {
            bad.push(format!("n={n}: {s}"));
        }
    }
    Ok((bad.is_empty(), bad.join("; ")))
}

/// Sum of the images of `src ⊆ X_{n-1}` under the inclusions skipping each of the first `a` points.
fn first_points_span<K: Field>(x: &TruncatedModule<K>, n: usize, a: usize, src: &[SparseVec<K::Elem>]) -> Subspace<K::Elem> {
    let k = &x.ctx.field;
    let mut s = Subspace::new(x.dims[n]);
    for i in 0..a {
        for w in src {
            s.insert(k, &x.insertion(n, i, w));
        }
    }
    s
}

/// `K_n ∩ Σ_{i ≤ a} M_{n-{i}} = Σ_{i ≤ a} K_{n-{i}}` for `n > min(r,d) + r`, `a ≤ n`.
pub fn boundwidth<K: Field>(p: &PresentedModule<K>, r: Deg, d: Deg) -> (bool, bool, String) {
    let m = &p.cover;
    let kk: &Graded<K::Elem> = &p.relations;
    let k = &m.ctx.field;
    let top = m.truncation;
    let Some(start) = width_bound(r, d).plus(1).fin() else {
        return (true, true, "no relations".into());
    };
    let start = start.max(1) as usize;
    if start > top {
        return (true, false, format!("window starts at {start}, beyond truncation"));
    }
    let mut bad = Vec::new();
    for n in start..=top {
        let mbasis: Vec<SparseVec<K::Elem>> = (0..m.dims[n - 1]).map(|j| vec![(j, k.one())]).collect();
        for a in 1..=n {
            let msum = first_points_span(m, n, a, &mbasis);
            let ksum = first_points_span(m, n, a, kk[n - 1].basis());
            let lhs = intersection(k, &kk[n], &msum);
            if lhs.dim() != ksum.dim() {
                bad.push(format!("n={n} a={a}: {} vs {}", lhs.dim(), ksum.dim()));
            }
        }
    }
    (bad.is_empty(), true, bad.join("; "))
}

fn h1_vanishes<K: Field>(v: &TruncatedModule<K>) -> Result<(bool, Option<usize>), ModuleError> {
    let p = present(v)?;
    Ok((!nonzero(&fbg_dims(&h1_of_pair(&p.cover, &p.relations))), p.rel_bound))
}

/// Two-of-three for ♯-filtered modules on `0 -> K -> C -> V -> 0` and on
/// `0 -> V' -> V -> V/V' -> 0` with `V'` generated by the first generator.
fn needtwo<K: Field>(p: &PresentedModule<K>) -> Result<(bool, bool, String), ModuleError> {
    let v = &p.module;
    let top = v.truncation;
    let (kmod, _) = submodule(&p.cover, &p.relations);
    let (k_sharp, k_rel) = h1_vanishes(&kmod)?;
    let (v_sharp, v_rel) = h1_vanishes(v)?;
    let mut ok = k_sharp == v_sharp;
    // V' = image of the first summand of the cover
    let first = p.cover.dims.iter().position(|&x| x > 0);
    let mut detail = format!("K:{k_sharp} V:{v_sharp}");
    let mut rels = vec![k_rel, v_rel];
    if let Some(m) = first {
        let k = &v.ctx.field;
        let seed: Vec<SparseVec<K::Elem>> = vec![p.projection.maps[m].apply(k, &vec![(0, k.one())])];
        let mut seeds = vec![Vec::new(); top + 1];
        seeds[m] = seed;
        let sub = v.span_submodule(&seeds);
        let (vp, _) = submodule(v, &sub);
        let (vq, _) = quotient(v, &sub);
        let (a, ra) = h1_vanishes(&vp)?;
        let (c, rc) = h1_vanishes(&vq)?;
        let count = [a, v_sharp, c].iter().filter(|&&x| x).count();
        ok &= count != 2;
        detail.push_str(&format!(" V':{a} V/V':{c}"));
        rels.extend([ra, rc]);
    }
    let cert = rels.iter().all(|r| r.is_none_or(|x| x < top));
    Ok((ok, cert, detail))
}

/// `U ⊆ M(W)` generated in the degree of `W` gives `H_1(U) = H_1(M(W)/U) = 0`.
fn nagpal_lemma<K: Field>(p: &PresentedModule<K>, rng: &mut ChaCha8Rng) -> Result<(bool, String), ModuleError> {
    let top = p.truncation();
    let ctx: &Ctx<K> = &p.cover.ctx;
    let k = &ctx.field;
    let Some(m) = p.gen_bound else { return Ok((true, "no generators".into())) };
    let w = crate::module::Rep::regular(ctx, m);
    let free = build_free(&w, top);
    let vec: SparseVec<K::Elem> = (0..w.dim)
        .filter_map(|j| match rng.gen_range(0..3) {
            0 => None,
            1 => Some((j, k.one())),
            _ => Some((j, k.neg(&k.one()))),
        })
        .collect();
    let mut seeds = vec![Vec::new(); top + 1];
    seeds[m] = vec![vec];
    let u = free.span_submodule(&seeds);
    let quotient_h1 = fbg_dims(&h1_of_pair(&free, &u));
    let (umod, _) = submodule(&free, &u);
    let (u_sharp, _) = h1_vanishes(&umod)?;
    let ok = u_sharp && !nonzero(&quotient_h1);
    Ok((ok, format!("m={m} dim U_m={} H_1(U)=0:{u_sharp} H_1(M/U)={quotient_h1:?}", u[m].dim())))
}

/// `H_i(V)` dims for `i = 1..=i_max` from a fresh resolution (used by the acceptance suite).
pub fn homology_dims<K: Field>(v: &TruncatedModule<K>, i_max: usize) -> Result<Vec<Vec<usize>>, ModuleError> {
    let res = crate::functors::resolution(v, i_max.saturating_sub(1))?;
    Ok((1..=i_max).map(|i| fbg_dims(&homology_from(&res, i))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let params = VerifyParams {
            count: 6,
            truncation: 6,
            groups: vec![FiniteGroup::trivial(), FiniteGroup::cyclic(2)],
            fields: vec![FieldSpec::Prime(2), FieldSpec::Rationals],
            random: RandomParams { d_max: 1, r_max: 2, ..RandomParams::default() },
            ..VerifyParams::default()
        };
        let r = verify(&params);
        for inst in &r.instances {
            for c in &inst.checks {
                assert!(c.passed, "instance {} {}: {}", inst.index, c.name, c.detail);
            }
        }
        assert!(r.all_passed);
    }

    #[test]
    fn sweep_is_deterministic() {
        let params = VerifyParams { count: 4, truncation: 5, ..VerifyParams::default() };
        let a = serde_json::to_string(&verify(&params)).unwrap();
        let b = serde_json::to_string(&verify(&params)).unwrap();
        assert_eq!(a, b);
    }
}
