//! Full invariant reports for a module file, as JSON or an aligned text table.

use std::fmt::Write as _;

use serde::Serialize;

use crate::exactla::{Field, FieldSpec};
use crate::invariants::{
    required_truncation, width_bound, Analyzer, Certified, Deg, DerivedRegularity, Hilbert, Invariant,
    Regularity, SharpFiltered, Torsion,
};
use crate::module::{Ctx, ModuleError, ModuleFile, PresentedModule};
use crate::with_field;

#[derive(Debug, thiserror::Error)]
pub enum AnalyzeError {
    #[error("{0}")]
    Module(#[from] ModuleError),
    #[error("truncation too small: {given} given, {required} required")]
    InsufficientTruncation { given: usize, required: usize },
    #[error("required truncation {required} exceeds the cap {cap}")]
    OverCap { required: usize, cap: usize },
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    /// Overrides both the file's truncation and the computed requirement.
    pub truncation: Option<usize>,
    pub max_truncation: usize,
    pub invariants: Vec<Invariant>,
    /// Largest `i` for `hd_i`; defaults to `max(r + min(r, d), 3)`, at most 6.
    pub i_max: Option<usize>,
    /// Compute below the certified truncation instead of failing.
    pub allow_uncertified: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            truncation: None,
            max_truncation: 14,
            invariants: Invariant::ALL.to_vec(),
            i_max: None,
            allow_uncertified: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Declared {
    pub generation_degree: Deg,
    pub relation_degree: Deg,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub field: String,
    pub group: String,
    pub truncation: usize,
    pub required_truncation: usize,
    pub declared: Declared,
    pub dims: Vec<usize>,
    /// `deg V`; uncertified means a lower bound.
    pub degree: Certified<Deg>,
    pub generation_degree: Certified<Deg>,
    pub hd1: Certified<Deg>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homological_degrees: Option<Vec<Certified<Deg>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h0_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Torsion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<Certified<Deg>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<DerivedRegularity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nagpal: Option<Certified<Option<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<Regularity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Hilbert>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharp_filtered: Option<SharpFiltered>,
    /// Broken internal consistency conditions; always empty unless there is a bug.
    pub violations: Vec<String>,
}

pub fn default_i_max(d: Deg, r: Deg) -> usize {
    let b = width_bound(r, d).fin().unwrap_or(0).max(0) as usize;
    b.clamp(3, 6)
}

/// Parse, realize at the certified truncation and compute the requested invariants.
pub fn analyze(file: &ModuleFile, opts: &AnalyzeOptions) -> Result<InvariantReport, AnalyzeError> {
    let field = file.field_spec()?;
    let group = file.group.build()?;
    with_field!(field, |k| {
        let ctx = Ctx::new(k, group.clone());
        let pres = file.to_presentation(&ctx)?;
        let d = Deg::from_opt(pres.generation_degree());
        let r = Deg::from_opt(pres.relation_degree());
        let i_max = opts.i_max.unwrap_or_else(|| default_i_max(d, r));
        let required = required_truncation(d, r, &opts.invariants, i_max);
        let n = match opts.truncation.or(file.truncation) {
            Some(n) if n < required && !opts.allow_uncertified => {
                return Err(AnalyzeError::InsufficientTruncation { given: n, required })
            }
            Some(n) => n,
            None if required > opts.max_truncation => {
                return Err(AnalyzeError::OverCap { required, cap: opts.max_truncation })
            }
            None => required,
        };
        let p = pres.realize(n)?;
        report_for(&p, field, group.name(), required, opts, i_max)
    })
}

/// Report for an already realized module.
pub fn report_for<K: Field>(
    p: &PresentedModule<K>,
    field: FieldSpec,
    group: &str,
    required: usize,
    opts: &AnalyzeOptions,
    i_max: usize,
) -> Result<InvariantReport, AnalyzeError> {
    let an = Analyzer::new(p, i_max.saturating_sub(1).max(1));
    let want = |i: Invariant| opts.invariants.contains(&i);
    let mut rep = InvariantReport {
        field: field.to_string(),
        group: group.to_string(),
        truncation: an.truncation(),
        required_truncation: required,
        declared: Declared { generation_degree: an.d, relation_degree: an.r },
        dims: p.module.dims.clone(),
        degree: an.degree(),
        generation_degree: an.hd0(),
        hd1: an.hd1(),
        homological_degrees: None,
        h0_dims: None,
        h1_dims: None,
        torsion: None,
        depth: None,
        derived: None,
        nagpal: None,
        regularity: None,
        hilbert: None,
        sharp_filtered: None,
        violations: Vec::new(),
    };
    if want(Invariant::Degrees) {
        rep.homological_degrees = Some(an.homological_degrees(i_max)?);
        rep.h0_dims = Some(an.h0_dims().to_vec());
        rep.h1_dims = Some(an.h1_dims().to_vec());
    }
    if want(Invariant::Torsion) || want(Invariant::Depth) {
        rep.torsion = Some(an.torsion()?);
    }
    if want(Invariant::Depth) {
        rep.depth = Some(an.depth()?);
    }
    if want(Invariant::Dreg) {
        rep.derived = Some(an.derived_regularity()?);
    }
    if want(Invariant::Nagpal) {
        rep.nagpal = Some(an.nagpal_number()?);
    }
    if want(Invariant::Reg) {
        rep.regularity = Some(an.regularity(i_max)?);
    }
    if want(Invariant::Hilbert) {
        rep.hilbert = Some(an.hilbert());
    }
    if want(Invariant::Filtration) || want(Invariant::Depth) {
        rep.sharp_filtered = Some(an.sharp_filtered()?);
    }
    rep.violations = consistency(&rep);
    Ok(rep)
}

fn consistency(rep: &InvariantReport) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(dr) = &rep.derived {
        let (a, b) = (dr.dreg.value, dr.dwidth.value);
        if a.is_finite() && b.is_finite() && a.plus(1) > b {
            out.push(format!("dreg + 1 > dwidth ({a}, {b})"));
        }
    }
    if let (Some(depth), Some(t)) = (&rep.depth, &rep.torsion) {
        if depth.certified && t.torsion_free.certified && (depth.value == Deg::Fin(0)) == t.torsion_free.value {
            out.push(format!("depth {} but torsion free = {}", depth.value, t.torsion_free.value));
        }
    }
    if let (Some(depth), Some(s)) = (&rep.depth, &rep.sharp_filtered) {
        if depth.certified && s.flag.certified && (depth.value == Deg::PosInf) != s.flag.value {
            out.push(format!("depth {} but sharp filtered = {}", depth.value, s.flag.value));
        }
        if s.flag.certified && s.flag.value != s.filtration.constructed {
            out.push("H_1 criterion and filtration construction disagree".into());
        }
    }
    if let Some(reg) = &rep.regularity {
        if reg.value.certified && reg.value.value > reg.bound {
            out.push(format!("reg {} above bound {}", reg.value.value, reg.bound));
        }
    }
    if let Some(h) = &rep.hilbert {
        if h.agrees == Some(false) {
            out.push("Hilbert polynomial does not match the stable range".into());
        }
    }
    out
}

fn cert<T: std::fmt::Display>(c: &Certified<T>) -> String {
    if c.certified {
        c.value.to_string()
    } else {
        format!("{} (uncertified)", c.value)
    }
}

fn list<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Two-column text rendering of a report.
pub fn render_text(rep: &InvariantReport) -> String {
    let mut rows: Vec<(String, String)> = vec![
        ("field".into(), rep.field.clone()),
        ("group".into(), rep.group.clone()),
        ("truncation".into(), format!("{} (required {})", rep.truncation, rep.required_truncation)),
        ("declared d, r".into(), format!("{}, {}", rep.declared.generation_degree, rep.declared.relation_degree)),
        ("dim V_n".into(), list(&rep.dims)),
    ];
    let degree = if rep.degree.certified {
        rep.degree.value.to_string()
    } else {
        format!(">= {}", rep.degree.value)
    };
    rows.push(("deg V".into(), degree));
    rows.push(("hd_0".into(), cert(&rep.generation_degree)));
    rows.push(("hd_1".into(), cert(&rep.hd1)));
    if let Some(hd) = &rep.homological_degrees {
        for (i, h) in hd.iter().enumerate().skip(2) {
            rows.push((format!("hd_{i}"), cert(h)));
        }
    }
    if let Some(h) = &rep.h0_dims {
        rows.push(("dim H_0(V)_n".into(), list(h)));
    }
    if let Some(h) = &rep.h1_dims {
        rows.push(("dim H_1(V)_n".into(), list(h)));
    }
    if let Some(t) = &rep.torsion {
        rows.push(("torsion free".into(), cert(&t.torsion_free)));
        rows.push(("torsion dims".into(), list(&t.submodule_dims)));
    }
    if let Some(d) = &rep.depth {
        rows.push(("depth".into(), cert(d)));
    }
    if let Some(dr) = &rep.derived {
        rows.push(("dreg".into(), cert(&dr.dreg)));
        rows.push(("dwidth".into(), cert(&dr.dwidth)));
    }
    if let Some(n) = &rep.nagpal {
        let v = n.value.map_or("not found".to_string(), |b| b.to_string());
        rows.push(("Nagpal number".into(), cert(&Certified::new(v, n.certified))));
    }
    if let Some(reg) = &rep.regularity {
        rows.push(("reg".into(), cert(&reg.value)));
        rows.push(("reg bound".into(), format!("{} (from hd: {})", reg.bound, reg.bound_hd)));
    }
    if let Some(h) = &rep.hilbert {
        rows.push(("Hilbert polynomial".into(), h.polynomial.clone().unwrap_or_else(|| "-".into())));
        rows.push(("stable range from".into(), format!("{} (from hd: {})", h.stable_range_start, cert(&h.stable_range_start_hd))));
        if let Some(e) = h.earliest_agreement {
            rows.push(("agrees from".into(), e.to_string()));
        }
    }
    if let Some(s) = &rep.sharp_filtered {
        rows.push(("sharp filtered".into(), cert(&s.flag)));
        let cof: Vec<String> = s.filtration.cofactors.iter().map(|c| format!("M({})^{}", c.degree, c.dim)).collect();
        rows.push(("filtration".into(), if s.filtration.constructed { cof.join(" ") } else { filtration_failure(s) }));
    }
    for v in &rep.violations {
        rows.push(("VIOLATION".into(), v.clone()));
    }
    let w = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<w$}  {v}");
    }
    out
}

pub fn filtration_failure(s: &SharpFiltered) -> String {
    match s.filtration.failure_degree {
        Some(n) => format!("fails in degree {n}"),
        None => "not constructed".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t0() -> ModuleFile {
        ModuleFile::parse(
            r#"{"field":"Q","group":"trivial","generators":[{"degree":0}],
                "relations":[{"degree":1,"terms":[{"gen":0,"inj":[],"coeff":[1]}]}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn t0_report() {
        let rep = analyze(&t0(), &AnalyzeOptions::default()).unwrap();
        assert_eq!(rep.depth.as_ref().unwrap().value, Deg::Fin(0));
        assert_eq!(rep.nagpal.as_ref().unwrap().value, Some(1));
        assert_eq!(rep.hd1.value, Deg::Fin(1));
        assert_eq!(rep.hilbert.as_ref().unwrap().stable_range_start, 1);
        assert!(rep.violations.is_empty());
        let text = render_text(&rep);
        assert!(text.contains("Nagpal number"));
    }

    #[test]
    fn too_small_truncation_is_refused() {
        let opts = AnalyzeOptions { truncation: Some(1), ..AnalyzeOptions::default() };
        match analyze(&t0(), &opts) {
            Err(AnalyzeError::InsufficientTruncation { required, .. }) => assert!(required > 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_is_stable() {
        let a = serde_json::to_string(&analyze(&t0(), &AnalyzeOptions::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&analyze(&t0(), &AnalyzeOptions::default()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
