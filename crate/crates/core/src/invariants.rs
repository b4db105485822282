//! Numerical invariants of a presented module: homological degrees, torsion, depth,
//! derived regularity and width, Nagpal number, regularity, Hilbert polynomial and
//! ♯-filtrations.
//!
//! Every value carries a `certified` flag. A value is certified when the truncation
//! reaches the degree beyond which the relevant functor is known to vanish; the
//! windows come from the degree bounds for derived derivatives and homology.

use std::cell::OnceCell;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::exactla::{kernel, rank, Field, Matrix, Subspace};
use crate::functors::{
    fbg_dims, h0, h1_of_pair, h1da_intersection, homology_from, resolution, shift_presented,
    torsion_kernel, Resolution,
};
use crate::module::{hom_from_free, image_of, quotient, ModuleError, PresentedModule, TruncatedModule};

/// An integer extended by `±∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Deg {
    NegInf,
    Fin(i64),
    PosInf,
}

impl Deg {
    pub fn from_opt(x: Option<usize>) -> Deg {
        x.map_or(Deg::NegInf, |v| Deg::Fin(v as i64))
    }

    /// Largest index with a nonzero entry.
    pub fn of_dims(dims: &[usize]) -> Deg {
        Deg::from_opt(dims.iter().rposition(|&d| d > 0))
    }

    pub fn plus(self, b: i64) -> Deg {
        match self {
            Deg::Fin(a) => Deg::Fin(a + b),
            x => x,
        }
    }

    /// `+` with `-∞` absorbing.
    pub fn add(self, other: Deg) -> Deg {
        match (self, other) {
            (Deg::NegInf, _) | (_, Deg::NegInf) => Deg::NegInf,
            (Deg::PosInf, _) | (_, Deg::PosInf) => Deg::PosInf,
            (Deg::Fin(a), Deg::Fin(b)) => Deg::Fin(a + b),
        }
    }

    pub fn fin(self) -> Option<i64> {
        match self {
            Deg::Fin(a) => Some(a),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Deg::Fin(_))
    }

    /// Whether everything up to this degree lies within `0..=n`.
    pub fn within(self, n: usize) -> bool {
        match self {
            Deg::NegInf => true,
            Deg::Fin(a) => a <= n as i64,
            Deg::PosInf => false,
        }
    }
}

impl fmt::Display for Deg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deg::NegInf => write!(f, "-inf"),
            Deg::Fin(a) => write!(f, "{a}"),
            Deg::PosInf => write!(f, "inf"),
        }
    }
}

impl Serialize for Deg {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Deg::Fin(a) => s.serialize_i64(*a),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// `r + min(r, d)`, the bound for derived width and the stable range.
pub fn width_bound(r: Deg, d: Deg) -> Deg {
    r.add(r.min(d))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certified<T> {
    pub value: T,
    pub certified: bool,
}

impl<T> Certified<T> {
    pub fn new(value: T, certified: bool) -> Self {
        Certified { value, certified }
    }
}

/// One step of a ♯-filtration: a cofactor `M(W)` with `W` in the given degree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cofactor {
    pub degree: usize,
    pub dim: usize,
}

/// Outcome of peeling off `M(Q_i)` at the lowest nonzero degree until nothing is left.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Filtration {
    pub constructed: bool,
    pub cofactors: Vec<Cofactor>,
    /// Degree where some `M(Q_i) -> Q` failed to be injective.
    pub failure_degree: Option<usize>,
}

/// Try to build the cofiltration `V ↠ Q ↠ .. ↠ 0` with kernels `M(W)` within the window.
pub fn sharp_filtration<K: Field>(v: &TruncatedModule<K>) -> Result<Filtration, ModuleError> {
    let k = &v.ctx.field;
    let top = v.truncation;
    let mut q = v.clone();
    let mut cofactors = Vec::new();
    while let Some(i) = q.dims.iter().position(|&d| d > 0) {
        let w = q.component(i);
        let phi = Matrix::identity(k, q.dims[i]);
        let map = hom_from_free(&w, &q, &phi, top)?;
        if let Some(n) = map.maps.iter().position(|m| rank(k, m) < m.cols) {
            return Ok(Filtration { constructed: false, cofactors, failure_degree: Some(n) });
        }
        cofactors.push(Cofactor { degree: i, dim: w.dim });
        q = quotient(&q, &image_of(k, &map)).0;
    }
    Ok(Filtration { constructed: true, cofactors, failure_degree: None })
}

/// Exact interpolation over `ℚ`: coefficients `c_0..c_d` of the polynomial through the points.
pub fn interpolate(points: &[(i64, i64)]) -> Vec<BigRational> {
    let n = points.len();
    let mut coeffs = vec![BigRational::zero(); n.max(1)];
    for (j, &(xj, yj)) in points.iter().enumerate() {
        // basis polynomial prod_{k != j} (x - x_k) / (x_j - x_k)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (kk, &(xk, _)) in points.iter().enumerate() {
            if kk == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (e, c) in basis.iter().enumerate() {
                next[e + 1] += c.clone();
                next[e] -= c * BigRational::from_integer(BigInt::from(xk));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xj - xk));
        }
        let scale = BigRational::from_integer(BigInt::from(yj)) / denom;
        for (e, c) in basis.into_iter().enumerate() {
            coeffs[e] += c * scale.clone();
        }
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

pub fn evaluate(coeffs: &[BigRational], x: i64) -> BigRational {
    let xr = BigRational::from_integer(BigInt::from(x));
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * xr.clone() + c)
}

/// Human-readable form such as `1/2*n^2 - 1/2*n + 1`.
pub fn format_polynomial(coeffs: &[BigRational]) -> String {
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match e {
            0 => String::new(),
            1 => "n".to_string(),
            _ => format!("n^{e}"),
        };
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hilbert {
    pub values: Vec<usize>,
    /// Coefficients `c_0, c_1, ..` as reduced fractions.
    pub coefficients: Option<Vec<String>>,
    pub polynomial: Option<String>,
    /// `r + min(r, d)` from the declared presentation degrees (0 without relations).
    pub stable_range_start: i64,
    /// The same bound with `hd_1` and `hd_0` in place of the declared degrees.
    pub stable_range_start_hd: Certified<i64>,
    /// First degree of the interpolation points.
    pub fit_start: i64,
    /// Whether the polynomial matches every computed value from `stable_range_start_hd` on.
    pub agrees: Option<bool>,
    /// Smallest `e` with agreement on all of `e..=truncation`.
    pub earliest_agreement: Option<usize>,
    pub required_truncation: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Torsion {
    pub torsion_free: Certified<bool>,
    /// Elements of `V_n` dying in `V_N`, for `n < N`.
    pub submodule_dims: Vec<usize>,
    /// `ker(ι_1)`, the elements killed by every transition.
    pub socle_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivedRegularity {
    /// `dim H_1^{D^a}(V)_n` for `a = 1, 2, ..`.
    pub h1da_dims: Vec<Vec<usize>>,
    pub dreg: Certified<Deg>,
    pub dwidth: Certified<Deg>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Regularity {
    pub value: Certified<Deg>,
    pub i_max: usize,
    /// `r + min(r, d) - 1` with the declared degrees.
    pub bound: Deg,
    /// The same with `hd_1`, `hd_0`.
    pub bound_hd: Deg,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SharpFiltered {
    pub flag: Certified<bool>,
    #[serde(flatten)]
    pub filtration: Filtration,
    /// Degrees and dimensions of the nonzero terms of `H_0(V)`.
    pub h0_terms: Vec<Cofactor>,
}

/// Which parts of the report to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    Degrees,
    Torsion,
    Depth,
    Dreg,
    Nagpal,
    Reg,
    Hilbert,
    Filtration,
}

impl Invariant {
    pub const ALL: [Invariant; 8] = [
        Invariant::Degrees,
        Invariant::Torsion,
        Invariant::Depth,
        Invariant::Dreg,
        Invariant::Nagpal,
        Invariant::Reg,
        Invariant::Hilbert,
        Invariant::Filtration,
    ];

    pub fn parse(s: &str) -> Option<Invariant> {
        Some(match s.trim() {
            "degrees" | "hd" => Invariant::Degrees,
            "torsion" => Invariant::Torsion,
            "depth" => Invariant::Depth,
            "dreg" | "dwidth" => Invariant::Dreg,
            "nagpal" => Invariant::Nagpal,
            "reg" | "regularity" => Invariant::Reg,
            "hilbert" => Invariant::Hilbert,
            "filtration" | "sharp" => Invariant::Filtration,
            _ => return None,
        })
    }
}


/// Truncation that certifies the requested invariants, from the declared degrees.
pub fn required_truncation(d: Deg, r: Deg, invariants: &[Invariant], i_max: usize) -> usize {
    let b = width_bound(r, d).max(Deg::Fin(0));
    let b_fin = b.fin().unwrap_or(0);
    let mut need = d.max(r).fin().unwrap_or(0).max(1);
    for inv in invariants {
        let n = match inv {
            Invariant::Degrees | Invariant::Filtration => 0,
            Invariant::Torsion | Invariant::Depth | Invariant::Dreg => b_fin,
            Invariant::Nagpal => b_fin + r.fin().unwrap_or(0),
            Invariant::Reg => {
                if r == Deg::NegInf {
                    0
                } else {
                    b_fin - 1 + i_max as i64
                }
            }
            Invariant::Hilbert => b_fin + d.fin().unwrap_or(0),
        };
        need = need.max(n);
    }
    need as usize
}

/// Lazily computed invariants of one presented module.
pub struct Analyzer<'a, K: Field> {
    pub p: &'a PresentedModule<K>,
    /// Declared generation and relation degrees.
    pub d: Deg,
    pub r: Deg,
    h0_dims: OnceCell<Vec<usize>>,
    h1_dims: OnceCell<Vec<usize>>,
    h1da: OnceCell<Vec<Vec<usize>>>,
    res: OnceCell<Resolution<K>>,
    res_len: usize,
}

impl<'a, K: Field> Analyzer<'a, K> {
    /// `res_len` is the length of the resolution built for `hd_i` and `H_i^{D^a}`.
    pub fn new(p: &'a PresentedModule<K>, res_len: usize) -> Self {
        Analyzer {
            p,
            d: Deg::from_opt(p.gen_bound),
            r: Deg::from_opt(p.rel_bound),
            h0_dims: OnceCell::new(),
            h1_dims: OnceCell::new(),
            h1da: OnceCell::new(),
            res: OnceCell::new(),
            res_len,
        }
    }

    pub fn truncation(&self) -> usize {
        self.p.truncation()
    }

    pub fn module(&self) -> &TruncatedModule<K> {
        &self.p.module
    }

    pub fn resolution(&self) -> Result<&Resolution<K>, ModuleError> {
        if let Some(r) = self.res.get() {
            return Ok(r);
        }
        let r = resolution(&self.p.module, self.res_len)?;
        Ok(self.res.get_or_init(|| r))
    }

    pub fn h0_dims(&self) -> &[usize] {
        self.h0_dims.get_or_init(|| fbg_dims(&h0(&self.p.module)))
    }

    pub fn h1_dims(&self) -> &[usize] {
        self.h1_dims.get_or_init(|| fbg_dims(&h1_of_pair(&self.p.cover, &self.p.relations)))
    }

    pub fn hd0(&self) -> Certified<Deg> {
        Certified::new(Deg::of_dims(self.h0_dims()), self.d.within(self.truncation()))
    }

    pub fn hd1(&self) -> Certified<Deg> {
        Certified::new(Deg::of_dims(self.h1_dims()), self.r.within(self.truncation()))
    }

    /// `dim H_i(V)_n`; `i ≥ 2` needs a resolution of length `i - 1`.
    pub fn homology_dims(&self, i: usize) -> Result<Vec<usize>, ModuleError> {
        match i {
            0 => Ok(self.h0_dims().to_vec()),
            1 => Ok(self.h1_dims().to_vec()),
            _ => {
                let res = self.resolution()?;
                if res.len() < i {
                    return Err(ModuleError::Invalid(format!("resolution too short for H_{i}")));
                }
                Ok(fbg_dims(&homology_from(res, i)))
            }
        }
    }

    /// Degree below which all `H_1^{D^a}(V)` live, shifted by `a`: `dwidth` is at most this.
    pub fn width_window(&self) -> Deg {
        let declared = width_bound(self.r, self.d);
        let hd1 = self.hd1();
        let hd0 = self.hd0();
        if hd1.certified && hd0.certified {
            declared.min(width_bound(hd1.value, hd0.value))
        } else {
            declared
        }
    }

    fn derived_certified(&self) -> bool {
        self.width_window().within(self.truncation())
    }

    /// `dim H_1^{D^a}(V)_n` for `a = 1..=a_max`, degrees `0..=N-a`.
    pub fn h1da_dims(&self) -> Result<&Vec<Vec<usize>>, ModuleError> {
        if let Some(x) = self.h1da.get() {
            return Ok(x);
        }
        let n = self.truncation();
        let hd1 = self.hd1().value;
        let a_max = if hd1 == Deg::NegInf {
            0
        } else {
            let m = hd1.max(self.hd0().value).fin().unwrap_or(0) as usize;
            (m + 1).min(n)
        };
        let mut out = Vec::new();
        for a in 1..=a_max {
            out.push(h1da_intersection(self.p, a)?);
        }
        Ok(self.h1da.get_or_init(|| out))
    }

    pub fn derived_regularity(&self) -> Result<DerivedRegularity, ModuleError> {
        let h = self.h1da_dims()?.clone();
        let mut dreg = Deg::NegInf;
        let mut dwidth = Deg::NegInf;
        for (j, dims) in h.iter().enumerate() {
            let deg = Deg::of_dims(dims);
            dreg = dreg.max(deg);
            dwidth = dwidth.max(deg.plus(j as i64 + 1));
        }
        let c = self.derived_certified();
        Ok(DerivedRegularity { h1da_dims: h, dreg: Certified::new(dreg, c), dwidth: Certified::new(dwidth, c) })
    }

    /// `inf { a : H_1^{D^{a+1}}(V) ≠ 0 }`, `∞` when `H_1(V) = 0`.
    pub fn depth(&self) -> Result<Certified<Deg>, ModuleError> {
        let hd1 = self.hd1();
        if hd1.value == Deg::NegInf {
            return Ok(Certified::new(Deg::PosInf, hd1.certified));
        }
        let h = self.h1da_dims()?;
        let c = self.derived_certified();
        match h.iter().position(|dims| dims.iter().any(|&x| x > 0)) {
            Some(a) => Ok(Certified::new(Deg::Fin(a as i64), c)),
            None => Ok(Certified::new(Deg::PosInf, false)),
        }
    }

    pub fn torsion(&self) -> Result<Torsion, ModuleError> {
        let v = &self.p.module;
        let n = v.truncation;
        let socle_dims = if n == 0 { Vec::new() } else { torsion_kernel(v)?.dims };
        let submodule_dims: Vec<usize> = (0..n).map(|m| killed_by(v, m, n).dim()).collect();
        let free = socle_dims.iter().all(|&x| x == 0);
        Ok(Torsion {
            torsion_free: Certified::new(free, self.derived_certified() && n > 0),
            submodule_dims,
            socle_dims,
        })
    }

    /// Least `b` with `H_1(S_b V) = 0`, searched while `H_1(S_b V)` is fully visible.
    pub fn nagpal_number(&self) -> Result<Certified<Option<usize>>, ModuleError> {
        let n = self.truncation();
        let r = self.r.fin().unwrap_or(0).max(0) as usize;
        for b in 0..=n {
            let visible = n - b >= r;
            let zero = if b == 0 {
                self.h1_dims().iter().all(|&x| x == 0)
            } else {
                let s = shift_presented(self.p, b)?;
                fbg_dims(&h1_of_pair(&s.cover, &s.relations)).iter().all(|&x| x == 0)
            };
            if zero {
                return Ok(Certified::new(Some(b), visible));
            }
        }
        Ok(Certified::new(None, false))
    }

    /// Homological degrees `hd_0, .., hd_{i_max}` with their certification.
    pub fn homological_degrees(&self, i_max: usize) -> Result<Vec<Certified<Deg>>, ModuleError> {
        let mut out = vec![self.hd0(), self.hd1()];
        if i_max < 2 {
            out.truncate(i_max + 1);
            return Ok(out);
        }
        let window = self.homology_window();
        for i in 2..=i_max {
            let dims = self.homology_dims(i)?;
            let w = window.map(|x| x.plus(i as i64));
            let certified = match w {
                Some(w) => w.within(self.truncation()),
                None => false,
            };
            out.push(Certified::new(Deg::of_dims(&dims), certified));
        }
        Ok(out)
    }

    /// `max(dwidth - 1, max(hd_1, d) - 1)`: `hd_i` is at most this plus `i`.
    fn homology_window(&self) -> Option<Deg> {
        let hd1 = self.hd1();
        let hd0 = self.hd0();
        if !(hd1.certified && hd0.certified && self.derived_certified()) {
            return None;
        }
        if hd1.value == Deg::NegInf {
            return Some(Deg::NegInf);
        }
        let dw = self.derived_regularity().ok()?.dwidth.value;
        Some(dw.plus(-1).max(hd1.value.max(hd0.value).plus(-1)))
    }

    /// `max_{1 ≤ i ≤ i_max} hd_i - i`.
    pub fn regularity(&self, i_max: usize) -> Result<Regularity, ModuleError> {
        let hd = self.homological_degrees(i_max)?;
        let mut value = Deg::NegInf;
        let mut certified = true;
        for (i, h) in hd.iter().enumerate().skip(1) {
            value = value.max(h.value.plus(-(i as i64)));
            certified &= h.certified;
        }
        Ok(Regularity {
            value: Certified::new(value, certified),
            i_max,
            bound: width_bound(self.r, self.d).plus(-1),
            bound_hd: width_bound(self.hd1().value, self.hd0().value).plus(-1),
        })
    }

    pub fn hilbert(&self) -> Hilbert {
        let values = self.p.module.dims.clone();
        let n = self.truncation();
        let start = width_bound(self.r, self.d).fin().unwrap_or(0).max(0);
        let hd1 = self.hd1();
        let hd0 = self.hd0();
        let start_hd = width_bound(hd1.value, hd0.value).fin().unwrap_or(0).max(0);
        let fit_start = start_hd.min(start);
        let deg = self.d.fin().unwrap_or(-1).max(hd0.value.fin().unwrap_or(-1));
        let points = (deg + 1) as usize;
        let required = (start + points as i64 - 1).max(0) as usize;
        let mut h = Hilbert {
            values: values.clone(),
            coefficients: None,
            polynomial: None,
            stable_range_start: start,
            stable_range_start_hd: Certified::new(start_hd, hd1.certified && hd0.certified),
            fit_start,
            agrees: None,
            earliest_agreement: None,
            required_truncation: required,
        };
        if fit_start as usize + points > n + 1 {
            return h;
        }
        let pts: Vec<(i64, i64)> =
            (0..points).map(|j| (fit_start + j as i64, values[fit_start as usize + j] as i64)).collect();
        let coeffs = if pts.is_empty() { vec![BigRational::zero()] } else { interpolate(&pts) };
        let matches = |m: usize| evaluate(&coeffs, m as i64) == BigRational::from_integer(BigInt::from(values[m]));
        h.agrees = Some((fit_start as usize..=n).all(matches));
        h.earliest_agreement = Some((0..=n).rev().take_while(|&m| matches(m)).last().unwrap_or(n + 1));
        h.polynomial = Some(format_polynomial(&coeffs));
        h.coefficients = Some(coeffs.iter().map(ToString::to_string).collect());
        h
    }

    pub fn sharp_filtered(&self) -> Result<SharpFiltered, ModuleError> {
        let hd1 = self.hd1();
        let filtration = sharp_filtration(&self.p.module)?;
        let h0_terms = self
            .h0_dims()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(degree, &dim)| Cofactor { degree, dim })
            .collect();
        Ok(SharpFiltered {
            flag: Certified::new(hd1.value == Deg::NegInf, hd1.certified),
            filtration,
            h0_terms,
        })
    }

    /// Degree of `V`, or a lower bound when `V_N ≠ 0` or `V` may still grow.
    pub fn degree(&self) -> Certified<Deg> {
        let dims = &self.p.module.dims;
        let n = self.truncation();
        let deg = Deg::of_dims(dims);
        // once V vanishes at some n ≥ d it vanishes from then on
        let settled = (0..=n).any(|m| dims[m] == 0 && self.d.within(m)) || self.d == Deg::NegInf;
        Certified::new(deg, settled && dims[n] == 0)
    }
}

/// The submodule of `V_n` killed on the way to degree `m`.
pub fn killed_by<K: Field>(v: &TruncatedModule<K>, n: usize, m: usize) -> Subspace<K::Elem> {
    let k = &v.ctx.field;
    let mut t = Matrix::identity(k, v.dims[n]);
    for j in n..m {
        t = v.transitions[j].compose(k, &t);
    }
    Subspace::spanned_by(k, v.dims[n], &kernel(k, &t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};
    use crate::module::{Ctx, ModuleFile};

    fn realize(json: &str, n: usize) -> PresentedModule<Rationals> {
        let f = ModuleFile::parse(json).unwrap();
        let ctx = Ctx::new(Rationals, f.group.build().unwrap());
        f.to_presentation(&ctx).unwrap().realize(n).unwrap()
    }

    const T0: &str = r#"{"field":"Q","group":"trivial","generators":[{"degree":0}],
        "relations":[{"degree":1,"terms":[{"gen":0,"inj":[],"coeff":[1]}]}]}"#;
    const M1: &str = r#"{"field":"Q","group":"trivial","generators":[{"degree":1}]}"#;
    const M01: &str = r#"{"field":"Q","group":"trivial","generators":[{"degree":0},{"degree":1}]}"#;

    #[test]
    fn deg_arithmetic() {
        assert_eq!(width_bound(Deg::Fin(3), Deg::Fin(2)), Deg::Fin(5));
        assert_eq!(width_bound(Deg::NegInf, Deg::Fin(2)), Deg::NegInf);
        assert!(Deg::NegInf < Deg::Fin(-7) && Deg::Fin(9) < Deg::PosInf);
        assert_eq!(serde_json::to_string(&vec![Deg::NegInf, Deg::Fin(2), Deg::PosInf]).unwrap(), r#"["-inf",2,"inf"]"#);
    }

    #[test]
    fn interpolation_recovers_binomials() {
        // C(n, 2) through n = 3, 4, 5
        let c = interpolate(&[(3, 3), (4, 6), (5, 10)]);
        assert_eq!(format_polynomial(&c), "1/2*n^2 - 1/2*n");
        assert_eq!(evaluate(&c, 10), BigRational::from_integer(45.into()));
        assert_eq!(format_polynomial(&interpolate(&[(1, 0)])), "0");
    }

    #[test]
    fn t0_invariants() {
        let p = realize(T0, 4);
        let a = Analyzer::new(&p, 2);
        assert_eq!(a.hd0(), Certified::new(Deg::Fin(0), true));
        assert_eq!(a.hd1(), Certified::new(Deg::Fin(1), true));
        assert_eq!(a.depth().unwrap(), Certified::new(Deg::Fin(0), true));
        let dr = a.derived_regularity().unwrap();
        assert_eq!((dr.dreg.value, dr.dwidth.value), (Deg::Fin(0), Deg::Fin(1)));
        assert_eq!(a.nagpal_number().unwrap(), Certified::new(Some(1), true));
        let reg = a.regularity(1).unwrap();
        assert_eq!(reg.value, Certified::new(Deg::Fin(0), true));
        assert_eq!(reg.bound, Deg::Fin(0));
        let t = a.torsion().unwrap();
        assert!(!t.torsion_free.value);
        assert_eq!(t.submodule_dims, vec![1, 0, 0, 0]);
        let h = a.hilbert();
        assert_eq!(h.polynomial.as_deref(), Some("0"));
        assert_eq!(h.stable_range_start, 1);
        assert_eq!(h.earliest_agreement, Some(1));
        assert!(!a.sharp_filtered().unwrap().filtration.constructed);
        assert_eq!(a.degree(), Certified::new(Deg::Fin(0), true));
    }

    #[test]
    fn free_invariants() {
        let p = realize(M1, 5);
        let a = Analyzer::new(&p, 2);
        assert_eq!(a.hd0().value, Deg::Fin(1));
        assert_eq!(a.homological_degrees(3).unwrap().iter().skip(1).map(|c| c.value).collect::<Vec<_>>(), vec![Deg::NegInf; 3]);
        assert_eq!(a.depth().unwrap().value, Deg::PosInf);
        assert_eq!(a.regularity(3).unwrap().value.value, Deg::NegInf);
        assert_eq!(a.nagpal_number().unwrap().value, Some(0));
        let h = a.hilbert();
        assert_eq!(h.polynomial.as_deref(), Some("n"));
        assert_eq!(h.earliest_agreement, Some(0));
        let dr = a.derived_regularity().unwrap();
        assert_eq!((dr.dreg.value, dr.dwidth.value), (Deg::NegInf, Deg::NegInf));
    }

    #[test]
    fn filtration_of_sum_of_frees() {
        let p = realize(M01, 5);
        let s = Analyzer::new(&p, 1).sharp_filtered().unwrap();
        assert!(s.flag.value && s.filtration.constructed);
        assert_eq!(s.filtration.cofactors, vec![Cofactor { degree: 0, dim: 1 }, Cofactor { degree: 1, dim: 1 }]);
        assert_eq!(s.filtration.cofactors, s.h0_terms);
    }

    #[test]
    fn depth_one_kernel() {
        // ker(M(0) -> T(0)) is M(0) above degree 0, generated by the image of M(1)
        let json = r#"{"field":"Fp","p":2,"group":"trivial","generators":[{"degree":1}],
            "relations":[{"degree":2,"terms":[{"gen":0,"inj":[1],"coeff":[1]},{"gen":0,"inj":[2],"coeff":[-1]}]}]}"#;
        let f = ModuleFile::parse(json).unwrap();
        let ctx = Ctx::new(PrimeField::new(2).unwrap(), f.group.build().unwrap());
        let p = f.to_presentation(&ctx).unwrap().realize(6).unwrap();
        assert_eq!(p.module.dims, vec![0, 1, 1, 1, 1, 1, 1]);
        let a = Analyzer::new(&p, 2);
        assert_eq!(a.depth().unwrap(), Certified::new(Deg::Fin(1), true));
        assert!(a.torsion().unwrap().torsion_free.value);
    }
}
