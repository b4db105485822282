//! Morphisms of FI_G: decorated injections `[n] -> [m]`.

use serde::{Deserialize, Serialize};

use crate::group::{tuples, FiniteGroup, WreathElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphismError {
    #[error("composition of {0} -> {1} after {2} -> {3} does not typecheck")]
    Mismatch(usize, usize, usize, usize),
    #[error("invalid morphism: {0}")]
    Invalid(String),
}

/// `(f, g)` with `f: [n] -> [m]` injective (0-based) and `g: [n] -> G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Morphism {
    pub target: usize,
    pub inj: Vec<usize>,
    pub dec: Vec<usize>,
}

impl Morphism {
    pub fn new(target: usize, inj: Vec<usize>, dec: Vec<usize>, g: &FiniteGroup) -> Result<Self, MorphismError> {
        if inj.len() != dec.len() {
            return Err(MorphismError::Invalid("injection and decoration lengths differ".into()));
        }
        let mut seen = vec![false; target];
        for &x in &inj {
            if x >= target || seen[x] {
                return Err(MorphismError::Invalid(format!("{inj:?} is not an injection into [{target}]")));
            }
            seen[x] = true;
        }
        if dec.iter().any(|&c| c >= g.order()) {
            return Err(MorphismError::Invalid(format!("decoration {dec:?} out of range")));
        }
        Ok(Morphism { target, inj, dec })
    }

    pub fn source(&self) -> usize {
        self.inj.len()
    }

    pub fn identity(n: usize) -> Self {
        Morphism { target: n, inj: (0..n).collect(), dec: vec![0; n] }
    }

    /// The standard inclusion `[n] -> [m]`.
    pub fn standard(n: usize, m: usize) -> Self {
        assert!(n <= m);
        Morphism { target: m, inj: (0..n).collect(), dec: vec![0; n] }
    }

    /// The inclusion `[m-1] -> [m]` whose image misses `skip` (0-based).
    pub fn skipping(m: usize, skip: usize) -> Self {
        let inj = (0..m - 1).map(|x| if x < skip { x } else { x + 1 }).collect();
        Morphism { target: m, inj, dec: vec![0; m - 1] }
    }

    pub fn from_wreath(x: &WreathElement) -> Self {
        Morphism { target: x.degree(), inj: x.perm.clone(), dec: x.dec.clone() }
    }

    pub fn is_increasing(&self) -> bool {
        self.inj.windows(2).all(|w| w[0] < w[1]) && self.dec.iter().all(|d| *d == 0)
    }

    /// Write `self = rep ∘ τ` with `rep` increasing and undecorated, `τ ∈ G_n`.
    pub fn decompose(&self) -> (Vec<usize>, WreathElement) {
        let mut image = self.inj.clone();
        image.sort_unstable();
        let perm = self
            .inj
            .iter()
            .map(|x| image.binary_search(x).unwrap())
            .collect();
        (image, WreathElement { perm, dec: self.dec.clone() })
    }

    /// Write `self = τ ∘ ι` with `ι` the standard inclusion and `τ ∈ G_m`.
    pub fn completion(&self) -> WreathElement {
        let n = self.source();
        let m = self.target;
        let mut used = vec![false; m];
        for &x in &self.inj {
            used[x] = true;
        }
        let mut perm = self.inj.clone();
        perm.extend((0..m).filter(|x| !used[*x]));
        let mut dec = self.dec.clone();
        dec.extend(std::iter::repeat_n(0, m - n));
        WreathElement { perm, dec }
    }
}

/// `(f, g) ∘ (f', g') = (f ∘ f', h)` with `h(x) = g'(x) * g(f'(x))`.
pub fn compose(g: &FiniteGroup, outer: &Morphism, inner: &Morphism) -> Result<Morphism, MorphismError> {
    if inner.target != outer.source() {
        return Err(MorphismError::Mismatch(
            outer.source(),
            outer.target,
            inner.source(),
            inner.target,
        ));
    }
    Ok(Morphism {
        target: outer.target,
        inj: inner.inj.iter().map(|&x| outer.inj[x]).collect(),
        dec: inner
            .inj
            .iter()
            .zip(&inner.dec)
            .map(|(&x, &d)| g.mul(d, outer.dec[x]))
            .collect(),
    })
}

/// All of `Hom([n], [m])`, lexicographic in `(inj, dec)`.
pub fn enumerate_hom(g: &FiniteGroup, n: usize, m: usize) -> Vec<Morphism> {
    let mut injs = Vec::new();
    injections(n, m, &mut Vec::new(), &mut vec![false; m], &mut injs);
    let decs = tuples(g.order(), n);
    let mut out = Vec::with_capacity(injs.len() * decs.len());
    for inj in injs {
        for dec in &decs {
            out.push(Morphism { target: m, inj: inj.clone(), dec: dec.clone() });
        }
    }
    out
}

fn injections(n: usize, m: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for x in 0..m {
        if !used[x] {
            used[x] = true;
            cur.push(x);
            injections(n, m, cur, used, out);
            cur.pop();
            used[x] = false;
        }
    }
}

/// The `n`-element subsets of `[m]` in lexicographic order; these index the
/// orbit representatives of `Hom([n],[m])` under `G_n`.
pub fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            if m - x < n - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// Increasing undecorated injections, one per right `G_n`-orbit on `Hom([n],[m])`.
pub fn orbit_representatives(n: usize, m: usize) -> Vec<Morphism> {
    subsets(n, m)
        .into_iter()
        .map(|s| Morphism { target: m, inj: s, dec: vec![0; n] })
        .collect()
}

/// Rank of an increasing subset among [`subsets`]`(s.len(), m)`.
pub fn subset_rank(s: &[usize], m: usize) -> usize {
    let n = s.len();
    let mut r = 0;
    let mut prev = 0;
    for (i, &x) in s.iter().enumerate() {
        for y in prev..x {
            r += binomial(m - y - 1, n - i - 1);
        }
        prev = x + 1;
    }
    r
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}
