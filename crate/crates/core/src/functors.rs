//! Shift, derivative and homology functors on truncated FI_G-modules.

use crate::exactla::{intersection, kernel, sum, Field, Matrix, SparseVec, Subspace};
use crate::group::generator_index;
use crate::module::{
    build_free, direct_sum, hom_from_free, kernel_of, quotient, restrict_to, submodule, Graded,
    ModuleError, ModuleMorphism, PresentedModule, Rep, TruncatedModule,
};

fn need(needed: usize, have: usize) -> Result<(), ModuleError> {
    if needed > have {
        Err(ModuleError::Truncation { needed, have })
    } else {
        Ok(())
    }
}

/// `S_b V`: degree `n` is `V_{n+b}` with `G_n` acting on the first `n` points.
pub fn shift<K: Field>(v: &TruncatedModule<K>, b: usize) -> Result<TruncatedModule<K>, ModuleError> {
    need(b, v.truncation)?;
    let g = &v.ctx.group;
    let top = v.truncation - b;
    let actions = (0..=top)
        .map(|n| {
            v.ctx
                .generators(n)
                .into_iter()
                .map(|gen| v.actions[n + b][generator_index(g, n + b, gen)].clone())
                .collect()
        })
        .collect();
    // the new point of S_b lands in position n, below the b shifted points
    let transitions = (0..top).map(|n| v.insertion_matrix(n + b + 1, n)).collect();
    Ok(TruncatedModule {
        ctx: v.ctx.clone(),
        truncation: top,
        dims: v.dims[b..].to_vec(),
        actions,
        transitions,
    })
}

pub fn shift_morphism<E: Clone + PartialEq>(phi: &ModuleMorphism<E>, b: usize) -> ModuleMorphism<E> {
    ModuleMorphism { maps: phi.maps[b..].to_vec() }
}

pub fn shift_graded<E: Clone + PartialEq>(u: &Graded<E>, b: usize) -> Graded<E> {
    u[b..].to_vec()
}

/// `ι_b: V -> S_b V`, induced by the standard inclusions `[n] -> [n+b]`.
pub fn iota<K: Field>(v: &TruncatedModule<K>, b: usize) -> Result<ModuleMorphism<K::Elem>, ModuleError> {
    need(b, v.truncation)?;
    let k = &v.ctx.field;
    let maps = (0..=v.truncation - b)
        .map(|n| {
            let mut m = Matrix::identity(k, v.dims[n]);
            for d in n..n + b {
                m = v.transitions[d].compose(k, &m);
            }
            m
        })
        .collect();
    Ok(ModuleMorphism { maps })
}

/// `D^a V` together with the subspaces `Σ_i V_{n+a-{n+i}} ⊆ V_{n+a}` it is the quotient by.
#[derive(Clone, Debug)]
pub struct Derivative<K: Field> {
    pub a: usize,
    pub module: TruncatedModule<K>,
    pub subspaces: Graded<K::Elem>,
    /// `S_a V -> D^a V`.
    pub projection: ModuleMorphism<K::Elem>,
}

/// The subspace `Σ_{i<a} (image of the inclusion skipping n+i)` of `V_{n+a}`.
pub fn derivative_subspace<K: Field>(v: &TruncatedModule<K>, n: usize, a: usize, src: &[SparseVec<K::Elem>]) -> Subspace<K::Elem> {
    let k = &v.ctx.field;
    let m = n + a;
    let mut s = Subspace::new(v.dims[m]);
    for i in 0..a {
        for x in src {
            s.insert(k, &v.insertion(m, n + i, x));
        }
    }
    s
}

pub fn derivative<K: Field>(v: &TruncatedModule<K>, a: usize) -> Result<Derivative<K>, ModuleError> {
    need(a, v.truncation)?;
    let k = &v.ctx.field;
    let shifted = shift(v, a)?;
    let subspaces: Graded<K::Elem> = (0..=shifted.truncation)
        .map(|n| {
            if a == 0 {
                Subspace::new(v.dims[n])
            } else {
                let basis: Vec<_> = (0..v.dims[n + a - 1]).map(|j| vec![(j, k.one())]).collect();
                derivative_subspace(v, n, a, &basis)
            }
        })
        .collect();
    let (module, projection) = quotient(&shifted, &subspaces);
    Ok(Derivative { a, module, subspaces, projection })
}

/// `D^a φ` for `φ: V -> W`, given both derivatives.
pub fn derivative_morphism<K: Field>(
    k: &K,
    phi: &ModuleMorphism<K::Elem>,
    src: &Derivative<K>,
    tgt: &Derivative<K>,
) -> ModuleMorphism<K::Elem> {
    let a = src.a;
    let top = src.module.truncation.min(tgt.module.truncation);
    let maps = (0..=top)
        .map(|n| {
            let reps = src.subspaces[n].quotient_basis().reps;
            let qb = tgt.subspaces[n].quotient_basis();
            Matrix::from_columns(
                tgt.module.dims[n],
                reps.iter()
                    .map(|&c| tgt.subspaces[n].project(k, &qb, &phi.maps[n + a].columns[c]))
                    .collect(),
            )
        })
        .collect();
    ModuleMorphism { maps }
}

/// A graded `G_n`-representation, one component per degree.
pub type FbgModule<K> = Vec<Rep<K>>;

pub fn fbg_dims<K: Field>(m: &FbgModule<K>) -> Vec<usize> {
    m.iter().map(|r| r.dim).collect()
}

/// `A / B` for `G_n`-stable subspaces `B ⊆ A ⊆ V_n`, as a representation.
pub fn subquotient_rep<K: Field>(v: &TruncatedModule<K>, n: usize, a: &Subspace<K::Elem>, b: &Subspace<K::Elem>) -> Rep<K> {
    let k = &v.ctx.field;
    let b_in_a: Vec<SparseVec<K::Elem>> = b.basis().iter().map(|x| a.coords(k, x).expect("B ⊆ A")).collect();
    let bs = Subspace::spanned_by(k, a.dim(), &b_in_a);
    let qb = bs.quotient_basis();
    let gens = (0..v.actions[n].len())
        .map(|g| {
            Matrix::from_columns(
                qb.dim(),
                qb.reps
                    .iter()
                    .map(|&c| {
                        let img = v.act_gen(n, g, &a.basis()[c]);
                        bs.project(k, &qb, &a.coords(k, &img).expect("A is stable"))
                    })
                    .collect(),
            )
        })
        .collect();
    Rep::new_unchecked(&v.ctx, n, qb.dim(), gens)
}

/// `H_0(V)_n = V_n / V_{<n}` with its `G_n`-action.
pub fn h0<K: Field>(v: &TruncatedModule<K>) -> FbgModule<K> {
    (0..=v.truncation)
        .map(|n| subquotient_rep(v, n, &Subspace::full(&v.ctx.field, v.dims[n]), &v.lower_span(n)))
        .collect()
}

/// Generators of a relatively projective cover of the submodule `u ⊆ x`: in each
/// degree a `G_n`-stable `W_n ⊆ u_n` with `W_n + u_{<n} = u_n`.
pub fn cover_generators<K: Field>(x: &TruncatedModule<K>, u: &Graded<K::Elem>) -> Vec<Subspace<K::Elem>> {
    let k = &x.ctx.field;
    let mut out = Vec::new();
    for n in 0..=x.truncation {
        let mut span = if n == 0 { Subspace::new(x.dims[0]) } else { x.lower_span_of(n, u[n - 1].basis()) };
        let mut w = Subspace::new(x.dims[n]);
        if span.dim() < u[n].dim() {
            // prefer lifts with small orbits
            let mut cands: Vec<&SparseVec<K::Elem>> = u[n].basis().iter().collect();
            cands.sort_by_key(|c| c.len());
            for c in cands {
                if span.contains(k, c) {
                    continue;
                }
                let before = w.dim();
                x.close_under_group(n, &mut w, vec![c.clone()]);
                for r in &w.basis()[before..] {
                    span.insert(k, r);
                }
                if span.dim() == u[n].dim() {
                    break;
                }
            }
        }
        out.push(w);
    }
    out
}

/// A relatively projective module `F = ⊕ M(W_n)` with a map onto `u ⊆ x`.
#[derive(Clone, Debug)]
pub struct Cover<K: Field> {
    pub generators: Vec<Rep<K>>,
    pub module: TruncatedModule<K>,
    pub map: ModuleMorphism<K::Elem>,
}

pub fn cover<K: Field>(x: &TruncatedModule<K>, u: &Graded<K::Elem>) -> Result<Cover<K>, ModuleError> {
    let k = &x.ctx.field;
    let n_top = x.truncation;
    let ws = cover_generators(x, u);
    let mut generators = Vec::new();
    let mut frees = Vec::new();
    let mut maps = Vec::new();
    for (n, w) in ws.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let gens = (0..x.actions[n].len())
            .map(|g| {
                Matrix::from_columns(
                    w.dim(),
                    w.basis().iter().map(|b| w.coords(k, &x.act_gen(n, g, b)).expect("stable")).collect(),
                )
            })
            .collect();
        let rep = Rep::new_unchecked(&x.ctx, n, w.dim(), gens);
        let phi = Matrix::from_columns(x.dims[n], w.basis().to_vec());
        maps.push(hom_from_free(&rep, x, &phi, n_top)?);
        frees.push(build_free(&rep, n_top));
        generators.push(rep);
    }
    if frees.is_empty() {
        let zero = TruncatedModule::zero(&x.ctx, n_top);
        let map = ModuleMorphism { maps: x.dims.iter().map(|&d| Matrix::zero(d, 0)).collect() };
        return Ok(Cover { generators, module: zero, map });
    }
    let module = direct_sum(&x.ctx, &frees.iter().collect::<Vec<_>>());
    let map = ModuleMorphism {
        maps: (0..=n_top)
            .map(|n| {
                let cols = maps.iter().flat_map(|m| m.maps[n].columns.iter().cloned()).collect();
                Matrix::from_columns(x.dims[n], cols)
            })
            .collect(),
    };
    Ok(Cover { generators, module, map })
}

/// A resolution `.. -> F_1 -> F_0 -> V` by relatively projective modules, built from covers of
/// successive kernels. `kernels[i]` is the kernel of `F_i -> F_{i-1}` (of `F_0 -> V` for `i = 0`).
#[derive(Clone, Debug)]
pub struct Resolution<K: Field> {
    pub frees: Vec<TruncatedModule<K>>,
    pub generators: Vec<Vec<Rep<K>>>,
    pub differentials: Vec<ModuleMorphism<K::Elem>>,
    pub kernels: Vec<Graded<K::Elem>>,
}

impl<K: Field> Resolution<K> {
    pub fn len(&self) -> usize {
        self.frees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frees.is_empty()
    }

    /// Whether `F_i` has exactly the size of `H_0` of what it covers in every degree.
    pub fn is_minimal_at(&self, i: usize, target: &TruncatedModule<K>) -> bool {
        let sub = if i == 0 {
            (0..=target.truncation).map(|n| Subspace::full(&target.ctx.field, target.dims[n])).collect::<Vec<_>>()
        } else {
            self.kernels[i - 1].clone()
        };
        let x = if i == 0 { target } else { &self.frees[i - 1] };
        self.generators[i].iter().all(|w| {
            let n = w.degree;
            let lower = if n == 0 { 0 } else { x.lower_span_of(n, sub[n - 1].basis()).dim() };
            w.dim == sub[n].dim() - lower
        })
    }
}

/// Build `F_0, .., F_len` (and the kernel of the last differential).
pub fn resolution<K: Field>(v: &TruncatedModule<K>, len: usize) -> Result<Resolution<K>, ModuleError> {
    let k = &v.ctx.field;
    let full: Graded<K::Elem> = v.dims.iter().map(|&d| Subspace::full(k, d)).collect();
    let c0 = cover(v, &full)?;
    let mut res = Resolution {
        kernels: vec![kernel_of(k, &c0.map)],
        frees: vec![c0.module],
        generators: vec![c0.generators],
        differentials: vec![c0.map],
    };
    for i in 1..=len {
        let prev = &res.frees[i - 1];
        let c = cover(prev, &res.kernels[i - 1])?;
        res.kernels.push(kernel_of(k, &c.map));
        res.frees.push(c.module);
        res.generators.push(c.generators);
        res.differentials.push(c.map);
    }
    Ok(res)
}

/// `H_i(V)` from a resolution: `H_0(V)_n = F_{0,n} / (K_{1,n} + F_{0,<n})` and, for `i ≥ 1`,
/// `H_i(V)_n = (K_{i,n} ∩ F_{i-1,<n}) / (K_i)_{<n}`.
pub fn homology_from<K: Field>(res: &Resolution<K>, i: usize) -> FbgModule<K> {
    if i == 0 {
        let f = &res.frees[0];
        let k = &f.ctx.field;
        return (0..=f.truncation)
            .map(|n| {
                let lower = sum(k, &f.lower_span(n), &res.kernels[0][n]);
                subquotient_rep(f, n, &Subspace::full(k, f.dims[n]), &lower)
            })
            .collect();
    }
    let f = &res.frees[i - 1];
    let kk = &res.kernels[i - 1];
    h1_of_pair(f, kk)
}

/// `(K_n ∩ C_{<n}) / K_{<n}`: the first homology of `C / K` when `C` is relatively projective.
pub fn h1_of_pair<K: Field>(c: &TruncatedModule<K>, kk: &Graded<K::Elem>) -> FbgModule<K> {
    let k = &c.ctx.field;
    (0..=c.truncation)
        .map(|n| {
            if n == 0 || kk[n].is_zero() {
                return Rep::new_unchecked(&c.ctx, n, 0, (0..c.actions[n].len()).map(|_| Matrix::zero(0, 0)).collect());
            }
            let a = intersection(k, &kk[n], &c.lower_span(n));
            let b = c.lower_span_of(n, kk[n - 1].basis());
            subquotient_rep(c, n, &a, &b)
        })
        .collect()
}

pub fn homology<K: Field>(v: &TruncatedModule<K>, i: usize) -> Result<FbgModule<K>, ModuleError> {
    let res = resolution(v, i.saturating_sub(1))?;
    Ok(homology_from(&res, i))
}

/// `H_i^{D^a}(V)` as an FI_G-module (truncated at `truncation - a`), computed as the
/// homology of `D^a` applied to a resolution.
pub fn derived_derivative_from<K: Field>(
    v: &TruncatedModule<K>,
    res: &Resolution<K>,
    i: usize,
    a: usize,
) -> Result<TruncatedModule<K>, ModuleError> {
    let k = &v.ctx.field;
    if i == 0 {
        return Ok(derivative(v, a)?.module);
    }
    if res.len() <= i {
        return Err(ModuleError::Invalid(format!("resolution too short for degree {i}")));
    }
    let fi = &res.frees[i];
    let fprev = &res.frees[i - 1];
    let di = derivative(fi, a)?;
    let dprev = derivative(fprev, a)?;
    let dd = derivative_morphism(k, &res.differentials[i], &di, &dprev);
    let z = kernel_of(k, &dd);
    // image of D^a F_{i+1} = image of ker(d_i) under S_a F_i -> D^a F_i
    let b: Graded<K::Elem> = (0..=di.module.truncation)
        .map(|n| {
            let vecs: Vec<_> = res.kernels[i][n + a]
                .basis()
                .iter()
                .map(|x| di.projection.maps[n].apply(k, x))
                .collect();
            Subspace::spanned_by(k, di.module.dims[n], &vecs)
        })
        .collect();
    let (zmod, _) = submodule(&di.module, &z);
    let b_in_z = restrict_to(k, &z, &b);
    Ok(quotient(&zmod, &b_in_z).0)
}

pub fn derived_derivative<K: Field>(v: &TruncatedModule<K>, i: usize, a: usize) -> Result<TruncatedModule<K>, ModuleError> {
    if i == 0 {
        return Ok(derivative(v, a)?.module);
    }
    let res = resolution(v, i)?;
    derived_derivative_from(v, &res, i, a)
}

/// `H_1^{D^a}(V)_n = (K_{n+a} ∩ Σ_i C_{n+a-{n+i}}) / Σ_i K_{n+a-{n+i}}` for `V = C/K`,
/// as dimensions in degrees `0..=truncation - a`.
pub fn h1da_intersection<K: Field>(p: &PresentedModule<K>, a: usize) -> Result<Vec<usize>, ModuleError> {
    let c = &p.cover;
    need(a, c.truncation)?;
    let k = &c.ctx.field;
    let mut out = Vec::new();
    for n in 0..=c.truncation - a {
        if a == 0 {
            out.push(0);
            continue;
        }
        let m = n + a;
        let cbasis: Vec<_> = (0..c.dims[m - 1]).map(|j| vec![(j, k.one())]).collect();
        let csum = derivative_subspace(c, n, a, &cbasis);
        let ksum = derivative_subspace(c, n, a, p.relations[m - 1].basis());
        let inter = intersection(k, &p.relations[m], &csum);
        out.push(inter.dim() - ksum.dim());
    }
    Ok(out)
}

/// `H_1^D(V) = ker(ι_1: V -> S V)` as a submodule of `V` (truncated one below `V`).
pub fn torsion_kernel<K: Field>(v: &TruncatedModule<K>) -> Result<TruncatedModule<K>, ModuleError> {
    let i = iota(v, 1)?;
    let k = &v.ctx.field;
    let restricted = v.restrict(v.truncation - 1);
    let ker: Graded<K::Elem> = i.maps.iter().map(|m| Subspace::spanned_by(k, m.cols, &kernel(k, m))).collect();
    Ok(submodule(&restricted, &ker).0)
}

/// Presentation data for `S_b` of a presented module: `S_b C` stays relatively projective.
pub fn shift_presented<K: Field>(p: &PresentedModule<K>, b: usize) -> Result<PresentedModule<K>, ModuleError> {
    let cover = shift(&p.cover, b)?;
    let rels = shift_graded(&p.relations, b);
    Ok(PresentedModule::new(cover, rels, p.gen_bound, p.rel_bound))
}

/// Present an arbitrary module as a quotient of a relatively projective cover.
pub fn present<K: Field>(v: &TruncatedModule<K>) -> Result<PresentedModule<K>, ModuleError> {
    let k = &v.ctx.field;
    let full: Graded<K::Elem> = v.dims.iter().map(|&d| Subspace::full(k, d)).collect();
    let c = cover(v, &full)?;
    let gen_bound = c.generators.iter().map(|w| w.degree).max();
    let rels = kernel_of(k, &c.map);
    // generators of the kernel visible in the window
    let rel_bound = (0..=v.truncation).rev().find(|&n| {
        let lower = if n == 0 { 0 } else { c.module.lower_span_of(n, rels[n - 1].basis()).dim() };
        rels[n].dim() > lower
    });
    Ok(PresentedModule::new(c.module, rels, gen_bound, rel_bound))
}

/// The isomorphism `S D V -> D S V` induced on `V_{n+2}` by swapping the two top points.
/// Returns both modules and the map.
pub fn shift_derivative_swap<K: Field>(
    v: &TruncatedModule<K>,
) -> Result<(TruncatedModule<K>, TruncatedModule<K>, ModuleMorphism<K::Elem>), ModuleError> {
    need(2, v.truncation)?;
    let k = &v.ctx.field;
    let dv = derivative(v, 1)?;
    let sd = shift(&dv.module, 1)?;
    let ds = derivative(&shift(v, 1)?, 1)?;
    let g = &v.ctx.group;
    let maps = (0..=sd.truncation)
        .map(|n| {
            // S D V_n is a quotient of V_{n+2}; its basis is a set of basis vectors of V_{n+2}
            let reps = dv.subspaces[n + 1].quotient_basis().reps;
            let qb = ds.subspaces[n].quotient_basis();
            let swap = generator_index(g, n + 2, crate::group::Generator::Swap(n));
            Matrix::from_columns(
                ds.module.dims[n],
                reps.iter()
                    .map(|&c| ds.subspaces[n].project(k, &qb, &v.act_gen(n + 2, swap, &vec![(c, k.one())])))
                    .collect(),
            )
        })
        .collect();
    Ok((sd, ds.module, ModuleMorphism { maps }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};
    use crate::figcat::binomial;
    use crate::group::FiniteGroup;
    use crate::module::{Ctx, ModuleFile};

    fn realize(json: &str, n: usize) -> PresentedModule<Rationals> {
        let f = ModuleFile::parse(json).unwrap();
        let ctx = Ctx::new(Rationals, f.group.build().unwrap());
        f.to_presentation(&ctx).unwrap().realize(n).unwrap()
    }

    const T0: &str = r#"{"field":"Q","group":"trivial","generators":[{"degree":0}],
        "relations":[{"degree":1,"terms":[{"gen":0,"inj":[],"coeff":["1"]}]}]}"#;

    #[test]
    fn shift_of_free_is_valid_and_splits() {
        for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(2)] {
            let ctx = Ctx::new(PrimeField::new(3).unwrap(), g);
            let o = ctx.group.order();
            for m in 0..=2usize {
                let f = build_free(&Rep::regular(&ctx, m), 6);
                let s = shift(&f, 1).unwrap();
                s.validate().unwrap();
                for n in 0..=5usize {
                    let hom = |a: usize, b: usize| -> usize {
                        if a > b { 0 } else { binomial(b, a) * (1..=a).product::<usize>() * o.pow(a as u32) }
                    };
                    let expect = if m == 0 { hom(0, n) } else { m * o * hom(m - 1, n) + hom(m, n) };
                    assert_eq!(s.dims[n], expect);
                }
            }
        }
    }

    #[test]
    fn derivative_of_free_is_restriction() {
        let ctx = Ctx::new(Rationals, FiniteGroup::cyclic(2));
        let f = build_free(&Rep::regular(&ctx, 2), 6);
        let d = derivative(&f, 1).unwrap();
        d.module.validate().unwrap();
        // D M(W) = M(Res W), Res of the regular rep of G_2 has dim 8
        for n in 0..=5 {
            assert_eq!(d.module.dims[n], binomial(n, 1) * 8);
        }
        let dd = derivative(&d.module, 1).unwrap();
        let d2 = derivative(&f, 2).unwrap();
        d2.module.validate().unwrap();
        assert_eq!(dd.module.dims, d2.module.dims);
    }

    #[test]
    fn t0_homology() {
        let p = realize(T0, 5);
        let v = &p.module;
        assert_eq!(fbg_dims(&h0(v)), vec![1, 0, 0, 0, 0, 0]);
        let res = resolution(v, 2).unwrap();
        assert_eq!(fbg_dims(&homology_from(&res, 1)), vec![0, 1, 0, 0, 0, 0]);
        assert_eq!(fbg_dims(&homology_from(&res, 2)), vec![0, 0, 1, 0, 0, 0]);
        assert_eq!(fbg_dims(&h1_of_pair(&p.cover, &p.relations)), vec![0, 1, 0, 0, 0, 0]);
        for i in 0..=2 {
            assert!(res.is_minimal_at(i, v));
        }
    }

    #[test]
    fn t0_derived_derivatives() {
        let p = realize(T0, 5);
        let v = &p.module;
        // H_1^D(T(0)) = T(0): killed by the transition
        let h = derived_derivative(v, 1, 1).unwrap();
        assert_eq!(h.dims, vec![1, 0, 0, 0, 0]);
        assert_eq!(h1da_intersection(&p, 1).unwrap(), vec![1, 0, 0, 0, 0]);
        assert_eq!(torsion_kernel(v).unwrap().dims, vec![1, 0, 0, 0, 0]);
        // D^2 of the kernel M(0)_{>=1}: H_1^{D^2}(T(0))_0 = 0
        assert_eq!(h1da_intersection(&p, 2).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(derived_derivative(v, 1, 2).unwrap().dims, vec![0, 0, 0, 0]);
        assert_eq!(derived_derivative(v, 2, 1).unwrap().dims, vec![0, 0, 0, 0, 0]);
    }

    #[test]
    fn shift_and_derivative_commute() {
        let ctx = Ctx::new(PrimeField::new(3).unwrap(), FiniteGroup::cyclic(2));
        let f = ModuleFile::parse(r#"{"field":"Fp","p":3,"group":"Z2","generators":[{"degree":1},{"degree":2}],
            "relations":[{"degree":2,"terms":[{"gen":0,"inj":[2],"dec":[1],"coeff":[1]},{"gen":1,"inj":[2,1],"coeff":[1]}]}]}"#).unwrap();
        let p = f.to_presentation(&ctx).unwrap().realize(6).unwrap();
        let (sd, ds, tau) = shift_derivative_swap(&p.module).unwrap();
        sd.check_morphism(&ds, &tau).unwrap();
        for m in &tau.maps {
            assert_eq!(m.rows, m.cols);
            assert_eq!(crate::exactla::rank(&ctx.field, m), m.cols);
        }
    }

    #[test]
    fn iota_is_a_morphism() {
        let p = realize(T0, 4);
        let s = shift(&p.cover, 2).unwrap();
        let i = iota(&p.cover, 2).unwrap();
        p.cover.restrict(2).check_morphism(&s, &i).unwrap();
    }
}
