use std::collections::HashMap;

use crate::exactla::{Field, Matrix, SparseVec};
use crate::figcat::{binomial, subset_rank, subsets, Morphism};
use crate::group::{generator_element, WreathElement};

use super::rep::{Ctx, Rep};
use super::truncated::{ModuleMorphism, TruncatedModule};
use super::ModuleError;

/// Dimension of `M(W)_n` for `W` of degree `m`.
pub fn free_dim(m: usize, dim_w: usize, n: usize) -> usize {
    binomial(n, m) * dim_w
}

/// Basis index of `rep_S ⊗ w_j` in `M(W)_n`.
fn basis_index(subset: &[usize], n: usize, dim_w: usize, j: usize) -> usize {
    subset_rank(subset, n) * dim_w + j
}

/// The element `(f,g) ⊗ w` of `M(W)_n`, where `f: [m] -> [n]`.
pub fn free_element<K: Field>(w_rep: &Rep<K>, f: &Morphism, w: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
    assert_eq!(f.source(), w_rep.degree);
    let (image, tau) = f.decompose();
    let block = subset_rank(&image, f.target) * w_rep.dim;
    w_rep.act(&tau, w).into_iter().map(|(i, x)| (block + i, x)).collect()
}

/// The relatively projective module `M(W)` in degrees `0..=truncation`.
pub fn build_free<K: Field>(w_rep: &Rep<K>, truncation: usize) -> TruncatedModule<K> {
    let ctx = &w_rep.ctx;
    let k = &ctx.field;
    let m = w_rep.degree;
    let dw = w_rep.dim;
    let mut cache: HashMap<WreathElement, Matrix<K::Elem>> = HashMap::new();
    let mut dims = Vec::new();
    let mut actions = Vec::new();
    let mut transitions = Vec::new();
    for n in 0..=truncation {
        let subs = if n >= m { subsets(m, n) } else { Vec::new() };
        let dim = subs.len() * dw;
        dims.push(dim);
        let mut acts = Vec::new();
        for gen in ctx.generators(n) {
            let x = generator_element(n, gen);
            let mut cols = vec![Vec::new(); dim];
            for s in &subs {
                let f = Morphism {
                    target: n,
                    inj: s.iter().map(|&p| x.perm[p]).collect(),
                    dec: s.iter().map(|&p| x.dec[p]).collect(),
                };
                let (image, tau) = f.decompose();
                let block = subset_rank(&image, n) * dw;
                let src = subset_rank(s, n) * dw;
                let rho = cache.entry(tau.clone()).or_insert_with(|| w_rep.matrix_of(&tau));
                for j in 0..dw {
                    cols[src + j] = rho.columns[j].iter().map(|(i, c)| (block + i, c.clone())).collect();
                }
            }
            acts.push(Matrix::from_columns(dim, cols));
        }
        actions.push(acts);
        if n < truncation {
            let next = if n + 1 >= m { free_dim(m, dw, n + 1) } else { 0 };
            let mut cols = Vec::with_capacity(dim);
            for s in &subs {
                for j in 0..dw {
                    cols.push(vec![(basis_index(s, n + 1, dw, j), k.one())]);
                }
            }
            transitions.push(Matrix::from_columns(next, cols));
        }
    }
    TruncatedModule { ctx: ctx.clone(), truncation, dims, actions, transitions }
}

/// Extend a `G_m`-map `phi: W -> V_m` to the module map `M(W) -> V`.
pub fn hom_from_free<K: Field>(
    w_rep: &Rep<K>,
    target: &TruncatedModule<K>,
    phi: &Matrix<K::Elem>,
    truncation: usize,
) -> Result<ModuleMorphism<K::Elem>, ModuleError> {
    let ctx: &Ctx<K> = &target.ctx;
    let k = &ctx.field;
    let m = w_rep.degree;
    if truncation > target.truncation {
        return Err(ModuleError::Truncation { needed: truncation, have: target.truncation });
    }
    if phi.cols != w_rep.dim || (m <= target.truncation && phi.rows != target.dims[m]) {
        return Err(ModuleError::Invalid("map out of W has wrong shape".into()));
    }
    if m <= truncation {
        for g in 0..w_rep.gens.len() {
            if phi.compose(k, &w_rep.gens[g]) != target.actions[m][g].compose(k, phi) {
                return Err(ModuleError::Invalid("map out of W is not equivariant".into()));
            }
        }
    }
    let dw = w_rep.dim;
    let mut maps = Vec::new();
    let mut pushed: Vec<SparseVec<K::Elem>> = phi.columns.clone();
    for n in 0..=truncation {
        if n < m {
            maps.push(Matrix::zero(target.dims[n], 0));
            continue;
        }
        if n > m {
            pushed = pushed.iter().map(|v| target.transition(n - 1, v)).collect();
        }
        let subs = subsets(m, n);
        let mut cols = vec![Vec::new(); subs.len() * dw];
        for s in &subs {
            let rep = Morphism { target: n, inj: s.clone(), dec: vec![0; m] };
            let word = ctx.word(&rep.completion());
            let src = subset_rank(s, n) * dw;
            for j in 0..dw {
                cols[src + j] = super::rep::apply_word(k, &target.actions[n], &word, &pushed[j]);
            }
        }
        maps.push(Matrix::from_columns(target.dims[n], cols));
    }
    Ok(ModuleMorphism { maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};
    use crate::figcat::{compose, enumerate_hom};
    use crate::group::FiniteGroup;

    #[test]
    fn free_on_regular_is_valid() {
        for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::s3()] {
            let ctx = Ctx::new(PrimeField::new(3).unwrap(), g);
            for m in 0..=2 {
                let w = Rep::regular(&ctx, m);
                let f = build_free(&w, 4);
                f.validate().unwrap();
                for n in 0..=4 {
                    assert_eq!(f.dims[n], enumerate_hom(&ctx.group, m, n).len());
                }
            }
        }
    }

    #[test]
    fn induced_maps_compose() {
        let ctx = Ctx::new(Rationals, FiniteGroup::cyclic(2));
        let w = Rep::regular(&ctx, 1);
        let f = build_free(&w, 4);
        let k = &ctx.field;
        let g = &ctx.group;
        for a in enumerate_hom(g, 2, 3).iter().step_by(5) {
            for b in enumerate_hom(g, 1, 2).iter().step_by(3) {
                let ab = compose(g, a, b).unwrap();
                let lhs = f.induced_map(a).unwrap().compose(k, &f.induced_map(b).unwrap());
                assert_eq!(lhs, f.induced_map(&ab).unwrap());
            }
        }
    }

    #[test]
    fn free_element_matches_induced_map() {
        let ctx = Ctx::new(PrimeField::new(5).unwrap(), FiniteGroup::cyclic(3));
        let w = Rep::regular(&ctx, 1);
        let f = build_free(&w, 3);
        let e = vec![(0usize, 1u64)];
        for h in enumerate_hom(&ctx.group, 1, 3) {
            let direct = free_element(&w, &h, &e);
            let via = f.apply_morphism(&h, &e);
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn hom_from_free_is_a_morphism() {
        let ctx = Ctx::new(PrimeField::new(7).unwrap(), FiniteGroup::cyclic(2));
        let target = build_free(&Rep::regular(&ctx, 1), 4);
        let w = Rep::regular(&ctx, 2);
        // send the identity of G_2 to an element of M(1)_2
        let v0 = vec![(0usize, 1u64), (3, 2)];
        let cols = crate::group::enumerate_wreath(&ctx.group, 2)
            .iter()
            .map(|x| target.act(2, x, &v0))
            .collect();
        let phi = Matrix::from_columns(target.dims[2], cols);
        let src = build_free(&w, 4);
        let mor = hom_from_free(&w, &target, &phi, 4).unwrap();
        src.check_morphism(&target, &mor).unwrap();
    }
}
