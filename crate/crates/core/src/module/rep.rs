use std::sync::Arc;

use crate::exactla::{Field, Matrix, SparseVec};
use crate::group::{
    enumerate_wreath, generator_index, word_for, wreath_compose, wreath_generators, FiniteGroup,
    Generator, WreathElement,
};

use super::ModuleError;

/// Field, group, and cached group words shared by everything built over them.
#[derive(Clone, Debug)]
pub struct Ctx<K: Field> {
    pub field: K,
    pub group: Arc<FiniteGroup>,
    words: Arc<Vec<Vec<usize>>>,
}

impl<K: Field> Ctx<K> {
    pub fn new(field: K, group: FiniteGroup) -> Self {
        let words = Arc::new(group.words());
        Ctx { field, group: Arc::new(group), words }
    }

    pub fn num_generators(&self, n: usize) -> usize {
        wreath_generators(&self.group, n).len()
    }

    pub fn generators(&self, n: usize) -> Vec<Generator> {
        wreath_generators(&self.group, n)
    }

    pub fn word(&self, x: &WreathElement) -> Vec<usize> {
        word_for(&self.group, &self.words, x)
    }

    /// Word applying decoration by `c` at position 0.
    pub fn decoration_word(&self, n: usize, c: usize) -> Vec<usize> {
        self.words[c]
            .iter()
            .map(|&a| generator_index(&self.group, n, Generator::Decorate(a)))
            .collect()
    }
}

/// Apply a word of generators, first letter first.
pub fn apply_word<E: Clone + PartialEq, K: Field<Elem = E>>(
    k: &K,
    gens: &[Matrix<E>],
    word: &[usize],
    v: &SparseVec<E>,
) -> SparseVec<E> {
    let mut w = v.clone();
    for &i in word {
        w = gens[i].apply(k, &w);
    }
    w
}

/// Check that generator matrices satisfy the defining relations of `G_n`
/// (Coxeter relations, the group law on position 0, and the wreath commutations).
pub fn check_wreath_relations<K: Field>(
    ctx: &Ctx<K>,
    n: usize,
    dim: usize,
    gens: &[Matrix<K::Elem>],
) -> Result<(), String> {
    let k = &ctx.field;
    let g = &ctx.group;
    if gens.len() != ctx.num_generators(n) {
        return Err(format!("expected {} generator matrices, got {}", ctx.num_generators(n), gens.len()));
    }
    for (i, m) in gens.iter().enumerate() {
        if m.rows != dim || m.cols != dim {
            return Err(format!("generator {i} in degree {n} has wrong shape"));
        }
    }
    let same = |a: &[usize], b: &[usize]| -> bool {
        (0..dim).all(|j| {
            let e = vec![(j, k.one())];
            apply_word(k, gens, a, &e) == apply_word(k, gens, b, &e)
        })
    };
    for i in 0..n.saturating_sub(1) {
        if !same(&[i, i], &[]) {
            return Err(format!("swap {i} does not square to one in degree {n}"));
        }
        if i + 2 < n && !same(&[i, i + 1, i, i + 1, i, i + 1], &[]) {
            return Err(format!("braid relation fails at {i} in degree {n}"));
        }
        for j in i + 2..n - 1 {
            if !same(&[i, j], &[j, i]) {
                return Err(format!("swaps {i} and {j} do not commute in degree {n}"));
            }
        }
    }
    if n == 0 {
        return Ok(());
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            let mut w = ctx.decoration_word(n, b);
            w.extend(ctx.decoration_word(n, a));
            if !same(&w, &ctx.decoration_word(n, g.mul(b, a))) {
                return Err(format!("decorations {a},{b} violate the group law in degree {n}"));
            }
        }
    }
    let dec: Vec<usize> = g
        .generators()
        .iter()
        .map(|&c| generator_index(g, n, Generator::Decorate(c)))
        .collect();
    for &t in &dec {
        for i in 1..n.saturating_sub(1) {
            if !same(&[t, i], &[i, t]) {
                return Err(format!("decoration does not commute with swap {i} in degree {n}"));
            }
        }
        if n >= 2 {
            for &u in &dec {
                if !same(&[0, u, 0, t], &[t, 0, u, 0]) {
                    return Err(format!("decorations on positions 0 and 1 do not commute in degree {n}"));
                }
            }
        }
    }
    Ok(())
}

/// A representation of `G_n` on `K^dim`, stored on the generators of `G_n`.
#[derive(Clone, Debug)]
pub struct Rep<K: Field> {
    pub ctx: Ctx<K>,
    pub degree: usize,
    pub dim: usize,
    pub gens: Vec<Matrix<K::Elem>>,
}

impl<K: Field> Rep<K> {
    pub fn new(ctx: &Ctx<K>, degree: usize, dim: usize, gens: Vec<Matrix<K::Elem>>) -> Result<Self, ModuleError> {
        check_wreath_relations(ctx, degree, dim, &gens).map_err(ModuleError::Invalid)?;
        Ok(Rep { ctx: ctx.clone(), degree, dim, gens })
    }

    pub fn new_unchecked(ctx: &Ctx<K>, degree: usize, dim: usize, gens: Vec<Matrix<K::Elem>>) -> Self {
        Rep { ctx: ctx.clone(), degree, dim, gens }
    }

    /// The regular representation `K[G_n]`, basis indexed by [`enumerate_wreath`].
    pub fn regular(ctx: &Ctx<K>, degree: usize) -> Self {
        let g = &ctx.group;
        let elems = enumerate_wreath(g, degree);
        let index: std::collections::HashMap<&WreathElement, usize> =
            elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let gens = ctx
            .generators(degree)
            .into_iter()
            .map(|gen| {
                let x = crate::group::generator_element(degree, gen);
                let cols = elems
                    .iter()
                    .map(|y| vec![(index[&wreath_compose(g, &x, y)], ctx.field.one())])
                    .collect();
                Matrix::from_columns(elems.len(), cols)
            })
            .collect();
        Rep { ctx: ctx.clone(), degree, dim: elems.len(), gens }
    }

    /// `dim` copies of the trivial representation.
    pub fn trivial(ctx: &Ctx<K>, degree: usize, dim: usize) -> Self {
        let gens = (0..ctx.num_generators(degree)).map(|_| Matrix::identity(&ctx.field, dim)).collect();
        Rep { ctx: ctx.clone(), degree, dim, gens }
    }

    pub fn act(&self, x: &WreathElement, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        apply_word(&self.ctx.field, &self.gens, &self.ctx.word(x), v)
    }

    pub fn matrix_of(&self, x: &WreathElement) -> Matrix<K::Elem> {
        let w = self.ctx.word(x);
        let k = &self.ctx.field;
        Matrix::from_columns(
            self.dim,
            (0..self.dim).map(|j| apply_word(k, &self.gens, &w, &vec![(j, k.one())])).collect(),
        )
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        check_wreath_relations(&self.ctx, self.degree, self.dim, &self.gens).map_err(ModuleError::Invalid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;

    #[test]
    fn regular_rep_is_valid_and_acts_by_composition() {
        let ctx = Ctx::new(PrimeField::new(3).unwrap(), FiniteGroup::cyclic(2));
        let r = Rep::regular(&ctx, 2);
        assert_eq!(r.dim, 8);
        r.validate().unwrap();
        let elems = enumerate_wreath(&ctx.group, 2);
        for x in &elems {
            let img = r.act(x, &vec![(0, 1)]);
            let pos = elems.iter().position(|y| y == x).unwrap();
            assert_eq!(img, vec![(pos, 1)]);
        }
    }

    #[test]
    fn broken_action_rejected() {
        let k = PrimeField::new(5).unwrap();
        let ctx = Ctx::new(k, FiniteGroup::trivial());
        // swap acting by 2: does not square to 1
        let bad = vec![Matrix::from_columns(1, vec![vec![(0, 2)]])];
        assert!(Rep::new(&ctx, 2, 1, bad).is_err());
        let sign = vec![Matrix::from_columns(1, vec![vec![(0, 4)]])];
        assert!(Rep::new(&ctx, 2, 1, sign).is_ok());
    }
}
