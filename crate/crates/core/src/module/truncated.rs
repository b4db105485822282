use crate::exactla::{kernel, Field, Matrix, QuotientBasis, SparseVec, Subspace};
use crate::figcat::Morphism;
use crate::group::{generator_index, Generator, WreathElement};

use super::rep::{apply_word, check_wreath_relations, Ctx, Rep};
use super::ModuleError;

/// One subspace per degree `0..=truncation`.
pub type Graded<E> = Vec<Subspace<E>>;

/// An FI_G-module known in degrees `0..=truncation`, stored as a `G_n`-action on
/// each `V_n` (on generators) plus the maps `X_n: V_n -> V_{n+1}` induced by the
/// standard inclusions.
#[derive(Clone, Debug)]
pub struct TruncatedModule<K: Field> {
    pub ctx: Ctx<K>,
    pub truncation: usize,
    pub dims: Vec<usize>,
    pub actions: Vec<Vec<Matrix<K::Elem>>>,
    pub transitions: Vec<Matrix<K::Elem>>,
}

/// A family of linear maps `V_n -> W_n` for `n = 0..=truncation`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMorphism<E> {
    pub maps: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> ModuleMorphism<E> {
    pub fn truncation(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn compose<K: Field<Elem = E>>(&self, k: &K, inner: &ModuleMorphism<E>) -> ModuleMorphism<E> {
        ModuleMorphism {
            maps: self.maps.iter().zip(&inner.maps).map(|(a, b)| a.compose(k, b)).collect(),
        }
    }

    pub fn restrict(&self, n: usize) -> ModuleMorphism<E> {
        ModuleMorphism { maps: self.maps[..=n].to_vec() }
    }
}

impl<K: Field> TruncatedModule<K> {
    pub fn zero(ctx: &Ctx<K>, truncation: usize) -> Self {
        TruncatedModule {
            ctx: ctx.clone(),
            truncation,
            dims: vec![0; truncation + 1],
            actions: (0..=truncation)
                .map(|n| (0..ctx.num_generators(n)).map(|_| Matrix::zero(0, 0)).collect())
                .collect(),
            transitions: (0..truncation).map(|_| Matrix::zero(0, 0)).collect(),
        }
    }

    pub fn field(&self) -> &K {
        &self.ctx.field
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|d| *d == 0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn act_gen(&self, n: usize, gen: usize, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        self.actions[n][gen].apply(&self.ctx.field, v)
    }

    pub fn act(&self, n: usize, x: &WreathElement, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        apply_word(&self.ctx.field, &self.actions[n], &self.ctx.word(x), v)
    }

    pub fn transition(&self, n: usize, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        self.transitions[n].apply(&self.ctx.field, v)
    }

    /// The map `V_{m-1} -> V_m` induced by the inclusion skipping `skip` (0-based).
    pub fn insertion(&self, m: usize, skip: usize, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        let mut w = self.transition(m - 1, v);
        for j in (skip..m - 1).rev() {
            w = self.act_gen(m, j, &w);
        }
        w
    }

    pub fn insertion_matrix(&self, m: usize, skip: usize) -> Matrix<K::Elem> {
        let k = &self.ctx.field;
        Matrix::from_columns(
            self.dims[m],
            (0..self.dims[m - 1]).map(|j| self.insertion(m, skip, &vec![(j, k.one())])).collect(),
        )
    }

    /// The map induced by an arbitrary morphism `[n] -> [m]`.
    pub fn apply_morphism(&self, f: &Morphism, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        let mut w = v.clone();
        for d in f.source()..f.target {
            w = self.transition(d, &w);
        }
        self.act(f.target, &f.completion(), &w)
    }

    pub fn induced_map(&self, f: &Morphism) -> Result<Matrix<K::Elem>, ModuleError> {
        if f.target > self.truncation {
            return Err(ModuleError::Truncation { needed: f.target, have: self.truncation });
        }
        let k = &self.ctx.field;
        Ok(Matrix::from_columns(
            self.dims[f.target],
            (0..self.dims[f.source()]).map(|j| self.apply_morphism(f, &vec![(j, k.one())])).collect(),
        ))
    }

    /// The component in degree `n` as a representation of `G_n`.
    pub fn component(&self, n: usize) -> Rep<K> {
        Rep::new_unchecked(&self.ctx, n, self.dims[n], self.actions[n].clone())
    }

    /// Sum over all inclusions `[n-1] -> [n]` of the images of `u ⊆ V_{n-1}`.
    /// When `u` is `G_{n-1}`-stable the result is the `G_n`-span of `X(u)`.
    pub fn lower_span_of(&self, n: usize, u: &[SparseVec<K::Elem>]) -> Subspace<K::Elem> {
        let k = &self.ctx.field;
        let mut s = Subspace::new(self.dims[n]);
        for v in u {
            let mut w = self.transition(n - 1, v);
            s.insert(k, &w);
            for j in (0..n - 1).rev() {
                w = self.act_gen(n, j, &w);
                s.insert(k, &w);
            }
        }
        s
    }

    /// `V_{<n}`: the span of images of lower degrees in `V_n`.
    pub fn lower_span(&self, n: usize) -> Subspace<K::Elem> {
        if n == 0 {
            return Subspace::new(self.dims[0]);
        }
        let k = &self.ctx.field;
        let basis: Vec<_> = (0..self.dims[n - 1]).map(|j| vec![(j, k.one())]).collect();
        self.lower_span_of(n, &basis)
    }

    /// Close `space` under `G_n`, given that everything except `fresh` is already closed.
    pub fn close_under_group(&self, n: usize, space: &mut Subspace<K::Elem>, fresh: Vec<SparseVec<K::Elem>>) {
        let k = &self.ctx.field;
        let mut queue: Vec<SparseVec<K::Elem>> = Vec::new();
        for v in fresh {
            let rem = space.reduce(k, &v);
            if !rem.is_empty() {
                let idx = space.insert_reduced(k, rem);
                queue.push(space.basis()[idx].clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in 0..self.actions[n].len() {
                let w = self.act_gen(n, g, &v);
                let rem = space.reduce(k, &w);
                if !rem.is_empty() {
                    let idx = space.insert_reduced(k, rem);
                    queue.push(space.basis()[idx].clone());
                }
            }
        }
    }

    /// The FI_G-submodule generated by `seeds[n] ⊆ V_n`.
    pub fn span_submodule(&self, seeds: &[Vec<SparseVec<K::Elem>>]) -> Graded<K::Elem> {
        let mut out: Graded<K::Elem> = Vec::with_capacity(self.truncation + 1);
        for n in 0..=self.truncation {
            let mut s = if n == 0 {
                Subspace::new(self.dims[0])
            } else {
                self.lower_span_of(n, out[n - 1].basis())
            };
            let fresh = seeds.get(n).cloned().unwrap_or_default();
            self.close_under_group(n, &mut s, fresh);
            out.push(s);
        }
        out
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        let k = &self.ctx.field;
        let g = &self.ctx.group;
        if self.dims.len() != self.truncation + 1 || self.transitions.len() != self.truncation {
            return Err(ModuleError::Invalid("inconsistent truncation".into()));
        }
        for n in 0..=self.truncation {
            check_wreath_relations(&self.ctx, n, self.dims[n], &self.actions[n])
                .map_err(ModuleError::Invalid)?;
        }
        for n in 0..self.truncation {
            let x = &self.transitions[n];
            if x.rows != self.dims[n + 1] || x.cols != self.dims[n] {
                return Err(ModuleError::Invalid(format!("transition {n} has wrong shape")));
            }
            for gen in self.ctx.generators(n) {
                let i = generator_index(g, n, gen);
                let j = generator_index(g, n + 1, gen);
                if x.compose(k, &self.actions[n][i]) != self.actions[n + 1][j].compose(k, x) {
                    return Err(ModuleError::Invalid(format!(
                        "transition {n} is not equivariant for {gen:?}"
                    )));
                }
            }
            for &c in g.generators() {
                let word = self.ctx.word(&WreathElement::decoration(n + 1, n, c));
                for j in 0..self.dims[n] {
                    let v = x.columns[j].clone();
                    if apply_word(k, &self.actions[n + 1], &word, &v) != v {
                        return Err(ModuleError::Invalid(format!(
                            "decoration of the new point moves the image of transition {n}"
                        )));
                    }
                }
            }
            if n + 1 < self.truncation {
                let xx = self.transitions[n + 1].compose(k, x);
                let s = generator_index(g, n + 2, Generator::Swap(n));
                if self.actions[n + 2][s].compose(k, &xx) != xx {
                    return Err(ModuleError::Invalid(format!("two-step symmetry fails at degree {n}")));
                }
            }
        }
        Ok(())
    }

    /// Check that `phi: self -> target` commutes with the actions and transitions.
    pub fn check_morphism(&self, target: &TruncatedModule<K>, phi: &ModuleMorphism<K::Elem>) -> Result<(), ModuleError> {
        let k = &self.ctx.field;
        let top = self.truncation.min(target.truncation).min(phi.truncation());
        for n in 0..=top {
            let f = &phi.maps[n];
            if f.rows != target.dims[n] || f.cols != self.dims[n] {
                return Err(ModuleError::Invalid(format!("morphism has wrong shape in degree {n}")));
            }
            for g in 0..self.actions[n].len() {
                if f.compose(k, &self.actions[n][g]) != target.actions[n][g].compose(k, f) {
                    return Err(ModuleError::Invalid(format!("morphism not equivariant in degree {n}")));
                }
            }
            if n < top && phi.maps[n + 1].compose(k, &self.transitions[n]) != target.transitions[n].compose(k, f) {
                return Err(ModuleError::Invalid(format!("morphism does not commute with transition {n}")));
            }
        }
        Ok(())
    }

    /// Keep only degrees `0..=n`.
    pub fn restrict(&self, n: usize) -> TruncatedModule<K> {
        assert!(n <= self.truncation);
        TruncatedModule {
            ctx: self.ctx.clone(),
            truncation: n,
            dims: self.dims[..=n].to_vec(),
            actions: self.actions[..=n].to_vec(),
            transitions: self.transitions[..n].to_vec(),
        }
    }

    pub fn identity(&self) -> ModuleMorphism<K::Elem> {
        ModuleMorphism { maps: self.dims.iter().map(|&d| Matrix::identity(&self.ctx.field, d)).collect() }
    }
}

/// Direct sum, truncated at the smallest truncation.
pub fn direct_sum<K: Field>(ctx: &Ctx<K>, parts: &[&TruncatedModule<K>]) -> TruncatedModule<K> {
    let n = parts.iter().map(|p| p.truncation).min().expect("at least one summand");
    let ngen = |d: usize| ctx.num_generators(d);
    TruncatedModule {
        ctx: ctx.clone(),
        truncation: n,
        dims: (0..=n).map(|d| parts.iter().map(|p| p.dims[d]).sum()).collect(),
        actions: (0..=n)
            .map(|d| {
                (0..ngen(d))
                    .map(|g| Matrix::direct_sum(&parts.iter().map(|p| &p.actions[d][g]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect(),
        transitions: (0..n)
            .map(|d| Matrix::direct_sum(&parts.iter().map(|p| &p.transitions[d]).collect::<Vec<_>>()))
            .collect(),
    }
}

/// Quotient of `v` by a graded submodule `u`, with the projection.
pub fn quotient<K: Field>(
    v: &TruncatedModule<K>,
    u: &Graded<K::Elem>,
) -> (TruncatedModule<K>, ModuleMorphism<K::Elem>) {
    let k = &v.ctx.field;
    let qb: Vec<QuotientBasis> = u.iter().map(Subspace::quotient_basis).collect();
    let proj_col = |n: usize, w: &SparseVec<K::Elem>| u[n].project(k, &qb[n], w);
    let map_on_reps = |n_src: usize, n_tgt: usize, f: &dyn Fn(&SparseVec<K::Elem>) -> SparseVec<K::Elem>| {
        Matrix::from_columns(
            qb[n_tgt].dim(),
            qb[n_src].reps.iter().map(|&c| proj_col(n_tgt, &f(&vec![(c, k.one())]))).collect(),
        )
    };
    let actions = (0..=v.truncation)
        .map(|n| {
            (0..v.actions[n].len())
                .map(|g| map_on_reps(n, n, &|w| v.act_gen(n, g, w)))
                .collect()
        })
        .collect();
    let transitions = (0..v.truncation).map(|n| map_on_reps(n, n + 1, &|w| v.transition(n, w))).collect();
    let proj = ModuleMorphism {
        maps: (0..=v.truncation)
            .map(|n| Matrix::from_columns(qb[n].dim(), (0..v.dims[n]).map(|j| proj_col(n, &vec![(j, k.one())])).collect()))
            .collect(),
    };
    (
        TruncatedModule {
            ctx: v.ctx.clone(),
            truncation: v.truncation,
            dims: qb.iter().map(QuotientBasis::dim).collect(),
            actions,
            transitions,
        },
        proj,
    )
}

/// A graded submodule as a module in its own right, with the inclusion.
/// The basis in each degree is the echelon basis of `u[n]`.
pub fn submodule<K: Field>(
    v: &TruncatedModule<K>,
    u: &Graded<K::Elem>,
) -> (TruncatedModule<K>, ModuleMorphism<K::Elem>) {
    let k = &v.ctx.field;
    let coords = |n: usize, w: &SparseVec<K::Elem>| u[n].coords(k, w).expect("subspace is not a submodule");
    let actions = (0..=v.truncation)
        .map(|n| {
            (0..v.actions[n].len())
                .map(|g| {
                    Matrix::from_columns(
                        u[n].dim(),
                        u[n].basis().iter().map(|b| coords(n, &v.act_gen(n, g, b))).collect(),
                    )
                })
                .collect()
        })
        .collect();
    let transitions = (0..v.truncation)
        .map(|n| {
            Matrix::from_columns(
                u[n + 1].dim(),
                u[n].basis().iter().map(|b| coords(n + 1, &v.transition(n, b))).collect(),
            )
        })
        .collect();
    let incl = ModuleMorphism {
        maps: u.iter().map(|s| Matrix::from_columns(s.ambient(), s.basis().to_vec())).collect(),
    };
    (
        TruncatedModule { ctx: v.ctx.clone(), truncation: v.truncation, dims: u.iter().map(Subspace::dim).collect(), actions, transitions },
        incl,
    )
}

pub fn kernel_of<K: Field>(k: &K, phi: &ModuleMorphism<K::Elem>) -> Graded<K::Elem> {
    phi.maps
        .iter()
        .map(|m| Subspace::spanned_by(k, m.cols, &kernel(k, m)))
        .collect()
}

pub fn image_of<K: Field>(k: &K, phi: &ModuleMorphism<K::Elem>) -> Graded<K::Elem> {
    phi.maps.iter().map(|m| crate::exactla::image(k, m)).collect()
}

/// Express a graded subspace of `v` that lies inside the submodule `u` in the coordinates of `u`.
pub fn restrict_to<K: Field>(k: &K, u: &Graded<K::Elem>, w: &Graded<K::Elem>) -> Graded<K::Elem> {
    u.iter()
        .zip(w)
        .map(|(us, ws)| {
            let vecs: Vec<_> = ws.basis().iter().map(|b| us.coords(k, b).expect("not contained")).collect();
            Subspace::spanned_by(k, us.dim(), &vecs)
        })
        .collect()
}
