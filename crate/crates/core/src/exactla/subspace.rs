use std::collections::BTreeMap;

use super::field::Field;
use super::matrix::{Matrix, SparseVec};

/// A subspace of `K^ambient` kept in echelon form.
///
/// Each stored row has its leading entry equal to one and a distinct pivot
/// column. Rows are not back-reduced against each other.
#[derive(Clone, Debug)]
pub struct Subspace<E> {
    ambient: usize,
    rows: Vec<SparseVec<E>>,
    pivot_row: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn new(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivot_row: vec![NONE; ambient] }
    }

    pub fn full<K: Field<Elem = E>>(k: &K, ambient: usize) -> Self {
        let mut s = Self::new(ambient);
        for i in 0..ambient {
            s.pivot_row[i] = i;
            s.rows.push(vec![(i, k.one())]);
        }
        s
    }

    pub fn spanned_by<K: Field<Elem = E>>(k: &K, ambient: usize, vecs: &[SparseVec<E>]) -> Self {
        let mut s = Self::new(ambient);
        for v in vecs {
            s.insert(k, v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[SparseVec<E>] {
        &self.rows
    }

    pub fn pivot_of(&self, row: usize) -> usize {
        self.rows[row][0].0
    }

    /// Reduce `v` against the stored rows. Returns the remainder (zero in every
    /// pivot column) and the multipliers, so that `v = sum c_r row_r + remainder`.
    pub fn reduce_tracked<K: Field<Elem = E>>(
        &self,
        k: &K,
        v: &SparseVec<E>,
        track: bool,
    ) -> (SparseVec<E>, Vec<(usize, E)>) {
        let mut acc: BTreeMap<usize, E> = v.iter().cloned().collect();
        let mut rem = Vec::new();
        let mut mult = Vec::new();
        while let Some((c, x)) = acc.pop_first() {
            let r = self.pivot_row[c];
            if r == NONE {
                rem.push((c, x));
                continue;
            }
            for (j, y) in &self.rows[r][1..] {
                match acc.entry(*j) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let nv = k.sub_mul(e.get(), &x, y);
                        if k.is_zero(&nv) {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(k.neg(&k.mul(&x, y)));
                    }
                }
            }
            if track {
                mult.push((r, x));
            }
        }
        (rem, mult)
    }

    pub fn reduce<K: Field<Elem = E>>(&self, k: &K, v: &SparseVec<E>) -> SparseVec<E> {
        self.reduce_tracked(k, v, false).0
    }

    pub fn contains<K: Field<Elem = E>>(&self, k: &K, v: &SparseVec<E>) -> bool {
        self.reduce(k, v).is_empty()
    }

    /// Insert an already reduced nonzero vector.
    pub fn insert_reduced<K: Field<Elem = E>>(&mut self, k: &K, mut rem: SparseVec<E>) -> usize {
        debug_assert!(!rem.is_empty());
        let lead = rem[0].1.clone();
        if !k.is_one(&lead) {
            let inv = k.inv(&lead);
            for (_, x) in rem.iter_mut() {
                *x = k.mul(x, &inv);
            }
        }
        let idx = self.rows.len();
        self.pivot_row[rem[0].0] = idx;
        self.rows.push(rem);
        idx
    }

    /// Insert `v`; returns true when the dimension grew.
    pub fn insert<K: Field<Elem = E>>(&mut self, k: &K, v: &SparseVec<E>) -> bool {
        let rem = self.reduce(k, v);
        if rem.is_empty() {
            false
        } else {
            self.insert_reduced(k, rem);
            true
        }
    }

    /// Coordinates of `v` with respect to [`Self::basis`], if `v` lies in the subspace.
    pub fn coords<K: Field<Elem = E>>(&self, k: &K, v: &SparseVec<E>) -> Option<SparseVec<E>> {
        let (rem, mut mult) = self.reduce_tracked(k, v, true);
        if !rem.is_empty() {
            return None;
        }
        mult.sort_by_key(|(r, _)| *r);
        Some(mult)
    }

    pub fn is_subspace_of<K: Field<Elem = E>>(&self, k: &K, other: &Subspace<E>) -> bool {
        self.rows.iter().all(|r| other.contains(k, r))
    }

    pub fn equals<K: Field<Elem = E>>(&self, k: &K, other: &Subspace<E>) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(k, other)
    }

    /// Basis of a complement: the standard basis vectors at non-pivot columns.
    pub fn quotient_basis(&self) -> QuotientBasis {
        let reps: Vec<usize> = (0..self.ambient).filter(|c| self.pivot_row[*c] == NONE).collect();
        let mut index = vec![NONE; self.ambient];
        for (q, c) in reps.iter().enumerate() {
            index[*c] = q;
        }
        QuotientBasis { reps, index }
    }

    /// Image of `v` in the quotient by this subspace, in the coordinates of `qb`.
    pub fn project<K: Field<Elem = E>>(
        &self,
        k: &K,
        qb: &QuotientBasis,
        v: &SparseVec<E>,
    ) -> SparseVec<E> {
        self.reduce(k, v)
            .into_iter()
            .map(|(c, x)| (qb.index[c], x))
            .collect()
    }
}

/// Standard-basis representatives of a quotient space.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    pub reps: Vec<usize>,
    index: Vec<usize>,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }
}

/// Basis of the kernel of `m`, in source coordinates.
pub fn kernel<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Vec<SparseVec<K::Elem>> {
    let rows = m.rows;
    let mut space = Subspace::new(rows + m.cols);
    let mut out = Vec::new();
    for (j, col) in m.columns.iter().enumerate() {
        let mut v = col.clone();
        v.push((rows + j, k.one()));
        let rem = space.reduce(k, &v);
        if rem[0].0 >= rows {
            out.push(rem.into_iter().map(|(i, x)| (i - rows, x)).collect());
        } else {
            space.insert_reduced(k, rem);
        }
    }
    out
}

pub fn image<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Subspace<K::Elem> {
    Subspace::spanned_by(k, m.rows, &m.columns)
}

pub fn rank<K: Field>(k: &K, m: &Matrix<K::Elem>) -> usize {
    image(k, m).dim()
}

pub fn sum<K: Field>(k: &K, a: &Subspace<K::Elem>, b: &Subspace<K::Elem>) -> Subspace<K::Elem> {
    let mut s = a.clone();
    for r in b.basis() {
        s.insert(k, r);
    }
    s
}

pub fn intersection<K: Field>(
    k: &K,
    a: &Subspace<K::Elem>,
    b: &Subspace<K::Elem>,
) -> Subspace<K::Elem> {
    let n = a.ambient();
    assert_eq!(n, b.ambient());
    let mut space = Subspace::new(n + b.dim());
    for r in a.basis() {
        space.insert(k, r);
    }
    let mut out = Subspace::new(n);
    for (j, bj) in b.basis().iter().enumerate() {
        let mut v = bj.clone();
        v.push((n + j, k.one()));
        let rem = space.reduce(k, &v);
        if rem[0].0 >= n {
            let mut w: SparseVec<K::Elem> = Vec::new();
            for (i, h) in &rem {
                w = super::matrix::axpy(k, &w, h, &b.basis()[i - n]);
            }
            out.insert(k, &w);
        } else {
            space.insert_reduced(k, rem);
        }
    }
    out
}

/// `{x : m x in u}`.
pub fn preimage<K: Field>(
    k: &K,
    m: &Matrix<K::Elem>,
    u: &Subspace<K::Elem>,
) -> Subspace<K::Elem> {
    let reduced = Matrix::from_columns(m.rows, m.columns.iter().map(|c| u.reduce(k, c)).collect());
    Subspace::spanned_by(k, m.cols, &kernel(k, &reduced))
}

/// Image of a subspace under a linear map.
pub fn map_subspace<K: Field>(
    k: &K,
    m: &Matrix<K::Elem>,
    u: &Subspace<K::Elem>,
) -> Subspace<K::Elem> {
    let mut s = Subspace::new(m.rows);
    for r in u.basis() {
        s.insert(k, &m.apply(k, r));
    }
    s
}

/// Result of Gauss-Jordan elimination on a dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct RowReduction<E> {
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Reduced row echelon form.
    pub rref: Vec<Vec<E>>,
    /// Invertible `T` with `T * A = rref`.
    pub transform: Vec<Vec<E>>,
}

pub fn row_reduce<K: Field>(k: &K, a: &[Vec<K::Elem>], cols: usize) -> RowReduction<K::Elem> {
    let m = a.len();
    let mut r: Vec<Vec<K::Elem>> = a.to_vec();
    let mut t: Vec<Vec<K::Elem>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { k.one() } else { k.zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        if row == m {
            break;
        }
        let Some(p) = (row..m).find(|&i| !k.is_zero(&r[i][c])) else { continue };
        r.swap(row, p);
        t.swap(row, p);
        let inv = k.inv(&r[row][c]);
        for x in r[row].iter_mut() {
            *x = k.mul(x, &inv);
        }
        for x in t[row].iter_mut() {
            *x = k.mul(x, &inv);
        }
        for i in 0..m {
            if i != row && !k.is_zero(&r[i][c]) {
                let f = r[i][c].clone();
                for j in 0..cols {
                    r[i][j] = k.sub_mul(&r[i][j], &f, &r[row][j]);
                }
                for j in 0..m {
                    t[i][j] = k.sub_mul(&t[i][j], &f, &t[row][j]);
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    RowReduction { rank: pivots.len(), pivots, rref: r, transform: t }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    #[test]
    fn kernel_of_rank_one() {
        let k = Rationals;
        let one = k.one();
        let m = Matrix::from_dense_rows(
            &k,
            &[vec![one.clone(), k.from_i64(2), k.from_i64(3)], vec![k.from_i64(2), k.from_i64(4), k.from_i64(6)]],
        );
        let ker = kernel(&k, &m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.apply(&k, v).is_empty());
        }
        assert_eq!(rank(&k, &m), 1);
    }

    #[test]
    fn intersection_of_planes() {
        let k = PrimeField::new(7).unwrap();
        let a = Subspace::spanned_by(&k, 3, &[vec![(0, 1)], vec![(1, 1)]]);
        let b = Subspace::spanned_by(&k, 3, &[vec![(1, 1)], vec![(0, 1), (2, 1)]]);
        let c = intersection(&k, &a, &b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&k, &vec![(1, 3)]));
    }

    #[test]
    fn row_reduce_transform() {
        let k = PrimeField::new(5).unwrap();
        let a = vec![vec![0, 2, 4], vec![1, 1, 1], vec![1, 3, 0]];
        let rr = row_reduce(&k, &a, 3);
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0;
                for l in 0..3 {
                    s = k.add(&s, &k.mul(&rr.transform[i][l], &a[l][j]));
                }
                assert_eq!(s, rr.rref[i][j]);
            }
        }
    }
}
