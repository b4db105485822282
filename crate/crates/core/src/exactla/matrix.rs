use super::field::Field;

/// Sparse vector: `(index, value)` pairs sorted by index, no explicit zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

pub fn unit<K: Field>(k: &K, i: usize) -> SparseVec<K::Elem> {
    vec![(i, k.one())]
}

pub fn scale<K: Field>(k: &K, c: &K::Elem, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
    if k.is_zero(c) {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, k.mul(c, x))).collect()
}

/// `a + c*b` for sorted sparse vectors.
pub fn axpy<K: Field>(
    k: &K,
    a: &SparseVec<K::Elem>,
    c: &K::Elem,
    b: &SparseVec<K::Elem>,
) -> SparseVec<K::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = k.mul(c, &b[j].1);
            if !k.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = k.add(&a[i].1, &k.mul(c, &b[j].1));
            if !k.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn to_dense<K: Field>(k: &K, v: &SparseVec<K::Elem>, len: usize) -> Vec<K::Elem> {
    let mut d = vec![k.zero(); len];
    for (i, x) in v {
        d[*i] = x.clone();
    }
    d
}

pub fn from_dense<K: Field>(k: &K, d: &[K::Elem]) -> SparseVec<K::Elem> {
    d.iter()
        .enumerate()
        .filter(|(_, x)| !k.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// A matrix stored by columns: column `j` is the image of the `j`-th source basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<SparseVec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec<E>>) -> Self {
        Matrix { rows, cols: columns.len(), columns }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn identity<K: Field<Elem = E>>(k: &K, n: usize) -> Self {
        Matrix { rows: n, cols: n, columns: (0..n).map(|i| unit(k, i)).collect() }
    }

    pub fn from_dense_rows<K: Field<Elem = E>>(k: &K, rows: &[Vec<E>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let columns = (0..c)
            .map(|j| {
                (0..r)
                    .filter(|&i| !k.is_zero(&rows[i][j]))
                    .map(|i| (i, rows[i][j].clone()))
                    .collect()
            })
            .collect();
        Matrix { rows: r, cols: c, columns }
    }

    pub fn to_dense_rows<K: Field<Elem = E>>(&self, k: &K) -> Vec<Vec<E>> {
        let mut out = vec![vec![k.zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col {
                out[*i][j] = x.clone();
            }
        }
        out
    }

    pub fn entry<K: Field<Elem = E>>(&self, k: &K, i: usize, j: usize) -> E {
        self.columns[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map_or_else(|| k.zero(), |(_, x)| x.clone())
    }

    /// Apply to a sparse vector.
    pub fn apply<K: Field<Elem = E>>(&self, k: &K, v: &SparseVec<E>) -> SparseVec<E> {
        match v.len() {
            0 => Vec::new(),
            1 => scale(k, &v[0].1, &self.columns[v[0].0]),
            _ => {
                let mut terms: Vec<(usize, E)> = Vec::new();
                for (j, c) in v {
                    for (i, x) in &self.columns[*j] {
                        terms.push((*i, k.mul(c, x)));
                    }
                }
                terms.sort_unstable_by_key(|t| t.0);
                let mut out: SparseVec<E> = Vec::with_capacity(terms.len());
                for (i, x) in terms {
                    match out.last_mut() {
                        Some(last) if last.0 == i => last.1 = k.add(&last.1, &x),
                        _ => out.push((i, x)),
                    }
                }
                out.retain(|(_, x)| !k.is_zero(x));
                out
            }
        }
    }

    /// `self * other`.
    pub fn compose<K: Field<Elem = E>>(&self, k: &K, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in compose");
        Matrix {
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.apply(k, c)).collect(),
        }
    }

    pub fn add<K: Field<Elem = E>>(&self, k: &K, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let one = k.one();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| axpy(k, a, &one, b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn transpose<K: Field<Elem = E>>(&self, _k: &K) -> Matrix<E> {
        let mut cols: Vec<SparseVec<E>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col {
                cols[*i].push((j, x.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, columns: cols }
    }

    /// Block diagonal sum.
    pub fn direct_sum(blocks: &[&Matrix<E>]) -> Matrix<E> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut columns = Vec::new();
        let mut off = 0;
        for b in blocks {
            for c in &b.columns {
                columns.push(c.iter().map(|(i, x)| (i + off, x.clone())).collect());
            }
            off += b.rows;
        }
        Matrix { rows, cols: columns.len(), columns }
    }
}
