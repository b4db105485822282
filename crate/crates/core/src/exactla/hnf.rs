//! Hermite normal form of integer lattices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Canonical basis of the lattice generated by the columns of `m`
/// (`m` given as a list of rows). The basis is returned as a list of vectors in
/// echelon form with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Two generating sets span the same lattice iff their results coincide.
pub fn integer_hnf(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let gens: Vec<Vec<BigInt>> =
        (0..cols).map(|j| (0..rows).map(|i| m[i][j].clone()).collect()).collect();
    lattice_basis(&gens, rows)
}

/// Canonical echelon basis of the lattice generated by `gens` in `Z^dim`.
pub fn lattice_basis(gens: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let mut piv: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
    for g in gens {
        assert_eq!(g.len(), dim);
        insert(&mut piv, g.clone());
    }
    let cols: Vec<usize> = piv.keys().copied().collect();
    for (idx, &c) in cols.iter().enumerate() {
        let prow = piv[&c].clone();
        let p = prow[c].clone();
        for &c0 in &cols[..idx] {
            let row = piv.get_mut(&c0).unwrap();
            let q = row[c].div_floor(&p);
            if !q.is_zero() {
                for j in c..dim {
                    let d = &q * &prow[j];
                    row[j] -= d;
                }
            }
        }
    }
    piv.into_values().collect()
}

fn insert(piv: &mut BTreeMap<usize, Vec<BigInt>>, mut v: Vec<BigInt>) {
    let dim = v.len();
    let mut c = 0;
    loop {
        while c < dim && v[c].is_zero() {
            c += 1;
        }
        if c == dim {
            return;
        }
        match piv.get_mut(&c) {
            None => {
                if v[c].is_negative() {
                    for x in v.iter_mut() {
                        *x = -x.clone();
                    }
                }
                piv.insert(c, v);
                return;
            }
            Some(row) => {
                let p = row[c].clone();
                let x = v[c].clone();
                let e = p.extended_gcd(&x);
                let (g, s, t) = (e.gcd, e.x, e.y);
                let a = &x / &g;
                let b = &p / &g;
                let mut new_row = Vec::with_capacity(dim);
                let mut new_v = Vec::with_capacity(dim);
                for j in 0..dim {
                    new_row.push(&s * &row[j] + &t * &v[j]);
                    new_v.push(&a * &row[j] - &b * &v[j]);
                }
                if new_row[c].is_negative() {
                    for y in new_row.iter_mut() {
                        *y = -y.clone();
                    }
                }
                *row = new_row;
                v = new_v;
            }
        }
    }
}

/// True when the lattice is all of `Z^dim`.
pub fn is_full_lattice(basis: &[Vec<BigInt>], dim: usize) -> bool {
    basis.len() == dim && basis.iter().enumerate().all(|(i, r)| r[i].is_one())
}
