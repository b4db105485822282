//! Ballot-type subset families and the operators `J_i^j = id - (i j)` acting on
//! integer spans of FI_G morphisms. All indices here are 0-based.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::exactla::{is_full_lattice, lattice_basis};
use crate::figcat::{compose, enumerate_hom, subsets, Morphism};
use crate::group::{generator_element, wreath_generators, FiniteGroup};

/// `b`-subsets of `[2b]` whose `i`-th smallest element is at most `2i` (0-based).
pub fn sigma(b: usize) -> Vec<Vec<usize>> {
    subsets(b, 2 * b)
        .into_iter()
        .filter(|s| s.iter().enumerate().all(|(i, &x)| x <= 2 * i))
        .collect()
}

/// Members of [`sigma`]`(b)` containing `{0, .., a-1}`.
pub fn sigma_ab(a: usize, b: usize) -> Vec<Vec<usize>> {
    sigma(b).into_iter().filter(|s| (0..a).all(|x| s.contains(&x))).collect()
}

/// The pairs `(s_p, t_p)` defining `J_S`, where `t` is the complement of `S` in `[2b]`.
pub fn j_pairs(s: &[usize], b: usize) -> Vec<(usize, usize)> {
    let t: Vec<usize> = (0..2 * b).filter(|x| !s.contains(x)).collect();
    s.iter().copied().zip(t).collect()
}

/// Integer combination of morphisms.
pub type HomCombination = BTreeMap<Morphism, i64>;

/// `∏_p (id - (i_p j_p))` applied to a single morphism by post-composition.
pub fn j_product(pairs: &[(usize, usize)], f: &Morphism) -> HomCombination {
    let mut out: HomCombination = BTreeMap::new();
    out.insert(f.clone(), 1);
    for &(i, j) in pairs {
        let mut next: HomCombination = BTreeMap::new();
        for (h, c) in out {
            *next.entry(h.clone()).or_insert(0) += c;
            let swapped = Morphism {
                target: h.target,
                inj: h.inj.iter().map(|&x| if x == i { j } else if x == j { i } else { x }).collect(),
                dec: h.dec.clone(),
            };
            *next.entry(swapped).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        out = next;
    }
    out
}

/// Is `u` lexicographically first in its orbit under the group generated by the
/// transpositions `(idx_p, s_p)`?
pub fn is_lex_first(s: &[usize], u: &[usize], idx: &[usize]) -> bool {
    let b = s.len();
    let mut base = u.to_vec();
    base.sort_unstable();
    for mask in 1u32..(1 << b) {
        let mut v: Vec<usize> = base
            .iter()
            .map(|&x| {
                let mut y = x;
                for p in 0..b {
                    if mask & (1 << p) != 0 {
                        if y == idx[p] {
                            y = s[p];
                        } else if y == s[p] {
                            y = idx[p];
                        }
                    }
                }
                y
            })
            .collect();
        v.sort_unstable();
        if v < base {
            return false;
        }
    }
    true
}

/// Check the lex-first property for every `S` in `sigma(b)`, every `U ⊆ [n]`
/// containing `S`, and every increasing `idx` of `b` points outside `U`.
/// Returns the number of cases checked, or the first failing `(S, U, idx)`.
pub fn verify_lex_first(b: usize, n: usize) -> Result<usize, (Vec<usize>, Vec<usize>, Vec<usize>)> {
    let mut count = 0;
    for s in sigma(b) {
        for size in b..=n {
            for u in subsets(size, n) {
                if !s.iter().all(|x| u.contains(x)) {
                    continue;
                }
                let rest: Vec<usize> = (0..n).filter(|x| !u.contains(x)).collect();
                for pick in subsets(b, rest.len()) {
                    let idx: Vec<usize> = pick.iter().map(|&i| rest[i]).collect();
                    count += 1;
                    if !is_lex_first(&s, &u, &idx) {
                        return Err((s.clone(), u.clone(), idx));
                    }
                }
            }
        }
    }
    Ok(count)
}

/// All sets of `b` pairwise disjoint pairs `{i, j}` in `[n]`.
pub fn disjoint_pairs(b: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(b: usize, n: usize, used: &mut Vec<bool>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == b {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().map_or(0, |p| p.0 + 1);
        for i in start..n {
            if used[i] {
                continue;
            }
            used[i] = true;
            for j in i + 1..n {
                if !used[j] {
                    used[j] = true;
                    cur.push((i, j));
                    rec(b, n, used, cur, out);
                    cur.pop();
                    used[j] = false;
                }
            }
            used[i] = false;
        }
    }
    let mut out = Vec::new();
    rec(b, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Outcome of the spanning check `F = I_b F + F^b` on `F = Z[Hom([r],[n])]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanCheck {
    pub rank: usize,
    /// The lattice is everything using only left multiples `J·(f,g)`.
    pub holds_one_sided: bool,
    /// The lattice is everything using the two-sided ideal.
    pub holds: bool,
}

pub fn verify_span_identity(g: &FiniteGroup, r: usize, b: usize, n: usize) -> SpanCheck {
    let basis = enumerate_hom(g, r, n);
    let index: BTreeMap<&Morphism, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dim = basis.len();
    let to_vec = |c: &HomCombination| {
        let mut v = vec![BigInt::from(0); dim];
        for (m, x) in c {
            v[index[m]] = BigInt::from(*x);
        }
        v
    };
    let sig = sigma(b);
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        let hits = sig.iter().any(|s| s.iter().all(|x| f.inj.contains(x)));
        if !hits {
            let mut v = vec![BigInt::from(0); dim];
            v[i] = BigInt::from(1);
            gens.push(v);
        }
    }
    for pairs in disjoint_pairs(b, n) {
        for f in &basis {
            let c = j_product(&pairs, f);
            if !c.is_empty() {
                gens.push(to_vec(&c));
            }
        }
    }
    let mut lat = lattice_basis(&gens, dim);
    let holds_one_sided = is_full_lattice(&lat, dim);
    // close the J-part under G_n acting on the left
    let elems: Vec<Morphism> = wreath_generators(g, n)
        .into_iter()
        .map(|x| Morphism::from_wreath(&generator_element(n, x)))
        .collect();
    while !is_full_lattice(&lat, dim) {
        let mut more = lat.clone();
        for v in &lat {
            for x in &elems {
                let mut w = vec![BigInt::from(0); dim];
                for (i, c) in v.iter().enumerate() {
                    if *c != BigInt::from(0) {
                        let y = compose(g, x, &basis[i]).unwrap();
                        w[index[&y]] += c;
                    }
                }
                more.push(w);
            }
        }
        let next = lattice_basis(&more, dim);
        if next == lat {
            break;
        }
        lat = next;
    }
    SpanCheck { rank: lat.len(), holds_one_sided, holds: is_full_lattice(&lat, dim) }
}

/// `J`-products over `b` disjoint pairs kill every `(f, g)` whose image misses one of the pairs.
pub fn verify_vanishing(g: &FiniteGroup, r: usize, b: usize, n: usize) -> bool {
    let basis = enumerate_hom(g, r, n);
    disjoint_pairs(b, n).iter().all(|pairs| {
        basis.iter().all(|f| {
            let misses = pairs.iter().any(|(i, j)| !f.inj.contains(i) && !f.inj.contains(j));
            !misses || j_product(pairs, f).is_empty()
        })
    })
}

/// Products of `r + 1` disjoint `J`s annihilate every morphism out of `[r]`.
pub fn verify_annihilation(g: &FiniteGroup, r: usize, n: usize) -> bool {
    let basis = enumerate_hom(g, r, n);
    disjoint_pairs(r + 1, n)
        .iter()
        .all(|pairs| basis.iter().all(|f| j_product(pairs, f).is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_sizes() {
        let sizes: Vec<usize> = (1..=5).map(|b| sigma(b).len()).collect();
        assert_eq!(sizes, vec![1, 2, 5, 14, 42]);
    }

    #[test]
    fn sigma_small() {
        assert_eq!(sigma(2), vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(sigma_ab(2, 2), vec![vec![0, 1]]);
        assert_eq!(j_pairs(&[0, 2], 2), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn lex_first_small() {
        assert!(verify_lex_first(1, 4).is_ok());
        assert!(!is_lex_first(&[1], &[1], &[0]));
    }

    #[test]
    fn j_product_cancels_on_fixed_pair() {
        let f = Morphism { target: 4, inj: vec![0], dec: vec![0] };
        assert!(j_product(&[(2, 3)], &f).is_empty());
        assert_eq!(j_product(&[(0, 1)], &f).len(), 2);
    }

    #[test]
    fn matching_counts() {
        assert_eq!(disjoint_pairs(1, 4).len(), 6);
        assert_eq!(disjoint_pairs(2, 4).len(), 3);
        assert_eq!(disjoint_pairs(2, 5).len(), 15);
    }
}
