//! Finite groups given by multiplication tables, and the wreath products `S_n ≀ G`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("multiplication table is empty or not square")]
    NotSquare,
    #[error("table entry {0} is out of range")]
    OutOfRange(usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("no inverse for element {0}")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("unknown group preset '{0}'")]
    UnknownPreset(String),
}

/// A finite group with elements `0..order`, identity `0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a multiplication table (`table[a][b] = a*b`) and relabel so the identity is 0.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_table_named(table, "table")
    }

    fn from_table_named(table: Vec<Vec<usize>>, name: &str) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) {
            return Err(GroupError::NotSquare);
        }
        if let Some(&x) = table.iter().flatten().find(|&&x| x >= n) {
            return Err(GroupError::OutOfRange(x));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == e && table[b][a] == e) {
                return Err(GroupError::NoInverse(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut t = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                t[relabel(a)][relabel(b)] = relabel(table[a][b]);
            }
        }
        let inverse = (0..n).map(|a| (0..n).find(|&b| t[a][b] == 0).unwrap()).collect();
        let mut g = FiniteGroup { name: name.to_string(), table: t, inverse, generators: vec![] };
        g.generators = g.greedy_generators();
        Ok(g)
    }

    pub fn trivial() -> Self {
        Self::from_table_named(vec![vec![0]], "trivial").unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        let t = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table_named(t, &format!("Z{n}")).unwrap()
    }

    /// The symmetric group on three letters, elements in lexicographic order of one-line notation.
    pub fn s3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let t = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        Self::from_table_named(t, "S3").unwrap()
    }

    pub fn preset(name: &str) -> Result<Self, GroupError> {
        match name {
            "trivial" | "1" => Ok(Self::trivial()),
            "Z2" => Ok(Self::cyclic(2)),
            "Z3" => Ok(Self::cyclic(3)),
            "S3" => Ok(Self::s3()),
            other => Err(GroupError::UnknownPreset(other.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// A small generating set, chosen greedily in label order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut sub = vec![false; self.order()];
        sub[0] = true;
        for a in 1..self.order() {
            if !sub[a] {
                gens.push(a);
                sub = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// For each element `c`, a word `[a1, .., ak]` in [`Self::generators`] with `c = a1*..*ak`.
    pub fn words(&self) -> Vec<Vec<usize>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order()];
        words[0] = Some(vec![]);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in &self.generators {
                let y = self.mul(x, g);
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w.push(g);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        words.into_iter().map(Option::unwrap).collect()
    }
}

/// An element `(σ, g)` of `G_n = S_n ≀ G`, viewed as an automorphism of `[n]` in FI_G.
///
/// `perm[i]` is the image of `i` (0-based) and `dec[i]` the group label on `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WreathElement {
    pub perm: Vec<usize>,
    pub dec: Vec<usize>,
}

impl WreathElement {
    pub fn identity(n: usize) -> Self {
        WreathElement { perm: (0..n).collect(), dec: vec![0; n] }
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, p)| i == *p) && self.dec.iter().all(|d| *d == 0)
    }

    /// Swap of positions `i` and `i + 1`.
    pub fn swap(n: usize, i: usize) -> Self {
        let mut e = Self::identity(n);
        e.perm.swap(i, i + 1);
        e
    }

    /// Decoration by `c` at position `i`.
    pub fn decoration(n: usize, i: usize, c: usize) -> Self {
        let mut e = Self::identity(n);
        e.dec[i] = c;
        e
    }
}

/// `x ∘ y`: perm is `x.perm ∘ y.perm` and `dec[i] = y.dec[i] * x.dec[y.perm[i]]`.
pub fn wreath_compose(g: &FiniteGroup, x: &WreathElement, y: &WreathElement) -> WreathElement {
    assert_eq!(x.degree(), y.degree());
    let n = x.degree();
    WreathElement {
        perm: (0..n).map(|i| x.perm[y.perm[i]]).collect(),
        dec: (0..n).map(|i| g.mul(y.dec[i], x.dec[y.perm[i]])).collect(),
    }
}

pub fn wreath_inverse(g: &FiniteGroup, x: &WreathElement) -> WreathElement {
    let n = x.degree();
    let mut perm = vec![0; n];
    for i in 0..n {
        perm[x.perm[i]] = i;
    }
    // need y.dec[i] * x.dec[perm[i]] = 1
    let dec = (0..n).map(|i| g.inv(x.dec[perm[i]])).collect();
    WreathElement { perm, dec }
}

/// The embedding `G_n -> G_m` fixing the points above `n` with trivial labels.
pub fn wreath_embed(x: &WreathElement, m: usize) -> WreathElement {
    let n = x.degree();
    assert!(m >= n);
    let mut e = x.clone();
    e.perm.extend(n..m);
    e.dec.extend(std::iter::repeat_n(0, m - n));
    e
}

/// All elements of `G_n` in lexicographic order of `(perm, dec)`.
pub fn enumerate_wreath(g: &FiniteGroup, n: usize) -> Vec<WreathElement> {
    let mut out = Vec::new();
    for perm in permutations(n) {
        for dec in tuples(g.order(), n) {
            out.push(WreathElement { perm: perm.clone(), dec });
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All tuples in `[0, base)^len`, lexicographic.
pub fn tuples(base: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..base).map(move |c| {
                    let mut u = t.clone();
                    u.push(c);
                    u
                })
            })
            .collect();
    }
    out
}

/// Generators of `G_n` used to store actions: the adjacent swaps, then decorations
/// of position 0 by the generators of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Swap(usize),
    Decorate(usize),
}

pub fn wreath_generators(g: &FiniteGroup, n: usize) -> Vec<Generator> {
    let mut out: Vec<Generator> = (0..n.saturating_sub(1)).map(Generator::Swap).collect();
    if n >= 1 {
        out.extend(g.generators().iter().map(|&c| Generator::Decorate(c)));
    }
    out
}

/// Position of a generator in [`wreath_generators`] for degree `n`.
pub fn generator_index(g: &FiniteGroup, n: usize, gen: Generator) -> usize {
    match gen {
        Generator::Swap(i) => {
            assert!(i + 1 < n);
            i
        }
        Generator::Decorate(c) => {
            n - 1 + g.generators().iter().position(|x| *x == c).expect("not a generator")
        }
    }
}

pub fn generator_element(n: usize, gen: Generator) -> WreathElement {
    match gen {
        Generator::Swap(i) => WreathElement::swap(n, i),
        Generator::Decorate(c) => WreathElement::decoration(n, 0, c),
    }
}

/// A word in the generators of `G_n` (indices into [`wreath_generators`]),
/// listed in the order they are applied: the element is `w[last] ∘ .. ∘ w[0]`.
pub fn word_for(g: &FiniteGroup, words: &[Vec<usize>], x: &WreathElement) -> Vec<usize> {
    let n = x.degree();
    let mut w = Vec::new();
    // (σ, D) = (σ, 1) ∘ (id, D): decorations first.
    for i in 0..n {
        let c = x.dec[i];
        if c == 0 {
            continue;
        }
        // conjugate the position-0 decoration by π = s_{i-1} ∘ .. ∘ s_0
        for j in (0..i).rev() {
            w.push(j);
        }
        for &a in &words[c] {
            w.push(generator_index(g, n, Generator::Decorate(a)));
        }
        for j in 0..i {
            w.push(j);
        }
    }
    w.extend(permutation_word(&x.perm));
    w
}

/// Adjacent swaps `[r1, .., rk]` with `perm = s_rk ∘ .. ∘ s_r1`.
pub fn permutation_word(perm: &[usize]) -> Vec<usize> {
    let mut cur = perm.to_vec();
    let mut w = Vec::new();
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) else {
            break;
        };
        cur.swap(i, i + 1);
        w.push(i);
    }
    w
}
