use proptest::prelude::*;

use figmod::combi::{disjoint_pairs, j_product, sigma};
use figmod::exactla::{intersection, kernel, rank, sum, Field, FieldSpec, Matrix, PrimeField, Rationals, Subspace};
use figmod::figcat::{binomial, compose, enumerate_hom, orbit_representatives, Morphism};
use figmod::functors::{fbg_dims, h0};
use figmod::group::{enumerate_wreath, wreath_compose, wreath_embed, FiniteGroup};
use figmod::invariants::{evaluate, interpolate};
use figmod::module::{build_free, Ctx, ModuleFile, PresentedModule, Rep};
use figmod::random::{random_module, rng_for, RandomParams};
use figmod::verify::{run_checks, CheckKind, VerifyParams};
use figmod::with_field;
use num_bigint::BigInt;
use num_rational::BigRational;

fn group(i: usize) -> FiniteGroup {
    match i % 4 {
        0 => FiniteGroup::trivial(),
        1 => FiniteGroup::cyclic(2),
        2 => FiniteGroup::cyclic(3),
        _ => FiniteGroup::s3(),
    }
}

fn field(i: usize) -> FieldSpec {
    [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Prime(5)][i % 4]
}

fn pick<T: Clone>(v: &[T], i: usize) -> T {
    v[i % v.len()].clone()
}

fn matrix<K: Field>(k: &K, rows: usize, entries: &[i64]) -> Matrix<K::Elem> {
    let cols = entries.len() / rows;
    let dense: Vec<Vec<K::Elem>> =
        (0..rows).map(|i| (0..cols).map(|j| k.from_i64(entries[i * cols + j])).collect()).collect();
    Matrix::from_dense_rows(k, &dense)
}

fn rank_nullity<K: Field>(k: K, rows: usize, entries: &[i64]) {
    let m = matrix(&k, rows, entries);
    assert_eq!(rank(&k, &m) + kernel(&k, &m).len(), m.cols);
}

fn subspace_dims<K: Field>(k: K, ambient: usize, a: &[i64], b: &[i64]) {
    let vecs = |e: &[i64]| -> Vec<Vec<(usize, K::Elem)>> {
        e.chunks(ambient)
            .filter(|c| c.len() == ambient)
            .map(|c| c.iter().enumerate().map(|(i, x)| (i, k.from_i64(*x))).filter(|(_, x)| !k.is_zero(x)).collect())
            .collect()
    };
    let u = Subspace::spanned_by(&k, ambient, &vecs(a));
    let w = Subspace::spanned_by(&k, ambient, &vecs(b));
    let s = sum(&k, &u, &w);
    let i = intersection(&k, &u, &w);
    assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
    assert!(i.is_subspace_of(&k, &u) && i.is_subspace_of(&k, &w));
}

fn realized<K: Field>(k: K, g: &FiniteGroup, seed: u64, n: usize) -> PresentedModule<K> {
    let file = random_module(&mut rng_for(seed, 0), g, k.spec(), &RandomParams::default());
    file.to_presentation(&Ctx::new(k, g.clone())).unwrap().realize(n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn wreath_product_is_associative(gi in 0usize..4, n in 0usize..4, a: usize, b: usize, c: usize) {
        let g = group(gi);
        let els = enumerate_wreath(&g, n);
        let (x, y, z) = (pick(&els, a), pick(&els, b), pick(&els, c));
        let lhs = wreath_compose(&g, &wreath_compose(&g, &x, &y), &z);
        let rhs = wreath_compose(&g, &x, &wreath_compose(&g, &y, &z));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wreath_embedding_is_multiplicative(gi in 0usize..2, n in 0usize..4, extra in 0usize..2, a: usize, b: usize) {
        let g = group(gi);
        let els = enumerate_wreath(&g, n);
        let (x, y) = (pick(&els, a), pick(&els, b));
        let m = n + extra;
        prop_assert_eq!(
            wreath_embed(&wreath_compose(&g, &x, &y), m),
            wreath_compose(&g, &wreath_embed(&x, m), &wreath_embed(&y, m))
        );
        if x != y {
            prop_assert_ne!(wreath_embed(&x, m), wreath_embed(&y, m));
        }
    }

    #[test]
    fn morphism_composition_is_associative(gi in 0usize..4, n in 0usize..3, e1 in 0usize..2, e2 in 0usize..2, a: usize, b: usize, c: usize) {
        let g = group(gi);
        let (m, l) = (n + e1, n + e1 + e2);
        let f = pick(&enumerate_hom(&g, n, m), a);
        let h = pick(&enumerate_hom(&g, m, l), b);
        let k = pick(&enumerate_hom(&g, l, l), c);
        let lhs = compose(&g, &k, &compose(&g, &h, &f).unwrap()).unwrap();
        let rhs = compose(&g, &compose(&g, &k, &h).unwrap(), &f).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hom_set_sizes(gi in 0usize..3, n in 0usize..4, extra in 0usize..3) {
        let g = group(gi);
        let m = n + extra;
        let falling: usize = (m - n + 1..=m).product();
        prop_assert_eq!(enumerate_hom(&g, n, m).len(), falling * g.order().pow(n as u32));
        prop_assert_eq!(orbit_representatives(n, m).len(), binomial(m, n));
    }

    #[test]
    fn j_products_vanish_off_the_image(gi in 0usize..2, r in 0usize..3, b in 1usize..3, extra in 0usize..2, a: usize, p: usize) {
        let g = group(gi);
        let n = 2 * b + extra;
        prop_assume!(r <= n);
        let f: Morphism = pick(&enumerate_hom(&g, r, n), a);
        let pairs = pick(&disjoint_pairs(b, n), p);
        let misses = pairs.iter().any(|(i, j)| !f.inj.contains(i) && !f.inj.contains(j));
        if misses {
            prop_assert!(j_product(&pairs, &f).is_empty());
        }
    }

    #[test]
    fn rank_plus_nullity(fi in 0usize..4, rows in 1usize..6, entries in prop::collection::vec(-3i64..4, 1..36)) {
        let entries: Vec<i64> = entries.iter().copied().take(entries.len() / rows * rows).collect();
        prop_assume!(!entries.is_empty());
        with_field!(field(fi), |k| rank_nullity(k, rows, &entries));
    }

    #[test]
    fn sum_and_intersection_dims(fi in 0usize..4, ambient in 1usize..6,
                                 a in prop::collection::vec(-2i64..3, 0..24),
                                 b in prop::collection::vec(-2i64..3, 0..24)) {
        with_field!(field(fi), |k| subspace_dims(k, ambient, &a, &b));
    }

    #[test]
    fn interpolation_reproduces_points(coeffs in prop::collection::vec(-5i64..6, 1..4), start in 0i64..6) {
        let p = |x: i64| coeffs.iter().rev().fold(0i64, |acc, c| acc * x + c);
        let pts: Vec<(i64, i64)> = (0..coeffs.len() as i64).map(|j| (start + j, p(start + j))).collect();
        let fit = interpolate(&pts);
        for x in 0..12 {
            prop_assert_eq!(evaluate(&fit, x), BigRational::from_integer(BigInt::from(p(x))));
        }
    }

    #[test]
    fn module_files_round_trip(seed: u64, gi in 0usize..4, fi in 0usize..4) {
        let f = random_module(&mut rng_for(seed, 1), &group(gi), field(fi), &RandomParams::default());
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(ModuleFile::parse(&text).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn quotient_dims_bounded_by_cover(seed: u64, gi in 0usize..2, fi in 0usize..3) {
        let g = group(gi);
        with_field!(field(fi), |k| {
            let p = realized(k, &g, seed, 5);
            p.module.validate().unwrap();
            for n in 0..=5 {
                prop_assert!(p.module.dims[n] <= p.cover.dims[n]);
                prop_assert_eq!(p.module.dims[n] == p.cover.dims[n], p.relations[n].is_zero());
            }
        });
    }

    #[test]
    fn free_module_h0_is_w(gi in 0usize..3, m in 0usize..3, d in 1usize..3, regular: bool) {
        let g = group(gi);
        let ctx = Ctx::new(Rationals, g.clone());
        let w = if regular { Rep::regular(&ctx, m) } else { Rep::trivial(&ctx, m, d) };
        let dims = fbg_dims(&h0(&build_free(&w, m + 2)));
        let mut expected = vec![0; m + 3];
        expected[m] = w.dim;
        prop_assert_eq!(dims, expected);
    }

    #[test]
    fn induced_maps_compose(seed: u64, gi in 0usize..2, a in 0usize..3, e1 in 0usize..2, e2 in 0usize..2, i: usize, j: usize) {
        let g = group(gi);
        let k = PrimeField::new(3).unwrap();
        let p = realized(k, &g, seed, 4);
        let (b, c) = (a + e1, a + e1 + e2);
        let phi = pick(&enumerate_hom(&g, a, b), i);
        let psi = pick(&enumerate_hom(&g, b, c), j);
        let v = &p.module;
        let lhs = v.induced_map(&compose(&g, &psi, &phi).unwrap()).unwrap();
        let rhs = v.induced_map(&psi).unwrap().compose(&k, &v.induced_map(&phi).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn structural_identities_on_random_modules(seed: u64, gi in 0usize..2, fi in 0usize..3) {
        let g = group(gi);
        let params = VerifyParams {
            truncation: 6,
            checks: vec![
                CheckKind::FourTerm,
                CheckKind::ShiftDerivative,
                CheckKind::DepthTrichotomy,
                CheckKind::TheoremD,
                CheckKind::Homreg,
                CheckKind::Finwidth,
                CheckKind::NagpalConsistency,
                CheckKind::Inddeg,
            ],
            ..VerifyParams::default()
        };
        let checks = with_field!(field(fi), |k| {
            let p = realized(k, &g, seed, 6);
            run_checks(&p, &params, &mut rng_for(seed, 2))
        });
        for c in checks {
            prop_assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}

#[test]
fn sigma_sizes_follow_catalan_recurrence() {
    let mut c = vec![1usize];
    for b in 0..5 {
        c.push((0..=b).map(|i| c[i] * c[b - i]).sum());
    }
    for (b, &cb) in c.iter().enumerate() {
        assert_eq!(sigma(b).len(), cb, "b = {b}");
    }
}

#[test]
fn wreath_orders() {
    for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(2)] {
        for n in 0..=4 {
            let fact: usize = (1..=n).product();
            assert_eq!(enumerate_wreath(&g, n).len(), fact * g.order().pow(n as u32));
        }
    }
}
