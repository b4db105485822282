//! Seeded random presentations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactla::FieldSpec;
use crate::figcat::enumerate_hom;
use crate::group::FiniteGroup;
use crate::module::{CoeffValue, GeneratorFile, GroupFile, ModuleFile, RelationFile, TermFile};

#[derive(Clone, Debug)]
pub struct RandomParams {
    pub d_max: usize,
    pub r_max: usize,
    pub max_generators: usize,
    pub max_relations: usize,
    pub max_terms: usize,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams { d_max: 2, r_max: 3, max_generators: 2, max_relations: 3, max_terms: 3 }
    }
}

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn group_file(g: &FiniteGroup) -> GroupFile {
    match g.name() {
        "trivial" | "Z2" | "Z3" | "S3" => GroupFile::Preset(g.name().to_string()),
        _ => GroupFile::Table { table: g.table().to_vec() },
    }
}

fn field_fields(spec: FieldSpec) -> (String, Option<u64>) {
    match spec {
        FieldSpec::Rationals => ("Q".into(), None),
        FieldSpec::Prime(p) => ("Fp".into(), Some(p)),
    }
}

/// A random presentation: generator degrees uniform in `0..=d_max`, each `W` regular or
/// trivial, relations with 1 to `max_terms` terms of coefficient `±1` along uniformly
/// chosen morphisms.
pub fn random_module<R: Rng>(rng: &mut R, g: &FiniteGroup, field: FieldSpec, params: &RandomParams) -> ModuleFile {
    let ngens = rng.gen_range(1..=params.max_generators.max(1));
    let mut generators = Vec::new();
    for _ in 0..ngens {
        let degree = rng.gen_range(0..=params.d_max);
        let gf = if rng.gen_bool(0.5) {
            GeneratorFile { degree, dim: None, action: None }
        } else {
            let count = degree.saturating_sub(1) + if degree > 0 { g.generators().len() } else { 0 };
            let one = vec![vec![CoeffValue::Int(1)]];
            GeneratorFile { degree, dim: Some(1), action: Some(vec![one; count]) }
        };
        generators.push(gf);
    }
    let min_deg = generators.iter().map(|x| x.degree).min().unwrap_or(0);
    let nrels = rng.gen_range(0..=params.max_relations);
    let mut relations = Vec::new();
    if params.r_max >= min_deg {
        for _ in 0..nrels {
            let degree = rng.gen_range(min_deg..=params.r_max);
            let usable: Vec<usize> = (0..ngens).filter(|&j| generators[j].degree <= degree).collect();
            let nterms = rng.gen_range(1..=params.max_terms.max(1));
            let mut terms = Vec::new();
            for _ in 0..nterms {
                let gen = *usable.choose(rng).expect("some generator fits");
                let homs = enumerate_hom(g, generators[gen].degree, degree);
                let f = homs.choose(rng).expect("hom set is non-empty");
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                terms.push(TermFile {
                    gen,
                    inj: f.inj.iter().map(|x| x + 1).collect(),
                    dec: if g.order() > 1 { Some(f.dec.clone()) } else { None },
                    coeff: vec![CoeffValue::Int(sign)],
                });
            }
            relations.push(RelationFile { degree, terms });
        }
    }
    relations.sort_by_key(|r| r.degree);
    let (field, p) = field_fields(field);
    ModuleFile { field, p, group: group_file(g), truncation: None, generators, relations }
}

/// Modules of finite degree: a random presentation with everything in degree `top`
/// killed as well.
pub fn random_finite_module<R: Rng>(
    rng: &mut R,
    g: &FiniteGroup,
    field: FieldSpec,
    params: &RandomParams,
    top: usize,
) -> ModuleFile {
    let mut f = random_module(rng, g, field, params);
    for (j, gf) in f.generators.iter().enumerate() {
        if gf.degree > top {
            continue;
        }
        // W is cyclic (regular or trivial), so one pure tensor generates all of M(W)_top
        let t = TermFile { gen: j, inj: (1..=gf.degree).collect(), dec: None, coeff: vec![CoeffValue::Int(1)] };
        f.relations.push(RelationFile { degree: top, terms: vec![t] });
    }
    f.relations.sort_by_key(|r| r.degree);
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;
    use crate::module::Ctx;

    #[test]
    fn random_modules_realize() {
        let g = FiniteGroup::cyclic(2);
        let ctx = Ctx::new(PrimeField::new(3).unwrap(), g.clone());
        for i in 0..10 {
            let mut rng = rng_for(7, i);
            let f = random_module(&mut rng, &g, FieldSpec::Prime(3), &RandomParams::default());
            let p = f.to_presentation(&ctx).unwrap().realize(5).unwrap();
            p.module.validate().unwrap();
        }
    }

    #[test]
    fn same_seed_same_module() {
        let g = FiniteGroup::trivial();
        let a = random_module(&mut rng_for(1, 3), &g, FieldSpec::Rationals, &RandomParams::default());
        let b = random_module(&mut rng_for(1, 3), &g, FieldSpec::Rationals, &RandomParams::default());
        assert_eq!(a, b);
    }

    #[test]
    fn finite_modules_vanish_at_top() {
        let g = FiniteGroup::trivial();
        let ctx = Ctx::new(PrimeField::new(2).unwrap(), g.clone());
        for i in 0..10 {
            let f = random_finite_module(&mut rng_for(5, i), &g, FieldSpec::Prime(2), &RandomParams::default(), 3);
            let p = f.to_presentation(&ctx).unwrap().realize(6).unwrap();
            assert!(p.module.dims[3..].iter().all(|&d| d == 0), "{:?}", p.module.dims);
        }
    }
}
