use serde::{Deserialize, Serialize};

use crate::exactla::{Field, FieldSpec, Matrix, SparseVec};
use crate::figcat::Morphism;
use crate::group::FiniteGroup;

use super::free::{build_free, free_element};
use super::rep::{Ctx, Rep};
use super::truncated::{direct_sum, quotient, Graded, ModuleMorphism, TruncatedModule};
use super::ModuleError;

/// One summand `(f, g) ⊗ w` of a relation.
#[derive(Clone, Debug)]
pub struct Term<E> {
    pub generator: usize,
    pub morphism: Morphism,
    pub coeff: SparseVec<E>,
}

#[derive(Clone, Debug)]
pub struct Relation<E> {
    pub degree: usize,
    pub terms: Vec<Term<E>>,
}

/// Generators `M(W_j)` and relations living in `⊕ M(W_j)`.
#[derive(Clone, Debug)]
pub struct Presentation<K: Field> {
    pub ctx: Ctx<K>,
    pub generators: Vec<Rep<K>>,
    pub relations: Vec<Relation<K::Elem>>,
}

/// `V = C / K` with `C` relatively projective and `K` a graded submodule.
#[derive(Clone, Debug)]
pub struct PresentedModule<K: Field> {
    pub cover: TruncatedModule<K>,
    pub relations: Graded<K::Elem>,
    pub module: TruncatedModule<K>,
    pub projection: ModuleMorphism<K::Elem>,
    /// Upper bound for the generation degree of `V` (`None`: no generators).
    pub gen_bound: Option<usize>,
    /// Upper bound for the degree in which `K` is generated (`None`: `K = 0`).
    pub rel_bound: Option<usize>,
}

impl<K: Field> PresentedModule<K> {
    pub fn new(
        cover: TruncatedModule<K>,
        relations: Graded<K::Elem>,
        gen_bound: Option<usize>,
        rel_bound: Option<usize>,
    ) -> Self {
        let (module, projection) = quotient(&cover, &relations);
        PresentedModule { cover, relations, module, projection, gen_bound, rel_bound }
    }

    pub fn truncation(&self) -> usize {
        self.cover.truncation
    }
}

impl<K: Field> Presentation<K> {
    pub fn generation_degree(&self) -> Option<usize> {
        self.generators.iter().map(|w| w.degree).max()
    }

    pub fn relation_degree(&self) -> Option<usize> {
        self.relations.iter().map(|r| r.degree).max()
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        for w in &self.generators {
            w.validate()?;
        }
        for r in &self.relations {
            for t in &r.terms {
                let w = self.generators.get(t.generator).ok_or_else(|| {
                    ModuleError::Invalid(format!("relation refers to missing generator {}", t.generator))
                })?;
                if t.morphism.source() != w.degree || t.morphism.target != r.degree {
                    return Err(ModuleError::Invalid(format!(
                        "term morphism [{}] -> [{}] does not match generator degree {} and relation degree {}",
                        t.morphism.source(),
                        t.morphism.target,
                        w.degree,
                        r.degree
                    )));
                }
                if t.coeff.iter().any(|(i, _)| *i >= w.dim) {
                    return Err(ModuleError::Invalid("coefficient vector longer than generator".into()));
                }
            }
        }
        Ok(())
    }

    /// The element of `C_deg` described by a relation.
    fn relation_vector(&self, frees: &[TruncatedModule<K>], r: &Relation<K::Elem>) -> SparseVec<K::Elem> {
        let k = &self.ctx.field;
        let mut acc: SparseVec<K::Elem> = Vec::new();
        for t in &r.terms {
            let off: usize = frees[..t.generator].iter().map(|f| f.dims[r.degree]).sum();
            let v: SparseVec<K::Elem> = free_element(&self.generators[t.generator], &t.morphism, &t.coeff)
                .into_iter()
                .map(|(i, x)| (i + off, x))
                .collect();
            acc = crate::exactla::axpy(k, &acc, &k.one(), &v);
        }
        acc
    }

    /// The module in degrees `0..=truncation`.
    pub fn realize(&self, truncation: usize) -> Result<PresentedModule<K>, ModuleError> {
        self.validate()?;
        if let Some(r) = self.relation_degree() {
            if r > truncation {
                return Err(ModuleError::BelowRelationDegree { needed: r, have: truncation });
            }
        }
        let frees: Vec<TruncatedModule<K>> = self.generators.iter().map(|w| build_free(w, truncation)).collect();
        let cover = if frees.is_empty() {
            TruncatedModule::zero(&self.ctx, truncation)
        } else {
            direct_sum(&self.ctx, &frees.iter().collect::<Vec<_>>())
        };
        let mut seeds: Vec<Vec<SparseVec<K::Elem>>> = vec![Vec::new(); truncation + 1];
        for r in &self.relations {
            seeds[r.degree].push(self.relation_vector(&frees, r));
        }
        let rels = cover.span_submodule(&seeds);
        Ok(PresentedModule::new(cover, rels, self.generation_degree(), self.relation_degree()))
    }
}

/// Group field of a module file: a preset name or an explicit table.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GroupFile {
    Preset(String),
    Table { table: Vec<Vec<usize>> },
}

impl GroupFile {
    pub fn build(&self) -> Result<FiniteGroup, ModuleError> {
        match self {
            GroupFile::Preset(name) => FiniteGroup::preset(name),
            GroupFile::Table { table } => FiniteGroup::from_table(table.clone()),
        }
        .map_err(|e| ModuleError::Parse(e.to_string()))
    }
}

/// Coefficients may be written as JSON integers or as `"p/q"` strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CoeffValue {
    Int(i64),
    Str(String),
}

impl CoeffValue {
    fn parse<K: Field>(&self, k: &K) -> Result<K::Elem, ModuleError> {
        match self {
            CoeffValue::Int(v) => Ok(k.from_i64(*v)),
            CoeffValue::Str(s) => k.parse(s).map_err(|e| ModuleError::Parse(e.to_string())),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFile {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// One matrix (list of rows) per generator of `G_degree`: swaps first, then decorations.
    /// Omitted: the regular representation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<CoeffValue>>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub gen: usize,
    /// Images of `1..=m`, 1-based.
    pub inj: Vec<usize>,
    #[serde(default)]
    pub dec: Option<Vec<usize>>,
    /// A full vector in `W`, or a single scalar multiplying the first basis vector.
    pub coeff: Vec<CoeffValue>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub degree: usize,
    pub terms: Vec<TermFile>,
}

/// On-disk description of a presented module.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub group: GroupFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    pub generators: Vec<GeneratorFile>,
    #[serde(default)]
    pub relations: Vec<RelationFile>,
}

impl ModuleFile {
    pub fn parse(text: &str) -> Result<Self, ModuleError> {
        serde_json::from_str(text).map_err(|e| ModuleError::Parse(e.to_string()))
    }

    pub fn field_spec(&self) -> Result<FieldSpec, ModuleError> {
        let s = match (self.field.as_str(), self.p) {
            ("Fp", Some(p)) => format!("Fp:{p}"),
            (f, _) => f.to_string(),
        };
        FieldSpec::parse(&s).map_err(|e| ModuleError::Parse(e.to_string()))
    }

    pub fn to_presentation<K: Field>(&self, ctx: &Ctx<K>) -> Result<Presentation<K>, ModuleError> {
        let k = &ctx.field;
        let mut generators = Vec::new();
        for (gi, gf) in self.generators.iter().enumerate() {
            let rep = match &gf.action {
                None => {
                    let r = Rep::regular(ctx, gf.degree);
                    if gf.dim.is_some_and(|d| d != r.dim) {
                        return Err(ModuleError::Parse(format!(
                            "generator {gi}: dim given without action must equal the regular dimension {}",
                            r.dim
                        )));
                    }
                    r
                }
                Some(mats) => {
                    let dim = gf.dim.or_else(|| mats.first().map(Vec::len)).unwrap_or(0);
                    let mut gens = Vec::new();
                    for m in mats {
                        if m.len() != dim || m.iter().any(|row| row.len() != dim) {
                            return Err(ModuleError::Parse(format!("generator {gi}: action matrix is not {dim}x{dim}")));
                        }
                        let rows: Vec<Vec<K::Elem>> = m
                            .iter()
                            .map(|row| row.iter().map(|c| c.parse(k)).collect::<Result<_, _>>())
                            .collect::<Result<_, _>>()?;
                        gens.push(Matrix::from_dense_rows(k, &rows));
                    }
                    Rep::new(ctx, gf.degree, dim, gens).map_err(|e| ModuleError::Parse(format!("generator {gi}: {e}")))?
                }
            };
            generators.push(rep);
        }
        let mut relations = Vec::new();
        for rf in &self.relations {
            let mut terms = Vec::new();
            for tf in &rf.terms {
                let w = generators
                    .get(tf.gen)
                    .ok_or_else(|| ModuleError::Parse(format!("relation term refers to generator {}", tf.gen)))?;
                if tf.inj.contains(&0) {
                    return Err(ModuleError::Parse("injections are 1-based".into()));
                }
                let inj: Vec<usize> = tf.inj.iter().map(|x| x - 1).collect();
                let dec = tf.dec.clone().unwrap_or_else(|| vec![0; inj.len()]);
                let morphism = Morphism::new(rf.degree, inj, dec, &ctx.group)
                    .map_err(|e| ModuleError::Parse(e.to_string()))?;
                let vals: Vec<K::Elem> = tf.coeff.iter().map(|c| c.parse(k)).collect::<Result<_, _>>()?;
                let coeff: SparseVec<K::Elem> = if vals.len() == 1 {
                    if k.is_zero(&vals[0]) || w.dim == 0 {
                        vec![]
                    } else {
                        vec![(0, vals[0].clone())]
                    }
                } else if vals.len() == w.dim {
                    crate::exactla::from_dense(k, &vals)
                } else {
                    return Err(ModuleError::Parse(format!(
                        "coefficient has length {}, generator has dimension {}",
                        vals.len(),
                        w.dim
                    )));
                };
                terms.push(Term { generator: tf.gen, morphism, coeff });
            }
            relations.push(Relation { degree: rf.degree, terms });
        }
        let p = Presentation { ctx: ctx.clone(), generators, relations };
        p.validate().map_err(|e| ModuleError::Parse(e.to_string()))?;
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;

    fn t0_file() -> ModuleFile {
        ModuleFile::parse(
            r#"{"field":"Q","group":"trivial","generators":[{"degree":0}],
                "relations":[{"degree":1,"terms":[{"gen":0,"inj":[],"coeff":["1"]}]}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn torsion_module_dims() {
        let ctx = Ctx::new(Rationals, FiniteGroup::trivial());
        let p = t0_file().to_presentation(&ctx).unwrap();
        let v = p.realize(4).unwrap();
        assert_eq!(v.module.dims, vec![1, 0, 0, 0, 0]);
        v.module.validate().unwrap();
        assert!(matches!(p.realize(0), Err(ModuleError::BelowRelationDegree { .. })));
    }

    #[test]
    fn z2_sign_generator() {
        let ctx = Ctx::new(Rationals, FiniteGroup::cyclic(2));
        let f = ModuleFile::parse(
            r#"{"field":"Q","group":"Z2","generators":[{"degree":1,"dim":1,"action":[[["-1"]]]}]}"#,
        )
        .unwrap();
        let p = f.to_presentation(&ctx).unwrap();
        let v = p.realize(4).unwrap();
        assert_eq!(v.module.dims, vec![0, 1, 2, 3, 4]);
        v.module.validate().unwrap();
    }

    #[test]
    fn bad_group_table_reports_axiom() {
        let f = ModuleFile::parse(
            r#"{"field":"Q","group":{"table":[[0,1],[1,1]]},"generators":[]}"#,
        )
        .unwrap();
        let e = f.group.build().unwrap_err();
        assert!(e.to_string().contains("no inverse for element 1"));
    }
}
