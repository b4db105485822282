//! FI_G-modules: representations of `G_n`, truncated modules, free modules and presentations.

mod free;
mod presentation;
mod rep;
mod truncated;

pub use free::{build_free, free_dim, free_element, hom_from_free};
pub use presentation::{
    CoeffValue, GeneratorFile, GroupFile, ModuleFile, Presentation, PresentedModule, Relation,
    RelationFile, Term, TermFile,
};
pub use rep::{apply_word, check_wreath_relations, Ctx, Rep};
pub use truncated::{
    direct_sum, image_of, kernel_of, quotient, restrict_to, submodule, Graded, ModuleMorphism,
    TruncatedModule,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("invalid module data: {0}")]
    Invalid(String),
    #[error("truncation below relation degree: relations reach degree {needed}, truncation is {have}")]
    BelowRelationDegree { needed: usize, have: usize },
    #[error("truncation too small: need degree {needed}, have {have}")]
    Truncation { needed: usize, have: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
