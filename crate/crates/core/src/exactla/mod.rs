//! Exact linear algebra over the rationals and prime fields, plus integer lattices.

mod field;
mod hnf;
mod matrix;
mod subspace;

pub use field::{parse_rational, Field, FieldSpec, PrimeField, Rational, Rationals};
pub use hnf::{integer_hnf, is_full_lattice, lattice_basis};
pub use matrix::{axpy, from_dense, scale, to_dense, unit, Matrix, SparseVec};
pub use subspace::{
    image, intersection, kernel, map_subspace, preimage, rank, row_reduce, sum, QuotientBasis,
    RowReduction, Subspace,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("parse error: {0}")]
    Parse(String),
}

/// Run a generic computation with the field named by a [`FieldSpec`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$k:ident| $body:expr) => {
        match $spec {
            $crate::exactla::FieldSpec::Rationals => {
                let $k = $crate::exactla::Rationals;
                $body
            }
            $crate::exactla::FieldSpec::Prime(p) => {
                let $k = $crate::exactla::PrimeField::new(p).expect("validated prime");
                $body
            }
        }
    };
}
