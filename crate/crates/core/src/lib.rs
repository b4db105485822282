//! Exact computations with finitely generated FI_G-modules over the rationals and
//! prime fields: presentations, shift and derivative functors, homology, derived
//! derivatives, and the invariants built from them.

pub mod combi;
pub mod exactla;
pub mod figcat;
pub mod functors;
pub mod group;
pub mod invariants;
pub mod module;
pub mod random;
pub mod report;
pub mod verify;
