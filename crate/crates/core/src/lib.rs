//! Exact computations for quivers and path algebras with relations.
//!
//! The crate covers noncommutative polynomial arithmetic over exact fields,
//! degree-truncated rewriting for quotients of path algebras, Hom and Ext¹
//! between finite-dimensional representations, local quivers, representation
//! scheme ideals, deformation expansions of relations along parameterized
//! families, and recognition of preprojective and superpotential structure.

pub mod deform;
pub mod dsl;
pub mod error;
pub mod extcalc;
pub mod field;
pub mod linalg;
pub mod ncalg;
pub mod quiver;
pub mod repvariety;
pub mod rewrite;
pub mod session;
pub mod structure;

pub use error::{Error, Result};
pub use field::{Field, FieldElem};
pub use linalg::Matrix;
pub use ncalg::{NCPoly, PathWord, Presentation, Superpotential};
pub use quiver::{DimVector, Quiver};
