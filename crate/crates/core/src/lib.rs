//! Exact Clifford correspondence for split semisimple algebras over prime
//! fields.
//!
//! Algebras are given by structure constants over GF(p); modules by one
//! action matrix per basis element. Every theorem-level claim computed here
//! is checked exactly, and the [`oracle`] module re-checks simplicity and
//! block counts by brute force.

pub mod algebra;
pub mod clifford;
pub mod error;
pub mod files;
pub mod gf;
pub mod linalg;
pub mod module;
pub mod oracle;
pub mod suite;

pub use algebra::{wedderburn, Algebra, CayleyTable, Subalgebra, WedderburnCertificate};
pub use error::{Error, ErrorClass, Result};
pub use gf::{PrimeField, Polynomial};
pub use linalg::{Matrix, Subspace};
pub use module::{HomSpace, Module};
