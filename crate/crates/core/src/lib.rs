//! Frobenius-Schur indicators and real/complex/quaternionic classification
//! for representations of finite-dimensional *-algebras and corepresentations
//! of their dual *-coalgebras.

pub mod algebra;
pub mod constructors;
pub mod corep;
pub mod corpus;
pub mod error;
pub mod indicator;
pub mod instance;
pub mod io;
pub mod matrix;
pub mod rep;

pub use error::{Error, Result};
pub use matrix::{CMatrix, CVector, Tolerance, C64};
