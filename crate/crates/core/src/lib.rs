//! Exact computations for actions of finite commutative Hopf algebras on
//! finite-dimensional commutative algebras.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod artinian;
pub mod comodule;
pub mod constant;
pub mod error;
pub mod field;
pub mod geometry;
pub mod group;
pub mod hopf;
pub mod matrix;
pub mod rebase;
pub mod tameness;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::{Matrix, Subspace};
