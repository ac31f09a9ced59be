//! Exact computer algebra for parabolic geometries of G(3) and F(4).

// index loops read closer to the matrix formulas
#![allow(clippy::needless_range_loop)]

pub mod build;
pub mod cases;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod prolong;
pub mod ratfunc;
pub mod roots;
pub mod scalar;
pub mod superalg;
pub mod superfields;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use superalg::{GradedLieSuperalgebra, Parity, SuperDim};
