//! Exact integer linear algebra and finitely generated abelian groups.

pub mod group;
pub mod matrix;
pub mod snf;

pub use group::{column_span_basis, AbHom, FgAbGroup};
pub use matrix::Matrix;
pub use snf::{integer_kernel, snf, solve_integer, unimodular_inverse, SnfResult};
