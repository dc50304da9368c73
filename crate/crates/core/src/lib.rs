pub mod abelian;
pub mod affine_weyl;
pub mod catalog;
pub mod error;
pub mod rational;
pub mod report;
pub mod root_datum;
pub mod satake;
pub mod scalar;
pub mod transfer;

pub use error::{Error, Result};
pub use scalar::IntScalar;

/// Integer matrices with arbitrary-precision entries.
pub type IntMat = abelian::Matrix<num_bigint::BigInt>;
/// Finitely generated abelian groups over arbitrary-precision integers.
pub type AbGroup = abelian::FgAbGroup<num_bigint::BigInt>;
/// Small presentations used on hot paths.
pub type LatticeGroup = abelian::FgAbGroup<i64>;

/// Polynomials in the group algebra of `Λ_M` with exact rational coefficients.
pub type Poly = satake::OrbitSumPoly<num_rational::BigRational>;
