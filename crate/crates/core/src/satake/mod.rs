//! `Λ_M`, the relative Weyl group, the Cartan decomposition and the
//! invariant ring `C[Λ_M]^{W(G,A)}`.

mod cartan;
mod checks;
mod group;
mod lambda;
mod parahoric;
mod poly;
mod relative;
mod sequence;

pub use cartan::{CartanDecomposition, CartanOrbit};
pub use checks::{DoubleCosetReport, ParahoricActionReport, SemidirectReport};
pub use group::SatakeGroup;
pub use lambda::LambdaM;
pub use parahoric::special_subset;
pub use poly::{OrbitSumPoly, PolyRing};
pub use relative::RelativeWeyl;
pub use sequence::ExactSequenceReport;

#[cfg(test)]
mod tests;
