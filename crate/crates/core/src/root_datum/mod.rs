//! Based root data with Galois actions, Levi subsystems and the échelonnage.

pub mod datum;
pub mod echelon;
pub mod file;
pub mod levi;
pub mod system;

pub use datum::{reflection_matrix, ExplicitSigma, GaloisRootDatum, TwistSpec};
pub use echelon::{inertia_orbits, EchelonSystem, Provenance};
pub use file::{Expected, GroupDescription, Source, Tagged};
pub use levi::LeviDatum;
pub use system::RootSystem;
