//! Iwahori-Weyl groups `X_*(T)_I ⋊ W(Σ)`: lengths, Bruhat order, Kottwitz
//! map, Frobenius action and bounded enumeration.

mod alcove;
mod bruhat;
mod element;
mod finite;
mod iwahori;
mod sigma;

pub use alcove::AlcoveGeometry;
pub use bruhat::lattice_box;
pub use element::AffineElement;
pub use finite::{FiniteWeylGroup, SubWeyl};
pub use iwahori::{ClassMap, IwahoriWeyl};
pub(crate) use iwahori::{big, to_i64};
pub use sigma::SigmaAction;

#[cfg(test)]
mod tests;
