//! Inner twists of quasi-split groups and the transfer of Satake algebras
//! from `G*` to `G`.

mod map;
mod twist;

pub use map::{constant_term, HomomorphismReport, SquareReport, SurjectivityReport, TransferMap, WeylMapReport};
pub use twist::{check_twist, validate_twist, InnerTwist, TwistReport};

#[cfg(test)]
mod tests;
