use std::collections::BTreeSet;

use serde::Serialize;

use crate::affine_weyl::{lattice_box, AffineElement};
use crate::error::{Error, Result};
use crate::satake::group::SatakeGroup;

/// One `W(G,A)`-orbit on `Λ_M` and the double coset `W̃_K x W̃_K` it indexes.
#[derive(Clone, Debug, Serialize)]
pub struct CartanOrbit {
    /// Lexicographically smallest element of the orbit.
    pub representative: Vec<i64>,
    pub elements: Vec<Vec<i64>>,
    /// The element of `Ω_M^σ` over the representative.
    pub omega: AffineElement,
    /// Minimal element of the double coset.
    pub minimal: AffineElement,
    pub length: usize,
    /// `κ_G` of the double coset.
    pub kottwitz: Vec<i64>,
}

/// The orbits meeting the region `|free coordinates| ≤ bound` of `Λ_M`
/// (orbits are kept whole, so they may leave the region).
#[derive(Clone, Debug, Serialize)]
pub struct CartanDecomposition {
    pub bound: i64,
    pub orbits: Vec<CartanOrbit>,
}

impl SatakeGroup {
    pub fn weyl_orbit(&self, lambda: &[i64]) -> BTreeSet<Vec<i64>> {
        let l = self.lambda();
        self.relative_weyl().matrices().iter().map(|m| l.apply(m, lambda)).collect()
    }

    pub fn orbit_representative(&self, lambda: &[i64]) -> Vec<i64> {
        self.weyl_orbit(lambda).into_iter().next().expect("orbits are nonempty")
    }

    /// The region of `Λ_M` with free coordinates bounded by `bound`.
    pub fn lambda_region(&self, bound: i64) -> Vec<Vec<i64>> {
        let l = self.lambda();
        lattice_box(l.torsion(), l.coord_len(), bound)
    }

    /// Orbits, their Ω_M^σ lifts and the minimal elements of the
    /// corresponding double cosets. A bound is needed when `Λ_M` is infinite.
    pub fn cartan(&self, bound: Option<i64>) -> Result<CartanDecomposition> {
        let bound = match bound {
            Some(b) => b,
            None if self.lambda().free_rank() == 0 => 0,
            None => {
                return Err(Error::BoundRequired(format!(
                    "Lambda_M = {} is infinite; pass a norm bound",
                    self.lambda()
                )))
            }
        };
        let iw = self.iwahori_weyl();
        let mut seen = BTreeSet::new();
        let mut orbits = Vec::new();
        for lambda in self.lambda_region(bound) {
            if seen.contains(&lambda) {
                continue;
            }
            let orbit = self.weyl_orbit(&lambda);
            seen.extend(orbit.iter().cloned());
            let representative = orbit.iter().next().expect("nonempty").clone();
            let omega = self.omega_m(&representative);
            if !self.is_sigma_fixed(&omega) {
                return Err(Error::InvalidInput(format!(
                    "lift {} of a sigma-invariant class is not sigma-fixed",
                    iw.format(&omega)
                )));
            }
            let minimal = iw.min_double_coset(&omega, self.special_type());
            orbits.push(CartanOrbit {
                length: iw.length(&minimal),
                kottwitz: iw.kottwitz(&minimal),
                elements: orbit.into_iter().collect(),
                representative,
                omega,
                minimal,
            });
        }
        orbits.sort_by(|a, b| (a.length, &a.representative).cmp(&(b.length, &b.representative)));
        Ok(CartanDecomposition { bound, orbits })
    }
}

impl CartanDecomposition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn position(&self, lambda: &[i64]) -> Option<usize> {
        self.orbits.iter().position(|o| o.elements.iter().any(|e| e == lambda))
    }

    /// `y ⪯ y'` iff the minimal elements compare in the Bruhat order.
    pub fn preceq(&self, group: &SatakeGroup, a: usize, b: usize) -> bool {
        group.iwahori_weyl().bruhat_leq(&self.orbits[a].minimal, &self.orbits[b].minimal)
    }

    /// Covering relations `(a, b)` of `⪯` among the computed orbits.
    pub fn hasse(&self, group: &SatakeGroup) -> Vec<(usize, usize)> {
        let n = self.len();
        let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| self.preceq(group, a, b)).collect()).collect();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq[a][b] {
                    continue;
                }
                if !(0..n).any(|c| c != a && c != b && leq[a][c] && leq[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}
