use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::abelian::Matrix;
use crate::error::{Error, Result};

/// An element of the group algebra of a finitely generated abelian group,
/// as a finite map from canonical coordinate vectors to coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrbitSumPoly<C> {
    terms: BTreeMap<Vec<i64>, C>,
}

impl<C: Clone + Zero + One + PartialEq> OrbitSumPoly<C> {
    pub fn zero() -> Self {
        OrbitSumPoly { terms: BTreeMap::new() }
    }

    pub fn monomial(exponent: Vec<i64>, coefficient: C) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, C> {
        &self.terms
    }

    pub fn coefficient(&self, exponent: &[i64]) -> C {
        self.terms.get(exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.keys()
    }

    fn add_term(&mut self, exponent: Vec<i64>, coefficient: C) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(C::zero);
        *entry = entry.clone() + coefficient;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }
}

impl<C: fmt::Display> fmt::Display for OrbitSumPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let e: Vec<String> = e.iter().map(|v| v.to_string()).collect();
                format!("{c}*e[{}]", e.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: fmt::Display> fmt::Debug for OrbitSumPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The group algebra `C[Λ]` with a finite group `W` acting on `Λ` by
/// matrices on canonical coordinates.
#[derive(Clone, Debug)]
pub struct PolyRing {
    torsion: Vec<i64>,
    coord_len: usize,
    action: Vec<Matrix<i64>>,
}

impl PolyRing {
    pub fn new(torsion: Vec<i64>, coord_len: usize, action: Vec<Matrix<i64>>) -> Self {
        PolyRing { torsion, coord_len, action }
    }

    pub fn coord_len(&self) -> usize {
        self.coord_len
    }

    pub fn reduce(&self, v: &mut [i64]) {
        for (x, d) in v.iter_mut().zip(&self.torsion) {
            *x = x.rem_euclid(*d);
        }
    }

    fn act(&self, m: &Matrix<i64>, v: &[i64]) -> Vec<i64> {
        let mut out = m.mul_vec(v);
        self.reduce(&mut out);
        out
    }

    pub fn orbit(&self, lambda: &[i64]) -> BTreeSet<Vec<i64>> {
        self.action.iter().map(|m| self.act(m, lambda)).collect()
    }

    pub fn representative(&self, lambda: &[i64]) -> Vec<i64> {
        self.orbit(lambda).into_iter().next().expect("orbits are nonempty")
    }

    pub fn one<C: Clone + Zero + One + PartialEq>(&self) -> OrbitSumPoly<C> {
        OrbitSumPoly::monomial(vec![0; self.coord_len], C::one())
    }

    /// `m_λ = Σ_{μ ∈ Wλ} e^μ`.
    pub fn orbit_sum<C: Clone + Zero + One + PartialEq>(&self, lambda: &[i64]) -> OrbitSumPoly<C> {
        let mut p = OrbitSumPoly::zero();
        for mu in self.orbit(lambda) {
            p.add_term(mu, C::one());
        }
        p
    }

    pub fn mul<C: Clone + Zero + One + PartialEq>(&self, a: &OrbitSumPoly<C>, b: &OrbitSumPoly<C>) -> OrbitSumPoly<C> {
        let mut out = OrbitSumPoly::zero();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let mut e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                self.reduce(&mut e);
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Coefficients constant on `W`-orbits.
    pub fn is_invariant<C: Clone + Zero + One + PartialEq>(&self, p: &OrbitSumPoly<C>) -> bool {
        p.terms.iter().all(|(e, c)| self.orbit(e).iter().all(|mu| p.coefficient(mu) == *c))
    }

    /// Coordinates in the orbit-sum basis, keyed by orbit representative.
    pub fn to_orbit_basis<C: Clone + Zero + One + PartialEq>(
        &self,
        p: &OrbitSumPoly<C>,
    ) -> Result<BTreeMap<Vec<i64>, C>> {
        if !self.is_invariant(p) {
            return Err(Error::EquivarianceViolated("polynomial is not Weyl-invariant".into()));
        }
        Ok(p.terms
            .iter()
            .filter(|(e, _)| self.representative(e) == **e)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect())
    }

    pub fn from_orbit_basis<C: Clone + Zero + One + PartialEq>(
        &self,
        coords: &BTreeMap<Vec<i64>, C>,
    ) -> OrbitSumPoly<C> {
        coords
            .iter()
            .fold(OrbitSumPoly::zero(), |acc, (e, c)| acc.add(&self.orbit_sum::<C>(e).scale(c)))
    }
}
