use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::abelian::{AbHom, FgAbGroup, Matrix};
use crate::affine_weyl::{big, to_i64};
use crate::error::{Error, Result};

/// `Λ_M = (X_*(T)_I / Q^∨_M)^σ`, realized inside the quotient
/// `C = X_*(T)_I / Q^∨_M` (both presented on the ambient `X_* = Z^n`).
pub struct LambdaM {
    group: FgAbGroup<BigInt>,
    quotient: FgAbGroup<BigInt>,
    inclusion: AbHom<BigInt>,
    to_quotient: Matrix<i64>,
    torsion: Vec<i64>,
    quotient_torsion: Vec<i64>,
    cache: Mutex<HashMap<Vec<i64>, Option<Vec<i64>>>>,
}

fn small(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).expect("coordinates fit in 64 bits")).collect()
}

fn factors(g: &FgAbGroup<BigInt>) -> Vec<i64> {
    g.torsion_factors().iter().map(|d| i64::try_from(d).expect("small invariant factor")).collect()
}

impl LambdaM {
    /// Invariants of `quotient` under the ambient endomorphism `sigma`.
    pub fn new(quotient: FgAbGroup<BigInt>, sigma: &Matrix<i64>) -> Result<Self> {
        let s: Matrix<BigInt> = sigma.cast().expect("i64 fits BigInt");
        let (group, inclusion) = quotient.invariants(&[s])?;
        let to_quotient = to_i64(&quotient.canon_matrix().mul(inclusion.matrix()).mul(&group.lift_matrix()))?;
        Ok(LambdaM {
            torsion: factors(&group),
            quotient_torsion: factors(&quotient),
            group,
            quotient,
            inclusion,
            to_quotient,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &FgAbGroup<BigInt> {
        &self.group
    }

    /// `X_*(T)_I / Q^∨_M`, the target of `κ_M`.
    pub fn quotient(&self) -> &FgAbGroup<BigInt> {
        &self.quotient
    }

    pub fn inclusion(&self) -> &AbHom<BigInt> {
        &self.inclusion
    }

    pub fn coord_len(&self) -> usize {
        self.group.coord_len()
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.group.free_rank()
    }

    pub fn reduce(&self, c: &mut [i64]) {
        for (v, d) in c.iter_mut().zip(&self.torsion) {
            *v = v.rem_euclid(*d);
        }
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.coord_len()]
    }

    /// `Λ_{M,tor}`, isomorphic to `W̃K/K`.
    pub fn ktilde_over_k(&self) -> FgAbGroup<BigInt> {
        self.group.torsion_part()
    }

    /// Canonical coordinates in the quotient `C` of an element of `Λ_M`.
    pub fn to_quotient(&self, lambda: &[i64]) -> Vec<i64> {
        let mut c = self.to_quotient.mul_vec(lambda);
        for (v, d) in c.iter_mut().zip(&self.quotient_torsion) {
            *v = v.rem_euclid(*d);
        }
        c
    }

    /// The element of `Λ_M` with the given quotient coordinates, if it is σ-invariant.
    pub fn from_quotient(&self, c: &[i64]) -> Option<Vec<i64>> {
        if let Some(v) = self.cache.lock().expect("cache lock").get(c) {
            return v.clone();
        }
        let v = self.inclusion.preimage(&big(c)).map(|x| small(&x));
        self.cache.lock().expect("cache lock").insert(c.to_vec(), v.clone());
        v
    }

    /// Canonical matrix on `Λ_M` of an ambient endomorphism of `X_*` that
    /// preserves `C` and commutes with σ.
    pub fn induced(&self, m: &Matrix<i64>) -> Result<Matrix<i64>> {
        let mb: Matrix<BigInt> = m.cast().expect("i64 fits BigInt");
        if !self.quotient.preserved_by(&mb) {
            return Err(Error::InvalidInput("endomorphism does not act on X_*(T)_I / Q^vee_M".into()));
        }
        let mut cols = Vec::with_capacity(self.coord_len());
        for g in self.group.generators() {
            let y = self.quotient.canon(&mb.mul_vec(&self.inclusion.matrix().mul_vec(&g)));
            let x = self
                .inclusion
                .preimage(&y)
                .ok_or_else(|| Error::InvalidInput("endomorphism does not preserve Lambda_M".into()))?;
            cols.push(small(&x));
        }
        Ok(Matrix::from_columns(self.coord_len(), &cols))
    }

    pub fn apply(&self, m: &Matrix<i64>, lambda: &[i64]) -> Vec<i64> {
        let mut v = m.mul_vec(lambda);
        self.reduce(&mut v);
        v
    }
}

impl fmt::Display for LambdaM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.group.fmt(f)
    }
}

impl fmt::Debug for LambdaM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaM({} inside {})", self.group, self.quotient)
    }
}
