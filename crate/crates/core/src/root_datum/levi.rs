use num_bigint::BigInt;

use crate::abelian::{AbHom, FgAbGroup, Matrix};
use crate::error::{Error, Result};
use crate::rational::{self, q};
use crate::root_datum::datum::GaloisRootDatum;
use crate::root_datum::system::RootSystem;

/// A Galois-stable Levi subsystem of the absolute roots.
#[derive(Clone, Debug)]
pub struct LeviDatum {
    roots: Vec<usize>,
    system: RootSystem,
    is_minimal: bool,
}

impl LeviDatum {
    pub fn new(datum: &GaloisRootDatum, roots: &[usize]) -> Result<Self> {
        let abs = datum.absolute();
        if let Some(&bad) = roots.iter().find(|&&r| r >= abs.len()) {
            return Err(Error::InvalidInput(format!("Levi root index {bad} out of range")));
        }
        let (system, map) = abs.subsystem(roots)?;
        // rational closure: a root in the span of the subset belongs to it
        let span: Vec<Vec<_>> = map.iter().map(|&i| abs.root(i).iter().map(|&x| q(x)).collect()).collect();
        let base_rank = rational::rank(&span);
        for i in 0..abs.len() {
            if map.contains(&i) {
                continue;
            }
            let mut rows = span.clone();
            rows.push(abs.root(i).iter().map(|&x| q(x)).collect());
            if rational::rank(&rows) == base_rank {
                return Err(Error::InvalidInput(format!("Levi subset is not closed: root {i} lies in its span")));
            }
        }
        let stable = |perm: &[usize]| map.iter().all(|&i| map.contains(&perm[i]));
        if !datum.inertia_perms().iter().all(|p| stable(p)) || !stable(datum.frobenius_perm()) {
            return Err(Error::InvalidInput("Levi subset is not Galois-stable".into()));
        }
        Ok(LeviDatum { roots: map, system, is_minimal: false })
    }

    /// Absolute root indices, sorted.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// The Levi's own root system; its root `k` is absolute root `roots()[k]`.
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn is_minimal(&self) -> bool {
        self.is_minimal
    }

    pub(crate) fn set_minimal(&mut self, v: bool) {
        self.is_minimal = v;
    }

    pub fn contains(&self, other: &LeviDatum) -> bool {
        other.roots.iter().all(|r| self.roots.contains(r))
    }

    /// Absolute indices of the Levi's simple roots.
    pub fn simple_absolute(&self) -> Vec<usize> {
        self.system.simple().iter().map(|&k| self.roots[k]).collect()
    }

    /// `X_*(T^L_sc)_I -> X_*(T)_I`, with `X_*(T^L_sc)` based on the simple coroots of `L`.
    pub fn sc_coroot_map(&self, datum: &GaloisRootDatum) -> Result<AbHom<BigInt>> {
        let simple = self.simple_absolute();
        let r = simple.len();
        let n = datum.rank();
        let mut rel_cols: Vec<Vec<BigInt>> = Vec::new();
        for perm in datum.inertia_perms() {
            for (k, &s) in simple.iter().enumerate() {
                let t = simple
                    .iter()
                    .position(|&x| x == perm[s])
                    .ok_or_else(|| Error::InvalidInput("inertia does not permute the Levi base".into()))?;
                let mut col = vec![BigInt::from(0); r];
                col[t] += 1;
                col[k] -= 1;
                rel_cols.push(col);
            }
        }
        let source = FgAbGroup::from_relation_columns(r, &rel_cols);
        let (target, _) = datum.cochar_coinvariants();
        let cols: Vec<Vec<BigInt>> =
            simple.iter().map(|&s| datum.absolute().coroot(s).iter().map(|&x| BigInt::from(x)).collect()).collect();
        let f = AbHom::new(source, target, Matrix::from_columns(n, &cols))?;
        if !f.is_injective() {
            return Err(Error::DegenerateLeviLattice);
        }
        Ok(f)
    }
}
