use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::abelian::{solve_integer, unimodular_inverse, Matrix};
use crate::error::{Error, Result};
use crate::rational::{self, qvec};
use crate::root_datum::datum::GaloisRootDatum;
use crate::root_datum::system::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Computed,
    Explicit,
}

/// The reduced root system `Σ` on `X_*(T)_I` that normalizes the affine
/// root hyperplanes. Roots are inertia-invariant covectors on `X_*`,
/// coroots are representatives in `X_*` of their classes.
#[derive(Clone, Debug)]
pub struct EchelonSystem {
    system: RootSystem,
    provenance: Provenance,
    restriction: Vec<usize>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Inertia orbits on absolute root indices, each sorted, ordered by minimum.
pub fn inertia_orbits(datum: &GaloisRootDatum) -> Vec<Vec<usize>> {
    let n = datum.absolute().len();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = BTreeSet::from([start]);
        let mut frontier = vec![start];
        while let Some(a) = frontier.pop() {
            for p in datum.inertia_perms() {
                if orbit.insert(p[a]) {
                    frontier.push(p[a]);
                }
            }
        }
        for &a in &orbit {
            seen[a] = true;
        }
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

fn orbit_label(orbit: &[usize]) -> String {
    let parts: Vec<String> = orbit.iter().map(|i| i.to_string()).collect();
    format!("roots {{{}}}", parts.join(", "))
}

impl EchelonSystem {
    pub fn compute(datum: &GaloisRootDatum) -> Result<Self> {
        if let Some(ex) = datum.explicit_sigma() {
            let system = RootSystem::new(datum.rank(), ex.roots.clone(), ex.coroots.clone(), ex.simple.clone())?;
            return Self::from_explicit(datum, system);
        }
        if datum.has_trivial_inertia() {
            let system = datum.absolute().clone();
            let restriction = (0..system.len()).collect();
            return Ok(EchelonSystem { system, provenance: Provenance::Computed, restriction });
        }
        let abs = datum.absolute();
        let orbits = inertia_orbits(datum);
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut coroots = Vec::new();
        for orbit in &orbits {
            let mut sum = vec![0i64; datum.rank()];
            for &a in orbit {
                for (s, x) in sum.iter_mut().zip(abs.root(a)) {
                    *s += x;
                }
            }
            let rep = abs.coroot(orbit[0]).to_vec();
            if dot(&sum, &rep) != 2 {
                return Err(Error::EchelonnageRequired { orbit: orbit_label(orbit) });
            }
            if roots.iter().any(|r| rational::proportional(&qvec(r), &qvec(&sum)) && dot(r, &sum) > 0) {
                return Err(Error::EchelonnageRequired { orbit: orbit_label(orbit) });
            }
            roots.push(sum);
            coroots.push(rep);
        }
        let restriction: Vec<usize> = (0..abs.len())
            .map(|a| orbits.iter().position(|o| o.contains(&a)).expect("orbits cover roots"))
            .collect();
        let mut simple: Vec<usize> = abs.simple().iter().map(|&s| restriction[s]).collect();
        simple.sort_unstable();
        simple.dedup();
        let system = RootSystem::new(datum.rank(), roots, coroots, simple)?;
        Ok(EchelonSystem { system, provenance: Provenance::Computed, restriction })
    }

    fn from_explicit(datum: &GaloisRootDatum, system: RootSystem) -> Result<Self> {
        for (k, g) in datum.inertia().iter().enumerate() {
            for i in 0..system.len() {
                if g.vec_mul(system.root(i)) != system.root(i) {
                    return Err(Error::InvalidInput(format!(
                        "echelonnage root {i} is not invariant under inertia_gens[{k}]"
                    )));
                }
            }
        }
        let f_inv = unimodular_inverse(datum.frobenius()).expect("frobenius is unimodular");
        for i in 0..system.len() {
            let img = f_inv.vec_mul(system.root(i));
            match system.index_of(&img) {
                Some(j) if !system.simple().contains(&i) || system.simple().contains(&j) => {}
                _ => return Err(Error::UnpinnedAction { generator: "frobenius (on echelonnage)".into() }),
            }
        }
        let abs = datum.absolute();
        let orbits = inertia_orbits(datum);
        let mut restriction = vec![0; abs.len()];
        for orbit in &orbits {
            let mut sum = vec![0i64; datum.rank()];
            for &a in orbit {
                for (s, x) in sum.iter_mut().zip(abs.root(a)) {
                    *s += x;
                }
            }
            let j = (0..system.len())
                .find(|&j| {
                    rational::proportional(&qvec(system.root(j)), &qvec(&sum))
                        && dot(system.root(j), &sum) > 0
                })
                .ok_or_else(|| {
                    Error::InvalidInput(format!("no echelonnage root is proportional to the orbit {}", orbit_label(orbit)))
                })?;
            for &a in orbit {
                restriction[a] = j;
            }
        }
        let ech = EchelonSystem { system, provenance: Provenance::Explicit, restriction };
        ech.check_coroot_lattice(datum)?;
        Ok(ech)
    }

    /// The coroots of `Σ` and of `Φ` span the same lattice in `X_*(T)_I` modulo torsion.
    fn check_coroot_lattice(&self, datum: &GaloisRootDatum) -> Result<()> {
        let (xi, _) = datum.cochar_coinvariants();
        let free = |v: &[i64]| -> Vec<BigInt> {
            let c = xi.canon(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
            xi.free_part(&c).to_vec()
        };
        let f = xi.free_rank();
        let a: Vec<Vec<BigInt>> = self.system.coroots().iter().map(|c| free(c)).collect();
        let b: Vec<Vec<BigInt>> = datum.absolute().coroots().iter().map(|c| free(c)).collect();
        let contained = |gens: &[Vec<BigInt>], vs: &[Vec<BigInt>]| {
            let m = Matrix::from_columns(f, gens);
            vs.iter().all(|v| solve_integer(&m, v).is_some())
        };
        if contained(&a, &b) && contained(&b, &a) {
            Ok(())
        } else {
            Err(Error::InvalidInput("echelonnage coroots do not span the image of the absolute coroot lattice".into()))
        }
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `Σ` root index whose direction is the restriction of absolute root `a`.
    pub fn restrict(&self, a: usize) -> usize {
        self.restriction[a]
    }

    /// `Σ` roots proportional to restrictions of the given absolute roots.
    pub fn restrict_subset(&self, absolute: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = absolute.iter().map(|&a| self.restriction[a]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}
