use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;

use crate::abelian::{unimodular_inverse, AbHom, FgAbGroup, Matrix};
use crate::error::{Error, Result};
use crate::root_datum::echelon::EchelonSystem;
use crate::root_datum::levi::LeviDatum;
use crate::root_datum::system::RootSystem;

const MAX_INERTIA_ORDER: usize = 4096;

/// Inner-twist data: the minimal Levi `M` (as a list of absolute root
/// indices) and `w_sigma`, a word of reflections in roots of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    pub levi: Vec<usize>,
    pub w_sigma: Vec<usize>,
}

impl TwistSpec {
    pub fn identity() -> Self {
        TwistSpec { levi: vec![], w_sigma: vec![] }
    }
}

/// Explicit échelonnage: covectors and coroot representatives on `X_*`.
#[derive(Clone, Debug)]
pub struct ExplicitSigma {
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    pub simple: Vec<usize>,
}

/// A based root datum with a pinned action of inertia and Frobenius on
/// `X_* = Z^n`. Roots are covectors, coroots vectors.
#[derive(Clone, Debug)]
pub struct GaloisRootDatum {
    name: String,
    absolute: RootSystem,
    inertia: Vec<Matrix<i64>>,
    frobenius: Matrix<i64>,
    inertia_perms: Vec<Vec<usize>>,
    frobenius_perm: Vec<usize>,
    inertia_group: Vec<Matrix<i64>>,
    explicit_sigma: Option<ExplicitSigma>,
}

/// Permutation of the root list induced by `g` on `X_*` (and dually on `X^*`).
pub(crate) fn root_permutation(system: &RootSystem, g: &Matrix<i64>, g_inv: &Matrix<i64>) -> Option<Vec<usize>> {
    (0..system.len())
        .map(|i| {
            let c = g.mul_vec(system.coroot(i));
            let j = system.coroots().iter().position(|x| *x == c)?;
            // root α ∘ g^{-1}
            let r = g_inv.vec_mul(system.root(i));
            (r == system.root(j)).then_some(j)
        })
        .collect()
}

fn check_pinned(system: &RootSystem, g: &Matrix<i64>, label: String) -> Result<Vec<usize>> {
    if g.rows() != system.ambient_rank() || g.cols() != system.ambient_rank() {
        return Err(Error::InvalidInput(format!("{label} has the wrong shape")));
    }
    let inv = unimodular_inverse(g).ok_or_else(|| Error::InvalidInput(format!("{label} is not unimodular")))?;
    let perm = root_permutation(system, g, &inv).ok_or_else(|| Error::UnpinnedAction { generator: label.clone() })?;
    let simple: HashSet<usize> = system.simple().iter().copied().collect();
    if system.simple().iter().any(|s| !simple.contains(&perm[*s])) {
        return Err(Error::UnpinnedAction { generator: label });
    }
    Ok(perm)
}

fn matrix_group_closure(gens: &[Matrix<i64>], n: usize) -> Result<Vec<Matrix<i64>>> {
    let id = Matrix::identity(n);
    let mut seen: HashSet<Matrix<i64>> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let p = g.mul(&m);
            if seen.insert(p.clone()) {
                if seen.len() > MAX_INERTIA_ORDER {
                    return Err(Error::InvalidInput("inertia generators do not generate a small finite group".into()));
                }
                out.push(p.clone());
                queue.push_back(p);
            }
        }
    }
    Ok(out)
}

/// Matrix of the reflection `x -> x - <a, x> a^vee` on `X_*`.
pub fn reflection_matrix(system: &RootSystem, root: usize) -> Matrix<i64> {
    let n = system.ambient_rank();
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] -= system.coroot(root)[i] * system.root(root)[j];
        }
    }
    m
}

impl GaloisRootDatum {
    pub fn new(
        name: impl Into<String>,
        absolute: RootSystem,
        inertia: Vec<Matrix<i64>>,
        frobenius: Option<Matrix<i64>>,
        explicit_sigma: Option<ExplicitSigma>,
    ) -> Result<Self> {
        let n = absolute.ambient_rank();
        let frobenius = frobenius.unwrap_or_else(|| Matrix::identity(n));
        let inertia_perms = inertia
            .iter()
            .enumerate()
            .map(|(k, g)| check_pinned(&absolute, g, format!("inertia_gens[{k}]")))
            .collect::<Result<Vec<_>>>()?;
        let frobenius_perm = check_pinned(&absolute, &frobenius, "frobenius".into())?;
        let inertia_group = matrix_group_closure(&inertia, n)?;
        let group_set: HashSet<&Matrix<i64>> = inertia_group.iter().collect();
        let f_inv = unimodular_inverse(&frobenius).expect("checked unimodular");
        for (k, g) in inertia.iter().enumerate() {
            if !group_set.contains(&frobenius.mul(g).mul(&f_inv)) {
                return Err(Error::InvalidInput(format!("frobenius does not normalize the inertia group (generator {k})")));
            }
        }
        let datum = GaloisRootDatum {
            name: name.into(),
            absolute,
            inertia,
            frobenius,
            inertia_perms,
            frobenius_perm,
            inertia_group,
            explicit_sigma,
        };
        // surface échelonnage problems at load time
        datum.echelonnage()?;
        Ok(datum)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rank of `X_*`.
    pub fn rank(&self) -> usize {
        self.absolute.ambient_rank()
    }

    pub fn absolute(&self) -> &RootSystem {
        &self.absolute
    }

    pub fn inertia(&self) -> &[Matrix<i64>] {
        &self.inertia
    }

    pub fn inertia_group(&self) -> &[Matrix<i64>] {
        &self.inertia_group
    }

    pub fn frobenius(&self) -> &Matrix<i64> {
        &self.frobenius
    }

    pub fn inertia_perms(&self) -> &[Vec<usize>] {
        &self.inertia_perms
    }

    pub fn frobenius_perm(&self) -> &[usize] {
        &self.frobenius_perm
    }

    pub fn explicit_sigma(&self) -> Option<&ExplicitSigma> {
        self.explicit_sigma.as_ref()
    }

    pub fn has_trivial_inertia(&self) -> bool {
        self.inertia_group.len() == 1
    }

    pub fn is_split(&self) -> bool {
        self.has_trivial_inertia() && self.frobenius == Matrix::identity(self.rank())
    }

    /// Product of reflections in the given absolute roots.
    pub fn word_matrix(&self, word: &[usize]) -> Result<Matrix<i64>> {
        let mut m = Matrix::identity(self.rank());
        for &r in word {
            if r >= self.absolute.len() {
                return Err(Error::InvalidInput(format!("root index {r} out of range")));
            }
            m = m.mul(&reflection_matrix(&self.absolute, r));
        }
        Ok(m)
    }

    /// The lattice part of Frobenius: `w_sigma * F` for a twisted form, `F` otherwise.
    pub fn lattice_frobenius(&self, twist: Option<&TwistSpec>) -> Result<Matrix<i64>> {
        match twist {
            Some(t) => Ok(self.word_matrix(&t.w_sigma)?.mul(&self.frobenius)),
            None => Ok(self.frobenius.clone()),
        }
    }

    pub fn inertia_big(&self) -> Vec<Matrix<BigInt>> {
        self.inertia.iter().map(|g| g.cast().expect("i64 fits BigInt")).collect()
    }

    /// `X_*(T)_I` with its projection from `X_*(T)`.
    pub fn cochar_coinvariants(&self) -> (FgAbGroup<BigInt>, AbHom<BigInt>) {
        FgAbGroup::free(self.rank())
            .coinvariants(&self.inertia_big())
            .expect("inertia acts on a free lattice")
    }

    /// `X_*(A)`: vectors fixed by inertia and the (possibly twisted) Frobenius.
    pub fn split_rank_torus(&self, twist: Option<&TwistSpec>) -> Result<FgAbGroup<BigInt>> {
        let mut actions = self.inertia_big();
        actions.push(self.lattice_frobenius(twist)?.cast().expect("i64 fits BigInt"));
        Ok(FgAbGroup::free(self.rank()).invariants(&actions)?.0)
    }

    /// Basis of `X_*(A)` as vectors in `X_*`.
    pub fn split_torus_basis(&self, twist: Option<&TwistSpec>) -> Result<Vec<Vec<i64>>> {
        let mut actions = self.inertia_big();
        actions.push(self.lattice_frobenius(twist)?.cast().expect("i64 fits BigInt"));
        let (inv, incl) = FgAbGroup::free(self.rank()).invariants(&actions)?;
        Ok((0..inv.coord_len())
            .map(|k| {
                let mut e = inv.zero();
                e[k] = BigInt::from(1);
                incl.matrix()
                    .mul_vec(&inv.lift(&e))
                    .iter()
                    .map(|v| i64::try_from(v).expect("small basis vector"))
                    .collect()
            })
            .collect())
    }

    /// The Levi of roots vanishing on `X_*(A)`.
    pub fn minimal_levi(&self, twist: Option<&TwistSpec>) -> Result<LeviDatum> {
        let basis = self.split_torus_basis(twist)?;
        let roots: Vec<usize> = (0..self.absolute.len())
            .filter(|&i| basis.iter().all(|v| self.absolute.pairing(i, v) == 0))
            .collect();
        let mut levi = LeviDatum::new(self, &roots)?;
        levi.set_minimal(true);
        Ok(levi)
    }

    pub fn echelonnage(&self) -> Result<EchelonSystem> {
        EchelonSystem::compute(self)
    }

    pub fn levi(&self, roots: &[usize]) -> Result<LeviDatum> {
        LeviDatum::new(self, roots)
    }

    /// The Levi containing only the torus.
    pub fn torus_levi(&self) -> LeviDatum {
        LeviDatum::new(self, &[]).expect("empty Levi is valid")
    }

    /// The Levi with all roots.
    pub fn full_levi(&self) -> LeviDatum {
        let all: Vec<usize> = (0..self.absolute.len()).collect();
        LeviDatum::new(self, &all).expect("full root set is a Levi")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> GaloisRootDatum {
        let sys = RootSystem::new(1, vec![vec![2], vec![-2]], vec![vec![1], vec![-1]], vec![0]).unwrap();
        GaloisRootDatum::new("sl2", sys, vec![], None, None).unwrap()
    }

    #[test]
    fn split_datum_basics() {
        let d = sl2();
        assert!(d.is_split());
        let (g, _) = d.cochar_coinvariants();
        assert_eq!(g.to_string(), "Z");
        assert_eq!(d.split_rank_torus(None).unwrap().free_rank(), 1);
        assert!(d.minimal_levi(None).unwrap().roots().is_empty());
    }

    #[test]
    fn unpinned_frobenius_rejected() {
        let sys = RootSystem::new(1, vec![vec![2], vec![-2]], vec![vec![1], vec![-1]], vec![0]).unwrap();
        let f = Matrix::from_i64_rows(&[vec![-1]], 1);
        let err = GaloisRootDatum::new("bad", sys, vec![], Some(f), None).unwrap_err();
        assert!(matches!(err, Error::UnpinnedAction { ref generator } if generator == "frobenius"));
    }

    #[test]
    fn torus_with_inertia() {
        let inertia = Matrix::from_i64_rows(&[vec![-1]], 1);
        let d = GaloisRootDatum::new("t", RootSystem::empty(1), vec![inertia], None, None).unwrap();
        let (g, _) = d.cochar_coinvariants();
        assert_eq!(g.to_string(), "Z/2");
        assert!(d.split_rank_torus(None).unwrap().is_trivial());
    }
}
