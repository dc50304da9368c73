use std::fmt;

use crate::abelian::matrix::Matrix;
use crate::abelian::snf::{integer_kernel, snf, solve_integer, SnfResult};
use crate::error::{Error, Result};
use crate::scalar::IntScalar;

/// A finitely generated abelian group `Z^n / span(relations)`.
///
/// Elements are carried as canonical coordinate vectors in the Smith basis:
/// the torsion coordinates come first, each reduced into `[0, d_i)`, followed
/// by the free coordinates. Two ambient vectors represent the same element
/// iff their canonical coordinates agree.
#[derive(Clone)]
pub struct FgAbGroup<Z> {
    ambient_rank: usize,
    relations: Matrix<Z>,
    snf: SnfResult<Z>,
    torsion: Vec<(usize, Z)>,
    free: Vec<usize>,
}

impl<Z: IntScalar> FgAbGroup<Z> {
    /// `Z^n / span(columns of relations)`.
    pub fn quotient(ambient_rank: usize, relations: Matrix<Z>) -> Self {
        assert_eq!(relations.rows(), ambient_rank, "relations must have ambient_rank rows");
        let snf = snf(&relations);
        let torsion = snf
            .d
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_one())
            .map(|(i, d)| (i, d.clone()))
            .collect();
        let free = (snf.rank()..ambient_rank).collect();
        FgAbGroup { ambient_rank, relations, snf, torsion, free }
    }

    pub fn free(n: usize) -> Self {
        Self::quotient(n, Matrix::zeros(n, 0))
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn from_relation_columns(ambient_rank: usize, cols: &[Vec<Z>]) -> Self {
        Self::quotient(ambient_rank, Matrix::from_columns(ambient_rank, cols))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn relations(&self) -> &Matrix<Z> {
        &self.relations
    }

    pub fn free_rank(&self) -> usize {
        self.free.len()
    }

    /// Torsion invariant factors, each `> 1`, in divisibility order.
    pub fn torsion_factors(&self) -> Vec<Z> {
        self.torsion.iter().map(|(_, d)| d.clone()).collect()
    }

    /// Number of canonical coordinates.
    pub fn coord_len(&self) -> usize {
        self.torsion.len() + self.free.len()
    }

    pub fn torsion_len(&self) -> usize {
        self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.coord_len() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<Z> {
        if !self.is_finite() {
            return None;
        }
        Some(self.torsion.iter().fold(Z::one(), |acc, (_, d)| acc * d.clone()))
    }

    pub fn torsion_order(&self) -> Z {
        self.torsion.iter().fold(Z::one(), |acc, (_, d)| acc * d.clone())
    }

    /// Isomorphism test via (free rank, invariant factors).
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.free_rank() == other.free_rank() && self.torsion_factors() == other.torsion_factors()
    }

    pub fn zero(&self) -> Vec<Z> {
        vec![Z::zero(); self.coord_len()]
    }

    /// Reduces the torsion part of a coordinate vector.
    pub fn reduce(&self, c: &mut [Z]) {
        for (k, (_, d)) in self.torsion.iter().enumerate() {
            c[k] = c[k].mod_floor(d);
        }
    }

    /// Canonical coordinates of an ambient vector.
    pub fn canon(&self, x: &[Z]) -> Vec<Z> {
        assert_eq!(x.len(), self.ambient_rank, "ambient vector has wrong length");
        let y = self.snf.left.mul_vec(x);
        let mut c: Vec<Z> = self
            .torsion
            .iter()
            .map(|(i, d)| y[*i].mod_floor(d))
            .chain(self.free.iter().map(|&i| y[i].clone()))
            .collect();
        self.reduce(&mut c);
        c
    }

    /// An ambient representative of canonical coordinates.
    pub fn lift(&self, c: &[Z]) -> Vec<Z> {
        assert_eq!(c.len(), self.coord_len(), "canonical vector has wrong length");
        let mut y = vec![Z::zero(); self.ambient_rank];
        for (k, (i, _)) in self.torsion.iter().enumerate() {
            y[*i] = c[k].clone();
        }
        for (k, &i) in self.free.iter().enumerate() {
            y[i] = c[self.torsion.len() + k].clone();
        }
        self.snf.left_inv.mul_vec(&y)
    }

    /// Linear part of [`FgAbGroup::canon`] (before torsion reduction), coords x ambient.
    pub fn canon_matrix(&self) -> Matrix<Z> {
        let idx: Vec<usize> = self.torsion.iter().map(|(i, _)| *i).chain(self.free.iter().copied()).collect();
        self.snf.left.select_rows(&idx)
    }

    /// Matrix of [`FgAbGroup::lift`], ambient x coords.
    pub fn lift_matrix(&self) -> Matrix<Z> {
        let idx: Vec<usize> = self.torsion.iter().map(|(i, _)| *i).chain(self.free.iter().copied()).collect();
        self.snf.left_inv.select_columns(&idx)
    }

    pub fn is_zero_ambient(&self, x: &[Z]) -> bool {
        self.canon(x).iter().all(|v| v.is_zero())
    }

    pub fn add(&self, a: &[Z], b: &[Z]) -> Vec<Z> {
        let mut c: Vec<Z> = a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect();
        self.reduce(&mut c);
        c
    }

    pub fn neg(&self, a: &[Z]) -> Vec<Z> {
        let mut c: Vec<Z> = a.iter().map(|x| -x.clone()).collect();
        self.reduce(&mut c);
        c
    }

    /// True iff a canonical element has finite order.
    pub fn is_torsion_element(&self, c: &[Z]) -> bool {
        c[self.torsion.len()..].iter().all(|v| v.is_zero())
    }

    /// Free coordinates of a canonical element.
    pub fn free_part<'a>(&self, c: &'a [Z]) -> &'a [Z] {
        &c[self.torsion.len()..]
    }

    /// Ambient lifts of the canonical generators.
    pub fn generators(&self) -> Vec<Vec<Z>> {
        (0..self.coord_len())
            .map(|k| {
                let mut e = self.zero();
                e[k] = Z::one();
                self.lift(&e)
            })
            .collect()
    }

    /// Matrix on canonical coordinates induced by an ambient endomorphism
    /// that preserves the relation lattice. Results must be reduced with
    /// [`FgAbGroup::reduce`] after multiplication.
    pub fn induced_matrix(&self, m: &Matrix<Z>) -> Matrix<Z> {
        let cols: Vec<Vec<Z>> = self.generators().iter().map(|g| self.canon(&m.mul_vec(g))).collect();
        Matrix::from_columns(self.coord_len(), &cols)
    }

    /// Checks that `m` maps the relation lattice into itself.
    pub fn preserved_by(&self, m: &Matrix<Z>) -> bool {
        m.rows() == self.ambient_rank
            && m.cols() == self.ambient_rank
            && self.relations.columns().iter().all(|r| self.is_zero_ambient(&m.mul_vec(r)))
    }

    /// `Z/d_1 + ... + Z/d_t`.
    pub fn torsion_part(&self) -> Self {
        let t = self.torsion.len();
        let mut rel = Matrix::zeros(t, t);
        for (k, (_, d)) in self.torsion.iter().enumerate() {
            rel[(k, k)] = d.clone();
        }
        Self::quotient(t, rel)
    }

    /// `G / torsion`, free of rank `free_rank`.
    pub fn free_quotient(&self) -> Self {
        Self::free(self.free_rank())
    }

    pub fn try_cast<W: IntScalar>(&self) -> Option<FgAbGroup<W>> {
        let relations = self.relations.cast::<W>()?;
        Some(FgAbGroup::quotient(self.ambient_rank, relations))
    }

    /// Direct sum of `k` copies.
    pub fn power(&self, k: usize) -> Self {
        let n = self.ambient_rank;
        let m = self.relations.cols();
        let mut rel = Matrix::zeros(n * k, m * k);
        for b in 0..k {
            for i in 0..n {
                for j in 0..m {
                    rel[(b * n + i, b * m + j)] = self.relations[(i, j)].clone();
                }
            }
        }
        Self::quotient(n * k, rel)
    }

    fn check_actions(&self, actions: &[Matrix<Z>]) -> Result<()> {
        for (k, g) in actions.iter().enumerate() {
            if !self.preserved_by(g) {
                return Err(Error::InvalidInput(format!(
                    "action matrix {k} does not preserve the relation lattice"
                )));
            }
        }
        Ok(())
    }

    /// `G / span{(g - 1) x}` together with the projection.
    pub fn coinvariants(&self, actions: &[Matrix<Z>]) -> Result<(Self, AbHom<Z>)> {
        self.check_actions(actions)?;
        let n = self.ambient_rank;
        let mut rel = self.relations.clone();
        for g in actions {
            rel = rel.hstack(&g.minus_identity());
        }
        let q = Self::quotient(n, rel);
        let proj = AbHom::new(self.clone(), q.clone(), Matrix::identity(n))?;
        Ok((q, proj))
    }

    /// `{x : g x = x for all g}` with its inclusion.
    pub fn invariants(&self, actions: &[Matrix<Z>]) -> Result<(Self, AbHom<Z>)> {
        self.check_actions(actions)?;
        let n = self.ambient_rank;
        let target = self.power(actions.len());
        let mut m = Matrix::zeros(0, n);
        for g in actions {
            m = m.vstack(&g.minus_identity());
        }
        let f = AbHom::new(self.clone(), target, m)?;
        Ok(f.kernel())
    }
}

impl<Z: IntScalar> fmt::Display for FgAbGroup<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|(_, d)| format!("Z/{d}")).collect();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl<Z: IntScalar> fmt::Debug for FgAbGroup<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self}; ambient {})", self.ambient_rank)
    }
}

/// Basis (as columns) of the column span of `p`.
pub fn column_span_basis<Z: IntScalar>(p: &Matrix<Z>) -> Matrix<Z> {
    let s = snf(p);
    let cols: Vec<Vec<Z>> = s
        .d
        .iter()
        .enumerate()
        .map(|(i, d)| s.left_inv.column(i).into_iter().map(|v| v * d.clone()).collect())
        .collect();
    Matrix::from_columns(p.rows(), &cols)
}

/// Homomorphism between presented groups, given on ambient generators.
#[derive(Clone)]
pub struct AbHom<Z> {
    source: FgAbGroup<Z>,
    target: FgAbGroup<Z>,
    matrix: Matrix<Z>,
}

impl<Z: IntScalar> fmt::Debug for AbHom<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbHom({} -> {}; {:?})", self.source, self.target, self.matrix)
    }
}

impl<Z: IntScalar> AbHom<Z> {
    /// Fails unless the matrix sends source relations into target relations.
    pub fn new(source: FgAbGroup<Z>, target: FgAbGroup<Z>, matrix: Matrix<Z>) -> Result<Self> {
        if matrix.rows() != target.ambient_rank() || matrix.cols() != source.ambient_rank() {
            return Err(Error::InvalidInput("homomorphism matrix has the wrong shape".into()));
        }
        for r in source.relations().columns() {
            if !target.is_zero_ambient(&matrix.mul_vec(&r)) {
                return Err(Error::InvalidInput("homomorphism is not well defined on relations".into()));
            }
        }
        Ok(AbHom { source, target, matrix })
    }

    pub fn source(&self) -> &FgAbGroup<Z> {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup<Z> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<Z> {
        &self.matrix
    }

    /// Image of a canonical source element, in canonical target coordinates.
    pub fn apply(&self, c: &[Z]) -> Vec<Z> {
        self.target.canon(&self.matrix.mul_vec(&self.source.lift(c)))
    }

    pub fn apply_ambient(&self, x: &[Z]) -> Vec<Z> {
        self.target.canon(&self.matrix.mul_vec(x))
    }

    pub fn compose(&self, after: &AbHom<Z>) -> Result<AbHom<Z>> {
        if after.source.ambient_rank() != self.target.ambient_rank() {
            return Err(Error::InvalidInput("composition of incompatible homomorphisms".into()));
        }
        AbHom::new(self.source.clone(), after.target.clone(), after.matrix.mul(&self.matrix))
    }

    /// Kernel, with its inclusion into the source.
    pub fn kernel(&self) -> (FgAbGroup<Z>, AbHom<Z>) {
        let a = self.source.ambient_rank();
        let joint = self.matrix.hstack(self.target.relations());
        let ker = integer_kernel(&joint);
        let xs = ker.select_rows(&(0..a).collect::<Vec<_>>());
        let basis = column_span_basis(&xs);
        let k = basis.cols();
        let rel_cols: Vec<Vec<Z>> = self
            .source
            .relations()
            .columns()
            .iter()
            .map(|r| solve_integer(&basis, r).expect("source relations lie in the kernel lattice"))
            .collect();
        let group = FgAbGroup::quotient(k, Matrix::from_columns(k, &rel_cols));
        let incl = AbHom { source: group.clone(), target: self.source.clone(), matrix: basis };
        (group, incl)
    }

    /// Cokernel, with the projection from the target.
    pub fn cokernel(&self) -> (FgAbGroup<Z>, AbHom<Z>) {
        let b = self.target.ambient_rank();
        let q = FgAbGroup::quotient(b, self.target.relations().hstack(&self.matrix));
        let proj = AbHom { source: self.target.clone(), target: q.clone(), matrix: Matrix::identity(b) };
        (q, proj)
    }

    /// Image subgroup of the target.
    pub fn image(&self) -> FgAbGroup<Z> {
        let a = self.source.ambient_rank();
        let joint = self.matrix.hstack(self.target.relations());
        let ker = integer_kernel(&joint);
        let xs = ker.select_rows(&(0..a).collect::<Vec<_>>());
        FgAbGroup::quotient(a, column_span_basis(&xs))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_trivial()
    }

    /// Some source element mapping to `y`, if `y` is in the image.
    pub fn preimage(&self, y: &[Z]) -> Option<Vec<Z>> {
        let a = self.source.ambient_rank();
        let joint = self.matrix.hstack(self.target.relations());
        let z = solve_integer(&joint, &self.target.lift(y))?;
        Some(self.source.canon(&z[..a]))
    }
}
