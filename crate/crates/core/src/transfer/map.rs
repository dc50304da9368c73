use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abelian::Matrix;
use crate::affine_weyl::lattice_box;
use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::satake::{OrbitSumPoly, PolyRing, SatakeGroup};
use crate::transfer::twist::InnerTwist;

type Coords = BTreeMap<Vec<i64>, BigRational>;

/// `t: C[Λ_{T*}]^{W(G*, A*)} → C[Λ_M]^{W(G, A)}`, induced by the lattice map
/// `Λ_{T*} → Λ_M` that both groups see through `X_*(T)`.
pub struct TransferMap<'a> {
    twist: &'a InnerTwist,
    /// Source canonical coordinates to target canonical coordinates.
    lattice: Matrix<i64>,
    source_ring: PolyRing,
    target_ring: PolyRing,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurjectivityReport {
    pub target_bound: i64,
    pub source_bound: i64,
    pub target_orbits: usize,
    pub source_orbits: usize,
    pub surjective: bool,
    pub missing: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomomorphismReport {
    pub bound: i64,
    pub samples: usize,
    pub seed: u64,
    pub unit_preserved: bool,
    pub failures: usize,
    pub first_failure: Option<(Vec<i64>, Vec<i64>)>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.unit_preserved && self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareReport {
    pub levi: Vec<usize>,
    pub bound: Option<i64>,
    pub checked: usize,
    pub commutes: bool,
    pub counterexample: Option<Vec<i64>>,
}

/// `W(G, A) → W(G*, A*) / W(M*, A*)`: every coset `wW_M` must contain an
/// F-fixed element, and distinct cosets stay distinct.
#[derive(Clone, Debug, Serialize)]
pub struct WeylMapReport {
    pub relative_order: usize,
    pub well_defined: bool,
    pub injective: bool,
}

impl WeylMapReport {
    pub fn passed(&self) -> bool {
        self.well_defined && self.injective
    }
}

fn orbit_reps(ring: &PolyRing, region: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let reps: BTreeSet<Vec<i64>> = region.iter().map(|l| ring.representative(l)).collect();
    reps.into_iter().collect()
}

impl<'a> TransferMap<'a> {
    pub fn new(twist: &'a InnerTwist) -> Result<Self> {
        let (source, target) = (twist.source().lambda(), twist.target().lambda());
        let mut cols = Vec::with_capacity(source.coord_len());
        for g in source.group().generators() {
            let x = source.inclusion().matrix().mul_vec(&g);
            let c: Vec<i64> =
                target.quotient().canon(&x).iter().map(|v| i64::try_from(v).expect("small coordinates")).collect();
            let image = target.from_quotient(&c).ok_or_else(|| {
                Error::EquivarianceViolated(format!("image of {g:?} is not fixed by the twisted frobenius"))
            })?;
            cols.push(image);
        }
        let lattice = Matrix::from_columns(target.coord_len(), &cols);
        Ok(TransferMap {
            twist,
            lattice,
            source_ring: twist.source().poly_ring(),
            target_ring: twist.target().poly_ring(),
        })
    }

    pub fn lattice_matrix(&self) -> &Matrix<i64> {
        &self.lattice
    }

    pub fn source_ring(&self) -> &PolyRing {
        &self.source_ring
    }

    pub fn target_ring(&self) -> &PolyRing {
        &self.target_ring
    }

    fn source(&self) -> &SatakeGroup {
        self.twist.source()
    }

    fn target(&self) -> &SatakeGroup {
        self.twist.target()
    }

    /// `Λ_{T*} → Λ_M`.
    pub fn apply_lattice(&self, lambda: &[i64]) -> Vec<i64> {
        self.target().lambda().apply(&self.lattice, lambda)
    }

    /// Applies the lattice map to every exponent.
    fn push_forward(&self, p: &OrbitSumPoly<BigRational>) -> OrbitSumPoly<BigRational> {
        p.terms()
            .iter()
            .fold(OrbitSumPoly::zero(), |acc, (e, c)| acc.add(&OrbitSumPoly::monomial(self.apply_lattice(e), c.clone())))
    }

    /// The image of an invariant polynomial; fails if it is not invariant
    /// under `W(G, A)`.
    pub fn apply(&self, p: &OrbitSumPoly<BigRational>) -> Result<OrbitSumPoly<BigRational>> {
        let image = self.push_forward(p);
        self.target_ring.to_orbit_basis(&image)?;
        Ok(image)
    }

    /// `t(m_λ)` in the orbit-sum basis of the target.
    pub fn apply_orbit_sum(&self, lambda: &[i64]) -> Result<Coords> {
        let image = self.push_forward(&self.source_ring.orbit_sum(lambda));
        self.target_ring.to_orbit_basis(&image)
    }

    /// Every target orbit sum of norm at most `target_bound` lies in the span
    /// of images of source orbit sums of norm at most `source_bound`.
    pub fn check_surjective(&self, target_bound: i64, source_bound: i64) -> Result<SurjectivityReport> {
        let (sl, tl) = (self.source().lambda(), self.target().lambda());
        let sources = orbit_reps(&self.source_ring, lattice_box(sl.torsion(), sl.coord_len(), source_bound));
        let targets = orbit_reps(&self.target_ring, lattice_box(tl.torsion(), tl.coord_len(), target_bound));
        let images = sources.iter().map(|l| self.apply_orbit_sum(l)).collect::<Result<Vec<_>>>()?;

        let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for key in images.iter().flat_map(|m| m.keys()).chain(&targets) {
            let next = index.len();
            index.entry(key.clone()).or_insert(next);
        }
        let dense = |m: &Coords| {
            let mut row = vec![Q::zero(); index.len()];
            for (k, c) in m {
                row[index[k]] = c.clone();
            }
            row
        };
        let mut rows: Vec<Vec<Q>> = images.iter().map(dense).collect();
        let pivots = rational::rref(&mut rows);
        let missing = targets.iter().find(|mu| {
            let mut v = vec![Q::zero(); index.len()];
            v[index[*mu]] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                if !v[p].is_zero() {
                    let k = v[p].clone();
                    for (x, y) in v.iter_mut().zip(&rows[r]) {
                        *x -= &k * y;
                    }
                }
            }
            v.iter().any(|x| !x.is_zero())
        });
        Ok(SurjectivityReport {
            target_bound,
            source_bound,
            target_orbits: targets.len(),
            source_orbits: sources.len(),
            surjective: missing.is_none(),
            missing: missing.cloned(),
        })
    }

    /// `t(1) = 1` and `t(m_λ m_μ) = t(m_λ) t(m_μ)` on random pairs from the
    /// box of the given norm.
    pub fn check_homomorphism(&self, bound: i64, samples: usize, seed: u64) -> Result<HomomorphismReport> {
        let sl = self.source().lambda();
        let region = lattice_box(sl.torsion(), sl.coord_len(), bound);
        let one: OrbitSumPoly<BigRational> = self.source_ring.one();
        let unit_preserved = self.apply(&one)? == self.target_ring.one();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = 0;
        let mut first_failure = None;
        for _ in 0..samples {
            let a = &region[rng.gen_range(0..region.len())];
            let b = &region[rng.gen_range(0..region.len())];
            let (ma, mb) = (self.source_ring.orbit_sum(a), self.source_ring.orbit_sum(b));
            let lhs = self.apply(&self.source_ring.mul(&ma, &mb))?;
            let rhs = self.target_ring.mul(&self.apply(&ma)?, &self.apply(&mb)?);
            if lhs != rhs {
                failures += 1;
                first_failure.get_or_insert((a.clone(), b.clone()));
            }
        }
        Ok(HomomorphismReport { bound, samples, seed, unit_preserved, failures, first_failure })
    }

    /// `c_H ∘ t = t_H ∘ c*_H` on source orbit sums of norm at most `bound`,
    /// where `c` re-expresses an invariant polynomial in the orbit sums of
    /// the smaller relative Weyl group. `h` defaults to `M`.
    pub fn check_constant_term_square(&self, h: Option<&[usize]>, bound: i64) -> Result<SquareReport> {
        let sl = self.source().lambda();
        let reps = orbit_reps(&self.source_ring, lattice_box(sl.torsion(), sl.coord_len(), bound));
        let mut report = self.check_constant_term_square_on(h, &reps)?;
        report.bound = Some(bound);
        Ok(report)
    }

    /// The same square, on the orbit sums `m_λ` for the given `λ`.
    pub fn check_constant_term_square_on(&self, h: Option<&[usize]>, lambdas: &[Vec<i64>]) -> Result<SquareReport> {
        let h: Vec<usize> = h.map_or_else(|| self.target().levi().roots().to_vec(), <[usize]>::to_vec);
        let target_h = self.target().poly_ring_in(&h)?;
        let source_h = self.source().poly_ring_in(&h)?;
        let mut counterexample = None;
        for lambda in lambdas {
            let m = self.source_ring.orbit_sum::<BigRational>(lambda);
            let left = target_h.to_orbit_basis(&self.push_forward(&m))?;
            let mut right = OrbitSumPoly::zero();
            for (nu, c) in source_h.to_orbit_basis(&m)? {
                let image = self.push_forward(&source_h.orbit_sum(&nu));
                target_h.to_orbit_basis(&image)?;
                right = right.add(&image.scale(&c));
            }
            if left != target_h.to_orbit_basis(&right)? {
                counterexample = Some(lambda.clone());
                break;
            }
        }
        Ok(SquareReport {
            levi: h,
            bound: None,
            checked: lambdas.len(),
            commutes: counterexample.is_none(),
            counterexample,
        })
    }

    pub fn check_weyl_map(&self) -> Result<WeylMapReport> {
        let target = self.target();
        let weyl = target.iwahori_weyl().weyl();
        let f = self.source().iwahori_weyl().sigma_action();
        let levi = target.levi_geometry().subgroup();
        let mut lifts = Vec::new();
        for &w in target.relative_weyl().elements() {
            match levi.elements.iter().map(|&m| weyl.mul(w, m)).find(|&x| f.on_weyl(x) == x) {
                Some(x) => lifts.push(x),
                None => {
                    return Ok(WeylMapReport {
                        relative_order: target.relative_weyl().order(),
                        well_defined: false,
                        injective: false,
                    })
                }
            }
        }
        let injective = lifts.iter().enumerate().all(|(i, &a)| {
            lifts[i + 1..].iter().all(|&b| !levi.contains(weyl.mul(weyl.inverse(a), b)))
        });
        Ok(WeylMapReport { relative_order: lifts.len(), well_defined: true, injective })
    }
}

/// `c_H`: an invariant polynomial in the orbit sums of `W(H, A)`.
pub fn constant_term(group: &SatakeGroup, h: &[usize], p: &OrbitSumPoly<BigRational>) -> Result<Coords> {
    group.poly_ring().to_orbit_basis(p)?;
    group.poly_ring_in(h)?.to_orbit_basis(p)
}
