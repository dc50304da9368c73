use std::collections::{BTreeSet, VecDeque};

use crate::affine_weyl::element::AffineElement;
use crate::affine_weyl::finite::SubWeyl;
use crate::affine_weyl::iwahori::{ClassMap, IwahoriWeyl};
use crate::error::{Error, Result};

/// Base alcove data for a closed subsystem `Ψ ⊂ Σ` (all of `Σ`, or `Σ_M`):
/// positive roots, simple affine reflections and the Kottwitz map modulo
/// `Q^∨(Ψ)`.
#[derive(Clone, Debug)]
pub struct AlcoveGeometry {
    pub(crate) sub: SubWeyl,
    positive: Vec<usize>,
    pub(crate) simple_affine: Vec<AffineElement>,
    pub(crate) finite_count: usize,
    /// Highest root (as a `Σ` index) of each irreducible component.
    pub(crate) highest: Vec<usize>,
    /// Components as positions into the finite simple reflections.
    pub(crate) components: Vec<Vec<usize>>,
    pub(crate) class_map: ClassMap,
}

const MAX_PARABOLIC: usize = 100_000;

impl AlcoveGeometry {
    pub(crate) fn new(iw: &IwahoriWeyl, subset: &[usize]) -> Result<Self> {
        let sub = iw.weyl.subgroup(subset)?;
        let sys = &sub.system;
        let positive: Vec<usize> = sys.positive_roots().iter().map(|&k| sub.map[k]).collect();
        let mut simple_affine: Vec<AffineElement> =
            sys.simple().iter().map(|&k| iw.finite(iw.weyl.reflection(sub.map[k]))).collect();
        let finite_count = simple_affine.len();
        let highest: Vec<usize> = sys.highest_roots().iter().map(|&k| sub.map[k]).collect();
        for &theta in &highest {
            simple_affine.push(iw.element(iw.coroot_canon(theta).to_vec(), iw.weyl.reflection(theta)));
        }
        let coroots: Vec<Vec<i64>> = sys.simple().iter().map(|&k| iw.sigma_roots().coroot(sub.map[k]).to_vec()).collect();
        let class_map = ClassMap::new_on(&iw.lattice, &coroots)?;
        Ok(AlcoveGeometry {
            components: sys.components().to_vec(),
            sub,
            positive,
            simple_affine,
            finite_count,
            highest,
            class_map,
        })
    }

    /// Positive roots of the subsystem, as `Σ` indices.
    pub fn positive(&self) -> &[usize] {
        &self.positive
    }

    pub fn simple_affine(&self) -> &[AffineElement] {
        &self.simple_affine
    }

    pub fn subgroup(&self) -> &SubWeyl {
        &self.sub
    }

    pub fn class_map(&self) -> &ClassMap {
        &self.class_map
    }

    pub fn length(&self, iw: &IwahoriWeyl, x: &AffineElement) -> usize {
        let winv = iw.weyl.perm(iw.weyl.inverse(x.w));
        let sys = iw.sigma_roots();
        self.positive
            .iter()
            .map(|&a| {
                let p = iw.pair(a, &x.nu);
                if sys.is_positive(winv[a]) {
                    p.unsigned_abs() as usize
                } else {
                    (p - 1).unsigned_abs() as usize
                }
            })
            .sum()
    }

    pub(crate) fn descend_to_length_zero(&self, iw: &IwahoriWeyl, mut x: AffineElement) -> AffineElement {
        let mut len = self.length(iw, &x);
        'outer: while len > 0 {
            for s in &self.simple_affine {
                let y = iw.mul(s, &x);
                let l = self.length(iw, &y);
                if l < len {
                    x = y;
                    len = l;
                    continue 'outer;
                }
            }
            unreachable!("an element of positive length has a left descent");
        }
        x
    }

    /// The minimal-length element of `W_J x W_J`; `j` indexes [`Self::simple_affine`].
    pub(crate) fn min_double_coset(&self, iw: &IwahoriWeyl, x: &AffineElement, j: &[usize]) -> AffineElement {
        let mut x = x.clone();
        let mut len = self.length(iw, &x);
        loop {
            let mut improved = false;
            for &k in j {
                let s = &self.simple_affine[k];
                for y in [iw.mul(s, &x), iw.mul(&x, s)] {
                    let l = self.length(iw, &y);
                    if l < len {
                        x = y;
                        len = l;
                        improved = true;
                    }
                }
            }
            if !improved {
                return x;
            }
        }
    }

    /// All elements of the parabolic subgroup `W_J`, which must be finite.
    pub(crate) fn parabolic_elements(&self, iw: &IwahoriWeyl, j: &[usize]) -> Result<Vec<AffineElement>> {
        let id = iw.identity();
        let mut seen = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for &k in j {
                let y = iw.mul(&x, &self.simple_affine[k]);
                if seen.insert(y.clone()) {
                    if seen.len() > MAX_PARABOLIC {
                        return Err(Error::InvalidInput("parabolic subgroup is not finite".into()));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}
