use std::collections::{BTreeSet, VecDeque};

use crate::affine_weyl::element::AffineElement;
use crate::affine_weyl::iwahori::IwahoriWeyl;
use crate::error::{Error, Result};

impl IwahoriWeyl {
    /// Bruhat order: `x ≤ y` requires the same Kottwitz class and comparable
    /// affine Weyl parts.
    pub fn bruhat_leq(&self, x: &AffineElement, y: &AffineElement) -> bool {
        if self.kottwitz(x) != self.kottwitz(y) {
            return false;
        }
        self.bruhat_rec(x, y)
    }

    fn bruhat_rec(&self, x: &AffineElement, y: &AffineElement) -> bool {
        let (lx, ly) = (self.length(x), self.length(y));
        if lx > ly {
            return false;
        }
        if ly == 0 {
            return x == y;
        }
        let key = (x.clone(), y.clone());
        if let Some(&v) = self.bruhat_memo.lock().expect("memo lock").get(&key) {
            return v;
        }
        let (s, sy) = self
            .simple_affine()
            .iter()
            .map(|s| (s, self.mul(s, y)))
            .find(|(_, sy)| self.length(sy) < ly)
            .expect("an element of positive length has a left descent");
        let sx = self.mul(s, x);
        let result = if self.length(&sx) < lx { self.bruhat_rec(&sx, &sy) } else { self.bruhat_rec(x, &sy) };
        self.bruhat_memo.lock().expect("memo lock").insert(key, result);
        result
    }

    /// Elements of the finite parabolic subgroup `W_J`; `j` indexes the simple affine reflections.
    pub fn parabolic_elements(&self, j: &[usize]) -> Result<Vec<AffineElement>> {
        self.geometry().parabolic_elements(self, j)
    }

    /// All elements of length at most `max_len`, optionally also with
    /// translation norm at most `norm`. Without a norm bound this requires a
    /// finite length-zero subgroup.
    pub fn enumerate_ball(&self, max_len: usize, norm: Option<i64>) -> Result<Vec<AffineElement>> {
        match norm {
            Some(n) => Ok(self.box_elements(n).into_iter().filter(|x| self.length(x) <= max_len).collect()),
            None => {
                let kappa = self.kottwitz_map().group();
                if !kappa.is_finite() {
                    return Err(Error::BoundRequired(format!(
                        "the length-zero subgroup is infinite ({kappa}); pass a norm bound"
                    )));
                }
                let omegas: Vec<AffineElement> = kottwitz_classes(self.kottwitz_map().group())
                    .iter()
                    .map(|c| self.omega_representative(c))
                    .collect();
                let mut seen = BTreeSet::from([self.identity()]);
                let mut queue = VecDeque::from([(self.identity(), 0usize)]);
                while let Some((x, l)) = queue.pop_front() {
                    if l == max_len {
                        continue;
                    }
                    for s in self.simple_affine() {
                        let y = self.mul(&x, s);
                        if self.length(&y) == l + 1 && seen.insert(y.clone()) {
                            queue.push_back((y, l + 1));
                        }
                    }
                }
                let mut out: Vec<AffineElement> =
                    seen.iter().flat_map(|w| omegas.iter().map(move |o| self.mul(w, o))).collect();
                out.sort();
                Ok(out)
            }
        }
    }

    /// All elements whose free translation coordinates are bounded by `n`.
    pub fn box_elements(&self, n: i64) -> Vec<AffineElement> {
        let mut out = Vec::new();
        for nu in lattice_box(self.torsion(), self.coord_len(), n) {
            for w in 0..self.weyl.order() {
                out.push(self.element(nu.clone(), w));
            }
        }
        out
    }
}

/// Canonical coordinate vectors with torsion part ranging over all residues
/// and free part in `[-n, n]`.
pub fn lattice_box(torsion: &[i64], len: usize, n: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for k in 0..len {
        let range: Vec<i64> = if k < torsion.len() { (0..torsion[k]).collect() } else { (-n..=n).collect() };
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                range.iter().map(move |&x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every element of a finite group, in canonical coordinates.
pub(crate) fn kottwitz_classes(g: &crate::abelian::FgAbGroup<num_bigint::BigInt>) -> Vec<Vec<i64>> {
    let torsion: Vec<i64> = g.torsion_factors().iter().map(|d| i64::try_from(d).expect("small")).collect();
    lattice_box(&torsion, g.coord_len(), 0)
}
