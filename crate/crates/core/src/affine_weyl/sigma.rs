use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::abelian::{unimodular_inverse, Matrix};
use crate::affine_weyl::element::AffineElement;
use crate::affine_weyl::iwahori::IwahoriWeyl;
use crate::error::{Error, Result};
use crate::root_datum::{GaloisRootDatum, TwistSpec};

/// Frobenius on `W̃`, possibly twisted by a length-zero element `τ = t_λ u`
/// with `λ` rational: `σ(t_ν w) = t_{uFν + λ - w'λ} w'` where
/// `w' = u F(w) u^{-1}`. The twist is chosen so that `σ` preserves the base
/// alcove.
#[derive(Clone, Debug)]
pub struct SigmaAction {
    /// `uF` on `X_*` (ambient).
    ambient: Matrix<i64>,
    /// `uF` on canonical coordinates.
    lattice: Matrix<i64>,
    wmap: Vec<usize>,
    /// `λ - w'λ`, indexed by `w'`.
    delta: Vec<Vec<i64>>,
    affine_perm: Vec<usize>,
    u: usize,
}

fn not_pinned(detail: impl Into<String>) -> Error {
    Error::NonPinnedFrobenius(detail.into())
}

impl SigmaAction {
    pub(crate) fn new(iw: &IwahoriWeyl, datum: &GaloisRootDatum, twist: Option<&TwistSpec>) -> Result<Self> {
        let f = datum.frobenius();
        let f_inv = unimodular_inverse(f).expect("frobenius is unimodular");
        let sys = iw.sigma_roots();
        let weyl = &iw.weyl;
        let fperm: Vec<usize> = (0..sys.len())
            .map(|b| sys.index_of(&f_inv.vec_mul(sys.root(b))))
            .collect::<Option<_>>()
            .ok_or_else(|| not_pinned("frobenius does not permute the echelonnage roots"))?;

        let word = twist.map(|t| t.w_sigma.as_slice()).unwrap_or(&[]);
        let u_amb = datum.word_matrix(word)?;
        let u = weyl
            .element_of_matrix(&u_amb)
            .ok_or_else(|| not_pinned("w_sigma does not act through the relative Weyl group"))?;
        let ambient = u_amb.mul(f);
        let big: Matrix<BigInt> = ambient.cast().expect("i64 fits BigInt");
        if !iw.lattice.preserved_by(&big) {
            return Err(not_pinned("twisted frobenius does not act on X_*(T)_I"));
        }
        let lattice = iw.induced(&ambient);

        let uinv = weyl.inverse(u);
        let wmap: Vec<usize> =
            (0..weyl.order()).map(|w| weyl.mul(weyl.mul(u, weyl.conjugate_by_perm(&fperm, w)), uinv)).collect();

        // <b_i, λ> = c_i, and τ has length zero iff <b, λ> = [u^{-1} b < 0] for all b > 0.
        let simple = sys.simple();
        let c: Vec<i64> = simple.iter().map(|&b| i64::from(weyl.inverts(u, b))).collect();
        for b in sys.positive_roots() {
            let pairing: i64 = sys.coords(b).iter().zip(&c).map(|(x, y)| x * y).sum();
            if pairing != i64::from(weyl.inverts(u, b)) {
                return Err(not_pinned(format!(
                    "w_sigma is not the finite part of a length-zero element (root {b})"
                )));
            }
        }

        let n = iw.coord_len();
        let mut delta: Vec<Option<Vec<i64>>> = vec![None; weyl.order()];
        delta[0] = Some(vec![0; n]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            let dw = delta[w].clone().expect("visited");
            for (i, &b) in simple.iter().enumerate() {
                let ws = weyl.mul(w, weyl.simple_reflection(i));
                let wb = iw.w_matrix(w).mul_vec(iw.coroot_canon(b));
                let mut d: Vec<i64> = dw.iter().zip(&wb).map(|(x, y)| x + c[i] * y).collect();
                iw.reduce(&mut d);
                match &delta[ws] {
                    Some(prev) if *prev != d => {
                        return Err(not_pinned("twisting element has no consistent translation part"));
                    }
                    Some(_) => {}
                    None => {
                        delta[ws] = Some(d);
                        queue.push_back(ws);
                    }
                }
            }
        }
        let delta: Vec<Vec<i64>> = delta.into_iter().map(|d| d.expect("BFS reaches every element")).collect();

        let mut action = SigmaAction { ambient, lattice, wmap, delta, affine_perm: vec![], u };
        let simples = iw.geometry().simple_affine.clone();
        let mut affine_perm = Vec::with_capacity(simples.len());
        for (k, s) in simples.iter().enumerate() {
            let img = action.apply(iw, s);
            let j = simples
                .iter()
                .position(|t| *t == img)
                .ok_or_else(|| not_pinned(format!("frobenius does not preserve the base alcove (simple affine {k})")))?;
            affine_perm.push(j);
        }
        action.affine_perm = affine_perm;
        Ok(action)
    }

    pub fn apply(&self, iw: &IwahoriWeyl, x: &AffineElement) -> AffineElement {
        let w = self.wmap[x.w];
        let nu: Vec<i64> = self.lattice.mul_vec(&x.nu).iter().zip(&self.delta[w]).map(|(a, b)| a + b).collect();
        iw.element(nu, w)
    }

    /// `uF` on `X_*`.
    pub fn ambient_matrix(&self) -> &Matrix<i64> {
        &self.ambient
    }

    /// `uF` on canonical coordinates of `X_*(T)_I`.
    pub fn lattice_matrix(&self) -> &Matrix<i64> {
        &self.lattice
    }

    /// Action on the finite Weyl group.
    pub fn on_weyl(&self, w: usize) -> usize {
        self.wmap[w]
    }

    /// Permutation of the simple affine reflections.
    pub fn affine_perm(&self) -> &[usize] {
        &self.affine_perm
    }

    /// Finite part of the twisting element.
    pub fn twist_element(&self) -> usize {
        self.u
    }

    pub fn is_untwisted(&self) -> bool {
        self.u == 0
    }
}
