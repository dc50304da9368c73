use std::collections::BTreeSet;

use crate::abelian::Matrix;
use crate::affine_weyl::{IwahoriWeyl, SubWeyl};
use crate::error::{Error, Result};
use crate::satake::lambda::LambdaM;

/// `W(H, A) = [W_H / W_M]^σ` for a σ-stable `H ⊇ M` (usually `H = G`),
/// realized by the minimal-length coset representatives, which are
/// σ-fixed and normalize `Σ_M`.
#[derive(Clone, Debug)]
pub struct RelativeWeyl {
    /// Representatives in `W(Σ)`; the identity comes first.
    elements: Vec<usize>,
    /// Action on `Λ_M` (canonical coordinates), one per element.
    matrices: Vec<Matrix<i64>>,
}

impl RelativeWeyl {
    pub(crate) fn new(iw: &IwahoriWeyl, ambient: &SubWeyl, levi: &SubWeyl, lambda: &LambdaM) -> Result<Self> {
        let weyl = iw.weyl();
        let sigma = iw.sigma_action();
        let levi_roots: BTreeSet<usize> = levi.map.iter().copied().collect();
        let levi_simple: Vec<usize> = levi.system.simple().iter().map(|&k| levi.map[k]).collect();
        let mut elements = Vec::new();
        for &w in &ambient.elements {
            let minimal = levi_simple.iter().all(|&b| !weyl.inverts(weyl.inverse(w), b));
            if !minimal {
                continue;
            }
            let twisted = weyl.mul(weyl.inverse(w), sigma.on_weyl(w));
            if !levi.contains(twisted) {
                continue;
            }
            if levi_roots.iter().any(|&a| !levi_roots.contains(&weyl.perm(w)[a])) {
                return Err(Error::InvalidInput(format!(
                    "relative Weyl representative {} does not normalize the Levi",
                    iw.format(&iw.finite(w))
                )));
            }
            elements.push(w);
        }
        elements.sort_by_key(|&w| (weyl.length(w), w));
        let matrices = elements.iter().map(|&w| lambda.induced(weyl.matrix(w))).collect::<Result<Vec<_>>>()?;
        Ok(RelativeWeyl { elements, matrices })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn matrices(&self) -> &[Matrix<i64>] {
        &self.matrices
    }
}
