use serde::Serialize;

/// An element `t_ν w` of an Iwahori-Weyl group.
///
/// `nu` is in canonical coordinates of `X_*(T)_I` (torsion first, reduced),
/// `w` indexes the finite Weyl group of `Σ`. The `parent` tag identifies the
/// group the element was built in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffineElement {
    #[serde(skip)]
    pub(crate) parent: u32,
    pub nu: Vec<i64>,
    pub w: usize,
}

impl AffineElement {
    pub fn parent(&self) -> u32 {
        self.parent
    }
}
