use num_bigint::BigInt;

use crate::abelian::{AbHom, FgAbGroup, Matrix};
use crate::affine_weyl::{AffineElement, AlcoveGeometry, IwahoriWeyl};
use crate::error::{Error, Result};
use crate::root_datum::{GaloisRootDatum, GroupDescription, LeviDatum, TwistSpec};
use crate::satake::lambda::LambdaM;
use crate::satake::parahoric::special_subset;
use crate::satake::poly::PolyRing;
use crate::satake::relative::RelativeWeyl;

/// Everything the Satake computations need for one group `G` with minimal
/// Levi `M`: the Iwahori-Weyl group with its Frobenius, `Λ_M`, `W(G,A)` and a
/// σ-stable special maximal parahoric `W̃_K`.
pub struct SatakeGroup {
    datum: GaloisRootDatum,
    twist: Option<TwistSpec>,
    levi: LeviDatum,
    iw: IwahoriWeyl,
    levi_geometry: AlcoveGeometry,
    lambda: LambdaM,
    relative: RelativeWeyl,
    special: Vec<usize>,
    parahoric: Vec<AffineElement>,
    parahoric_fixed: Vec<AffineElement>,
}

/// Same quotient of `Z^n`: each presentation's relations vanish in the other.
fn same_quotient(a: &FgAbGroup<BigInt>, b: &FgAbGroup<BigInt>) -> bool {
    a.ambient_rank() == b.ambient_rank()
        && a.relations().columns().iter().all(|r| b.is_zero_ambient(r))
        && b.relations().columns().iter().all(|r| a.is_zero_ambient(r))
}

impl SatakeGroup {
    pub fn from_description(desc: &GroupDescription) -> Result<Self> {
        let levi = desc.twist.as_ref().map(|t| t.levi.clone());
        Self::new(&desc.datum, desc.twist.as_ref(), levi.as_deref())
    }

    /// `levi` defaults to the minimal Levi of the (twisted) group.
    pub fn new(datum: &GaloisRootDatum, twist: Option<&TwistSpec>, levi: Option<&[usize]>) -> Result<Self> {
        let levi = match levi {
            Some(roots) => {
                let mut l = datum.levi(roots)?;
                l.set_minimal(true);
                l
            }
            None => datum.minimal_levi(twist)?,
        };
        let iw = IwahoriWeyl::new(datum, twist)?;
        let sigma_levi = iw.echelon().restrict_subset(levi.roots());
        let levi_geometry = iw.geometry_for(&sigma_levi)?;
        let quotient = levi_geometry.class_map().group().clone();
        let (sc_cokernel, _) = levi.sc_coroot_map(datum)?.cokernel();
        if !same_quotient(&quotient, &sc_cokernel) {
            return Err(Error::InvalidInput(
                "Levi coroots and echelonnage coroots span different lattices in X_*(T)_I".into(),
            ));
        }
        let lambda = LambdaM::new(quotient, iw.sigma_action().ambient_matrix())?;
        let whole = iw.weyl().whole();
        let relative = RelativeWeyl::new(&iw, &whole, levi_geometry.subgroup(), &lambda)?;
        let special = special_subset(&iw)?;
        let parahoric = iw.parabolic_elements(&special)?;
        let parahoric_fixed = parahoric.iter().filter(|x| iw.sigma_act(x) == **x).cloned().collect();
        Ok(SatakeGroup {
            datum: datum.clone(),
            twist: twist.cloned(),
            levi,
            iw,
            levi_geometry,
            lambda,
            relative,
            special,
            parahoric,
            parahoric_fixed,
        })
    }

    pub fn datum(&self) -> &GaloisRootDatum {
        &self.datum
    }

    pub fn twist(&self) -> Option<&TwistSpec> {
        self.twist.as_ref()
    }

    pub fn levi(&self) -> &LeviDatum {
        &self.levi
    }

    pub fn iwahori_weyl(&self) -> &IwahoriWeyl {
        &self.iw
    }

    pub fn levi_geometry(&self) -> &AlcoveGeometry {
        &self.levi_geometry
    }

    pub fn lambda(&self) -> &LambdaM {
        &self.lambda
    }

    pub fn relative_weyl(&self) -> &RelativeWeyl {
        &self.relative
    }

    /// Type of the special parahoric, as indices into the simple affine reflections.
    pub fn special_type(&self) -> &[usize] {
        &self.special
    }

    /// `W̃_K`.
    pub fn parahoric(&self) -> &[AffineElement] {
        &self.parahoric
    }

    /// `W̃_K^σ`.
    pub fn parahoric_fixed(&self) -> &[AffineElement] {
        &self.parahoric_fixed
    }

    pub fn is_quasi_split(&self) -> bool {
        self.levi.system().is_empty()
    }

    /// `X_*(A)`.
    pub fn split_torus(&self) -> Result<FgAbGroup<BigInt>> {
        self.datum.split_rank_torus(self.twist.as_ref())
    }

    pub fn ktilde_over_k(&self) -> FgAbGroup<BigInt> {
        self.lambda.ktilde_over_k()
    }

    /// `κ_M(x)` in `X_*(T)_I / Q^∨_M`.
    pub fn kappa_m(&self, x: &AffineElement) -> Vec<i64> {
        self.levi_geometry.class_map().apply(&x.nu)
    }

    pub fn levi_length(&self, x: &AffineElement) -> usize {
        self.levi_geometry.length(&self.iw, x)
    }

    /// `W̃_M = X_*(T)_I ⋊ W_M`.
    pub fn in_levi(&self, x: &AffineElement) -> bool {
        self.levi_geometry.subgroup().contains(x.w)
    }

    /// `Ω_M`: length zero for `Σ_M`.
    pub fn in_omega_m(&self, x: &AffineElement) -> bool {
        self.in_levi(x) && self.levi_length(x) == 0
    }

    pub fn is_sigma_fixed(&self, x: &AffineElement) -> bool {
        self.iw.sigma_act(x) == *x
    }

    /// The element of `Ω_M^σ` with `κ_M = λ`.
    pub fn omega_m(&self, lambda: &[i64]) -> AffineElement {
        let c = self.lambda.to_quotient(lambda);
        let nu = self.levi_geometry.class_map().lift(&c);
        self.levi_geometry.descend_to_length_zero(&self.iw, self.iw.translation(nu))
    }

    /// `κ_M(ω)` as an element of `Λ_M`, for `ω` with σ-invariant class.
    pub fn lambda_of(&self, x: &AffineElement) -> Option<Vec<i64>> {
        self.lambda.from_quotient(&self.kappa_m(x))
    }

    /// Action on `Λ_M` of the relative Weyl element at position `k`.
    pub fn weyl_matrix(&self, k: usize) -> &Matrix<i64> {
        &self.relative.matrices()[k]
    }

    /// `W(H, A)` for a σ-stable Levi `H ⊇ M`, given by its absolute roots.
    pub fn relative_weyl_in(&self, h: &[usize]) -> Result<RelativeWeyl> {
        let outer = self.datum.levi(h)?;
        if !outer.contains(&self.levi) {
            return Err(Error::LeviNotContained {
                inner: format!("{:?}", self.levi.roots()),
                outer: format!("{:?}", outer.roots()),
            });
        }
        let ambient = self.iw.weyl().subgroup(&self.iw.echelon().restrict_subset(h))?;
        RelativeWeyl::new(&self.iw, &ambient, self.levi_geometry.subgroup(), &self.lambda)
    }

    /// `C[Λ_M]` with the action of `W(G, A)`.
    pub fn poly_ring(&self) -> PolyRing {
        Self::ring_for(&self.lambda, &self.relative)
    }

    /// `C[Λ_M]` with the action of `W(H, A)`.
    pub fn poly_ring_in(&self, h: &[usize]) -> Result<PolyRing> {
        Ok(Self::ring_for(&self.lambda, &self.relative_weyl_in(h)?))
    }

    fn ring_for(lambda: &LambdaM, weyl: &RelativeWeyl) -> PolyRing {
        PolyRing::new(lambda.torsion().to_vec(), lambda.coord_len(), weyl.matrices().to_vec())
    }

    /// `X_*(T)_I^σ → Λ_M`.
    pub fn invariant_cochar_map(&self) -> Result<(FgAbGroup<BigInt>, AbHom<BigInt>)> {
        let a: Matrix<BigInt> = self.iw.sigma_action().ambient_matrix().cast().expect("fits");
        let (inv, incl) = self.iw.lattice().invariants(&[a])?;
        // ambient of the lattice and of Λ_M's quotient agree, so push through it
        let to_quotient = AbHom::new(
            self.iw.lattice().clone(),
            self.lambda.quotient().clone(),
            Matrix::identity(self.iw.lattice().ambient_rank()),
        )?;
        let composite = incl.compose(&to_quotient)?;
        let cols: Vec<Vec<BigInt>> = inv
            .generators()
            .iter()
            .map(|g| {
                let y = composite.apply_ambient(g);
                self.lambda.inclusion().preimage(&y).expect("invariant classes are sigma-invariant")
            })
            .map(|c| self.lambda.group().lift(&c))
            .collect();
        let m = Matrix::from_columns(self.lambda.group().ambient_rank(), &cols);
        let map = AbHom::new(inv.clone(), self.lambda.group().clone(), m.mul(&inv.canon_matrix()))?;
        Ok((inv, map))
    }
}

impl std::fmt::Debug for SatakeGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SatakeGroup({}, Lambda_M = {})", self.datum.name(), self.lambda)
    }
}
