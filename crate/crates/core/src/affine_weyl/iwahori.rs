use std::collections::HashMap;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::abelian::{FgAbGroup, Matrix};
use crate::affine_weyl::alcove::AlcoveGeometry;
use crate::affine_weyl::element::AffineElement;
use crate::affine_weyl::finite::FiniteWeylGroup;
use crate::affine_weyl::sigma::SigmaAction;
use crate::error::{Error, Result};
use crate::root_datum::{EchelonSystem, GaloisRootDatum, RootSystem, TwistSpec};

static NEXT_ID: AtomicU32 = AtomicU32::new(1);

pub(crate) fn to_i64(m: &Matrix<BigInt>) -> Result<Matrix<i64>> {
    m.cast().ok_or_else(|| Error::InvalidInput("lattice data exceeds 64-bit range".into()))
}

pub(crate) fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// A quotient of `X_*(T)_I` by a coroot lattice, evaluated on canonical
/// coordinates. Used for `κ_G` and `κ_M`.
#[derive(Clone, Debug)]
pub struct ClassMap {
    group: FgAbGroup<BigInt>,
    mat: Matrix<i64>,
    torsion: Vec<i64>,
    ambient_to_lattice: Matrix<i64>,
    lattice_torsion: Vec<i64>,
}

impl ClassMap {
    /// `X_*(T)_I` modulo the span of the given vectors of `X_*`.
    pub(crate) fn new_on(lattice: &FgAbGroup<BigInt>, extra: &[Vec<i64>]) -> Result<Self> {
        let n = lattice.ambient_rank();
        let cols: Vec<Vec<BigInt>> = extra.iter().map(|c| big(c)).collect();
        let group = FgAbGroup::quotient(n, lattice.relations().hstack(&Matrix::from_columns(n, &cols)));
        let mat = to_i64(&group.canon_matrix().mul(&lattice.lift_matrix()))?;
        let torsion = group.torsion_factors().iter().map(|d| i64::try_from(d).expect("small")).collect();
        let lattice_torsion = lattice.torsion_factors().iter().map(|d| i64::try_from(d).expect("small")).collect();
        Ok(ClassMap { ambient_to_lattice: to_i64(&lattice.canon_matrix())?, group, mat, torsion, lattice_torsion })
    }

    pub fn group(&self) -> &FgAbGroup<BigInt> {
        &self.group
    }

    pub fn apply(&self, nu: &[i64]) -> Vec<i64> {
        let mut c = self.mat.mul_vec(nu);
        reduce(&mut c, &self.torsion);
        c
    }

    /// A translation (canonical lattice coordinates) in the given class.
    pub fn lift(&self, class: &[i64]) -> Vec<i64> {
        let amb = self.group.lift(&big(class));
        let amb: Vec<i64> = amb.iter().map(|v| i64::try_from(v).expect("small")).collect();
        let mut c = self.ambient_to_lattice.mul_vec(&amb);
        reduce(&mut c, &self.lattice_torsion);
        c
    }
}

pub(crate) fn reduce(c: &mut [i64], torsion: &[i64]) {
    for (v, d) in c.iter_mut().zip(torsion) {
        *v = v.rem_euclid(*d);
    }
}

/// The Iwahori-Weyl group `X_*(T)_I ⋊ W(Σ)` of a (possibly twisted) group,
/// with its base alcove, Kottwitz map and Frobenius action.
pub struct IwahoriWeyl {
    id: u32,
    pub(crate) lattice: FgAbGroup<BigInt>,
    pub(crate) canon: Matrix<i64>,
    pub(crate) lift: Matrix<i64>,
    pub(crate) torsion: Vec<i64>,
    pub(crate) sigma_system: EchelonSystem,
    pub(crate) weyl: FiniteWeylGroup,
    pub(crate) wmats: Vec<Matrix<i64>>,
    pub(crate) pairing: Vec<Vec<i64>>,
    pub(crate) coroot_canon: Vec<Vec<i64>>,
    pub(crate) geometry: Option<AlcoveGeometry>,
    pub(crate) sigma: Option<SigmaAction>,
    pub(crate) bruhat_memo: Mutex<HashMap<(AffineElement, AffineElement), bool>>,
}

impl std::fmt::Debug for IwahoriWeyl {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IwahoriWeyl(X_*(T)_I = {}, |W| = {})", self.lattice, self.weyl.order())
    }
}

impl IwahoriWeyl {
    /// Builds the group for `datum`, with Frobenius twisted by `twist` if given.
    pub fn new(datum: &GaloisRootDatum, twist: Option<&TwistSpec>) -> Result<Self> {
        let sigma_system = datum.echelonnage()?;
        let (lattice, _) = datum.cochar_coinvariants();
        let canon = to_i64(&lattice.canon_matrix())?;
        let lift = to_i64(&lattice.lift_matrix())?;
        let torsion: Vec<i64> = lattice.torsion_factors().iter().map(|d| i64::try_from(d).expect("small")).collect();
        let sys = sigma_system.system().clone();
        let weyl = FiniteWeylGroup::new(&sys);
        let wmats = (0..weyl.order()).map(|w| canon.mul(weyl.matrix(w)).mul(&lift)).collect();
        let pairing = (0..sys.len()).map(|a| lift.vec_mul(sys.root(a))).collect();
        let coroot_canon = (0..sys.len())
            .map(|a| {
                let mut c = canon.mul_vec(sys.coroot(a));
                reduce(&mut c, &torsion);
                c
            })
            .collect();
        let mut iw = IwahoriWeyl {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            lattice,
            canon,
            lift,
            torsion,
            sigma_system,
            weyl,
            wmats,
            pairing,
            coroot_canon,
            geometry: None,
            sigma: None,
            bruhat_memo: Mutex::new(HashMap::new()),
        };
        let all: Vec<usize> = (0..sys.len()).collect();
        iw.geometry = Some(AlcoveGeometry::new(&iw, &all)?);
        iw.sigma = Some(SigmaAction::new(&iw, datum, twist)?);
        Ok(iw)
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    /// `X_*(T)_I`.
    pub fn lattice(&self) -> &FgAbGroup<BigInt> {
        &self.lattice
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn coord_len(&self) -> usize {
        self.canon.rows()
    }

    pub fn echelon(&self) -> &EchelonSystem {
        &self.sigma_system
    }

    pub fn sigma_roots(&self) -> &RootSystem {
        self.sigma_system.system()
    }

    pub fn weyl(&self) -> &FiniteWeylGroup {
        &self.weyl
    }

    pub fn geometry(&self) -> &AlcoveGeometry {
        self.geometry.as_ref().expect("built in constructor")
    }

    /// Base alcove data for a closed subsystem of `Σ`.
    pub fn geometry_for(&self, subset: &[usize]) -> Result<AlcoveGeometry> {
        AlcoveGeometry::new(self, subset)
    }

    pub fn sigma_action(&self) -> &SigmaAction {
        self.sigma.as_ref().expect("built in constructor")
    }

    /// Action of a finite Weyl element on canonical coordinates.
    pub fn w_matrix(&self, w: usize) -> &Matrix<i64> {
        &self.wmats[w]
    }

    /// `<a, ν>` for a `Σ` root `a`.
    pub fn pair(&self, a: usize, nu: &[i64]) -> i64 {
        self.pairing[a].iter().zip(nu).map(|(x, y)| x * y).sum()
    }

    pub fn coroot_canon(&self, a: usize) -> &[i64] {
        &self.coroot_canon[a]
    }

    pub fn reduce(&self, c: &mut [i64]) {
        reduce(c, &self.torsion);
    }

    /// Canonical coordinates of a vector of `X_*`.
    pub fn canon_of(&self, x: &[i64]) -> Vec<i64> {
        let mut c = self.canon.mul_vec(x);
        self.reduce(&mut c);
        c
    }

    /// A representative in `X_*` of canonical coordinates.
    pub fn ambient_of(&self, nu: &[i64]) -> Vec<i64> {
        self.lift.mul_vec(nu)
    }

    /// Canonical matrix of an endomorphism of `X_*` preserving the inertia relations.
    pub fn induced(&self, m: &Matrix<i64>) -> Matrix<i64> {
        self.canon.mul(m).mul(&self.lift)
    }

    pub fn element(&self, nu: Vec<i64>, w: usize) -> AffineElement {
        let mut nu = nu;
        self.reduce(&mut nu);
        AffineElement { parent: self.id, nu, w }
    }

    pub fn identity(&self) -> AffineElement {
        self.element(vec![0; self.coord_len()], 0)
    }

    pub fn translation(&self, nu: Vec<i64>) -> AffineElement {
        self.element(nu, 0)
    }

    pub fn finite(&self, w: usize) -> AffineElement {
        self.element(vec![0; self.coord_len()], w)
    }

    fn act(&self, w: usize, nu: &[i64]) -> Vec<i64> {
        self.wmats[w].mul_vec(nu)
    }

    pub fn mul(&self, x: &AffineElement, y: &AffineElement) -> AffineElement {
        debug_assert!(x.parent == self.id && y.parent == self.id, "mixed parents");
        let wy = self.act(x.w, &y.nu);
        let nu = x.nu.iter().zip(&wy).map(|(a, b)| a + b).collect();
        self.element(nu, self.weyl.mul(x.w, y.w))
    }

    pub fn try_mul(&self, x: &AffineElement, y: &AffineElement) -> Result<AffineElement> {
        if x.parent != self.id || y.parent != self.id {
            return Err(Error::MixedParents);
        }
        Ok(self.mul(x, y))
    }

    pub fn inv(&self, x: &AffineElement) -> AffineElement {
        let wi = self.weyl.inverse(x.w);
        let nu = self.act(wi, &x.nu).iter().map(|v| -v).collect();
        self.element(nu, wi)
    }

    pub fn conj(&self, g: &AffineElement, x: &AffineElement) -> AffineElement {
        self.mul(&self.mul(g, x), &self.inv(g))
    }

    /// Max absolute value of the free canonical coordinates.
    pub fn norm(&self, x: &AffineElement) -> i64 {
        x.nu[self.torsion.len()..].iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn length(&self, x: &AffineElement) -> usize {
        self.geometry().length(self, x)
    }

    pub fn kottwitz_map(&self) -> &ClassMap {
        &self.geometry().class_map
    }

    /// `κ_G(x)`: the class of the translation part modulo `Q^∨(Σ)`.
    pub fn kottwitz(&self, x: &AffineElement) -> Vec<i64> {
        self.kottwitz_map().apply(&x.nu)
    }

    pub fn is_in_affine_weyl(&self, x: &AffineElement) -> bool {
        self.kottwitz(x).iter().all(|&v| v == 0)
    }

    /// Frobenius (possibly twisted) on the group.
    pub fn sigma_act(&self, x: &AffineElement) -> AffineElement {
        self.sigma_action().apply(self, x)
    }

    /// The induced action on `κ_G` classes.
    pub fn sigma_on_kottwitz(&self, class: &[i64]) -> Vec<i64> {
        let nu = self.kottwitz_map().lift(class);
        let t = self.sigma_act(&self.translation(nu));
        self.kottwitz(&t)
    }

    /// The unique length-zero element with Kottwitz class `class`.
    pub fn omega_representative(&self, class: &[i64]) -> AffineElement {
        let g = self.geometry();
        let nu = g.class_map.lift(class);
        g.descend_to_length_zero(self, self.translation(nu))
    }

    pub fn simple_affine(&self) -> &[AffineElement] {
        &self.geometry().simple_affine
    }

    pub fn min_double_coset(&self, x: &AffineElement, j: &[usize]) -> AffineElement {
        self.geometry().min_double_coset(self, x, j)
    }

    /// Human-readable form `t(ν) s_i s_j ...`.
    pub fn format(&self, x: &AffineElement) -> String {
        let nu: Vec<String> = x.nu.iter().map(|v| v.to_string()).collect();
        let word = self.weyl.reduced_word(x.w);
        let w = if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
        };
        format!("t({}) {}", nu.join(","), w)
    }
}
