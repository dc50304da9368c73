use num_bigint::BigInt;
use serde::Serialize;

use crate::abelian::{FgAbGroup, Matrix};
use crate::affine_weyl::FiniteWeylGroup;
use crate::error::{Error, Result};
use crate::rational::{self, q, Q};
use crate::root_datum::{GaloisRootDatum, LeviDatum, TwistSpec};
use crate::satake::SatakeGroup;

/// A quasi-split group `G*` together with the data `(M, w_σ)` of an inner
/// form `G`: the twisted Frobenius is `w_σ ∘ F`.
pub struct InnerTwist {
    spec: TwistSpec,
    /// `G*` with `M* = T*`.
    source: SatakeGroup,
    /// `G` with its minimal Levi `M`.
    target: SatakeGroup,
    report: TwistReport,
}

/// Outcome of the checks on `w_σ`. `None` means the clause was not checked.
#[derive(Clone, Debug, Serialize)]
pub struct TwistReport {
    pub in_levi_weyl: bool,
    pub anisotropic: bool,
    pub minimal_levi: bool,
    pub split_source: bool,
    pub cuspidal: Option<bool>,
    pub type_a: Option<bool>,
    pub coxeter: Option<bool>,
    /// `X_*(T)/(w_σ - 1)` and `X_*(T)/Q^∨_M`.
    pub lattice_identity: Option<(String, String, bool)>,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.in_levi_weyl
            && self.anisotropic
            && self.minimal_levi
            && self.cuspidal != Some(false)
            && self.type_a != Some(false)
            && self.coxeter != Some(false)
            && self.lattice_identity.as_ref().map_or(true, |l| l.2)
    }

    /// The first failed clause, as an error.
    pub fn into_result(self) -> Result<Self> {
        let fail = |clause: &str, detail: String| Err(Error::TwistCheckFailed { clause: clause.into(), detail });
        if !self.in_levi_weyl {
            return fail("w_sigma in W(M)", "w_sigma does not lie in the Weyl group of the Levi".into());
        }
        if !self.anisotropic {
            return fail("anisotropy", "twisted frobenius fixes a nonzero vector of the Levi coroot span".into());
        }
        if !self.minimal_levi {
            return fail("minimal Levi", "the Levi is not the centralizer of the split torus of the twisted form".into());
        }
        if self.cuspidal == Some(false) {
            return fail("(a) cuspidal", "w_sigma is not cuspidal in W(M)".into());
        }
        if self.type_a == Some(false) {
            return fail("(b) type A", "the Levi has a component not of type A".into());
        }
        if self.coxeter == Some(false) {
            return fail("(b) Coxeter", "w_sigma is not a Coxeter element of W(M)".into());
        }
        if let Some((a, b, false)) = &self.lattice_identity {
            return fail("(c) lattice identity", format!("X_*(T)/(w_sigma - 1) = {a} but X_*(T)/Q^vee(M) = {b}"));
        }
        Ok(self)
    }
}

fn big(m: &Matrix<i64>) -> Matrix<BigInt> {
    m.cast().expect("i64 fits BigInt")
}

/// Checks `w_σ` against the datum alone, without building the twisted group.
pub fn check_twist(datum: &GaloisRootDatum, spec: &TwistSpec) -> Result<TwistReport> {
    let levi = datum.levi(&spec.levi)?;
    let weyl = FiniteWeylGroup::new(datum.absolute());
    let w_sigma = weyl
        .element_of_matrix(&datum.word_matrix(&spec.w_sigma)?)
        .ok_or_else(|| Error::InvalidInput("w_sigma does not act on the roots".into()))?;
    let sub = weyl.subgroup(levi.roots())?;
    let in_levi_weyl = sub.contains(w_sigma);
    let minimal = datum.minimal_levi(Some(spec))?;
    let split_source = datum.is_split();
    let mut report = TwistReport {
        in_levi_weyl,
        anisotropic: is_anisotropic(datum, spec, &levi)?,
        minimal_levi: minimal.roots() == levi.roots(),
        split_source,
        cuspidal: None,
        type_a: None,
        coxeter: None,
        lattice_identity: None,
    };
    if split_source && in_levi_weyl {
        report.cuspidal = Some(weyl.is_cuspidal_in(w_sigma, &sub)?);
        report.type_a = Some(sub.system.is_type_a());
        report.coxeter = Some(weyl.is_coxeter_in(w_sigma, &sub)?);
        let w = big(&datum.word_matrix(&spec.w_sigma)?);
        let a = FgAbGroup::quotient(datum.rank(), w.minus_identity());
        let b = levi_coroot_quotient(datum, &levi);
        report.lattice_identity = Some((a.to_string(), b.to_string(), a.is_isomorphic(&b)));
    }
    Ok(report)
}

/// Fails with the first violated clause.
pub fn validate_twist(datum: &GaloisRootDatum, spec: &TwistSpec) -> Result<TwistReport> {
    check_twist(datum, spec)?.into_result()
}

/// `X_*(T) / Q^∨(M)`.
fn levi_coroot_quotient(datum: &GaloisRootDatum, levi: &LeviDatum) -> FgAbGroup<BigInt> {
    let cols: Vec<Vec<BigInt>> = levi
        .roots()
        .iter()
        .map(|&i| datum.absolute().coroot(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    FgAbGroup::from_relation_columns(datum.rank(), &cols)
}

/// No nonzero vector in `span(Φ_M^∨) ⊗ Q` is fixed by the twisted
/// Frobenius and inertia.
fn is_anisotropic(datum: &GaloisRootDatum, spec: &TwistSpec, levi: &LeviDatum) -> Result<bool> {
    let n = datum.rank();
    let basis: Vec<Vec<i64>> = levi.simple_absolute().iter().map(|&i| datum.absolute().coroot(i).to_vec()).collect();
    if basis.is_empty() {
        return Ok(true);
    }
    let mut ops = vec![datum.lattice_frobenius(Some(spec))?];
    ops.extend(datum.inertia().iter().cloned());
    // rows of (g - 1) B for each operator g
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for g in &ops {
        let gm = g.minus_identity();
        for i in 0..n {
            rows.push(basis.iter().map(|b| q(gm.row(i).iter().zip(b).map(|(x, y)| x * y).sum())).collect());
        }
    }
    Ok(rational::nullspace(&rows, basis.len()).is_empty())
}

impl InnerTwist {
    /// Validates the twist, then builds both groups.
    pub fn new(source: &GaloisRootDatum, spec: &TwistSpec) -> Result<Self> {
        let report = validate_twist(source, spec)?;
        let source_group = SatakeGroup::new(source, None, Some(&[]))?;
        let target = SatakeGroup::new(source, Some(spec), Some(&spec.levi))?;
        Ok(InnerTwist { spec: spec.clone(), source: source_group, target, report })
    }

    pub fn spec(&self) -> &TwistSpec {
        &self.spec
    }

    pub fn source(&self) -> &SatakeGroup {
        &self.source
    }

    pub fn target(&self) -> &SatakeGroup {
        &self.target
    }

    pub fn datum(&self) -> &GaloisRootDatum {
        self.source.datum()
    }

    pub fn report(&self) -> &TwistReport {
        &self.report
    }

    /// `Λ_M` three ways for a split source: `X_*(T)_σ`, `X_*(T)/Q^∨(M)`, and
    /// the engine's `(X_*(T)_I / Q^∨_M)^σ`. Returns the engine's group and
    /// whether all three agree; for other sources only the engine's group.
    pub fn twisted_lambda(&self) -> Result<(FgAbGroup<BigInt>, Option<bool>)> {
        let datum = self.datum();
        let engine = self.target.lambda().group().clone();
        if !datum.is_split() {
            return Ok((engine, None));
        }
        let a = big(&datum.lattice_frobenius(Some(&self.spec))?);
        let (coinv, _) = FgAbGroup::free(datum.rank()).coinvariants(&[a])?;
        let quotient = levi_coroot_quotient(datum, self.target.levi());
        let agree = coinv.is_isomorphic(&quotient) && coinv.is_isomorphic(&engine);
        Ok((engine, Some(agree)))
    }
}
