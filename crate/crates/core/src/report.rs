//! Serializable reports and the per-entry check suites behind the CLI.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::Result;
use crate::root_datum::{GroupDescription, TwistSpec};
use crate::satake::SatakeGroup;
use crate::transfer::{
    HomomorphismReport, InnerTwist, SquareReport, SurjectivityReport, TransferMap, TwistReport, WeylMapReport,
};

/// Bumped whenever a field of a report changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct LambdaReport {
    pub schema_version: u32,
    pub group: String,
    pub lambda: String,
    pub free_rank: usize,
    pub invariant_factors: Vec<String>,
    pub lambda_tilde: String,
    pub ktilde_over_k: String,
    pub split_torus: String,
    pub relative_weyl_order: usize,
    pub quasi_split: bool,
    pub unramified: bool,
    pub classification: String,
}

impl LambdaReport {
    pub fn new(group: &SatakeGroup) -> Result<Self> {
        let lambda = group.lambda().group();
        let torsion = group.ktilde_over_k();
        let sequence = group.exact_sequence_report()?;
        let classification = if !torsion.is_trivial() {
            format!("Lambda_M = {lambda}; Ktilde/K = {torsion}; torsion, nonzero")
        } else if sequence.cokernel_trivial {
            format!("Lambda_M = {lambda} = X_*(A); torsion trivial")
        } else {
            format!("Lambda_M = {lambda}; torsion trivial; X_*(T)_I^sigma has cokernel {}", sequence.cokernel)
        };
        Ok(LambdaReport {
            schema_version: SCHEMA_VERSION,
            group: group.datum().name().to_string(),
            lambda: lambda.to_string(),
            free_rank: lambda.free_rank(),
            invariant_factors: lambda.torsion_factors().iter().map(|d| d.to_string()).collect(),
            lambda_tilde: lambda.free_quotient().to_string(),
            ktilde_over_k: torsion.to_string(),
            split_torus: group.split_torus()?.to_string(),
            relative_weyl_order: group.relative_weyl().order(),
            quasi_split: group.is_quasi_split(),
            unramified: group.datum().has_trivial_inertia() && group.is_quasi_split(),
            classification,
        })
    }
}

impl fmt::Display for LambdaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.group)?;
        writeln!(f, "Lambda_M: free rank {}, invariant factors [{}]", self.free_rank, self.invariant_factors.join(", "))?;
        writeln!(f, "Lambda_M / torsion = {}", self.lambda_tilde)?;
        writeln!(f, "Ktilde/K = {}", self.ktilde_over_k)?;
        writeln!(f, "X_*(A) = {}", self.split_torus)?;
        writeln!(f, "|W(G,A)| = {}", self.relative_weyl_order)?;
        writeln!(f, "quasi-split: {}, unramified: {}", self.quasi_split, self.unramified)?;
        writeln!(f, "{}", self.classification)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CartanLine {
    pub representative: Vec<i64>,
    pub orbit_size: usize,
    pub minimal: String,
    pub length: usize,
    pub kottwitz: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CartanReport {
    pub schema_version: u32,
    pub group: String,
    pub bound: i64,
    pub orbits: Vec<CartanLine>,
    /// Covering relations of `⪯`, as positions in `orbits`.
    pub hasse: Vec<(usize, usize)>,
}

impl CartanReport {
    pub fn new(group: &SatakeGroup, bound: Option<i64>) -> Result<Self> {
        let cartan = group.cartan(bound)?;
        let iw = group.iwahori_weyl();
        let orbits = cartan
            .orbits
            .iter()
            .map(|o| CartanLine {
                representative: o.representative.clone(),
                orbit_size: o.elements.len(),
                minimal: iw.format(&o.minimal),
                length: o.length,
                kottwitz: o.kottwitz.clone(),
            })
            .collect();
        Ok(CartanReport {
            schema_version: SCHEMA_VERSION,
            group: group.datum().name().to_string(),
            bound: cartan.bound,
            orbits,
            hasse: cartan.hasse(group),
        })
    }
}

impl fmt::Display for CartanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.group)?;
        writeln!(f, "{} double cosets (norm <= {})", self.orbits.len(), self.bound)?;
        for (i, o) in self.orbits.iter().enumerate() {
            writeln!(
                f,
                "  [{i}] lambda = {:?} (orbit of {}): minimal {}, length {}, kappa {:?}",
                o.representative, o.orbit_size, o.minimal, o.length, o.kottwitz
            )?;
        }
        if self.hasse.is_empty() {
            writeln!(f, "preceq: no relations")
        } else {
            let edges: Vec<String> = self.hasse.iter().map(|(a, b)| format!("[{a}] < [{b}]")).collect();
            writeln!(f, "preceq covers: {}", edges.join(", "))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ImageLine {
    pub source: Vec<i64>,
    pub image: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferReport {
    pub schema_version: u32,
    pub group: String,
    pub levi: Vec<usize>,
    pub w_sigma: Vec<usize>,
    pub twist: TwistReport,
    pub source_lambda: String,
    pub target_lambda: String,
    pub lambda_agree: Option<bool>,
    /// Rows of the lattice map on canonical coordinates.
    pub lattice_map: Vec<Vec<i64>>,
    pub images: Vec<ImageLine>,
    pub surjectivity: SurjectivityReport,
    pub homomorphism: HomomorphismReport,
    pub constant_term: SquareReport,
    pub weyl_map: WeylMapReport,
}

fn basis_string(coords: &std::collections::BTreeMap<Vec<i64>, BigRational>) -> String {
    if coords.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = coords
        .iter()
        .map(|(e, c)| if c.is_one() { format!("m{e:?}") } else { format!("{c}*m{e:?}") })
        .collect();
    parts.join(" + ")
}

impl TransferReport {
    pub fn new(datum: &crate::root_datum::GaloisRootDatum, spec: &TwistSpec, bound: i64, seed: u64) -> Result<Self> {
        let twist = InnerTwist::new(datum, spec)?;
        let (_, lambda_agree) = twist.twisted_lambda()?;
        let t = TransferMap::new(&twist)?;
        let ring = t.source_ring();
        let sl = twist.source().lambda();
        let mut reps: Vec<Vec<i64>> = crate::affine_weyl::lattice_box(sl.torsion(), sl.coord_len(), bound)
            .iter()
            .map(|l| ring.representative(l))
            .collect();
        reps.sort();
        reps.dedup();
        let images = reps
            .into_iter()
            .map(|l| Ok(ImageLine { image: basis_string(&t.apply_orbit_sum(&l)?), source: l }))
            .collect::<Result<Vec<_>>>()?;
        Ok(TransferReport {
            schema_version: SCHEMA_VERSION,
            group: datum.name().to_string(),
            levi: spec.levi.clone(),
            w_sigma: spec.w_sigma.clone(),
            twist: twist.report().clone(),
            source_lambda: sl.to_string(),
            target_lambda: twist.target().lambda().to_string(),
            lambda_agree,
            lattice_map: t.lattice_matrix().to_rows(),
            images,
            surjectivity: t.check_surjective(bound, bound)?,
            homomorphism: t.check_homomorphism(bound, 100, seed)?,
            constant_term: t.check_constant_term_square(None, bound)?,
            weyl_map: t.check_weyl_map()?,
        })
    }

    pub fn passed(&self) -> bool {
        self.twist.passed()
            && self.lambda_agree != Some(false)
            && self.surjectivity.surjective
            && self.homomorphism.passed()
            && self.constant_term.commutes
            && self.weyl_map.passed()
    }
}

impl fmt::Display for TransferReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {} twisted by w_sigma = {:?} in Levi {:?}", self.group, self.w_sigma, self.levi)?;
        writeln!(f, "Lambda_T* = {} -> Lambda_M = {}", self.source_lambda, self.target_lambda)?;
        if let Some(agree) = self.lambda_agree {
            writeln!(f, "X_*(T)_sigma = X_*(T)/Q^vee(M) = Lambda_M: {agree}")?;
        }
        for line in &self.images {
            writeln!(f, "  m{:?} -> {}", line.source, line.image)?;
        }
        let s = &self.surjectivity;
        writeln!(
            f,
            "surjective onto norm <= {}: {} ({} target orbits, {} source orbits)",
            s.target_bound, s.surjective, s.target_orbits, s.source_orbits
        )?;
        let h = &self.homomorphism;
        writeln!(f, "ring homomorphism on {} pairs (seed {}): {}", h.samples, h.seed, h.passed())?;
        writeln!(f, "constant-term square on {} elements: {}", self.constant_term.checked, self.constant_term.commutes)?;
        writeln!(f, "Weyl map well defined and injective: {}", self.weyl_map.passed())
    }
}

/// Knobs for [`check_entry`].
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub ball_length: usize,
    pub ball_norm: i64,
    pub coset_length: usize,
    pub coset_norm: i64,
    pub transfer_bound: i64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            ball_length: 10,
            ball_norm: 6,
            coset_length: 8,
            coset_norm: 3,
            transfer_bound: 6,
            samples: 100,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryCheck {
    pub entry: String,
    pub suites: Vec<SuiteResult>,
}

impl EntryCheck {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub passed: bool,
    pub entries: Vec<EntryCheck>,
}

impl CheckReport {
    pub fn new(entries: Vec<EntryCheck>) -> Self {
        CheckReport { schema_version: SCHEMA_VERSION, passed: entries.iter().all(EntryCheck::passed), entries }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            for s in &e.suites {
                let mark = if s.passed { "ok  " } else { "FAIL" };
                writeln!(f, "{mark} {:<20} {:<16} {}", e.entry, s.suite, s.detail)?;
            }
        }
        let failed: usize = self.entries.iter().flat_map(|e| &e.suites).filter(|s| !s.passed).count();
        writeln!(f, "{}", if failed == 0 { "all checks passed".to_string() } else { format!("{failed} checks failed") })
    }
}

fn suite(suite: &str, outcome: Result<(bool, String)>) -> SuiteResult {
    match outcome {
        Ok((passed, detail)) => SuiteResult { suite: suite.into(), passed, detail },
        Err(e) => SuiteResult { suite: suite.into(), passed: false, detail: format!("error: {e}") },
    }
}

/// Compares every shipped expected value with a fresh computation.
pub fn check_expected(desc: &GroupDescription, group: &SatakeGroup) -> Result<(bool, String)> {
    let e = &desc.expected;
    let lambda = group.lambda().group();
    let mut wrong = Vec::new();
    let mut checked = 0;
    let mut cmp = |name: &str, ok: Option<bool>| {
        if let Some(ok) = ok {
            checked += 1;
            if !ok {
                wrong.push(name.to_string());
            }
        }
    };
    let torsion: Vec<i64> =
        lambda.torsion_factors().iter().map(|d| i64::try_from(d).expect("small torsion")).collect();
    let ktilde = group.ktilde_over_k().order().map(|o| i64::try_from(&o).expect("small order"));
    cmp("lambda_free_rank", e.lambda_free_rank.as_ref().map(|t| t.value == lambda.free_rank()));
    cmp("lambda_torsion", e.lambda_torsion.as_ref().map(|t| t.value == torsion));
    cmp("relative_weyl_order", e.relative_weyl_order.as_ref().map(|t| t.value == group.relative_weyl().order()));
    cmp("ktilde_over_k_order", e.ktilde_over_k_order.as_ref().map(|t| Some(t.value) == ktilde));
    cmp("split_rank", e.split_rank.as_ref().map(|t| t.value == group.split_torus().map_or(usize::MAX, |a| a.free_rank())));
    let unramified = group.datum().has_trivial_inertia() && group.is_quasi_split();
    cmp("unramified", e.unramified.as_ref().map(|t| t.value == unramified));
    cmp("quasi_split", e.quasi_split.as_ref().map(|t| t.value == group.is_quasi_split()));
    let detail = if wrong.is_empty() {
        format!("{checked} expected values recomputed")
    } else {
        format!("mismatch in {}", wrong.join(", "))
    };
    Ok((wrong.is_empty(), detail))
}

/// Every check suite that applies to a catalog entry.
pub fn check_entry(desc: &GroupDescription, config: &CheckConfig) -> EntryCheck {
    let name = desc.datum.name().to_string();
    let group = match SatakeGroup::from_description(desc) {
        Ok(g) => g,
        Err(e) => {
            return EntryCheck { entry: name, suites: vec![suite("construct", Err(e))] };
        }
    };
    let mut suites = vec![suite("expected", check_expected(desc, &group))];
    suites.push(suite(
        "semidirect",
        group.check_semidirect(config.ball_length, config.ball_norm).map(|r| {
            (r.passed(), format!("{} sigma-fixed of {} in ball", r.sigma_fixed, r.ball_size))
        }),
    ));
    suites.push(suite(
        "parahoric",
        group.check_parahoric_action().map(|r| {
            (r.identified, format!("|W_K^sigma| = {}, |W(G,A)| = {}", r.parahoric_fixed, r.relative_order))
        }),
    ));
    suites.push(suite(
        "double-cosets",
        group.check_double_cosets(config.coset_length, config.coset_norm).map(|r| {
            (r.passed(), format!("{} cosets, {} Cartan minima in ball", r.double_cosets, r.cartan_in_ball))
        }),
    ));
    suites.push(suite(
        "exact-sequence",
        group.exact_sequence_report().map(|r| {
            (r.embedding_injective && r.exact != Some(false), format!("X_*(T)_I^sigma -> Lambda_M has cokernel {}", r.cokernel))
        }),
    ));
    if let Some(spec) = &desc.twist {
        suites.push(suite(
            "transfer",
            TransferReport::new(&desc.datum, spec, config.transfer_bound, config.seed)
                .map(|r| (r.passed(), format!("{} -> {}", r.source_lambda, r.target_lambda))),
        ));
    }
    EntryCheck { entry: name, suites }
}

