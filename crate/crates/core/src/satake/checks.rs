use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::abelian::Matrix;
use crate::affine_weyl::AffineElement;
use crate::error::{Error, Result};
use crate::satake::group::SatakeGroup;

/// Outcome of the structural checks on a bounded ball of `W̃`.
#[derive(Clone, Debug, Serialize)]
pub struct SemidirectReport {
    pub max_length: usize,
    pub norm_bound: i64,
    pub ball_size: usize,
    pub sigma_fixed: usize,
    pub omega_m_fixed: usize,
    pub parahoric_fixed: usize,
    /// `W_{M,aff}^σ = {e}`.
    pub levi_affine_trivial: bool,
    /// Every σ-fixed element is `ω k` for unique `ω ∈ Ω_M^σ`, `k ∈ W̃_K^σ`.
    pub unique_factorization: bool,
    /// `W̃_K^σ` normalizes `Ω_M^σ`.
    pub normalizes: bool,
    pub counterexample: Option<String>,
}

impl SemidirectReport {
    pub fn passed(&self) -> bool {
        self.levi_affine_trivial && self.unique_factorization && self.normalizes
    }
}

impl SatakeGroup {
    /// Runs the checks with the group's own Frobenius.
    pub fn check_semidirect(&self, max_length: usize, norm: i64) -> Result<SemidirectReport> {
        let iw = self.iwahori_weyl();
        self.check_semidirect_with(max_length, norm, &|x| iw.sigma_act(x))
    }

    /// Runs the checks with an arbitrary map in place of σ (for negative controls).
    pub fn check_semidirect_with(
        &self,
        max_length: usize,
        norm: i64,
        sigma: &dyn Fn(&AffineElement) -> AffineElement,
    ) -> Result<SemidirectReport> {
        let iw = self.iwahori_weyl();
        let ball = iw.enumerate_ball(max_length, Some(norm))?;
        let fixed: Vec<&AffineElement> = ball.iter().filter(|x| sigma(x) == **x).collect();
        let in_omega = |x: &AffineElement| self.in_omega_m(x) && sigma(x) == *x;
        let ks: Vec<&AffineElement> = self.parahoric().iter().filter(|k| sigma(k) == **k).collect();
        let mut report = SemidirectReport {
            max_length,
            norm_bound: norm,
            ball_size: ball.len(),
            sigma_fixed: fixed.len(),
            omega_m_fixed: 0,
            parahoric_fixed: ks.len(),
            levi_affine_trivial: true,
            unique_factorization: true,
            normalizes: true,
            counterexample: None,
        };
        let note = |report: &mut SemidirectReport, msg: String| {
            if report.counterexample.is_none() {
                report.counterexample = Some(msg);
            }
        };
        for x in &fixed {
            let in_levi_affine = self.in_levi(x) && self.kappa_m(x).iter().all(|&v| v == 0);
            if in_levi_affine && **x != iw.identity() {
                report.levi_affine_trivial = false;
                note(&mut report, format!("sigma-fixed element of W_M,aff: {}", iw.format(x)));
            }
            let factorizations = ks.iter().filter(|k| in_omega(&iw.mul(x, &iw.inv(k)))).count();
            if factorizations != 1 {
                report.unique_factorization = false;
                note(&mut report, format!("{} factors in {factorizations} ways", iw.format(x)));
            }
            if in_omega(x) {
                report.omega_m_fixed += 1;
                for k in &ks {
                    let c = iw.conj(k, x);
                    if !in_omega(&c) {
                        report.normalizes = false;
                        note(&mut report, format!("{} conjugates {} out of Omega_M", iw.format(k), iw.format(x)));
                    }
                }
            }
        }
        Ok(report)
    }

    /// `|W̃_K^σ| = |W(G, A)|`, with conjugation of `Ω_M^σ` by `W̃_K^σ`
    /// inducing exactly the relative Weyl matrices on `Λ_M`.
    pub fn check_parahoric_action(&self) -> Result<ParahoricActionReport> {
        let iw = self.iwahori_weyl();
        let lambda = self.lambda();
        let gens = lambda_generators(lambda.coord_len());
        let mut induced = BTreeSet::new();
        for k in self.parahoric_fixed() {
            let cols = gens
                .iter()
                .map(|e| {
                    self.lambda_of(&iw.conj(k, &self.omega_m(e))).ok_or_else(|| {
                        Error::InvalidInput(format!("{} moves Omega_M^sigma off Lambda_M", iw.format(k)))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            induced.insert(Matrix::from_columns(lambda.coord_len(), &cols).to_rows());
        }
        let relative: BTreeSet<Vec<Vec<i64>>> = self.relative_weyl().matrices().iter().map(|m| m.to_rows()).collect();
        let parahoric_fixed = self.parahoric_fixed().len();
        let relative_order = self.relative_weyl().order();
        Ok(ParahoricActionReport {
            parahoric_fixed,
            relative_order,
            identified: parahoric_fixed == relative_order && induced == relative,
        })
    }

    /// Brute force over the ball `ℓ ≤ max_length`, `|ν| ≤ norm`: the minimum of
    /// each `W̃_K`-double coset of a σ-fixed element is found by multiplying
    /// out the coset, and compared with `min_double_coset` and with the
    /// minimal elements of the Cartan decomposition.
    pub fn check_double_cosets(&self, max_length: usize, norm: i64) -> Result<DoubleCosetReport> {
        let iw = self.iwahori_weyl();
        let ks = self.parahoric();
        let ball = iw.enumerate_ball(max_length, Some(norm))?;
        let in_ball: BTreeSet<&AffineElement> = ball.iter().collect();
        let fixed: Vec<&AffineElement> = ball.iter().filter(|x| self.is_sigma_fixed(x)).collect();
        let mut report = DoubleCosetReport {
            max_length,
            norm_bound: norm,
            sigma_fixed: fixed.len(),
            double_cosets: 0,
            cartan_in_ball: 0,
            unique_minima: true,
            minima_sigma_fixed: true,
            min_double_coset_agree: 0,
            min_double_coset_checked: 0,
            matches_cartan: true,
            mismatch: None,
        };
        let mut minima = BTreeSet::new();
        let mut memo: BTreeMap<AffineElement, AffineElement> = BTreeMap::new();
        for x in &fixed {
            if let Some(m) = memo.get(*x) {
                report.min_double_coset_checked += 1;
                if iw.min_double_coset(x, self.special_type()) == *m {
                    report.min_double_coset_agree += 1;
                } else if report.mismatch.is_none() {
                    report.mismatch = Some(format!("min_double_coset({}) differs from {}", iw.format(x), iw.format(m)));
                }
                continue;
            }
            let coset: BTreeSet<AffineElement> =
                ks.iter().flat_map(|a| ks.iter().map(move |b| iw.mul(&iw.mul(a, x), b))).collect();
            let best = coset.iter().map(|y| iw.length(y)).min().expect("cosets are nonempty");
            let lows: Vec<&AffineElement> = coset.iter().filter(|y| iw.length(y) == best).collect();
            if lows.len() != 1 {
                report.unique_minima = false;
            }
            let m = lows[0].clone();
            if !self.is_sigma_fixed(&m) {
                report.minima_sigma_fixed = false;
            }
            report.min_double_coset_checked += 1;
            if iw.min_double_coset(x, self.special_type()) == m {
                report.min_double_coset_agree += 1;
            } else if report.mismatch.is_none() {
                report.mismatch = Some(format!("min_double_coset({}) differs from {}", iw.format(x), iw.format(&m)));
            }
            for y in coset.iter().filter(|y| in_ball.contains(y)) {
                memo.insert(y.clone(), m.clone());
            }
            minima.insert(m);
        }
        report.double_cosets = minima.len();
        let bound = if self.lambda().free_rank() == 0 { None } else { Some(3 * norm.max(1)) };
        let cartan: BTreeSet<AffineElement> = self.cartan(bound)?.orbits.into_iter().map(|o| o.minimal).collect();
        let cartan_in_ball: BTreeSet<&AffineElement> = cartan.iter().filter(|m| in_ball.contains(m)).collect();
        report.cartan_in_ball = cartan_in_ball.len();
        let stray = minima
            .iter()
            .find(|m| !cartan.contains(*m))
            .or_else(|| cartan_in_ball.iter().copied().find(|m| !minima.contains(*m)));
        if let Some(x) = stray {
            report.matches_cartan = false;
            if report.mismatch.is_none() {
                report.mismatch = Some(format!("{} is a minimum on one side only", iw.format(x)));
            }
        }
        Ok(report)
    }
}

fn lambda_generators(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ParahoricActionReport {
    pub parahoric_fixed: usize,
    pub relative_order: usize,
    pub identified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleCosetReport {
    pub max_length: usize,
    pub norm_bound: i64,
    pub sigma_fixed: usize,
    pub double_cosets: usize,
    pub cartan_in_ball: usize,
    pub unique_minima: bool,
    pub minima_sigma_fixed: bool,
    pub min_double_coset_agree: usize,
    pub min_double_coset_checked: usize,
    pub matches_cartan: bool,
    pub mismatch: Option<String>,
}

impl DoubleCosetReport {
    pub fn passed(&self) -> bool {
        self.unique_minima
            && self.minima_sigma_fixed
            && self.matches_cartan
            && self.min_double_coset_agree == self.min_double_coset_checked
    }
}
