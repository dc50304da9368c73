use num_bigint::BigInt;
use serde::Serialize;

use crate::abelian::{solve_integer, AbHom, FgAbGroup, Matrix};
use crate::error::{Error, Result};
use crate::satake::group::SatakeGroup;

/// The embedding `X_*(T)_I^σ → Λ_M` with its cokernel and, for trivial
/// inertia, the sequence `0 → X_*(A) → Λ_M → ker[X_*(T^M_sc)_σ → X_*(T)_σ] → 0`.
#[derive(Clone, Debug, Serialize)]
pub struct ExactSequenceReport {
    pub invariant_cochar: String,
    pub lambda: String,
    pub embedding_injective: bool,
    pub cokernel: String,
    pub cokernel_trivial: bool,
    pub split_torus: Option<String>,
    pub kernel_term: Option<String>,
    pub exact: Option<bool>,
}

fn big(m: &Matrix<i64>) -> Matrix<BigInt> {
    m.cast().expect("i64 fits BigInt")
}

impl SatakeGroup {
    pub fn exact_sequence_report(&self) -> Result<ExactSequenceReport> {
        let (inv, emb) = self.invariant_cochar_map()?;
        let (coker, _) = emb.cokernel();
        let mut report = ExactSequenceReport {
            invariant_cochar: inv.to_string(),
            lambda: self.lambda().to_string(),
            embedding_injective: emb.is_injective(),
            cokernel: coker.to_string(),
            cokernel_trivial: coker.is_trivial(),
            split_torus: None,
            kernel_term: None,
            exact: None,
        };
        if self.datum().has_trivial_inertia() {
            let (kernel, connecting) = self.connecting_map()?;
            report.split_torus = Some(inv.to_string());
            report.kernel_term = Some(kernel.to_string());
            let zero = emb.compose(&connecting)?.matrix().columns().iter().all(|c| kernel.is_zero_ambient(c));
            report.exact = Some(
                emb.is_injective() && zero && connecting.is_surjective() && coker.is_isomorphic(&kernel),
            );
        }
        Ok(report)
    }

    /// `Λ_M → ker[X_*(T^M_sc)_σ → X_*(T)_σ]`, `λ ↦ [(σ - 1) x]` for a lift `x`.
    /// Assumes trivial inertia.
    fn connecting_map(&self) -> Result<(FgAbGroup<BigInt>, AbHom<BigInt>)> {
        let datum = self.datum();
        let n = datum.rank();
        let a = big(self.iwahori_weyl().sigma_action().ambient_matrix());
        let abs = datum.absolute();
        let simple = self.levi().simple_absolute();
        let r = simple.len();
        let coroots: Vec<Vec<BigInt>> =
            simple.iter().map(|&i| abs.coroot(i).iter().map(|&v| BigInt::from(v)).collect()).collect();
        let basis = Matrix::from_columns(n, &coroots);
        let express = |y: &[BigInt]| {
            solve_integer(&basis, y).ok_or_else(|| Error::InvalidInput("Levi coroot lattice is not sigma-stable".into()))
        };
        let s_cols = coroots.iter().map(|c| express(&a.mul_vec(c))).collect::<Result<Vec<_>>>()?;
        let s = Matrix::from_columns(r, &s_cols);
        let (sc_coinv, _) = FgAbGroup::free(r).coinvariants(&[s])?;
        let (x_coinv, _) = FgAbGroup::free(n).coinvariants(&[a.clone()])?;
        let map = AbHom::new(sc_coinv, x_coinv, basis.clone())?;
        let (kernel, incl) = map.kernel();

        let lambda = self.lambda();
        let a_minus_one = a.minus_identity();
        let cols = lambda
            .group()
            .generators()
            .iter()
            .map(|g| {
                let x = lambda.inclusion().matrix().mul_vec(g);
                let c = express(&a_minus_one.mul_vec(&x))?;
                let k = incl
                    .preimage(&incl.target().canon(&c))
                    .ok_or_else(|| Error::InvalidInput("connecting map leaves the kernel".into()))?;
                Ok(kernel.lift(&k))
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_columns(kernel.ambient_rank(), &cols).mul(&lambda.group().canon_matrix());
        let connecting = AbHom::new(lambda.group().clone(), kernel.clone(), m)?;
        Ok((kernel, connecting))
    }
}
