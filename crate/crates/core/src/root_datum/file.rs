//! TOML group-description files.
//!
//! ```toml
//! name = "sl2"
//! rank = 1
//! roots = [[2], [-2]]
//! coroots = [[1], [-1]]
//! simple_indices = [0]
//! inertia_gens = []
//! frobenius = [[1]]
//!
//! [inner_twist]          # optional
//! levi = [0, 1]
//! w_sigma = [0]
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::abelian::Matrix;
use crate::error::{Error, Result};
use crate::root_datum::datum::{ExplicitSigma, GaloisRootDatum, TwistSpec};
use crate::root_datum::system::RootSystem;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    name: String,
    rank: usize,
    #[serde(default)]
    description: Option<String>,
    #[serde(default)]
    roots: Vec<Vec<i64>>,
    #[serde(default)]
    coroots: Vec<Vec<i64>>,
    #[serde(default)]
    simple_indices: Vec<usize>,
    #[serde(default)]
    inertia_gens: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    frobenius: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    echelonnage: Option<RawSigma>,
    #[serde(default)]
    inner_twist: Option<RawTwist>,
    #[serde(default)]
    levis: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    expected: Option<Expected>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawSigma {
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    simple_indices: Vec<usize>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawTwist {
    levi: Vec<usize>,
    w_sigma: Vec<usize>,
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Stated in the published literature.
    Published,
    /// Worked out by hand from the definitions.
    HandDerived,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Tagged<T> {
    pub value: T,
    pub provenance: Source,
}

/// Expected results shipped with a catalog entry. Tests recompute every one.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub lambda_free_rank: Option<Tagged<usize>>,
    pub lambda_torsion: Option<Tagged<Vec<i64>>>,
    pub relative_weyl_order: Option<Tagged<usize>>,
    pub ktilde_over_k_order: Option<Tagged<i64>>,
    pub split_rank: Option<Tagged<usize>>,
    pub unramified: Option<Tagged<bool>>,
    pub quasi_split: Option<Tagged<bool>>,
}

/// A parsed and validated group description.
#[derive(Clone, Debug)]
pub struct GroupDescription {
    pub datum: GaloisRootDatum,
    pub description: Option<String>,
    pub twist: Option<TwistSpec>,
    pub levis: BTreeMap<String, Vec<usize>>,
    pub expected: Expected,
}

fn matrix(rows: &[Vec<i64>], n: usize, what: &str) -> Result<Matrix<i64>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput(format!("{what} must be a {n}x{n} matrix")));
    }
    Ok(Matrix::from_i64_rows(rows, n))
}

impl GroupDescription {
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawGroup = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = raw.rank;
        let absolute = RootSystem::new(n, raw.roots, raw.coroots, raw.simple_indices)?;
        let inertia = raw
            .inertia_gens
            .iter()
            .enumerate()
            .map(|(k, g)| matrix(g, n, &format!("inertia_gens[{k}]")))
            .collect::<Result<Vec<_>>>()?;
        let frobenius = raw.frobenius.as_ref().map(|f| matrix(f, n, "frobenius")).transpose()?;
        let explicit = raw
            .echelonnage
            .map(|s| ExplicitSigma { roots: s.roots, coroots: s.coroots, simple: s.simple_indices });
        let datum = GaloisRootDatum::new(raw.name, absolute, inertia, frobenius, explicit)?;
        for (name, roots) in &raw.levis {
            datum.levi(roots).map_err(|e| Error::InvalidInput(format!("levi {name}: {e}")))?;
        }
        let twist = raw.inner_twist.map(|t| TwistSpec { levi: t.levi, w_sigma: t.w_sigma });
        if let Some(t) = &twist {
            let levi = datum.levi(&t.levi)?;
            if let Some(&bad) = t.w_sigma.iter().find(|r| !levi.roots().contains(r)) {
                return Err(Error::InvalidInput(format!("w_sigma uses root {bad}, which is not in the Levi")));
            }
        }
        Ok(GroupDescription {
            datum,
            description: raw.description,
            twist,
            levis: raw.levis,
            expected: raw.expected.unwrap_or_default(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn name(&self) -> &str {
        self.datum.name()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_file() {
        let g = GroupDescription::from_toml(
            "name = \"pgl2\"\nrank = 1\nroots = [[1], [-1]]\ncoroots = [[2], [-2]]\nsimple_indices = [0]\n",
        )
        .unwrap();
        assert_eq!(g.name(), "pgl2");
        assert!(g.twist.is_none());
    }

    #[test]
    fn reports_parse_errors() {
        assert!(matches!(GroupDescription::from_toml("name = 3"), Err(Error::Parse(_))));
        assert!(matches!(
            GroupDescription::from_toml("name = \"x\"\nrank = 1\nbogus = 1\n"),
            Err(Error::Parse(_))
        ));
    }
}
