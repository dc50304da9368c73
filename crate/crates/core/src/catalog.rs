//! Worked examples shipped with the library.

use crate::error::{Error, Result};
use crate::root_datum::GroupDescription;

const ENTRIES: &[(&str, &str)] = &[
    ("sl2", include_str!("../catalog/sl2.toml")),
    ("pgl2", include_str!("../catalog/pgl2.toml")),
    ("gl2", include_str!("../catalog/gl2.toml")),
    ("sl3", include_str!("../catalog/sl3.toml")),
    ("sl4", include_str!("../catalog/sl4.toml")),
    ("pgl3", include_str!("../catalog/pgl3.toml")),
    ("sp4", include_str!("../catalog/sp4.toml")),
    ("quaternion", include_str!("../catalog/quaternion.toml")),
    ("pgln-inner", include_str!("../catalog/pgln-inner.toml")),
    ("gl2-inner", include_str!("../catalog/gl2-inner.toml")),
    ("ramified-norm-torus", include_str!("../catalog/ramified-norm-torus.toml")),
    ("res-torus", include_str!("../catalog/res-torus.toml")),
    ("unramified-su3", include_str!("../catalog/unramified-su3.toml")),
    ("ramified-su3", include_str!("../catalog/ramified-su3.toml")),
];

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|(n, _)| *n).collect()
}

pub fn source(name: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn load(name: &str) -> Result<GroupDescription> {
    let text = source(name).ok_or_else(|| Error::InvalidInput(format!("unknown catalog entry `{name}`")))?;
    GroupDescription::from_toml(text)
}

pub fn all() -> Result<Vec<GroupDescription>> {
    names().into_iter().map(load).collect()
}
