use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer scalar usable as matrix entries and group coordinates.
///
/// Implemented for `BigInt` (the default for presentations) and the fixed
/// width primitives used on the hot paths of the Iwahori-Weyl group.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 fits every IntScalar")
    }

    /// Converts to another scalar, failing on overflow.
    fn cast<Z: IntScalar>(&self) -> Option<Z> {
        Z::from_bigint(&self.to_bigint())
    }

    fn to_bigint(&self) -> BigInt;

    fn from_bigint(v: &BigInt) -> Option<Self>;
}

impl IntScalar for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }

    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

macro_rules! prim_scalar {
    ($($t:ty),*) => {$(
        impl IntScalar for $t {
            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }

            fn from_bigint(v: &BigInt) -> Option<Self> {
                <$t>::try_from(v).ok()
            }
        }
    )*};
}

prim_scalar!(i32, i64, i128);
