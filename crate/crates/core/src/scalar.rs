//! The integer type behind all Seifert arithmetic.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as Seifert invariant storage.
///
/// Implemented for every type with the right `num-traits` bounds; in practice
/// `i64`, `i128` and [`num_bigint::BigInt`].
pub trait SeifertInt:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + FromStr + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 fits every SeifertInt")
    }

    /// Least non-negative residue modulo `m > 0`.
    fn modulo(&self, m: &Self) -> Self {
        self.mod_floor(m)
    }

    /// Inverse of `self` modulo `m`, in `0..m`, when it exists.
    fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let g = self.extended_gcd(m);
        if !g.gcd.abs().is_one() {
            return None;
        }
        let x = if g.gcd.is_negative() { -g.x } else { g.x };
        Some(x.mod_floor(m))
    }

    fn to_i64_checked(&self) -> Option<i64> {
        ToPrimitive::to_i64(self)
    }
}

impl<T> SeifertInt for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}
