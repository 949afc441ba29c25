//! Coefficient rings.
//!
//! Everything that touches coefficients or evaluation values (the Plücker
//! algebra, determinants, fraction-free elimination) is written against
//! [`Scalar`]. Fixed-width integers are convenient for small evaluations;
//! [`BigInt`] is the default used by the higher layers since products of
//! minors and elimination intermediates outgrow 64 bits quickly.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

/// An exact integral domain with division-with-remainder.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Ord
    + Hash
    + Integer
    + Signed
    + From<i64>
    + FromStr
    + Send
    + Sync
    + 'static
{
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Fractions over a scalar ring.
pub type Rational<S> = Ratio<S>;
