use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// A real coordinate type: either binary64 or an exact rational.
///
/// Every algorithm in this crate is written once against this trait and then
/// runs on both carriers. Comparisons are exact for rationals and plain IEEE
/// comparisons for floats; callers that need a boundary tolerance use
/// [`Scalar::tolerance`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// `true` for exact carriers.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn from_ratio(r: &BigRational) -> Self;
    fn to_f64(&self) -> f64;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    fn floor(&self) -> BigInt;
    fn ceil(&self) -> BigInt;

    /// Inclusive slack used for closed-set membership: zero on exact
    /// carriers.
    fn tolerance() -> Self;

    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }
    fn from_ratio(r: &BigRational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn floor(&self) -> BigInt {
        BigInt::from_f64(f64::floor(*self)).expect("finite float")
    }
    fn ceil(&self) -> BigInt {
        BigInt::from_f64(f64::ceil(*self)).expect("finite float")
    }
    fn tolerance() -> Self {
        1e-12
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn from_ratio(r: &BigRational) -> Self {
        r.clone()
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn floor(&self) -> BigInt {
        BigRational::floor(self).to_integer()
    }
    fn ceil(&self) -> BigInt {
        BigRational::ceil(self).to_integer()
    }
    fn tolerance() -> Self {
        Zero::zero()
    }
}

/// Exact rational from a float, with no rounding (every finite binary64 is a
/// dyadic rational).
pub fn ratio_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
