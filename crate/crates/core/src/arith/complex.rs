use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::gaussian::GaussianInt;
use super::scalar::{ratio_from_f64, Scalar};
use super::ArithError;

/// A complex number over a [`Scalar`] carrier.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex<T> {
    pub re: T,
    pub im: T,
}

/// Numeric carrier for irrational inputs.
pub type FloatComplex = Complex<f64>;
/// Exact element of ℚ(i).
pub type RationalComplex = Complex<BigRational>;

impl<T: Scalar> Complex<T> {
    pub fn new(re: T, im: T) -> Self {
        Complex { re, im }
    }

    pub fn zero() -> Self {
        Complex::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Complex::new(T::one(), T::zero())
    }

    pub fn i() -> Self {
        Complex::new(T::zero(), T::one())
    }

    pub fn from_gaussian(g: &GaussianInt) -> Self {
        Complex::new(T::from_bigint(&g.re), T::from_bigint(&g.im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus.
    pub fn norm_sqr(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    /// `|re| + |im|`.
    pub fn norm_l1(&self) -> T {
        self.re.abs() + self.im.abs()
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Complex::new(-self.im.clone(), self.re.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Complex::new(self.re.clone() * k.clone(), self.im.clone() * k.clone())
    }

    /// `1/self`; an exact zero is an error, never a silent NaN.
    pub fn checked_recip(&self) -> Result<Self, ArithError> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Complex::new(
            self.re.clone() / n.clone(),
            -self.im.clone() / n,
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.clone() * rhs.checked_recip()?)
    }

    pub fn to_float(&self) -> FloatComplex {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn add_gaussian(&self, g: &GaussianInt) -> Self {
        self.clone() + Complex::from_gaussian(g)
    }

    pub fn sub_gaussian(&self, g: &GaussianInt) -> Self {
        self.clone() - Complex::from_gaussian(g)
    }
}

impl FloatComplex {
    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Argument in `(−π, π]`; a negative-zero imaginary part is read as
    /// zero so that the negative real axis maps to `π`.
    pub fn arg(&self) -> f64 {
        let im = if self.im == 0.0 { 0.0 } else { self.im };
        im.atan2(self.re)
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        Complex::new(r * theta.cos(), r * theta.sin())
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Exact rational value of this float pair.
    pub fn to_rational(&self) -> Option<RationalComplex> {
        Some(Complex::new(
            ratio_from_f64(self.re)?,
            ratio_from_f64(self.im)?,
        ))
    }
}

impl RationalComplex {
    pub fn from_ints(re: i64, im: i64) -> Self {
        Complex::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    pub fn to_gaussian(&self) -> Option<GaussianInt> {
        self.is_gaussian_integer()
            .then(|| GaussianInt::new(self.re.to_integer(), self.im.to_integer()))
    }
}

impl<T: Scalar> Add for Complex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<T: Scalar> Sub for Complex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<T: Scalar> Mul for Complex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Complex::new(re, im)
    }
}

impl<T: Scalar> Neg for Complex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Complex::new(-self.re, -self.im)
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_pair(re: String, im_neg: bool, im_abs: String) -> String {
    format!("{re}{}{im_abs}i", if im_neg { '-' } else { '+' })
}

impl fmt::Display for RationalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = fmt_pair(
            fmt_ratio(&self.re),
            self.im.is_negative(),
            fmt_ratio(&Signed::abs(&self.im)),
        );
        f.write_str(&s)
    }
}

impl fmt::Display for FloatComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = fmt_pair(
            format!("{}", self.re),
            self.im.is_sign_negative() && self.im != 0.0,
            format!("{}", self.im.abs()),
        );
        f.write_str(&s)
    }
}

impl From<&GaussianInt> for RationalComplex {
    fn from(g: &GaussianInt) -> Self {
        Complex::from_gaussian(g)
    }
}
