use std::fmt;

use super::complex::Complex;
use super::gaussian::GaussianInt;
use super::scalar::Scalar;
use super::ArithError;

/// `z ↦ (az + b)/(cz + d)` with Gaussian-integer entries and a unit
/// determinant.
///
/// Matrices are kept unreduced. Two matrices describe the same map when they
/// differ by a unit scalar; [`MoebiusMap::same_map`] tests that, while `==`
/// compares entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoebiusMap {
    pub a: GaussianInt,
    pub b: GaussianInt,
    pub c: GaussianInt,
    pub d: GaussianInt,
}

impl MoebiusMap {
    /// Builds a map, rejecting matrices whose determinant is not a unit.
    pub fn new(
        a: GaussianInt,
        b: GaussianInt,
        c: GaussianInt,
        d: GaussianInt,
    ) -> Result<Self, ArithError> {
        let m = MoebiusMap { a, b, c, d };
        if !m.det().is_unit() {
            return Err(ArithError::NonUnitDeterminant(m.det().to_string()));
        }
        Ok(m)
    }

    fn raw(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Self {
        MoebiusMap {
            a: GaussianInt::new(a.0, a.1),
            b: GaussianInt::new(b.0, b.1),
            c: GaussianInt::new(c.0, c.1),
            d: GaussianInt::new(d.0, d.1),
        }
    }

    pub fn identity() -> Self {
        Self::raw((1, 0), (0, 0), (0, 0), (1, 0))
    }

    /// `z ↦ z + 1`
    pub fn t() -> Self {
        Self::raw((1, 0), (1, 0), (0, 0), (1, 0))
    }

    /// `z ↦ z − 1`
    pub fn t_inv() -> Self {
        Self::raw((1, 0), (-1, 0), (0, 0), (1, 0))
    }

    /// `z ↦ z + i`
    pub fn u() -> Self {
        Self::raw((1, 0), (0, 1), (0, 0), (1, 0))
    }

    /// `z ↦ z − i`
    pub fn u_inv() -> Self {
        Self::raw((1, 0), (0, -1), (0, 0), (1, 0))
    }

    /// `z ↦ −1/z`
    pub fn s() -> Self {
        Self::raw((0, 0), (-1, 0), (1, 0), (0, 0))
    }

    /// Translation by a Gaussian integer.
    pub fn translation(by: &GaussianInt) -> Self {
        MoebiusMap {
            a: GaussianInt::one(),
            b: by.clone(),
            c: GaussianInt::zero(),
            d: GaussianInt::one(),
        }
    }

    /// Multiplication by a unit.
    pub fn rotation(unit: &GaussianInt) -> Self {
        MoebiusMap {
            a: unit.clone(),
            b: GaussianInt::zero(),
            c: GaussianInt::zero(),
            d: GaussianInt::one(),
        }
    }

    pub fn det(&self) -> GaussianInt {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// `self ∘ other` as a matrix product.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: &(&self.a * &other.a) + &(&self.b * &other.c),
            b: &(&self.a * &other.b) + &(&self.b * &other.d),
            c: &(&self.c * &other.a) + &(&self.d * &other.c),
            d: &(&self.c * &other.b) + &(&self.d * &other.d),
        }
    }

    /// The adjugate `[[d, −b], [−c, a]]`, which is the inverse map.
    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Equality as maps: entries agree up to a common unit factor.
    pub fn same_map(&self, other: &MoebiusMap) -> bool {
        GaussianInt::units().iter().any(|u| {
            u * &other.a == self.a
                && u * &other.b == self.b
                && u * &other.c == self.c
                && u * &other.d == self.d
        })
    }

    /// Applies the map; `cz + d = 0` is a [`ArithError::Pole`].
    pub fn apply<T: Scalar>(&self, z: &Complex<T>) -> Result<Complex<T>, ArithError> {
        let num =
            Complex::<T>::from_gaussian(&self.a) * z.clone() + Complex::from_gaussian(&self.b);
        let den =
            Complex::<T>::from_gaussian(&self.c) * z.clone() + Complex::from_gaussian(&self.d);
        if den.is_zero() {
            return Err(ArithError::Pole);
        }
        num.checked_div(&den)
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::complex::{FloatComplex, RationalComplex};
    use crate::arith::scalar::ratio;

    #[test]
    fn s_is_an_involution() {
        let z = RationalComplex::from_ints(2, 3);
        let s = MoebiusMap::s();
        assert_eq!(s.apply(&s.apply(&z).unwrap()).unwrap(), z);
        assert!(s.compose(&s).same_map(&MoebiusMap::identity()));
        // S² = −I as a matrix
        assert_ne!(s.compose(&s), MoebiusMap::identity());
    }

    #[test]
    fn translation_examples() {
        let z = FloatComplex::new(3.0, 0.5);
        let w = MoebiusMap::t_inv().apply(&z).unwrap();
        assert_eq!(w, FloatComplex::new(2.0, 0.5));
        let tt = MoebiusMap::t().compose(&MoebiusMap::t());
        assert_eq!(tt, MoebiusMap::raw((1, 0), (2, 0), (0, 0), (1, 0)));
        let tu = MoebiusMap::t().compose(&MoebiusMap::u());
        assert_eq!(
            tu.apply(&RationalComplex::from_ints(0, 0)).unwrap(),
            RationalComplex::from_ints(1, 1)
        );
    }

    #[test]
    fn s_of_decimal_point_is_exact() {
        // −1/(3/10 + 1/10 i) by an independent division: −(a − bi)/(a² + b²)
        let z = RationalComplex::new(ratio(3, 10), ratio(1, 10));
        let n2 = ratio(9, 100) + ratio(1, 100);
        let oracle = RationalComplex::new(-ratio(3, 10) / n2.clone(), ratio(1, 10) / n2);
        let got = MoebiusMap::s().apply(&z).unwrap();
        assert_eq!(got, oracle);
        assert_eq!(got, RationalComplex::from_ints(-3, 1));
    }

    #[test]
    fn pole_is_reported() {
        let err = MoebiusMap::s().apply(&RationalComplex::from_ints(0, 0));
        assert_eq!(err, Err(ArithError::Pole));
    }

    #[test]
    fn non_unit_determinant_rejected() {
        let m = MoebiusMap::new(
            GaussianInt::new(2, 0),
            GaussianInt::zero(),
            GaussianInt::zero(),
            GaussianInt::one(),
        );
        assert!(m.is_err());
    }

    #[test]
    fn inverses_cancel() {
        for (m, inv) in [
            (MoebiusMap::t(), MoebiusMap::t_inv()),
            (MoebiusMap::u(), MoebiusMap::u_inv()),
            (MoebiusMap::s(), MoebiusMap::s()),
        ] {
            assert!(m.compose(&inv).same_map(&MoebiusMap::identity()));
            assert!(m.inverse().same_map(&inv));
        }
    }
}
