use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{FloatComplex, RationalComplex};

/// The exact dyadic point `(x + iy) / 2^shift`.
///
/// Sampling works on these so that every membership test is an exact
/// integer sign evaluation, while the same point is also exactly
/// representable as a float.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
    pub shift: u32,
}

impl LatticePoint {
    /// Nearest point of the `2^-shift` lattice.
    pub fn from_f64(z: &FloatComplex, shift: u32) -> Self {
        let s = (shift as f64).exp2();
        LatticePoint {
            x: (z.re * s).round() as i64,
            y: (z.im * s).round() as i64,
            shift,
        }
    }

    pub fn to_rational(&self) -> RationalComplex {
        let d = BigInt::one() << self.shift;
        RationalComplex::new(
            BigRational::new(self.x.into(), d.clone()),
            BigRational::new(self.y.into(), d),
        )
    }

    pub fn to_float(&self) -> FloatComplex {
        let s = (-(self.shift as f64)).exp2();
        FloatComplex::new(self.x as f64 * s, self.y as f64 * s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn round_trips() {
        let p = LatticePoint::from_f64(&FloatComplex::new(0.25, -1.125), 30);
        assert_eq!(
            p.to_rational(),
            RationalComplex::new(ratio(1, 4), ratio(-9, 8))
        );
        assert_eq!(p.to_float(), FloatComplex::new(0.25, -1.125));
    }
}
