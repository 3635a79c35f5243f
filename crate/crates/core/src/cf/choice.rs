use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{ArithError, Complex, GaussianInt, Scalar};
use crate::regions::{Carrier, Region};

use super::CfError;

/// A rule `c: ℂ → ℤ[i]` with `c(0) = 0` and `|z − c(z)| ≤ 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum ChoiceFunction {
    /// Nearest Gaussian integer, ties rounded toward −∞ in each coordinate.
    Hurwitz,
    /// Translate toward the origin until the unit 1-norm ball is reached.
    Diamond,
    /// As `Diamond`, with the given closed fundamental set.
    CustomRegion(Region),
}

impl ChoiceFunction {
    pub fn name(&self) -> &'static str {
        match self {
            ChoiceFunction::Hurwitz => "hurwitz",
            ChoiceFunction::Diamond => "diamond",
            ChoiceFunction::CustomRegion(_) => "custom",
        }
    }

    pub fn choose<T: Carrier>(&self, z: &Complex<T>) -> Result<GaussianInt, CfError> {
        match self {
            ChoiceFunction::Hurwitz => Ok(choice_hurwitz(z)),
            ChoiceFunction::Diamond => Ok(choice_diamond(z)?.0),
            ChoiceFunction::CustomRegion(phi) => Ok(iterate_into(z, |w| T::in_region(phi, w))?.0),
        }
    }
}

/// Nearest Gaussian integer; half-integer coordinates round down.
pub fn choice_hurwitz<T: Scalar>(z: &Complex<T>) -> GaussianInt {
    let half = T::half();
    GaussianInt::new(
        (z.re.clone() - half.clone()).ceil(),
        (z.im.clone() - half).ceil(),
    )
}

/// The closed unit 1-norm ball `|x| + |y| ≤ 1`, with the carrier's
/// tolerance.
pub fn phi_contains<T: Scalar>(z: &Complex<T>) -> bool {
    z.norm_l1() <= T::one() + T::tolerance()
}

/// One unit step toward the origin, chosen by which quarter-plane sector
/// `arg z` falls in: `[−π/4, π/4)` subtracts 1, `[π/4, 3π/4)` subtracts
/// `i`, `[3π/4, 5π/4)` adds 1 and `[−3π/4, −π/4)` adds `i`.
///
/// Sectors are decided by exact comparisons, so no angle is computed.
/// Returns the new point and the Gaussian integer that was subtracted.
pub fn f_empty<T: Scalar>(z: &Complex<T>) -> Result<(Complex<T>, GaussianInt), ArithError> {
    let (x, y) = (&z.re, &z.im);
    let zero = T::zero();
    let step = if *x > zero && -x.clone() <= *y && y < x {
        GaussianInt::new(1, 0)
    } else if *y > zero && -y.clone() < *x && x <= y {
        GaussianInt::new(0, 1)
    } else if *x < zero && x < y && *y <= -x.clone() {
        GaussianInt::new(-1, 0)
    } else if *y < zero && y <= x && *x < -y.clone() {
        GaussianInt::new(0, -1)
    } else {
        return Err(ArithError::Origin);
    };
    Ok((z.sub_gaussian(&step), step))
}

fn budget<T: Scalar>(z: &Complex<T>) -> usize {
    let c = |t: &T| t.abs().ceil().to_usize().unwrap_or(usize::MAX / 4);
    c(&z.re) + c(&z.im) + 2
}

/// Applies [`f_empty`] until `inside` holds. Returns the accumulated digit
/// and the number of steps.
fn iterate_into<T: Scalar>(
    z: &Complex<T>,
    inside: impl Fn(&Complex<T>) -> bool,
) -> Result<(GaussianInt, usize), CfError> {
    let limit = budget(z);
    let mut w = z.clone();
    let mut digit = GaussianInt::zero();
    let mut steps = 0;
    while !inside(&w) {
        if steps == limit {
            return Err(CfError::NonTermination { steps });
        }
        let (next, step) = f_empty(&w)?;
        digit = &digit + &step;
        w = next;
        steps += 1;
    }
    Ok((digit, steps))
}

/// The diamond choice `c♦`, with the number of [`f_empty`] steps taken.
pub fn choice_diamond<T: Scalar>(z: &Complex<T>) -> Result<(GaussianInt, usize), CfError> {
    iterate_into(z, phi_contains)
}

/// `⌈|Re z|⌉ + ⌈|Im z|⌉`, the bound on the number of steps `c♦` needs.
pub fn diamond_step_bound<T: Scalar>(z: &Complex<T>) -> BigInt {
    z.re.abs().ceil() + z.im.abs().ceil()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ratio, FloatComplex, RationalComplex};

    fn fc(x: f64, y: f64) -> FloatComplex {
        FloatComplex::new(x, y)
    }

    #[test]
    fn hurwitz_examples() {
        assert_eq!(choice_hurwitz(&fc(0.0, 0.0)), GaussianInt::zero());
        assert_eq!(choice_hurwitz(&fc(0.6, 0.7)), GaussianInt::new(1, 1));
        assert_eq!(choice_hurwitz(&fc(0.5, 0.5)), GaussianInt::zero());
        assert_eq!(choice_hurwitz(&fc(-0.5, 1.5)), GaussianInt::new(-1, 1));
        let z = RationalComplex::new(ratio(5, 2), ratio(-7, 2));
        assert_eq!(choice_hurwitz(&z), GaussianInt::new(2, -4));
    }

    #[test]
    fn f_empty_examples() {
        let (w, _) = f_empty(&fc(2.3, 0.1)).unwrap();
        assert!((w.re - 1.3).abs() < 1e-15 && w.im == 0.1);
        assert_eq!(f_empty(&fc(1.0, 1.5)).unwrap().0, fc(1.0, 0.5));
        assert_eq!(f_empty(&fc(-3.0, 0.0)).unwrap().0, fc(-2.0, 0.0));
        assert_eq!(f_empty(&fc(0.0, 0.0)), Err(ArithError::Origin));
    }

    #[test]
    fn f_empty_sector_edges_are_half_open() {
        let q = RationalComplex::from_ints;
        // arg = π/4 subtracts i, arg = −π/4 subtracts 1
        assert_eq!(f_empty(&q(1, 1)).unwrap().1, GaussianInt::new(0, 1));
        assert_eq!(f_empty(&q(1, -1)).unwrap().1, GaussianInt::new(1, 0));
        // arg = 3π/4 adds 1, arg = −3π/4 adds i
        assert_eq!(f_empty(&q(-1, 1)).unwrap().1, GaussianInt::new(-1, 0));
        assert_eq!(f_empty(&q(-1, -1)).unwrap().1, GaussianInt::new(0, -1));
    }

    #[test]
    fn diamond_examples() {
        assert_eq!(
            choice_diamond(&fc(0.3, -0.2)).unwrap().0,
            GaussianInt::zero()
        );
        assert_eq!(
            choice_diamond(&fc(2.3, 0.1)).unwrap().0,
            GaussianInt::new(2, 0)
        );
        assert_eq!(
            choice_diamond(&fc(1.0, 1.5)).unwrap(),
            (GaussianInt::new(1, 1), 2)
        );
        assert!(phi_contains(&fc(0.6, 0.2)));
        assert!(!phi_contains(&fc(0.8, 0.3)));
    }
}
