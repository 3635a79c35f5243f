use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{DihedralElement, FloatComplex, GaussianInt, MoebiusMap, RationalComplex};

use super::lattice::LatticePoint;
use super::RegionError;

/// A line or circle `A·|z|² + 2·Re(B̄·z) + C = 0`.
///
/// Coefficients are stored as coprime integers with the first nonzero of
/// `(A, Re B, Im B, C)` positive, so two circlines are the same curve iff
/// they compare equal. Radicals never appear: a circle of radius `1/√2` is
/// stored through its squared form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circline {
    a: BigInt,
    b: GaussianInt,
    c: BigInt,
}

/// Normalisation result: the curve plus the sign (±1) the defining form was
/// multiplied by to reach normal form.
pub(crate) struct Normalized {
    pub curve: Circline,
    pub flipped: bool,
}

impl Circline {
    pub(crate) fn normalize_ints(
        a: BigInt,
        b: GaussianInt,
        c: BigInt,
    ) -> Result<Normalized, RegionError> {
        let g = a.gcd(&b.re).gcd(&b.im).gcd(&c);
        if g.is_zero() {
            return Err(RegionError::DegenerateCircline);
        }
        let (mut a, mut b, mut c) = (a / &g, GaussianInt::new(&b.re / &g, &b.im / &g), c / &g);
        let lead = [&a, &b.re, &b.im, &c]
            .into_iter()
            .find(|x| !x.is_zero())
            .map(|x| x.is_negative())
            .unwrap_or(false);
        if lead {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Normalized {
            curve: Circline { a, b, c },
            flipped: lead,
        })
    }

    pub(crate) fn normalize_rational(
        a: &BigRational,
        b: &RationalComplex,
        c: &BigRational,
    ) -> Result<Normalized, RegionError> {
        let l = [a, &b.re, &b.im, c]
            .into_iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scale = |x: &BigRational| (x * BigRational::from_integer(l.clone())).to_integer();
        Self::normalize_ints(
            scale(a),
            GaussianInt::new(scale(&b.re), scale(&b.im)),
            scale(c),
        )
    }

    /// The curve `A|z|² + 2Re(B̄z) + C = 0` from exact coefficients.
    pub fn new(a: BigRational, b: RationalComplex, c: BigRational) -> Result<Self, RegionError> {
        Ok(Self::normalize_rational(&a, &b, &c)?.curve)
    }

    /// The line `p·x + q·y + r = 0`.
    pub fn line(p: BigRational, q: BigRational, r: BigRational) -> Result<Self, RegionError> {
        let half = BigRational::new(1.into(), 2.into());
        Self::new(
            BigRational::zero(),
            RationalComplex::new(p * &half, q * half),
            r,
        )
    }

    /// The circle `|z − center|² = radius_sq`.
    pub fn circle(center: &RationalComplex, radius_sq: &BigRational) -> Result<Self, RegionError> {
        Self::new(
            BigRational::one(),
            RationalComplex::new(-center.re.clone(), -center.im.clone()),
            center.re.clone() * center.re.clone() + center.im.clone() * center.im.clone()
                - radius_sq,
        )
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// The complex coefficient `B` (so the linear part is `2Re(B̄z)`).
    pub fn b(&self) -> &GaussianInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn is_line(&self) -> bool {
        self.a.is_zero()
    }

    /// Center `−B/A` of a circle; `None` for lines.
    pub fn center(&self) -> Option<RationalComplex> {
        if self.is_line() {
            return None;
        }
        let a = BigRational::from_integer(self.a.clone());
        Some(RationalComplex::new(
            BigRational::from_integer(-&self.b.re) / &a,
            BigRational::from_integer(-&self.b.im) / a,
        ))
    }

    /// `(|B|² − AC)/A²` for circles; negative for circles without real
    /// points.
    pub fn radius_sq(&self) -> Option<BigRational> {
        if self.is_line() {
            return None;
        }
        let num = self.b.norm() - &self.a * &self.c;
        Some(BigRational::new(num, &self.a * &self.a))
    }

    /// `|B|² − AC`: positive for real curves.
    pub fn discriminant(&self) -> BigInt {
        self.b.norm() - &self.a * &self.c
    }

    /// Exact value of the defining form.
    pub fn eval_exact(&self, z: &RationalComplex) -> BigRational {
        let a = BigRational::from_integer(self.a.clone());
        let two = BigRational::from_integer(2.into());
        let br = BigRational::from_integer(self.b.re.clone());
        let bi = BigRational::from_integer(self.b.im.clone());
        let n2 = &z.re * &z.re + &z.im * &z.im;
        a * n2 + two * (br * &z.re + bi * &z.im) + BigRational::from_integer(self.c.clone())
    }

    /// Exact sign of the defining form at a dyadic lattice point.
    pub fn sign_at(&self, p: &LatticePoint) -> Ordering {
        if let Some(s) = self.sign_at_fast(p) {
            return s;
        }
        let (x, y) = (BigInt::from(p.x), BigInt::from(p.y));
        let d = BigInt::one() << p.shift;
        let v = &self.a * (&x * &x + &y * &y)
            + BigInt::from(2) * &d * (&self.b.re * &x + &self.b.im * &y)
            + &self.c * &d * &d;
        v.sign_ordering()
    }

    fn sign_at_fast(&self, p: &LatticePoint) -> Option<Ordering> {
        let a = self.a.to_i128()?;
        let br = self.b.re.to_i128()?;
        let bi = self.b.im.to_i128()?;
        let c = self.c.to_i128()?;
        let (x, y) = (p.x as i128, p.y as i128);
        let d: i128 = 1i128.checked_shl(p.shift)?;
        let n2 = x.checked_mul(x)?.checked_add(y.checked_mul(y)?)?;
        let quad = a.checked_mul(n2)?;
        let lin = br
            .checked_mul(x)?
            .checked_add(bi.checked_mul(y)?)?
            .checked_mul(d)?
            .checked_mul(2)?;
        let cst = c.checked_mul(d)?.checked_mul(d)?;
        Some(quad.checked_add(lin)?.checked_add(cst)?.cmp(&0))
    }

    /// Float value of the defining form.
    pub fn eval_f64(&self, z: &FloatComplex) -> f64 {
        let (a, br, bi, c) = self.coeffs_f64();
        a * (z.re * z.re + z.im * z.im) + 2.0 * (br * z.re + bi * z.im) + c
    }

    pub fn coeffs_f64(&self) -> (f64, f64, f64, f64) {
        let f = |x: &BigInt| x.to_f64().unwrap_or(f64::NAN);
        (f(&self.a), f(&self.b.re), f(&self.b.im), f(&self.c))
    }

    /// Geometric signed distance to the curve, with the sign of the form.
    pub fn signed_distance_f64(&self, z: &FloatComplex) -> f64 {
        let (a, br, bi, c) = self.coeffs_f64();
        if a == 0.0 {
            return self.eval_f64(z) / (2.0 * br.hypot(bi));
        }
        let (cx, cy) = (-br / a, -bi / a);
        let r2 = (br * br + bi * bi - a * c) / (a * a);
        let d = (z.re - cx).hypot(z.im - cy);
        let s = a.signum();
        if r2 < 0.0 {
            return s * (d + 1.0);
        }
        s * (d - r2.sqrt())
    }

    /// Pushforward under a Möbius map, with whether the defining form's sign
    /// was flipped by normalisation.
    ///
    /// If `Q` is the form of `self`, the image form is `Q'(w) = |λ|²·Q(z)` for
    /// `z = m⁻¹(w)` and some `λ ≠ 0`, obtained as the Hermitian congruence
    /// `N*HN` with `N` the adjugate of `m`. The sign of the form is therefore
    /// carried across unchanged, which fixes half-space sides.
    pub(crate) fn moebius_image_signed(&self, m: &MoebiusMap) -> Normalized {
        let n = m.inverse();
        let (n11, n12, n21, n22) = (&n.a, &n.b, &n.c, &n.d);
        let a = GaussianInt::new(self.a.clone(), 0);
        let c = GaussianInt::new(self.c.clone(), 0);
        let b = &self.b;
        let bc = b.conj();
        let quad = |p: &GaussianInt, q: &GaussianInt| -> BigInt {
            // A|p|² + 2Re(p̄ B q) + C|q|²
            &self.a * p.norm() + BigInt::from(2) * (&(&p.conj() * b) * q).re + &self.c * q.norm()
        };
        let a2 = quad(n11, n21);
        let c2 = quad(n12, n22);
        let b2 = &(&(&(&a * &n11.conj()) * n12) + &(&(&n11.conj() * b) * n22))
            + &(&(&(&n21.conj() * &bc) * n12) + &(&(&c * &n21.conj()) * n22));
        Self::normalize_ints(a2, b2, c2).expect("congruence by an invertible matrix")
    }

    pub fn moebius_image(&self, m: &MoebiusMap) -> Circline {
        self.moebius_image_signed(m).curve
    }

    /// Image under `z ↦ z̄`: `B` becomes `B̄`.
    pub(crate) fn conj_image_signed(&self) -> Normalized {
        Self::normalize_ints(self.a.clone(), self.b.conj(), self.c.clone()).expect("nondegenerate")
    }

    pub(crate) fn dihedral_image_signed(&self, g: DihedralElement) -> Normalized {
        let unit = &GaussianInt::units()[g.rotation() as usize];
        let mut out = self.moebius_image_signed(&MoebiusMap::rotation(unit));
        if g.is_reflection() {
            let conj = out.curve.conj_image_signed();
            let neg = conj
                .curve
                .moebius_image_signed(&MoebiusMap::rotation(&GaussianInt::new(-1, 0)));
            out = Normalized {
                curve: neg.curve,
                flipped: out.flipped ^ conj.flipped ^ neg.flipped,
            };
        }
        out
    }

    pub fn dihedral_image(&self, g: DihedralElement) -> Circline {
        self.dihedral_image_signed(g).curve
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl fmt::Display for Circline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}|z|^2 + 2Re(conj({})z) + {} = 0",
            self.a, self.b, self.c
        )
    }
}
