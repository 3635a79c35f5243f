//! Exact containment between single half-spaces (closed disks, closed disk
//! exteriors and closed half-planes).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::RationalComplex;

use super::region::HalfSpace;

/// A half-space `{Q ≤ 0}` sorted by shape.
#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    Empty,
    Plane,
    /// `|z − center|² ≤ r2`
    Disk {
        center: RationalComplex,
        r2: BigRational,
    },
    /// `|z − center|² ≥ r2`
    Exterior {
        center: RationalComplex,
        r2: BigRational,
    },
    /// `2Re(B̄z) + c ≤ 0`, `B ≠ 0`
    HalfPlane {
        b: RationalComplex,
        c: BigRational,
    },
}

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

impl Shape {
    pub fn of(h: &HalfSpace) -> Shape {
        let s = BigInt::from(h.side.orientation());
        let curve = &h.boundary;
        let a = curve.a() * &s;
        let b = RationalComplex::new(rat(&(&curve.b().re * &s)), rat(&(&curve.b().im * &s)));
        let c = rat(&(curve.c() * &s));
        if a.is_zero() {
            if b.is_zero() {
                return if c.is_positive() {
                    Shape::Empty
                } else {
                    Shape::Plane
                };
            }
            return Shape::HalfPlane { b, c };
        }
        let a = rat(&a);
        let center = RationalComplex::new(-b.re.clone() / &a, -b.im.clone() / &a);
        let r2 = (b.norm_sqr() - &a * &c) / (&a * &a);
        if a.is_positive() {
            if r2.is_negative() {
                Shape::Empty
            } else {
                Shape::Disk { center, r2 }
            }
        } else if r2.is_positive() {
            Shape::Exterior { center, r2 }
        } else {
            Shape::Plane
        }
    }
}

fn dist2(p: &RationalComplex, q: &RationalComplex) -> BigRational {
    (p.clone() - q.clone()).norm_sqr()
}

fn linear(b: &RationalComplex, c: &BigRational, z: &RationalComplex) -> BigRational {
    BigRational::from_integer(2.into()) * (&b.re * &z.re + &b.im * &z.im) + c
}

fn four() -> BigRational {
    BigRational::from_integer(4.into())
}

/// `|c1 − c2| + r1 ≤ r2`
fn disk_in_disk(
    c1: &RationalComplex,
    r1: &BigRational,
    c2: &RationalComplex,
    r2: &BigRational,
) -> bool {
    if r1 > r2 {
        return false;
    }
    let k = r1 + r2 - dist2(c1, c2);
    !k.is_negative() && four() * r1 * r2 <= &k * &k
}

/// Exact test of `inner ⊆ outer` for closed half-spaces.
pub fn halfspace_contains(outer: &HalfSpace, inner: &HalfSpace) -> bool {
    use Shape::*;
    match (Shape::of(inner), Shape::of(outer)) {
        (Empty, _) | (_, Plane) => true,
        (_, Empty) | (Plane, _) => false,
        (Disk { center: c1, r2: r1 }, Disk { center: c2, r2 }) => disk_in_disk(&c1, &r1, &c2, &r2),
        (Disk { center, r2 }, HalfPlane { b, c }) => {
            // max of the linear form over the disk is L(center) + 2|B|r
            let l = linear(&b, &c, &center);
            !l.is_positive() && four() * b.norm_sqr() * r2 <= &l * &l
        }
        (Disk { center: c1, r2: r1 }, Exterior { center: c2, r2 }) => {
            // |c1 − c2| ≥ r1 + r2
            let m = dist2(&c1, &c2) - &r1 - &r2;
            !m.is_negative() && four() * r1 * r2 <= &m * &m
        }
        (HalfPlane { b: b1, c: c1 }, HalfPlane { b: b2, c: c2 }) => {
            let dot = &b1.re * &b2.re + &b1.im * &b2.im;
            let cross = &b1.re * &b2.im - &b1.im * &b2.re;
            cross.is_zero() && dot.is_positive() && c2 * b1.norm_sqr() <= dot * c1
        }
        (HalfPlane { b, c }, Exterior { center, r2 }) => {
            let l = linear(&b, &c, &center);
            !l.is_negative() && four() * b.norm_sqr() * r2 <= &l * &l
        }
        (Exterior { center: c1, r2: r1 }, Exterior { center: c2, r2 }) => {
            disk_in_disk(&c2, &r2, &c1, &r1)
        }
        (HalfPlane { .. }, Disk { .. })
        | (Exterior { .. }, Disk { .. })
        | (Exterior { .. }, HalfPlane { .. }) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn disk(x: i64, y: i64, r2: BigRational) -> HalfSpace {
        HalfSpace::disk(&RationalComplex::from_ints(x, y), &r2)
    }

    #[test]
    fn disks() {
        let one = ratio(1, 1);
        assert!(halfspace_contains(
            &disk(0, 0, ratio(4, 1)),
            &disk(1, 0, one.clone())
        ));
        assert!(!halfspace_contains(
            &disk(0, 0, ratio(4, 1)),
            &disk(1, 1, one.clone())
        ));
        assert!(halfspace_contains(
            &disk(0, 0, one.clone()),
            &disk(0, 0, one.clone())
        ));
        assert!(!halfspace_contains(
            &disk(0, 0, one.clone()),
            &disk(0, 0, ratio(4, 1))
        ));
    }

    #[test]
    fn disk_and_half_plane() {
        let one = ratio(1, 1);
        let left = HalfSpace::re_le(ratio(-1, 2));
        assert!(halfspace_contains(&left, &disk(-2, 0, one.clone())));
        assert!(!halfspace_contains(&left, &disk(-1, 0, one.clone())));
        assert!(!halfspace_contains(&disk(-1, 0, one.clone()), &left));
        assert!(halfspace_contains(&HalfSpace::re_le(ratio(0, 1)), &left));
        assert!(!halfspace_contains(&left, &HalfSpace::re_le(ratio(0, 1))));
        assert!(!halfspace_contains(&HalfSpace::im_le(ratio(0, 1)), &left));
    }

    #[test]
    fn exteriors() {
        let one = ratio(1, 1);
        let ext = HalfSpace::disk_exterior(&RationalComplex::from_ints(0, 0), &one);
        assert!(halfspace_contains(&ext, &disk(3, 0, one.clone())));
        assert!(halfspace_contains(&ext, &disk(2, 0, one.clone())));
        assert!(!halfspace_contains(&ext, &disk(1, 0, one.clone())));
        assert!(halfspace_contains(&ext, &HalfSpace::re_ge(ratio(1, 1))));
        assert!(!halfspace_contains(&ext, &HalfSpace::re_ge(ratio(1, 2))));
        let big = HalfSpace::disk_exterior(&RationalComplex::from_ints(0, 0), &ratio(1, 4));
        assert!(halfspace_contains(&big, &ext));
        assert!(!halfspace_contains(&ext, &big));
    }
}
