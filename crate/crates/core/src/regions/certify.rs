//! Exact proof of `cell ⊆ region` by recursive subdivision of the plane
//! into rational boxes, some of them unbounded.
//!
//! Each defining form `A(x²+y²) + 2(b₁x + b₂y) + C` is a sum of a function
//! of `x` and a function of `y`, so its exact range over a box is the sum
//! of two one-dimensional quadratic ranges. A box is settled once some
//! constraint of the inner cell is violated on all of it, or once one cell
//! of the outer region holds on all of it.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::RationalComplex;

use super::region::{Cell, HalfSpace, Region};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Ext {
    NegInf,
    Fin(BigRational),
    PosInf,
}

impl Ext {
    fn add(&self, o: &Ext) -> Ext {
        match (self, o) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a + b),
            (Ext::NegInf, _) | (_, Ext::NegInf) => Ext::NegInf,
            _ => Ext::PosInf,
        }
    }
}

type Interval = (Ext, Ext);

#[derive(Clone, Debug)]
struct Rbox {
    x: Interval,
    y: Interval,
}

/// Range of `a·t² + 2b·t` for `t` in `iv`.
fn quad_range(a: &BigRational, b: &BigRational, iv: &Interval) -> Interval {
    let two = BigRational::from_integer(2.into());
    let at = |e: &Ext| -> Ext {
        match e {
            Ext::Fin(t) => Ext::Fin(a * t * t + &two * b * t),
            inf => {
                let dir = if *inf == Ext::PosInf { 1 } else { -1 };
                let s = if !a.is_zero() {
                    if a.is_positive() {
                        1
                    } else {
                        -1
                    }
                } else if b.is_zero() {
                    0
                } else if b.is_positive() {
                    dir
                } else {
                    -dir
                };
                match s {
                    1 => Ext::PosInf,
                    -1 => Ext::NegInf,
                    _ => Ext::Fin(BigRational::zero()),
                }
            }
        }
    };
    let mut vals = vec![at(&iv.0), at(&iv.1)];
    if !a.is_zero() {
        let v = Ext::Fin(-b / a);
        if iv.0 <= v && v <= iv.1 {
            vals.push(Ext::Fin(-(b * b) / a));
        }
    }
    let lo = vals.iter().min().cloned().unwrap();
    let hi = vals.into_iter().max().unwrap();
    (lo, hi)
}

/// Range of the oriented form (`≤ 0` inside) over a box.
fn form_range(h: &HalfSpace, bx: &Rbox) -> Interval {
    let s = BigInt::from(h.side.orientation());
    let c = &h.boundary;
    let q = |n: &BigInt| BigRational::from_integer(n * &s);
    let a = q(c.a());
    let fx = quad_range(&a, &q(&c.b().re), &bx.x);
    let gy = quad_range(&a, &q(&c.b().im), &bx.y);
    let k = Ext::Fin(q(c.c()));
    (fx.0.add(&gy.0).add(&k), fx.1.add(&gy.1).add(&k))
}

fn holds_on(h: &HalfSpace, bx: &Rbox) -> bool {
    form_range(h, bx).1 <= Ext::Fin(BigRational::zero())
}

fn fails_on(h: &HalfSpace, bx: &Rbox) -> bool {
    form_range(h, bx).0 > Ext::Fin(BigRational::zero())
}

fn split(iv: &Interval) -> [Interval; 2] {
    let one = BigRational::one();
    let m = match iv {
        (Ext::Fin(a), Ext::Fin(b)) => (a + b) / BigRational::from_integer(2.into()),
        (Ext::NegInf, Ext::Fin(b)) => b - (b.abs() + &one),
        (Ext::Fin(a), Ext::PosInf) => a + (a.abs() + &one),
        _ => BigRational::zero(),
    };
    [
        (iv.0.clone(), Ext::Fin(m.clone())),
        (Ext::Fin(m), iv.1.clone()),
    ]
}

fn center(bx: &Rbox) -> Option<RationalComplex> {
    match (&bx.x, &bx.y) {
        ((Ext::Fin(a), Ext::Fin(b)), (Ext::Fin(c), Ext::Fin(d))) => {
            let two = BigRational::from_integer(2.into());
            Some(RationalComplex::new((a + b) / &two, (c + d) / two))
        }
        _ => None,
    }
}

/// Outcome of [`certify_subset`].
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// The plane was covered by this many settled boxes.
    Proven { boxes: usize },
    /// An exact point of the inner cell outside the outer region.
    Refuted { witness: RationalComplex },
    /// The box budget ran out.
    Undecided { boxes: usize },
}

impl Certificate {
    pub fn is_proven(&self) -> bool {
        matches!(self, Certificate::Proven { .. })
    }
}

/// Exact decision procedure for `inner ⊆ outer` on closed sets, complete
/// whenever the inclusion holds with a positive margin.
pub fn certify_subset(inner: &Cell, outer: &Region, max_boxes: usize) -> Certificate {
    let mut queue = VecDeque::from([Rbox {
        x: (Ext::NegInf, Ext::PosInf),
        y: (Ext::NegInf, Ext::PosInf),
    }]);
    let mut settled = 0usize;
    let mut visited = 0usize;
    // breadth first, so that refutations are not starved by a boundary
    // that touches the outer region
    while let Some(bx) = queue.pop_front() {
        visited += 1;
        if visited > max_boxes {
            return Certificate::Undecided { boxes: visited };
        }
        if inner.constraints.iter().any(|h| fails_on(h, &bx))
            || outer
                .cells
                .iter()
                .any(|c| c.constraints.iter().all(|h| holds_on(h, &bx)))
        {
            settled += 1;
            continue;
        }
        if let Some(z) = center(&bx) {
            if inner.contains_exact(&z) && !outer.contains_exact(&z) {
                return Certificate::Refuted { witness: z };
            }
        }
        for x in split(&bx.x) {
            for y in split(&bx.y) {
                queue.push_back(Rbox { x: x.clone(), y });
            }
        }
    }
    Certificate::Proven { boxes: settled }
}

/// [`certify_subset`] for every cell of `inner`.
pub fn certify_region_subset(inner: &Region, outer: &Region, max_boxes: usize) -> Certificate {
    let mut total = 0;
    for cell in &inner.cells {
        match certify_subset(cell, outer, max_boxes) {
            Certificate::Proven { boxes } => total += boxes,
            other => return other,
        }
    }
    Certificate::Proven { boxes: total }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn small_disk_in_big_disk() {
        let inner = Cell::from(HalfSpace::disk(
            &RationalComplex::from_ints(1, 0),
            &ratio(1, 4),
        ));
        let outer = Region::from(HalfSpace::disk(
            &RationalComplex::from_ints(0, 0),
            &ratio(4, 1),
        ));
        assert!(certify_subset(&inner, &outer, 100_000).is_proven());
    }

    #[test]
    fn unbounded_strip_in_union_of_half_planes() {
        // {0 ≤ Im ≤ 1} ⊆ {Im ≥ −1/2} ∪ {Re ≤ 0}
        let inner = Cell::new(vec![
            HalfSpace::im_ge(ratio(0, 1)),
            HalfSpace::im_le(ratio(1, 1)),
        ]);
        let outer = Region::from(HalfSpace::im_ge(ratio(-1, 2)))
            .union(&Region::from(HalfSpace::re_le(ratio(0, 1))));
        assert!(certify_subset(&inner, &outer, 100_000).is_proven());
    }

    #[test]
    fn refutation_carries_exact_witness() {
        let inner = Cell::from(HalfSpace::disk(
            &RationalComplex::from_ints(0, 0),
            &ratio(1, 1),
        ));
        let outer = Region::from(HalfSpace::re_le(ratio(1, 2)));
        match certify_subset(&inner, &outer, 100_000) {
            Certificate::Refuted { witness } => {
                assert!(inner.contains_exact(&witness));
                assert!(!outer.contains_exact(&witness));
            }
            c => panic!("expected refutation, got {c:?}"),
        }
    }
}
