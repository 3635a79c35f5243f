use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{FloatComplex, RationalComplex};

use super::circline::Circline;
use super::lattice::LatticePoint;
use super::region::Region;
use super::RegionError;

/// Lattice resolution for grid and random points.
const COARSE_SHIFT: u32 = 30;
/// Lattice resolution for points placed next to a boundary.
const FINE_SHIFT: u32 = 40;

/// An axis-parallel rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Rect {
    pub const fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Rect {
            x_min,
            x_max,
            y_min,
            y_max,
        }
    }

    /// `[−r, r]²`
    pub const fn square(r: f64) -> Self {
        Rect::new(-r, r, -r, r)
    }

    pub fn contains(&self, z: &FloatComplex) -> bool {
        (self.x_min..=self.x_max).contains(&z.re) && (self.y_min..=self.y_max).contains(&z.im)
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn uniform<R: Rng>(&self, rng: &mut R) -> FloatComplex {
        FloatComplex::new(
            rng.gen_range(self.x_min..self.x_max),
            rng.gen_range(self.y_min..self.y_max),
        )
    }
}

/// Parameters of the sampled equality test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EqualityOptions {
    pub rect: Rect,
    /// Cell-centred grid of `grid × grid` points.
    pub grid: usize,
    /// Additional seeded uniform points.
    pub random: usize,
    pub seed: u64,
    /// Smallest offset used for the boundary-hugging points.
    pub epsilon: f64,
    /// Points per boundary curve for the boundary-hugging pass.
    pub boundary_points: usize,
}

impl Default for EqualityOptions {
    fn default() -> Self {
        EqualityOptions {
            rect: Rect::square(4.0),
            grid: 600,
            random: 10_000,
            seed: 1,
            epsilon: 1e-9,
            boundary_points: 512,
        }
    }
}

impl EqualityOptions {
    /// A cheaper configuration for unit tests.
    pub fn quick() -> Self {
        EqualityOptions {
            grid: 120,
            random: 2_000,
            boundary_points: 128,
            ..Default::default()
        }
    }
}

/// Outcome of [`region_equal`].
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// Membership agreed at every tested point off the boundaries.
    Equal {
        points: usize,
    },
    /// An exact point in exactly one of the two regions.
    Differ {
        witness: RationalComplex,
        in_first: bool,
    },
    Inconclusive {
        reason: String,
    },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal { .. })
    }
}

/// The deterministic test points for a pair of regions: grid, then seeded
/// random points, then points hugging each boundary curve on both sides.
pub fn test_points(curves: &[Circline], opts: &EqualityOptions) -> Vec<LatticePoint> {
    let r = &opts.rect;
    let mut pts = Vec::with_capacity(opts.grid * opts.grid + opts.random);
    let n = opts.grid as f64;
    for i in 0..opts.grid {
        let x = r.x_min + (i as f64 + 0.5) * r.width() / n;
        for j in 0..opts.grid {
            let y = r.y_min + (j as f64 + 0.5) * r.height() / n;
            pts.push(LatticePoint::from_f64(
                &FloatComplex::new(x, y),
                COARSE_SHIFT,
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random {
        pts.push(LatticePoint::from_f64(&r.uniform(&mut rng), COARSE_SHIFT));
    }
    let offsets = [opts.epsilon, 1e-6, 1e-3];
    for curve in curves {
        for (p, normal) in curve_samples(curve, r, opts.boundary_points) {
            for d in offsets {
                for s in [-d, d] {
                    let q = FloatComplex::new(p.re + s * normal.re, p.im + s * normal.im);
                    if r.contains(&q) {
                        pts.push(LatticePoint::from_f64(&q, FINE_SHIFT));
                    }
                }
            }
        }
    }
    pts
}

/// Points on a curve inside `rect`, with unit normals.
fn curve_samples(curve: &Circline, rect: &Rect, m: usize) -> Vec<(FloatComplex, FloatComplex)> {
    let (a, br, bi, c) = curve.coeffs_f64();
    let mut out = Vec::with_capacity(m);
    if a == 0.0 {
        let nb = br.hypot(bi);
        let normal = FloatComplex::new(br / nb, bi / nb);
        let base = -c / (2.0 * nb);
        let p0 = FloatComplex::new(base * normal.re, base * normal.im);
        let dir = FloatComplex::new(-normal.im, normal.re);
        let half = p0.abs() + rect.width().hypot(rect.height());
        for j in 0..m {
            let s = -half + (j as f64 + 0.5) * 2.0 * half / m as f64;
            let p = FloatComplex::new(p0.re + s * dir.re, p0.im + s * dir.im);
            if rect.contains(&p) {
                out.push((p, normal.clone()));
            }
        }
    } else {
        let r2 = (br * br + bi * bi - a * c) / (a * a);
        if r2 <= 0.0 {
            return out;
        }
        let (cx, cy, r) = (-br / a, -bi / a, r2.sqrt());
        for j in 0..m {
            let t = TAU * (j as f64 + 0.5) / m as f64;
            let normal = FloatComplex::new(t.cos(), t.sin());
            let p = FloatComplex::new(cx + r * normal.re, cy + r * normal.im);
            if rect.contains(&p) {
                out.push((p, normal));
            }
        }
    }
    out
}

/// Sampled equality of two closed regions.
///
/// Membership is compared exactly at dyadic test points; points lying
/// exactly on a boundary curve of either region are skipped. A `Differ`
/// verdict is exact. `Equal` means no disagreement at the configured density.
pub fn region_equal(r1: &Region, r2: &Region, opts: &EqualityOptions) -> Verdict {
    let mut curves = r1.boundaries();
    curves.extend(r2.boundaries());
    curves.sort();
    curves.dedup();
    let pts = test_points(&curves, opts);
    let on_boundary = |p: &LatticePoint| curves.iter().any(|c| c.sign_at(p).is_eq());
    let diff = pts.par_iter().find_first(|p| {
        let a = r1.contains_lattice(p);
        a != r2.contains_lattice(p) && !on_boundary(p)
    });
    if let Some(p) = diff {
        return Verdict::Differ {
            witness: p.to_rational(),
            in_first: r1.contains_lattice(p),
        };
    }
    let valid = pts.par_iter().filter(|p| !on_boundary(p)).count();
    if valid * 2 < pts.len() || valid == 0 {
        return Verdict::Inconclusive {
            reason: format!(
                "only {valid} of {} test points lie off the boundaries",
                pts.len()
            ),
        };
    }
    Verdict::Equal { points: valid }
}

/// Seeded interior samples of `region ∩ rect`.
///
/// Every returned point is dyadic, lies in the region exactly and is more
/// than `eps` (in float distance) from every boundary curve of the cell that
/// accepted it. Up to `max(1000·n, 100000)` candidates are drawn.
pub fn region_sample(
    region: &Region,
    rect: &Rect,
    n: usize,
    seed: u64,
    eps: f64,
) -> Result<Vec<RationalComplex>, RegionError> {
    let budget = (1000 * n).max(100_000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    for _ in 0..budget {
        if out.len() == n {
            break;
        }
        let p = LatticePoint::from_f64(&rect.uniform(&mut rng), COARSE_SHIFT);
        let z = p.to_float();
        if region.interior_f64(&z, eps) && region.contains_lattice(&p) {
            out.push(p.to_rational());
        }
    }
    if out.len() < n {
        return Err(RegionError::EmptyRegionInBox {
            found: out.len(),
            attempts: budget,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::regions::HalfSpace;

    #[test]
    fn equal_and_differ() {
        let a = Region::from(HalfSpace::re_le(ratio(1, 2)));
        let b = Region::from(HalfSpace::re_le(ratio(1, 2) + ratio(1, 10_000_000)));
        assert!(region_equal(&a, &a, &EqualityOptions::quick()).is_equal());
        match region_equal(&a, &b, &EqualityOptions::quick()) {
            Verdict::Differ { witness, in_first } => {
                assert!(!in_first);
                assert!(b.contains_exact(&witness) && !a.contains_exact(&witness));
            }
            v => panic!("thin slab missed: {v:?}"),
        }
    }

    #[test]
    fn samples_are_interior_and_deterministic() {
        let r = Region::from(HalfSpace::disk(
            &RationalComplex::from_ints(0, 0),
            &ratio(1, 1),
        ));
        let s1 = region_sample(&r, &Rect::square(1.0), 50, 3, 1e-9).unwrap();
        let s2 = region_sample(&r, &Rect::square(1.0), 50, 3, 1e-9).unwrap();
        assert_eq!(s1, s2);
        assert!(s1.iter().all(|z| r.contains_exact(z)));
        assert!(matches!(
            region_sample(&Region::empty(), &Rect::square(1.0), 1, 0, 1e-9),
            Err(RegionError::EmptyRegionInBox { .. })
        ));
    }
}
