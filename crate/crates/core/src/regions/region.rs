use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{Complex, DihedralElement, FloatComplex, MoebiusMap, RationalComplex};

use super::circline::{Circline, Normalized};
use super::lattice::LatticePoint;
use super::RegionError;

/// Which sign of the defining form a half-space keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `form ≤ 0`
    Le,
    /// `form ≥ 0`
    Ge,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Le => Side::Ge,
            Side::Ge => Side::Le,
        }
    }

    fn flip_if(self, cond: bool) -> Side {
        if cond {
            self.flip()
        } else {
            self
        }
    }

    /// Sign multiplier turning the form into one that is `≤ 0` inside.
    pub(crate) fn orientation(self) -> i32 {
        match self {
            Side::Le => 1,
            Side::Ge => -1,
        }
    }

    fn accepts(self, sign: Ordering) -> bool {
        match self {
            Side::Le => sign != Ordering::Greater,
            Side::Ge => sign != Ordering::Less,
        }
    }
}

/// Exact position of a point relative to a closed set's boundary curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Inside,
    Boundary,
    Outside,
}

/// A closed disk, closed disk exterior or closed half-plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    pub boundary: Circline,
    pub side: Side,
}

impl HalfSpace {
    pub fn new(boundary: Circline, side: Side) -> Self {
        HalfSpace { boundary, side }
    }

    fn from_normalized(n: Normalized, side: Side) -> Self {
        HalfSpace::new(n.curve, side.flip_if(n.flipped))
    }

    /// `{A|z|² + 2Re(B̄z) + C ≤ 0}`.
    pub fn from_form(
        a: &BigRational,
        b: &RationalComplex,
        c: &BigRational,
    ) -> Result<Self, RegionError> {
        Ok(Self::from_normalized(
            Circline::normalize_rational(a, b, c)?,
            Side::Le,
        ))
    }

    /// `{p·x + q·y + r ≤ 0}`.
    pub fn linear(p: BigRational, q: BigRational, r: BigRational) -> Result<Self, RegionError> {
        let half = BigRational::new(1.into(), 2.into());
        Self::from_form(
            &BigRational::zero(),
            &RationalComplex::new(p * &half, q * half),
            &r,
        )
    }

    /// `{Re z ≤ t}`
    pub fn re_le(t: BigRational) -> Self {
        Self::linear(BigRational::one(), BigRational::zero(), -t).expect("nondegenerate")
    }

    /// `{Re z ≥ t}`
    pub fn re_ge(t: BigRational) -> Self {
        Self::linear(-BigRational::one(), BigRational::zero(), t).expect("nondegenerate")
    }

    /// `{Im z ≤ t}`
    pub fn im_le(t: BigRational) -> Self {
        Self::linear(BigRational::zero(), BigRational::one(), -t).expect("nondegenerate")
    }

    /// `{Im z ≥ t}`
    pub fn im_ge(t: BigRational) -> Self {
        Self::linear(BigRational::zero(), -BigRational::one(), t).expect("nondegenerate")
    }

    /// Closed disk `{|z − center|² ≤ radius_sq}`.
    pub fn disk(center: &RationalComplex, radius_sq: &BigRational) -> Self {
        HalfSpace::new(
            Circline::circle(center, radius_sq).expect("circle"),
            Side::Le,
        )
    }

    /// Closed exterior `{|z − center|² ≥ radius_sq}`.
    pub fn disk_exterior(center: &RationalComplex, radius_sq: &BigRational) -> Self {
        HalfSpace::new(
            Circline::circle(center, radius_sq).expect("circle"),
            Side::Ge,
        )
    }

    /// The closed complement (sharing the boundary).
    pub fn complement(&self) -> Self {
        HalfSpace::new(self.boundary.clone(), self.side.flip())
    }

    pub fn contains_exact(&self, z: &RationalComplex) -> bool {
        self.position_exact(z) != Position::Outside
    }

    pub fn position_exact(&self, z: &RationalComplex) -> Position {
        let v = self.boundary.eval_exact(z);
        let sign = if v.is_positive() {
            Ordering::Greater
        } else if v.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        };
        self.position_from_sign(sign)
    }

    pub fn position_lattice(&self, p: &LatticePoint) -> Position {
        self.position_from_sign(self.boundary.sign_at(p))
    }

    fn position_from_sign(&self, sign: Ordering) -> Position {
        if sign == Ordering::Equal {
            Position::Boundary
        } else if self.side.accepts(sign) {
            Position::Inside
        } else {
            Position::Outside
        }
    }

    /// Signed Euclidean distance to the boundary, negative inside.
    pub fn signed_distance(&self, z: &FloatComplex) -> f64 {
        self.side.orientation() as f64 * self.boundary.signed_distance_f64(z)
    }

    /// Closed membership with slack `eps`.
    pub fn contains_f64(&self, z: &FloatComplex, eps: f64) -> bool {
        self.signed_distance(z) <= eps
    }

    /// Strict classification: points within `eps` of the boundary are
    /// ambiguous.
    pub fn classify_f64(&self, z: &FloatComplex, eps: f64) -> Result<bool, RegionError> {
        let d = self.signed_distance(z);
        if d.abs() <= eps {
            Err(RegionError::BoundaryAmbiguous)
        } else {
            Ok(d < 0.0)
        }
    }

    pub fn moebius_image(&self, m: &MoebiusMap) -> Self {
        Self::from_normalized(self.boundary.moebius_image_signed(m), self.side)
    }

    pub fn dihedral_image(&self, g: DihedralElement) -> Self {
        Self::from_normalized(self.boundary.dihedral_image_signed(g), self.side)
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.boundary;
        let op = match self.side {
            Side::Le => "<=",
            Side::Ge => ">=",
        };
        write!(
            f,
            "{}|z|^2 + 2Re(conj({})z) + {} {op} 0",
            b.a(),
            b.b(),
            b.c()
        )
    }
}

/// Intersection of half-spaces. The empty list is the whole plane.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Cell {
    pub constraints: Vec<HalfSpace>,
}

impl Cell {
    pub fn new(constraints: Vec<HalfSpace>) -> Self {
        Cell { constraints }
    }

    pub fn contains_exact(&self, z: &RationalComplex) -> bool {
        self.constraints.iter().all(|h| h.contains_exact(z))
    }

    pub fn contains_lattice(&self, p: &LatticePoint) -> bool {
        self.constraints
            .iter()
            .all(|h| h.position_lattice(p) != Position::Outside)
    }

    pub fn position_exact(&self, z: &RationalComplex) -> Position {
        let mut pos = Position::Inside;
        for h in &self.constraints {
            match h.position_exact(z) {
                Position::Outside => return Position::Outside,
                Position::Boundary => pos = Position::Boundary,
                Position::Inside => {}
            }
        }
        pos
    }

    /// Largest signed distance over constraints: `≤ 0` iff inside.
    pub fn margin(&self, z: &FloatComplex) -> f64 {
        self.constraints
            .iter()
            .map(|h| h.signed_distance(z))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains_f64(&self, z: &FloatComplex, eps: f64) -> bool {
        self.margin(z) <= eps
    }

    pub fn intersect(&self, other: &Cell) -> Cell {
        let mut constraints = self.constraints.clone();
        for h in &other.constraints {
            if !constraints.contains(h) {
                constraints.push(h.clone());
            }
        }
        Cell { constraints }
    }

    pub fn moebius_image(&self, m: &MoebiusMap) -> Cell {
        Cell::new(
            self.constraints
                .iter()
                .map(|h| h.moebius_image(m))
                .collect(),
        )
    }

    pub fn dihedral_image(&self, g: DihedralElement) -> Cell {
        Cell::new(
            self.constraints
                .iter()
                .map(|h| h.dihedral_image(g))
                .collect(),
        )
    }
}

impl From<HalfSpace> for Cell {
    fn from(h: HalfSpace) -> Self {
        Cell::new(vec![h])
    }
}

/// A finite union of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Region {
    pub cells: Vec<Cell>,
}

impl Region {
    pub fn new(cells: Vec<Cell>) -> Self {
        Region { cells }
    }

    pub fn empty() -> Self {
        Region { cells: Vec::new() }
    }

    pub fn plane() -> Self {
        Region::new(vec![Cell::default()])
    }

    pub fn is_syntactically_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn union(&self, other: &Region) -> Region {
        let mut cells = self.cells.clone();
        cells.extend(other.cells.iter().cloned());
        Region { cells }
    }

    pub fn intersect(&self, other: &Region) -> Region {
        let mut cells = Vec::with_capacity(self.cells.len() * other.cells.len());
        for a in &self.cells {
            for b in &other.cells {
                cells.push(a.intersect(b));
            }
        }
        Region { cells }
    }

    pub fn moebius_image(&self, m: &MoebiusMap) -> Region {
        Region::new(self.cells.iter().map(|c| c.moebius_image(m)).collect())
    }

    pub fn dihedral_image(&self, g: DihedralElement) -> Region {
        Region::new(self.cells.iter().map(|c| c.dihedral_image(g)).collect())
    }

    pub fn contains_exact(&self, z: &RationalComplex) -> bool {
        self.cells.iter().any(|c| c.contains_exact(z))
    }

    pub fn contains_lattice(&self, p: &LatticePoint) -> bool {
        self.cells.iter().any(|c| c.contains_lattice(p))
    }

    pub fn contains_f64(&self, z: &FloatComplex, eps: f64) -> bool {
        self.cells.iter().any(|c| c.contains_f64(z, eps))
    }

    /// `true` if `z` lies at distance more than `eps` inside one cell.
    pub fn interior_f64(&self, z: &FloatComplex, eps: f64) -> bool {
        self.cells.iter().any(|c| c.margin(z) < -eps)
    }

    /// Strict classification. Points within `eps` of a boundary that decides
    /// membership are ambiguous.
    pub fn classify_f64(&self, z: &FloatComplex, eps: f64) -> Result<bool, RegionError> {
        let mut outside = true;
        for c in &self.cells {
            let m = c.margin(z);
            if m < -eps {
                return Ok(true);
            }
            if m <= eps {
                outside = false;
            }
        }
        if outside {
            Ok(false)
        } else {
            Err(RegionError::BoundaryAmbiguous)
        }
    }

    /// Distinct boundary curves, in a canonical order.
    pub fn boundaries(&self) -> Vec<Circline> {
        let set: BTreeSet<&Circline> = self
            .cells
            .iter()
            .flat_map(|c| c.constraints.iter().map(|h| &h.boundary))
            .collect();
        set.into_iter().cloned().collect()
    }
}

impl From<Cell> for Region {
    fn from(c: Cell) -> Self {
        Region::new(vec![c])
    }
}

impl From<HalfSpace> for Region {
    fn from(h: HalfSpace) -> Self {
        Region::from(Cell::from(h))
    }
}

/// Closed-set membership on either arithmetic carrier: exact on rationals,
/// with the carrier's tolerance on floats.
pub trait Carrier: crate::arith::Scalar {
    fn in_region(r: &Region, z: &Complex<Self>) -> bool;
    fn in_halfspace(h: &HalfSpace, z: &Complex<Self>) -> bool;
}

impl Carrier for f64 {
    fn in_region(r: &Region, z: &FloatComplex) -> bool {
        r.contains_f64(z, <f64 as crate::arith::Scalar>::tolerance())
    }
    fn in_halfspace(h: &HalfSpace, z: &FloatComplex) -> bool {
        h.contains_f64(z, <f64 as crate::arith::Scalar>::tolerance())
    }
}

impl Carrier for BigRational {
    fn in_region(r: &Region, z: &RationalComplex) -> bool {
        r.contains_exact(z)
    }
    fn in_halfspace(h: &HalfSpace, z: &RationalComplex) -> bool {
        h.contains_exact(z)
    }
}
