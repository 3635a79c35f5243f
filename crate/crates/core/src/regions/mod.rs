//! Closed regions bounded by lines and circles with Gaussian-rational
//! coefficients: exact membership, Möbius and dihedral images, boolean
//! combinations, sampled equality and exact containment.

mod certify;
mod circline;
mod containment;
mod json;
mod lattice;
mod region;
mod sampling;

pub use certify::{certify_region_subset, certify_subset, Certificate};
pub use circline::Circline;
pub use containment::{halfspace_contains, Shape};
pub use lattice::LatticePoint;
pub use region::{Carrier, Cell, HalfSpace, Position, Region, Side};
pub use sampling::{region_equal, region_sample, test_points, EqualityOptions, Rect, Verdict};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("all circline coefficients are zero")]
    DegenerateCircline,
    #[error("point lies within the boundary tolerance")]
    BoundaryAmbiguous,
    #[error("found {found} interior points after {attempts} attempts")]
    EmptyRegionInBox { found: usize, attempts: usize },
}
