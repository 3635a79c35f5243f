//! Exact Gaussian-integer and Gaussian-rational arithmetic, the binary64
//! carrier, Möbius maps over ℤ\[i\], and the dihedral symmetry group of the
//! 1-norm ball.

mod complex;
mod dihedral;
mod gaussian;
mod literal;
mod moebius;
mod scalar;

pub use complex::{Complex, FloatComplex, RationalComplex};
pub use dihedral::{fold_to_wedge, in_fundamental_wedge, DihedralElement};
pub use gaussian::GaussianInt;
pub use literal::ComplexLiteral;
pub use moebius::MoebiusMap;
pub use scalar::{ratio, ratio_from_f64, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    /// `cz + d = 0` when applying a Möbius map.
    #[error("point is the pole of the map")]
    Pole,
    #[error("the origin has no well-defined argument")]
    Origin,
    #[error("determinant {0} is not a unit")]
    NonUnitDeterminant(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
}
