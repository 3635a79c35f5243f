//! The two-dimensional natural extension `F♦` on `D♦`, and the trapping
//! region `Ψ♦`.

mod hatz;
mod map;
mod product;
mod psi;
mod sets;
mod verify;

pub use hatz::{hat_z, HatZ, HatZPiece};
pub use map::{big_f_branch, big_f_diamond, d_contains, orbit_until_v, v_contains, VOrbit};
pub use product::{ProductSet, ProductTerm};
pub use psi::{build_psi, PsiBuild, MAX_PSI_ITERATIONS};
pub use sets::{natext_sets, NatExtSets};
pub use verify::{check_trapping, verify_bijectivity, verify_psi};

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NatextError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("F is undefined on the diagonal z = w")]
    Diagonal,
    #[error("the {coordinate} coordinate hits the pole")]
    Pole { coordinate: &'static str },
    #[error("orbit did not enter V within {steps} steps")]
    BudgetExhausted { steps: usize },
    #[error("no stabilization within {iterations} iterations")]
    NoStabilization { iterations: usize },
    #[error("orbit left the finite plane")]
    NonFinite,
}
