//! Choice functions, minus continued-fraction expansion and convergents.

mod choice;
mod expansion;
mod verify;

pub use choice::{
    choice_diamond, choice_hurwitz, diamond_step_bound, f_empty, phi_contains, ChoiceFunction,
};
pub use expansion::{
    check_identity_residual, convergence_report, convergent_value, convergents, determinants,
    evaluate_cf, expand, identity_residuals, ConvergenceReport, ConvergentPair, Expansion,
};
pub use verify::{
    check_choice, check_convergence, check_determinants, check_identity, check_unit_circle,
    exact_identity_residuals,
};

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("no fundamental-set entry after {steps} translation steps")]
    NonTermination { steps: usize },
    #[error("division by zero below digit {depth}")]
    DivisionByZero { depth: usize },
    #[error("no digits to evaluate")]
    EmptyDigits,
    #[error("input is not finite")]
    NonFinite,
}
