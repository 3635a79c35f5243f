use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{fold_to_wedge, ArithError, Complex, DihedralElement, MoebiusMap};
use crate::cf::phi_contains;
use crate::regions::Carrier;

use super::sets::diamond_sets;

/// The generator by which `f♦` acts at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    S,
    #[serde(rename = "T^-1")]
    TInv,
    #[serde(rename = "U^-1")]
    UInv,
    T,
    U,
}

impl Branch {
    pub const ALL: [Branch; 5] = [Branch::S, Branch::TInv, Branch::UInv, Branch::T, Branch::U];

    pub fn map(self) -> MoebiusMap {
        match self {
            Branch::S => MoebiusMap::s(),
            Branch::TInv => MoebiusMap::t_inv(),
            Branch::UInv => MoebiusMap::u_inv(),
            Branch::T => MoebiusMap::t(),
            Branch::U => MoebiusMap::u(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::S => "S",
            Branch::TInv => "T^-1",
            Branch::UInv => "U^-1",
            Branch::T => "T",
            Branch::U => "U",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which branch of `f♦` applies at `z`: `S` on the closed diamond, else the
/// translation for the sector containing `arg z`.
pub fn branch_of<T: Carrier>(z: &Complex<T>) -> Branch {
    if phi_contains(z) {
        return Branch::S;
    }
    let (x, y) = (&z.re, &z.im);
    let zero = T::zero();
    if *x > zero && -x.clone() <= *y && y < x {
        Branch::TInv
    } else if *y > zero && -y.clone() < *x && x <= y {
        Branch::UInv
    } else if *x < zero && x < y && *y <= -x.clone() {
        Branch::T
    } else {
        Branch::U
    }
}

/// `f♦(z)`. The origin is the pole of `S`.
pub fn f_diamond<T: Carrier>(z: &Complex<T>) -> Result<Complex<T>, ArithError> {
    branch_of(z).map().apply(z)
}

/// A cell `g(W_k)` of the 40-cell partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionCell {
    #[serde(rename = "dih")]
    pub g: DihedralElement,
    pub k: u8,
}

impl PartitionCell {
    pub const fn new(g: DihedralElement, k: u8) -> Self {
        PartitionCell { g, k }
    }
}

impl fmt::Display for PartitionCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}W{}", self.g, self.k)
    }
}

/// Folds `w` into the wedge and tests `W₅, W₄, …, W₁` in turn.
pub fn classify_cell<T: Carrier>(w: &Complex<T>) -> Result<PartitionCell, ArithError> {
    let (g, rep) = fold_to_wedge(w)?;
    let sets = diamond_sets();
    for k in (1..=5).rev() {
        if T::in_region(sets.w(k), &rep) {
            return Ok(PartitionCell::new(g, k));
        }
    }
    // Only reachable through float rounding on a wedge edge: take the
    // cell with the smallest violation.
    let f = rep.to_float();
    let k = (1..=5u8)
        .min_by(|&a, &b| {
            let m = |k: u8| sets.w(k).cells[0].margin(&f);
            m(a).total_cmp(&m(b))
        })
        .unwrap();
    Ok(PartitionCell::new(g, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ratio, FloatComplex, RationalComplex};

    #[test]
    fn f_diamond_examples() {
        let z = RationalComplex::new(ratio(3, 10), ratio(0, 1));
        assert_eq!(
            f_diamond(&z).unwrap(),
            RationalComplex::new(ratio(-10, 3), ratio(0, 1))
        );
        assert_eq!(
            f_diamond(&FloatComplex::new(3.0, 0.5)).unwrap(),
            FloatComplex::new(2.0, 0.5)
        );
        assert_eq!(
            f_diamond(&FloatComplex::new(-0.5, 2.0)).unwrap(),
            FloatComplex::new(-0.5, 1.0)
        );
        assert_eq!(
            f_diamond(&FloatComplex::new(0.0, 0.0)),
            Err(ArithError::Pole)
        );
    }

    #[test]
    fn classify_examples() {
        let c = |x, y| classify_cell(&FloatComplex::new(x, y)).unwrap();
        assert_eq!(
            c(3.0, 0.5),
            PartitionCell::new(DihedralElement::IDENTITY, 1)
        );
        assert_eq!(
            c(0.9, 0.5),
            PartitionCell::new(DihedralElement::IDENTITY, 3)
        );
        assert_eq!(c(0.2, 1.0), PartitionCell::new(DihedralElement::RHO, 3));
        assert_eq!(
            classify_cell(&FloatComplex::new(0.0, 0.0)),
            Err(ArithError::Origin)
        );
    }

    #[test]
    fn serde_shape() {
        let cell = PartitionCell::new(DihedralElement::new(2, true), 3);
        assert_eq!(
            serde_json::to_string(&cell).unwrap(),
            r#"{"dih":"eta*iota^2","k":3}"#
        );
    }
}
