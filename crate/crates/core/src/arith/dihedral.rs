use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::complex::Complex;
use super::scalar::Scalar;
use super::ArithError;

/// An element `η^r ∘ ι^j` of the symmetry group of the unit 1-norm ball.
///
/// `ι: w ↦ iw` is the quarter turn and `η: w ↦ −w̄` the reflection across the
/// imaginary axis. The reflection `ρ: w ↦ i·w̄` is `η ∘ ι`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DihedralElement {
    rot: u8,
    reflect: bool,
}

impl DihedralElement {
    pub const IDENTITY: DihedralElement = DihedralElement::new(0, false);
    /// `ι: w ↦ iw`
    pub const IOTA: DihedralElement = DihedralElement::new(1, false);
    /// `ι³: w ↦ −iw`
    pub const IOTA3: DihedralElement = DihedralElement::new(3, false);
    /// `η: w ↦ −w̄`
    pub const ETA: DihedralElement = DihedralElement::new(0, true);
    /// `ρ = η∘ι: w ↦ i·w̄`
    pub const RHO: DihedralElement = DihedralElement::new(1, true);

    /// The eight elements in canonical order `ι⁰, ι¹, ι², ι³, ηι⁰, …, ηι³`.
    pub const ALL: [DihedralElement; 8] = [
        DihedralElement::new(0, false),
        DihedralElement::new(1, false),
        DihedralElement::new(2, false),
        DihedralElement::new(3, false),
        DihedralElement::new(0, true),
        DihedralElement::new(1, true),
        DihedralElement::new(2, true),
        DihedralElement::new(3, true),
    ];

    pub const fn new(rot: u8, reflect: bool) -> Self {
        DihedralElement {
            rot: rot % 4,
            reflect,
        }
    }

    /// Power of `ι` in `η^r ∘ ι^j`.
    pub fn rotation(self) -> u8 {
        self.rot
    }

    pub fn is_reflection(self) -> bool {
        self.reflect
    }

    /// Position in [`DihedralElement::ALL`].
    pub fn index(self) -> usize {
        self.rot as usize + if self.reflect { 4 } else { 0 }
    }

    /// Group product `self ∘ other`.
    pub fn compose(self, other: DihedralElement) -> DihedralElement {
        // ι^j ∘ η = η ∘ ι^{−j}
        let j1 = if other.reflect {
            (4 - self.rot) % 4
        } else {
            self.rot
        };
        DihedralElement::new(j1 + other.rot, self.reflect ^ other.reflect)
    }

    pub fn inverse(self) -> DihedralElement {
        if self.reflect {
            self
        } else {
            DihedralElement::new(4 - self.rot, false)
        }
    }

    pub fn order(self) -> u8 {
        let mut g = self;
        let mut n = 1;
        while g != DihedralElement::IDENTITY {
            g = g.compose(self);
            n += 1;
        }
        n
    }

    pub fn apply<T: Scalar>(self, z: &Complex<T>) -> Complex<T> {
        let mut w = z.clone();
        for _ in 0..self.rot {
            w = w.mul_i();
        }
        if self.reflect {
            w = Complex::new(-w.re, w.im);
        }
        w
    }

    pub fn name(self) -> String {
        let rot = match self.rot {
            0 => String::new(),
            1 => "iota".to_string(),
            j => format!("iota^{j}"),
        };
        match (self.reflect, rot.is_empty()) {
            (false, true) => "id".to_string(),
            (false, false) => rot,
            (true, true) => "eta".to_string(),
            (true, false) => format!("eta*{rot}"),
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for DihedralElement {
    type Err = ArithError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DihedralElement::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .or(match s {
                "rho" => Some(DihedralElement::RHO),
                _ => None,
            })
            .ok_or_else(|| ArithError::Parse(s.to_string()))
    }
}

impl TryFrom<String> for DihedralElement {
    type Error = ArithError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<DihedralElement> for String {
    fn from(g: DihedralElement) -> String {
        g.name()
    }
}

fn in_wedge<T: Scalar>(z: &Complex<T>, closed: bool) -> bool {
    let zero = T::zero();
    if z.im < zero {
        return false;
    }
    if closed {
        z.im <= z.re && !z.is_zero()
    } else {
        z.im < z.re
    }
}

/// `true` iff `0 ≤ arg z < π/4` (and `z ≠ 0`).
pub fn in_fundamental_wedge<T: Scalar>(z: &Complex<T>) -> bool {
    in_wedge(z, false)
}

/// Folds `z ≠ 0` into the wedge `0 ≤ arg < π/4`.
///
/// Returns `(g, rep)` with `g(rep) = z`. Elements are tried in canonical
/// order and the first whose preimage lands in the half-open wedge wins. The
/// diagonals `arg z = π/4 + kπ/2` are not covered by any half-open copy; they
/// fold onto the closed edge `arg = π/4`, trying reflections first, so that
/// `1+i` folds as `(ρ, 1+i)`.
pub fn fold_to_wedge<T: Scalar>(
    z: &Complex<T>,
) -> Result<(DihedralElement, Complex<T>), ArithError> {
    if z.is_zero() {
        return Err(ArithError::Origin);
    }
    for g in DihedralElement::ALL {
        let rep = g.inverse().apply(z);
        if in_wedge(&rep, false) {
            return Ok((g, rep));
        }
    }
    let reflections_first = DihedralElement::ALL[4..]
        .iter()
        .chain(&DihedralElement::ALL[..4]);
    for &g in reflections_first {
        let rep = g.inverse().apply(z);
        if in_wedge(&rep, true) {
            return Ok((g, rep));
        }
    }
    unreachable!("every nonzero point folds onto the closed wedge")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::complex::{FloatComplex, RationalComplex};

    #[test]
    fn named_examples() {
        let rho = DihedralElement::RHO;
        assert_eq!(
            rho.apply(&RationalComplex::from_ints(1, 0)),
            RationalComplex::from_ints(0, 1)
        );
        assert_eq!(
            DihedralElement::ETA.apply(&FloatComplex::new(2.0, 0.5)),
            FloatComplex::new(-2.0, 0.5)
        );
        // ι³ is multiplication by −i
        let z = RationalComplex::from_ints(1, 2);
        let minus_i = RationalComplex::from_ints(0, -1);
        assert_eq!(DihedralElement::IOTA3.apply(&z), minus_i * z.clone());
        assert_eq!(
            DihedralElement::IOTA3.apply(&z),
            RationalComplex::from_ints(2, -1)
        );
    }

    #[test]
    fn rho_is_eta_after_iota() {
        assert_eq!(
            DihedralElement::ETA.compose(DihedralElement::IOTA),
            DihedralElement::RHO
        );
        let w = RationalComplex::from_ints(3, 7);
        // ρ(w) = i·w̄
        assert_eq!(DihedralElement::RHO.apply(&w), w.conj().mul_i());
    }

    #[test]
    fn group_table_is_closed_with_orders_dividing_four() {
        let z = RationalComplex::from_ints(3, 1);
        for a in DihedralElement::ALL {
            assert_eq!(4 % a.order(), 0);
            assert_eq!(a.compose(a.inverse()), DihedralElement::IDENTITY);
            for b in DihedralElement::ALL {
                let ab = a.compose(b);
                assert!(DihedralElement::ALL.contains(&ab));
                assert_eq!(ab.apply(&z), a.apply(&b.apply(&z)));
            }
        }
        let distinct: std::collections::BTreeSet<_> = DihedralElement::ALL
            .iter()
            .map(|g| g.apply(&z).to_string())
            .collect();
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn names_round_trip() {
        for g in DihedralElement::ALL {
            assert_eq!(g.name().parse::<DihedralElement>().unwrap(), g);
        }
        assert_eq!(DihedralElement::new(2, true).name(), "eta*iota^2");
        assert_eq!(DihedralElement::RHO.name(), "eta*iota");
    }

    #[test]
    fn fold_examples() {
        let (g, rep) = fold_to_wedge(&FloatComplex::new(1.0, 0.2)).unwrap();
        assert_eq!(
            (g, rep),
            (DihedralElement::IDENTITY, FloatComplex::new(1.0, 0.2))
        );
        let (g, rep) = fold_to_wedge(&FloatComplex::new(-2.0, 0.5)).unwrap();
        assert_eq!(
            (g, rep),
            (DihedralElement::ETA, FloatComplex::new(2.0, 0.5))
        );
        let (g, rep) = fold_to_wedge(&FloatComplex::new(0.2, 1.0)).unwrap();
        assert_eq!(
            (g, rep),
            (DihedralElement::RHO, FloatComplex::new(1.0, 0.2))
        );
    }

    #[test]
    fn fold_ties() {
        let (g, rep) = fold_to_wedge(&RationalComplex::from_ints(1, 1)).unwrap();
        assert_eq!(g, DihedralElement::RHO);
        assert_eq!(rep, RationalComplex::from_ints(1, 1));
        // positive imaginary axis: ι wins over the reflection ρ
        let (g, _) = fold_to_wedge(&RationalComplex::from_ints(0, 2)).unwrap();
        assert_eq!(g, DihedralElement::IOTA);
        assert_eq!(
            fold_to_wedge(&RationalComplex::from_ints(0, 0)),
            Err(ArithError::Origin)
        );
    }

    #[test]
    fn fold_reconstructs_every_axis_and_diagonal() {
        for (x, y) in [
            (1, 0),
            (1, 1),
            (0, 1),
            (-1, 1),
            (-1, 0),
            (-1, -1),
            (0, -1),
            (1, -1),
        ] {
            let z = RationalComplex::from_ints(x, y);
            let (g, rep) = fold_to_wedge(&z).unwrap();
            assert_eq!(g.apply(&rep), z);
            assert!(rep.im >= num_rational::BigRational::from_integer(0.into()));
            assert!(rep.im <= rep.re);
        }
    }
}
