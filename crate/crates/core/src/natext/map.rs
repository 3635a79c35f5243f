use crate::arith::{ArithError, Complex, FloatComplex, MoebiusMap, Scalar};
use crate::cf::phi_contains;
use crate::diamond::{branch_of, Branch};
use crate::regions::Carrier;

use super::sets::natext_sets;
use super::NatextError;

/// `F♦(z, w) = (h(z), h(w))` where `h` is the branch of `f♦` at `w`.
///
/// Fails on the diagonal `z = w` and when either coordinate hits the pole
/// of `h`.
pub fn big_f_diamond<T: Carrier>(
    z: &Complex<T>,
    w: &Complex<T>,
) -> Result<(Complex<T>, Complex<T>), NatextError> {
    let d = z.clone() - w.clone();
    let tol = T::tolerance();
    if d.norm_sqr() <= tol.clone() * tol {
        return Err(NatextError::Diagonal);
    }
    let h = branch_of(w).map();
    Ok((apply_map(&h, z, "z")?, apply_map(&h, w, "w")?))
}

fn apply_map<T: Scalar>(
    h: &MoebiusMap,
    p: &Complex<T>,
    which: &'static str,
) -> Result<Complex<T>, NatextError> {
    h.apply(p).map_err(|e| match e {
        ArithError::Pole => NatextError::Pole { coordinate: which },
        other => NatextError::Arith(other),
    })
}

/// The branch `F♦` uses at `(z, w)`.
pub fn big_f_branch<T: Carrier>(w: &Complex<T>) -> Branch {
    branch_of(w)
}

/// `(z, w) ∈ D♦`, closed.
pub fn d_contains<T: Carrier>(z: &Complex<T>, w: &Complex<T>) -> bool {
    natext_sets().d.contains(z, w)
}

/// `(z, w) ∈ V♦`: `|z| ≤ 1` and `S(w) ∈ Φ♦`.
pub fn v_contains<T: Carrier>(z: &Complex<T>, w: &Complex<T>) -> bool {
    if z.norm_sqr() > T::one() + T::tolerance() {
        return false;
    }
    match MoebiusMap::s().apply(w) {
        Ok(sw) => phi_contains(&sw),
        Err(_) => false,
    }
}

/// The orbit of `(z, w)` up to its first visit to `V♦`.
#[derive(Clone, Debug)]
pub struct VOrbit {
    /// Number of `F♦` steps taken before landing in `V♦`.
    pub steps: usize,
    /// The states reached right after each `S` step, in order.
    pub s_states: Vec<(FloatComplex, FloatComplex)>,
    pub z: FloatComplex,
    pub w: FloatComplex,
}

/// Iterates `F♦` until the state enters `V♦`, for at most `budget` steps.
pub fn orbit_until_v(
    z: &FloatComplex,
    w: &FloatComplex,
    budget: usize,
) -> Result<VOrbit, NatextError> {
    let (mut z, mut w) = (z.clone(), w.clone());
    let mut s_states = Vec::new();
    for steps in 0..=budget {
        if v_contains(&z, &w) {
            return Ok(VOrbit {
                steps,
                s_states,
                z,
                w,
            });
        }
        if steps == budget {
            break;
        }
        let s_step = big_f_branch(&w) == Branch::S;
        (z, w) = big_f_diamond(&z, &w)?;
        if !(z.is_finite() && w.is_finite()) {
            return Err(NatextError::NonFinite);
        }
        if s_step {
            s_states.push((z.clone(), w.clone()));
        }
    }
    Err(NatextError::BudgetExhausted { steps: budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ratio, RationalComplex};

    fn q(a: i64, b: i64, c: i64, d: i64) -> RationalComplex {
        RationalComplex::new(ratio(a, b), ratio(c, d))
    }

    #[test]
    fn errors() {
        let z = q(1, 3, 1, 5);
        assert!(matches!(big_f_diamond(&z, &z), Err(NatextError::Diagonal)));
        let zero = RationalComplex::zero();
        assert!(matches!(
            big_f_diamond(&q(1, 2, 0, 1), &zero),
            Err(NatextError::Pole { coordinate: "w" })
        ));
        assert!(matches!(
            big_f_diamond(&zero, &q(1, 2, 0, 1)),
            Err(NatextError::Pole { coordinate: "z" })
        ));
    }

    #[test]
    fn translation_branch_moves_both() {
        let (z, w) = big_f_diamond(&q(1, 3, 0, 1), &q(5, 2, 1, 4)).unwrap();
        assert_eq!(w, q(3, 2, 1, 4));
        assert_eq!(z, q(-2, 3, 0, 1));
    }

    #[test]
    fn v_membership() {
        assert!(v_contains(&q(1, 2, 0, 1), &q(3, 1, 0, 1)));
        assert!(v_contains(&q(0, 1, 1, 1), &q(1, 1, 0, 1)));
        assert!(!v_contains(&q(0, 1, 1, 1), &q(1, 2, 0, 1)));
        assert!(!v_contains(&q(2, 1, 0, 1), &q(3, 1, 0, 1)));
        assert!(!v_contains(&q(0, 1, 0, 1), &q(0, 1, 0, 1)));
    }

    #[test]
    fn orbit_reaches_v() {
        let o = orbit_until_v(
            &FloatComplex::new(3.0, -2.0),
            &FloatComplex::new(0.3, 0.1),
            200,
        )
        .unwrap();
        assert!(v_contains(&o.z, &o.w));
        assert!(!o.s_states.is_empty());
        assert!(matches!(
            orbit_until_v(
                &FloatComplex::new(3.0, -2.0),
                &FloatComplex::new(0.3, 0.1),
                0
            ),
            Err(NatextError::BudgetExhausted { steps: 0 })
        ));
    }
}
