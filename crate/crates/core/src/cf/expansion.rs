use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{Complex, FloatComplex, GaussianInt, RationalComplex};
use crate::regions::Carrier;

use super::choice::ChoiceFunction;
use super::CfError;

/// The orbit `z₀ = z`, `a_n = c(z_n)`, `z_{n+1} = −1/(z_n − a_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Expansion<T> {
    pub digits: Vec<GaussianInt>,
    /// `z₀, z₁, …`; one longer than `digits` unless the expansion terminated.
    pub remainders: Vec<Complex<T>>,
    /// Some `z_n` equalled `a_n` exactly.
    pub terminated: bool,
}

pub fn expand<T: Carrier>(
    z: &Complex<T>,
    choice: &ChoiceFunction,
    max_steps: usize,
) -> Result<Expansion<T>, CfError> {
    let mut digits = Vec::with_capacity(max_steps);
    let mut remainders = vec![z.clone()];
    let mut terminated = false;
    let mut cur = z.clone();
    for _ in 0..max_steps {
        let a = choice.choose(&cur)?;
        let rest = cur.sub_gaussian(&a);
        digits.push(a);
        if rest.is_zero() {
            terminated = true;
            break;
        }
        cur = -rest.checked_recip()?;
        remainders.push(cur.clone());
    }
    Ok(Expansion {
        digits,
        remainders,
        terminated,
    })
}

/// Convergent numerator and denominator of index `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentPair {
    pub index: i64,
    pub p: GaussianInt,
    pub q: GaussianInt,
}

/// `p_n = a_n p_{n−1} − p_{n−2}` and likewise for `q_n`, from
/// `p₋₂ = 0, p₋₁ = 1, q₋₂ = −1, q₋₁ = 0`. The two seed pairs come first.
pub fn convergents(digits: &[GaussianInt]) -> Vec<ConvergentPair> {
    let mut out = vec![
        ConvergentPair {
            index: -2,
            p: GaussianInt::zero(),
            q: GaussianInt::new(-1, 0),
        },
        ConvergentPair {
            index: -1,
            p: GaussianInt::one(),
            q: GaussianInt::zero(),
        },
    ];
    for (n, a) in digits.iter().enumerate() {
        let (p2, p1) = (&out[n].p, &out[n + 1].p);
        let (q2, q1) = (&out[n].q, &out[n + 1].q);
        let p = &(a * p1) - p2;
        let q = &(a * q1) - q2;
        out.push(ConvergentPair {
            index: n as i64,
            p,
            q,
        });
    }
    out
}

/// `p_n q_{n−1} − p_{n−1} q_n` for `n ≥ −1`.
pub fn determinants(convs: &[ConvergentPair]) -> Vec<GaussianInt> {
    convs
        .windows(2)
        .map(|w| &(&w[1].p * &w[0].q) - &(&w[0].p * &w[1].q))
        .collect()
}

/// Exact `p/q`, or `None` when `q = 0`.
pub fn convergent_value(pair: &ConvergentPair) -> Option<RationalComplex> {
    RationalComplex::from(&pair.p)
        .checked_div(&RationalComplex::from(&pair.q))
        .ok()
}

/// Backward evaluation of `⟦a₀, …, a_n⟧ = a₀ − 1/(a₁ − 1/(⋯ − 1/a_n))`,
/// optionally continued by a complex tail `t` as `⟦a₀, …, a_n, t⟧`.
///
/// A zero denominator reports the digit index it appeared below.
pub fn evaluate_cf<T: Carrier>(
    digits: &[GaussianInt],
    tail: Option<&Complex<T>>,
) -> Result<Complex<T>, CfError> {
    let mut rest = digits.iter().enumerate().rev();
    let mut v = match tail {
        Some(t) => t.clone(),
        None => match rest.next() {
            Some((_, a)) => Complex::from_gaussian(a),
            None => return Err(CfError::EmptyDigits),
        },
    };
    for (k, a) in rest {
        if v.is_zero() {
            return Err(CfError::DivisionByZero { depth: k + 1 });
        }
        v = Complex::<T>::from_gaussian(a) - v.checked_recip()?;
    }
    Ok(v)
}

/// `|p_n − q_n z − (z₁⋯z_{n+1})⁻¹|`, or `None` if the expansion is too short.
pub fn check_identity_residual(
    z: &FloatComplex,
    expansion: &Expansion<f64>,
    n: usize,
) -> Option<f64> {
    if expansion.remainders.len() < n + 2 || expansion.digits.len() < n + 1 {
        return None;
    }
    let convs = convergents(&expansion.digits[..=n]);
    let last = convs.last()?;
    let product = expansion.remainders[1..=n + 1]
        .iter()
        .fold(FloatComplex::one(), |acc, zk| acc * zk.clone());
    let inv = product.checked_recip().ok()?;
    let p = FloatComplex::from_gaussian(&last.p);
    let q = FloatComplex::from_gaussian(&last.q);
    Some((p - q * z.clone() - inv).abs())
}

/// `|p_n − q_n z − (z₁⋯z_{n+1})⁻¹|` for every `n` whose remainder
/// `z_{n+1}` exists, computed in the expansion's own carrier.
pub fn identity_residuals<T: Carrier>(z: &Complex<T>, expansion: &Expansion<T>) -> Vec<f64> {
    let convs = convergents(&expansion.digits);
    let mut product = Complex::<T>::one();
    let mut out = Vec::new();
    for (n, zk) in expansion.remainders.iter().enumerate().skip(1) {
        product = product * zk.clone();
        let Ok(inv) = product.checked_recip() else {
            break;
        };
        let pair = &convs[n + 1];
        let p = Complex::<T>::from_gaussian(&pair.p);
        let q = Complex::<T>::from_gaussian(&pair.q);
        out.push((p - q * z.clone() - inv).to_float().abs());
    }
    out
}

/// Per-step approximation errors `|p_n/q_n − z|` and sizes `|q_n|`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub errors: Vec<f64>,
    pub q_norms: Vec<f64>,
    /// Every `q_n` with `n ≥ 0` was nonzero.
    pub q_nonzero: bool,
}

pub fn convergence_report(
    z: &FloatComplex,
    choice: &ChoiceFunction,
    steps: usize,
) -> Result<ConvergenceReport, CfError> {
    let exp = expand(z, choice, steps)?;
    let convs = convergents(&exp.digits);
    let zq = z.to_rational().ok_or(CfError::NonFinite)?;
    let mut errors = Vec::with_capacity(steps);
    let mut q_norms = Vec::with_capacity(steps);
    let mut q_nonzero = true;
    for pair in &convs[2..] {
        q_norms.push(big_abs(&pair.q));
        match convergent_value(pair) {
            Some(v) => {
                // exact difference, rounded once
                let d = v - zq.clone();
                errors.push(
                    ToPrimitive::to_f64(&d.norm_sqr())
                        .unwrap_or(f64::INFINITY)
                        .sqrt(),
                );
            }
            None => {
                q_nonzero = false;
                errors.push(f64::INFINITY);
            }
        }
    }
    Ok(ConvergenceReport {
        errors,
        q_norms,
        q_nonzero,
    })
}

fn big_abs(g: &GaussianInt) -> f64 {
    let n: BigInt = g.norm();
    if n.is_zero() {
        return 0.0;
    }
    ToPrimitive::to_f64(&BigRational::from_integer(n))
        .unwrap_or(f64::INFINITY)
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn g(x: i64, y: i64) -> GaussianInt {
        GaussianInt::new(x, y)
    }

    #[test]
    fn zero_terminates_at_once() {
        let e = expand(&FloatComplex::new(0.0, 0.0), &ChoiceFunction::Diamond, 3).unwrap();
        assert_eq!(e.digits, vec![g(0, 0)]);
        assert!(e.terminated);
    }

    #[test]
    fn integer_input_stops_on_the_closed_diamond() {
        // f_empty stops at 1, which already lies in the closed diamond, so
        // c(5) = 4 and the orbit continues −1, 1, −1, … with zero digits
        let z = RationalComplex::from_ints(5, 0);
        let e = expand(&z, &ChoiceFunction::Diamond, 10).unwrap();
        assert_eq!(e.digits[0], g(4, 0));
        assert!(e.digits[1..].iter().all(|a| a.is_zero()));
        assert!(!e.terminated);
        assert_eq!(
            evaluate_cf(&e.digits[..1], Some(&e.remainders[1])).unwrap(),
            z
        );
        let h = expand(&z, &ChoiceFunction::Hurwitz, 10).unwrap();
        assert_eq!(h.digits, vec![g(5, 0)]);
        assert!(h.terminated);
    }

    #[test]
    fn rational_orbit_reconstructs_exactly() {
        let z = RationalComplex::from_ints(2, 1);
        let e = expand(&z, &ChoiceFunction::Diamond, 10).unwrap();
        assert_eq!(e.digits[0], g(1, 1));
        // the orbit settles on the two-cycle −1, 1 with zero digits
        assert_eq!(e.remainders[1], RationalComplex::from_ints(-1, 0));
        assert_eq!(e.remainders[2], RationalComplex::from_ints(1, 0));
        for n in 0..e.digits.len() {
            let v = evaluate_cf(&e.digits[..=n], Some(&e.remainders[n + 1])).unwrap();
            assert_eq!(v, z);
        }
    }

    #[test]
    fn convergent_examples() {
        let c = convergents(&[g(2, 1)]);
        assert_eq!((c[2].p.clone(), c[2].q.clone()), (g(2, 1), g(1, 0)));
        let c = convergents(&[g(2, 1), g(-1, 2)]);
        assert_eq!((c[3].p.clone(), c[3].q.clone()), (g(-5, 3), g(-1, 2)));
        assert_eq!(determinants(&c), vec![g(-1, 0); 3]);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            evaluate_cf::<BigRational>(&[g(3, 0)], None).unwrap(),
            RationalComplex::from_ints(3, 0)
        );
        assert_eq!(
            evaluate_cf::<BigRational>(&[g(2, 1), g(2, 0)], None).unwrap(),
            RationalComplex::new(ratio(3, 2), ratio(1, 1))
        );
        assert_eq!(
            evaluate_cf::<BigRational>(&[g(2, 0), g(1, 0), g(1, 0)], None),
            Err(CfError::DivisionByZero { depth: 1 })
        );
    }

    #[test]
    fn identity_residual_base_case() {
        let z = FloatComplex::new(1.25, -0.4);
        let e = expand(&z, &ChoiceFunction::Diamond, 5).unwrap();
        assert!(check_identity_residual(&z, &e, 0).unwrap() < 1e-12);
    }
}
