//! Seeded checks of the expansion identities and of the diamond choice.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{FloatComplex, GaussianInt, RationalComplex};
use crate::report::{Status, SubCheck};

use super::choice::{choice_diamond, diamond_step_bound, phi_contains, ChoiceFunction};
use super::expansion::{
    check_identity_residual, convergence_report, convergents, determinants, expand,
    identity_residuals,
};

fn random_digit(rng: &mut ChaCha8Rng) -> GaussianInt {
    loop {
        let (x, y): (i64, i64) = (rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        if x.abs() + y.abs() >= 2 {
            return GaussianInt::new(x, y);
        }
    }
}

fn square_point(rng: &mut ChaCha8Rng, r: f64) -> FloatComplex {
    FloatComplex::new(rng.gen_range(-r..r), rng.gen_range(-r..r))
}

/// `p_n q_{n−1} − p_{n−1} q_n` over `count` random digit strings of length
/// `len` with `|a_k|₁ ≥ 2`. Passes when every value, from `n = −1` on, is one
/// and the same unit; that unit is returned.
pub fn check_determinants(count: usize, len: usize, seed: u64) -> (SubCheck, Option<GaussianInt>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let strings: Vec<Vec<GaussianInt>> = (0..count)
        .map(|_| (0..len).map(|_| random_digit(&mut rng)).collect())
        .collect();
    let dets: Vec<Vec<GaussianInt>> = strings
        .par_iter()
        .map(|d| determinants(&convergents(d)))
        .collect();
    let first = dets[0][0].clone();
    let name = "determinant is one constant unit";
    let bad = dets.iter().position(|ds| ds.iter().any(|d| *d != first));
    let check = match bad {
        _ if !first.is_unit() => {
            SubCheck::new(name, Status::Fail, format!("{first} is not a unit"))
        }
        None => SubCheck::new(
            name,
            Status::Pass,
            format!("{count} strings, constant {first}"),
        ),
        Some(i) => {
            let digits: Vec<String> = strings[i].iter().map(|d| d.to_string()).collect();
            SubCheck::new(name, Status::Fail, "determinant changes").with_witness(
                digits.join(","),
                None,
                "digits",
            )
        }
    };
    let constant = bad.is_none().then_some(first);
    (check, constant)
}

/// `|p_n − q_n z − (z₁⋯z_{n+1})⁻¹|` for `n ≤ max_n`, evaluated exactly on
/// the dyadic value of the float `z`.
pub fn exact_identity_residuals(z: &FloatComplex, max_n: usize) -> Option<Vec<f64>> {
    let zq = z.to_rational()?;
    let exp = expand(&zq, &ChoiceFunction::Diamond, max_n + 1).ok()?;
    let res = identity_residuals(&zq, &exp);
    (res.len() > max_n).then(|| res[..=max_n].to_vec())
}

/// The identity `p_n − q_n z = (z₁⋯z_{n+1})⁻¹` for `count` seeded float
/// points of `[−5, 5]²` and `n ≤ max_n`.
///
/// The residual is evaluated exactly; the largest residual of the same
/// computation in binary64 is reported alongside.
pub fn check_identity(count: usize, max_n: usize, seed: u64, tol: f64) -> SubCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<FloatComplex> = (0..count).map(|_| square_point(&mut rng, 5.0)).collect();
    let res: Vec<(Option<f64>, f64)> = pts
        .par_iter()
        .map(|z| {
            let exact =
                exact_identity_residuals(z, max_n).map(|r| r.into_iter().fold(0.0, f64::max));
            let float = expand(z, &ChoiceFunction::Diamond, max_n + 1)
                .ok()
                .map(|e| {
                    (0..=max_n)
                        .filter_map(|n| check_identity_residual(z, &e, n))
                        .fold(0.0, f64::max)
                })
                .unwrap_or(f64::NAN);
            (exact, float)
        })
        .collect();
    let name = format!("p_n - q_n z = 1/(z_1...z_(n+1)) for n <= {max_n}");
    let float_worst = res.iter().map(|r| r.1).fold(0.0, f64::max);
    match res.iter().position(|r| !matches!(r.0, Some(v) if v < tol)) {
        None => {
            let worst = res.iter().filter_map(|r| r.0).fold(0.0, f64::max);
            SubCheck::new(
                name,
                Status::Pass,
                format!(
                    "{count} points, max residual {worst:e} exact, {float_worst:e} in binary64"
                ),
            )
        }
        Some(i) => SubCheck::new(name, Status::Fail, format!("residual {:?}", res[i].0))
            .with_witness(pts[i].to_string(), None, ""),
    }
}

/// Convergence of `p_n/q_n` to `z`: within `steps` digits both
/// `|p_n/q_n − z| < err` and `|q_n| > q_min` are reached for at least
/// `fraction` of `count` seeded points, and `q_n ≠ 0` throughout for all.
pub fn check_convergence(
    count: usize,
    steps: usize,
    seed: u64,
    err: f64,
    q_min: f64,
    fraction: f64,
) -> Vec<SubCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<FloatComplex> = (0..count).map(|_| square_point(&mut rng, 5.0)).collect();
    let res: Vec<Option<(bool, bool)>> = pts
        .par_iter()
        .map(|z| {
            let rep = convergence_report(z, &ChoiceFunction::Diamond, steps).ok()?;
            let reached =
                rep.errors.iter().any(|e| *e < err) && rep.q_norms.iter().any(|q| *q > q_min);
            Some((reached, rep.q_nonzero))
        })
        .collect();
    let reached = res.iter().filter(|r| matches!(r, Some((true, _)))).count();
    let nonzero = res.iter().filter(|r| matches!(r, Some((_, true)))).count();
    let need = (fraction * count as f64).ceil() as usize;
    vec![
        SubCheck::new(
            format!("|p_n/q_n - z| < {err:e} and |q_n| > {q_min:e} within {steps} steps"),
            Status::from_bool(reached >= need),
            format!("{reached} of {count} points, {need} required"),
        ),
        SubCheck::new(
            "q_n is never zero",
            Status::from_bool(nonzero == count),
            format!("{nonzero} of {count} points"),
        ),
    ]
}

/// `z − c♦(z) ∈ Φ♦` exactly and the step count stays within
/// `⌈|Re z|⌉ + ⌈|Im z|⌉`, for `count` dyadic points of `[−r, r]²`.
pub fn check_choice(count: usize, seed: u64, r: f64) -> SubCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<RationalComplex> = (0..count)
        .map(|_| square_point(&mut rng, r).to_rational().expect("finite"))
        .collect();
    let bad = pts
        .par_iter()
        .find_first(|z| match choice_diamond::<BigRational>(z) {
            Ok((a, steps)) => {
                !phi_contains(&z.sub_gaussian(&a))
                    || num_bigint::BigInt::from(steps) > diamond_step_bound(*z)
            }
            Err(_) => true,
        });
    let name = "z - c(z) lies in Phi within the step bound";
    match bad {
        None => SubCheck::new(name, Status::Pass, format!("{count} points")),
        Some(z) => SubCheck::new(name, Status::Fail, "choice outside Phi or over budget")
            .with_witness(z.to_string(), None, ""),
    }
}

/// `|z − c♦(z)| < 1` for `count` seeded unit-modulus points at least
/// `1e−6` in angle from the diamond's vertices.
pub fn check_unit_circle(count: usize, seed: u64) -> SubCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quarter = std::f64::consts::FRAC_PI_2;
    let mut pts = Vec::with_capacity(count);
    while pts.len() < count {
        let t: f64 = rng.gen_range(0.0..4.0 * quarter);
        let off = (t / quarter - (t / quarter).round()).abs() * quarter;
        if off > 1e-6 {
            pts.push(FloatComplex::from_polar(1.0, t));
        }
    }
    let bad = pts.par_iter().find_first(|z| match choice_diamond(*z) {
        Ok((a, _)) => z.sub_gaussian(&a).abs() >= 1.0,
        Err(_) => true,
    });
    let name = "|z - c(z)| < 1 on the unit circle";
    match bad {
        None => SubCheck::new(name, Status::Pass, format!("{count} points")),
        Some(z) => SubCheck::new(name, Status::Fail, "distance reaches 1").with_witness(
            z.to_string(),
            None,
            "",
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let (d, unit) = check_determinants(50, 30, 1);
        assert_eq!(d.status, Status::Pass, "{}", d.detail);
        assert!(unit.unwrap().is_unit());
        assert_eq!(check_identity(20, 15, 1, 1e-9).status, Status::Pass);
        for c in check_convergence(20, 60, 1, 1e-8, 1e6, 0.99) {
            assert_eq!(c.status, Status::Pass, "{}", c.detail);
        }
        assert_eq!(check_choice(500, 1, 50.0).status, Status::Pass);
        assert_eq!(check_unit_circle(200, 1).status, Status::Pass);
    }
}
