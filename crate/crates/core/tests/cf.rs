use cfdyn::arith::{ratio, Complex, FloatComplex, GaussianInt, RationalComplex, Scalar};
use cfdyn::cf::{
    choice_diamond, choice_hurwitz, convergent_value, convergents, determinants,
    diamond_step_bound, evaluate_cf, expand, phi_contains, ChoiceFunction,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn digit() -> impl Strategy<Value = GaussianInt> {
    (-6i64..7, -6i64..7)
        .prop_filter("|a| >= 2 in the 1-norm", |(x, y)| x.abs() + y.abs() >= 2)
        .prop_map(|(x, y)| GaussianInt::new(x, y))
}

fn rational() -> impl Strategy<Value = RationalComplex> {
    (-4000i64..4000, -4000i64..4000, 1i64..300)
        .prop_map(|(x, y, d)| RationalComplex::new(ratio(x, d), ratio(y, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn determinant_is_one_constant_unit(digits in prop::collection::vec(digit(), 1..30)) {
        let dets = determinants(&convergents(&digits));
        prop_assert!(dets[0].is_unit());
        prop_assert!(dets.iter().all(|d| *d == dets[0]));
    }

    #[test]
    fn convergents_evaluate_the_truncation(digits in prop::collection::vec(digit(), 1..12)) {
        let convs = convergents(&digits);
        for n in 0..digits.len() {
            let v = evaluate_cf::<num_rational::BigRational>(&digits[..=n], None).unwrap();
            prop_assert_eq!(Some(v), convergent_value(&convs[n + 2]));
        }
    }

    #[test]
    fn diamond_choice_lands_in_phi(z in rational()) {
        let (a, steps) = choice_diamond(&z).unwrap();
        prop_assert!(phi_contains(&z.sub_gaussian(&a)));
        prop_assert!(BigInt::from(steps) <= diamond_step_bound(&z));
    }

    #[test]
    fn hurwitz_choice_is_within_half(z in rational()) {
        let r = z.sub_gaussian(&choice_hurwitz(&z));
        let h = ratio(1, 2);
        prop_assert!(r.re.abs() <= h && r.im.abs() <= h);
    }

    #[test]
    fn exact_expansions_reconstruct(z in rational()) {
        let exp = expand(&z, &ChoiceFunction::Diamond, 25).unwrap();
        let tail = if exp.terminated { None } else { exp.remainders.last() };
        let back = evaluate_cf(&exp.digits, tail).unwrap();
        prop_assert_eq!(back, z);
    }
}

// the CLI's example literal, not an approximation of a constant
#[allow(clippy::approx_constant)]
#[test]
fn float_remainders_leave_the_unit_disk() {
    let z = FloatComplex::new(1.4142135, 1.7320508);
    let exp = expand(&z, &ChoiceFunction::Diamond, 40).unwrap();
    assert_eq!(exp.digits.len(), 40);
    assert!(exp.remainders[1..].iter().all(|r| r.abs() >= 1.0 - 1e-12));
}

#[test]
fn hurwitz_and_diamond_differ_on_a_corner() {
    let z: Complex<f64> = FloatComplex::new(0.45, 0.45);
    assert_eq!(choice_hurwitz(&z), GaussianInt::zero());
    assert_eq!(choice_diamond(&z).unwrap().0, GaussianInt::zero());
    let z = FloatComplex::new(0.9, 0.4);
    assert_eq!(choice_hurwitz(&z), GaussianInt::one());
    assert_eq!(choice_diamond(&z).unwrap().0, GaussianInt::one());
}
