//! The complex literal syntax used by the CLI and the JSON formats:
//! `a+bi` where each part is a decimal (`1.25`, `-3e-2`) or an exact
//! fraction (`-1/2`). Either part may be omitted: `5`, `3/4i`, `-i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::complex::{FloatComplex, RationalComplex};
use super::ArithError;

/// A parsed literal. Its value is always held exactly; `exact` records
/// whether it was written with integers and fractions only. Decimal literals
/// stand in for irrational inputs and are routed to the float carrier.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexLiteral {
    pub value: RationalComplex,
    pub exact: bool,
}

impl ComplexLiteral {
    pub fn to_float(&self) -> FloatComplex {
        self.value.to_float()
    }
}

impl fmt::Display for ComplexLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{}", self.to_float())
        }
    }
}

impl FromStr for ComplexLiteral {
    type Err = ArithError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ArithError::Parse(input.to_string()));
        }
        let (re_part, im_part) = match s.strip_suffix('i') {
            None => (s.as_str(), None),
            Some(body) => match split_index(body) {
                Some(k) => (&body[..k], Some(&body[k..])),
                None => ("", Some(body)),
            },
        };
        let mut exact = true;
        let re = if re_part.is_empty() {
            BigRational::zero()
        } else {
            parse_real(re_part, &mut exact)?
        };
        let im = match im_part {
            None => BigRational::zero(),
            Some("") | Some("+") => BigRational::one(),
            Some("-") => -BigRational::one(),
            Some(t) => parse_real(t, &mut exact)?,
        };
        Ok(ComplexLiteral {
            value: RationalComplex::new(re, im),
            exact,
        })
    }
}

/// Position of the sign separating real and imaginary parts, skipping a
/// leading sign and exponent signs.
fn split_index(body: &str) -> Option<usize> {
    let bytes = body.as_bytes();
    (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
}

fn parse_real(token: &str, exact: &mut bool) -> Result<BigRational, ArithError> {
    let bad = || ArithError::Parse(token.to_string());
    if let Some((p, q)) = token.split_once('/') {
        let p: BigInt = p.trim_start_matches('+').parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match token.find(['e', 'E']) {
        Some(k) => {
            let e: i32 = token[k + 1..].parse().map_err(|_| bad())?;
            (&token[..k], e)
        }
        None => (token, 0),
    };
    let (neg, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if (int_part.is_empty() && frac_part.is_empty())
        || !all_digits(int_part)
        || !all_digits(frac_part)
    {
        return Err(bad());
    }
    if digits.contains('.') || token.contains(['e', 'E']) {
        *exact = false;
    }
    let n: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(n * Pow::pow(&ten, scale as u32))
    } else {
        BigRational::new(n, Pow::pow(&ten, (-scale) as u32))
    };
    if neg {
        value = -value;
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::ratio;

    fn lit(s: &str) -> ComplexLiteral {
        s.parse().unwrap()
    }

    #[test]
    fn exact_forms() {
        let l = lit("-1/2+3/4i");
        assert!(l.exact);
        assert_eq!(l.value, RationalComplex::new(ratio(-1, 2), ratio(3, 4)));
        assert_eq!(lit("5").value, RationalComplex::from_ints(5, 0));
        assert_eq!(lit("2+1i").value, RationalComplex::from_ints(2, 1));
        assert_eq!(lit("-i").value, RationalComplex::from_ints(0, -1));
        assert_eq!(lit("i").value, RationalComplex::from_ints(0, 1));
        assert_eq!(lit("3-i").value, RationalComplex::from_ints(3, -1));
        assert_eq!(
            lit("1/3i").value,
            RationalComplex::new(ratio(0, 1), ratio(1, 3))
        );
    }

    #[test]
    fn decimal_forms() {
        let l = lit("1.4142135+1.7320508i");
        assert!(!l.exact);
        assert_eq!(l.value.re, ratio(14142135, 10_000_000));
        let l = lit("0.3-0.1i");
        assert_eq!(l.value, RationalComplex::new(ratio(3, 10), ratio(-1, 10)));
        let l = lit("1e-3+2.5E+1i");
        assert_eq!(l.value, RationalComplex::new(ratio(1, 1000), ratio(25, 1)));
    }

    #[test]
    fn errors_name_the_token() {
        match "2+xi".parse::<ComplexLiteral>() {
            Err(ArithError::Parse(t)) => assert_eq!(t, "+x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!("".parse::<ComplexLiteral>().is_err());
        assert!("1/0".parse::<ComplexLiteral>().is_err());
        assert!("..".parse::<ComplexLiteral>().is_err());
    }

    #[test]
    fn display_round_trips_exact_values() {
        for s in ["-1/2+3/4i", "5+0i", "0-7i", "2/3-1/9i"] {
            let l = lit(s);
            assert_eq!(lit(&l.to_string()), l);
        }
    }
}
