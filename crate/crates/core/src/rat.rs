//! Rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps the fraction reduced with a
//! positive denominator. This module only adds construction and text helpers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational '{0}'")]
pub struct ParseRatError(pub String);

pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let bad = || ParseRatError(s.to_string());
    let t = s.trim();
    let int = |x: &str| -> Result<BigInt, ParseRatError> {
        let x = x.trim();
        let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        x.parse::<BigInt>().map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(Rat::from_integer(int(t)?)),
        Some((p, q)) => {
            let q = int(q)?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(int(p)?, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in ["0", "1", "-3", "2/3", "-7/12", "123456789012345678901234567891/2"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(format_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rat(&parse_rat("0/5").unwrap()), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["1/0", "", "a", "1/", "/2", "1.5", "--1", "1/2/3"] {
            assert!(parse_rat(s).is_err(), "{s}");
        }
    }
}
