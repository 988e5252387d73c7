//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Every coefficient in the system is an arbitrary-precision rational.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "zero denominator");
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `p`, `-p`, `p/q` or `-p/q`. Decimals are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let s = text.trim();
    let bad = || Error::Parse {
        offset: 0,
        message: format!("not a rational literal: {text:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix(['-', '+']).unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => {
            if !valid_int(d, false) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse {
            offset: 0,
            message: format!("zero denominator in {text:?}"),
        });
    }
    Ok(Scalar::new(n, d))
}

/// Renders as `p` or `p/q` in lowest terms.
pub fn format_scalar(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Converts an integral scalar to `i64` if it fits.
pub fn to_i64(c: &Scalar) -> Option<i64> {
    if !c.is_integer() {
        return None;
    }
    i64::try_from(c.numer()).ok()
}

pub fn abs(c: &Scalar) -> Scalar {
    c.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_scalar("2").unwrap(), int(2));
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar(" 3/7 ").unwrap(), frac(3, 7));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("0.5").is_err());
        assert!(parse_scalar("1/-2").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn format_round_trip() {
        for c in [int(0), int(-5), frac(7, 3), frac(-1, 4)] {
            assert_eq!(parse_scalar(&format_scalar(&c)).unwrap(), c);
        }
        assert_eq!(format_scalar(&frac(4, 2)), "2");
    }
}
