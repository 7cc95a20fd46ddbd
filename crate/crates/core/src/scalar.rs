//! Exact rational scalars.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

/// `numer / denom`, reduced. Panics when `denom == 0`.
pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn half() -> Scalar {
    ratio(1, 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError {
    pub text: String,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid rational literal {:?} (expected an integer or \"p/q\")",
            self.text
        )
    }
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`, `q` nonzero). Decimal
/// notation is rejected so that every value entering the system is exact.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError {
        text: String::from(text),
    };
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(numer) {
        return Err(err());
    }
    let numer = BigInt::from_str(numer.trim_start_matches('+')).map_err(|_| err())?;
    let denom = match denom {
        Some(d) => {
            if !d.bytes().all(|b| b.is_ascii_digit()) || d.is_empty() {
                return Err(err());
            }
            BigInt::from_str(d).map_err(|_| err())?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(numer, denom))
}

/// Formats a scalar as `"p"` or `"p/q"`.
/// The value as an `i64` when it is an integer in range.
pub fn to_i64(value: &Scalar) -> Option<i64> {
    use num_traits::ToPrimitive;
    if value.is_integer() {
        value.numer().to_i64()
    } else {
        None
    }
}

pub fn format_scalar(value: &Scalar) -> String {
    use alloc::format;
    if value.is_integer() {
        format!("{}", value.numer())
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Writes `coef` as a multiplier in front of a basis monomial: the caller has
/// already emitted the sign, so only `|coef|` is written and `1` is elided.
pub(crate) fn write_coefficient(f: &mut fmt::Formatter<'_>, coef: &Scalar) -> fmt::Result {
    let abs = coef.abs();
    if abs.is_one() {
        Ok(())
    } else if abs.is_integer() {
        write!(f, "{}", abs.numer())
    } else {
        write!(f, "({}/{})", abs.numer(), abs.denom())
    }
}
