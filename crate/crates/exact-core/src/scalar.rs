use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::CoreError;

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `n/d`. Panics when `d` is zero.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Integer power with a possibly negative exponent.
pub fn pow(base: &Scalar, exp: i64) -> Result<Scalar, CoreError> {
    if exp < 0 {
        if base.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        return Ok(pow_unsigned(&base.recip(), exp.unsigned_abs()));
    }
    Ok(pow_unsigned(base, exp as u64))
}

fn pow_unsigned(base: &Scalar, mut exp: u64) -> Scalar {
    let mut acc = Scalar::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &b;
        }
        exp >>= 1;
        if exp > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Parses `"p/q"` or `"p"` exactly.
pub fn parse_scalar(text: &str) -> Result<Scalar, CoreError> {
    let trimmed = text.trim();
    let err = || CoreError::ParseScalar(text.to_string());
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(num, den))
}

/// Parses a comma separated list of scalars. The empty string gives an empty list.
pub fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>, CoreError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed.split(',').map(parse_scalar).collect()
}

/// Canonical text form, `"p/q"` or `"p"`.
pub fn format_scalar(value: &Scalar) -> String {
    value.to_string()
}
