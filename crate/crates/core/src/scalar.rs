//! Exact rational scalars.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(v: BigInt) -> Scalar {
    Scalar::from_integer(v)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = |msg: &str| Error::Parse { pos: 0, msg: String::from(msg) };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("invalid integer numerator"))?;
    let den: BigInt = den.parse().map_err(|_| bad("invalid integer denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Scalar::new(num, den))
}

pub fn lcm_of_denominators<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Scalar>,
{
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Integer gcd of the numerators; zero for an empty or all-zero list.
pub fn gcd_of_integers<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigInt>,
{
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Scales a vector to a primitive integer vector whose first nonzero
/// entry is positive; returns the scaled copy (zero vector unchanged).
pub fn primitive_vector(values: &[Scalar]) -> Vec<Scalar> {
    let den = lcm_of_denominators(values);
    let ints: Vec<BigInt> = values.iter().map(|v| (v * from_bigint(den.clone())).to_integer()).collect();
    let g = gcd_of_integers(ints.iter());
    if g.is_zero() {
        return values.to_vec();
    }
    let sign = match ints.iter().find(|v| !v.is_zero()) {
        Some(v) if v.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|v| from_bigint(v / &g * &sign)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-6/4").unwrap(), ratio(-3, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn primitive_vector_normalizes_sign_and_content() {
        let v = [ratio(-1, 2), int(0), ratio(3, 4)];
        assert_eq!(primitive_vector(&v), [int(2), int(0), int(-3)]);
    }
}
