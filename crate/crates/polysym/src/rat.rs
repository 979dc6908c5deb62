//! Exact rational scalars.
//!
//! All scalar entries in the toolkit are arbitrary-precision rationals,
//! kept in lowest terms with a positive denominator. Numbers are parsed
//! from `num/den` fractions, plain integers, or decimal literals
//! (`-1.25`, `3e2`), always exactly.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

pub type Rat = BigRational;

/// Rational from an integer pair; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn int(num: i64) -> Rat {
    BigRational::from_integer(BigInt::from(num))
}

/// Bit size of a rational, used for pivot selection.
pub fn bit_size(r: &Rat) -> u64 {
    r.numer().bits() + r.denom().bits()
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Parses `num`, `num/den` or a decimal literal with optional exponent.
pub fn parse_rat(token: &str) -> Result<Rat> {
    let bad = || Error::InvalidInput(format!("malformed rational `{token}`"));
    let s = token.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let numer: BigInt = n.parse().map_err(|_| bad())?;
        let denom: BigInt = d.parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(numer, denom));
    }
    // Decimal literal: [sign] digits [.digits] [eE [sign] digits]
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits = format!(
        "{}{}",
        if int_part.is_empty() { "0" } else { int_part },
        frac_part
    );
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let shift = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        BigRational::from_integer(numer * ten.pow(shift as u32))
    } else {
        BigRational::new(numer, ten.pow((-shift) as u32))
    })
}

/// Formats a rational as `num` or `num/den`.
pub fn format_rat(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators of a sequence.
pub fn lcm_denoms<'a>(iter: impl Iterator<Item = &'a Rat>) -> BigInt {
    let mut acc = BigInt::one();
    for r in iter {
        acc = num::integer::lcm(acc, r.denom().clone());
    }
    acc
}

/// Scales a rational vector to a primitive integer vector with positive
/// leading sign; returns the canonical representative of its ray.
pub fn primitive_vector(v: &[Rat]) -> Vec<BigInt> {
    let lcm = lcm_denoms(v.iter());
    let mut ints: Vec<BigInt> = v.iter().map(|r| r.numer() * &lcm / r.denom()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = num::integer::gcd(gcd, x.clone());
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for x in &mut ints {
            *x /= &gcd;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.sign() == Sign::Minus {
            for x in &mut ints {
                *x = -(x.clone());
            }
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert_eq!(parse_rat(" -2 ").unwrap(), int(-2));
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rat("1.5").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("-0.04").unwrap(), rat(-1, 25));
        assert_eq!(parse_rat("2e3").unwrap(), int(2000));
        assert_eq!(parse_rat("1.25e-2").unwrap(), rat(1, 80));
        assert_eq!(parse_rat(".5").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.2.3").is_err());
    }

    #[test]
    fn primitive_vector_canonicalizes_rays() {
        let v = vec![rat(-2, 3), rat(4, 3)];
        assert_eq!(
            primitive_vector(&v),
            vec![BigInt::from(1), BigInt::from(-2)]
        );
        let w = vec![int(0), int(6), int(-9)];
        assert_eq!(
            primitive_vector(&w),
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(-3)]
        );
    }
}
