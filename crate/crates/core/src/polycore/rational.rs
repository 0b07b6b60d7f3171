//! Helpers around [`BigRational`]: construction, exact decimal parsing and
//! conversions to and from `f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(x: &Rational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Very large numerator/denominator pairs: scale both down first.
    let n = x.numer();
    let d = x.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Exact rational nearest to `x` among fractions with denominator `10^digits`.
pub fn from_f64_decimal(x: f64, digits: u32) -> Rational {
    let scale = 10f64.powi(digits as i32);
    let scaled = (x * scale).round();
    let numer = BigInt::from(scaled as i128);
    Rational::new(numer, BigInt::from(10u64).pow(digits))
}

/// Exact binary expansion of a finite `f64`.
pub fn from_f64_exact(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

pub fn pow(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

pub fn min<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn max<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if a >= b {
        a
    } else {
        b
    }
}

/// Parses `p/q`, integers, decimals (`-8.4`, `.5`) and scientific notation
/// (`1e-4`, `2.5E3`) exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let err = || Error::Parse(s.to_string());
    if t.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = parse_decimal(num.trim()).ok_or_else(err)?;
        let d = parse_decimal(den.trim()).ok_or_else(err)?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(n / d);
    }
    parse_decimal(t).ok_or_else(err)
}

fn parse_decimal(t: &str) -> Option<Rational> {
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = match digits.split_once('.') {
        Some((w, f)) => (w, f),
        None => (digits, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{whole}{frac}");
    let numer: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    let ten = BigInt::from(10);
    let scale = exponent - frac.len() as i32;
    let mut value = Rational::from_integer(numer);
    if scale >= 0 {
        value *= Rational::from_integer(ten.pow(scale as u32));
    } else {
        value /= Rational::from_integer(ten.pow((-scale) as u32));
    }
    Some(if negative { -value } else { value })
}

/// Compact human-readable form: integers as `n`, otherwise `p/q`.
pub fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Shortest terminating decimal if the denominator is of the form 2^a 5^b,
/// otherwise `p/q`.
pub fn fmt_decimal_or_fraction(x: &Rational) -> String {
    let mut d = x.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut k2 = 0u32;
    let mut k5 = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        k2 += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        k5 += 1;
    }
    if !d.is_one() || x.is_integer() {
        return fmt_rational(x);
    }
    let places = k2.max(k5);
    let scaled = (x * Rational::from_integer(BigInt::from(10).pow(places))).to_integer();
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = format!("{:0>width$}", digits, width = places as usize + 1);
    let (w, f) = digits.split_at(digits.len() - places as usize);
    format!("{}{}.{}", if neg { "-" } else { "" }, w, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_decimals_and_exponents() {
        assert_eq!(parse_rational("512/625").unwrap(), rat(512, 625));
        assert_eq!(parse_rational("4.4").unwrap(), rat(22, 5));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("1e-4").unwrap(), rat(1, 10000));
        assert_eq!(parse_rational("2.5E3").unwrap(), int(2500));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("3/0.5").unwrap(), int(6));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn formats() {
        assert_eq!(fmt_rational(&rat(-3, 6)), "-1/2");
        assert_eq!(fmt_decimal_or_fraction(&rat(22, 5)), "4.4");
        assert_eq!(fmt_decimal_or_fraction(&rat(-1, 8)), "-0.125");
        assert_eq!(fmt_decimal_or_fraction(&rat(1, 3)), "1/3");
        assert_eq!(fmt_decimal_or_fraction(&int(7)), "7");
    }

    #[test]
    fn converts_huge_values() {
        let big = Rational::new(BigInt::from(10).pow(400), BigInt::from(10).pow(399) * 3);
        assert!((to_f64(&big) - 10.0 / 3.0).abs() < 1e-12);
    }
}
