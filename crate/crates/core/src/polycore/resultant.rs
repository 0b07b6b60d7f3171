use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::{int, pow, Rational};
use crate::error::{domain, Result};

/// Resultant of two nonzero polynomials, with the sign of the Sylvester
/// determinant `det Syl(p, q)`.
///
/// Computed along the Euclidean remainder sequence over the rationals:
/// `Res(p, q) = (-1)^(mn) lc(q)^(m - deg r) Res(q, r)` with `r = p mod q`.
pub fn resultant(p: &Polynomial, q: &Polynomial) -> Result<Rational> {
    if p.is_zero() || q.is_zero() {
        return domain("resultant of the zero polynomial");
    }
    let mut a = p.clone();
    let mut b = q.clone();
    let mut acc = Rational::one();
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            return Ok(acc * pow(b.leading_coefficient().unwrap(), m));
        }
        let r = a.rem(&b);
        let Some(k) = r.degree() else {
            return Ok(Rational::zero());
        };
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= pow(b.leading_coefficient().unwrap(), m - k);
        a = b;
        b = r;
    }
}

/// `(-1)^(n(n-1)/2) Res(p, p') / a_n` for `deg p = n >= 2`.
pub fn discriminant(p: &Polynomial) -> Result<Rational> {
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        _ => return domain("discriminant needs degree at least 2"),
    };
    let res = resultant(p, &p.derivative())?;
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -int(1) } else { int(1) };
    Ok(sign * res / p.leading_coefficient().unwrap())
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;

    #[test]
    fn linear_factors() {
        // Sylvester determinant of [[1, -a], [1, -b]] is a - b.
        let a = rat(3, 2);
        let b = int(-5);
        let pa = Polynomial::from_roots(&[a.clone()]);
        let pb = Polynomial::from_roots(&[b.clone()]);
        assert_eq!(resultant(&pa, &pb).unwrap(), &a - &b);
    }

    #[test]
    fn repeated_root_gives_zero() {
        let p = Polynomial::from_roots(&[int(1), int(1), int(4)]);
        assert!(resultant(&p, &p.derivative()).unwrap().is_zero());
        assert!(discriminant(&p).unwrap().is_zero());
    }

    #[test]
    fn quadratic_discriminant() {
        for (b, c) in [(3, 1), (-2, 5), (0, -7)] {
            let p = Polynomial::from_ints(&[c, b, 1]);
            assert_eq!(discriminant(&p).unwrap(), int(b * b - 4 * c));
        }
    }

    #[test]
    fn low_degree_is_a_domain_error() {
        assert!(discriminant(&Polynomial::from_ints(&[1, 1])).is_err());
        assert!(resultant(&Polynomial::zero(), &Polynomial::one()).is_err());
    }

    #[test]
    fn constants() {
        let two = Polynomial::from_ints(&[2]);
        let cubic = Polynomial::from_ints(&[1, 0, 0, 1]);
        assert_eq!(resultant(&two, &cubic).unwrap(), int(8));
        assert_eq!(resultant(&cubic, &two).unwrap(), int(8));
        assert_eq!(resultant(&two, &two).unwrap(), int(1));
    }
}
