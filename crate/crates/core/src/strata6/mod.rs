//! Degree-6 normal form `p' = x q(x)`, `q = x^4 + 4x^3 + ax^2 + bx + c`.
//!
//! The main triangle at `c = γ` is where `q` has four distinct real roots.
//! The curves `s = 0` (two values of `p` at roots of `q` coincide) and
//! `z = 0` (such a value equals `p(0) = 0`) cut it into constant-passport
//! domains.

mod bifurcation;
mod chart;
pub mod formulas;
mod scan;

use num_traits::{Signed, Zero};
use serde::Serialize;

pub use bifurcation::{detect_bifurcations, BifurcationReport, Threshold};
pub use chart::RootChart;
pub use scan::{
    passports_present, scan_section, scan_section_with, section_curves, section_curves_in, Component6, ScanOptions,
    SectionCurves, SectionScan, Signature,
};

use crate::error::Result;
use crate::morse::{default_tol, passport, PassportOutcome};
use crate::polycore::{int, rat, ser_rational, Polynomial, Rational, SturmChain};
use crate::sign::Sign;
use crate::snakes::{enumerate, Passport};
use formulas::{eval_exact, eval_f64, D_TERMS, S_TERMS, Z_TERMS};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Param6 {
    #[serde(serialize_with = "ser_rational")]
    pub a: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub b: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c: Rational,
}

impl Param6 {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Param6 { a, b, c }
    }

    pub fn q(&self) -> Polynomial {
        Polynomial::new(vec![self.c.clone(), self.b.clone(), self.a.clone(), int(4), int(1)])
    }

    /// `p = ∫_0^x t q(t) dt`.
    pub fn polynomial(&self) -> Polynomial {
        (&Polynomial::x() * &self.q()).integrate_from_zero()
    }

    /// Inside `Π = (0,6] x (0,4] x (0,1]`.
    pub fn in_box(&self) -> bool {
        self.a.is_positive()
            && self.b.is_positive()
            && self.c.is_positive()
            && self.a <= int(6)
            && self.b <= int(4)
            && self.c <= int(1)
    }

    /// Parameters of `q = ∏ (x + t_i)`.
    pub fn from_negated_roots(t: [&Rational; 4]) -> Self {
        let e2 = t[0] * t[1] + t[0] * t[2] + t[0] * t[3] + t[1] * t[2] + t[1] * t[3] + t[2] * t[3];
        let e3 = t[0] * t[1] * t[2] + t[0] * t[1] * t[3] + t[0] * t[2] * t[3] + t[1] * t[2] * t[3];
        let e4 = t[0] * t[1] * t[2] * t[3];
        Param6::new(e2, e3, e4)
    }
}

pub fn d(pt: &Param6) -> Rational {
    eval_exact(&D_TERMS, &pt.a, &pt.b, &pt.c)
}

pub fn s(pt: &Param6) -> Rational {
    eval_exact(&S_TERMS, &pt.a, &pt.b, &pt.c)
}

pub fn z(pt: &Param6) -> Rational {
    eval_exact(&Z_TERMS, &pt.a, &pt.b, &pt.c)
}

/// Which stratifying polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Formula6 {
    D,
    S,
    Z,
}

impl Formula6 {
    pub fn terms(self) -> &'static [(i64, u8, u8, u8)] {
        match self {
            Formula6::D => &D_TERMS,
            Formula6::S => &S_TERMS,
            Formula6::Z => &Z_TERMS,
        }
    }

    /// Sign at a point given in floats that are exactly the rationals
    /// `(a, b, c)`; falls back to exact arithmetic near zero.
    pub fn sign_filtered(self, a: f64, b: f64, c: f64, exact: impl FnOnce() -> Param6) -> Sign {
        let (v, err) = eval_f64(self.terms(), a, b, c);
        if v.abs() > err {
            return Sign::of_f64(v);
        }
        let pt = exact();
        Sign::of(&eval_exact(self.terms(), &pt.a, &pt.b, &pt.c))
    }
}

/// `(sign d, sign s, sign z)`, exact.
pub fn invariants6(pt: &Param6) -> (Sign, Sign, Sign) {
    (Sign::of(&d(pt)), Sign::of(&s(pt)), Sign::of(&z(pt)))
}

/// `q` has four distinct real roots.
pub fn in_main_triangle(pt: &Param6) -> bool {
    if d(pt).is_zero() {
        return false;
    }
    SturmChain::new(&pt.q()).count_real() == 4
}

/// The sixteen passports of order 5 in lexicographic order; `number` is the
/// 1-based position in this list.
pub fn order5_passports() -> &'static [Passport] {
    static LIST: once_cell::sync::Lazy<Vec<Passport>> =
        once_cell::sync::Lazy::new(|| enumerate(5).expect("order 5"));
    &LIST
}

pub fn passport_number(p: &Passport) -> Option<usize> {
    order5_passports().iter().position(|x| x == p).map(|i| i + 1)
}

/// Exact passport of the degree-6 polynomial at `pt`.
pub fn passport6(pt: &Param6) -> Result<PassportOutcome> {
    passport(&pt.polynomial(), &default_tol())
}

/// Point of the section `c = γ` where the value at the root `-r` of `q`
/// vanishes: solves `q(-r) = 0`, `p(-r) = 0` for `(a, b)`.
pub fn zero_value_point(r: &Rational, gamma: &Rational) -> Option<Param6> {
    // q(-r) = r^4 - 4r^3 + a r^2 - b r + c
    // p(-r) = r^6/6 - 4r^5/5 + a r^4/4 - b r^3/3 + c r^2/2
    let r2 = r * r;
    let r3 = &r2 * r;
    let r4 = &r3 * r;
    let r5 = &r4 * r;
    let r6 = &r5 * r;
    // a r^2 - b r = -(r^4 - 4r^3 + c)
    let rhs1 = -(&r4 - int(4) * &r3 + gamma);
    // a r^4/4 - b r^3/3 = -(r^6/6 - 4r^5/5 + c r^2/2)
    let rhs2 = -(&r6 * rat(1, 6) - &r5 * rat(4, 5) + gamma * &r2 * rat(1, 2));
    solve2([[r2.clone(), -r.clone()], [&r4 * rat(1, 4), -&r3 * rat(1, 3)]], [rhs1, rhs2])
        .map(|(a, b)| Param6::new(a, b, gamma.clone()))
}

/// Point where the values at roots `-u` and `-w` of `q` coincide; the three
/// conditions are linear in `(a, b, c)`.
pub fn equal_values_point(u: &Rational, w: &Rational) -> Option<Param6> {
    let row_q = |r: &Rational| -> ([Rational; 3], Rational) {
        let r2 = r * r;
        ([r2.clone(), -r.clone(), int(1)], -(&r2 * &r2 - int(4) * &r2 * r))
    };
    let pcoef = |r: &Rational| -> ([Rational; 3], Rational) {
        let r2 = r * r;
        let r3 = &r2 * r;
        (
            [&r2 * &r2 * rat(1, 4), -&r3 * rat(1, 3), &r2 * rat(1, 2)],
            -(&r3 * &r3 * rat(1, 6) - &r3 * &r2 * rat(4, 5)),
        )
    };
    let (qu, bu) = row_q(u);
    let (qw, bw) = row_q(w);
    let (pu, cu) = pcoef(u);
    let (pw, cw) = pcoef(w);
    let tie: [Rational; 3] = [&pu[0] - &pw[0], &pu[1] - &pw[1], &pu[2] - &pw[2]];
    let m = [qu, qw, tie];
    let rhs = [bu, bw, cu - cw];
    solve3(m, rhs).map(|(a, b, c)| Param6::new(a, b, c))
}

fn solve2(m: [[Rational; 2]; 2], r: [Rational; 2]) -> Option<(Rational, Rational)> {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        return None;
    }
    let x = (&r[0] * &m[1][1] - &m[0][1] * &r[1]) / &det;
    let y = (&m[0][0] * &r[1] - &r[0] * &m[1][0]) / &det;
    Some((x, y))
}

fn solve3(m: [[Rational; 3]; 3], r: [Rational; 3]) -> Option<(Rational, Rational, Rational)> {
    let det3 = |m: &[[Rational; 3]; 3]| -> Rational {
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    };
    let det = det3(&m);
    if det.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    for col in 0..3 {
        let mut mc = m.clone();
        for row in 0..3 {
            mc[row][col] = r[row].clone();
        }
        out.push(det3(&mc) / &det);
    }
    let c = out.pop()?;
    let b = out.pop()?;
    let a = out.pop()?;
    Some((a, b, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::discriminant;

    #[test]
    fn trivial_values() {
        for a in [int(0), rat(7, 3), int(6)] {
            assert!(d(&Param6::new(a, int(0), int(0))).is_zero());
        }
        assert!(z(&Param6::new(int(0), int(0), int(0))).is_zero());
    }

    #[test]
    fn d_is_the_discriminant() {
        for (a, b, c) in [(rat(1, 2), rat(3, 7), rat(1, 9)), (int(5), int(3), rat(2, 3)), (rat(-4, 5), int(2), int(7))] {
            let pt = Param6::new(a, b, c);
            assert_eq!(discriminant(&pt.q()).unwrap(), d(&pt));
        }
    }

    #[test]
    fn degenerate_constructions() {
        let pt = zero_value_point(&rat(1, 2), &rat(1, 2)).unwrap();
        assert!(z(&pt).is_zero());
        assert!(pt.q().eval(&rat(-1, 2)).is_zero());
        assert!(pt.polynomial().eval(&rat(-1, 2)).is_zero());
        let pt = equal_values_point(&rat(1, 2), &rat(3, 2)).unwrap();
        let p = pt.polynomial();
        assert_eq!(p.eval(&rat(-1, 2)), p.eval(&rat(-3, 2)));
        assert!(s(&pt).is_zero());
    }

    #[test]
    fn roots_chart_parameters() {
        let t = [rat(3, 2), int(1), rat(1, 2), rat(1, 10)];
        let pt = Param6::from_negated_roots([&t[0], &t[1], &t[2], &t[3]]);
        let q = pt.q();
        // t sums to 31/10, so x^3 coefficient differs; check roots of the product directly
        let prod = t.iter().fold(Polynomial::one(), |acc, ti| &acc * &Polynomial::new(vec![ti.clone(), int(1)]));
        assert_eq!(prod.coeff(2), q.coeff(2));
        assert_eq!(prod.coeff(1), q.coeff(1));
        assert_eq!(prod.coeff(0), q.coeff(0));
    }

    #[test]
    fn order5_numbering() {
        let list = order5_passports();
        assert_eq!(list.len(), 16);
        assert_eq!(list[0].entries(), &[1, 3, 2, 5, 4]);
        assert_eq!(list[15].entries(), &[4, 5, 2, 3, 1]);
        assert_eq!(passport_number(&list[7]), Some(8));
    }
}
