//! The degree-6 stratifying polynomials in `(a, b, c)`.
//!
//! Each term is `(coefficient, deg a, deg b, deg c)`, listed in the order they
//! are usually written.

/// `d`: discriminant of `q = x^4 + 4x^3 + ax^2 + bx + c`.
pub const D_TERMS: [(i64, u8, u8, u8); 16] = [
    (16, 4, 0, 1),
    (-4, 3, 2, 0),
    (-64, 3, 0, 1),
    (16, 2, 2, 0),
    (-320, 2, 1, 1),
    (-128, 2, 0, 2),
    (72, 1, 3, 0),
    (144, 1, 2, 1),
    (1152, 1, 1, 1),
    (2304, 1, 0, 2),
    (-27, 0, 4, 0),
    (-256, 0, 3, 0),
    (-96, 0, 2, 1),
    (-768, 0, 1, 2),
    (256, 0, 0, 3),
    (-6912, 0, 0, 2),
];

/// `s`: vanishes where two values of `p` at roots of `q` coincide.
pub const S_TERMS: [(i64, u8, u8, u8); 57] = [
    (37500, 7, 1, 0),
    (-15625, 6, 2, 0),
    (-688000, 6, 1, 0),
    (-90000, 6, 0, 1),
    (-480000, 5, 2, 0),
    (-450000, 5, 1, 1),
    (3624960, 5, 1, 0),
    (1651200, 5, 0, 1),
    (600000, 4, 3, 0),
    (187500, 4, 2, 1),
    (13363200, 4, 2, 0),
    (13824000, 4, 1, 1),
    (-5898240, 4, 1, 0),
    (1080000, 4, 0, 2),
    (-8699904, 4, 0, 1),
    (-125000, 3, 4, 0),
    (-9344000, 3, 3, 0),
    (-8160000, 3, 2, 1),
    (-73662464, 3, 2, 0),
    (1800000, 3, 1, 2),
    (-163184640, 3, 1, 1),
    (-28416000, 3, 0, 2),
    (14155776, 3, 0, 1),
    (1440000, 2, 4, 0),
    (1200000, 2, 3, 1),
    (3932160, 2, 3, 0),
    (-750000, 2, 2, 2),
    (126259200, 2, 2, 1),
    (116391936, 2, 2, 0),
    (-24576000, 2, 1, 2),
    (723517440, 2, 1, 1),
    (-4320000, 2, 0, 3),
    (299630592, 2, 0, 2),
    (19046400, 1, 4, 0),
    (-46080000, 1, 3, 1),
    (154140672, 1, 3, 0),
    (23040000, 1, 2, 2),
    (-438829056, 1, 2, 1),
    (-2400000, 1, 1, 3),
    (-47185920, 1, 1, 2),
    (-1056964608, 1, 1, 1),
    (70656000, 1, 0, 3),
    (-1264582656, 1, 0, 2),
    (-4096000, 0, 5, 0),
    (7680000, 0, 4, 1),
    (-66322432, 0, 4, 0),
    (-4800000, 0, 3, 2),
    (96337920, 0, 3, 1),
    (1000000, 0, 2, 3),
    (-8601600, 0, 2, 2),
    (276824064, 0, 2, 1),
    (-23552000, 0, 1, 3),
    (421527552, 0, 1, 2),
    (-203423744, 0, 0, 3),
    (-268435456, 0, 3, 0),
    (1811939328, 0, 0, 2),
    (5760000, 0, 0, 4),
];

/// `z`: vanishes where a value of `p` at a root of `q` is zero.
pub const Z_TERMS: [(i64, u8, u8, u8); 16] = [
    (5625, 4, 0, 1),
    (-1250, 3, 2, 0),
    (-21600, 3, 0, 1),
    (4800, 2, 2, 0),
    (-120000, 2, 1, 1),
    (-60000, 2, 0, 2),
    (24000, 1, 3, 0),
    (60000, 1, 2, 1),
    (414720, 1, 1, 1),
    (1036800, 1, 0, 2),
    (-10000, 0, 4, 0),
    (-81920, 0, 3, 0),
    (-38400, 0, 2, 1),
    (-384000, 0, 1, 2),
    (160000, 0, 0, 3),
    (-2985984, 0, 0, 2),
];
use num_traits::Zero;

use crate::polycore::{int, pow, Rational};

/// Exact value of a term list at `(a, b, c)`.
pub fn eval_exact(terms: &[(i64, u8, u8, u8)], a: &Rational, b: &Rational, c: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for &(k, i, j, l) in terms {
        acc += int(k) * pow(a, i as usize) * pow(b, j as usize) * pow(c, l as usize);
    }
    acc
}

/// Floating value and a bound on its rounding error.
pub fn eval_f64(terms: &[(i64, u8, u8, u8)], a: f64, b: f64, c: f64) -> (f64, f64) {
    let mut acc = 0.0;
    let mut mag = 0.0;
    for &(k, i, j, l) in terms {
        let t = k as f64 * a.powi(i as i32) * b.powi(j as i32) * c.powi(l as i32);
        acc += t;
        mag += t.abs();
    }
    (acc, mag * 64.0 * f64::EPSILON)
}
