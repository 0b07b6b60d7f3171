//! Degree-5 normal form `p' = x (x^3 + 3x^2 + b x + c)` with `b, c > 0`.
//!
//! Inside the curvilinear triangle OAB (where `q = x^3 + 3x^2 + bx + c` has
//! three distinct real roots) the curves `g = 0` and `h = 0` cut out five
//! regions of constant passport, separated by arcs carrying degenerate snakes.

use std::fmt;

use num_traits::{Signed, Zero};
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::contour::Polyline;
use crate::error::{Error, Result};
use crate::morse::{default_tol, interpolate, passport, PassportOutcome};
use crate::polycore::{
    int, isolate_real_roots, rat, refine_root, resultant, ser_rational, to_f64, IsolatedRoot,
    Polynomial, Rational,
};
use crate::sign::Sign;
use crate::snakes::Passport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Param5 {
    #[serde(serialize_with = "ser_rational")]
    pub b: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c: Rational,
}

impl Param5 {
    pub fn new(b: Rational, c: Rational) -> Self {
        Param5 { b, c }
    }

    /// `p = x^5 + (15/4)x^4 + (5b/3)x^3 + (5c/2)x^2`, so `p' = 5x q(x)`.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(vec![
            int(0),
            int(0),
            &self.c * rat(5, 2),
            &self.b * rat(5, 3),
            rat(15, 4),
            int(1),
        ])
    }

    pub fn q(&self) -> Polynomial {
        Polynomial::new(vec![self.c.clone(), self.b.clone(), int(3), int(1)])
    }
}

pub fn dq(b: &Rational, c: &Rational) -> Rational {
    let b2 = b * b;
    int(54) * b * c - int(108) * c - int(4) * &b2 * b + int(9) * &b2 - int(27) * c * c
}

pub fn g(b: &Rational, c: &Rational) -> Rational {
    let b2 = b * b;
    int(128) * &b2 * b - int(1998) * &b2 - int(216) * c * c + int(1512) * b * c + int(3645) * b
        - int(729) * c
}

pub fn h(b: &Rational, c: &Rational) -> Rational {
    let b2 = b * b;
    int(640) * &b2 * b - int(1350) * &b2 + int(5832) * c * c - int(9720) * b * c + int(18225) * c
}

fn g_f64(b: f64, c: f64) -> f64 {
    128.0 * b * b * b - 1998.0 * b * b - 216.0 * c * c + 1512.0 * b * c + 3645.0 * b - 729.0 * c
}

fn h_f64(b: f64, c: f64) -> f64 {
    640.0 * b * b * b - 1350.0 * b * b + 5832.0 * c * c - 9720.0 * b * c + 18225.0 * c
}

/// `(sign dq, sign g, sign h)`, exact.
pub fn invariants5(pt: &Param5) -> (Sign, Sign, Sign) {
    (
        Sign::of(&dq(&pt.b, &pt.c)),
        Sign::of(&g(&pt.b, &pt.c)),
        Sign::of(&h(&pt.b, &pt.c)),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Region5 {
    OAF,
    AEF,
    ODF,
    DEF,
    BDE,
}

impl Region5 {
    pub const ALL: [Region5; 5] = [Region5::OAF, Region5::AEF, Region5::ODF, Region5::DEF, Region5::BDE];

    pub fn passport(self) -> Passport {
        let v = match self {
            Region5::OAF => vec![4, 2, 3, 1],
            Region5::AEF => vec![3, 2, 4, 1],
            Region5::ODF => vec![4, 1, 3, 2],
            Region5::DEF => vec![3, 1, 4, 2],
            Region5::BDE => vec![2, 1, 4, 3],
        };
        Passport::new(v).unwrap()
    }

    fn from_passport(p: &Passport) -> Option<Region5> {
        Region5::ALL.into_iter().find(|r| &r.passport() == p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Arc5 {
    AF,
    OF,
    DF,
    EF,
    DE,
}

impl Arc5 {
    pub const ALL: [Arc5; 5] = [Arc5::AF, Arc5::OF, Arc5::DF, Arc5::EF, Arc5::DE];

    /// Number of the degenerate snake carried by the arc.
    pub fn degenerate_index(self) -> u8 {
        match self {
            Arc5::DF => 1,
            Arc5::AF => 2,
            Arc5::OF => 3,
            Arc5::EF => 4,
            Arc5::DE => 5,
        }
    }

    /// Tied ranks of the four critical values along the arc.
    pub fn pattern(self) -> Vec<usize> {
        match self {
            Arc5::DF => vec![3, 1, 3, 2],
            Arc5::AF => vec![3, 2, 3, 1],
            Arc5::OF => vec![3, 1, 2, 1],
            Arc5::EF => vec![2, 1, 3, 1],
            Arc5::DE => vec![2, 1, 3, 2],
        }
    }

    fn from_pattern(p: &[usize]) -> Option<Arc5> {
        Arc5::ALL.into_iter().find(|a| a.pattern() == p)
    }
}

impl fmt::Display for Region5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl fmt::Display for Arc5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Stratum5 {
    Region { region: Region5, passport: Passport },
    Arc { arc: Arc5, degenerate_index: u8 },
    /// The point F where the arcs meet.
    Junction,
    OutsideOAB,
}

impl fmt::Display for Stratum5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum5::Region { region, passport } => write!(f, "region {region} {passport}"),
            Stratum5::Arc { arc, degenerate_index } => {
                write!(f, "arc {arc} (degenerate snake {degenerate_index})")
            }
            Stratum5::Junction => write!(f, "junction F"),
            Stratum5::OutsideOAB => write!(f, "outside OAB"),
        }
    }
}

/// Side of the tangent line to `h = 0` at E: `c - 5b/6 + 25/16`.
/// It separates AEF from BDE, which share the signs of g and h.
fn tangent_at_e(b: &Rational, c: &Rational) -> Sign {
    Sign::of(&(c - b * rat(5, 6) + rat(25, 16)))
}

/// One interior rational point per region, confirmed by direct passports.
pub fn calibration_points() -> Vec<(Region5, Param5)> {
    vec![
        (Region5::OAF, Param5::new(rat(12, 5), rat(11, 20))),
        (Region5::AEF, Param5::new(rat(139, 50), rat(153, 200))),
        (Region5::ODF, Param5::new(rat(19, 10), rat(2, 25))),
        (Region5::DEF, Param5::new(rat(133, 50), rat(16, 25))),
        (Region5::BDE, Param5::new(rat(23, 10), rat(9, 50))),
    ]
}

type RegionKey = (Sign, Sign, Sign);

/// Sign key → region, built from the calibration points.
static CALIBRATION: Lazy<Vec<(RegionKey, Region5)>> = Lazy::new(|| {
    let mut table = Vec::new();
    for (region, pt) in calibration_points() {
        let found = passport(&pt.polynomial(), &default_tol()).expect("calibration passport");
        assert_eq!(found.snake(), Some(&region.passport()), "calibration point for {region}");
        let (_, sg, sh) = invariants5(&pt);
        table.push(((sg, sh, tangent_at_e(&pt.b, &pt.c)), region));
    }
    table
});

fn region_from_signs(sg: Sign, sh: Sign, side: Sign) -> Option<Region5> {
    let same_gh: Vec<&(RegionKey, Region5)> =
        CALIBRATION.iter().filter(|((g0, h0, _), _)| *g0 == sg && *h0 == sh).collect();
    match same_gh.as_slice() {
        [] => None,
        [(_, r)] => Some(*r),
        several => several.iter().find(|((_, _, s), _)| *s == side && !side.is_zero()).map(|(_, r)| *r),
    }
}

/// `q` has three distinct real roots and `b, c > 0`.
pub fn in_oab(pt: &Param5) -> bool {
    pt.b.is_positive() && pt.c.is_positive() && dq(&pt.b, &pt.c).is_positive()
}

pub fn classify5(pt: &Param5) -> Result<Stratum5> {
    if !in_oab(pt) {
        return Ok(Stratum5::OutsideOAB);
    }
    let (_, sg, sh) = invariants5(pt);
    let side = tangent_at_e(&pt.b, &pt.c);
    if !sg.is_zero() && !sh.is_zero() {
        if let Some(region) = region_from_signs(sg, sh, side) {
            return Ok(Stratum5::Region { region, passport: region.passport() });
        }
        return classify_directly(pt);
    }
    if sg.is_zero() && sh.is_zero() {
        return Ok(Stratum5::Junction);
    }
    let f = &LANDMARKS.f;
    let arc = if sg.is_zero() {
        // along g = 0: AF above F, DF below
        match compare_with_root(&pt.c, &f.c_poly, &f.c_root)? {
            Some(std::cmp::Ordering::Greater) => Some(Arc5::AF),
            Some(std::cmp::Ordering::Less) => Some(Arc5::DF),
            _ => None,
        }
    } else if sg == Sign::Positive {
        Some(Arc5::OF)
    } else {
        match side {
            Sign::Positive => Some(Arc5::EF),
            Sign::Negative => Some(Arc5::DE),
            Sign::Zero => None,
        }
    };
    match arc {
        Some(arc) => Ok(Stratum5::Arc { arc, degenerate_index: arc.degenerate_index() }),
        None => classify_directly(pt),
    }
}

/// Fallback for points the sign logic leaves undecided.
fn classify_directly(pt: &Param5) -> Result<Stratum5> {
    match passport(&pt.polynomial(), &default_tol())? {
        PassportOutcome::Snake(p) => match Region5::from_passport(&p) {
            Some(region) => Ok(Stratum5::Region { region, passport: p }),
            None => Err(Error::Domain(format!("unexpected passport {p}"))),
        },
        PassportOutcome::Degenerate(pattern) => match Arc5::from_pattern(&pattern) {
            Some(arc) => Ok(Stratum5::Arc { arc, degenerate_index: arc.degenerate_index() }),
            None => Ok(Stratum5::Junction),
        },
        PassportOutcome::NonMorse(_) => Ok(Stratum5::OutsideOAB),
    }
}

/// Compares `x` with the algebraic number isolated by `root`, refining as
/// needed. `None` when they coincide.
fn compare_with_root(x: &Rational, poly: &Polynomial, root: &IsolatedRoot) -> Result<Option<std::cmp::Ordering>> {
    use std::cmp::Ordering;
    if poly.eval(x).is_zero() && root.contains(x) {
        return Ok(None);
    }
    let mut r = root.clone();
    loop {
        if x < &r.lower {
            return Ok(Some(Ordering::Less));
        }
        if x > &r.upper {
            return Ok(Some(Ordering::Greater));
        }
        let w = r.width() / int(16);
        r = refine_root(poly, &r, &w)?;
    }
}

/// F as the common root of `g` and `h`: coordinates certified by isolating
/// the roots of the two eliminants.
#[derive(Clone, Debug, Serialize)]
pub struct CertifiedPoint {
    pub b: IsolatedRoot,
    pub c: IsolatedRoot,
    #[serde(skip)]
    pub b_poly: Polynomial,
    #[serde(skip)]
    pub c_poly: Polynomial,
    #[serde(skip)]
    c_root: IsolatedRoot,
    pub approx: (f64, f64),
}

#[derive(Clone, Debug, Serialize)]
pub struct Landmarks5 {
    pub o: Param5,
    pub a: Param5,
    pub b: Param5,
    pub d: Param5,
    pub e: Param5,
    pub f: CertifiedPoint,
}

static LANDMARKS: Lazy<Landmarks5> = Lazy::new(|| landmarks5().expect("landmark F"));

pub fn landmarks5() -> Result<Landmarks5> {
    Ok(Landmarks5 {
        o: Param5::new(int(0), int(0)),
        a: Param5::new(int(3), int(1)),
        b: Param5::new(rat(9, 4), int(0)),
        d: Param5::new(rat(135, 64), int(0)),
        e: Param5::new(rat(45, 16), rat(25, 32)),
        f: certify_f(2.73, 0.72, &rat(1, 100_000_000))?,
    })
}

fn newton_gh(mut b: f64, mut c: f64) -> Result<(f64, f64)> {
    for _ in 0..100 {
        let (gv, hv) = (g_f64(b, c), h_f64(b, c));
        let gb = 384.0 * b * b - 3996.0 * b + 1512.0 * c + 3645.0;
        let gc = -432.0 * c + 1512.0 * b - 729.0;
        let hb = 1920.0 * b * b - 2700.0 * b - 9720.0 * c;
        let hc = 11664.0 * c - 9720.0 * b + 18225.0;
        let det = gb * hc - gc * hb;
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let db = (gv * hc - gc * hv) / det;
        let dc = (gb * hv - gv * hb) / det;
        b -= db;
        c -= dc;
        if db.abs() + dc.abs() < 1e-15 {
            return Ok((b, c));
        }
    }
    if g_f64(b, c).abs() < 1e-9 && h_f64(b, c).abs() < 1e-9 {
        return Ok((b, c));
    }
    Err(Error::NoConvergence("Newton on (g, h)".into()))
}

/// `Res_c(g, h)` as a polynomial in `b` (eliminate = c) or `Res_b(g, h)` in `c`.
fn eliminant(eliminate_c: bool) -> Result<Polynomial> {
    let xs: Vec<Rational> = (0..=12).map(int).collect();
    let mut ys = Vec::new();
    for t in &xs {
        let (gp, hp) = if eliminate_c {
            let b = t;
            let b2 = b * b;
            (
                Polynomial::new(vec![
                    int(128) * &b2 * b - int(1998) * &b2 + int(3645) * b,
                    int(1512) * b - int(729),
                    int(-216),
                ]),
                Polynomial::new(vec![
                    int(640) * &b2 * b - int(1350) * &b2,
                    int(18225) - int(9720) * b,
                    int(5832),
                ]),
            )
        } else {
            let c = t;
            (
                Polynomial::new(vec![
                    int(-216) * c * c - int(729) * c,
                    int(1512) * c + int(3645),
                    int(-1998),
                    int(128),
                ]),
                Polynomial::new(vec![int(5832) * c * c + int(18225) * c, int(-9720) * c, int(-1350), int(640)]),
            )
        };
        ys.push(resultant(&gp, &hp)?);
    }
    Ok(interpolate(&xs, &ys))
}

fn nearest_root(poly: &Polynomial, target: f64, width: &Rational) -> Result<IsolatedRoot> {
    let mut best: Option<(f64, IsolatedRoot)> = None;
    for r in isolate_real_roots(poly)? {
        let r = refine_root(poly, &r, width)?;
        let dist = (r.approx() - target).abs();
        if best.as_ref().is_none_or(|(d, _)| dist < *d) {
            best = Some((dist, r));
        }
    }
    match best {
        Some((d, r)) if d < 1e-6 => Ok(r),
        _ => Err(Error::NoConvergence("no eliminant root near the Newton point".into())),
    }
}

fn certify_f(b0: f64, c0: f64, width: &Rational) -> Result<CertifiedPoint> {
    let (b, c) = newton_gh(b0, c0)?;
    let b_poly = eliminant(true)?;
    let c_poly = eliminant(false)?;
    let b_root = nearest_root(&b_poly, b, width)?;
    let c_root = nearest_root(&c_poly, c, width)?;
    Ok(CertifiedPoint { b: b_root, c: c_root.clone(), b_poly, c_poly, c_root, approx: (b, c) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Curve5 {
    Dq,
    G,
    H,
}

impl fmt::Display for Curve5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Curve5::Dq => "dq",
            Curve5::G => "g",
            Curve5::H => "h",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TracedCurve {
    pub curve: Curve5,
    pub polylines: Vec<Polyline>,
}

/// `F(b, c) = A c^2 + B(b) c + C(b)`: each curve is quadratic in `c`.
fn quadratic_in_c(curve: Curve5) -> (Rational, Polynomial, Polynomial) {
    let p = |v: &[i64]| Polynomial::from_ints(v);
    match curve {
        Curve5::Dq => (int(-27), p(&[-108, 54]), p(&[0, 0, 9, -4])),
        Curve5::G => (int(-216), p(&[-729, 1512]), p(&[0, 3645, -1998, 128])),
        Curve5::H => (int(5832), p(&[18225, -9720]), p(&[0, 0, -1350, 640])),
    }
}

/// Zero sets of dq, g, h in `[0,3] x [0,1]`.
///
/// Each curve is traced as the two branches `c(b)` of a quadratic in `c`,
/// sampled at `resolution + 1` values of `b` plus the exact fold points where
/// the branches meet (such as the cusp E), so cusps are not cut off.
pub fn trace_curves5(resolution: usize) -> Result<Vec<TracedCurve>> {
    if resolution < 16 {
        return Err(Error::Domain("resolution must be at least 16".into()));
    }
    let mut out = Vec::new();
    for curve in [Curve5::Dq, Curve5::G, Curve5::H] {
        out.push(TracedCurve { curve, polylines: trace_quadratic(curve, resolution)? });
    }
    Ok(out)
}

fn trace_quadratic(curve: Curve5, n: usize) -> Result<Vec<Polyline>> {
    let (a, bp, cp) = quadratic_in_c(curve);
    let delta = &(&bp * &bp) - &cp.scale(&(int(4) * &a));
    // (b, exact sign of the discriminant, is a fold point)
    let mut samples: Vec<(Rational, Sign, bool)> =
        (0..=n).map(|i| {
            let b = rat(3 * i as i64, n as i64);
            let s = Sign::of(&delta.eval(&b));
            (b, s, false)
        }).collect();
    for r in isolate_real_roots(&delta)? {
        let r = refine_root(&delta, &r, &rat(1, 1 << 50))?;
        let b = r.midpoint();
        if b > int(0) && b < int(3) {
            samples.push((b, Sign::Zero, true));
        }
    }
    samples.sort_by(|x, y| x.0.cmp(&y.0));
    samples.dedup_by(|x, y| x.0 == y.0);

    let af = to_f64(&a);
    let branch = |b: &Rational, fold: bool, sign: f64| -> (f64, f64) {
        let bf = to_f64(b);
        let root = if fold { 0.0 } else { to_f64(&delta.eval(b)).max(0.0).sqrt() };
        (bf, (-to_f64(&bp.eval(b)) + sign * root) / (2.0 * af))
    };
    let mut lines: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut k = 0;
    while k < samples.len() {
        if samples[k].1 == Sign::Negative {
            k += 1;
            continue;
        }
        let start = k;
        while k < samples.len() && samples[k].1 != Sign::Negative {
            k += 1;
        }
        let run = &samples[start..k];
        let minus: Vec<(f64, f64)> = run.iter().map(|(b, _, f)| branch(b, *f, -1.0)).collect();
        let plus: Vec<(f64, f64)> = run.iter().map(|(b, _, f)| branch(b, *f, 1.0)).collect();
        let left_fold = run[0].1 == Sign::Zero;
        let right_fold = run[run.len() - 1].1 == Sign::Zero && run.len() > 1;
        if left_fold {
            let mut joined: Vec<(f64, f64)> = minus.into_iter().rev().collect();
            joined.extend(plus.into_iter().skip(1));
            lines.push(joined);
        } else if right_fold {
            let mut joined = minus;
            joined.extend(plus.into_iter().rev().skip(1));
            lines.push(joined);
        } else {
            lines.push(minus);
            lines.push(plus);
        }
    }
    Ok(lines.into_iter().flat_map(clip_to_unit_c).filter(|l| l.points.len() >= 2).collect())
}

/// Pieces of a polyline with `0 <= c <= 1`, cut at the boundary.
fn clip_to_unit_c(points: Vec<(f64, f64)>) -> Vec<Polyline> {
    let inside = |p: &(f64, f64)| (0.0..=1.0).contains(&p.1);
    let mut out = Vec::new();
    let mut current: Vec<(f64, f64)> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            let q = points[i - 1];
            if inside(&q) != inside(p) {
                let edge = if q.1.max(p.1) > 1.0 && q.1.min(p.1) < 1.0 && (inside(&q) || inside(p)) {
                    1.0
                } else {
                    0.0
                };
                let t = (edge - q.1) / (p.1 - q.1);
                current.push((q.0 + t * (p.0 - q.0), edge));
                if !inside(p) {
                    out.push(Polyline { points: std::mem::take(&mut current) });
                }
            }
        }
        if inside(p) {
            current.push(*p);
        }
    }
    if !current.is_empty() {
        out.push(Polyline { points: current });
    }
    out
}

pub fn landmark_f() -> &'static CertifiedPoint {
    &LANDMARKS.f
}

/// Approximate coordinates of a certified point.
pub fn approx_point(p: &CertifiedPoint) -> (f64, f64) {
    (to_f64(&p.b.midpoint()), to_f64(&p.c.midpoint()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(b: Rational, c: Rational) -> Param5 {
        Param5::new(b, c)
    }

    #[test]
    fn formula_values_at_landmarks() {
        assert!(dq(&int(3), &int(1)).is_zero());
        let e = pt(rat(45, 16), rat(25, 32));
        assert!(h(&e.b, &e.c).is_zero());
        assert!(dq(&e.b, &e.c).is_zero());
        assert!(g(&rat(135, 64), &int(0)).is_zero());
        assert!(h(&rat(135, 64), &int(0)).is_zero());
        assert!(dq(&rat(9, 4), &int(0)).is_zero());
        assert!(g(&int(3), &int(1)).is_zero());
    }

    #[test]
    fn dq_is_the_discriminant_of_q() {
        for (b, c) in [(rat(1, 3), rat(2, 7)), (int(2), rat(1, 10)), (rat(-5, 2), int(4))] {
            let q = pt(b.clone(), c.clone()).q();
            assert_eq!(crate::polycore::discriminant(&q).unwrap(), dq(&b, &c));
        }
    }

    #[test]
    fn polynomial_normal_form() {
        let p = pt(int(2), rat(1, 2)).polynomial();
        let expect = &Polynomial::new(vec![rat(1, 2), int(2), int(3), int(1)]) * &Polynomial::x();
        assert_eq!(p.derivative(), expect.scale(&int(5)));
    }

    #[test]
    fn calibration_is_consistent() {
        assert_eq!(CALIBRATION.len(), 5);
        for (region, p) in calibration_points() {
            assert_eq!(classify5(&p).unwrap(), Stratum5::Region { region, passport: region.passport() });
        }
    }

    #[test]
    fn outside_examples() {
        assert_eq!(classify5(&pt(int(3), rat(1, 2))).unwrap(), Stratum5::OutsideOAB);
        assert_eq!(classify5(&pt(rat(135, 64), int(0))).unwrap(), Stratum5::OutsideOAB);
        assert_eq!(classify5(&pt(int(0), rat(1, 2))).unwrap(), Stratum5::OutsideOAB);
    }

    #[test]
    fn landmark_f_is_certified() {
        let f = landmark_f();
        assert!(f.b.width() <= rat(1, 100_000_000));
        assert!(f.c.width() <= rat(1, 100_000_000));
        let (b, c) = f.approx;
        assert!((b - 2.73).abs() < 0.01 && (c - 0.72).abs() < 0.01);
        assert!(g_f64(b, c).abs() < 1e-12 * 1e4 && h_f64(b, c).abs() < 1e-12 * 1e4);
        assert!(f.b.contains(&crate::polycore::rational::from_f64_exact(b).unwrap())
            || (approx_point(f).0 - b).abs() < 1e-8);
    }

    #[test]
    fn traced_curves_pass_landmarks() {
        let curves = trace_curves5(64).unwrap();
        let near = |c: &TracedCurve, (x, y): (f64, f64)| {
            c.polylines
                .iter()
                .flat_map(|l| &l.points)
                .any(|(a, b)| (a - x).abs() <= 3.0 / 64.0 && (b - y).abs() <= 1.0 / 64.0)
        };
        assert!(near(&curves[0], (3.0, 1.0)));
        assert!(near(&curves[0], (2.25, 0.0)));
        assert!(near(&curves[1], (3.0, 1.0)));
        assert!(near(&curves[1], (135.0 / 64.0, 0.0)));
        assert!(near(&curves[2], (45.0 / 16.0, 25.0 / 32.0)));
        assert!(trace_curves5(8).is_err());
    }
}
