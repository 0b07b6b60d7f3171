//! From polynomials to passports and back.
//!
//! [`passport`] ranks the critical values of a polynomial exactly: value
//! enclosures are refined until they separate, and any overlap that survives
//! refinement down to the tolerance is settled with the critical-value
//! polynomial `R(y) = Res_x(p'(x), p(x) - y)`, whose isolated real roots
//! certify both equalities and inequalities between critical values.

mod construct;

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub use construct::{construct, construct_with, ConstructOptions};

use crate::error::{domain, Result};
use crate::polycore::{
    int, isolate_real_roots, rat, refine_with_square_free, resultant, ser_rational, IsolatedRoot,
    Polynomial, Rational,
};
use crate::snakes::Passport;

/// Default refinement floor for value comparisons.
pub fn default_tol() -> Rational {
    rat(1, 1_000_000_000_000)
}

/// Critical points `0 = x_0 < x_1 < ... < x_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalPointSpec {
    #[serde(serialize_with = "ser_rationals")]
    xs: Vec<Rational>,
}

fn ser_rationals<S: serde::Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&crate::polycore::rational::fmt_decimal_or_fraction(x))?;
    }
    seq.end()
}

impl CriticalPointSpec {
    pub fn new(xs: Vec<Rational>) -> Result<Self> {
        if xs.first().is_none_or(|x| !x.is_zero()) {
            return domain("critical point spec must start at 0");
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return domain("critical points must be strictly increasing");
        }
        Ok(CriticalPointSpec { xs })
    }

    pub fn points(&self) -> &[Rational] {
        &self.xs
    }

    /// Number of critical points, i.e. the order of the snake.
    pub fn order(&self) -> usize {
        self.xs.len()
    }
}

/// Monic polynomial of degree `k + 2` with critical points exactly
/// `x_0, ..., x_k` and value 0 at the origin: `(k+2) ∫_0^x ∏ (t - x_i) dt`.
pub fn from_critical_points(spec: &CriticalPointSpec) -> Polynomial {
    let dp = Polynomial::from_roots(&spec.xs);
    let deg = spec.xs.len() + 1;
    dp.integrate_from_zero().scale(&int(deg as i64))
}

/// Closed enclosure of a critical value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueEnclosure {
    #[serde(serialize_with = "ser_rational")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub hi: Rational,
}

impl ValueEnclosure {
    pub fn exact(v: Rational) -> Self {
        ValueEnclosure { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn overlaps(&self, other: &ValueEnclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn approx(&self) -> f64 {
        0.5 * (crate::polycore::to_f64(&self.lo) + crate::polycore::to_f64(&self.hi))
    }

    fn of(p: &Polynomial, r: &IsolatedRoot) -> Self {
        let (lo, hi) = p.eval_interval(&r.lower, &r.upper);
        ValueEnclosure { lo, hi }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CriticalVerdict {
    MorseSnake,
    DegenerateValues,
    NonrealCritical,
}

/// Why a polynomial is not Morse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NonMorseReason {
    /// `p'` has fewer real roots (with multiplicity) than `deg p - 1`.
    NonrealCriticalPoints { real: usize, expected: usize },
    /// All critical points are real but one is a multiple root of `p'`.
    MultipleCriticalPoint { multiplicity: usize },
}

impl fmt::Display for NonMorseReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonMorseReason::NonrealCriticalPoints { real, expected } => {
                write!(f, "only {real} of {expected} critical points are real")
            }
            NonMorseReason::MultipleCriticalPoint { multiplicity } => {
                write!(f, "critical point of multiplicity {multiplicity}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalData {
    pub points: Vec<IsolatedRoot>,
    pub values: Vec<ValueEnclosure>,
    pub verdict: CriticalVerdict,
}

/// Result of ranking critical values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PassportOutcome {
    Snake(Passport),
    /// Dense ranks of the critical values, ties sharing a rank.
    Degenerate(Vec<usize>),
    NonMorse(NonMorseReason),
}

impl PassportOutcome {
    pub fn snake(&self) -> Option<&Passport> {
        match self {
            PassportOutcome::Snake(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_snake(&self) -> bool {
        matches!(self, PassportOutcome::Snake(_))
    }
}

impl fmt::Display for PassportOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PassportOutcome::Snake(p) => write!(f, "snake {p}"),
            PassportOutcome::Degenerate(r) => {
                let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                write!(f, "degenerate ({})", parts.join(","))
            }
            PassportOutcome::NonMorse(reason) => write!(f, "non-Morse: {reason}"),
        }
    }
}

/// Critical points, value enclosures and verdict, computed exactly.
///
/// Requires `deg p >= 2`, a positive leading coefficient and `tol > 0`.
pub fn critical_data(p: &Polynomial, tol: &Rational) -> Result<(CriticalData, PassportOutcome)> {
    let deg = match p.degree() {
        Some(d) if d >= 2 => d,
        _ => return domain("passport needs a polynomial of degree at least 2"),
    };
    if !p.leading_coefficient().unwrap().is_positive() {
        return domain("passport needs a positive leading coefficient");
    }
    if !tol.is_positive() {
        return domain("tolerance must be positive");
    }
    let dp = p.derivative();
    let roots = isolate_real_roots(&dp)?;
    let real: usize = roots.iter().map(|r| r.multiplicity).sum();
    let expected = deg - 1;
    let values: Vec<ValueEnclosure> = roots.iter().map(|r| ValueEnclosure::of(p, r)).collect();
    if real < expected || roots.len() < expected {
        let reason = if real < expected {
            NonMorseReason::NonrealCriticalPoints { real, expected }
        } else {
            let m = roots.iter().map(|r| r.multiplicity).max().unwrap_or(1);
            NonMorseReason::MultipleCriticalPoint { multiplicity: m }
        };
        let data = CriticalData { points: roots, values, verdict: CriticalVerdict::NonrealCritical };
        return Ok((data, PassportOutcome::NonMorse(reason)));
    }

    let sqf = dp.monic();
    let mut points = roots;
    let mut values = values;
    loop {
        let involved = overlapping(&values);
        if involved.is_empty() {
            let ranks = dense_ranks_by_order(&values);
            let passport = Passport::new(ranks)?;
            let data = CriticalData { points, values, verdict: CriticalVerdict::MorseSnake };
            return Ok((data, PassportOutcome::Snake(passport)));
        }
        if involved.iter().all(|&i| values[i].width() <= *tol) {
            break;
        }
        for &i in &involved {
            let w = points[i].width() / int(4);
            points[i] = refine_with_square_free(&sqf, &points[i], &w)?;
            values[i] = ValueEnclosure::of(p, &points[i]);
        }
    }

    // Certified ranking through the roots of R(y).
    let rpoly = critical_value_polynomial(p, &dp)?;
    let rroots = isolate_real_roots(&rpoly)?;
    let mut class = vec![0usize; points.len()];
    for i in 0..points.len() {
        loop {
            let hits: Vec<usize> = rroots
                .iter()
                .enumerate()
                .filter(|(_, r)| values[i].lo <= r.upper && r.lower <= values[i].hi)
                .map(|(k, _)| k)
                .collect();
            if hits.len() == 1 {
                class[i] = hits[0];
                break;
            }
            let w = points[i].width() / int(4);
            points[i] = refine_with_square_free(&sqf, &points[i], &w)?;
            values[i] = ValueEnclosure::of(p, &points[i]);
        }
    }
    let ranks = dense_ranks(&class);
    let distinct = ranks.iter().max().copied().unwrap_or(0) == ranks.len();
    if distinct {
        // Enclosures may still overlap; shrink them to the certified roots of R.
        for i in 0..points.len() {
            let r = &rroots[class[i]];
            values[i] = ValueEnclosure {
                lo: crate::polycore::rational::max(&values[i].lo, &r.lower).clone(),
                hi: crate::polycore::rational::min(&values[i].hi, &r.upper).clone(),
            };
        }
        let passport = Passport::new(ranks)?;
        let data = CriticalData { points, values, verdict: CriticalVerdict::MorseSnake };
        Ok((data, PassportOutcome::Snake(passport)))
    } else {
        let data = CriticalData { points, values, verdict: CriticalVerdict::DegenerateValues };
        Ok((data, PassportOutcome::Degenerate(ranks)))
    }
}

/// Passport of `p` (see [`critical_data`]).
pub fn passport(p: &Polynomial, tol: &Rational) -> Result<PassportOutcome> {
    Ok(critical_data(p, tol)?.1)
}

/// Dense ranks among distinct values with ties sharing a rank.
///
/// Enclosures that intersect are treated as tied (transitively). Every
/// enclosure must be at most `tol` wide, and at least one tie must exist.
pub fn degenerate_pattern(values: &[ValueEnclosure], tol: &Rational) -> Result<Vec<usize>> {
    if !tol.is_positive() {
        return domain("tolerance must be positive");
    }
    if values.iter().any(|v| v.width() > *tol) {
        return domain("value enclosure wider than the tolerance");
    }
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    let mut tied = false;
    for i in 0..n {
        for j in i + 1..n {
            if values[i].overlaps(&values[j]) {
                tied = true;
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    if !tied {
        return domain("no tie among the values; the outcome is a snake");
    }
    // order classes by their smallest lower bound
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let mut class_lo: Vec<(usize, Rational)> = Vec::new();
    for i in 0..n {
        match class_lo.iter_mut().find(|(c, _)| *c == roots[i]) {
            Some((_, lo)) => {
                if values[i].lo < *lo {
                    *lo = values[i].lo.clone();
                }
            }
            None => class_lo.push((roots[i], values[i].lo.clone())),
        }
    }
    class_lo.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(roots
        .iter()
        .map(|r| class_lo.iter().position(|(c, _)| c == r).unwrap() + 1)
        .collect())
}

/// Indices of enclosures that intersect some other enclosure.
fn overlapping(values: &[ValueEnclosure]) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..values.len() {
        if (0..values.len()).any(|j| j != i && values[i].overlaps(&values[j])) {
            out.push(i);
        }
    }
    out
}

/// Ranks of pairwise disjoint enclosures.
fn dense_ranks_by_order(values: &[ValueEnclosure]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].lo.cmp(&values[b].lo));
    let mut ranks = vec![0; values.len()];
    for (r, &i) in idx.iter().enumerate() {
        ranks[i] = r + 1;
    }
    ranks
}

fn dense_ranks(class: &[usize]) -> Vec<usize> {
    let mut distinct: Vec<usize> = class.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    class.iter().map(|c| distinct.binary_search(c).unwrap() + 1).collect()
}

/// `R(y) = Res_x(p'(x), p(x) - y)`, interpolated from `deg p' + 1` samples.
/// Its roots are exactly the critical values of `p`.
pub fn critical_value_polynomial(p: &Polynomial, dp: &Polynomial) -> Result<Polynomial> {
    let n = dp.degree().unwrap_or(0);
    let xs: Vec<Rational> = (0..=n as i64).map(int).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for y in &xs {
        let shifted = p - &Polynomial::constant(y.clone());
        ys.push(resultant(dp, &shifted)?);
    }
    Ok(interpolate(&xs, &ys))
}

/// Newton-form interpolation through `(xs[i], ys[i])`.
pub(crate) fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial {
    let n = xs.len();
    let mut coef: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..n).rev() {
        let factor = Polynomial::new(vec![-xs[i].clone(), Rational::one()]);
        acc = &(&acc * &factor) + &Polynomial::constant(coef[i].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_rational;

    fn spec(xs: &[&str]) -> CriticalPointSpec {
        CriticalPointSpec::new(xs.iter().map(|s| parse_rational(s).unwrap()).collect()).unwrap()
    }

    fn snake_of(xs: &[&str]) -> Vec<usize> {
        let p = from_critical_points(&spec(xs));
        match passport(&p, &default_tol()).unwrap() {
            PassportOutcome::Snake(pp) => pp.entries().to_vec(),
            other => panic!("expected a snake, got {other}"),
        }
    }

    #[test]
    fn worked_construction_steps() {
        assert_eq!(snake_of(&["0", "1", "2", "3"]), vec![4, 2, 3, 1]);
        assert_eq!(snake_of(&["0", "1", "3", "4"]), vec![2, 1, 4, 3]);
        assert_eq!(snake_of(&["0", "1", "3", "5"]), vec![3, 2, 4, 1]);
        assert_eq!(snake_of(&["0", "1", "3", "4.4"]), vec![3, 1, 4, 2]);
        assert_eq!(snake_of(&["0", "1", "3", "5", "7", "8.4"]), vec![4, 1, 5, 3, 6, 2]);
    }

    #[test]
    fn single_minimum() {
        let p = from_critical_points(&spec(&["0"]));
        assert_eq!(p, Polynomial::from_ints(&[0, 0, 1]));
        assert_eq!(snake_of(&["0"]), vec![1]);
    }

    #[test]
    fn from_critical_points_is_monic_with_given_critical_points() {
        let s = spec(&["0", "1", "3", "4.4"]);
        let p = from_critical_points(&s);
        assert_eq!(p.degree(), Some(5));
        assert!(p.leading_coefficient().unwrap().is_one());
        assert!(p.eval(&int(0)).is_zero());
        for x in s.points() {
            assert!(p.derivative().eval(x).is_zero());
        }
    }

    #[test]
    fn spec_validation() {
        assert!(CriticalPointSpec::new(vec![int(1)]).is_err());
        assert!(CriticalPointSpec::new(vec![int(0), int(2), int(2)]).is_err());
        assert!(CriticalPointSpec::new(vec![]).is_err());
    }

    #[test]
    fn x4_is_not_morse() {
        let p = Polynomial::from_ints(&[0, 0, 0, 0, 1]);
        match passport(&p, &default_tol()).unwrap() {
            PassportOutcome::NonMorse(NonMorseReason::MultipleCriticalPoint { multiplicity }) => {
                assert_eq!(multiplicity, 3)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn complex_critical_points() {
        // p' = x^2 + 1
        let p = Polynomial::new(vec![int(0), int(1), int(0), rat(1, 3)]);
        assert!(matches!(
            passport(&p, &default_tol()).unwrap(),
            PassportOutcome::NonMorse(NonMorseReason::NonrealCriticalPoints { real: 0, expected: 2 })
        ));
    }

    #[test]
    fn exact_tie_is_degenerate() {
        // Symmetric quartic x^4 - 2x^2: minima at ±1 share the value -1.
        let p = Polynomial::from_ints(&[0, 0, -2, 0, 1]);
        assert_eq!(passport(&p, &default_tol()).unwrap(), PassportOutcome::Degenerate(vec![1, 2, 1]));
    }

    #[test]
    fn irrational_tie_is_degenerate() {
        // Symmetric about 0 with critical points ±sqrt(2) and 0:
        // p = x^4 - 4x^2 has minima at ±sqrt(2) with equal values.
        let p = Polynomial::from_ints(&[0, 0, -4, 0, 1]);
        assert_eq!(passport(&p, &default_tol()).unwrap(), PassportOutcome::Degenerate(vec![1, 2, 1]));
        // shifted by an irrational-free affine map it stays degenerate
        let q = p.compose(&Polynomial::new(vec![rat(1, 3), int(2)]));
        assert_eq!(passport(&q, &default_tol()).unwrap(), PassportOutcome::Degenerate(vec![1, 2, 1]));
    }

    #[test]
    fn near_tie_is_separated() {
        // minima values -4 and -4 + 1e-30 (tilted by a tiny linear term).
        let eps = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(30));
        let p = &Polynomial::from_ints(&[0, 0, -4, 0, 1]) + &Polynomial::monomial(eps, 1);
        assert!(passport(&p, &default_tol()).unwrap().is_snake());
    }

    #[test]
    fn passport_domain_errors() {
        assert!(passport(&Polynomial::from_ints(&[1, 1]), &default_tol()).is_err());
        assert!(passport(&Polynomial::from_ints(&[0, 0, 1]), &int(0)).is_err());
        assert!(passport(&Polynomial::from_ints(&[0, 0, -1]), &default_tol()).is_err());
    }

    #[test]
    fn degenerate_patterns() {
        let t = default_tol();
        let vals = |v: &[i64]| -> Vec<ValueEnclosure> { v.iter().map(|&x| ValueEnclosure::exact(int(x))).collect() };
        assert_eq!(degenerate_pattern(&vals(&[42, 28, 42, 14]), &t).unwrap(), vec![3, 2, 3, 1]);
        assert_eq!(degenerate_pattern(&vals(&[28, 14, 42, 14]), &t).unwrap(), vec![2, 1, 3, 1]);
        assert_eq!(degenerate_pattern(&vals(&[5, 5]), &t).unwrap(), vec![1, 1]);
        assert!(degenerate_pattern(&vals(&[1, 2, 3]), &t).is_err());
    }

    #[test]
    fn critical_value_polynomial_roots_are_values() {
        let p = from_critical_points(&spec(&["0", "1", "3"]));
        let dp = p.derivative();
        let r = critical_value_polynomial(&p, &dp).unwrap();
        for x in [int(0), int(1), int(3)] {
            assert!(r.eval(&p.eval(&x)).is_zero());
        }
    }
}
