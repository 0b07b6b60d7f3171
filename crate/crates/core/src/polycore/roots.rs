//! Sturm-sequence root counting and exact real-root isolation.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::Polynomial;
use super::rational::{midpoint, to_f64, Rational};
use crate::error::{Error, Result};
use crate::sign::Sign;

/// A closed rational interval enclosing exactly one distinct real root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatedRoot {
    #[serde(serialize_with = "ser_rational")]
    pub lower: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub upper: Rational,
    pub multiplicity: usize,
}

pub(crate) fn ser_rational<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&super::rational::fmt_rational(x))
}

impl IsolatedRoot {
    pub fn exact(x: Rational, multiplicity: usize) -> Self {
        IsolatedRoot { lower: x.clone(), upper: x, multiplicity }
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn midpoint(&self) -> Rational {
        midpoint(&self.lower, &self.upper)
    }

    pub fn approx(&self) -> f64 {
        0.5 * (to_f64(&self.lower) + to_f64(&self.upper))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lower <= x && x <= &self.upper
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` of a polynomial.
///
/// Each member is rescaled by a positive constant, which leaves sign
/// variation counts unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p.sign_normalized());
        let d = p.derivative();
        if d.is_zero() {
            return SturmChain { chain };
        }
        chain.push(d.sign_normalized());
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push((-&r).sign_normalized());
        }
        SturmChain { chain }
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.chain
    }

    fn variations<I: Iterator<Item = Sign>>(signs: I) -> usize {
        let mut last = Sign::Zero;
        let mut count = 0;
        for s in signs.filter(|s| !s.is_zero()) {
            if !last.is_zero() && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| Sign::of(&p.eval(x))))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| Sign::of(p.leading_coefficient().unwrap())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = Sign::of(p.leading_coefficient().unwrap());
            if p.degree().unwrap() % 2 == 1 {
                match s {
                    Sign::Positive => Sign::Negative,
                    Sign::Negative => Sign::Positive,
                    Sign::Zero => Sign::Zero,
                }
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_in(&self, a: &Rational, b: &Rational) -> usize {
        if self.chain.is_empty() || a >= b {
            return 0;
        }
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        self.variations_at_neg_inf().saturating_sub(self.variations_at_pos_inf())
    }

    /// Number of distinct real roots in `(-inf, b]`.
    pub fn count_up_to(&self, b: &Rational) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        self.variations_at_neg_inf().saturating_sub(self.variations_at(b))
    }
}

/// Cauchy bound `1 + max |a_i| / |a_n|`; every root satisfies `|x| < bound`.
pub fn cauchy_bound(p: &Polynomial) -> Rational {
    let lc = p.leading_coefficient().map(|c| c.abs()).unwrap_or_else(Rational::one);
    let n = p.coeffs().len().saturating_sub(1);
    let m = p.coeffs()[..n].iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero);
    Rational::one() + m / lc
}

/// Number of distinct real roots of `p` (zero for the zero polynomial).
pub fn real_root_count(p: &Polynomial) -> usize {
    SturmChain::new(&p.square_free_part()).count_real()
}

/// Isolates every distinct real root of `p`, sorted left to right, with
/// multiplicities. Exact: intervals are pairwise disjoint and each one
/// contains exactly one root.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<IsolatedRoot>> {
    if p.is_zero() {
        return Err(Error::Domain("cannot isolate roots of the zero polynomial".into()));
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let factors = p.square_free_decomposition();
    let sqf = p.square_free_part();
    let chain = SturmChain::new(&sqf);
    let bound = cauchy_bound(&sqf);
    let lo = -bound.clone();
    let total = chain.count_in(&lo, &bound);
    let mut roots = Vec::with_capacity(total);
    isolate_in(&sqf, &chain, lo, bound, total, &mut roots);
    separate_neighbours(&sqf, &mut roots);
    for r in roots.iter_mut() {
        r.multiplicity = multiplicity_of(&factors, r);
    }
    Ok(roots)
}

fn isolate_in(
    sqf: &Polynomial,
    chain: &SturmChain,
    a: Rational,
    b: Rational,
    count: usize,
    out: &mut Vec<IsolatedRoot>,
) {
    if count == 0 {
        return;
    }
    if count == 1 {
        if sqf.eval(&b).is_zero() {
            out.push(IsolatedRoot::exact(b, 1));
            return;
        }
        if !sqf.eval(&a).is_zero() {
            out.push(IsolatedRoot { lower: a, upper: b, multiplicity: 1 });
            return;
        }
    }
    let m = midpoint(&a, &b);
    let left = chain.count_in(&a, &m);
    isolate_in(sqf, chain, a, m.clone(), left, out);
    isolate_in(sqf, chain, m, b, count - left, out);
}

/// Bisects adjacent intervals that share an endpoint until they are disjoint.
fn separate_neighbours(sqf: &Polynomial, roots: &mut [IsolatedRoot]) {
    for i in 1..roots.len() {
        while roots[i - 1].upper >= roots[i].lower {
            let (l, r) = roots.split_at_mut(i);
            bisect_once(sqf, &mut l[i - 1]);
            bisect_once(sqf, &mut r[0]);
        }
    }
}

fn multiplicity_of(factors: &[(Polynomial, usize)], r: &IsolatedRoot) -> usize {
    for (f, k) in factors {
        if r.is_exact() {
            if f.eval(&r.lower).is_zero() {
                return *k;
            }
        } else {
            let chain = SturmChain::new(f);
            if chain.count_in(&r.lower, &r.upper) > 0 || f.eval(&r.lower).is_zero() {
                return *k;
            }
        }
    }
    1
}

/// One bisection step on an isolating interval of a square-free polynomial.
/// Returns `false` if the interval does not bracket a sign change.
fn bisect_once(sqf: &Polynomial, r: &mut IsolatedRoot) -> bool {
    if r.is_exact() {
        return true;
    }
    let m = r.midpoint();
    let fm = sqf.eval(&m);
    if fm.is_zero() {
        *r = IsolatedRoot::exact(m, r.multiplicity);
        return true;
    }
    let fl = Sign::of(&sqf.eval(&r.lower));
    let fu = Sign::of(&sqf.eval(&r.upper));
    if fl.is_zero() || fu.is_zero() || fl == fu {
        return false;
    }
    if Sign::of(&fm) == fl {
        r.lower = m;
    } else {
        r.upper = m;
    }
    true
}

/// Shrinks an isolating interval of `p` to width at most `width`.
pub fn refine_root(p: &Polynomial, r: &IsolatedRoot, width: &Rational) -> Result<IsolatedRoot> {
    let sqf = p.square_free_part();
    refine_with_square_free(&sqf, r, width)
}

/// As [`refine_root`], with the square-free part supplied by the caller.
pub fn refine_with_square_free(
    sqf: &Polynomial,
    r: &IsolatedRoot,
    width: &Rational,
) -> Result<IsolatedRoot> {
    let not_isolating = || Error::NotIsolating {
        lower: r.lower.to_string(),
        upper: r.upper.to_string(),
    };
    if r.is_exact() {
        return if sqf.eval(&r.lower).is_zero() { Ok(r.clone()) } else { Err(not_isolating()) };
    }
    let mut cur = r.clone();
    // An endpoint that is itself a root is not an isolating configuration
    // unless the interval is degenerate.
    if sqf.eval(&cur.lower).is_zero() || sqf.eval(&cur.upper).is_zero() {
        let chain = SturmChain::new(sqf);
        let inside = chain.count_in(&cur.lower, &cur.upper)
            + usize::from(sqf.eval(&cur.lower).is_zero());
        if inside != 1 {
            return Err(not_isolating());
        }
        if sqf.eval(&cur.lower).is_zero() {
            return Ok(IsolatedRoot::exact(cur.lower, cur.multiplicity));
        }
        return Ok(IsolatedRoot::exact(cur.upper, cur.multiplicity));
    }
    while cur.width() > *width {
        if !bisect_once(sqf, &mut cur) {
            return Err(not_isolating());
        }
    }
    Ok(cur)
}

/// Refines to width `2^-bits` and returns the midpoint as a float.
pub fn approximate_root(sqf: &Polynomial, r: &IsolatedRoot, bits: u32) -> Result<f64> {
    let w = Rational::new(1.into(), num_bigint::BigInt::from(2).pow(bits));
    Ok(refine_with_square_free(sqf, r, &w)?.approx())
}

/// Number of distinct real roots of `p` in the closed interval `[a, b]`.
pub fn count_in_closed(p: &Polynomial, a: &Rational, b: &Rational) -> usize {
    let sqf = p.square_free_part();
    let chain = SturmChain::new(&sqf);
    chain.count_in(a, b) + usize::from(sqf.eval(a).is_zero())
}
