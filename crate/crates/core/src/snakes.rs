//! Proper alternating permutations (PAPs) and the Euler–Bernoulli triangle.
//!
//! A PAP of order `n` is an alternating permutation of `1..=n` whose first
//! step has the direction forced by a monic polynomial of degree `n + 1`:
//! for even `n` the first critical point is a maximum (`a_1 > a_2`), for odd
//! `n` it is a minimum (`a_1 < a_2`). This makes the level `a_1` greater than
//! 1 for even `n` and smaller than `n` for odd `n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{domain, Error, Result};

/// A proper alternating permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Passport(Vec<usize>);

/// Why a sequence is not a PAP.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PapViolation {
    Empty,
    NotPermutation,
    NotAlternating,
    NotProper,
}

impl fmt::Display for PapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PapViolation::Empty => "empty sequence",
            PapViolation::NotPermutation => "not a permutation of 1..n",
            PapViolation::NotAlternating => "not alternating",
            PapViolation::NotProper => "not proper (wrong direction of the first step)",
        })
    }
}

/// First violated condition, or `None` for a PAP.
pub fn pap_violation(seq: &[i64]) -> Option<PapViolation> {
    let n = seq.len();
    if n == 0 {
        return Some(PapViolation::Empty);
    }
    let mut seen = vec![false; n];
    for &a in seq {
        if a < 1 || a as usize > n || seen[a as usize - 1] {
            return Some(PapViolation::NotPermutation);
        }
        seen[a as usize - 1] = true;
    }
    if seq.windows(3).any(|w| (w[0] < w[1]) == (w[1] < w[2])) {
        return Some(PapViolation::NotAlternating);
    }
    if n >= 2 {
        let first_is_descent = seq[0] > seq[1];
        if first_is_descent != (n % 2 == 0) {
            return Some(PapViolation::NotProper);
        }
    }
    None
}

pub fn is_pap(seq: &[i64]) -> bool {
    pap_violation(seq).is_none()
}

impl Passport {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let as_i64: Vec<i64> = entries.iter().map(|&a| a as i64).collect();
        match pap_violation(&as_i64) {
            None => Ok(Passport(entries)),
            Some(v) => Err(Error::NotPap(format!("{}: {}", fmt_seq(&entries), v))),
        }
    }

    /// The unique PAP of order 1.
    pub fn unit() -> Self {
        Passport(vec![1])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// The first entry.
    pub fn level(&self) -> usize {
        self.0[0]
    }

    /// Admissible first elements for [`extend`](Self::extend).
    pub fn extension_range(&self) -> std::ops::RangeInclusive<usize> {
        let n = self.order();
        let m = self.level();
        if n % 2 == 0 {
            1..=m
        } else {
            m + 1..=n + 1
        }
    }

    /// Prepends `k`; old entries `>= k` are shifted up by one.
    pub fn extend(&self, k: usize) -> Result<Passport> {
        if !self.extension_range().contains(&k) {
            return domain(format!(
                "cannot extend {} by {k}: admissible range is {:?}",
                self,
                self.extension_range()
            ));
        }
        let mut out = Vec::with_capacity(self.order() + 1);
        out.push(k);
        out.extend(self.0.iter().map(|&a| if a >= k { a + 1 } else { a }));
        Ok(Passport(out))
    }

    /// Removes the first entry `m`; entries above `m` are shifted down.
    pub fn delete_first(&self) -> Result<Passport> {
        if self.order() < 2 {
            return domain("cannot delete the first element of an order-1 passport");
        }
        let m = self.level();
        Ok(Passport(
            self.0[1..].iter().map(|&a| if a > m { a - 1 } else { a }).collect(),
        ))
    }
}

fn fmt_seq(entries: &[usize]) -> String {
    let parts: Vec<String> = entries.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_seq(&self.0))
    }
}

impl FromStr for Passport {
    type Err = Error;

    /// Accepts `3,1,4,2`, `(3,1,4,2)` or `3 1 4 2`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries: std::result::Result<Vec<usize>, _> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse::<usize>)
            .collect();
        let entries = entries.map_err(|_| Error::Parse(s.to_string()))?;
        Passport::new(entries)
    }
}

impl TryFrom<Vec<usize>> for Passport {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Passport::new(v)
    }
}

/// All PAPs of order `n` in lexicographic order, grown by extension from
/// the order-1 passport.
pub fn enumerate(n: usize) -> Result<Vec<Passport>> {
    if n == 0 {
        return domain("order must be positive");
    }
    let mut layer = vec![Passport::unit()];
    for _ in 1..n {
        let mut next = Vec::new();
        for p in &layer {
            for k in p.extension_range() {
                next.push(p.extend(k)?);
            }
        }
        layer = next;
    }
    layer.sort();
    Ok(layer)
}

/// Rows `s(n, 1..=n)` of the Euler–Bernoulli triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EBTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl EBTriangle {
    /// First `rows` rows, built from `s(1,1) = 1` with the partial-sum
    /// recurrences: from an even row, `s(n+1, m) = s(n, m) + ... + s(n, n)`;
    /// from an odd row, `s(n+1, m) = s(n, 1) + ... + s(n, m-1)`.
    pub fn build(rows: usize) -> Result<Self> {
        if rows == 0 {
            return domain("triangle needs at least one row");
        }
        let mut out: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u32)]];
        while out.len() < rows {
            let n = out.len();
            let prev = out.last().unwrap();
            let mut row = vec![BigUint::zero(); n + 1];
            if n % 2 == 0 {
                // suffix sums, s(n, n+1) taken as 0
                let mut acc = BigUint::zero();
                for m in (1..=n + 1).rev() {
                    if m <= n {
                        acc += &prev[m - 1];
                    }
                    row[m - 1] = acc.clone();
                }
            } else {
                let mut acc = BigUint::zero();
                for m in 1..=n + 1 {
                    row[m - 1] = acc.clone();
                    if m <= n {
                        acc += &prev[m - 1];
                    }
                }
            }
            out.push(row);
        }
        Ok(EBTriangle { rows: out })
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// Row `n` (1-based).
    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        self.rows.get(n.checked_sub(1)?).map(Vec::as_slice)
    }

    pub fn row_total(&self, n: usize) -> Option<BigUint> {
        self.row(n).map(|r| r.iter().sum())
    }
}

/// `s(n, m)`: the number of PAPs of order `n` and level `m`.
pub fn count(n: usize, m: usize) -> Result<BigUint> {
    if n == 0 || m == 0 || m > n {
        return domain(format!("count needs 1 <= m <= n, got n = {n}, m = {m}"));
    }
    Ok(EBTriangle::build(n)?.row(n).unwrap()[m - 1].clone())
}
