//! Values of γ where the section partition changes.

use std::collections::HashMap;

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use super::scan::{scan_section_with, ScanOptions, Signature};
use crate::error::{domain, Result};
use crate::polycore::{int, rat, ser_rational, to_f64, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct Threshold {
    #[serde(serialize_with = "ser_rational")]
    pub lower: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub upper: Rational,
    pub approx: f64,
    /// Signature just below and just above the threshold.
    pub below: Signature,
    pub above: Signature,
    pub event: String,
    /// Signature changes merged into this event.
    pub steps: usize,
    /// A simple closed form lying in the enclosure, if any.
    pub closed_form: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BifurcationReport {
    pub thresholds: Vec<Threshold>,
    pub warnings: Vec<String>,
}

/// Sweeps `γ` over `[lo, hi]` and bisects every change of the section
/// signature down to an enclosure of width at most `tol`. Thresholds come
/// out in increasing order.
pub fn detect_bifurcations(
    lo: &Rational,
    hi: &Rational,
    tol: &Rational,
    resolution: usize,
) -> Result<BifurcationReport> {
    if !lo.is_positive() || lo >= hi || *hi > int(1) {
        return domain("need 0 < lo < hi <= 1");
    }
    if !tol.is_positive() {
        return domain("tolerance must be positive");
    }
    let opts = ScanOptions { resolution, max_depth: 4, verify: false };
    let steps = 100usize;
    let grid: Vec<Rational> =
        (0..=steps).map(|k| lo + (hi - lo) * rat(k as i64, steps as i64)).collect();
    let sigs: Vec<Signature> = grid
        .par_iter()
        .map(|g| scan_section_with(g, &opts).map(|s| s.signature()))
        .collect::<Result<_>>()?;

    let mut sweeper = Sweeper { opts, tol: tol.clone(), cache: HashMap::new(), out: Vec::new(), warnings: Vec::new() };
    // an empty section (γ = 1) has no partition to change
    let pairs: Vec<usize> = (0..steps)
        .filter(|&k| sigs[k] != sigs[k + 1] && sigs[k].count > 0 && sigs[k + 1].count > 0)
        .collect();
    for k in pairs {
        sweeper.locate(grid[k].clone(), sigs[k].clone(), grid[k + 1].clone(), sigs[k + 1].clone(), 0)?;
    }
    let mut raw = sweeper.out;
    raw.sort_by(|a, b| b.lower.cmp(&a.lower));
    let mut warnings = sweeper.warnings;
    // tiny regions near a threshold appear at slightly different γ at a
    // fixed resolution, so nearby changes are one event
    let window = rat(1, 10 * resolution as i64).max(tol.clone());
    let mut thresholds: Vec<Threshold> = Vec::new();
    for t in raw {
        match thresholds.last_mut() {
            Some(prev) if &prev.lower - &t.upper <= window => {
                prev.lower = t.lower;
                prev.below = t.below;
                prev.steps += t.steps;
            }
            _ => thresholds.push(t),
        }
    }
    for t in &mut thresholds {
        t.approx = 0.5 * (to_f64(&t.lower) + to_f64(&t.upper));
        t.event = describe(&t.below, &t.above);
        t.closed_form = CLOSED_FORMS
            .iter()
            .map(|&(n, d)| rat(n, d))
            .find(|x| &t.lower - &window <= *x && *x <= &t.upper + &window)
            .map(|x| x.to_string());
        if t.steps > 1 {
            warnings.push(format!(
                "{} signature changes in [{:.6}, {:.6}] merged into one event; the resolution is too coarse to separate them",
                t.steps,
                to_f64(&t.lower),
                to_f64(&t.upper)
            ));
        }
    }
    thresholds.reverse();
    Ok(BifurcationReport { thresholds, warnings })
}

/// Candidate exact values checked against each enclosure.
const CLOSED_FORMS: [(i64, i64); 4] = [(512, 625), (432, 625), (52488, 78125), (1024, 1875)];

struct Sweeper {
    opts: ScanOptions,
    tol: Rational,
    cache: HashMap<Rational, Signature>,
    out: Vec<Threshold>,
    warnings: Vec<String>,
}

impl Sweeper {
    fn signature(&mut self, g: &Rational) -> Result<Signature> {
        if let Some(s) = self.cache.get(g) {
            return Ok(s.clone());
        }
        let s = scan_section_with(g, &self.opts)?.signature();
        self.cache.insert(g.clone(), s.clone());
        Ok(s)
    }

    fn locate(&mut self, lo: Rational, s_lo: Signature, hi: Rational, s_hi: Signature, depth: u32) -> Result<()> {
        if &hi - &lo <= self.tol || depth > 60 {
            let approx = 0.5 * (to_f64(&lo) + to_f64(&hi));
            self.out.push(Threshold {
                event: describe(&s_lo, &s_hi),
                lower: lo,
                upper: hi,
                approx,
                below: s_lo,
                above: s_hi,
                steps: 1,
                closed_form: None,
            });
            return Ok(());
        }
        let mid = (&lo + &hi) / int(2);
        let s_mid = self.signature(&mid)?;
        if s_mid == s_lo {
            self.locate(mid, s_mid, hi, s_hi, depth + 1)
        } else if s_mid == s_hi {
            self.locate(lo, s_lo, mid, s_mid, depth + 1)
        } else {
            self.locate(lo, s_lo, mid.clone(), s_mid.clone(), depth + 1)?;
            self.locate(mid, s_mid, hi, s_hi, depth + 1)
        }
    }
}

/// What changes when γ decreases through the threshold.
fn describe(below: &Signature, above: &Signature) -> String {
    let count = |s: &Signature, n: usize| s.numbers.iter().filter(|&&x| x == n).count();
    let mut appear = Vec::new();
    let mut vanish = Vec::new();
    for n in 1..=16 {
        let (b, a) = (count(below, n), count(above, n));
        if b > a {
            appear.push(format!("{n}{}", if b - a > 1 { format!(" x{}", b - a) } else { String::new() }));
        }
        if a > b {
            vanish.push(format!("{n}{}", if a - b > 1 { format!(" x{}", a - b) } else { String::new() }));
        }
    }
    let mut parts = vec![format!("{} -> {} components as gamma decreases", above.count, below.count)];
    if !appear.is_empty() {
        parts.push(format!("gained: {}", appear.join(", ")));
    }
    if !vanish.is_empty() {
        parts.push(format!("lost: {}", vanish.join(", ")));
    }
    parts.join("; ")
}
