//! Realizing a passport by critical points.
//!
//! Consecutive critical values differ by the lobe areas
//! `A_l = ∫_{x_l}^{x_{l+1}} ∏ (t - x_m) dt`. A polynomial realizes the target
//! `a` whenever `A_l` is proportional to `a_{l+1} - a_l`, so we continue in
//! log-gap coordinates from the current area ratios to the target ratios,
//! then round the critical points to short decimals and check the passport
//! exactly.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{default_tol, from_critical_points, passport, CriticalPointSpec, PassportOutcome};
use crate::error::{Error, Result};
use crate::polycore::{rational::from_f64_decimal, Rational};
use crate::snakes::Passport;

#[derive(Clone, Debug)]
pub struct ConstructOptions {
    /// Cap on work units: Newton iterations plus exact passport checks.
    pub budget: usize,
    pub seed: u64,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions { budget: 10_000, seed: 0 }
    }
}

pub fn construct(target: &Passport) -> Result<CriticalPointSpec> {
    construct_with(target, &ConstructOptions::default())
}

pub fn construct_with(target: &Passport, opts: &ConstructOptions) -> Result<CriticalPointSpec> {
    let n = target.order();
    let mut spent = 0usize;
    let integer_start: Vec<f64> = vec![1.0; n.saturating_sub(1)];
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut start = integer_start;
    loop {
        if let Some(gaps) = continuation(target, &start, opts.budget, &mut spent) {
            if let Some(spec) = round_and_verify(target, &gaps, opts.budget, &mut spent)? {
                return Ok(spec);
            }
        }
        if spent >= opts.budget {
            return Err(Error::BudgetExhausted {
                evaluations: spent,
                context: format!("construct {target}"),
            });
        }
        spent += 1;
        start = (0..n.saturating_sub(1)).map(|_| 2.0 - 2.0 * rng.random::<f64>()).collect();
        if let Some(g) = start.first_mut() {
            *g = 1.0;
        }
    }
}

fn positions(gaps: &[f64]) -> Vec<f64> {
    let mut xs = Vec::with_capacity(gaps.len() + 1);
    xs.push(0.0);
    let mut acc = 0.0;
    for g in gaps {
        acc += g;
        xs.push(acc);
    }
    xs
}

/// Lobe areas and their derivatives with respect to each critical point.
fn areas(xs: &[f64], nodes: &[(f64, f64)]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let k = xs.len() - 1;
    let mut a = vec![0.0; k];
    let mut da = vec![vec![0.0; xs.len()]; k];
    for l in 0..k {
        let (lo, hi) = (xs[l], xs[l + 1]);
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for &(node, weight) in nodes {
            let t = mid + half * node;
            let w = weight * half;
            let factors: Vec<f64> = xs.iter().map(|x| t - x).collect();
            let full: f64 = factors.iter().product();
            a[l] += w * full;
            for j in 0..xs.len() {
                let without: f64 = factors
                    .iter()
                    .enumerate()
                    .filter(|(m, _)| *m != j)
                    .map(|(_, f)| f)
                    .product();
                da[l][j] -= w * without;
            }
        }
    }
    (a, da)
}

fn gauss_legendre(m: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=m {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            let pm = if m == 1 { x } else { p1 };
            let pm1 = if m == 1 { 1.0 } else { p0 };
            dp = m as f64 * (x * pm - pm1) / (x * x - 1.0);
            let dx = pm / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Residual `log|A_l / A_0| - target_l` and its Jacobian in log-gaps `1..k`.
fn residual(
    gaps: &[f64],
    target: &[f64],
    nodes: &[(f64, f64)],
) -> Option<(DVector<f64>, DMatrix<f64>)> {
    let k = gaps.len();
    let xs = positions(gaps);
    let (a, da) = areas(&xs, nodes);
    if a.iter().any(|v| *v == 0.0 || !v.is_finite()) {
        return None;
    }
    // d A_l / d gap_j = sum over points right of gap j
    let dgap = |l: usize, j: usize| -> f64 { (j + 1..=k).map(|m| da[l][m]).sum() };
    let dim = k - 1;
    let mut f = DVector::zeros(dim);
    let mut jac = DMatrix::zeros(dim, dim);
    for l in 1..k {
        f[l - 1] = (a[l] / a[0]).abs().ln() - target[l - 1];
        for j in 1..k {
            jac[(l - 1, j - 1)] = gaps[j] * (dgap(l, j) / a[l] - dgap(0, j) / a[0]);
        }
    }
    Some((f, jac))
}

fn log_ratios(gaps: &[f64], nodes: &[(f64, f64)]) -> Option<Vec<f64>> {
    let (a, _) = areas(&positions(gaps), nodes);
    if a.iter().any(|v| *v == 0.0 || !v.is_finite()) {
        return None;
    }
    Some(a[1..].iter().map(|v| (v / a[0]).abs().ln()).collect())
}

/// Continuation from `start` to gaps whose area ratios match the target.
fn continuation(target: &Passport, start: &[f64], budget: usize, spent: &mut usize) -> Option<Vec<f64>> {
    let e = target.entries();
    let k = start.len();
    if k <= 1 {
        return Some(start.to_vec());
    }
    let nodes = gauss_legendre(k / 2 + 2);
    let goal: Vec<f64> = (1..k)
        .map(|l| {
            let d = e[l + 1] as f64 - e[l] as f64;
            let d0 = e[1] as f64 - e[0] as f64;
            (d / d0).abs().ln()
        })
        .collect();
    let origin = log_ratios(start, &nodes)?;
    let mut gaps = start.to_vec();
    let mut t = 0.0f64;
    let mut h = 0.25f64;
    while t < 1.0 {
        let next_t = (t + h).min(1.0);
        let aim: Vec<f64> = origin.iter().zip(&goal).map(|(o, g)| o + next_t * (g - o)).collect();
        let final_step = next_t >= 1.0;
        match newton(&gaps, &aim, &nodes, final_step, budget, spent) {
            Some(g) => {
                gaps = g;
                t = next_t;
                h = (h * 1.5).min(0.5);
            }
            None => {
                if *spent >= budget {
                    return None;
                }
                h *= 0.5;
                if h < 1e-6 {
                    return None;
                }
            }
        }
    }
    Some(gaps)
}

fn newton(
    start: &[f64],
    aim: &[f64],
    nodes: &[(f64, f64)],
    strict: bool,
    budget: usize,
    spent: &mut usize,
) -> Option<Vec<f64>> {
    let tol = if strict { 1e-12 } else { 1e-8 };
    let mut y: Vec<f64> = start.iter().map(|g| g.ln()).collect();
    for _ in 0..30 {
        if *spent >= budget {
            return None;
        }
        *spent += 1;
        let gaps: Vec<f64> = y.iter().map(|v| v.exp()).collect();
        let (f, jac) = residual(&gaps, aim, nodes)?;
        let norm = f.amax();
        if norm < tol {
            return Some(gaps);
        }
        let step = jac.lu().solve(&(-&f))?;
        // damp large moves in log space
        let scale = (1.0 / step.amax()).min(1.0);
        for j in 1..y.len() {
            y[j] += scale * step[j - 1];
        }
        if y.iter().any(|v| !v.is_finite() || v.abs() > 40.0) {
            return None;
        }
    }
    None
}

fn round_and_verify(
    target: &Passport,
    gaps: &[f64],
    budget: usize,
    spent: &mut usize,
) -> Result<Option<CriticalPointSpec>> {
    let xs = positions(gaps);
    let mut last: Option<Vec<Rational>> = None;
    for digits in 1..=12 {
        if *spent >= budget {
            return Ok(None);
        }
        let rounded: Vec<Rational> = xs.iter().map(|x| from_f64_decimal(*x, digits)).collect();
        if last.as_ref() == Some(&rounded) {
            continue;
        }
        last = Some(rounded.clone());
        let Ok(spec) = CriticalPointSpec::new(rounded) else { continue };
        *spent += 1;
        let p = from_critical_points(&spec);
        if let PassportOutcome::Snake(found) = passport(&p, &default_tol())? {
            if &found == target {
                return Ok(Some(spec));
            }
        }
    }
    Ok(None)
}
