//! A chart of the main triangle by ordered roots.
//!
//! Write the roots of `q` as `-t1 < -t2 < -t3 < -t4 < 0`, so `Σ t = 4` and
//! `∏ t = γ`. The pair `(t3, t2)` determines `t1, t4` as the roots of
//! `u^2 - (4 - t2 - t3) u + γ / (t2 t3)`, and the ordering holds exactly when
//! `H(t2) < 0` and `G(t2) < 0`, with
//!
//! * `H = t3^2 t2^2 + t3^2 (2 t3 - 4) t2 + γ` (from `t4 < t3`),
//! * `G = 2 t3 t2^3 + (t3^2 - 4 t3) t2^2 + γ` (from `t2 < t1`).
//!
//! For fixed `t3` the admissible `t2` form an interval, so the unit square
//! maps onto the section by `u -> t3`, `v -> t2` within that interval. Cusps
//! of the section's boundary become ordinary edges of the square.

/// Roots and coefficients at a chart point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChartPoint {
    /// `t1 > t2 > t3 > t4 > 0`.
    pub t: [f64; 4],
    pub a: f64,
    pub b: f64,
}

#[derive(Clone, Debug)]
pub struct RootChart {
    gamma: f64,
    t3_lo: f64,
    t3_hi: f64,
}

impl RootChart {
    /// `None` when the section is empty.
    pub fn new(gamma: f64) -> Option<Self> {
        if !(gamma > 0.0 && gamma < 1.0) {
            return None;
        }
        let probe = |t3: f64| interval(t3, gamma).is_some();
        let n = 4000;
        let ts: Vec<f64> = (1..n).map(|i| 4.0 / 3.0 * i as f64 / n as f64).collect();
        let first = ts.iter().position(|&t| probe(t))?;
        let last = ts.iter().rposition(|&t| probe(t))?;
        let lo_out = if first == 0 { 0.0 } else { ts[first - 1] };
        let hi_out = if last + 1 < ts.len() { ts[last + 1] } else { 4.0 / 3.0 };
        let t3_lo = boundary(ts[first], lo_out, &probe);
        let t3_hi = boundary(ts[last], hi_out, &probe);
        Some(RootChart { gamma, t3_lo, t3_hi })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn t3_range(&self) -> (f64, f64) {
        (self.t3_lo, self.t3_hi)
    }

    /// Bounding box `[a_min, a_max, b_min, b_max]` of the section, from
    /// points just inside the edges of the chart.
    pub fn bounds(&self) -> [f64; 4] {
        let mut out = [f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY];
        let n = 400;
        let e = 1e-9;
        for k in 0..=n {
            let t = (k as f64 / n as f64).clamp(e, 1.0 - e);
            for (u, v) in [(t, e), (t, 1.0 - e), (e, t), (1.0 - e, t)] {
                if let Some(p) = self.point(u, v) {
                    out[0] = out[0].min(p.a);
                    out[1] = out[1].max(p.a);
                    out[2] = out[2].min(p.b);
                    out[3] = out[3].max(p.b);
                }
            }
        }
        out
    }

    /// Chart point for `(u, v)` in the open unit square.
    pub fn point(&self, u: f64, v: f64) -> Option<ChartPoint> {
        let t3 = self.t3_lo + u * (self.t3_hi - self.t3_lo);
        let (lo, hi) = interval(t3, self.gamma)?;
        let t2 = lo + v * (hi - lo);
        let sum = 4.0 - t2 - t3;
        let prod = self.gamma / (t2 * t3);
        let disc = sum * sum - 4.0 * prod;
        if disc < 0.0 {
            return None;
        }
        let sq = disc.sqrt();
        let t1 = 0.5 * (sum + sq);
        let t4 = prod / t1;
        let t = [t1, t2, t3, t4];
        if !(t1 > t2 && t2 > t3 && t3 > t4 && t4 > 0.0) {
            return None;
        }
        let a = t1 * t2 + t1 * t3 + t1 * t4 + t2 * t3 + t2 * t4 + t3 * t4;
        let b = t1 * t2 * t3 + t1 * t2 * t4 + t1 * t3 * t4 + t2 * t3 * t4;
        Some(ChartPoint { t, a, b })
    }

    /// Number (1..=16) of the passport at `(u, v)`, or 0 when values are
    /// too close to rank or the point is off the chart.
    pub fn label(&self, u: f64, v: f64) -> u8 {
        match self.point(u, v) {
            Some(pt) => label_of(&pt, self.gamma),
            None => 0,
        }
    }
}

/// Passport number of a chart point computed in floating point.
pub fn label_of(pt: &ChartPoint, gamma: f64) -> u8 {
    let p = |x: f64| {
        let x2 = x * x;
        x2 * (gamma / 2.0 + x * (pt.b / 3.0 + x * (pt.a / 4.0 + x * (4.0 / 5.0 + x / 6.0))))
    };
    let xs = [-pt.t[0], -pt.t[1], -pt.t[2], -pt.t[3], 0.0];
    let vals: Vec<f64> = xs.iter().map(|&x| p(x)).collect();
    let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-300);
    let mut order: Vec<usize> = (0..5).collect();
    order.sort_by(|&i, &j| vals[i].partial_cmp(&vals[j]).unwrap());
    for w in order.windows(2) {
        if vals[w[1]] - vals[w[0]] <= 1e-11 * scale {
            return 0;
        }
    }
    let mut ranks = [0usize; 5];
    for (r, &i) in order.iter().enumerate() {
        ranks[i] = r + 1;
    }
    NUMBERS
        .iter()
        .position(|p| *p == ranks)
        .map(|i| i as u8 + 1)
        .unwrap_or(0)
}

/// The order-5 passports in lexicographic order.
const NUMBERS: [[usize; 5]; 16] = [
    [1, 3, 2, 5, 4],
    [1, 4, 2, 5, 3],
    [1, 4, 3, 5, 2],
    [1, 5, 2, 4, 3],
    [1, 5, 3, 4, 2],
    [2, 3, 1, 5, 4],
    [2, 4, 1, 5, 3],
    [2, 4, 3, 5, 1],
    [2, 5, 1, 4, 3],
    [2, 5, 3, 4, 1],
    [3, 4, 1, 5, 2],
    [3, 4, 2, 5, 1],
    [3, 5, 1, 4, 2],
    [3, 5, 2, 4, 1],
    [4, 5, 1, 3, 2],
    [4, 5, 2, 3, 1],
];

fn boundary(inside: f64, outside: f64, probe: &impl Fn(f64) -> bool) -> f64 {
    let (mut a, mut b) = (inside, outside);
    for _ in 0..80 {
        let m = 0.5 * (a + b);
        if probe(m) {
            a = m;
        } else {
            b = m;
        }
    }
    a
}

/// Admissible `t2` for a given `t3`.
fn interval(t3: f64, gamma: f64) -> Option<(f64, f64)> {
    if !(t3 > 0.0 && t3 < 4.0 / 3.0) {
        return None;
    }
    // H < 0
    let qa = t3 * t3;
    let qb = t3 * t3 * (2.0 * t3 - 4.0);
    let disc = qb * qb - 4.0 * qa * gamma;
    if disc <= 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    // stable quadratic roots
    let k = -0.5 * (qb - sq);
    let (h1, h2) = {
        let r1 = k / qa;
        let r2 = gamma / k;
        (r1.min(r2), r1.max(r2))
    };
    // G < 0: two positive roots around the minimum at (4 - t3) / 3
    let g = |x: f64| (2.0 * t3 * x + (t3 * t3 - 4.0 * t3)) * x * x + gamma;
    let xm = (4.0 - t3) / 3.0;
    if g(xm) >= 0.0 {
        return None;
    }
    let g1 = bisect(&g, 0.0, xm);
    let mut top = xm * 2.0 + 1.0;
    while g(top) < 0.0 {
        top *= 2.0;
    }
    let g2 = bisect(&g, top, xm);
    let lo = t3.max(h1).max(g1);
    let hi = h2.min(g2);
    (hi > lo).then_some((lo, hi))
}

/// Root of `f` between `pos` (f > 0) and `neg` (f < 0).
fn bisect(f: &impl Fn(f64) -> f64, pos: f64, neg: f64) -> f64 {
    let (mut a, mut b) = (pos, neg);
    for _ in 0..100 {
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        if f(m) > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chart_points_have_ordered_roots_and_invariants() {
        let chart = RootChart::new(0.7).unwrap();
        for i in 1..20 {
            for j in 1..20 {
                let pt = chart.point(i as f64 / 20.0, j as f64 / 20.0).unwrap();
                let [t1, t2, t3, t4] = pt.t;
                assert!((t1 + t2 + t3 + t4 - 4.0).abs() < 1e-12);
                assert!((t1 * t2 * t3 * t4 - 0.7).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn empty_and_full_sections() {
        assert!(RootChart::new(1.0).is_none());
        assert!(RootChart::new(0.0).is_none());
        assert!(RootChart::new(0.999).is_some());
    }

    #[test]
    fn labels_exist() {
        let chart = RootChart::new(0.9).unwrap();
        assert!(chart.label(0.5, 0.5) > 0);
    }
}
