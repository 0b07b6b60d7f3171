//! Constant-passport components of a section `c = γ`.
//!
//! The root chart's unit square is cut into `resolution^2` base cells. A cell
//! whose corners and centre share a label is a single leaf; otherwise it is
//! subdivided, up to `max_depth` times, into a quadtree whose leaves carry
//! one label each. Components are the connected classes of equally labelled
//! leaves, adjacency being taken on the finest grid. Each component is then
//! checked exactly: sample points are snapped to short decimals, and both
//! main-triangle membership and the passport are recomputed in rationals.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::chart::RootChart;
use super::{in_main_triangle, order5_passports, passport6, Formula6, Param6};
use crate::contour::{marching_squares, Polyline};
use crate::error::{domain, Result};
use crate::morse::PassportOutcome;
use crate::polycore::{int, rat, rational::from_f64_decimal, ser_rational, to_f64, Rational};
use crate::snakes::Passport;

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub resolution: usize,
    pub max_depth: u32,
    /// Verify every component exactly at up to three sample points.
    pub verify: bool,
}

impl ScanOptions {
    pub fn new(resolution: usize) -> Self {
        ScanOptions { resolution, max_depth: 4, verify: true }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Component6 {
    pub id: usize,
    /// Position of the passport in the lexicographic list of order-5 PAPs.
    pub number: usize,
    pub passport: Passport,
    pub representative: Param6,
    /// Exactly checked sample points, the representative first.
    pub samples: Vec<Param6>,
    /// All samples lie in the main triangle with the component's passport.
    pub verified: bool,
    /// Base cells the component touches.
    pub cells: usize,
    /// Share of the chart square covered.
    pub area: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionScan {
    #[serde(serialize_with = "ser_rational")]
    pub gamma: Rational,
    pub resolution: usize,
    pub max_depth: u32,
    pub components: Vec<Component6>,
    pub warnings: Vec<String>,
}

/// Component count and the sorted multiset of passport numbers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Signature {
    pub count: usize,
    pub numbers: Vec<usize>,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.numbers.iter().map(|n| n.to_string()).collect();
        write!(f, "{} components [{}]", self.count, parts.join(" "))
    }
}

impl SectionScan {
    pub fn signature(&self) -> Signature {
        let mut numbers: Vec<usize> = self.components.iter().map(|c| c.number).collect();
        numbers.sort_unstable();
        Signature { count: numbers.len(), numbers }
    }
}

pub fn scan_section(gamma: &Rational, resolution: usize) -> Result<SectionScan> {
    scan_section_with(gamma, &ScanOptions::new(resolution))
}

/// Passports of all components of the section.
pub fn passports_present(gamma: &Rational, resolution: usize) -> Result<Vec<Passport>> {
    let scan = scan_section(gamma, resolution)?;
    let mut out: Vec<Passport> = scan.components.into_iter().map(|c| c.passport).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Leaves of one base cell on its `f x f` fine grid (`f = 2^max_depth`).
enum CellLeaves {
    Pure(u8),
    Refined { owner: Vec<u16>, leaves: Vec<Leaf> },
}

#[derive(Clone, Copy)]
struct Leaf {
    label: u8,
    /// Fine-grid offset and side inside the base cell.
    x: u16,
    y: u16,
    size: u16,
}

pub fn scan_section_with(gamma: &Rational, opts: &ScanOptions) -> Result<SectionScan> {
    if *gamma <= int(0) || *gamma > int(1) {
        return domain("gamma must lie in (0, 1]");
    }
    if opts.resolution < 8 {
        return domain("resolution must be at least 8");
    }
    if opts.max_depth > 8 {
        return domain("refinement depth is limited to 8");
    }
    let g = to_f64(gamma);
    let mut scan = SectionScan {
        gamma: gamma.clone(),
        resolution: opts.resolution,
        max_depth: opts.max_depth,
        components: Vec::new(),
        warnings: Vec::new(),
    };
    let Some(chart) = RootChart::new(g) else {
        return Ok(scan);
    };
    let n = opts.resolution;
    let f = 1usize << opts.max_depth;
    let h = 1.0 / n as f64;
    // corner labels, shared between neighbouring cells
    let corners: Vec<Vec<u8>> = (0..=n)
        .into_par_iter()
        .map(|i| (0..=n).map(|j| chart.label(i as f64 * h, j as f64 * h)).collect())
        .collect();
    let cells: Vec<CellLeaves> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k % n, k / n);
            let c = [corners[i][j], corners[i + 1][j], corners[i][j + 1], corners[i + 1][j + 1]];
            let centre = chart.label((i as f64 + 0.5) * h, (j as f64 + 0.5) * h);
            if centre != 0 && c.iter().all(|&x| x == centre) {
                return CellLeaves::Pure(centre);
            }
            let mut leaves = Vec::new();
            refine(&chart, i as f64 * h, j as f64 * h, h, 0, 0, f as u16, opts.max_depth, &mut leaves);
            let mut owner = vec![u16::MAX; f * f];
            for (id, leaf) in leaves.iter().enumerate() {
                for dx in 0..leaf.size as usize {
                    for dy in 0..leaf.size as usize {
                        owner[(leaf.x as usize + dx) + f * (leaf.y as usize + dy)] = id as u16;
                    }
                }
            }
            CellLeaves::Refined { owner, leaves }
        })
        .collect();

    // global node ids
    let mut base = vec![0usize; n * n + 1];
    for k in 0..n * n {
        base[k + 1] = base[k]
            + match &cells[k] {
                CellLeaves::Pure(_) => 1,
                CellLeaves::Refined { leaves, .. } => leaves.len(),
            };
    }
    let total = base[n * n];
    let label_of = |k: usize, fx: usize, fy: usize| -> (usize, u8) {
        match &cells[k] {
            CellLeaves::Pure(l) => (base[k], *l),
            CellLeaves::Refined { owner, leaves } => {
                let id = owner[fx + f * fy] as usize;
                (base[k] + id, leaves[id].label)
            }
        }
    };
    // adjacent leaf pairs under 8-connectivity on the global fine grid;
    // thin tails near cusps only touch diagonally at the finest level
    let side = n * f;
    let at = |gx: usize, gy: usize| label_of((gy / f) * n + gx / f, gx % f, gy % f);
    let mut pairs: Vec<(usize, u8, usize, u8)> = Vec::new();
    let mut link = |gx: usize, gy: usize| {
        let (a, la) = at(gx, gy);
        if la == 0 {
            return;
        }
        let (x, y) = (gx as isize, gy as isize);
        for (hx, hy) in [(x + 1, y), (x, y + 1), (x + 1, y + 1), (x - 1, y + 1)] {
            if hx < 0 || hy < 0 || hx as usize >= side || hy as usize >= side {
                continue;
            }
            let (b, lb) = at(hx as usize, hy as usize);
            if lb != 0 && a != b {
                pairs.push((a, la, b, lb));
            }
        }
    };
    for k in 0..n * n {
        let (i, j) = (k % n, k / n);
        let (ox, oy) = (i * f, j * f);
        match &cells[k] {
            CellLeaves::Refined { .. } => {
                for fy in 0..f {
                    for fx in 0..f {
                        link(ox + fx, oy + fy);
                    }
                }
            }
            CellLeaves::Pure(_) => {
                for t in 0..f {
                    link(ox + t, oy);
                    link(ox + t, oy + f - 1);
                    link(ox, oy + t);
                    link(ox + f - 1, oy + t);
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let mut uf = UnionFind::new(total);
    for &(a, la, b, lb) in &pairs {
        if la == lb {
            uf.union(a, b);
        }
    }
    let mut fine = vec![false; total];
    for k in 0..n * n {
        if let CellLeaves::Refined { leaves, .. } = &cells[k] {
            for (id, leaf) in leaves.iter().enumerate() {
                fine[base[k] + id] = leaf.size == 1;
            }
        }
    }
    bridge_slivers(&pairs, &fine, &mut uf);

    // gather classes in scanline order
    struct Acc {
        label: u8,
        first: usize,
        cells: Vec<usize>,
        area: f64,
        /// (pure base cell?, leaf size, u, v) candidates for samples
        candidates: Vec<(usize, f64, f64)>,
    }
    let mut classes: BTreeMap<usize, Acc> = BTreeMap::new();
    let cell_area = 1.0 / (n * n) as f64;
    for k in 0..n * n {
        let (i, j) = (k % n, k / n);
        let mut visit = |node: usize, label: u8, area: f64, cand: (usize, f64, f64)| {
            if label == 0 {
                return;
            }
            let root = uf.find(node);
            let acc = classes.entry(root).or_insert_with(|| Acc {
                label,
                first: k,
                cells: Vec::new(),
                area: 0.0,
                candidates: Vec::new(),
            });
            if acc.cells.last() != Some(&k) {
                acc.cells.push(k);
            }
            acc.area += area;
            acc.candidates.push(cand);
        };
        match &cells[k] {
            CellLeaves::Pure(l) => {
                visit(base[k], *l, cell_area, (usize::MAX, (i as f64 + 0.5) * h, (j as f64 + 0.5) * h));
            }
            CellLeaves::Refined { leaves, .. } => {
                for (id, leaf) in leaves.iter().enumerate() {
                    let s = leaf.size as f64 / f as f64;
                    let u = (i as f64 + (leaf.x as f64 + 0.5 * leaf.size as f64) / f as f64) * h;
                    let v = (j as f64 + (leaf.y as f64 + 0.5 * leaf.size as f64) / f as f64) * h;
                    visit(base[k] + id, leaf.label, s * s * cell_area, (leaf.size as usize, u, v));
                }
            }
        }
    }
    let mut accs: Vec<Acc> = classes.into_values().collect();
    accs.sort_by_key(|a| (a.first, a.label));

    let pure_cells: Vec<Option<u8>> = cells
        .iter()
        .map(|c| match c {
            CellLeaves::Pure(l) => Some(*l),
            _ => None,
        })
        .collect();
    let depth = interior_depth(&pure_cells, n);

    let components: Vec<Component6> = accs
        .into_par_iter()
        .enumerate()
        .map(|(id, acc)| {
            // deepest pure cells first, then the largest refined leaves
            let mut cands: Vec<(u32, usize, f64, f64)> = acc
                .candidates
                .iter()
                .map(|&(size, u, v)| {
                    if size == usize::MAX {
                        let k = ((v / h) as usize).min(n - 1) * n + ((u / h) as usize).min(n - 1);
                        (depth[k] + 1, usize::MAX, u, v)
                    } else {
                        (0, size, u, v)
                    }
                })
                .collect();
            cands.sort_by(|x, y| (y.0, y.1).cmp(&(x.0, x.1)));
            let passport = order5_passports()[acc.label as usize - 1].clone();
            let mut samples = Vec::new();
            let mut verified = true;
            for &(_, _, u, v) in cands.iter().take(3) {
                let pt = chart.point(u, v).expect("sample on chart");
                let (param, ok) = if opts.verify {
                    snap_and_verify(pt.a, pt.b, gamma, &passport)
                } else {
                    (snap(pt.a, pt.b, gamma, 6), true)
                };
                verified &= ok;
                samples.push(param);
            }
            Component6 {
                id,
                number: acc.label as usize,
                passport,
                representative: samples[0].clone(),
                samples,
                verified,
                cells: acc.cells.len(),
                area: acc.area,
            }
        })
        .collect();
    for c in &components {
        if !c.verified {
            scan.warnings.push(format!(
                "component {} (passport {}) failed exact verification at a sample point",
                c.id, c.number
            ));
        }
    }
    scan.components = components;
    Ok(scan)
}

#[allow(clippy::too_many_arguments)]
fn refine(
    chart: &RootChart,
    u0: f64,
    v0: f64,
    side: f64,
    x: u16,
    y: u16,
    size: u16,
    depth_left: u32,
    out: &mut Vec<Leaf>,
) {
    let centre = chart.label(u0 + 0.5 * side, v0 + 0.5 * side);
    if depth_left == 0 {
        out.push(Leaf { label: centre, x, y, size });
        return;
    }
    let c = [
        chart.label(u0, v0),
        chart.label(u0 + side, v0),
        chart.label(u0, v0 + side),
        chart.label(u0 + side, v0 + side),
    ];
    if centre != 0 && c.iter().all(|&l| l == centre) {
        out.push(Leaf { label: centre, x, y, size });
        return;
    }
    let half = side * 0.5;
    let hs = size / 2;
    for (dx, dy) in [(0u16, 0u16), (1, 0), (0, 1), (1, 1)] {
        refine(
            chart,
            u0 + dx as f64 * half,
            v0 + dy as f64 * half,
            half,
            x + dx * hs,
            y + dy * hs,
            hs,
            depth_left - 1,
            out,
        );
    }
}

/// Distance (in base cells) from each pure cell to the nearest cell that is
/// refined or carries another label.
fn interior_depth(pure: &[Option<u8>], n: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; n * n];
    let mut queue = std::collections::VecDeque::new();
    for k in 0..n * n {
        let (i, j) = (k % n, k / n);
        let edge = i == 0 || j == 0 || i + 1 == n || j + 1 == n;
        let differs = pure[k].is_none()
            || neighbours(k, n).any(|m| pure[m] != pure[k]);
        if edge || differs {
            dist[k] = 0;
            queue.push_back(k);
        }
    }
    while let Some(k) = queue.pop_front() {
        for m in neighbours(k, n) {
            if dist[m] == u32::MAX {
                dist[m] = dist[k] + 1;
                queue.push_back(m);
            }
        }
    }
    dist
}

fn neighbours(k: usize, n: usize) -> impl Iterator<Item = usize> {
    let (i, j) = (k % n, k / n);
    let mut out = Vec::with_capacity(4);
    if i > 0 {
        out.push(k - 1);
    }
    if i + 1 < n {
        out.push(k + 1);
    }
    if j > 0 {
        out.push(k - n);
    }
    if j + 1 < n {
        out.push(k + n);
    }
    out.into_iter()
}

fn snap(a: f64, b: f64, gamma: &Rational, digits: u32) -> Param6 {
    Param6::new(from_f64_decimal(a, digits), from_f64_decimal(b, digits), gamma.clone())
}

/// Shortest decimal snapping of `(a, b)` whose exact passport matches.
fn snap_and_verify(a: f64, b: f64, gamma: &Rational, expected: &Passport) -> (Param6, bool) {
    let mut last = None;
    for digits in 3..=15 {
        let pt = snap(a, b, gamma, digits);
        if last.as_ref() == Some(&pt) {
            continue;
        }
        if in_main_triangle(&pt) {
            if let Ok(PassportOutcome::Snake(p)) = passport6(&pt) {
                if &p == expected {
                    return (pt, true);
                }
            }
        }
        last = Some(pt);
    }
    (snap(a, b, gamma, 15), false)
}

/// Transposition distance between passports, where one step swaps the
/// ranks of two critical values adjacent in rank (crossing one curve).
fn passport_distance() -> &'static [[u8; 16]; 16] {
    static DIST: once_cell::sync::Lazy<[[u8; 16]; 16]> = once_cell::sync::Lazy::new(|| {
        let list = order5_passports();
        let step = |x: usize, y: usize| {
            let (p, q) = (list[x].entries(), list[y].entries());
            let diff: Vec<usize> = (0..p.len()).filter(|&i| p[i] != q[i]).collect();
            diff.len() == 2 && p[diff[0]].abs_diff(p[diff[1]]) == 1
        };
        let mut dist = [[u8::MAX; 16]; 16];
        for s in 0..16 {
            dist[s][s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in 0..16 {
                    if dist[s][y] == u8::MAX && step(x, y) {
                        dist[s][y] = dist[s][x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        dist
    });
    &DIST
}

fn dist(x: u8, y: u8) -> u8 {
    passport_distance()[x as usize - 1][y as usize - 1]
}

/// `l` lies strictly between `a` and `b` on a shortest path.
fn between(a: u8, l: u8, b: u8) -> bool {
    l != a && l != b && dist(a, l).saturating_add(dist(l, b)) == dist(a, b)
}

/// Where passports `A` and `B` more than one step apart meet, slivers of
/// the intermediate passports run between them below the grid spacing and
/// show up as fragments. A chain for `(A, B)` links the contact leaves and
/// the fine leaves sandwiched between labels on either side; fragments of
/// one passport along one chain belong to the same sliver.
fn bridge_slivers(pairs: &[(usize, u8, usize, u8)], fine: &[bool], uf: &mut UnionFind) {
    use std::collections::{BTreeSet, HashMap};
    let mut label = HashMap::new();
    let mut around: HashMap<usize, BTreeSet<u8>> = HashMap::new();
    let mut keys: HashMap<usize, BTreeSet<(u8, u8)>> = HashMap::new();
    for &(a, la, b, lb) in pairs {
        label.insert(a, la);
        label.insert(b, lb);
        around.entry(a).or_default().insert(lb);
        around.entry(b).or_default().insert(la);
        if dist(la, lb) >= 2 {
            let k = (la.min(lb), la.max(lb));
            keys.entry(a).or_default().insert(k);
            keys.entry(b).or_default().insert(k);
        }
    }
    if keys.is_empty() {
        return;
    }
    for (&node, labels) in &around {
        if !fine[node] {
            continue;
        }
        let l = label[&node];
        for &x in labels {
            for &y in labels.range(x + 1..) {
                if between(x, l, y) {
                    keys.entry(node).or_default().insert((x, y));
                }
            }
        }
    }
    let mut ids: HashMap<(usize, (u8, u8)), usize> = HashMap::new();
    for (&node, ks) in &keys {
        for &k in ks {
            let n = ids.len();
            ids.insert((node, k), n);
        }
    }
    let mut chains = UnionFind::new(ids.len());
    for &(x, _, y, _) in pairs {
        if let (Some(kx), Some(ky)) = (keys.get(&x), keys.get(&y)) {
            for k in kx.intersection(ky) {
                chains.union(ids[&(x, *k)], ids[&(y, *k)]);
            }
        }
    }
    let mut entries: Vec<(&(usize, (u8, u8)), &usize)> = ids.iter().collect();
    entries.sort();
    let mut first: HashMap<(usize, u8), usize> = HashMap::new();
    for (&(node, (a, b)), &i) in entries {
        let l = label[&node];
        if !between(a, l, b) {
            continue;
        }
        let chain = chains.find(i);
        match first.get(&(chain, l)) {
            Some(&root) => uf.union(root, node),
            None => {
                first.insert((chain, l), node);
            }
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller id as root for determinism
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Zero sets of `d`, `s`, `z` at `c = γ` inside a window of the `(a, b)`
/// plane.
#[derive(Clone, Debug, Serialize)]
pub struct SectionCurves {
    #[serde(serialize_with = "ser_rational")]
    pub gamma: Rational,
    /// `[a_min, a_max, b_min, b_max]`.
    pub window: [f64; 4],
    pub d: Vec<Polyline>,
    pub s: Vec<Polyline>,
    pub z: Vec<Polyline>,
}

/// Curves over the whole rectangle `[0,6] x [0,4]`.
pub fn section_curves(gamma: &Rational, resolution: usize) -> Result<SectionCurves> {
    section_curves_in(gamma, resolution, [int(0), int(6), int(0), int(4)])
}

/// Curves over `[a0, a1] x [b0, b1]`.
pub fn section_curves_in(gamma: &Rational, resolution: usize, window: [Rational; 4]) -> Result<SectionCurves> {
    if resolution < 8 {
        return domain("resolution must be at least 8");
    }
    let [a0, a1, b0, b1] = window;
    if a0 >= a1 || b0 >= b1 {
        return domain("empty window");
    }
    let n = resolution;
    let g = to_f64(gamma);
    let at = |lo: &Rational, hi: &Rational, k: usize| lo + (hi - lo) * rat(k as i64, n as i64);
    let ea: Vec<Rational> = (0..=n).map(|i| at(&a0, &a1, i)).collect();
    let eb: Vec<Rational> = (0..=n).map(|j| at(&b0, &b1, j)).collect();
    let xs: Vec<f64> = ea.iter().map(to_f64).collect();
    let ys: Vec<f64> = eb.iter().map(to_f64).collect();
    let grid = |formula: Formula6| -> Vec<Vec<f64>> {
        (0..=n)
            .into_par_iter()
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        let (v, _) = super::formulas::eval_f64(formula.terms(), xs[i], ys[j], g);
                        let exact = || Param6::new(ea[i].clone(), eb[j].clone(), gamma.clone());
                        match formula.sign_filtered(xs[i], ys[j], g, exact) {
                            crate::sign::Sign::Zero => 0.0,
                            s => s.as_i8() as f64 * v.abs().max(f64::MIN_POSITIVE),
                        }
                    })
                    .collect()
            })
            .collect()
    };
    Ok(SectionCurves {
        gamma: gamma.clone(),
        window: [xs[0], xs[n], ys[0], ys[n]],
        d: marching_squares(&grid(Formula6::D), &xs, &ys),
        s: marching_squares(&grid(Formula6::S), &xs, &ys),
        z: marching_squares(&grid(Formula6::Z), &xs, &ys),
    })
}
