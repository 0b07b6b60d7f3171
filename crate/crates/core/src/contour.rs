//! Marching squares on a rectangular grid of samples.

use std::collections::HashMap;

use serde::Serialize;

/// A polyline in parameter coordinates; closed when first == last.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Polyline {
    pub points: Vec<(f64, f64)>,
}

type EdgeId = (u8, usize, usize);

/// Zero level set of `values[i][j]`, sampled at `(xs[i], ys[j])`.
///
/// Zero samples count as positive, so the sign of each sample must be exact
/// for the topology to be right; magnitudes only place the crossing.
pub fn marching_squares(values: &[Vec<f64>], xs: &[f64], ys: &[f64]) -> Vec<Polyline> {
    let nx = xs.len();
    let ny = ys.len();
    if nx < 2 || ny < 2 {
        return Vec::new();
    }
    let pos = |v: f64| v >= 0.0;
    let mut crossings: HashMap<EdgeId, (f64, f64)> = HashMap::new();
    let mut crossing = |e: EdgeId| -> EdgeId {
        crossings.entry(e).or_insert_with(|| {
            let (kind, i, j) = e;
            let (i1, j1) = if kind == 0 { (i + 1, j) } else { (i, j + 1) };
            let (v0, v1) = (values[i][j], values[i1][j1]);
            let t = if v0 == v1 { 0.5 } else { (v0 / (v0 - v1)).clamp(0.0, 1.0) };
            (xs[i] + t * (xs[i1] - xs[i]), ys[j] + t * (ys[j1] - ys[j]))
        });
        e
    };

    let mut segments: Vec<(EdgeId, EdgeId)> = Vec::new();
    for i in 0..nx - 1 {
        for j in 0..ny - 1 {
            let v = [values[i][j], values[i + 1][j], values[i + 1][j + 1], values[i][j + 1]];
            let case = v.iter().enumerate().fold(0u8, |acc, (k, &x)| acc | ((pos(x) as u8) << k));
            let bottom = (0, i, j);
            let right = (1, i + 1, j);
            let top = (0, i, j + 1);
            let left = (1, i, j);
            let pairs: Vec<(EdgeId, EdgeId)> = match case {
                0 | 15 => vec![],
                1 | 14 => vec![(left, bottom)],
                2 | 13 => vec![(bottom, right)],
                3 | 12 => vec![(left, right)],
                4 | 11 => vec![(right, top)],
                6 | 9 => vec![(bottom, top)],
                7 | 8 => vec![(left, top)],
                5 | 10 => {
                    let centre_pos = pos(v.iter().sum::<f64>() / 4.0);
                    // corners 0 and 2 share a sign in both saddle cases
                    let corner0_pos = case == 5;
                    if centre_pos == corner0_pos {
                        vec![(left, top), (bottom, right)]
                    } else {
                        vec![(left, bottom), (right, top)]
                    }
                }
                _ => unreachable!(),
            };
            for (a, b) in pairs {
                segments.push((crossing(a), crossing(b)));
            }
        }
    }
    chain(&segments, &crossings)
}

fn chain(segments: &[(EdgeId, EdgeId)], at: &HashMap<EdgeId, (f64, f64)>) -> Vec<Polyline> {
    let mut incident: HashMap<EdgeId, Vec<usize>> = HashMap::new();
    for (k, (a, b)) in segments.iter().enumerate() {
        incident.entry(*a).or_default().push(k);
        incident.entry(*b).or_default().push(k);
    }
    let mut used = vec![false; segments.len()];
    let mut out = Vec::new();
    // open chains start at an edge with a single segment
    let mut starts: Vec<usize> = (0..segments.len())
        .filter(|&k| incident[&segments[k].0].len() == 1 || incident[&segments[k].1].len() == 1)
        .collect();
    starts.extend(0..segments.len());
    for start in starts {
        if used[start] {
            continue;
        }
        let (a, b) = segments[start];
        let first = if incident[&a].len() == 1 { a } else if incident[&b].len() == 1 { b } else { a };
        let mut ids = vec![first];
        let mut tip = if first == a { b } else { a };
        used[start] = true;
        loop {
            ids.push(tip);
            let next = incident[&tip].iter().copied().find(|&k| !used[k]);
            match next {
                Some(k) => {
                    used[k] = true;
                    let (c, d) = segments[k];
                    tip = if c == tip { d } else { c };
                }
                None => break,
            }
        }
        out.push(Polyline { points: ids.iter().map(|e| at[e]).collect() });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize) -> Vec<f64> {
        (0..n).map(|i| -1.0 + 2.0 * i as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn circle_is_one_closed_loop() {
        let xs = grid(41);
        let values: Vec<Vec<f64>> =
            xs.iter().map(|x| xs.iter().map(|y| x * x + y * y - 0.5).collect()).collect();
        let lines = marching_squares(&values, &xs, &xs);
        assert_eq!(lines.len(), 1);
        let pts = &lines[0].points;
        assert_eq!(pts.first(), pts.last());
        for (x, y) in pts {
            assert!(((x * x + y * y).sqrt() - 0.5f64.sqrt()).abs() < 0.01);
        }
    }

    #[test]
    fn line_is_open() {
        let xs = grid(11);
        let values: Vec<Vec<f64>> = xs.iter().map(|x| xs.iter().map(|y| y - 0.3 * x - 0.05).collect()).collect();
        let lines = marching_squares(&values, &xs, &xs);
        assert_eq!(lines.len(), 1);
        assert!(lines[0].points.len() >= 11);
        for (x, y) in &lines[0].points {
            assert!((y - 0.3 * x - 0.05).abs() < 1e-12);
        }
    }
}
