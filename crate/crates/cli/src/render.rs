//! Command bodies: compute, then format as text, JSON, CSV or SVG.

use std::str::FromStr;

use morse_core::morse::{
    construct_with, from_critical_points, passport as passport_of, ConstructOptions, CriticalPointSpec,
    PassportOutcome,
};
use morse_core::polycore::rational::fmt_rational;
use morse_core::polycore::{to_f64, Polynomial, Rational};
use morse_core::snakes::{count, enumerate, EBTriangle, Passport};
use morse_core::strata5::{classify5 as classify, landmarks5, trace_curves5, Param5, Stratum5};
use morse_core::strata6::{
    detect_bifurcations, passport_number, scan_section, section_curves_in, RootChart, Signature,
};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::svg::{Layer, Plot};
use crate::{Format, Global};

type Out = Result<String, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn unsupported(cmd: &str, format: Format) -> Out {
    Err(format!("format {format:?} is not available for {cmd}").to_lowercase())
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn csv_doc(header: &[&str], rows: Vec<Vec<String>>) -> Out {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(err)?;
    for row in rows {
        w.write_record(&row).map_err(err)?;
    }
    String::from_utf8(w.into_inner().map_err(err)?).map_err(err)
}

fn big(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn seq(p: &[usize]) -> String {
    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn rats(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(fmt_rational).collect()
}

/// Coefficients from the leading one down.
fn highest_first(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().rev().map(fmt_rational).collect()
}

pub fn paps(g: &Global, order: usize, level: Option<usize>, counting: bool) -> Out {
    if order == 0 {
        return Err("order must be at least 1".into());
    }
    if let Some(m) = level {
        if m == 0 || m > order {
            return Err(format!("level must lie in 1..={order}"));
        }
    }
    if counting {
        let n = match level {
            Some(m) => count(order, m).map_err(err)?,
            None => EBTriangle::build(order).map_err(err)?.row_total(order).expect("row"),
        };
        return match g.format {
            Format::Text => Ok(format!("{n}\n")),
            Format::Json => Ok(to_json(&json!({ "order": order, "level": level, "count": big(&n) }))),
            Format::Csv => csv_doc(
                &["order", "level", "count"],
                vec![vec![order.to_string(), level.map(|m| m.to_string()).unwrap_or_default(), n.to_string()]],
            ),
            f => unsupported("paps", f),
        };
    }
    let list: Vec<Passport> = enumerate(order)
        .map_err(err)?
        .into_iter()
        .filter(|p| level.is_none_or(|m| p.level() == m))
        .collect();
    match g.format {
        Format::Text => Ok(list.iter().map(|p| seq(p.entries()) + "\n").collect()),
        Format::Json => Ok(to_json(&json!({
            "order": order,
            "level": level,
            "count": list.len(),
            "passports": list.iter().map(|p| p.entries().to_vec()).collect::<Vec<_>>(),
        }))),
        Format::Csv => csv_doc(
            &["index", "passport", "level"],
            list.iter()
                .enumerate()
                .map(|(i, p)| vec![(i + 1).to_string(), seq(p.entries()), p.level().to_string()])
                .collect(),
        ),
        f => unsupported("paps", f),
    }
}

pub fn triangle(g: &Global, rows: usize) -> Out {
    let t = EBTriangle::build(rows).map_err(err)?;
    match g.format {
        Format::Text => Ok(t
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n")
            .collect()),
        Format::Json => Ok(to_json(&json!({
            "rows": t.rows().iter().map(|r| r.iter().map(big).collect::<Vec<_>>()).collect::<Vec<_>>()
        }))),
        Format::Csv => {
            let mut out = Vec::new();
            for (n, r) in t.rows().iter().enumerate() {
                for (m, x) in r.iter().enumerate() {
                    out.push(vec![(n + 1).to_string(), (m + 1).to_string(), x.to_string()]);
                }
            }
            csv_doc(&["n", "m", "s"], out)
        }
        f => unsupported("triangle", f),
    }
}

fn outcome_json(o: &PassportOutcome) -> Value {
    match o {
        PassportOutcome::Snake(p) => json!({ "kind": "snake", "passport": p.entries() }),
        PassportOutcome::Degenerate(r) => json!({ "kind": "degenerate", "ranks": r }),
        PassportOutcome::NonMorse(reason) => json!({ "kind": "non_morse", "reason": reason.to_string() }),
    }
}

fn outcome_row(o: &PassportOutcome) -> (String, String) {
    match o {
        PassportOutcome::Snake(p) => ("snake".into(), seq(p.entries())),
        PassportOutcome::Degenerate(r) => ("degenerate".into(), seq(r)),
        PassportOutcome::NonMorse(reason) => ("non_morse".into(), reason.to_string()),
    }
}

pub fn passport(g: &Global, cps: Option<Vec<Rational>>, coeffs: Option<Vec<Rational>>) -> Out {
    let poly = match (cps, coeffs) {
        (Some(xs), None) => from_critical_points(&CriticalPointSpec::new(xs).map_err(err)?),
        (None, Some(cs)) => Polynomial::new(cs.into_iter().rev().collect()),
        _ => return Err("give exactly one of --critical-points or --coeffs".into()),
    };
    let outcome = passport_of(&poly, &g.prec).map_err(err)?;
    match g.format {
        Format::Text => Ok(format!("{}\n", outcome_row(&outcome).1)),
        Format::Json => {
            let mut v = outcome_json(&outcome);
            v["coefficients"] = json!(highest_first(&poly));
            Ok(to_json(&v))
        }
        Format::Csv => {
            let (kind, value) = outcome_row(&outcome);
            csv_doc(&["kind", "value"], vec![vec![kind, value]])
        }
        f => unsupported("passport", f),
    }
}

pub fn construct(g: &Global, text: &str, budget: usize) -> Out {
    let target = Passport::from_str(text).map_err(err)?;
    let spec = construct_with(&target, &ConstructOptions { budget, seed: g.seed }).map_err(err)?;
    let poly = from_critical_points(&spec);
    let check = passport_of(&poly, &g.prec).map_err(err)?;
    if check.snake() != Some(&target) {
        return Err(format!("constructed polynomial has {check}, expected {target}"));
    }
    let points = rats(spec.points());
    let coeffs = highest_first(&poly);
    match g.format {
        Format::Text => Ok(format!(
            "passport {}\ncritical points {}\ncoefficients {}\nverified\n",
            seq(target.entries()),
            points.join(", "),
            coeffs.join(", ")
        )),
        Format::Json => Ok(to_json(&json!({
            "passport": target.entries(),
            "critical_points": points,
            "coefficients": coeffs,
            "verified": true,
        }))),
        Format::Csv => csv_doc(
            &["index", "critical_point"],
            points.iter().enumerate().map(|(i, x)| vec![i.to_string(), x.clone()]).collect(),
        ),
        f => unsupported("construct", f),
    }
}

pub fn classify5(g: &Global, b: Rational, c: Rational) -> Out {
    let pt = Param5::new(b, c);
    let stratum = classify(&pt).map_err(err)?;
    let (kind, name, pass): (&str, String, Option<Vec<usize>>) = match &stratum {
        Stratum5::Region { region, passport } => ("region", region.to_string(), Some(passport.entries().to_vec())),
        Stratum5::Arc { arc, .. } => ("arc", arc.to_string(), Some(arc.pattern())),
        Stratum5::Junction => ("junction", "F".into(), None),
        Stratum5::OutsideOAB => ("outside", "outside".into(), None),
    };
    match g.format {
        Format::Text => Ok(format!("{stratum}\n")),
        Format::Json => Ok(to_json(&json!({
            "b": fmt_rational(&pt.b),
            "c": fmt_rational(&pt.c),
            "kind": kind,
            "name": name,
            "passport": pass,
        }))),
        Format::Csv => csv_doc(
            &["b", "c", "kind", "name", "passport"],
            vec![vec![fmt_rational(&pt.b), fmt_rational(&pt.c), kind.into(), name, pass.map(|p| seq(&p)).unwrap_or_default()]],
        ),
        f => unsupported("classify5", f),
    }
}

pub fn curves5(g: &Global) -> Out {
    let curves = trace_curves5(g.resolution).map_err(err)?;
    let lm = landmarks5().map_err(err)?;
    let point = |p: &Param5| (to_f64(&p.b), to_f64(&p.c));
    let markers: Vec<(f64, f64, String)> = vec![
        (point(&lm.o).0, point(&lm.o).1, "O".into()),
        (point(&lm.a).0, point(&lm.a).1, "A".into()),
        (point(&lm.b).0, point(&lm.b).1, "B".into()),
        (point(&lm.d).0, point(&lm.d).1, "D".into()),
        (point(&lm.e).0, point(&lm.e).1, "E".into()),
        (lm.f.approx.0, lm.f.approx.1, "F".into()),
    ];
    match g.format {
        Format::Svg => {
            let colors = ["black", "#1f5fbf", "#c0392b"];
            let plot = Plot {
                title: "dq = 0, g = 0, h = 0 in the (b, c) plane".into(),
                window: [0.0, 3.0, 0.0, 1.0],
                axes: ("b", "c"),
                layers: curves
                    .iter()
                    .zip(colors)
                    .map(|(c, color)| Layer { name: curve_name(c), polylines: &c.polylines, color, dashed: false })
                    .collect(),
                markers,
                labels: vec![],
            };
            Ok(plot.render())
        }
        Format::Json => Ok(to_json(&json!({
            "curves": curves.iter().map(|c| json!({
                "curve": c.curve.to_string(),
                "polylines": c.polylines.iter().map(|l| &l.points).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "landmarks": markers.iter().map(|(b, c, n)| json!({ "name": n, "b": b, "c": c })).collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut rows = Vec::new();
            for c in &curves {
                for (i, line) in c.polylines.iter().enumerate() {
                    for &(b, cc) in &line.points {
                        rows.push(vec![c.curve.to_string(), i.to_string(), b.to_string(), cc.to_string()]);
                    }
                }
            }
            csv_doc(&["curve", "polyline", "b", "c"], rows)
        }
        Format::Text => {
            let mut out = String::new();
            for c in &curves {
                let n: usize = c.polylines.iter().map(|l| l.points.len()).sum();
                out += &format!("{}: {} polylines, {} points\n", c.curve, c.polylines.len(), n);
            }
            for (b, c, n) in &markers {
                out += &format!("{n} = ({b:.6}, {c:.6})\n");
            }
            Ok(out)
        }
    }
}

fn curve_name(c: &morse_core::strata5::TracedCurve) -> &'static str {
    match c.curve {
        morse_core::strata5::Curve5::Dq => "dq",
        morse_core::strata5::Curve5::G => "g",
        morse_core::strata5::Curve5::H => "h",
    }
}

fn signature_json(s: &Signature) -> Value {
    json!({ "count": s.count, "numbers": s.numbers })
}

pub fn section6(g: &Global, gamma: &Rational) -> Out {
    let scan = scan_section(gamma, g.resolution).map_err(err)?;
    let comps = &scan.components;
    match g.format {
        Format::Text => {
            let mut out = format!("gamma {}: {} components\n", fmt_rational(gamma), comps.len());
            for c in comps {
                out += &format!(
                    "{:>3}  #{:<2} {:<12} a={} b={} cells={}\n",
                    c.id,
                    c.number,
                    seq(c.passport.entries()),
                    fmt_rational(&c.representative.a),
                    fmt_rational(&c.representative.b),
                    c.cells
                );
            }
            for w in &scan.warnings {
                out += &format!("warning: {w}\n");
            }
            Ok(out)
        }
        Format::Json => Ok(to_json(&json!({
            "gamma": fmt_rational(gamma),
            "resolution": scan.resolution,
            "components": comps.iter().map(|c| json!({
                "id": c.id,
                "rep": {
                    "a": fmt_rational(&c.representative.a),
                    "b": fmt_rational(&c.representative.b),
                    "c": fmt_rational(&c.representative.c),
                },
                "passport": c.passport.entries(),
                "number": c.number,
                "cells": c.cells,
                "verified": c.verified,
            })).collect::<Vec<_>>(),
            "warnings": scan.warnings,
        }))),
        Format::Csv => csv_doc(
            &["id", "number", "passport", "a", "b", "c", "cells"],
            comps
                .iter()
                .map(|c| {
                    vec![
                        c.id.to_string(),
                        c.number.to_string(),
                        seq(c.passport.entries()),
                        fmt_rational(&c.representative.a),
                        fmt_rational(&c.representative.b),
                        fmt_rational(&c.representative.c),
                        c.cells.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Svg => {
            let chart = RootChart::new(to_f64(gamma)).ok_or("the section is empty")?;
            let [a0, a1, b0, b1] = chart.bounds();
            let (pa, pb) = (0.05 * (a1 - a0), 0.05 * (b1 - b0));
            let window = [floor3(a0 - pa), ceil3(a1 + pa), floor3(b0 - pb), ceil3(b1 + pb)];
            let curves = section_curves_in(gamma, g.resolution, window.clone()).map_err(err)?;
            let plot = Plot {
                title: format!("section c = {}", fmt_rational(gamma)),
                window: curves.window,
                axes: ("a", "b"),
                layers: vec![
                    Layer { name: "d", polylines: &curves.d, color: "black", dashed: false },
                    Layer { name: "s", polylines: &curves.s, color: "#1f5fbf", dashed: false },
                    Layer { name: "z", polylines: &curves.z, color: "#c0392b", dashed: true },
                ],
                markers: vec![],
                labels: comps
                    .iter()
                    .map(|c| {
                        let n = passport_number(&c.passport).unwrap_or(c.number);
                        (to_f64(&c.representative.a), to_f64(&c.representative.b), n.to_string())
                    })
                    .collect(),
            };
            Ok(plot.render())
        }
    }
}

fn floor3(x: f64) -> Rational {
    Rational::new(((x * 1000.0).floor() as i64).into(), 1000.into())
}

fn ceil3(x: f64) -> Rational {
    Rational::new(((x * 1000.0).ceil() as i64).into(), 1000.into())
}

pub fn bifurcations(g: &Global, lo: &Rational, hi: &Rational, tol: &Rational) -> Out {
    let report = detect_bifurcations(lo, hi, tol, g.resolution).map_err(err)?;
    match g.format {
        Format::Text => {
            let mut out = String::new();
            for t in &report.thresholds {
                out += &format!(
                    "{:.6} in [{}, {}]: {}{}\n",
                    t.approx,
                    fmt_rational(&t.lower),
                    fmt_rational(&t.upper),
                    t.event,
                    t.closed_form.as_ref().map(|x| format!(" (contains {x})")).unwrap_or_default()
                );
            }
            for w in &report.warnings {
                out += &format!("warning: {w}\n");
            }
            Ok(out)
        }
        Format::Json => Ok(to_json(&json!({
            "thresholds": report.thresholds.iter().map(|t| json!({
                "lower": fmt_rational(&t.lower),
                "upper": fmt_rational(&t.upper),
                "approx": t.approx,
                "event": t.event,
                "below": signature_json(&t.below),
                "above": signature_json(&t.above),
                "steps": t.steps,
                "closed_form": t.closed_form,
            })).collect::<Vec<_>>(),
            "warnings": report.warnings,
        }))),
        Format::Csv => csv_doc(
            &["lower", "upper", "approx", "count_below", "count_above", "event", "closed_form"],
            report
                .thresholds
                .iter()
                .map(|t| {
                    vec![
                        fmt_rational(&t.lower),
                        fmt_rational(&t.upper),
                        format!("{:.6}", t.approx),
                        t.below.count.to_string(),
                        t.above.count.to_string(),
                        t.event.clone(),
                        t.closed_form.clone().unwrap_or_default(),
                    ]
                })
                .collect(),
        ),
        f => unsupported("bifurcations", f),
    }
}
