use std::collections::BTreeSet;

use morse_core::morse::PassportOutcome;
use morse_core::polycore::{discriminant, int, rat, to_f64, Rational, SturmChain};
use morse_core::strata6::{
    d, detect_bifurcations, equal_values_point, in_main_triangle, invariants6, order5_passports,
    passport6, passport_number, passports_present, s, scan_section, z, zero_value_point, Param6,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rational {
    rat(rng.random_range(lo * den + 1..=hi * den), den)
}

/// Random point of the main triangle built from four distinct positive
/// negated roots summing to 4.
fn random_triangle_point(rng: &mut ChaCha8Rng) -> Param6 {
    loop {
        let t: Vec<Rational> = (0..3).map(|_| rat(rng.random_range(1..200), 100)).collect();
        let t4 = int(4) - &t[0] - &t[1] - &t[2];
        if t4 <= int(0) {
            continue;
        }
        let all = [&t[0], &t[1], &t[2], &t4];
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| all[i] != all[j]));
        if distinct {
            return Param6::from_negated_roots(all);
        }
    }
}

#[test]
fn d_matches_resultant_discriminant() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let pt = Param6::new(
            random_rational(&mut rng, -6, 6, 97),
            random_rational(&mut rng, -4, 4, 89),
            random_rational(&mut rng, -1, 1, 83),
        );
        assert_eq!(d(&pt), discriminant(&pt.q()).unwrap(), "at {pt:?}");
    }
}

#[test]
fn main_triangle_membership() {
    // q = (x + 1)^2 (x^2 + 2x + 2): two complex roots and a double root
    assert!(!in_main_triangle(&Param6::new(int(7), int(8), int(2))));
    // (x + 1)(x + 3)(x^2 + 1/4): two real roots
    let above = Param6::new(rat(13, 4), int(1), rat(3, 4));
    assert_eq!(SturmChain::new(&above.q()).count_real(), 2);
    assert!(!in_main_triangle(&above));
    // repeated root, d = 0
    let t = [rat(3, 2), rat(3, 2), rat(1, 2), rat(1, 2)];
    let double = Param6::from_negated_roots([&t[0], &t[1], &t[2], &t[3]]);
    assert!(d(&double).is_zero());
    assert!(!in_main_triangle(&double));
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        assert!(in_main_triangle(&random_triangle_point(&mut rng)));
    }
}

#[test]
fn positive_quartics_with_four_real_roots_have_negative_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut found = 0;
    while found < 1000 {
        let pt = Param6::new(
            random_rational(&mut rng, 3, 6, 1000),
            random_rational(&mut rng, 1, 4, 1000),
            random_rational(&mut rng, 0, 1, 1000),
        );
        let chain = SturmChain::new(&pt.q());
        if chain.count_real() != 4 {
            continue;
        }
        found += 1;
        assert_eq!(chain.count_up_to(&int(0)), 4, "nonnegative root at {pt:?}");
    }
}

#[test]
fn snake_exactly_off_the_degeneracy_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut points: Vec<Param6> = (0..500).map(|_| random_triangle_point(&mut rng)).collect();
    for k in 1..20 {
        let r = rat(k, 10);
        if let Some(pt) = zero_value_point(&r, &rat(7, 10)) {
            points.push(pt);
        }
        if let Some(pt) = equal_values_point(&rat(k, 20), &rat(k + 20, 20)) {
            points.push(pt);
        }
    }
    let mut degenerate = 0;
    for pt in points.iter().filter(|p| in_main_triangle(p)) {
        let generic = !s(pt).is_zero() && !z(pt).is_zero();
        let outcome = passport6(pt).unwrap();
        assert_eq!(outcome.is_snake(), generic, "at {pt:?}: {outcome}");
        degenerate += usize::from(!generic);
    }
    assert!(degenerate > 0);
}

#[test]
fn s_vanishes_where_values_coincide() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let u = rat(rng.random_range(1..300), 100);
        let w = rat(rng.random_range(1..300), 100);
        if u == w {
            continue;
        }
        if let Some(pt) = equal_values_point(&u, &w) {
            let p = pt.polynomial();
            assert_eq!(p.eval(&-&u), p.eval(&-&w));
            assert!(s(&pt).is_zero(), "at {pt:?}");
        }
    }
    let pt = zero_value_point(&rat(3, 4), &rat(1, 2)).unwrap();
    assert!(z(&pt).is_zero());
    assert!(!invariants6(&pt).0.is_zero() || d(&pt).is_zero());
}

fn numbers(gamma: Rational, resolution: usize) -> (usize, Vec<usize>) {
    let scan = scan_section(&gamma, resolution).unwrap();
    assert!(scan.warnings.is_empty(), "{:?}", scan.warnings);
    for c in &scan.components {
        assert!(c.verified);
        for sample in &c.samples {
            assert!(in_main_triangle(sample));
            assert_eq!(passport6(sample).unwrap(), PassportOutcome::Snake(c.passport.clone()));
        }
    }
    (scan.components.len(), scan.signature().numbers)
}

#[test]
fn section_components_per_regime() {
    let cases: [(Rational, usize, &[usize]); 6] = [
        (rat(9, 10), 5, &[8, 10, 12, 14, 16]),
        (rat(7, 10), 7, &[3, 5, 8, 10, 12, 14, 16]),
        (rat(68, 100), 13, &[1, 2, 3, 3, 5, 6, 7, 8, 10, 11, 12, 14, 16]),
        (rat(6, 10), 12, &[1, 2, 3, 5, 6, 7, 8, 10, 11, 12, 14, 16]),
        (rat(55, 100), 14, &[1, 2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16]),
        (rat(1, 2), 14, &[1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 13, 14, 15, 16]),
    ];
    for (gamma, count, expected) in cases {
        let (n, nums) = numbers(gamma.clone(), 64);
        assert_eq!(n, count, "gamma {gamma}");
        assert_eq!(nums, expected, "gamma {gamma}");
    }
}

#[test]
fn passport_sets_and_their_union() {
    let top: BTreeSet<Vec<usize>> = passports_present(&rat(9, 10), 64)
        .unwrap()
        .iter()
        .map(|p| p.entries().to_vec())
        .collect();
    let expected: BTreeSet<Vec<usize>> =
        [[2, 5, 3, 4, 1], [2, 4, 3, 5, 1], [3, 4, 2, 5, 1], [3, 5, 2, 4, 1], [4, 5, 2, 3, 1]]
            .iter()
            .map(|p| p.to_vec())
            .collect();
    assert_eq!(top, expected);

    let mut all = BTreeSet::new();
    for (n, den) in [(9, 10), (7, 10), (68, 100), (6, 10), (55, 100), (1, 2)] {
        for p in passports_present(&rat(n, den), 64).unwrap() {
            all.insert(passport_number(&p).unwrap());
        }
    }
    assert_eq!(all.len(), order5_passports().len());
}

#[test]
fn signature_is_constant_between_thresholds() {
    let report = detect_bifurcations(&rat(1, 2), &int(1), &rat(1, 10_000), 64).unwrap();
    let cuts: Vec<f64> = report.thresholds.iter().map(|t| t.approx).collect();
    assert_eq!(cuts.len(), 5, "{report:?}");
    for (t, want) in report.thresholds.iter().zip([0.54613, 0.57613, 0.6718, 0.6912, 0.8192]) {
        assert!((t.approx - want).abs() < 1e-3, "{} vs {want}", t.approx);
    }
    let mut edges = vec![0.5];
    for t in &report.thresholds {
        edges.push(to_f64(&t.lower));
        edges.push(to_f64(&t.upper));
    }
    edges.push(1.0);
    // intervals strictly between consecutive enclosures
    for w in edges.chunks(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi - lo < 1e-3 {
            continue;
        }
        let sigs: BTreeSet<_> = (1..=3)
            .map(|k| {
                let g = lo + (hi - lo) * k as f64 / 4.0;
                let g = rat((g * 10_000.0).round() as i64, 10_000);
                scan_section(&g, 64).unwrap().signature()
            })
            .collect();
        assert_eq!(sigs.len(), 1, "signature varies in ({lo}, {hi})");
    }
}
