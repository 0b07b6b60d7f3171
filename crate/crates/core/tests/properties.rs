use morse_core::morse::{from_critical_points, passport, CriticalPointSpec, PassportOutcome};
use morse_core::polycore::{int, isolate_real_roots, rat, resultant, Polynomial, Rational};
use morse_core::snakes::{enumerate, is_pap, Passport};
use num_traits::Zero;
use proptest::prelude::*;

fn det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut d = int(1);
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else { return int(0) };
        if piv != k {
            a.swap(piv, k);
            d = -d;
        }
        d *= &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

fn sylvester_resultant(p: &Polynomial, q: &Polynomial) -> Rational {
    let (pc, qc) = (p.coeffs(), q.coeffs());
    let (m, n) = (pc.len() - 1, qc.len() - 1);
    let mut rows = Vec::new();
    for (shifts, cs) in [(n, pc), (m, qc)] {
        for i in 0..shifts {
            let mut r = vec![int(0); m + n];
            for (j, c) in cs.iter().rev().enumerate() {
                r[i + j] = c.clone();
            }
            rows.push(r);
        }
    }
    det(rows)
}

fn poly(coeffs: Vec<i64>) -> Polynomial {
    Polynomial::new(coeffs.into_iter().map(int).collect())
}

fn nonzero_leading() -> impl Strategy<Value = Vec<i64>> {
    (prop::collection::vec(-9i64..=9, 1..5), 1i64..=9).prop_map(|(mut v, lead)| {
        v.push(lead);
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_equals_sylvester_determinant(p in nonzero_leading(), q in nonzero_leading()) {
        let (p, q) = (poly(p), poly(q));
        prop_assert_eq!(resultant(&p, &q).unwrap(), sylvester_resultant(&p, &q));
    }

    #[test]
    fn isolated_roots_bracket_the_known_roots(mut nums in prop::collection::btree_set(-40i64..40, 1..6)) {
        let roots: Vec<Rational> = std::mem::take(&mut nums).into_iter().map(|k| rat(k, 7)).collect();
        let iso = isolate_real_roots(&Polynomial::from_roots(&roots)).unwrap();
        prop_assert_eq!(iso.len(), roots.len());
        for (r, x) in iso.iter().zip(&roots) {
            prop_assert!(r.lower <= *x && *x <= r.upper);
        }
    }

    #[test]
    fn extend_then_delete_first_is_identity(n in 1usize..7, pick in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let all = enumerate(n).unwrap();
        let p = &all[pick.index(all.len())];
        let range: Vec<usize> = p.extension_range().collect();
        let q = p.extend(range[k.index(range.len())]).unwrap();
        let as_i64: Vec<i64> = q.entries().iter().map(|&x| x as i64).collect();
        prop_assert!(is_pap(&as_i64));
        prop_assert_eq!(&q.delete_first().unwrap(), p);
    }

    #[test]
    fn passports_of_critical_point_polynomials(gaps in prop::collection::vec(1i64..40, 1..6)) {
        let mut xs = vec![int(0)];
        for gap in gaps {
            let next = xs.last().unwrap() + rat(gap, 8);
            xs.push(next);
        }
        let p = from_critical_points(&CriticalPointSpec::new(xs.clone()).unwrap());
        // ranking by exact values at the known critical points
        let values: Vec<Rational> = xs.iter().map(|x| p.eval(x)).collect();
        let mut sorted = values.clone();
        sorted.sort();
        sorted.dedup();
        let ranks: Vec<usize> = values.iter().map(|v| sorted.binary_search(v).unwrap() + 1).collect();
        match passport(&p, &rat(1, 1_000_000_000_000)).unwrap() {
            PassportOutcome::Snake(s) => {
                prop_assert_eq!(sorted.len(), xs.len());
                prop_assert_eq!(s, Passport::new(ranks).unwrap());
            }
            PassportOutcome::Degenerate(r) => {
                prop_assert!(sorted.len() < xs.len());
                prop_assert_eq!(r, ranks);
            }
            other => prop_assert!(false, "{}", other),
        }
    }
}
