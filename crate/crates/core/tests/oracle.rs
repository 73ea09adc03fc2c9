mod common;

use std::collections::BTreeSet;

use bicurve::oracle::series::TruncatedSeries;
use bicurve::oracle::{oracle_value_set, OracleConfig, OracleMode};
use bicurve::BiAmalgSpec;
use common::*;

/// Every coefficient tuple over `F_p`, with no normalization or absorption:
/// `a` on all positions of `S_A` that reach the window, `j` and `j'` on every
/// value of their ideals inside it.
fn literal(spec: &BiAmalgSpec, prime: u32, truncation: usize, window: [i64; 2]) -> BTreeSet<[i64; 2]> {
    let sides = spec.sides();
    let degrees = [sides[0].degree(), sides[1].degree()];
    let domain = spec.domain();
    let a_pos: Vec<usize> = (0..=window[0].max(window[1]))
        .filter(|&u| domain.contains(u) && (0..2).any(|k| u * degrees[k] <= window[k]))
        .map(|u| u as usize)
        .collect();
    let ideal_pos: Vec<Vec<usize>> = (0..2)
        .map(|k| {
            let v = sides[k].ideal.value_set();
            (0..=window[k]).filter(|&e| v.contains(e)).map(|e| e as usize).collect()
        })
        .collect();
    let positions = a_pos.len() + ideal_pos[0].len() + ideal_pos[1].len();
    let total = (prime as u64).pow(positions as u32);

    let mut out = BTreeSet::new();
    for i in 0..total {
        let mut rest = i;
        let mut digits = |pos: &[usize]| -> Vec<(usize, i64)> {
            pos.iter()
                .map(|&e| {
                    let c = (rest % prime as u64) as i64;
                    rest /= prime as u64;
                    (e, c)
                })
                .collect()
        };
        let a = TruncatedSeries::from_terms(prime, truncation, &digits(&a_pos)).unwrap();
        let j = [digits(&ideal_pos[0]), digits(&ideal_pos[1])];
        let mut point = [0; 2];
        for k in 0..2 {
            let jk = TruncatedSeries::from_terms(prime, truncation, &j[k]).unwrap();
            let x = &a.substitute_power(degrees[k] as usize) + &jk;
            match x.order() {
                Some(o) if (o as i64) <= window[k] => point[k] = o as i64,
                _ => point[k] = -1,
            }
        }
        if point.iter().all(|&c| c >= 0) {
            out.insert(point);
        }
    }
    out
}

fn exhaustive(spec: &BiAmalgSpec, prime: u32, window: [i64; 2]) -> BTreeSet<[i64; 2]> {
    let config = OracleConfig {
        prime,
        truncation: 40,
        mode: OracleMode::Exhaustive { budget: 12 },
        window: Some(window),
    };
    let outcome = oracle_value_set(spec, &config).unwrap();
    assert!(outcome.saturation.complete);
    outcome.point_set()
}

#[test]
fn walk_matches_literal_enumeration() {
    let cases: [(BiAmalgSpec, [i64; 2]); 4] = [
        (bi_amalgamation_example(), [9, 10]),
        (amalgamation_example(), [4, 10]),
        (amalgamation_example(), [6, 8]),
        (duplication(&[3, 4], &[3]), [6, 6]),
    ];
    for (spec, window) in cases {
        assert_eq!(exhaustive(&spec, 3, window), literal(&spec, 3, 40, window), "window {window:?}");
    }
}

#[test]
fn literal_enumeration_over_f2() {
    let spec = amalgamation_example();
    assert_eq!(exhaustive(&spec, 2, [5, 13]), literal(&spec, 2, 40, [5, 13]));
}

#[test]
fn values_do_not_depend_on_the_prime() {
    for spec in [bi_amalgamation_example(), amalgamation_example(), bi_amalgamation_perturbed(), duplication(&[2, 5], &[4, 5])] {
        let window = bicurve::constructions::default_window(&spec);
        assert_eq!(exhaustive(&spec, 3, window), exhaustive(&spec, 5, window));
    }
}

#[test]
fn tie_point_appears_in_a_wider_window() {
    let config = OracleConfig { mode: OracleMode::Exhaustive { budget: 8 }, ..Default::default() };
    let outcome = oracle_value_set(&amalgamation_example(), &config).unwrap();
    let w = &outcome.points[&[5, 13]];
    assert_eq!(w.value, [5, 13]);
    assert!(!outcome.points.contains_key(&[5, 16]), "outside the default window");
    let wide = OracleConfig { window: Some([6, 17]), ..config };
    let outcome = oracle_value_set(&amalgamation_example(), &wide).unwrap();
    // (t^5, t^16) = (t^5, f(t^5) - t^15 + t^16) with t^15 and t^16 in J
    let w = &outcome.points[&[5, 16]];
    assert_eq!((w.j.as_slice(), w.jp.as_slice()), (&[(5, 1)][..], &[(16, 1)][..]));
}
