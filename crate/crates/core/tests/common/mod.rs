#![allow(dead_code)]

use std::collections::BTreeSet;

use bicurve::constructions::{default_window, MapKind, SpecData};
use bicurve::{BiAmalgSpec, Mode};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn bi_amalgamation_with(j: &[i64]) -> SpecData {
    SpecData {
        mode: Mode::BiAmalg,
        a: None,
        b: Some(vec![4, 7, 9]),
        c: Some(vec![5, 8, 11]),
        f: Some(MapKind::Power(7)),
        g: Some(MapKind::Power(11)),
        j: Some(j.to_vec()),
        jp: Some(vec![5, 8]),
    }
}

pub fn bi_amalgamation_example() -> BiAmalgSpec {
    BiAmalgSpec::from_data(&bi_amalgamation_with(&[4, 9])).unwrap()
}

pub fn bi_amalgamation_perturbed() -> BiAmalgSpec {
    BiAmalgSpec::from_data(&bi_amalgamation_with(&[4])).unwrap()
}

pub fn amalgamation_example() -> BiAmalgSpec {
    BiAmalgSpec::from_data(&SpecData {
        mode: Mode::Amalg,
        a: None,
        b: Some(vec![3, 7, 8]),
        c: None,
        f: Some(MapKind::Power(3)),
        g: None,
        j: Some(vec![7, 8]),
        jp: None,
    })
    .unwrap()
}

pub fn duplication(a: &[i64], i: &[i64]) -> BiAmalgSpec {
    BiAmalgSpec::from_data(&SpecData {
        mode: Mode::Duplication,
        a: Some(a.to_vec()),
        b: None,
        c: None,
        f: None,
        g: None,
        j: Some(i.to_vec()),
        jp: None,
    })
    .unwrap()
}

/// Reference layout of the bi-amalgamation example on `[0,22] x [0,35]`.
pub fn bi_amalgamation_grid() -> (BTreeSet<[i64; 2]>, BTreeSet<[i64; 2]>) {
    let filled: BTreeSet<[i64; 2]> = [[0, 0], [7, 11], [14, 22], [21, 33]].into();
    let xs = [4, 8, 9, 11, 12, 13, 15, 16, 17, 18, 19, 20, 21, 22];
    let ys = [5, 8, 10, 13, 15, 16, 18, 19, 20, 21, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35];
    let mut circled = BTreeSet::new();
    for x in xs {
        for y in ys {
            circled.insert([x, y]);
        }
    }
    circled.remove(&[21, 33]);
    for y in [5, 8, 10] {
        circled.insert([7, y]);
    }
    for y in [5, 8, 10, 13, 15, 16, 18, 19, 20, 21] {
        circled.insert([14, y]);
    }
    circled.insert([4, 11]);
    for x in [4, 8, 9, 11, 12, 13] {
        circled.insert([x, 22]);
    }
    (filled, circled)
}

/// Reference layout of the amalgamation example, first axis scaled by 3, on `[0,23]^2`.
pub fn amalgamation_grid() -> (BTreeSet<[i64; 2]>, BTreeSet<[i64; 2]>) {
    let filled: BTreeSet<[i64; 2]> = (0..8).map(|u| [3 * u, 3 * u]).collect();
    let mut circled = BTreeSet::new();
    for y in [7, 8, 10, 11] {
        circled.insert([12, y]);
    }
    for x in [15, 18, 21] {
        for y in [7, 8, 10, 11].into_iter().chain(13..=23) {
            if x != y {
                circled.insert([x, y]);
            }
        }
    }
    (filled, circled)
}

fn gens(rng: &mut ChaCha8Rng) -> Vec<i64> {
    (0..rng.gen_range(1..4)).map(|_| rng.gen_range(2..=12)).collect()
}

fn ideal(rng: &mut ChaCha8Rng) -> Vec<i64> {
    (0..rng.gen_range(1..3)).map(|_| rng.gen_range(1..=12)).collect()
}

/// Spec data in every mode, with power maps and inclusions, all exponents
/// at most 12. Many draws do not validate.
pub fn random_data(rng: &mut ChaCha8Rng) -> SpecData {
    let mode = [Mode::BiAmalg, Mode::Amalg, Mode::Duplication][rng.gen_range(0..3)];
    let inclusion = rng.gen_bool(0.4);
    let (b, c) = (gens(rng), gens(rng));
    let extend = |a: &[i64], x: &[i64]| -> Vec<i64> { a.iter().chain(x).copied().collect() };
    match mode {
        Mode::BiAmalg if inclusion => {
            let a = gens(rng);
            SpecData {
                mode,
                b: Some(extend(&a, &b)),
                c: Some(extend(&a, &c)),
                a: Some(a),
                f: Some(MapKind::Inclusion),
                g: Some(MapKind::Inclusion),
                j: Some(ideal(rng)),
                jp: Some(ideal(rng)),
            }
        }
        Mode::BiAmalg => SpecData {
            mode,
            a: None,
            b: Some(b),
            c: Some(c),
            f: Some(MapKind::Power(rng.gen_range(1..=12))),
            g: Some(MapKind::Power(rng.gen_range(1..=12))),
            j: Some(ideal(rng)),
            jp: Some(ideal(rng)),
        },
        Mode::Amalg if inclusion => {
            let a = gens(rng);
            SpecData {
                mode,
                b: Some(extend(&a, &b)),
                a: Some(a),
                c: None,
                f: Some(MapKind::Inclusion),
                g: None,
                j: Some(ideal(rng)),
                jp: None,
            }
        }
        Mode::Amalg => SpecData {
            mode,
            a: None,
            b: Some(b),
            c: None,
            f: Some(MapKind::Power(rng.gen_range(1..=12))),
            g: None,
            j: Some(ideal(rng)),
            jp: None,
        },
        Mode::Duplication => SpecData {
            mode,
            a: Some(if inclusion { vec![1] } else { b }),
            b: None,
            c: None,
            f: None,
            g: None,
            j: Some(ideal(rng)),
            jp: None,
        },
    }
}

/// The next valid spec whose default window fits in `[0, max_window]^2`.
pub fn random_spec(rng: &mut ChaCha8Rng, max_window: i64) -> (SpecData, BiAmalgSpec) {
    loop {
        let data = random_data(rng);
        if let Ok(spec) = BiAmalgSpec::from_data(&data) {
            if default_window(&spec).iter().all(|&w| w <= max_window) {
                return (data, spec);
            }
        }
    }
}

/// Valid specs with small conductors, drawn from a proptest seed.
pub fn specs(max_window: i64) -> impl Strategy<Value = (SpecData, BiAmalgSpec)> {
    any::<u64>().prop_map(move |seed| random_spec(&mut ChaCha8Rng::seed_from_u64(seed), max_window))
}
