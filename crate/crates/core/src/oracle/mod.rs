//! Brute-force value sets from explicit power series.
//!
//! Elements `(f(a) + j, g(a) + j')` are built over `F_p` modulo `t^N` and
//! their orders read off directly. The shared element `a` is enumerated
//! coefficient by coefficient on the positions of `S_A` outside `v(I₀)`; a
//! monomial of `a` inside `I₀` maps into `J × J'` and is absorbed there. The
//! ideal parts are handled exactly: `J` is the space of series supported on
//! `v(J)`, so for fixed `a` the reachable orders of `f(a) + j` are found by a
//! single pass over the exponents.

pub mod series;

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{default_window, BiAmalgSpec};
use crate::error::{Error, Result};
use crate::goodsgp::GoodSemigroup;
use crate::numsgp::RelativeIdeal;
use series::TruncatedSeries;

/// Above this many enumerated tuples exhaustive mode gives up.
pub const MAX_TUPLES: u64 = 50_000_000;

pub const CAVEAT: &str = "values computed over a finite prime field at finite truncation; \
attainment over an algebraically closed field is assumed, not proved";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum OracleMode {
    /// All coefficient tuples of `a` on its first `budget` free positions.
    Exhaustive { budget: usize },
    /// Random coefficients of `a` on every free position.
    Random { trials: u64, seed: u64, partitions: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub prime: u32,
    pub truncation: usize,
    pub mode: OracleMode,
    /// Upper corner of the box of recorded values; `None` uses the default
    /// construction window.
    pub window: Option<[i64; 2]>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            prime: 3,
            truncation: 40,
            mode: OracleMode::Exhaustive { budget: 8 },
            window: None,
        }
    }
}

/// A concrete element `(f(a) + j, g(a) + j')` as `(exponent, coefficient)`
/// lists, with its value vector recomputed from the series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub a: Vec<(usize, u32)>,
    pub j: Vec<(usize, u32)>,
    pub jp: Vec<(usize, u32)>,
    pub value: [i64; 2],
}

/// Point counts after successive enlargements of the search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Saturation {
    /// Search sizes: budgets in exhaustive mode, trial counts in random mode.
    pub steps: Vec<u64>,
    pub counts: Vec<usize>,
    /// The last two enlargements added nothing.
    pub saturated: bool,
    /// Every free position of `a` was enumerated, so the set is exact up to
    /// the field caveat.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub window: [i64; 2],
    pub points: BTreeMap<[i64; 2], Witness>,
    pub saturation: Saturation,
    pub caveat: String,
}

impl OracleOutcome {
    pub fn point_set(&self) -> BTreeSet<[i64; 2]> {
        self.points.keys().copied().collect()
    }
}

struct Setup {
    prime: u32,
    truncation: usize,
    window: [i64; 2],
    degrees: [usize; 2],
    ideals: [RelativeIdeal; 2],
    /// Positions of `a` that are not absorbed by the ideals.
    free: Vec<usize>,
}

impl Setup {
    fn new(spec: &BiAmalgSpec, config: &OracleConfig) -> Result<Self> {
        let window = config.window.unwrap_or_else(|| default_window(spec));
        if window.iter().any(|&w| w < 0) {
            return Err(Error::EmptyWindow);
        }
        let sides = spec.sides();
        let domain = spec.domain();
        let mut largest = domain.generators().iter().copied().max().unwrap_or(1);
        for side in sides {
            largest = largest
                .max(side.degree())
                .max(side.map.codomain().semigroup().generators().iter().copied().max().unwrap_or(1))
                .max(side.ideal.generators().iter().copied().max().unwrap_or(0));
        }
        let required = (window[0].max(window[1]) + largest + 1) as usize;
        if config.truncation < required {
            return Err(Error::TruncationTooSmall { truncation: config.truncation, required });
        }
        TruncatedSeries::zero(config.prime, 1)?;

        let degrees = [sides[0].degree() as usize, sides[1].degree() as usize];
        let gluing = spec.gluing_ideal().value_set();
        let free = (0..config.truncation)
            .filter(|&u| {
                let u = u as i64;
                domain.contains(u)
                    && !gluing.contains(u)
                    && (u * degrees[0] as i64 <= window[0] || u * degrees[1] as i64 <= window[1])
            })
            .collect();
        Ok(Setup {
            prime: config.prime,
            truncation: config.truncation,
            window,
            degrees,
            ideals: [sides[0].ideal.value_set().clone(), sides[1].ideal.value_set().clone()],
            free,
        })
    }

    fn series(&self, terms: &[(usize, u32)]) -> TruncatedSeries {
        let terms: Vec<(usize, i64)> = terms.iter().map(|&(e, c)| (e, c as i64)).collect();
        TruncatedSeries::from_terms(self.prime, self.truncation, &terms).expect("prime checked")
    }

    /// Every order of `image + j` reachable within the window, with a `j`
    /// realizing it.
    fn walk(&self, image: &TruncatedSeries, side: usize) -> Vec<(i64, Vec<(usize, u32)>)> {
        let ideal = &self.ideals[side];
        let p = self.prime;
        let mut out = Vec::new();
        let mut cancel: Vec<(usize, u32)> = Vec::new();
        for e in 0..=self.window[side] {
            let c = image.coeff(e as usize);
            if ideal.contains(e) {
                let mut j = cancel.clone();
                if c == 0 {
                    j.push((e as usize, 1));
                }
                out.push((e, j));
                if c != 0 {
                    cancel.push((e as usize, p - c));
                }
            } else if c != 0 {
                out.push((e, cancel));
                return out;
            }
        }
        out
    }

    /// Values of all elements with this `a`, keyed by point.
    fn values_for(&self, a: Vec<(usize, u32)>, key: u64, acc: &mut BTreeMap<[i64; 2], (u64, Witness)>) {
        let base = self.series(&a);
        let first = self.walk(&base.substitute_power(self.degrees[0]), 0);
        let second = self.walk(&base.substitute_power(self.degrees[1]), 1);
        for (x, j) in &first {
            for (y, jp) in &second {
                let point = [*x, *y];
                if acc.get(&point).is_some_and(|(k, _)| *k <= key) {
                    continue;
                }
                let witness = Witness { a: a.clone(), j: j.clone(), jp: jp.clone(), value: point };
                acc.insert(point, (key, witness));
            }
        }
    }

    fn recompute(&self, w: &Witness) -> [i64; 2] {
        let a = self.series(&w.a);
        let parts = [&w.j, &w.jp];
        let mut value = [-1; 2];
        for k in 0..2 {
            let element = &a.substitute_power(self.degrees[k]) + &self.series(parts[k]);
            value[k] = element.order().map_or(-1, |o| o as i64);
        }
        value
    }
}

fn merge(
    mut a: BTreeMap<[i64; 2], (u64, Witness)>,
    b: BTreeMap<[i64; 2], (u64, Witness)>,
) -> BTreeMap<[i64; 2], (u64, Witness)> {
    for (point, entry) in b {
        match a.get(&point) {
            Some((k, _)) if *k <= entry.0 => {}
            _ => {
                a.insert(point, entry);
            }
        }
    }
    a
}

/// Decodes enumeration index `i` into coefficients on the free positions;
/// `None` when the leading coefficient is not 1.
fn decode(i: u64, free: &[usize], p: u32) -> Option<Vec<(usize, u32)>> {
    let mut terms = Vec::new();
    let mut rest = i;
    for &u in free {
        let c = (rest % p as u64) as u32;
        rest /= p as u64;
        if c != 0 {
            terms.push((u, c));
        }
    }
    match terms.first() {
        Some(&(_, c)) if c != 1 => None,
        _ => Some(terms),
    }
}

fn counts_at(found: &BTreeMap<[i64; 2], (u64, Witness)>, limits: &[u64]) -> Vec<usize> {
    limits
        .iter()
        .map(|&l| found.values().filter(|(k, _)| *k < l).count())
        .collect()
}

/// Value vectors of elements of the glued ring that lie in the window.
pub fn oracle_value_set(spec: &BiAmalgSpec, config: &OracleConfig) -> Result<OracleOutcome> {
    let setup = Setup::new(spec, config)?;
    let p = setup.prime as u64;
    let (found, saturation) = match config.mode {
        OracleMode::Exhaustive { budget } => {
            let used = budget.min(setup.free.len());
            let total = p
                .checked_pow(used as u32)
                .filter(|&t| t <= MAX_TUPLES)
                .ok_or(Error::BudgetExhausted { needed: setup.free.len(), budget })?;
            let positions = &setup.free[..used];
            let found = (0..total)
                .into_par_iter()
                .fold(BTreeMap::new, |mut acc, i| {
                    if let Some(a) = decode(i, positions, setup.prime) {
                        setup.values_for(a, i, &mut acc);
                    }
                    acc
                })
                .reduce(BTreeMap::new, merge);
            let steps: Vec<u64> = [budget.saturating_sub(2), budget.saturating_sub(1), budget]
                .iter()
                .map(|&b| b as u64)
                .collect();
            let limits: Vec<u64> = steps.iter().map(|&b| p.pow(b.min(used as u64) as u32)).collect();
            let counts = counts_at(&found, &limits);
            let saturation = Saturation {
                saturated: counts.windows(2).all(|w| w[0] == w[1]),
                complete: used == setup.free.len(),
                steps,
                counts,
            };
            (found, saturation)
        }
        OracleMode::Random { trials, seed, partitions } => {
            let partitions = partitions.max(1);
            let found = (0..partitions)
                .into_par_iter()
                .map(|part| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(part);
                    let mut acc = BTreeMap::new();
                    let mut trial = 0;
                    while trial * partitions + part < trials {
                        let mut a: Vec<(usize, u32)> = setup
                            .free
                            .iter()
                            .map(|&u| (u, rng.gen_range(0..setup.prime)))
                            .filter(|&(_, c)| c != 0)
                            .collect();
                        if let Some(&(_, lead)) = a.first() {
                            let inv = (1..setup.prime).find(|x| x * lead % setup.prime == 1).unwrap();
                            for t in &mut a {
                                t.1 = t.1 * inv % setup.prime;
                            }
                        }
                        setup.values_for(a, trial * partitions + part, &mut acc);
                        trial += 1;
                    }
                    acc
                })
                .reduce(BTreeMap::new, merge);
            let steps = vec![trials / 3, 2 * trials / 3, trials];
            let counts = counts_at(&found, &steps);
            let saturation = Saturation {
                saturated: counts.windows(2).all(|w| w[0] == w[1]),
                complete: false,
                steps,
                counts,
            };
            (found, saturation)
        }
    };
    let points = found
        .into_iter()
        .map(|(point, (_, mut w))| {
            w.value = setup.recompute(&w);
            (point, w)
        })
        .collect();
    Ok(OracleOutcome {
        window: setup.window,
        points,
        saturation,
        caveat: CAVEAT.into(),
    })
}

/// Disagreements between a fast computation and the oracle on a window.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    /// In the fast set but never produced by the oracle.
    pub soundness: Vec<[i64; 2]>,
    /// Produced by the oracle but missing from the fast set.
    pub completeness: Vec<[i64; 2]>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.soundness.is_empty() && self.completeness.is_empty()
    }
}

/// Compares two point sets on `[0, window]`.
pub fn compare_points(
    fast: &BTreeSet<[i64; 2]>,
    oracle: &BTreeSet<[i64; 2]>,
    window: [i64; 2],
) -> Comparison {
    let inside = |p: &&[i64; 2]| p[0] <= window[0] && p[1] <= window[1];
    Comparison {
        soundness: fast.iter().filter(inside).filter(|p| !oracle.contains(*p)).copied().collect(),
        completeness: oracle.iter().filter(inside).filter(|p| !fast.contains(*p)).copied().collect(),
    }
}

/// Compares a good semigroup with oracle points on `[0, window]`.
pub fn oracle_compare(fast: &GoodSemigroup, oracle: &BTreeSet<[i64; 2]>, window: [i64; 2]) -> Comparison {
    let members = fast
        .elements_in_box(&window)
        .into_iter()
        .map(|p| [p[0], p[1]])
        .collect();
    compare_points(&members, oracle, window)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{MapKind, Mode, SpecData};

    fn amalgamation_example() -> BiAmalgSpec {
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

    #[test]
    fn walk_cancels_inside_the_ideal_only() {
        let spec = amalgamation_example();
        let setup = Setup::new(&spec, &OracleConfig { window: Some([6, 17]), ..Default::default() }).unwrap();
        // f(t^5) = t^15 in the second coordinate, v(J) = {7,8,10,11,13,...}
        let image = setup.series(&[(15, 1)]);
        let orders: Vec<i64> = setup.walk(&image, 1).into_iter().map(|(o, _)| o).collect();
        assert_eq!(orders, vec![7, 8, 10, 11, 13, 14, 15, 16, 17]);
        let image = setup.series(&[(9, 1)]);
        let orders: Vec<i64> = setup.walk(&image, 1).into_iter().map(|(o, _)| o).collect();
        assert_eq!(orders, vec![7, 8, 9]);
    }

    #[test]
    fn witnesses_recompute_to_their_points() {
        let config = OracleConfig { window: Some([6, 17]), ..Default::default() };
        let out = oracle_value_set(&amalgamation_example(), &config).unwrap();
        assert!(out.points.contains_key(&[5, 16]));
        assert!(out.points.contains_key(&[0, 0]));
        for (point, w) in &out.points {
            assert_eq!(&w.value, point);
        }
        assert!(out.saturation.complete && out.saturation.saturated);
    }

    #[test]
    fn guards() {
        let spec = amalgamation_example();
        let small = OracleConfig { truncation: 10, ..Default::default() };
        assert!(matches!(oracle_value_set(&spec, &small), Err(Error::TruncationTooSmall { .. })));
        let prime = OracleConfig { prime: 9, ..Default::default() };
        assert_eq!(oracle_value_set(&spec, &prime), Err(Error::BadPrime(9)));
        let dup = BiAmalgSpec::from_data(&SpecData {
            mode: Mode::Duplication,
            a: Some(vec![1]),
            b: None,
            c: None,
            f: None,
            g: None,
            j: Some(vec![30]),
            jp: None,
        })
        .unwrap();
        let wide = OracleConfig { truncation: 64, mode: OracleMode::Exhaustive { budget: 40 }, ..Default::default() };
        assert!(matches!(oracle_value_set(&dup, &wide), Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn random_mode_is_deterministic_and_grows() {
        let spec = amalgamation_example();
        let run = |trials| {
            let config = OracleConfig {
                mode: OracleMode::Random { trials, seed: 7, partitions: 4 },
                ..Default::default()
            };
            oracle_value_set(&spec, &config).unwrap().point_set()
        };
        let small = run(20);
        assert_eq!(small, run(20));
        let large = run(200);
        assert!(small.is_subset(&large));
    }
}
