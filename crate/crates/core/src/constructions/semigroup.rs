//! Value semigroups of glued curves and the Gorenstein tests built on them.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{BiAmalgSpec, Mode};
use crate::error::{Error, Result};
use crate::goodsgp::GoodSemigroup;
use crate::lattice::BoxSet;

/// What to do when both coordinates of an element can cancel at once.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DoubleTiePolicy {
    /// Cancelling both leading terms moves `a`'s leading monomial into
    /// `J × J'`, giving another element of the ring; nothing new is added.
    #[default]
    Reduce,
    /// Refuse to build and report the tie positions below the window.
    Escalate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Upper corner of the scan box; `None` uses [`default_window`].
    pub window: Option<[i64; 2]>,
    /// Expand leading-term cancellations in one coordinate.
    pub single_ties: bool,
    pub double_ties: DoubleTiePolicy,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            window: None,
            single_ties: true,
            double_ties: DoubleTiePolicy::Reduce,
        }
    }
}

/// Every value produced on the window, capped at its corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub window: [i64; 2],
    pub points: BoxSet,
    /// Values of pure pairs `(f(a), g(a))`.
    pub diagonal: BTreeSet<[i64; 2]>,
    /// Leading orders `(x, y)` where both coordinates tie below the window.
    pub double_ties: Vec<[i64; 2]>,
}

impl Trace {
    pub fn contains(&self, p: [i64; 2]) -> bool {
        self.points.contains(&p)
    }

    pub fn point_set(&self) -> BTreeSet<[i64; 2]> {
        self.points.iter().map(|p| [p[0], p[1]]).collect()
    }
}

/// `(conductor of the first ideal, conductor of the second)`. For
/// amalgamation the first ideal is `I₀`, for duplication both are `I`.
pub fn default_window(spec: &BiAmalgSpec) -> [i64; 2] {
    let [s0, s1] = spec.sides();
    [s0.ideal.value_set().conductor(), s1.ideal.value_set().conductor()]
}

/// Orders available on one side: the shared element contributes `d·u`, the
/// ideal contributes `v(J)` unless the side carries no ideal.
struct Coordinate {
    degree: i64,
    /// `v(J) ∩ [0, w]` plus one member above `w`; empty when there is no ideal.
    ideal: Vec<i64>,
    /// Membership of `d·S_A ∪ v(J)` on `[0, w]`.
    branch: Vec<bool>,
    w: i64,
}

impl Coordinate {
    fn above(&self, v: i64) -> impl Iterator<Item = i64> + '_ {
        ((v + 1)..self.w)
            .filter(|&z| self.branch[z as usize])
            .chain(std::iter::once(self.w))
    }
}

fn coordinates(spec: &BiAmalgSpec, window: [i64; 2]) -> [Coordinate; 2] {
    let intrinsic = matches!(spec.mode(), Mode::Amalg | Mode::Duplication);
    let sa = spec.domain();
    let mut out = spec.sides().iter().enumerate().map(|(k, side)| {
        let w = window[k];
        let d = side.degree();
        let vj = side.ideal.value_set();
        let has_ideal = !(intrinsic && k == 0);
        let mut ideal: Vec<i64> = Vec::new();
        if has_ideal {
            ideal.extend(vj.elements_up_to(w));
            ideal.push((w + 1..).find(|&x| vj.contains(x)).expect("cofinite"));
        }
        let branch = (0..=w)
            .map(|z| (z % d == 0 && sa.contains(z / d)) || (has_ideal && vj.contains(z)))
            .collect();
        Coordinate { degree: d, ideal, branch, w }
    });
    [out.next().unwrap(), out.next().unwrap()]
}

/// Scans every combination of leading orders `u ∈ S_A ∪ {∞}`,
/// `x ∈ v(J) ∪ {∞}`, `y ∈ v(J') ∪ {∞}` and records the resulting values.
pub fn value_semigroup_trace(spec: &BiAmalgSpec, options: &BuildOptions) -> Result<Trace> {
    let window = options.window.unwrap_or_else(|| default_window(spec));
    if window.iter().any(|&w| w < 0) {
        return Err(Error::EmptyWindow);
    }
    let [c1, c2] = coordinates(spec, window);
    let sa = spec.domain();
    let cap = |p: [i64; 2]| [p[0].min(window[0]), p[1].min(window[1])];

    let u_max = (window[0] / c1.degree).max(window[1] / c2.degree) + 1;
    let mut us: Vec<Option<i64>> = sa.elements_up_to(u_max).map(Some).collect();
    us.push(Some((u_max + 1..).find(|&u| sa.contains(u)).expect("cofinite")));
    us.push(None);
    let xs: Vec<Option<i64>> = c1.ideal.iter().copied().map(Some).chain([None]).collect();
    let ys: Vec<Option<i64>> = c2.ideal.iter().copied().map(Some).chain([None]).collect();

    let mut points = BoxSet::empty(&window);
    let mut diagonal = BTreeSet::new();
    let mut double_ties = BTreeSet::new();
    let lead = |a: Option<i64>, b: Option<i64>| match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    };

    for &u in &us {
        let v1 = u.map(|u| c1.degree * u);
        let v2 = u.map(|u| c2.degree * u);
        for &x in &xs {
            let tie1 = v1.is_some() && v1 == x && x.is_some_and(|x| x < window[0]);
            for &y in &ys {
                let tie2 = v2.is_some() && v2 == y && y.is_some_and(|y| y < window[1]);
                let (Some(p1), Some(p2)) = (lead(v1, x), lead(v2, y)) else {
                    continue;
                };
                let p = cap([p1, p2]);
                points.insert(&p);
                if x.is_none() && y.is_none() {
                    diagonal.insert(p);
                }
                if !options.single_ties {
                    continue;
                }
                if tie1 {
                    for z in c1.above(p1) {
                        points.insert(&cap([z, p2]));
                    }
                }
                if tie2 {
                    for z in c2.above(p2) {
                        points.insert(&cap([p1, z]));
                    }
                }
                if tie1 && tie2 {
                    double_ties.insert([p1, p2]);
                }
            }
        }
    }

    let double_ties: Vec<[i64; 2]> = double_ties.into_iter().collect();
    if options.double_ties == DoubleTiePolicy::Escalate && !double_ties.is_empty() {
        return Err(Error::DoubleTieUnresolved(double_ties));
    }
    Ok(Trace { window, points, diagonal, double_ties })
}

/// The value semigroup of the glued curve, with `δ` minimized inside the
/// window.
pub fn value_semigroup(spec: &BiAmalgSpec, options: &BuildOptions) -> Result<GoodSemigroup> {
    let trace = value_semigroup_trace(spec, options)?;
    Ok(GoodSemigroup::from_window_trace(&trace.points))
}

/// Whether one ideal is a translate of the canonical ideal of its branch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealCheck {
    pub ideal: String,
    pub canonical: bool,
}

/// Both Gorenstein verdicts. They should always agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinVerdict {
    /// Every ideal in `checks` is canonical.
    pub by_canonical: bool,
    /// The value semigroup is symmetric.
    pub by_symmetry: bool,
    pub checks: Vec<IdealCheck>,
}

impl GorensteinVerdict {
    pub fn consistent(&self) -> bool {
        self.by_canonical == self.by_symmetry
    }
}

/// Canonical-ideal route: `J` in `f(A) + J` and `J'` in `g(A) + J'`. An
/// amalgamation is tested in its two-sided form, so `I₀` must also be
/// canonical in `A`; this is automatic when `A = k[[t]]`. Duplication needs
/// only `I` in `A`.
pub fn is_gorenstein(spec: &BiAmalgSpec, options: &BuildOptions) -> Result<GorensteinVerdict> {
    let names: &[&str] = match spec.mode() {
        Mode::BiAmalg => &["J", "Jp"],
        Mode::Amalg => &["I0", "J"],
        Mode::Duplication => &["I"],
    };
    let checks: Vec<IdealCheck> = names
        .iter()
        .zip(spec.sides())
        .map(|(name, side)| IdealCheck {
            ideal: name.to_string(),
            canonical: side.ideal_in_branch().is_canonical(),
        })
        .collect();
    let by_canonical = checks.iter().all(|c| c.canonical);
    let by_symmetry = value_semigroup(spec, options)?.is_symmetric();
    Ok(GorensteinVerdict { by_canonical, by_symmetry, checks })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologicalProfile {
    pub dim: u32,
    pub depth: u32,
    pub is_cohen_macaulay: bool,
    pub is_local: bool,
    pub branch_count: u32,
    pub splits: bool,
}

/// Dimension, depth and friends. Monomial maps are injective, so the glued
/// ring has the dimension of `A`, and it splits only when `I₀ = 0`.
pub fn homological_profile(spec: &BiAmalgSpec) -> HomologicalProfile {
    let local = spec.sides().iter().all(|s| s.ideal.in_jacobson_radical());
    HomologicalProfile {
        dim: 1,
        depth: 1,
        is_cohen_macaulay: true,
        is_local: local,
        branch_count: 2,
        splits: spec.gluing_ideal().generators().is_empty(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{MapKind, SpecData};

    fn bi_amalgamation_example(j: Vec<i64>) -> BiAmalgSpec {
        BiAmalgSpec::from_data(&SpecData {
            mode: Mode::BiAmalg,
            a: None,
            b: Some(vec![4, 7, 9]),
            c: Some(vec![5, 8, 11]),
            f: Some(MapKind::Power(7)),
            g: Some(MapKind::Power(11)),
            j: Some(j),
            jp: Some(vec![5, 8]),
        })
        .unwrap()
    }

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
    fn bi_amalgamation_conductor_and_symmetry() {
        let spec = bi_amalgamation_example(vec![4, 9]);
        assert_eq!(default_window(&spec), [15, 23]);
        let s = value_semigroup(&spec, &BuildOptions::default()).unwrap();
        assert_eq!(s.delta(), &[15, 23]);
        assert!(s.validate().is_empty());
        assert!(s.member(&[7, 11]).unwrap());
        assert!(!s.member(&[7, 30]).unwrap());
        let verdict = is_gorenstein(&spec, &BuildOptions::default()).unwrap();
        assert!(verdict.by_canonical && verdict.by_symmetry);
        assert_eq!(verdict.checks.len(), 2);
    }

    #[test]
    fn perturbed_example_is_not_gorenstein() {
        let spec = bi_amalgamation_example(vec![4]);
        let verdict = is_gorenstein(&spec, &BuildOptions::default()).unwrap();
        assert!(!verdict.by_canonical && !verdict.by_symmetry);
        assert_eq!(
            verdict.checks,
            vec![
                IdealCheck { ideal: "J".into(), canonical: false },
                IdealCheck { ideal: "Jp".into(), canonical: true }
            ]
        );
    }

    #[test]
    fn amalgamation_intrinsic_points() {
        let spec = amalgamation_example();
        let s = value_semigroup(&spec, &BuildOptions::default()).unwrap();
        assert_eq!(s.delta(), &[5, 13]);
        assert!(s.member(&[1, 3]).unwrap());
        assert!(s.member(&[5, 16]).unwrap());
        assert!(s.is_symmetric());

        let no_ties = BuildOptions { window: Some([6, 17]), single_ties: false, ..Default::default() };
        let trace = value_semigroup_trace(&spec, &no_ties).unwrap();
        assert!(!trace.contains([5, 16]));
        let with_ties = BuildOptions { single_ties: true, ..no_ties };
        assert!(value_semigroup_trace(&spec, &with_ties).unwrap().contains([5, 16]));
    }

    #[test]
    fn amalgamation_over_a_singular_domain_needs_a_canonical_gluing_ideal() {
        // A = <3,5,7> inside B = <2,3>, J = (t^2): J is canonical in
        // f(A) + J = B, but I0 is the maximal ideal of A, which is not
        let spec = BiAmalgSpec::from_data(&SpecData {
            mode: Mode::Amalg,
            a: Some(vec![3, 5, 7]),
            b: Some(vec![2, 3]),
            c: None,
            f: Some(MapKind::Inclusion),
            g: None,
            j: Some(vec![2]),
            jp: None,
        })
        .unwrap();
        let verdict = is_gorenstein(&spec, &BuildOptions::default()).unwrap();
        assert_eq!(
            verdict.checks,
            vec![
                IdealCheck { ideal: "I0".into(), canonical: false },
                IdealCheck { ideal: "J".into(), canonical: true }
            ]
        );
        assert!(!verdict.by_symmetry && verdict.consistent());
    }

    #[test]
    fn escalation_reports_double_ties_below_window() {
        let spec = bi_amalgamation_example(vec![4, 9]);
        let strict = BuildOptions { double_ties: DoubleTiePolicy::Escalate, ..Default::default() };
        // the first double tie (21, 33) lies above the default window
        assert!(value_semigroup(&spec, &strict).is_ok());
        let wide = BuildOptions { window: Some([40, 40]), ..strict };
        match value_semigroup(&spec, &wide) {
            Err(Error::DoubleTieUnresolved(points)) => assert_eq!(points[0], [21, 33]),
            other => panic!("expected escalation, got {other:?}"),
        }
    }

    #[test]
    fn profile_of_example() {
        let p = homological_profile(&bi_amalgamation_example(vec![4, 9]));
        assert_eq!(
            p,
            HomologicalProfile {
                dim: 1,
                depth: 1,
                is_cohen_macaulay: true,
                is_local: true,
                branch_count: 2,
                splits: false
            }
        );
    }
}
