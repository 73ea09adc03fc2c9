//! Good semigroups of `N^h`: value semigroups of curves with `h` branches.
//!
//! A good semigroup is determined by its conductor `δ` and the finite set of
//! its elements in the box `[0, δ]`: a vector `α ∈ N^h` is a member exactly
//! when `α ∧ δ` (componentwise minimum) is. Every operation here works on
//! that finite encoding.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{box_points, meet, BoxSet};
use crate::numsgp::NumericalSemigroup;

/// A subset of `N^h` that is determined by its trace on `[0, delta]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CappedSet {
    delta: Vec<i64>,
    small: BoxSet,
}

impl CappedSet {
    fn from_points(delta: Vec<i64>, points: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let mut small = BoxSet::empty(&delta);
        for p in points {
            small.insert(&meet(&p, &delta));
        }
        CappedSet { delta, small }
    }

    fn check_dim(&self, alpha: &[i64]) -> Result<()> {
        if alpha.len() != self.delta.len() {
            return Err(Error::DimensionMismatch {
                expected: self.delta.len(),
                got: alpha.len(),
            });
        }
        Ok(())
    }

    fn member(&self, alpha: &[i64]) -> bool {
        alpha.iter().all(|&a| a >= 0) && self.small.contains(&meet(alpha, &self.delta))
    }
}

/// A good semigroup `S ⊆ N^h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoodSemigroup {
    set: CappedSet,
}

/// Outcome of a bounded search for an element of `Δ_i(α)` or `Δ(α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSearch {
    pub nonempty: bool,
    pub witness: Option<Vec<i64>>,
}

/// A failed axiom, with the elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    MissingZero,
    MissingConductor { delta: Vec<i64> },
    /// G1: `a ∧ b` is not a member.
    MinClosure { a: Vec<i64>, b: Vec<i64>, meet: Vec<i64> },
    /// G2: no patching element exists for the pair at `coordinate`.
    Patching { a: Vec<i64>, b: Vec<i64>, coordinate: usize },
    /// `delta + N^h` is not contained in the set.
    ConductorNotInOrthant { delta: Vec<i64> },
    /// A smaller vector also has its whole upper orthant inside the set.
    ConductorNotMinimal { stored: Vec<i64>, minimal: Vec<i64> },
}

/// Values `> v` at one coordinate, up to capping at `d`. The paired value is
/// a concrete representative of each candidate.
fn strictly_above(v: i64, d: i64) -> (i64, i64) {
    if v < d {
        ((v + 1).max(0), d)
    } else {
        (d, d)
    }
}

fn representative(v: i64, candidate: i64, d: i64) -> i64 {
    if v < d {
        candidate
    } else {
        v + 1
    }
}

impl GoodSemigroup {
    /// Wraps a conductor and a set of points without checking any axiom;
    /// points are capped at `delta`. Use [`GoodSemigroup::validate`] to audit.
    pub fn from_parts(delta: Vec<i64>, points: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        let h = delta.len();
        let points: Vec<Vec<i64>> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.len() != h) {
            return Err(Error::DimensionMismatch { expected: h, got: p.len() });
        }
        Ok(GoodSemigroup {
            set: CappedSet::from_points(delta, points),
        })
    }

    /// Builds the semigroup from its trace on a window `[0, window]` that is
    /// already known to satisfy `window + N^h ⊆ S`. The conductor is the
    /// least corner whose orthant stays inside the trace.
    pub fn from_window_trace(trace: &BoxSet) -> Self {
        let delta = trace
            .upper_orthant_corner()
            .unwrap_or_else(|| trace.hi().to_vec());
        GoodSemigroup {
            set: CappedSet::from_points(delta, trace.iter()),
        }
    }

    /// The `h = 1` good semigroup of a numerical semigroup.
    pub fn from_numerical(s: &NumericalSemigroup) -> Self {
        let c = s.conductor();
        GoodSemigroup {
            set: CappedSet::from_points(vec![c], s.elements_up_to(c).map(|x| vec![x])),
        }
    }

    /// `S_1 × ... × S_h`.
    pub fn product(factors: &[NumericalSemigroup]) -> Self {
        let delta: Vec<i64> = factors.iter().map(|s| s.conductor()).collect();
        let points = box_points(&vec![0; delta.len()], &delta)
            .filter(|p| p.iter().zip(factors).all(|(&x, s)| s.contains(x)));
        GoodSemigroup {
            set: CappedSet::from_points(delta.clone(), points),
        }
    }

    pub fn dim(&self) -> usize {
        self.set.delta.len()
    }

    /// Conductor `δ`.
    pub fn delta(&self) -> &[i64] {
        &self.set.delta
    }

    /// `γ = δ − (1, …, 1)`.
    pub fn gamma(&self) -> Vec<i64> {
        self.set.delta.iter().map(|d| d - 1).collect()
    }

    /// Elements in the box `[0, δ]`.
    pub fn small_elements(&self) -> Vec<Vec<i64>> {
        self.set.small.iter().collect()
    }

    pub fn member(&self, alpha: &[i64]) -> Result<bool> {
        self.set.check_dim(alpha)?;
        Ok(self.set.member(alpha))
    }

    /// Members of `[0, hi]`, lexicographic.
    pub fn elements_in_box(&self, hi: &[i64]) -> Vec<Vec<i64>> {
        box_points(&vec![0; hi.len()], hi)
            .filter(|p| self.set.member(p))
            .collect()
    }

    /// Decides whether `Δ_i(α)` (or `Δ(α)` for `coordinate = None`) is empty.
    pub fn delta_set(&self, alpha: &[i64], coordinate: Option<usize>) -> Result<DeltaSearch> {
        self.set.check_dim(alpha)?;
        let coords: Vec<usize> = match coordinate {
            Some(i) if i >= self.dim() => {
                return Err(Error::DimensionMismatch { expected: self.dim(), got: i + 1 })
            }
            Some(i) => vec![i],
            None => (0..self.dim()).collect(),
        };
        for i in coords {
            if let Some(w) = self.delta_witness(alpha, i) {
                return Ok(DeltaSearch { nonempty: true, witness: Some(w) });
            }
        }
        Ok(DeltaSearch { nonempty: false, witness: None })
    }

    fn delta_witness(&self, alpha: &[i64], i: usize) -> Option<Vec<i64>> {
        let delta = &self.set.delta;
        if alpha[i] < 0 {
            return None;
        }
        let (lo, hi): (Vec<i64>, Vec<i64>) = (0..self.dim())
            .map(|j| {
                if j == i {
                    let c = alpha[i].min(delta[i]);
                    (c, c)
                } else {
                    strictly_above(alpha[j], delta[j])
                }
            })
            .unzip();
        box_points(&lo, &hi)
            .find(|p| self.set.small.contains(p))
            .map(|p| {
                (0..self.dim())
                    .map(|j| {
                        if j == i {
                            alpha[i]
                        } else {
                            representative(alpha[j], p[j], delta[j])
                        }
                    })
                    .collect()
            })
    }

    fn delta_is_empty(&self, alpha: &[i64]) -> bool {
        (0..self.dim()).all(|i| self.delta_witness(alpha, i).is_none())
    }

    /// `α ∈ S ⟺ Δ(γ − α) = ∅`, checked on the box `[0, δ + 1]`.
    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_in_box(1)
    }

    /// The symmetry scan on `[0, δ + extra]`.
    pub fn is_symmetric_in_box(&self, extra: i64) -> bool {
        let gamma = self.gamma();
        let hi: Vec<i64> = self.set.delta.iter().map(|d| d + extra).collect();
        box_points(&vec![0; self.dim()], &hi).all(|alpha| {
            let mirror: Vec<i64> = gamma.iter().zip(&alpha).map(|(g, a)| g - a).collect();
            self.set.member(&alpha) == self.delta_is_empty(&mirror)
        })
    }

    /// `K = {α : Δ(γ − α) = ∅}`.
    pub fn canonical_ideal(&self) -> GoodRelativeIdeal {
        let gamma = self.gamma();
        let delta = &self.set.delta;
        let mut trace = BoxSet::empty(delta);
        for alpha in box_points(&vec![0; self.dim()], delta) {
            let mirror: Vec<i64> = gamma.iter().zip(&alpha).map(|(g, a)| g - a).collect();
            if self.delta_is_empty(&mirror) {
                trace.insert(&alpha);
            }
        }
        let own = trace.upper_orthant_corner().unwrap_or_else(|| delta.clone());
        GoodRelativeIdeal {
            set: CappedSet::from_points(own, trace.iter()),
            base: self.clone(),
        }
    }

    /// Audits the good-semigroup axioms and conductor minimality.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let delta = &self.set.delta;
        let h = self.dim();
        if !self.set.small.contains(&vec![0; h]) {
            out.push(Violation::MissingZero);
        }
        if !self.set.small.contains(delta) {
            out.push(Violation::MissingConductor { delta: delta.clone() });
        }
        let small = self.small_elements();
        for (ia, a) in small.iter().enumerate() {
            for b in &small[ia + 1..] {
                let m = meet(a, b);
                if !self.set.small.contains(&m) {
                    out.push(Violation::MinClosure { a: a.clone(), b: b.clone(), meet: m });
                }
                for i in (0..h).filter(|&i| a[i] == b[i]) {
                    if !self.has_patch(a, b, i) {
                        out.push(Violation::Patching { a: a.clone(), b: b.clone(), coordinate: i });
                    }
                }
            }
        }
        match self.set.small.upper_orthant_corner() {
            Some(c) if &c == delta => {}
            Some(c) if self.set.small.contains(delta) && c.iter().zip(delta).all(|(x, d)| x <= d) => {
                out.push(Violation::ConductorNotMinimal { stored: delta.clone(), minimal: c });
            }
            _ => out.push(Violation::ConductorNotInOrthant { delta: delta.clone() }),
        }
        out
    }

    /// G2 for the pair `(a, b)` agreeing at coordinate `i`.
    fn has_patch(&self, a: &[i64], b: &[i64], i: usize) -> bool {
        let delta = &self.set.delta;
        let (lo, hi): (Vec<i64>, Vec<i64>) = (0..self.dim())
            .map(|j| {
                if j == i {
                    strictly_above(a[i], delta[i])
                } else if a[j] != b[j] {
                    let m = a[j].min(b[j]);
                    (m, m)
                } else {
                    (a[j], delta[j])
                }
            })
            .unzip();
        box_points(&lo, &hi).any(|p| self.set.small.contains(&p))
    }

    /// Whether two semigroups agree on every point of `[0, hi]`.
    pub fn agrees_on_box(&self, other: &GoodSemigroup, hi: &[i64]) -> bool {
        box_points(&vec![0; hi.len()], hi).all(|p| self.set.member(&p) == other.set.member(&p))
    }
}

/// A relative ideal of a good semigroup, stored like the semigroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodRelativeIdeal {
    set: CappedSet,
    base: GoodSemigroup,
}

impl GoodRelativeIdeal {
    pub fn base(&self) -> &GoodSemigroup {
        &self.base
    }

    /// The ideal's own conductor.
    pub fn delta(&self) -> &[i64] {
        &self.set.delta
    }

    pub fn member(&self, alpha: &[i64]) -> Result<bool> {
        self.set.check_dim(alpha)?;
        Ok(self.set.member(alpha))
    }

    pub fn elements_in_box(&self, hi: &[i64]) -> Vec<Vec<i64>> {
        box_points(&vec![0; hi.len()], hi)
            .filter(|p| self.set.member(p))
            .collect()
    }

    /// Whether the ideal coincides with its base semigroup on `[0, δ_S]`.
    pub fn equals_base(&self) -> bool {
        box_points(&vec![0; self.base.dim()], self.base.delta())
            .all(|p| self.set.member(&p) == self.base.set.member(&p))
    }

    /// Checks `E + S ⊆ E` on the window `[0, δ_S]`.
    pub fn is_stable(&self) -> bool {
        let window = self.base.delta().to_vec();
        let e = self.elements_in_box(&window);
        let s = self.base.elements_in_box(&window);
        e.iter().all(|x| {
            s.iter().all(|y| {
                let sum: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                self.set.member(&sum)
            })
        })
    }
}
