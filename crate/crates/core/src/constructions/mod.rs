//! Curves glued from two monomial branches.
//!
//! A bi-amalgamation `A ⋈^{f,g}(J, J')` is the ring of pairs
//! `(f(a) + j, g(a) + j')` with `a ∈ A`, `j ∈ J`, `j' ∈ J'`, where the gluing
//! ideal `I₀ = f⁻¹(J) = g⁻¹(J')` must be the same on both sides. Amalgamation
//! `A ⋈^f J = {(a, f(a) + j)}` and duplication `A ⋈ I = {(a, a + i)}` are the
//! special cases with an identity map on one or both sides.
//!
//! [`BiAmalgSpec`] stores every construction in the normalized two-sided form
//! and remembers which kind it came from.

mod plot;
mod presentation;
mod semigroup;

use serde::{Deserialize, Serialize};

use crate::curves::{BranchMap, MonomialBranch, MonomialIdeal};
use crate::error::Error;
use crate::numsgp::{NumericalSemigroup, RelativeIdeal};

pub use plot::{default_scale, plot_data, Convention, MarkerClass, PlotGrid, PlotPoint};
pub use presentation::{presentation, Image, Polynomial, Presentation, Term};
pub use semigroup::{
    default_window, homological_profile, is_gorenstein, value_semigroup, value_semigroup_trace,
    BuildOptions, DoubleTiePolicy, GorensteinVerdict, HomologicalProfile, IdealCheck, Trace,
};

/// Which construction a spec describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    BiAmalg,
    Amalg,
    Duplication,
}

/// A map as written in an input file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Power(i64),
    Inclusion,
}

/// Raw numeric description of a construction. Missing pieces are reported
/// by [`validate`] rather than rejected up front.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecData {
    pub mode: Mode,
    /// Generators of the domain `A`; `None` means `k[[t]]`.
    pub a: Option<Vec<i64>>,
    pub b: Option<Vec<i64>>,
    pub c: Option<Vec<i64>>,
    pub f: Option<MapKind>,
    pub g: Option<MapKind>,
    pub j: Option<Vec<i64>>,
    pub jp: Option<Vec<i64>>,
}

/// One reason a spec cannot be built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum Issue {
    MissingField { field: String },
    InvalidBranch { name: String, reason: String },
    InvalidMap { name: String },
    /// A power map must start at `k[[t]]`; both maps must share a domain.
    DomainMismatch { name: String },
    ZeroIdeal { name: String },
    NotInBranch { name: String, exponent: i64 },
    NotProper { name: String },
    NotInJacobson { name: String, minimum: i64 },
    /// `f⁻¹(J) ≠ g⁻¹(J')`; both value sets listed up to their conductors.
    PreimageMismatch { left: Vec<i64>, right: Vec<i64> },
}

/// Result of [`validate`]: an empty issue list means the spec is
/// constructible and local, and then the gluing ideal is attached.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
    /// Minimal generator exponents of `I₀`.
    pub gluing_ideal: Option<Vec<i64>>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }
}

/// One side of the normalized two-sided form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub map: BranchMap,
    pub ideal: MonomialIdeal,
}

impl Side {
    pub fn degree(&self) -> i64 {
        self.map.degree()
    }

    /// Value semigroup of the branch `f(A) + J`, i.e. `d · S_A ∪ v(J)`.
    pub fn branch_semigroup(&self) -> NumericalSemigroup {
        let d = self.degree();
        let domain = self.map.domain();
        let sa = domain.semigroup();
        let vj = self.ideal.value_set();
        NumericalSemigroup::from_membership(vj.conductor(), |s| {
            (s % d == 0 && sa.contains(s / d)) || vj.contains(s)
        })
    }

    /// `v(J)` as a relative ideal of `f(A) + J`.
    pub fn ideal_in_branch(&self) -> RelativeIdeal {
        self.ideal.value_set().rebased(self.branch_semigroup())
    }
}

/// A validated construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiAmalgSpec {
    mode: Mode,
    sides: [Side; 2],
    gluing: MonomialIdeal,
}

impl BiAmalgSpec {
    /// `A ⋈^{f,g}(J, J')`.
    pub fn bi_amalgamation(
        f: BranchMap,
        j: MonomialIdeal,
        g: BranchMap,
        jp: MonomialIdeal,
    ) -> Result<Self, ValidationReport> {
        let mut issues = Vec::new();
        check_map("f", &f, &mut issues);
        check_map("g", &g, &mut issues);
        if f.domain() != g.domain() {
            issues.push(Issue::DomainMismatch { name: "g".into() });
        }
        check_ideal("J", &j, &mut issues);
        check_ideal("Jp", &jp, &mut issues);
        if !issues.is_empty() {
            return Err(ValidationReport { issues, gluing_ideal: None });
        }
        let left = preimage(&f, &j, &mut issues);
        let right = preimage(&g, &jp, &mut issues);
        let (Some(left), Some(right)) = (left, right) else {
            return Err(ValidationReport { issues, gluing_ideal: None });
        };
        if left.value_set() != right.value_set() {
            issues.push(Issue::PreimageMismatch {
                left: prefix(left.value_set()),
                right: prefix(right.value_set()),
            });
            return Err(ValidationReport { issues, gluing_ideal: None });
        }
        Ok(BiAmalgSpec {
            mode: Mode::BiAmalg,
            sides: [Side { map: f, ideal: j }, Side { map: g, ideal: jp }],
            gluing: left,
        })
    }

    /// `A ⋈^f J`, normalized to `A ⋈^{id,f}(f⁻¹(J), J)`.
    pub fn amalgamation(f: BranchMap, j: MonomialIdeal) -> Result<Self, ValidationReport> {
        let mut issues = Vec::new();
        check_map("f", &f, &mut issues);
        check_ideal("J", &j, &mut issues);
        if !issues.is_empty() {
            return Err(ValidationReport { issues, gluing_ideal: None });
        }
        let Some(gluing) = preimage(&f, &j, &mut issues) else {
            return Err(ValidationReport { issues, gluing_ideal: None });
        };
        let identity = BranchMap::identity(f.domain());
        Ok(BiAmalgSpec {
            mode: Mode::Amalg,
            sides: [
                Side { map: identity, ideal: gluing.clone() },
                Side { map: f, ideal: j },
            ],
            gluing,
        })
    }

    /// `A ⋈ I`, normalized to `A ⋈^{id,id}(I, I)`.
    pub fn duplication(ideal: MonomialIdeal) -> Result<Self, ValidationReport> {
        let mut issues = Vec::new();
        check_ideal("J", &ideal, &mut issues);
        if !issues.is_empty() {
            return Err(ValidationReport { issues, gluing_ideal: None });
        }
        let identity = BranchMap::identity(ideal.branch().clone());
        let side = Side { map: identity, ideal: ideal.clone() };
        Ok(BiAmalgSpec {
            mode: Mode::Duplication,
            sides: [side.clone(), side],
            gluing: ideal,
        })
    }

    /// Builds from raw numbers; every problem found is reported.
    pub fn from_data(data: &SpecData) -> Result<Self, ValidationReport> {
        build(data)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn sides(&self) -> &[Side; 2] {
        &self.sides
    }

    /// `I₀`.
    pub fn gluing_ideal(&self) -> &MonomialIdeal {
        &self.gluing
    }

    /// Value semigroup of the shared domain `A`.
    pub fn domain(&self) -> NumericalSemigroup {
        self.sides[0].map.domain().semigroup().clone()
    }

    /// The same construction written explicitly as a bi-amalgamation.
    pub fn as_bi_amalgamation(&self) -> Self {
        BiAmalgSpec {
            mode: Mode::BiAmalg,
            ..self.clone()
        }
    }

    /// Report entry for a successfully built spec.
    pub fn report(&self) -> ValidationReport {
        ValidationReport {
            issues: Vec::new(),
            gluing_ideal: Some(self.gluing.generators().to_vec()),
        }
    }
}

fn prefix(e: &RelativeIdeal) -> Vec<i64> {
    e.elements_up_to(e.conductor()).collect()
}

fn check_map(name: &str, map: &BranchMap, issues: &mut Vec<Issue>) {
    if !map.is_valid() {
        issues.push(Issue::InvalidMap { name: name.into() });
    }
}

fn check_ideal(name: &str, ideal: &MonomialIdeal, issues: &mut Vec<Issue>) {
    if !ideal.is_proper() {
        issues.push(Issue::NotProper { name: name.into() });
    }
    if !ideal.in_jacobson_radical() {
        issues.push(Issue::NotInJacobson {
            name: name.into(),
            minimum: ideal.value_set().minimum(),
        });
    }
}

fn preimage(map: &BranchMap, ideal: &MonomialIdeal, issues: &mut Vec<Issue>) -> Option<MonomialIdeal> {
    match map.preimage_ideal(ideal) {
        Ok(p) => Some(p),
        Err(e) => {
            issues.push(Issue::InvalidMap { name: e.to_string() });
            None
        }
    }
}

/// Checks a raw spec: missing fields, branch and map validity, properness,
/// the Jacobson condition and the gluing condition `f⁻¹(J) = g⁻¹(J')`.
pub fn validate(data: &SpecData) -> ValidationReport {
    match build(data) {
        Ok(spec) => spec.report(),
        Err(report) => report,
    }
}

fn build(data: &SpecData) -> Result<BiAmalgSpec, ValidationReport> {
    let mut issues = Vec::new();
    let mut need = |field: &str, present: bool| {
        if !present {
            issues.push(Issue::MissingField { field: field.into() });
        }
    };
    match data.mode {
        Mode::BiAmalg => {
            for (name, present) in [
                ("B", data.b.is_some()),
                ("C", data.c.is_some()),
                ("f", data.f.is_some()),
                ("g", data.g.is_some()),
                ("J", data.j.is_some()),
                ("Jp", data.jp.is_some()),
            ] {
                need(name, present);
            }
        }
        Mode::Amalg => {
            for (name, present) in [("B", data.b.is_some()), ("f", data.f.is_some()), ("J", data.j.is_some())] {
                need(name, present);
            }
        }
        Mode::Duplication => {
            need("A", data.a.is_some());
            need("J", data.j.is_some());
        }
    }
    if !issues.is_empty() {
        return Err(ValidationReport { issues, gluing_ideal: None });
    }

    let mut branch = |name: &str, gens: &Option<Vec<i64>>| -> Option<MonomialBranch> {
        match gens {
            None => Some(MonomialBranch::power_series()),
            Some(g) => match MonomialBranch::new(g) {
                Ok(b) => Some(b),
                Err(e) => {
                    issues.push(Issue::InvalidBranch { name: name.into(), reason: e.to_string() });
                    None
                }
            },
        }
    };
    let a = branch("A", &data.a);
    let b = branch("B", &data.b);
    let c = branch("C", &data.c);

    let mut map = |name: &str, kind: Option<MapKind>, codomain: &Option<MonomialBranch>| -> Option<BranchMap> {
        let (kind, a, codomain) = (kind?, a.clone()?, codomain.clone()?);
        match kind {
            MapKind::Power(d) => {
                if a != MonomialBranch::power_series() {
                    issues.push(Issue::DomainMismatch { name: name.into() });
                    return None;
                }
                Some(BranchMap::power(d, codomain))
            }
            MapKind::Inclusion => Some(BranchMap::inclusion(a, codomain)),
        }
    };
    let f = map("f", data.f, &b);
    let g = map("g", data.g, &c);

    let mut ideal = |name: &str, gens: &Option<Vec<i64>>, on: &Option<MonomialBranch>| -> Option<MonomialIdeal> {
        let (gens, on) = (gens.as_ref()?, on.as_ref()?);
        match MonomialIdeal::new(on, gens) {
            Ok(i) => Some(i),
            Err(Error::EmptyGenerators) => {
                issues.push(Issue::ZeroIdeal { name: name.into() });
                None
            }
            Err(Error::NotInBranch(e)) => {
                issues.push(Issue::NotInBranch { name: name.into(), exponent: e });
                None
            }
            Err(e) => {
                issues.push(Issue::InvalidBranch { name: name.into(), reason: e.to_string() });
                None
            }
        }
    };
    let spec = match data.mode {
        Mode::BiAmalg => {
            let j = ideal("J", &data.j, &b);
            let jp = ideal("Jp", &data.jp, &c);
            match (f, j, g, jp) {
                (Some(f), Some(j), Some(g), Some(jp)) if issues.is_empty() => {
                    BiAmalgSpec::bi_amalgamation(f, j, g, jp)
                }
                _ => Err(ValidationReport::default()),
            }
        }
        Mode::Amalg => {
            let j = ideal("J", &data.j, &b);
            match (f, j) {
                (Some(f), Some(j)) if issues.is_empty() => BiAmalgSpec::amalgamation(f, j),
                _ => Err(ValidationReport::default()),
            }
        }
        Mode::Duplication => match ideal("J", &data.j, &a) {
            Some(i) if issues.is_empty() => BiAmalgSpec::duplication(i),
            _ => Err(ValidationReport::default()),
        },
    };
    spec.map_err(|mut report| {
        issues.append(&mut report.issues);
        ValidationReport { issues, gluing_ideal: None }
    })
}
