//! Monomial branches `k[[t^a_1, …, t^a_n]]`, monomial maps between them and
//! monomial ideals.
//!
//! Everything is monomial, so a subspace is determined by the exponents of
//! the monomials it contains and valuations never see cancellation between
//! distinct monomials. Branches are represented by their value semigroups and
//! ideals by their value sets.

use crate::error::{Error, Result};
use crate::numsgp::{NumericalSemigroup, RelativeIdeal};

/// A monomial algebroid branch, identified with its value semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialBranch {
    semigroup: NumericalSemigroup,
}

impl MonomialBranch {
    pub fn new(gens: &[i64]) -> Result<Self> {
        Ok(MonomialBranch {
            semigroup: NumericalSemigroup::from_generators(gens)?,
        })
    }

    /// `k[[t]]`.
    pub fn power_series() -> Self {
        MonomialBranch {
            semigroup: NumericalSemigroup::naturals(),
        }
    }

    pub fn from_semigroup(semigroup: NumericalSemigroup) -> Self {
        MonomialBranch { semigroup }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }
}

/// An injective monomial map between branches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchMap {
    /// `k[[t]] → B`, `t ↦ t^degree`.
    Power { degree: i64, codomain: MonomialBranch },
    /// Inclusion of a sub-branch.
    Inclusion {
        domain: MonomialBranch,
        codomain: MonomialBranch,
    },
}

impl BranchMap {
    pub fn power(degree: i64, codomain: MonomialBranch) -> Self {
        BranchMap::Power { degree, codomain }
    }

    pub fn inclusion(domain: MonomialBranch, codomain: MonomialBranch) -> Self {
        BranchMap::Inclusion { domain, codomain }
    }

    pub fn identity(branch: MonomialBranch) -> Self {
        BranchMap::Inclusion {
            domain: branch.clone(),
            codomain: branch,
        }
    }

    pub fn domain(&self) -> MonomialBranch {
        match self {
            BranchMap::Power { .. } => MonomialBranch::power_series(),
            BranchMap::Inclusion { domain, .. } => domain.clone(),
        }
    }

    pub fn codomain(&self) -> &MonomialBranch {
        match self {
            BranchMap::Power { codomain, .. } | BranchMap::Inclusion { codomain, .. } => codomain,
        }
    }

    /// The factor by which the map scales orders.
    pub fn degree(&self) -> i64 {
        match self {
            BranchMap::Power { degree, .. } => *degree,
            BranchMap::Inclusion { .. } => 1,
        }
    }

    /// `t ↦ t^d` needs `d ∈ S_codomain`; an inclusion needs
    /// `S_domain ⊆ S_codomain`.
    pub fn is_valid(&self) -> bool {
        match self {
            BranchMap::Power { degree, codomain } => {
                *degree >= 1 && codomain.semigroup.contains(*degree)
            }
            BranchMap::Inclusion { domain, codomain } => domain
                .semigroup
                .generators()
                .iter()
                .all(|&g| codomain.semigroup.contains(g)),
        }
    }

    /// `f⁻¹(J)`: the domain elements whose image lies in `J`. Its value set is
    /// `{s ∈ S_domain : degree · s ∈ v(J)}`.
    pub fn preimage_ideal(&self, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        if !self.is_valid() {
            return Err(Error::InvalidMap(format!("{self:?}")));
        }
        if &ideal.branch != self.codomain() {
            return Err(Error::BranchMismatch);
        }
        let domain = self.domain();
        let d = self.degree();
        let vj = &ideal.value_set;
        let hi = (vj.conductor() + d - 1).div_euclid(d).max(domain.semigroup.conductor());
        let value_set = RelativeIdeal::from_predicate(domain.semigroup.clone(), 0, hi, |s| {
            domain.semigroup.contains(s) && vj.contains(d * s)
        });
        Ok(MonomialIdeal::from_value_set(domain, value_set))
    }
}

/// A nonzero monomial ideal of a branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    branch: MonomialBranch,
    generators: Vec<i64>,
    value_set: RelativeIdeal,
}

impl MonomialIdeal {
    /// The ideal `(t^a : a ∈ exps)`; each exponent must be a branch value.
    pub fn new(branch: &MonomialBranch, exps: &[i64]) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = exps.iter().find(|&&a| !branch.semigroup.contains(a)) {
            return Err(Error::NotInBranch(bad));
        }
        let value_set = RelativeIdeal::from_monomial_gens(&branch.semigroup, exps)?;
        Ok(Self::from_value_set(branch.clone(), value_set))
    }

    pub(crate) fn from_value_set(branch: MonomialBranch, value_set: RelativeIdeal) -> Self {
        MonomialIdeal {
            generators: value_set.minimal_generators(),
            branch,
            value_set,
        }
    }

    pub fn branch(&self) -> &MonomialBranch {
        &self.branch
    }

    /// Minimal generator exponents, ascending.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// `v(I)`.
    pub fn value_set(&self) -> &RelativeIdeal {
        &self.value_set
    }

    pub fn is_proper(&self) -> bool {
        !self.value_set.contains(0)
    }

    /// Every element has positive order, i.e. `I ⊆ m`.
    pub fn in_jacobson_radical(&self) -> bool {
        self.value_set.minimum() > 0
    }
}
