//! Value semigroups and Gorenstein tests for algebroid curves glued from
//! monomial branches by bi-amalgamation, amalgamation and duplication.

pub mod constructions;
pub mod curves;
pub mod error;
pub mod goodsgp;
pub mod lattice;
pub mod numsgp;
pub mod oracle;

pub use constructions::{BiAmalgSpec, BuildOptions, Mode};
pub use curves::{BranchMap, MonomialBranch, MonomialIdeal};
pub use error::{Error, Result};
pub use goodsgp::{DeltaSearch, GoodRelativeIdeal, GoodSemigroup, Violation};
pub use numsgp::{Invariants, NumericalSemigroup, RelativeIdeal};
pub use oracle::{OracleConfig, OracleMode};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/numerical-semigroups.md")]
    pub mod numerical_semigroups {}
    #[doc = include_str!("../../../book/src/good-semigroups.md")]
    pub mod good_semigroups {}
    #[doc = include_str!("../../../book/src/gluing.md")]
    pub mod gluing {}
    #[doc = include_str!("../../../book/src/value-semigroups.md")]
    pub mod value_semigroups {}
    #[doc = include_str!("../../../book/src/gorenstein.md")]
    pub mod gorenstein {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
