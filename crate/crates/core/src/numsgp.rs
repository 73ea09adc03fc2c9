//! Numerical semigroups and their relative ideals.
//!
//! A numerical semigroup is a cofinite submonoid of `(N, +)`. Everything past
//! the conductor is a member, so a semigroup is stored as a dense bit table on
//! `[0, conductor]`. Relative ideals are handled the same way on
//! `[minimum, conductor]`, with absolute (possibly negative) integers.

use std::fmt;

use bitvec::vec::BitVec;
use num_integer::Integer;

use crate::error::{Error, Result};

/// A numerical semigroup `S = <a_1, ..., a_n>` with `gcd(a_i) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    members: BitVec,
}

/// Arithmetic invariants of a numerical semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub frobenius: i64,
    pub conductor: i64,
    pub gaps: Vec<i64>,
    pub genus: usize,
    pub multiplicity: i64,
}

impl NumericalSemigroup {
    /// Builds `<gens>` by dynamic programming over `[0, min * max]`.
    ///
    /// The window is safe because the Frobenius number is below
    /// `(min - 1)(max - 1)` whenever the generators are coprime.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let gcd = gens.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NonCoprimeGenerators(gcd));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let bound = (sorted[0] * sorted[sorted.len() - 1]) as usize;

        let mut table: BitVec = BitVec::repeat(false, bound + 1);
        table.set(0, true);
        for x in 1..=bound {
            let reachable = sorted
                .iter()
                .take_while(|&&g| g as usize <= x)
                .any(|&g| table[x - g as usize]);
            table.set(x, reachable);
        }
        Ok(Self::from_table(table))
    }

    /// `N` itself.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("<1> is valid")
    }

    /// Builds a semigroup from a membership predicate that is known to be
    /// additively closed and to contain every integer `>= bound`.
    pub(crate) fn from_membership(bound: i64, pred: impl Fn(i64) -> bool) -> Self {
        let bound = bound.max(0) as usize;
        let mut table: BitVec = BitVec::repeat(false, bound + 1);
        for x in 0..=bound {
            table.set(x, x == bound || pred(x as i64));
        }
        table.set(0, true);
        Self::from_table(table)
    }

    fn from_table(mut table: BitVec) -> Self {
        let frobenius = table.iter().rposition(|b| !*b).map_or(-1, |g| g as i64);
        let conductor = (frobenius + 1) as usize;
        table.truncate(conductor + 1);
        let contains = |x: i64| x >= 0 && (x as usize >= conductor || table[x as usize]);

        // a member is a minimal generator iff it is not a sum of two nonzero members
        let mut generators = Vec::new();
        let first = (1..).find(|&x| contains(x)).expect("cofinite");
        for x in first..=(conductor as i64 + first) {
            if !contains(x) {
                continue;
            }
            let decomposable = (first..=x / 2).any(|y| contains(y) && contains(x - y));
            if !decomposable {
                generators.push(x);
            }
        }
        NumericalSemigroup {
            generators,
            frobenius,
            members: table,
        }
    }

    /// Minimal generators, ascending.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Largest integer outside `S`, or `-1` for `S = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius == -1
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x >= self.conductor() || self.members[x as usize])
    }

    /// Members in `[0, bound]`, ascending.
    pub fn elements_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x))
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius).filter(|&x| !self.contains(x)).collect()
    }

    pub fn invariants(&self) -> Invariants {
        let gaps = self.gaps();
        Invariants {
            frobenius: self.frobenius,
            conductor: self.conductor(),
            genus: gaps.len(),
            gaps,
            multiplicity: self.multiplicity(),
        }
    }

    /// Apéry set with respect to `n`: entry `r` is the least member congruent
    /// to `r` modulo `n`.
    pub fn apery(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::AperyOfNonMember(n));
        }
        let mut out = vec![-1i64; n as usize];
        let mut missing = n as usize;
        let mut x = 0;
        while missing > 0 {
            let r = (x % n) as usize;
            if out[r] < 0 && self.contains(x) {
                out[r] = x;
                missing -= 1;
            }
            x += 1;
        }
        Ok(out)
    }

    /// `x in S <=> g - x not in S`. `N` counts as symmetric.
    pub fn is_symmetric(&self) -> bool {
        let g = self.frobenius;
        (0..=g).all(|x| self.contains(x) != self.contains(g - x))
    }

    /// The canonical relative ideal `K = {x : g - x not in S}`.
    pub fn canonical_ideal(&self) -> Result<RelativeIdeal> {
        if self.is_naturals() {
            return Err(Error::FullSemigroup);
        }
        let g = self.frobenius;
        Ok(RelativeIdeal::from_predicate(
            self.clone(),
            0,
            self.conductor(),
            |x| !self.contains(g - x),
        ))
    }

    /// Checks additive closure on `[0, 2 * conductor]`.
    pub fn is_closed(&self) -> bool {
        let c = self.conductor();
        let members: Vec<i64> = self.elements_up_to(2 * c).collect();
        members.iter().all(|&a| {
            members
                .iter()
                .take_while(|&&b| a + b <= 2 * c)
                .all(|&b| self.contains(a + b))
        })
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// A relative ideal `E` of a numerical semigroup: `E + S ⊆ E`, bounded below.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    base: NumericalSemigroup,
    minimum: i64,
    conductor: i64,
    members: BitVec,
}

impl RelativeIdeal {
    /// Tabulates `pred` on `[lo, hi]`; integers below `lo` are outside and
    /// integers at or above `hi` are inside.
    pub(crate) fn from_predicate(
        base: NumericalSemigroup,
        lo: i64,
        hi: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Self {
        let hi = hi.max(lo);
        let inside = |x: i64| x >= hi || pred(x);
        let minimum = (lo..=hi).find(|&x| inside(x)).expect("hi is a member");
        let mut conductor = hi;
        while conductor > minimum && inside(conductor - 1) {
            conductor -= 1;
        }
        let members = (minimum..=conductor).map(inside).collect();
        RelativeIdeal {
            base,
            minimum,
            conductor,
            members,
        }
    }

    /// Value set of the monomial fractional ideal generated by `t^a`, `a` in
    /// `exps`: the union of the shifts `a + S`.
    pub fn from_monomial_gens(base: &NumericalSemigroup, exps: &[i64]) -> Result<Self> {
        let lo = *exps.iter().min().ok_or(Error::EmptyGenerators)?;
        let hi = exps.iter().max().unwrap() + base.conductor();
        Ok(Self::from_predicate(base.clone(), lo, hi, |x| {
            exps.iter().any(|&a| base.contains(x - a))
        }))
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn minimum(&self) -> i64 {
        self.minimum
    }

    /// Least `c` with `c + N ⊆ E`.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor || (x >= self.minimum && self.members[(x - self.minimum) as usize])
    }

    pub fn elements_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (self.minimum..=bound).filter(move |&x| self.contains(x))
    }

    /// `E + k`.
    pub fn shifted(&self, k: i64) -> Self {
        RelativeIdeal {
            base: self.base.clone(),
            minimum: self.minimum + k,
            conductor: self.conductor + k,
            members: self.members.clone(),
        }
    }

    /// Same ideal viewed over another semigroup with the same members.
    pub(crate) fn rebased(&self, base: NumericalSemigroup) -> Self {
        RelativeIdeal {
            base,
            ..self.clone()
        }
    }

    /// Checks `E + S ⊆ E` on the finite window.
    pub fn is_stable(&self) -> bool {
        let s: Vec<i64> = self.base.elements_up_to(self.base.conductor()).collect();
        self.elements_up_to(self.conductor)
            .all(|e| s.iter().all(|&x| self.contains(e + x)))
    }

    /// Minimal generating exponents as an `S`-module, ascending.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let top = self.conductor + self.base.multiplicity();
        let mut kept: Vec<i64> = Vec::new();
        for x in self.elements_up_to(top) {
            if !kept.iter().any(|&k| self.base.contains(x - k)) {
                kept.push(x);
            }
        }
        kept
    }

    /// Whether `E` is a translate of the canonical ideal of its base.
    pub fn is_canonical(&self) -> bool {
        let normalized = self.shifted(-self.minimum);
        match self.base.canonical_ideal() {
            Ok(k) => normalized == k,
            // K(N) = N
            Err(_) => normalized.conductor == 0,
        }
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in self.elements_up_to(self.conductor) {
            write!(f, "{x},")?;
        }
        write!(f, "...}}")
    }
}
