//! Dense bit sets over integer boxes `[0, hi] ⊂ N^h`.

use bitvec::vec::BitVec;

/// A subset of the box `[0, hi]`, one bit per lattice point.
///
/// Points are indexed in mixed radix with the first coordinate most
/// significant, so iteration is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxSet {
    hi: Vec<i64>,
    bits: BitVec,
}

impl BoxSet {
    pub fn empty(hi: &[i64]) -> Self {
        assert!(hi.iter().all(|&h| h >= 0), "box bounds must be non-negative");
        let size = hi.iter().map(|&h| (h + 1) as usize).product();
        BoxSet {
            hi: hi.to_vec(),
            bits: BitVec::repeat(false, size),
        }
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn dim(&self) -> usize {
        self.hi.len()
    }

    fn index(&self, p: &[i64]) -> Option<usize> {
        debug_assert_eq!(p.len(), self.hi.len());
        let mut idx = 0usize;
        for (&x, &h) in p.iter().zip(&self.hi) {
            if x < 0 || x > h {
                return None;
            }
            idx = idx * (h + 1) as usize + x as usize;
        }
        Some(idx)
    }

    fn point(&self, mut idx: usize) -> Vec<i64> {
        let mut p = vec![0; self.hi.len()];
        for (slot, &h) in p.iter_mut().zip(&self.hi).rev() {
            let radix = (h + 1) as usize;
            *slot = (idx % radix) as i64;
            idx /= radix;
        }
        p
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.index(p).is_some_and(|i| self.bits[i])
    }

    /// Inserts `p`; returns false when `p` lies outside the box.
    pub fn insert(&mut self, p: &[i64]) -> bool {
        match self.index(p) {
            Some(i) => {
                self.bits.set(i, true);
                true
            }
            None => false,
        }
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.not_any()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.bits.iter_ones().map(|i| self.point(i))
    }

    /// Least `c` in the box such that every box point `>= c` is a member,
    /// taken as the componentwise minimum of all such points. `None` when
    /// even the corner `hi` is missing.
    pub fn upper_orthant_corner(&self) -> Option<Vec<i64>> {
        let n = self.bits.len();
        let mut full: BitVec = BitVec::repeat(false, n);
        let strides = self.strides();
        for idx in (0..n).rev() {
            if !self.bits[idx] {
                continue;
            }
            let p = self.point(idx);
            let ok = (0..self.dim()).all(|i| p[i] == self.hi[i] || full[idx + strides[i]]);
            full.set(idx, ok);
        }
        let mut corner: Option<Vec<i64>> = None;
        for idx in full.iter_ones() {
            let p = self.point(idx);
            corner = Some(match corner {
                None => p,
                Some(c) => meet(&c, &p),
            });
        }
        corner
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.dim()];
        for i in (0..self.dim().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (self.hi[i + 1] + 1) as usize;
        }
        strides
    }
}

/// Componentwise minimum.
pub fn meet(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(&x, &y)| x.min(y)).collect()
}

/// All lattice points of `[lo, hi]` in lexicographic order; empty when some
/// `lo_i > hi_i`.
pub fn box_points(lo: &[i64], hi: &[i64]) -> BoxPoints {
    let done = lo.iter().zip(hi).any(|(l, h)| l > h);
    BoxPoints {
        lo: lo.to_vec(),
        hi: hi.to_vec(),
        next: if done { None } else { Some(lo.to_vec()) },
    }
}

pub struct BoxPoints {
    lo: Vec<i64>,
    hi: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl Iterator for BoxPoints {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.hi[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = self.lo[i];
        }
        Some(current)
    }
}
