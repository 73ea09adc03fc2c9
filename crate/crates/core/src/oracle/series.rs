//! Power series over a small prime field, truncated at `t^N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// `c_0 + c_1 t + … + c_{N-1} t^{N-1}` over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    prime: u32,
    coeffs: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl TruncatedSeries {
    pub fn zero(prime: u32, truncation: usize) -> Result<Self> {
        if !is_prime(prime) || prime > 65_521 {
            return Err(Error::BadPrime(prime));
        }
        Ok(TruncatedSeries {
            prime,
            coeffs: vec![0; truncation],
        })
    }

    /// `coeff · t^exp`; vanishes when `exp >= truncation`.
    pub fn monomial(prime: u32, truncation: usize, exp: usize, coeff: i64) -> Result<Self> {
        let mut s = Self::zero(prime, truncation)?;
        s.set(exp, coeff);
        Ok(s)
    }

    /// Series with the given `(exponent, coefficient)` terms.
    pub fn from_terms(prime: u32, truncation: usize, terms: &[(usize, i64)]) -> Result<Self> {
        let mut s = Self::zero(prime, truncation)?;
        for &(e, c) in terms {
            let old = s.coeff(e) as i64;
            s.set(e, old + c);
        }
        Ok(s)
    }

    fn reduce(&self, c: i64) -> u32 {
        c.rem_euclid(self.prime as i64) as u32
    }

    pub fn set(&mut self, exp: usize, coeff: i64) {
        if exp < self.coeffs.len() {
            self.coeffs[exp] = self.reduce(coeff);
        }
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: usize) -> u32 {
        self.coeffs.get(exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Least exponent with a nonzero coefficient; `None` when the series
    /// vanishes modulo `t^N`.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Nonzero terms, ascending.
    pub fn terms(&self) -> Vec<(usize, u32)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| (e, c))
            .collect()
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = self.reduce(c) as u64;
        let p = self.prime as u64;
        TruncatedSeries {
            prime: self.prime,
            coeffs: self.coeffs.iter().map(|&x| (x as u64 * c % p) as u32).collect(),
        }
    }

    /// `s(t^d)`.
    pub fn substitute_power(&self, d: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![0; n];
        for (e, &c) in self.coeffs.iter().enumerate() {
            let target = e * d;
            if target >= n {
                break;
            }
            out[target] = c;
        }
        TruncatedSeries {
            prime: self.prime,
            coeffs: out,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::monomial(self.prime, self.truncation(), 0, 1).expect("prime checked");
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.prime, other.prime, "series over different fields");
        assert_eq!(self.coeffs.len(), other.coeffs.len(), "series with different truncations");
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_compatible(rhs);
        let p = self.prime;
        TruncatedSeries {
            prime: p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| (a + b) % p)
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.scale(-1)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_compatible(rhs);
        let n = self.coeffs.len();
        let p = self.prime as u64;
        let mut out = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        TruncatedSeries {
            prime: self.prime,
            coeffs: out.into_iter().map(|c| c as u32).collect(),
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0 (mod t^{}, F_{})", self.truncation(), self.prime);
        }
        for (i, (e, c)) in terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}t^{e}")?;
        }
        write!(f, " (mod t^{}, F_{})", self.truncation(), self.prime)
    }
}
