//! Laurent polynomials in one variable `q` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `sum_k coeffs[k] q^(low + k)`, trimmed so both end coefficients are
/// nonzero. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exponent: i64, coeff: BigInt) -> Self {
        LaurentPoly {
            low: exponent,
            coeffs: vec![coeff],
        }
        .trimmed()
    }

    /// `[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)`; `[0]_q = 0`.
    pub fn q_integer(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); 2 * n as usize - 1];
        for k in (0..coeffs.len()).step_by(2) {
            coeffs[k] = BigInt::one();
        }
        LaurentPoly {
            low: 1 - n as i64,
            coeffs,
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let map: BTreeMap<i64, BigInt> =
            terms.into_iter().fold(BTreeMap::new(), |mut m, (e, c)| {
                *m.entry(e).or_insert_with(BigInt::zero) += c;
                m
            });
        let (Some(&low), Some(&high)) = (map.keys().next(), map.keys().next_back()) else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); (high - low) as usize + 1];
        for (e, c) in map {
            coeffs[(e - low) as usize] = c;
        }
        LaurentPoly { low, coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            return Self::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        let k = exponent - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            return BigInt::zero();
        }
        self.coeffs[k as usize].clone()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `coeff(k) == coeff(-k)` for every `k`.
    pub fn is_symmetric(&self) -> bool {
        match (self.low_degree(), self.high_degree()) {
            (Some(lo), Some(hi)) => lo == -hi && self.coeffs.iter().eq(self.coeffs.iter().rev()),
            _ => true,
        }
    }

    /// Exact division; fails when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::Inconsistent(
                "division by the zero polynomial".into(),
            ));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Err(Error::Inconsistent("inexact Laurent division".into()));
        }
        let lead = divisor.coeffs.last().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Inconsistent("inexact Laurent division".into()));
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Inconsistent("inexact Laurent division".into()));
        }
        Ok(LaurentPoly {
            low: self.low - divisor.low,
            coeffs: quot,
        }
        .trimmed())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly {
            low: self.low + rhs.low,
            coeffs,
        }
        .trimmed()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<(i64, &BigInt)> = self.terms().collect();
        for (k, (e, c)) in terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "q^{e}")?,
                _ => write!(f, "{c}q^{e}")?,
            }
        }
        Ok(())
    }
}
