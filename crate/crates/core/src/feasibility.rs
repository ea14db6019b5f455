//! Exact feasibility of systems of linear inequalities `a . x >= b` over the
//! rationals, by Fourier-Motzkin elimination with Chernikov's history rule
//! and back-substitution for a witness point.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `coeffs . x >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<BigInt>,
    pub rhs: BigInt,
}

impl Inequality {
    pub fn at_least(coeffs: &[i64], rhs: i64) -> Self {
        Inequality {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            rhs: BigInt::from(rhs),
        }
    }

    /// `coeffs . x > 0` for a homogeneous system, written as `coeffs . x >= 1`.
    pub fn positive(coeffs: &[i64]) -> Self {
        Self::at_least(coeffs, 1)
    }

    pub fn nonnegative(coeffs: &[i64]) -> Self {
        Self::at_least(coeffs, 0)
    }

    /// The pair `coeffs . x >= 0`, `-coeffs . x >= 0`.
    pub fn zero(coeffs: &[i64]) -> [Self; 2] {
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        [Self::nonnegative(coeffs), Self::nonnegative(&neg)]
    }

    pub fn holds_at(&self, x: &[BigRational]) -> bool {
        let lhs: BigRational = self.coeffs.iter().zip(x).map(|(a, v)| v * a).sum();
        lhs >= BigRational::from_integer(self.rhs.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct History(Vec<u64>);

impl History {
    fn single(k: usize, len: usize) -> Self {
        let mut bits = vec![0u64; len.div_ceil(64).max(1)];
        bits[k / 64] |= 1 << (k % 64);
        History(bits)
    }

    fn union(&self, other: &Self) -> Self {
        History(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

#[derive(Debug, Clone)]
struct Row {
    a: Vec<BigInt>,
    b: BigInt,
    hist: History,
}

impl Row {
    fn normalize(mut self) -> Self {
        let g = self
            .a
            .iter()
            .chain(std::iter::once(&self.b))
            .fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if !g.is_zero() && g != BigInt::from(1) {
            for v in self.a.iter_mut() {
                *v /= &g;
            }
            self.b /= &g;
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.a.iter().all(|v| v.is_zero())
    }
}

/// Keeps the strongest row per coefficient vector; reports a contradiction
/// (`0 >= b` with `b > 0`) by returning `None`.
fn reduce(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut best: HashMap<Vec<BigInt>, usize> = HashMap::new();
    let mut out: Vec<Row> = Vec::new();
    for row in rows {
        if row.is_trivial() {
            if row.b.is_positive() {
                return None;
            }
            continue;
        }
        match best.get(&row.a) {
            Some(&k) => {
                let keep = &mut out[k];
                if row.b > keep.b || (row.b == keep.b && row.hist.count() < keep.hist.count()) {
                    *keep = row;
                }
            }
            None => {
                best.insert(row.a.clone(), out.len());
                out.push(row);
            }
        }
    }
    Some(out)
}

/// Returns a rational point satisfying every inequality, or `None` when the
/// system is infeasible. `nvars` is the dimension of the ambient space.
pub fn find_point(system: &[Inequality], nvars: usize) -> Option<Vec<BigRational>> {
    let rows: Vec<Row> = system
        .iter()
        .enumerate()
        .map(|(k, ineq)| {
            debug_assert_eq!(ineq.coeffs.len(), nvars);
            Row {
                a: ineq.coeffs.clone(),
                b: ineq.rhs.clone(),
                hist: History::single(k, system.len()),
            }
            .normalize()
        })
        .collect();
    let mut current = reduce(rows)?;

    // stages[v] holds the rows involving only x_0..=x_v.
    let mut stages: Vec<Vec<Row>> = vec![Vec::new(); nvars];
    for (eliminated, var) in (0..nvars).rev().enumerate() {
        let limit = eliminated as u32 + 2;
        let (mut pos, mut neg, mut next) = (Vec::new(), Vec::new(), Vec::new());
        for row in &current {
            match row.a[var].sign() {
                num_bigint::Sign::Plus => pos.push(row),
                num_bigint::Sign::Minus => neg.push(row),
                num_bigint::Sign::NoSign => next.push(row.clone()),
            }
        }
        for p in &pos {
            for q in &neg {
                let hist = p.hist.union(&q.hist);
                if hist.count() > limit {
                    continue;
                }
                let mp = -&q.a[var];
                let mq = p.a[var].clone();
                let a: Vec<BigInt> =
                    p.a.iter()
                        .zip(&q.a)
                        .map(|(x, y)| x * &mp + y * &mq)
                        .collect();
                let b = &p.b * &mp + &q.b * &mq;
                next.push(Row { a, b, hist }.normalize());
            }
        }
        stages[var] = std::mem::take(&mut current);
        current = reduce(next)?;
    }

    let mut x: Vec<BigRational> = vec![BigRational::zero(); nvars];
    for var in 0..nvars {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for row in &stages[var] {
            let coef = &row.a[var];
            if coef.is_zero() {
                continue;
            }
            let rest: BigRational = (0..var).map(|j| &x[j] * &row.a[j]).sum();
            let bound = (BigRational::from_integer(row.b.clone()) - rest)
                / BigRational::from_integer(coef.clone());
            if coef.is_positive() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        x[var] = match (lo, hi) {
            (Some(l), Some(h)) => {
                debug_assert!(l <= h);
                let c = l.ceil();
                if c <= h {
                    c
                } else {
                    (l + h) / BigRational::from_integer(2.into())
                }
            }
            (Some(l), None) => l.ceil(),
            (None, Some(h)) => h.floor(),
            (None, None) => BigRational::zero(),
        };
    }
    debug_assert!(system.iter().all(|ineq| ineq.holds_at(&x)));
    Some(x)
}

pub fn is_feasible(system: &[Inequality], nvars: usize) -> bool {
    find_point(system, nvars).is_some()
}
