//! Root-system data for semisimple Cartan types.
//!
//! Conventions: nodes follow Bourbaki numbering. The Cartan matrix entry
//! `A[i][j]` is `<alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)`,
//! so column `j` holds the fundamental-weight coordinates of `alpha_j`.
//! Weights are integer vectors in the fundamental-weight basis, roots are
//! integer vectors in the simple-root basis and coroots in the simple-coroot
//! basis.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// One simple factor of a semisimple type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    /// Validates the family/rank combination. `B2` becomes `C2`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidType {
            family: family.letter(),
            rank,
            reason,
        };
        let family = match (family, rank) {
            (_, 0) => return Err(invalid("rank must be positive")),
            (Family::A, _) => Family::A,
            (Family::B, 1) => return Err(invalid("type B needs rank at least 2")),
            (Family::B, 2) => Family::C,
            (Family::B, _) => Family::B,
            (Family::C, 1) => return Err(invalid("type C needs rank at least 2")),
            (Family::C, _) => Family::C,
            (Family::D, r) if r < 4 => return Err(invalid("type D needs rank at least 4")),
            (Family::D, _) => Family::D,
            (Family::E, 6..=8) => Family::E,
            (Family::E, _) => return Err(invalid("type E has rank 6, 7 or 8")),
            (Family::F, 4) => Family::F,
            (Family::F, _) => return Err(invalid("type F has rank 4")),
            (Family::G, 2) => Family::G,
            (Family::G, _) => return Err(invalid("type G has rank 2")),
        };
        Ok(SimpleType { family, rank })
    }

    /// Classical number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Classical order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let l = self.rank as u128;
        let fact = |n: u128| (1..=n).product::<u128>();
        match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u128 << l) * fact(l),
            Family::D => (1u128 << (l - 1)) * fact(l),
            Family::E => match l {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..l - 1 {
                    bond(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..l - 2 {
                    bond(i, i + 1);
                }
                bond(l - 3, l - 1);
            }
            Family::E => {
                bond(0, 2);
                bond(2, 3);
                bond(1, 3);
                for i in 3..l - 1 {
                    bond(i, i + 1);
                }
            }
        }
        // Multiple bonds: A[short][long] = -k, A[long][short] = -1.
        match self.family {
            Family::B => a[l - 1][l - 2] = -2,
            Family::C => a[l - 2][l - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A semisimple Cartan type: an ordered list of simple factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    components: Vec<SimpleType>,
}

impl CartanType {
    pub fn new(components: Vec<SimpleType>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::parse("", 0, "empty Cartan type"));
        }
        Ok(CartanType { components })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![SimpleType::new(family, rank)?])
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.components.iter().map(|c| c.num_positive_roots()).sum()
    }

    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.weyl_order()).product()
    }

    /// Node ranges of the components inside the concatenated coordinates.
    pub fn component_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.components
            .iter()
            .map(|c| {
                let r = start..start + c.rank;
                start += c.rank;
                r
            })
            .collect()
    }

    pub fn has_rank_one_factor(&self) -> bool {
        self.components.iter().any(|c| c.rank == 1)
    }

    /// True when every simple factor has at least five positive roots,
    /// i.e. no factor of type A1, A2 or C2.
    pub fn all_factors_large(&self) -> bool {
        self.components.iter().all(|c| c.num_positive_roots() >= 5)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Grammar: components joined by `x`, each `<letter><rank>`, e.g. `A3xG2`.
    fn from_str(s: &str) -> Result<Self> {
        let mut components = Vec::new();
        let mut pos = 0;
        for part in s.split('x') {
            let mut chars = part.chars();
            let letter = chars
                .next()
                .ok_or_else(|| Error::parse(s, pos, "expected a family letter"))?;
            let family = Family::from_letter(letter)
                .ok_or_else(|| Error::parse(s, pos, format!("unknown family {letter:?}")))?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(s, pos + 1, "expected a decimal rank"));
            }
            let rank: usize = digits
                .parse()
                .map_err(|_| Error::parse(s, pos + 1, "rank out of range"))?;
            components.push(SimpleType::new(family, rank)?);
            pos += part.len() + 1;
        }
        CartanType::new(components)
    }
}

/// Integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn check_dominant(&self) -> Result<()> {
        match self.0.iter().position(|&c| c < 0) {
            Some(i) => Err(Error::NotDominant {
                coordinate: i + 1,
                value: self.0[i],
            }),
            None => Ok(()),
        }
    }

    pub fn check_strictly_dominant(&self) -> Result<()> {
        match self.0.iter().position(|&c| c <= 0) {
            Some(i) => Err(Error::NotStrictlyDominant {
                coordinate: i + 1,
                value: self.0[i],
            }),
            None => Ok(()),
        }
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated integers, e.g. `3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut coords = Vec::new();
        let mut pos = 0;
        for part in s.split(',') {
            let trimmed = part.trim();
            let value = trimmed.parse::<i64>().map_err(|_| {
                Error::parse(s, pos, format!("expected an integer, got {trimmed:?}"))
            })?;
            coords.push(value);
            pos += part.len() + 1;
        }
        Ok(Weight(coords))
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

/// Exact rational weight, used for chamber representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalWeight(pub Vec<BigRational>);

impl RationalWeight {
    /// Multiplies through by the common denominator and divides by the
    /// content, giving the primitive integer vector on the same ray.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if content.is_zero() {
            return ints;
        }
        ints.into_iter().map(|v| v / &content).collect()
    }
}

impl From<&Weight> for RationalWeight {
    fn from(w: &Weight) -> Self {
        RationalWeight(
            w.0.iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }
}

/// A positive root paired with its coroot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Simple-root coordinates.
    pub root: Vec<i64>,
    /// Simple-coroot coordinates of the matching coroot.
    pub coroot: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<BigRational>>,
    /// `(alpha_i, alpha_i) / 2`, normalised to 1 on the short roots of each factor.
    half_norms: Vec<i64>,
    roots: Vec<PositiveRoot>,
    positive_coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let rank = cartan_type.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (block, range) in cartan_type
            .components()
            .iter()
            .zip(cartan_type.component_ranges())
        {
            let local = block.cartan_matrix();
            for (i, row) in local.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    cartan[range.start + i][range.start + j] = v;
                }
            }
        }
        let cartan_inv = invert(&cartan)
            .ok_or_else(|| Error::Inconsistent("Cartan matrix is singular".into()))?;
        let half_norms = symmetrizer(&cartan, &cartan_type.component_ranges());

        let roots_only = positive_root_closure(&cartan);
        let transposed: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan[j][i]).collect())
            .collect();
        let mut positive_coroots = positive_root_closure(&transposed);
        positive_coroots.sort();

        let roots = roots_only
            .into_iter()
            .map(|root| {
                let coroot = coroot_of(&root, &cartan, &half_norms)?;
                Ok(PositiveRoot { root, coroot })
            })
            .collect::<Result<Vec<_>>>()?;

        let rs = RootSystem {
            cartan_type,
            cartan,
            cartan_inv,
            half_norms,
            roots,
            positive_coroots,
        };
        rs.check_counts()?;
        Ok(rs)
    }

    fn check_counts(&self) -> Result<()> {
        let expected = self.cartan_type.num_positive_roots();
        if self.roots.len() != expected || self.positive_coroots.len() != expected {
            return Err(Error::Inconsistent(format!(
                "{}: closure produced {} roots and {} coroots, expected {expected}",
                self.cartan_type,
                self.roots.len(),
                self.positive_coroots.len()
            )));
        }
        Ok(())
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &[Vec<BigRational>] {
        &self.cartan_inv
    }

    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    /// Positive roots sorted by height, each with its coroot.
    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    /// Positive coroots as produced by the dual (transposed) closure, sorted.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// Fundamental-weight coordinates of `alpha_i` (column `i` of the Cartan matrix).
    pub fn simple_root_weight(&self, i: usize) -> Vec<i64> {
        self.cartan.iter().map(|row| row[i]).collect()
    }

    /// Converts a root in simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        Weight(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(root).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// Indices of nodes orthogonal to every other simple root (rank-one factors).
    pub fn isolated_nodes(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| (0..self.rank()).all(|j| j == i || self.cartan[i][j] == 0))
            .collect()
    }

    fn check_rank(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: len,
            });
        }
        Ok(())
    }

    /// `<lambda, coroot>` for a coroot given in simple-coroot coordinates.
    pub fn pair_coroot(&self, lambda: &Weight, coroot: &[i64]) -> Result<i64> {
        self.check_rank(lambda.rank())?;
        self.check_rank(coroot.len())?;
        Ok(lambda.0.iter().zip(coroot).map(|(l, c)| l * c).sum())
    }

    /// The simple reflection `s_i`, with `i` zero-based.
    pub fn reflect_simple(&self, lambda: &Weight, i: usize) -> Result<Weight> {
        self.check_rank(lambda.rank())?;
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                rank: self.rank(),
            });
        }
        let li = lambda.0[i];
        Ok(Weight(
            lambda
                .0
                .iter()
                .zip(&self.cartan)
                .map(|(c, row)| c - li * row[i])
                .collect(),
        ))
    }

    /// Applies `s_i` to a root given in simple-root coordinates.
    pub fn reflect_root(&self, root: &[i64], i: usize) -> Vec<i64> {
        let pairing: i64 = self.cartan[i].iter().zip(root).map(|(a, b)| a * b).sum();
        let mut out = root.to_vec();
        out[i] -= pairing;
        out
    }

    /// Dimension of the irreducible module of highest weight `lambda`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigInt> {
        self.check_rank(lambda.rank())?;
        lambda.check_dominant()?;
        let shifted = Weight(lambda.0.iter().map(|c| c + 1).collect());
        let rho = self.rho();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for r in &self.roots {
            num *= self.pair_coroot(&shifted, &r.coroot)?;
            den *= self.pair_coroot(&rho, &r.coroot)?;
        }
        if !(&num % &den).is_zero() {
            return Err(Error::Inconsistent("Weyl dimension is not integral".into()));
        }
        Ok(num / den)
    }

    /// Invariant form on fundamental-weight coordinates:
    /// `(omega_i, omega_k) = (A^{-1})_{ki} * d_k`.
    pub fn form(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let n = self.rank();
        let mut acc = BigRational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for k in 0..n {
                let g = &self.cartan_inv[k][i] * BigInt::from(self.half_norms[k]);
                acc += &x[i] * &y[k] * g;
            }
        }
        acc
    }
}

/// Gauss-Jordan inverse over the rationals.
fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `d_i A_ij = d_j A_ji` per connected component, scaled to integers
/// with minimum 1.
fn symmetrizer(cartan: &[Vec<i64>], ranges: &[std::ops::Range<usize>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for range in ranges {
        d[range.start] = Some(BigRational::one());
        let mut stack = vec![range.start];
        while let Some(i) = stack.pop() {
            for j in range.clone() {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().expect("visited");
                    d[j] = Some(di * BigInt::from(cartan[i][j]) / BigInt::from(cartan[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    let mut out = vec![0i64; n];
    for range in ranges {
        let vals: Vec<BigRational> = range.clone().map(|i| d[i].clone().expect("set")).collect();
        let min = vals.iter().min().expect("nonempty").clone();
        for (k, v) in vals.iter().enumerate() {
            let scaled = v / &min;
            debug_assert!(scaled.is_integer());
            out[range.start + k] = scaled
                .to_integer()
                .try_into()
                .expect("small root-length ratio");
        }
    }
    out
}

/// Positive roots generated from the simple roots by root strings, sorted
/// by (height, coordinates).
fn positive_root_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut all = Vec::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    for r in &layer {
        seen.insert(r.clone());
    }
    while !layer.is_empty() {
        layer.sort();
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut is_simple_i = true;
                for (j, &b) in beta.iter().enumerate() {
                    if (j == i && b != 1) || (j != i && b != 0) {
                        is_simple_i = false;
                    }
                }
                if is_simple_i {
                    continue;
                }
                // p: how far the alpha_i string extends downwards from beta.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] >= 0 && seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = cartan[i].iter().zip(beta).map(|(a, b)| a * b).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all
}

/// `beta^vee = sum_j beta_j d_j / d_beta alpha_j^vee` with `d_beta = (beta, beta)/2`.
fn coroot_of(root: &[i64], cartan: &[Vec<i64>], d: &[i64]) -> Result<Vec<i64>> {
    let n = root.len();
    let mut norm2 = 0i64; // (beta, beta)
    for i in 0..n {
        for j in 0..n {
            norm2 += root[i] * root[j] * d[i] * cartan[i][j];
        }
    }
    if norm2 <= 0 || norm2 % 2 != 0 {
        return Err(Error::Inconsistent(format!("bad root norm for {root:?}")));
    }
    let half = norm2 / 2;
    root.iter()
        .zip(d)
        .map(|(&b, &di)| {
            let v = b * di;
            if v % half != 0 {
                Err(Error::Inconsistent(format!(
                    "non-integral coroot for {root:?}"
                )))
            } else {
                Ok(v / half)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parses_composite_types() {
        let t: CartanType = "A3xG2".parse().unwrap();
        assert_eq!(t.rank(), 5);
        assert_eq!(t.to_string(), "A3xG2");
        assert_eq!("B2".parse::<CartanType>().unwrap().to_string(), "C2");
    }

    #[test]
    fn rejects_bad_types() {
        for bad in ["D3", "E5", "F3", "G3", "B1", "C1", "A0"] {
            assert!(
                matches!(bad.parse::<CartanType>(), Err(Error::InvalidType { .. })),
                "{bad}"
            );
        }
        match "A2xQ3".parse::<CartanType>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            "A".parse::<CartanType>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs("A2").num_positive_roots(), 3);
        assert_eq!(rs("C2").num_positive_roots(), 4);
        assert_eq!(rs("B3").num_positive_roots(), 9);
        for l in 1..=8 {
            assert_eq!(rs(&format!("A{l}")).num_positive_roots(), l * (l + 1) / 2);
        }
        for l in 3..=6 {
            assert_eq!(rs(&format!("B{l}")).num_positive_roots(), l * l);
        }
        for l in 2..=6 {
            assert_eq!(rs(&format!("C{l}")).num_positive_roots(), l * l);
        }
        for l in 4..=7 {
            assert_eq!(rs(&format!("D{l}")).num_positive_roots(), l * (l - 1));
        }
        for (t, n) in [("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6)] {
            assert_eq!(rs(t).num_positive_roots(), n);
        }
    }

    #[test]
    fn cartan_inverse_is_exact_and_nonnegative() {
        for t in ["A4", "B4", "C3", "D5", "E6", "E8", "F4", "G2", "A2xC2"] {
            let r = rs(t);
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = BigRational::zero();
                    for k in 0..n {
                        acc += BigRational::from_integer(r.cartan()[i][k].into())
                            * &r.cartan_inv()[k][j];
                    }
                    let expect = if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(acc, expect, "{t}");
                    assert!(!r.cartan_inv()[i][j].is_negative());
                }
            }
        }
    }

    #[test]
    fn cartan_sign_pattern() {
        for t in ["B5", "C4", "D6", "E7", "F4", "G2", "A1xA3"] {
            let a = rs(t).cartan;
            for i in 0..a.len() {
                assert_eq!(a[i][i], 2);
                for j in 0..a.len() {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn paired_coroots_match_dual_closure() {
        for t in ["B3", "C3", "F4", "G2", "D4", "A2xC2"] {
            let r = rs(t);
            let mut paired: Vec<Vec<i64>> = r
                .positive_roots()
                .iter()
                .map(|p| p.coroot.clone())
                .collect();
            paired.sort();
            assert_eq!(paired, r.positive_coroots(), "{t}");
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        let l = Weight(vec![1, 1]);
        assert_eq!(a2.pair_coroot(&l, &[1, 0]).unwrap(), 1);
        assert_eq!(a2.pair_coroot(&l, &[1, 1]).unwrap(), 2);
        // C2: theta = 2a1 + a2 is long, its coroot is a1v + a2v; the highest
        // element of the dual closure is the coroot of the short root a1 + a2.
        let c2 = rs("C2");
        let theta = c2
            .positive_roots()
            .iter()
            .find(|r| r.root == vec![2, 1])
            .unwrap();
        assert_eq!(theta.coroot, vec![1, 1]);
        assert_eq!(
            c2.pair_coroot(&Weight(vec![0, 1]), &theta.coroot).unwrap(),
            1
        );
        let highest = c2
            .positive_coroots()
            .iter()
            .max_by_key(|c| c.iter().sum::<i64>())
            .unwrap();
        assert_eq!(highest, &vec![1, 2]);
        assert_eq!(c2.pair_coroot(&Weight(vec![0, 1]), highest).unwrap(), 2);
        assert!(matches!(
            a2.pair_coroot(&Weight(vec![1]), &[1, 0]),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        assert_eq!(
            a2.reflect_simple(&Weight(vec![1, 0]), 0).unwrap(),
            Weight(vec![-1, 1])
        );
        assert_eq!(
            a2.reflect_simple(&Weight(vec![0, 5]), 0).unwrap(),
            Weight(vec![0, 5])
        );
        let c2 = rs("C2");
        assert_eq!(
            c2.reflect_simple(&Weight(vec![0, 1]), 1).unwrap(),
            Weight(vec![2, -1])
        );
        assert!(matches!(
            c2.reflect_simple(&Weight(vec![0, 1]), 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(
            rs("A2").weyl_dimension(&Weight(vec![0, 0])).unwrap(),
            1.into()
        );
        assert_eq!(
            rs("A2").weyl_dimension(&Weight(vec![1, 1])).unwrap(),
            8.into()
        );
        assert_eq!(
            rs("C2").weyl_dimension(&Weight(vec![1, 0])).unwrap(),
            4.into()
        );
        assert_eq!(
            rs("C2").weyl_dimension(&Weight(vec![0, 1])).unwrap(),
            5.into()
        );
        assert_eq!(
            rs("G2").weyl_dimension(&Weight(vec![1, 0])).unwrap(),
            7.into()
        );
        assert_eq!(
            rs("E8")
                .weyl_dimension(&Weight(vec![0, 0, 0, 0, 0, 0, 0, 1]))
                .unwrap(),
            248.into()
        );
        assert!(matches!(
            rs("A2").weyl_dimension(&Weight(vec![1, -1])),
            Err(Error::NotDominant { coordinate: 2, .. })
        ));
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("3,1".parse::<Weight>().unwrap(), Weight(vec![3, 1]));
        assert!(matches!(
            "3,x".parse::<Weight>(),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn primitive_integer_representative() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let w = RationalWeight(vec![q(2, 3), q(1, 3)]);
        assert_eq!(
            w.primitive_integer(),
            vec![BigInt::from(2), BigInt::from(1)]
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn reflection_is_involution(a in -20i64..20, b in -20i64..20, c in -20i64..20, i in 0usize..3) {
                let r = rs("B3");
                let l = Weight(vec![a, b, c]);
                let once = r.reflect_simple(&l, i).unwrap();
                prop_assert_eq!(r.reflect_simple(&once, i).unwrap(), l.clone());
                prop_assert_eq!(once == l, l.0[i] == 0);
            }

            #[test]
            fn weyl_dimension_at_least_one(a in 0i64..4, b in 0i64..4) {
                let d = rs("G2").weyl_dimension(&Weight(vec![a, b])).unwrap();
                prop_assert!(d >= BigInt::one());
                prop_assert_eq!(d == BigInt::one(), a == 0 && b == 0);
            }
        }
    }
}
