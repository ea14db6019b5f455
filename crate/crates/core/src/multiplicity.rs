//! Restriction of irreducible characters to the principal torus, their sl2
//! decomposition and the invariant dimensions `m_lambda = dim V_lambda^S`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::principal::PrincipalElement;
use crate::rootsys::{RootSystem, Weight};

pub const DEFAULT_KMAX: u32 = 12;
pub const DEFAULT_ORACLE_MAX_DIM: u128 = 100_000;

/// `p_lambda(q) = sum_mu mult(mu) q^(mu(h0))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterPoly(LaurentPoly);

impl CharacterPoly {
    /// Wraps a polynomial after checking nonnegativity, symmetry and parity.
    pub fn new(poly: LaurentPoly) -> Result<Self> {
        if !poly.has_nonnegative_coeffs() {
            return Err(Error::Inconsistent(format!(
                "negative coefficient in {poly}"
            )));
        }
        if !poly.is_symmetric() {
            return Err(Error::Inconsistent(format!("{poly} is not symmetric")));
        }
        let parities: Vec<i64> = poly.terms().map(|(e, _)| e.rem_euclid(2)).collect();
        if parities.windows(2).any(|p| p[0] != p[1]) {
            return Err(Error::Inconsistent(format!("{poly} has mixed parity")));
        }
        Ok(CharacterPoly(poly))
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.0.coeff(exponent)
    }

    /// `p(1)`, the dimension of the module.
    pub fn dimension(&self) -> BigInt {
        self.0.eval_at_one()
    }

    pub fn degree(&self) -> i64 {
        self.0.high_degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> BTreeMap<i64, BigInt> {
        self.0.terms().map(|(e, c)| (e, c.clone())).collect()
    }
}

impl std::fmt::Display for CharacterPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `N_k`, the multiplicity of the irreducible sl2 module of highest weight `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sl2Decomposition(BTreeMap<u64, BigInt>);

impl Sl2Decomposition {
    pub fn multiplicity(&self, k: u64) -> BigInt {
        self.0.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero `(k, N_k)` in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.0.iter().map(|(k, n)| (*k, n))
    }

    /// `sum_k N_k (k + 1)`.
    pub fn dimension(&self) -> BigInt {
        self.0.iter().map(|(k, n)| n * BigInt::from(k + 1)).sum()
    }
}

fn principal_element_matches(rs: &RootSystem, pe: &PrincipalElement) -> Result<()> {
    if pe.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            found: pe.rank(),
        });
    }
    Ok(())
}

/// Principal specialization
/// `prod_{coroots} [<lambda + rho, a>]_q / [<rho, a>]_q`.
pub fn principal_character(
    rs: &RootSystem,
    pe: &PrincipalElement,
    lambda: &Weight,
) -> Result<CharacterPoly> {
    principal_element_matches(rs, pe)?;
    lambda.check_dominant()?;
    let shifted = Weight(lambda.coords().iter().map(|c| c + 1).collect());
    let rho = rs.rho();
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for root in rs.positive_roots() {
        let a = rs.pair_coroot(&shifted, &root.coroot)?;
        let b = rs.pair_coroot(&rho, &root.coroot)?;
        num = &num * &LaurentPoly::q_integer(a as u64);
        den = &den * &LaurentPoly::q_integer(b as u64);
    }
    let p = CharacterPoly::new(num.div_exact(&den)?)?;
    let top = pe.restrict(lambda)?;
    if p.degree() != top {
        return Err(Error::Inconsistent(format!(
            "top degree {} differs from lambda(h0) = {top}",
            p.degree()
        )));
    }
    Ok(p)
}

/// `N_k = coeff(k) - coeff(k + 2)`.
pub fn sl2_decompose(p: &CharacterPoly) -> Result<Sl2Decomposition> {
    let mut out = BTreeMap::new();
    for (e, _) in p.poly().terms().filter(|(e, _)| *e >= 0) {
        let n = p.coeff(e) - p.coeff(e + 2);
        if n.is_negative() {
            return Err(Error::Inconsistent(format!(
                "negative sl2 multiplicity N_{e} = {n} in {p}"
            )));
        }
        if !n.is_zero() {
            out.insert(e as u64, n);
        }
    }
    let d = Sl2Decomposition(out);
    if d.dimension() != p.dimension() {
        return Err(Error::Inconsistent(
            "sl2 decomposition loses dimension".into(),
        ));
    }
    Ok(d)
}

/// `m_lambda = coeff(0) - coeff(2)`.
pub fn invariant_dimension(
    rs: &RootSystem,
    pe: &PrincipalElement,
    lambda: &Weight,
) -> Result<BigInt> {
    let p = principal_character(rs, pe, lambda)?;
    Ok(sl2_decompose(&p)?.multiplicity(0))
}

/// `(k, m_{k lambda})` for `k = 1..=kmax`.
pub fn ray_multiplicities(
    rs: &RootSystem,
    pe: &PrincipalElement,
    lambda: &Weight,
    kmax: u32,
) -> Result<Vec<(u32, BigInt)>> {
    lambda.check_dominant()?;
    (1..=kmax)
        .map(|k| Ok((k, invariant_dimension(rs, pe, &lambda.scaled(k as i64))?)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SaturationOutcome {
    Found {
        k: u32,
        mlambda: BigIntJson,
    },
    /// No `k <= kmax` has invariants. Says nothing about larger `k`.
    NoneUpTo {
        kmax: u32,
    },
}

impl SaturationOutcome {
    pub fn k(&self) -> Option<u32> {
        match self {
            SaturationOutcome::Found { k, .. } => Some(*k),
            SaturationOutcome::NoneUpTo { .. } => None,
        }
    }
}

/// Big integers serialize as JSON numbers when they fit in `u64`, otherwise
/// as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigIntJson(pub BigInt);

impl Serialize for BigIntJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

/// Smallest `k` in `1..=kmax` with `m_{k lambda} > 0`.
pub fn saturation_search(
    rs: &RootSystem,
    pe: &PrincipalElement,
    lambda: &Weight,
    kmax: u32,
) -> Result<SaturationOutcome> {
    if kmax == 0 {
        return Err(Error::Hypothesis("kmax must be at least 1".into()));
    }
    lambda.check_dominant()?;
    for k in 1..=kmax {
        let m = invariant_dimension(rs, pe, &lambda.scaled(k as i64))?;
        if m.is_positive() {
            return Ok(SaturationOutcome::Found {
                k,
                mlambda: BigIntJson(m),
            });
        }
    }
    Ok(SaturationOutcome::NoneUpTo { kmax })
}

/// Freudenthal's recursion on dominant weights followed by Weyl-orbit
/// expansion. Returns every weight of `V_lambda` with its multiplicity.
pub fn freudenthal_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
    max_dim: u128,
) -> Result<BTreeMap<Weight, u64>> {
    let dim = rs.weyl_dimension(lambda)?;
    let dim_u = dim.to_u128().unwrap_or(u128::MAX);
    if dim_u > max_dim {
        return Err(Error::GuardExceeded {
            guard: "oracle_max_dim",
            requested: dim_u,
            limit: max_dim,
        });
    }
    let form = IntegerForm::new(rs);
    let roots: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|r| rs.root_to_weight(&r.root).0)
        .collect();

    // Dominant weights below lambda, reached by subtracting positive roots.
    let mut dominant: Vec<Vec<i64>> = vec![lambda.0.clone()];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([lambda.0.clone()]);
    let mut queue = VecDeque::from([lambda.0.clone()]);
    while let Some(mu) = queue.pop_front() {
        for r in &roots {
            let nu: Vec<i64> = mu.iter().zip(r).map(|(a, b)| a - b).collect();
            if nu.iter().all(|&c| c >= 0) && seen.insert(nu.clone()) {
                dominant.push(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let height = |mu: &[i64]| -> BigInt {
        let diff: Vec<i64> = lambda.0.iter().zip(mu).map(|(a, b)| a - b).collect();
        rs.cartan_inv()
            .iter()
            .flat_map(|row| row.iter().zip(&diff).map(|(a, &d)| a * BigInt::from(d)))
            .sum::<num_rational::BigRational>()
            .to_integer()
    };
    dominant.sort_by_cached_key(|mu| height(mu));

    let lr: Vec<i64> = lambda.0.iter().map(|c| c + 1).collect();
    let norm_lr = form.eval(&lr, &lr);
    let mut mult: HashMap<Vec<i64>, i128> = HashMap::new();
    mult.insert(lambda.0.clone(), 1);
    for mu in dominant.iter().skip(1) {
        let mut acc: i128 = 0;
        for r in &roots {
            let mut k = 1;
            loop {
                let nu: Vec<i64> = mu.iter().zip(r).map(|(a, b)| a + k * b).collect();
                let Some(&m) = mult.get(&dominant_rep(rs, &nu)) else {
                    break;
                };
                acc += m * form.eval(&nu, r);
                k += 1;
            }
        }
        let mr: Vec<i64> = mu.iter().map(|c| c + 1).collect();
        let gap = norm_lr - form.eval(&mr, &mr);
        if gap <= 0 || (2 * acc) % gap != 0 {
            return Err(Error::Inconsistent(format!(
                "Freudenthal recursion is not integral at {mu:?}"
            )));
        }
        mult.insert(mu.clone(), 2 * acc / gap);
    }

    let mut out = BTreeMap::new();
    for mu in &dominant {
        let m = mult[mu];
        if m == 0 {
            continue;
        }
        for nu in weyl_orbit(rs, mu) {
            out.insert(Weight(nu), m as u64);
        }
    }
    let total: u128 = out.values().map(|&m| m as u128).sum();
    if total != dim_u {
        return Err(Error::Inconsistent(format!(
            "weight multiplicities sum to {total}, Weyl dimension is {dim}"
        )));
    }
    Ok(out)
}

/// `sum_mu mult(mu) q^(mu(h0))`.
pub fn pushforward(
    pe: &PrincipalElement,
    weights: &BTreeMap<Weight, u64>,
) -> Result<CharacterPoly> {
    let terms = weights
        .iter()
        .map(|(mu, &m)| Ok((pe.restrict(mu)?, BigInt::from(m))))
        .collect::<Result<Vec<_>>>()?;
    CharacterPoly::new(LaurentPoly::from_terms(terms))
}

/// The invariant form scaled to integers on fundamental-weight coordinates.
struct IntegerForm {
    gram: Vec<Vec<i128>>,
}

impl IntegerForm {
    fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let inv = rs.cartan_inv();
        let mut denom = BigInt::one();
        for row in inv {
            for v in row {
                denom = denom.lcm(v.denom());
            }
        }
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        let v = &inv[k][i] * BigInt::from(rs.half_norms()[k]) * &denom;
                        v.to_integer().to_i128().expect("small Gram entry")
                    })
                    .collect()
            })
            .collect();
        IntegerForm { gram }
    }

    fn eval(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (k, &yk) in y.iter().enumerate() {
                acc += xi as i128 * yk as i128 * self.gram[i][k];
            }
        }
        acc
    }
}

fn dominant_rep(rs: &RootSystem, mu: &[i64]) -> Vec<i64> {
    let mut v = mu.to_vec();
    while let Some(i) = v.iter().position(|&c| c < 0) {
        let vi = v[i];
        for (c, row) in v.iter_mut().zip(rs.cartan()) {
            *c -= vi * row[i];
        }
    }
    v
}

fn weyl_orbit(rs: &RootSystem, mu: &[i64]) -> Vec<Vec<i64>> {
    let mut seen = vec![mu.to_vec()];
    let mut k = 0;
    while k < seen.len() {
        let v = seen[k].clone();
        for i in 0..v.len() {
            if v[i] == 0 {
                continue;
            }
            let w: Vec<i64> = v
                .iter()
                .zip(rs.cartan())
                .map(|(c, row)| c - v[i] * row[i])
                .collect();
            if !seen.contains(&w) {
                seen.push(w);
            }
        }
        k += 1;
    }
    seen
}
