//! GIT-equivalence classes of ample line bundles.
//!
//! Inside the eigencone the classes are the faces cut out by the hyperplanes
//! `H_w = { lambda : lambda(w h0) = 0 }`. Each hyperplane is stored once as a
//! primitive integer covector with its first nonzero entry positive; a class
//! is identified by its sign vector over that list.
//!
//! Classes are enumerated by a depth-first assignment of signs with exact
//! feasibility pruning. The current witness point settles one branch at every
//! level for free, so elimination runs only for the other two.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::feasibility::{find_point, Inequality};
use crate::flag::FlagVariety;
use crate::git::{ClassKind, GitClass};
use crate::rootsys::{RationalWeight, Weight};
use crate::weyl::ElementId;

/// Default bound on the rank for chamber enumeration.
pub const DEFAULT_CHAMBER_RANK_GUARD: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Zero,
    Minus,
}

impl Sign {
    pub fn of<T: Signed + Zero>(v: &T) -> Self {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Zero => '0',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '+' => Some(Sign::Plus),
            '0' => Some(Sign::Zero),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }

    fn times(self, orientation: i8) -> Self {
        match (self, orientation < 0) {
            (Sign::Plus, true) => Sign::Minus,
            (Sign::Minus, true) => Sign::Plus,
            (s, _) => s,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The deduplicated hyperplanes `H_w`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HyperplaneFamily {
    functionals: Vec<Vec<i64>>,
    /// For each Weyl element: (functional id, orientation) with
    /// `(w lambda)(h0) = orientation * scale * functional(lambda)`, `scale > 0`.
    /// Since `(w lambda)(h0) = lambda(w^{-1} h0)` this covers every `H_w`.
    index: Vec<(usize, i8)>,
}

impl HyperplaneFamily {
    pub(crate) fn build(fv: &FlagVariety) -> Self {
        let weyl = fv.weyl();
        let mut lookup: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut functionals = Vec::new();
        let mut index = Vec::with_capacity(weyl.order());
        for w in 0..weyl.order() {
            let (primitive, orientation) = normalize(fv.value_row(w));
            let id = *lookup.entry(primitive.clone()).or_insert_with(|| {
                functionals.push(primitive);
                functionals.len() - 1
            });
            index.push((id, orientation));
        }
        HyperplaneFamily { functionals, index }
    }

    pub fn functionals(&self) -> &[Vec<i64>] {
        &self.functionals
    }

    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    /// Functional id and orientation of `lambda -> (w lambda)(h0)`.
    pub fn of_element(&self, w: ElementId) -> (usize, i8) {
        self.index[w]
    }

    pub fn signature(&self, lambda: &Weight) -> Vec<Sign> {
        self.functionals
            .iter()
            .map(|f| Sign::of(&dot(f, lambda.coords())))
            .collect()
    }

    pub fn signature_rational(&self, lambda: &[BigRational]) -> Vec<Sign> {
        self.functionals
            .iter()
            .map(|f| Sign::of(&dot_rational(f, lambda)))
            .collect()
    }

    /// `W0` of a class: elements whose hyperplane has sign zero.
    pub fn zero_set(&self, signature: &[Sign]) -> Vec<ElementId> {
        self.index
            .iter()
            .enumerate()
            .filter(|(_, (id, _))| signature[*id] == Sign::Zero)
            .map(|(w, _)| w)
            .collect()
    }

    /// The sign of `(w lambda)(h0)` on a class with the given signature.
    pub fn element_sign(&self, signature: &[Sign], w: ElementId) -> Sign {
        let (id, orientation) = self.index[w];
        signature[id].times(orientation)
    }
}

fn normalize(row: &[i64]) -> (Vec<i64>, i8) {
    let g = row.iter().fold(0i64, |acc, v| acc.gcd(v));
    let lead = row.iter().find(|&&v| v != 0).copied().unwrap_or(1);
    let orientation: i8 = if lead < 0 { -1 } else { 1 };
    let primitive = row.iter().map(|v| v / g * orientation as i64).collect();
    (primitive, orientation)
}

fn dot(f: &[i64], x: &[i64]) -> i64 {
    f.iter().zip(x).map(|(a, b)| a * b).sum()
}

fn dot_rational(f: &[i64], x: &[BigRational]) -> BigRational {
    f.iter().zip(x).map(|(&a, b)| b * BigInt::from(a)).sum()
}

fn sign_constraint(f: &[i64], s: Sign) -> Vec<Inequality> {
    match s {
        Sign::Plus => vec![Inequality::positive(f)],
        Sign::Minus => {
            let neg: Vec<i64> = f.iter().map(|c| -c).collect();
            vec![Inequality::positive(&neg)]
        }
        Sign::Zero => Inequality::zero(f).to_vec(),
    }
}

/// The open dominant cone intersected with the eigencone: `x_i > 0` and
/// `lambda(s_alpha h0) >= 0` for simple roots of rank-one factors.
fn base_constraints(fv: &FlagVariety) -> Vec<Inequality> {
    let n = fv.rank();
    let mut out: Vec<Inequality> = (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            Inequality::positive(&e)
        })
        .collect();
    let weyl = fv.weyl();
    for a in fv.root_system().isolated_nodes() {
        let s = weyl.right_mul(weyl.identity(), a);
        out.push(Inequality::nonnegative(fv.value_row(s)));
    }
    out
}

#[derive(Debug, Clone)]
pub struct ClassEnumeration {
    pub classes: Vec<GitClass>,
    pub num_chambers: usize,
    pub num_wall_faces: usize,
    pub num_undetermined: usize,
    pub notes: Vec<String>,
}

impl ClassEnumeration {
    pub fn chambers(&self) -> impl Iterator<Item = &GitClass> {
        self.classes.iter().filter(|c| c.kind == ClassKind::Chamber)
    }

    pub fn find(&self, signature: &str) -> Option<&GitClass> {
        self.classes
            .iter()
            .find(|c| c.signature_string() == signature)
    }
}

/// All GIT-classes of ample, `S`-ample line bundles, sorted by signature.
pub fn enumerate_git_classes(fv: &FlagVariety, rank_guard: usize) -> Result<ClassEnumeration> {
    if fv.rank() > rank_guard {
        return Err(Error::GuardExceeded {
            guard: "chamber rank",
            requested: fv.rank() as u128,
            limit: rank_guard as u128,
        });
    }
    let n = fv.rank();
    let family = fv.hyperplanes();
    let base = base_constraints(fv);
    let mut notes = Vec::new();
    let mut classes = Vec::new();

    match find_point(&base, n) {
        None => notes.push(
            "the open dominant cone does not meet the eigencone: no ample S-ample classes".into(),
        ),
        Some(start) => {
            let mut signs = Vec::with_capacity(family.len());
            let mut out = Vec::new();
            descend(fv, &base, start, &mut signs, &mut out);
            for (signature, point) in out {
                let zero_set = family.zero_set(&signature);
                let kind = ClassKind::from_zero_set(fv.dim(), zero_set.is_empty());
                classes.push(GitClass {
                    signature,
                    kind,
                    representative: primitive_representative(&point),
                    zero_set,
                });
            }
        }
    }
    if fv.dim() < 3 {
        notes.push(format!(
            "dim X = {} < 3: chamber/wall kinds are not determined",
            fv.dim()
        ));
    }
    classes.sort_by_key(|c| c.signature_string());
    let count = |k| classes.iter().filter(|c| c.kind == k).count();
    Ok(ClassEnumeration {
        num_chambers: count(ClassKind::Chamber),
        num_wall_faces: count(ClassKind::WallFace),
        num_undetermined: count(ClassKind::LowDimUndetermined),
        classes,
        notes,
    })
}

fn descend(
    fv: &FlagVariety,
    system: &[Inequality],
    witness: Vec<BigRational>,
    signs: &mut Vec<Sign>,
    out: &mut Vec<(Vec<Sign>, Vec<BigRational>)>,
) {
    let family = fv.hyperplanes();
    let depth = signs.len();
    if depth == family.len() {
        out.push((signs.clone(), witness));
        return;
    }
    let f = &family.functionals()[depth];
    let current = Sign::of(&dot_rational(f, &witness));
    for s in [Sign::Plus, Sign::Zero, Sign::Minus] {
        let mut next = system.to_vec();
        next.extend(sign_constraint(f, s));
        let point = if s == current {
            Some(witness.clone())
        } else {
            find_point(&next, fv.rank())
        };
        if let Some(p) = point {
            signs.push(s);
            descend(fv, &next, p, signs, out);
            signs.pop();
        }
    }
}

fn primitive_representative(point: &[BigRational]) -> RationalWeight {
    let ints = RationalWeight(point.to_vec()).primitive_integer();
    RationalWeight(ints.into_iter().map(BigRational::from_integer).collect())
}

/// One inequality `coeffs . lambda >= 0` of a cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeInequality {
    pub coeffs: Vec<i64>,
    /// Index into the hyperplane list, when the inequality is a hyperplane.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyperplane: Option<usize>,
    /// One-based coordinate, when it is a wall of the dominant cone.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinate: Option<usize>,
}

/// Cones of divisors on the quotient `Y` of a chamber, expressed in the
/// weight lattice through the isomorphism of Picard groups: the nef cone is
/// the closure of the chamber and the effective and movable cones coincide
/// with the dominant cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeReport {
    pub signature: String,
    pub nef: Vec<ConeInequality>,
    #[serde(rename = "effMov")]
    pub eff_mov: Vec<ConeInequality>,
    pub notes: Vec<String>,
}

pub fn quotient_cone_report(fv: &FlagVariety, class: &GitClass) -> Result<ConeReport> {
    if !fv.cartan_type().all_factors_large() {
        return Err(Error::Hypothesis(format!(
            "{} has a simple factor of type A1, A2 or C2; the Picard groups of X and \
             of the quotient are not isomorphic there",
            fv.cartan_type()
        )));
    }
    if let Some(&(a, b)) = crate::git::criterion_pairs(fv).first() {
        return Err(Error::Hypothesis(format!(
            "{}: (s{} s{} lambda)(h0) is negative for some ample lambda, so not every \
             ample bundle is movable and the effective cone is not the dominant cone",
            fv.cartan_type(),
            a + 1,
            b + 1
        )));
    }
    if class.kind != ClassKind::Chamber {
        return Err(Error::Hypothesis(format!(
            "class {} is not a chamber",
            class.signature_string()
        )));
    }
    let n = fv.rank();
    let family = fv.hyperplanes();

    let mut candidates: Vec<ConeInequality> = Vec::new();
    for (k, f) in family.functionals().iter().enumerate() {
        let coeffs: Vec<i64> = match class.signature[k] {
            Sign::Plus => f.clone(),
            Sign::Minus => f.iter().map(|c| -c).collect(),
            Sign::Zero => unreachable!("chambers have no zero signs"),
        };
        candidates.push(ConeInequality {
            coeffs,
            hyperplane: Some(k),
            coordinate: None,
        });
    }
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        match candidates.iter_mut().find(|c| c.coeffs == e) {
            Some(c) => c.coordinate = Some(i + 1),
            None => candidates.push(ConeInequality {
                coeffs: e,
                hyperplane: None,
                coordinate: Some(i + 1),
            }),
        }
    }

    // A closed-cone inequality is a facet iff dropping it lets it fail.
    let nef = candidates
        .iter()
        .enumerate()
        .filter(|(k, c)| {
            let mut sys: Vec<Inequality> = candidates
                .iter()
                .enumerate()
                .filter(|(j, _)| j != k)
                .map(|(_, o)| Inequality::nonnegative(&o.coeffs))
                .collect();
            let neg: Vec<i64> = c.coeffs.iter().map(|v| -v).collect();
            sys.push(Inequality::positive(&neg));
            find_point(&sys, n).is_some()
        })
        .map(|(_, c)| c.clone())
        .collect();

    let eff_mov = (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            ConeInequality {
                coeffs: e,
                hyperplane: None,
                coordinate: Some(i + 1),
            }
        })
        .collect();

    Ok(ConeReport {
        signature: class.signature_string(),
        nef,
        eff_mov,
        notes: vec![
            "the quotient is a Mori dream space".into(),
            "every nef class on the quotient is semiample".into(),
        ],
    })
}

/// `true` if the rational point lies in the open dominant cone and the
/// eigencone.
pub fn in_ample_eigencone(fv: &FlagVariety, point: &[BigRational]) -> bool {
    base_constraints(fv).iter().all(|c| {
        let lhs: BigRational = c.coeffs.iter().zip(point).map(|(a, v)| v * a).sum();
        if c.rhs.is_positive() {
            lhs.is_positive()
        } else {
            !lhs.is_negative()
        }
    })
}
