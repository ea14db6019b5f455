//! Classification of a single line bundle `L_lambda` on `G/B` under the
//! principal subgroup `S`.
//!
//! Everything reduces to the integers `(w lambda)(h0)` for `w` in `W`:
//! the Kirwan strata of the unstable locus are indexed by the elements with a
//! positive value, a stratum indexed by `w` has dimension `l(w) + 1`, and the
//! codimension of the unstable locus is `min { l(w) : (w lambda)(h0) < 0 } - 1`.

use serde::Serialize;

use crate::chambers::Sign;
use crate::error::{Error, Result};
use crate::flag::FlagVariety;
use crate::rootsys::{CartanType, Family, RationalWeight, Weight};
use crate::weyl::ElementId;

/// `W = W+ ⊔ W0 ⊔ W-` according to the sign of `(w lambda)(h0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylPartition {
    pub lambda: Weight,
    /// Indexed by element id.
    pub values: Vec<i64>,
    pub plus: Vec<ElementId>,
    pub zero: Vec<ElementId>,
    pub minus: Vec<ElementId>,
}

impl WeylPartition {
    fn compute(fv: &FlagVariety, lambda: &Weight) -> Self {
        let values: Vec<i64> = (0..fv.weyl().order())
            .map(|w| fv.value(w, lambda))
            .collect();
        let (mut plus, mut zero, mut minus) = (Vec::new(), Vec::new(), Vec::new());
        for (w, &v) in values.iter().enumerate() {
            match v.signum() {
                1 => plus.push(w),
                0 => zero.push(w),
                _ => minus.push(w),
            }
        }
        WeylPartition {
            lambda: lambda.clone(),
            values,
            plus,
            zero,
            minus,
        }
    }
}

fn check_rank(fv: &FlagVariety, lambda: &Weight) -> Result<()> {
    if lambda.rank() != fv.rank() {
        return Err(Error::RankMismatch {
            expected: fv.rank(),
            found: lambda.rank(),
        });
    }
    Ok(())
}

/// Partition of `W` for a strictly dominant weight.
pub fn partition_weyl(fv: &FlagVariety, lambda: &Weight) -> Result<WeylPartition> {
    check_rank(fv, lambda)?;
    lambda.check_strictly_dominant()?;
    Ok(WeylPartition::compute(fv, lambda))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    #[serde(skip)]
    pub element: ElementId,
    #[serde(rename = "w")]
    pub word: String,
    #[serde(rename = "len")]
    pub length: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StrataReport {
    pub lambda: Weight,
    #[serde(rename = "dimX")]
    pub dim_x: usize,
    pub strata: Vec<Stratum>,
    pub dim_unstable: usize,
    /// `None` stands for an empty `W-`, which cannot happen for a nonzero
    /// dominant weight.
    #[serde(rename = "codim")]
    pub codim_unstable: Option<usize>,
    pub movable: bool,
    pub semistable_nonempty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special_case: Option<String>,
}

/// Kirwan strata, dimension and codimension of the unstable locus.
pub fn strata_report(fv: &FlagVariety, partition: &WeylPartition) -> StrataReport {
    let weyl = fv.weyl();
    // Element ids are already in (length, shortlex) order.
    let strata: Vec<Stratum> = partition
        .plus
        .iter()
        .map(|&w| Stratum {
            element: w,
            word: weyl.word_string(w),
            length: weyl.length(w),
            dim: weyl.length(w) + 1,
        })
        .collect();
    let dim_unstable = strata.iter().map(|s| s.dim).max().unwrap_or(0);
    let codim_unstable = partition
        .minus
        .iter()
        .map(|&w| weyl.length(w))
        .min()
        .map(|l| l.saturating_sub(1));
    let semistable_nonempty = codim_unstable.is_none_or(|c| c >= 1);
    let movable = codim_unstable.is_none_or(|c| c >= 2);
    let special_case = is_a1xa1(fv).then(|| {
        "A1xA1: semistable points exist exactly when s1 lambda(h0) = s2 lambda(h0) = 0".to_string()
    });
    StrataReport {
        lambda: partition.lambda.clone(),
        dim_x: fv.dim(),
        strata,
        dim_unstable,
        codim_unstable,
        movable,
        semistable_nonempty,
        special_case,
    }
}

/// Strata report for a strictly dominant weight; the zero weight is rejected.
pub fn strata(fv: &FlagVariety, lambda: &Weight) -> Result<StrataReport> {
    if lambda.is_zero() {
        return Err(Error::Hypothesis("the zero weight is not ample".into()));
    }
    let p = partition_weyl(fv, lambda)?;
    Ok(strata_report(fv, &p))
}

fn is_a1xa1(fv: &FlagVariety) -> bool {
    let c = fv.cartan_type().components();
    c.len() == 2 && c.iter().all(|s| s.family == Family::A && s.rank == 1)
}

/// Membership of a dominant weight in the eigencone: `(s_alpha lambda)(h0) >= 0`
/// for every simple root orthogonal to all the others.
pub fn semistable_nonempty(fv: &FlagVariety, lambda: &Weight) -> Result<bool> {
    check_rank(fv, lambda)?;
    lambda.check_dominant()?;
    let weyl = fv.weyl();
    Ok(fv
        .root_system()
        .isolated_nodes()
        .into_iter()
        .all(|a| fv.value(weyl.right_mul(weyl.identity(), a), lambda) >= 0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MovabilityWitness {
    /// Shortest element of `W-` (canonical order).
    pub element: String,
    pub length: usize,
    /// One-based simple roots `(alpha, beta)` with `(s_alpha s_beta lambda)(h0) < 0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Movability {
    pub movable: bool,
    pub codim: Option<usize>,
    /// Whether the pairwise criterion was applicable (the bundle is `S`-ample).
    pub criterion_checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<MovabilityWitness>,
}

/// Ordered pairs `(alpha, beta)` of distinct simple roots whose functional
/// `lambda -> (s_alpha s_beta lambda)(h0)` has a negative coefficient. Only
/// these can go negative on a dominant weight; length one elements never do.
pub fn criterion_pairs(fv: &FlagVariety) -> Vec<(usize, usize)> {
    let weyl = fv.weyl();
    let n = fv.rank();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in (0..n).filter(|&b| b != a) {
            let w = weyl.from_word(&[a, b]).expect("valid nodes");
            if fv.value_row(w).iter().any(|&c| c < 0) {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

/// Whether every ample line bundle is movable, i.e. no pairwise functional
/// can be negative. Fails when some factor is A2, C2 or A3, or an A1
/// factor sits next to another factor.
pub fn all_ample_movable(fv: &FlagVariety) -> bool {
    criterion_pairs(fv).is_empty()
}

/// Movability of `L_lambda` (codimension of the unstable locus at least 2).
///
/// The answer comes from the codimension formula; when the bundle is
/// `S`-ample the pairwise criterion on `s_alpha s_beta` is evaluated as well
/// and a disagreement is reported as an internal error.
pub fn is_movable(fv: &FlagVariety, lambda: &Weight) -> Result<Movability> {
    let report = strata(fv, lambda)?;
    let weyl = fv.weyl();
    let p = partition_weyl(fv, lambda)?;

    let violating_pair = criterion_pairs(fv).into_iter().find(|&(a, b)| {
        let w = weyl.from_word(&[a, b]).expect("valid nodes");
        p.values[w] < 0
    });
    let criterion_checked = report.semistable_nonempty;
    if criterion_checked && violating_pair.is_none() != report.movable {
        return Err(Error::Inconsistent(format!(
            "movability criterion disagrees with the codimension formula at {lambda}"
        )));
    }
    let witness = (!report.movable).then(|| {
        let w = *p.minus.first().expect("W- is nonempty");
        MovabilityWitness {
            element: weyl.word_string(w),
            length: weyl.length(w),
            pair: violating_pair.map(|(a, b)| (a + 1, b + 1)),
        }
    });
    Ok(Movability {
        movable: report.movable,
        codim: report.codim_unstable,
        criterion_checked,
        witness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    Chamber,
    WallFace,
    /// `dim X < 3`: the chamber criterion does not apply.
    LowDimUndetermined,
}

impl ClassKind {
    pub fn from_zero_set(dim_x: usize, zero_set_empty: bool) -> Self {
        if dim_x < 3 {
            ClassKind::LowDimUndetermined
        } else if zero_set_empty {
            ClassKind::Chamber
        } else {
            ClassKind::WallFace
        }
    }
}

/// A GIT-equivalence class of ample line bundles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GitClass {
    pub signature: Vec<Sign>,
    pub kind: ClassKind,
    pub representative: RationalWeight,
    /// `W0` of the representative.
    pub zero_set: Vec<ElementId>,
}

impl GitClass {
    pub fn signature_string(&self) -> String {
        self.signature.iter().map(|s| s.as_char()).collect()
    }
}

/// The class of a strictly dominant weight.
pub fn git_signature(fv: &FlagVariety, lambda: &Weight) -> Result<GitClass> {
    let p = partition_weyl(fv, lambda)?;
    let signature = fv.hyperplanes().signature(lambda);
    Ok(GitClass {
        kind: ClassKind::from_zero_set(fv.dim(), p.zero.is_empty()),
        signature,
        representative: RationalWeight::from(lambda),
        zero_set: p.zero,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OrbitCensus {
    /// Number of one-dimensional `S`-orbits (the closed orbit).
    pub curves: usize,
    pub surfaces: u128,
    #[serde(rename = "dimX")]
    pub dim_x: usize,
}

impl OrbitCensus {
    /// Counts of low-dimensional `S`-orbits on `X`: one closed curve and
    /// `|W|/2 - 1` two-dimensional orbits. Needs only the order of `W`, so
    /// no enumeration is involved. Requires `dim X >= 3`.
    pub fn for_type(cartan_type: &CartanType) -> Result<Self> {
        let dim_x = cartan_type.num_positive_roots();
        if dim_x < 3 {
            return Err(Error::Hypothesis(format!(
                "orbit census needs dim X >= 3, {cartan_type} has dim X = {dim_x}"
            )));
        }
        Ok(OrbitCensus {
            curves: 1,
            surfaces: cartan_type.weyl_order() / 2 - 1,
            dim_x,
        })
    }
}

/// [`OrbitCensus::for_type`], checked against the enumerated group.
pub fn orbit_census(fv: &FlagVariety) -> Result<OrbitCensus> {
    let census = OrbitCensus::for_type(fv.cartan_type())?;
    if census.surfaces + 1 != fv.weyl().order() as u128 / 2 {
        return Err(Error::Inconsistent(
            "Weyl group order disagrees with its formula".into(),
        ));
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(t: &str) -> FlagVariety {
        FlagVariety::parse(t).unwrap()
    }

    fn words(fv: &FlagVariety, ids: &[ElementId]) -> Vec<String> {
        ids.iter().map(|&w| fv.weyl().word_string(w)).collect()
    }

    #[test]
    fn a2_partition() {
        let a2 = fv("A2");
        let p = partition_weyl(&a2, &Weight(vec![1, 1])).unwrap();
        assert_eq!(words(&a2, &p.plus), ["e", "s1", "s2"]);
        assert!(p.zero.is_empty());
        assert_eq!(words(&a2, &p.minus), ["s1.s2", "s2.s1", "s1.s2.s1"]);
        assert_eq!(p.values, vec![4, 2, 2, -2, -2, -4]);
    }

    #[test]
    fn c2_partitions() {
        let c2 = fv("C2");
        let p = partition_weyl(&c2, &Weight(vec![2, 1])).unwrap();
        assert_eq!(words(&c2, &p.zero), ["s1.s2", "s2.s1"]);
        let p = partition_weyl(&c2, &Weight(vec![3, 1])).unwrap();
        assert!(p.zero.is_empty());
        assert_eq!(p.plus.len(), 4);
        assert!(matches!(
            partition_weyl(&c2, &Weight(vec![2, 0])),
            Err(Error::NotStrictlyDominant {
                coordinate: 2,
                value: 0
            })
        ));
    }

    #[test]
    fn strata_examples() {
        let a2 = fv("A2");
        let r = strata(&a2, &Weight(vec![1, 1])).unwrap();
        let dims: Vec<usize> = r.strata.iter().map(|s| s.dim).collect();
        assert_eq!(dims, vec![1, 2, 2]);
        assert_eq!((r.dim_unstable, r.codim_unstable), (2, Some(1)));

        let c2 = fv("C2");
        let r = strata(&c2, &Weight(vec![3, 1])).unwrap();
        assert_eq!(r.codim_unstable, Some(1));
        let top: Vec<&Stratum> = r.strata.iter().filter(|s| s.length == 2).collect();
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].dim, 3);

        let r = strata(&c2, &Weight(vec![2, 1])).unwrap();
        assert_eq!((r.codim_unstable, r.dim_unstable), (Some(2), 2));
        assert!(r.movable);
    }

    #[test]
    fn zero_weight_is_rejected() {
        assert!(matches!(
            strata(&fv("A2"), &Weight(vec![0, 0])),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn eigencone_examples() {
        let a1a1 = fv("A1xA1");
        assert!(semistable_nonempty(&a1a1, &Weight(vec![1, 1])).unwrap());
        assert!(!semistable_nonempty(&a1a1, &Weight(vec![2, 1])).unwrap());
        let b3 = fv("B3");
        assert!(semistable_nonempty(&b3, &Weight(vec![0, 7, 1])).unwrap());
        let a1 = fv("A1");
        assert!(!semistable_nonempty(&a1, &Weight(vec![3])).unwrap());
        assert!(semistable_nonempty(&a1, &Weight(vec![0])).unwrap());
        assert!(matches!(
            semistable_nonempty(&b3, &Weight(vec![0, -1, 1])),
            Err(Error::NotDominant { .. })
        ));
    }

    #[test]
    fn a1xa1_is_flagged() {
        let r = strata(&fv("A1xA1"), &Weight(vec![2, 2])).unwrap();
        assert!(r.special_case.is_some());
        assert!(r.semistable_nonempty);
        assert_eq!(r.codim_unstable, Some(1));
        let r = strata(&fv("A1xA1"), &Weight(vec![2, 1])).unwrap();
        assert!(!r.semistable_nonempty);
    }

    #[test]
    fn movability_examples() {
        assert!(
            is_movable(&fv("A3"), &Weight(vec![1, 1, 1]))
                .unwrap()
                .movable
        );
        assert!(is_movable(&fv("C2"), &Weight(vec![2, 1])).unwrap().movable);
        let m = is_movable(&fv("C2"), &Weight(vec![1, 1])).unwrap();
        assert!(!m.movable);
        let w = m.witness.unwrap();
        assert_eq!(w.length, 2);
        assert_eq!(w.element, "s1.s2");
        assert_eq!(w.pair, Some((1, 2)));
    }

    #[test]
    fn a3_has_a_non_movable_ample_bundle() {
        let a3 = fv("A3");
        assert_eq!(criterion_pairs(&a3), [(1, 0), (1, 2)]);
        let m = is_movable(&a3, &Weight(vec![8, 1, 1])).unwrap();
        assert!(!m.movable);
        assert_eq!(m.codim, Some(1));
        assert_eq!(m.witness.unwrap().pair, Some((2, 1)));
        assert!(is_movable(&a3, &Weight(vec![2, 1, 2])).unwrap().movable);
    }

    #[test]
    fn types_with_every_ample_bundle_movable() {
        for t in [
            "B3", "C3", "D4", "G2", "F4", "G2xB3", "A4", "A5", "B4", "C4", "D5",
        ] {
            assert!(all_ample_movable(&fv(t)), "{t}");
        }
        for t in ["A2", "C2", "A3", "A3xG2", "A1xB3", "A1xA1"] {
            assert!(!all_ample_movable(&fv(t)), "{t}");
        }
    }

    #[test]
    fn movability_criterion_agrees_on_small_factors() {
        for t in [
            "A2", "C2", "A3", "A1xA2", "A1xC2", "A2xA2", "A1xA1", "A1xG2",
        ] {
            let f = fv(t);
            let n = f.rank();
            let mut lambda = vec![1i64; n];
            loop {
                is_movable(&f, &Weight(lambda.clone())).unwrap();
                let mut k = 0;
                while k < n && lambda[k] == 4 {
                    lambda[k] = 1;
                    k += 1;
                }
                if k == n {
                    break;
                }
                lambda[k] += 1;
            }
        }
    }

    #[test]
    fn signatures() {
        let a2 = fv("A2");
        assert_eq!(
            git_signature(&a2, &Weight(vec![1, 1])).unwrap().signature,
            git_signature(&a2, &Weight(vec![5, 2])).unwrap().signature
        );
        let c2 = fv("C2");
        let s31 = git_signature(&c2, &Weight(vec![3, 1])).unwrap();
        let s11 = git_signature(&c2, &Weight(vec![1, 1])).unwrap();
        assert_ne!(s31.signature, s11.signature);
        assert_eq!(s31.kind, ClassKind::Chamber);
        assert_eq!(
            git_signature(&c2, &Weight(vec![2, 1])).unwrap().kind,
            ClassKind::WallFace
        );
        assert_eq!(
            git_signature(&fv("A1xA1"), &Weight(vec![1, 1]))
                .unwrap()
                .kind,
            ClassKind::LowDimUndetermined
        );
    }

    #[test]
    fn census() {
        let c = |t: &str| orbit_census(&fv(t)).unwrap();
        assert_eq!(
            c("A2"),
            OrbitCensus {
                curves: 1,
                surfaces: 2,
                dim_x: 3
            }
        );
        assert_eq!(
            c("C2"),
            OrbitCensus {
                curves: 1,
                surfaces: 3,
                dim_x: 4
            }
        );
        assert_eq!(
            c("A3"),
            OrbitCensus {
                curves: 1,
                surfaces: 11,
                dim_x: 6
            }
        );
        assert!(matches!(orbit_census(&fv("A1")), Err(Error::Hypothesis(_))));
        assert!(matches!(
            orbit_census(&fv("A1xA1")),
            Err(Error::Hypothesis(_))
        ));
    }
}
