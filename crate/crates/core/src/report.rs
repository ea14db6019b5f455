//! Serializable reports behind the `pgit` subcommands, with JSON, TSV and
//! aligned-table renderings. Field order is fixed, so output for fixed input
//! is byte-identical across runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::chambers::{enumerate_git_classes, ClassEnumeration, ConeReport};
use crate::error::{Error, Result};
use crate::flag::FlagVariety;
use crate::git::{self, ClassKind, GitClass, Movability, OrbitCensus, StrataReport};
use crate::multiplicity::{self, BigIntJson, SaturationOutcome};
use crate::principal::{ComponentMinimum, PrincipalElement};
use crate::rootsys::{CartanType, RootSystem, Weight};
use crate::selftest::SelftestReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Tsv,
    Table,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            "table" => Ok(Format::Table),
            _ => Err(Error::parse(s, 0, "expected json, tsv or table")),
        }
    }
}

/// Key/value summary plus an optional table of rows.
pub trait Report: Serialize {
    fn summary(&self) -> Vec<(&'static str, String)>;

    fn rows(&self) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
        None
    }
}

pub fn render<R: Report>(report: &R, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut s = String::new();
            for (k, v) in report.summary() {
                let _ = writeln!(s, "# {k}\t{v}");
            }
            if let Some((header, rows)) = report.rows() {
                let _ = writeln!(s, "{}", header.join("\t"));
                for row in rows {
                    let _ = writeln!(s, "{}", row.join("\t"));
                }
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            let width = report
                .summary()
                .iter()
                .map(|(k, _)| k.len())
                .max()
                .unwrap_or(0);
            for (k, v) in report.summary() {
                let _ = writeln!(s, "{k:<width$}  {v}");
            }
            if let Some((header, rows)) = report.rows() {
                s.push('\n');
                let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
                for row in &rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.len());
                    }
                }
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                let _ = writeln!(s, "{}", line(header.clone()));
                for row in &rows {
                    let _ = writeln!(s, "{}", line(row.iter().map(String::as_str).collect()));
                }
            }
            s
        }
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// A map from small integers to big integers, serialized with decimal string
/// keys in numeric order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NumericKeyMap(pub Vec<(u64, BigInt)>);

impl Serialize for NumericKeyMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(&k.to_string(), &BigIntJson(v.clone()))?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InfoReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    #[serde(rename = "dimX")]
    pub dim_x: usize,
    pub weyl_order: u128,
    pub iota: Vec<i64>,
    pub min_values: Vec<ComponentMinimum>,
    pub census: Option<OrbitCensus>,
    pub notes: Vec<String>,
}

/// Rank, `dim X`, `|W|`, the restriction `iota`, `m(g)` per factor and the
/// orbit census. Works without enumerating `W`.
pub fn info(cartan_type: &CartanType) -> Result<InfoReport> {
    let rs = RootSystem::new(cartan_type.clone())?;
    let pe = PrincipalElement::new(&rs)?;
    let mut notes = Vec::new();
    let census = match OrbitCensus::for_type(cartan_type) {
        Ok(c) => Some(c),
        Err(Error::Hypothesis(reason)) => {
            notes.push(format!("orbit census suppressed: {reason}"));
            None
        }
        Err(e) => return Err(e),
    };
    Ok(InfoReport {
        cartan_type: cartan_type.to_string(),
        rank: rs.rank(),
        dim_x: rs.num_positive_roots(),
        weyl_order: cartan_type.weyl_order(),
        iota: pe.iota().to_vec(),
        min_values: pe.minima(),
        census,
        notes,
    })
}

impl Report for InfoReport {
    fn summary(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![
            ("type", self.cartan_type.clone()),
            ("rank", self.rank.to_string()),
            ("dimX", self.dim_x.to_string()),
            ("weylOrder", self.weyl_order.to_string()),
            ("iota", list(&self.iota)),
        ];
        match &self.census {
            Some(c) => out.push((
                "census",
                format!("curves={} surfaces={}", c.curves, c.surfaces),
            )),
            None => out.push(("census", "suppressed".into())),
        }
        out.extend(self.notes.iter().map(|n| ("note", n.clone())));
        out
    }

    fn rows(&self) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
        let rows = self
            .min_values
            .iter()
            .map(|m| vec![m.component.clone(), m.min_value.to_string()])
            .collect();
        Some((vec!["component", "m"], rows))
    }
}

impl Report for StrataReport {
    fn summary(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![
            ("lambda", list(self.lambda.coords())),
            ("dimX", self.dim_x.to_string()),
            ("dimUnstable", self.dim_unstable.to_string()),
            (
                "codim",
                self.codim_unstable.map_or("none".into(), |c| c.to_string()),
            ),
            ("movable", self.movable.to_string()),
            ("semistableNonempty", self.semistable_nonempty.to_string()),
        ];
        if let Some(note) = &self.special_case {
            out.push(("specialCase", note.clone()));
        }
        out
    }

    fn rows(&self) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
        let rows = self
            .strata
            .iter()
            .map(|s| vec![s.word.clone(), s.length.to_string(), s.dim.to_string()])
            .collect();
        Some((vec!["w", "len", "dim"], rows))
    }
}

/// The strata report extended by movability and the GIT class.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassifyReport {
    #[serde(flatten)]
    pub strata: StrataReport,
    pub movability: Movability,
    pub signature: String,
    pub kind: ClassKind,
    /// `W0` as reduced words.
    pub zero_set: Vec<String>,
}

pub fn classify(fv: &FlagVariety, lambda: &Weight) -> Result<ClassifyReport> {
    let strata = git::strata(fv, lambda)?;
    let movability = git::is_movable(fv, lambda)?;
    let class = git::git_signature(fv, lambda)?;
    Ok(ClassifyReport {
        strata,
        movability,
        signature: class.signature_string(),
        kind: class.kind,
        zero_set: class
            .zero_set
            .iter()
            .map(|&w| fv.weyl().word_string(w))
            .collect(),
    })
}

impl Report for ClassifyReport {
    fn summary(&self) -> Vec<(&'static str, String)> {
        let mut out = self.strata.summary();
        out.push(("signature", self.signature.clone()));
        out.push(("kind", kind_str(self.kind).into()));
        out.push(("zeroSet", format!("[{}]", self.zero_set.join(","))));
        if let Some(w) = &self.movability.witness {
            out.push(("witness", w.element.clone()));
        }
        out
    }

    fn rows(&self) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
        self.strata.rows()
    }
}

fn kind_str(kind: ClassKind) -> &'static str {
    match kind {
        ClassKind::Chamber => "chamber",
        ClassKind::WallFace => "wall-face",
        ClassKind::LowDimUndetermined => "low-dim-undetermined",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassEntry {
    pub signature: String,
    pub kind: ClassKind,
    pub rep: Vec<BigIntJson>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClassCounts {
    pub chambers: usize,
    pub walls: usize,
    pub undetermined: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChambersReport {
    pub hyperplanes: Vec<Vec<i64>>,
    pub classes: Vec<ClassEntry>,
    pub counts: ClassCounts,
    pub notes: Vec<String>,
}

impl ChambersReport {
    pub fn from_enumeration(fv: &FlagVariety, e: &ClassEnumeration) -> Self {
        let classes = e
            .classes
            .iter()
            .map(|c| ClassEntry {
                signature: c.signature_string(),
                kind: c.kind,
                rep: c
                    .representative
                    .primitive_integer()
                    .into_iter()
                    .map(BigIntJson)
                    .collect(),
            })
            .collect();
        ChambersReport {
            hyperplanes: fv.hyperplanes().functionals().to_vec(),
            classes,
            counts: ClassCounts {
                chambers: e.num_chambers,
                walls: e.num_wall_faces,
                undetermined: e.num_undetermined,
                total: e.classes.len(),
            },
            notes: e.notes.clone(),
        }
    }
}

pub fn chambers(fv: &FlagVariety, rank_guard: usize) -> Result<ChambersReport> {
    let e = enumerate_git_classes(fv, rank_guard)?;
    Ok(ChambersReport::from_enumeration(fv, &e))
}

impl Report for ChambersReport {
    fn summary(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![
            ("hyperplanes", self.hyperplanes.len().to_string()),
            ("chambers", self.counts.chambers.to_string()),
            ("walls", self.counts.walls.to_string()),
            ("undetermined", self.counts.undetermined.to_string()),
        ];
        out.extend(self.notes.iter().map(|n| ("note", n.clone())));
        out
    }

    fn rows(&self) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
        let rows = self
            .classes
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let rep: Vec<String> = c.rep.iter().map(|v| v.0.to_string()).collect();
                vec![
                    (k + 1).to_string(),
                    c.signature.clone(),
                    kind_str(c.kind).into(),
                    format!("[{}]", rep.join(",")),
                ]
            })
            .collect();
        Some((vec!["id", "signature", "kind", "rep"], rows))
    }
}

/// Looks a class up by one-based position in the sorted class list or by
/// signature string.
pub fn select_class<'a>(e: &'a ClassEnumeration, id: &str) -> Result<&'a GitClass> {
    if let Ok(k) = id.parse::<usize>() {
        return k
            .checked_sub(1)
            .and_then(|k| e.classes.get(k))
            .ok_or(Error::IndexOutOfRange {
                index: k,
                rank: e.classes.len(),
            });
    }
    e.find(id)
        .ok_or_else(|| Error::Hypothesis(format!("no GIT class with signature {id}")))
}

impl Report for ConeReport {
    fn summary(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("signature", self.signature.clone())];
        out.extend(self.notes.iter().map(|n| ("note", n.clone())));
        out
    }

    fn rows(&self) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
        let row = |cone: &str, c: &crate::chambers::ConeInequality| {
            vec![
                cone.to_string(),
                list(&c.coeffs),
                c.hyperplane.map_or("-".into(), |h| (h + 1).to_string()),
                c.coordinate.map_or("-".into(), |i| i.to_string()),
            ]
        };
        let rows = self
            .nef
            .iter()
            .map(|c| row("nef", c))
            .chain(self.eff_mov.iter().map(|c| row("effMov", c)))
            .collect();
        Some((vec!["cone", "coeffs", "hyperplane", "coordinate"], rows))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MultReport {
    pub lambda: Weight,
    pub mlambda: BigIntJson,
    pub dim: BigIntJson,
    pub sl2: NumericKeyMap,
    /// Coefficients of `p_lambda(q)` keyed by exponent.
    pub character: BTreeMapJson,
}

/// Exponent-keyed coefficients in numeric order.
#[derive(Debug, Clone, Default)]
pub struct BTreeMapJson(pub BTreeMap<i64, BigInt>);

impl Serialize for BTreeMapJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(&k.to_string(), &BigIntJson(v.clone()))?;
        }
        map.end()
    }
}

pub fn mult(rs: &RootSystem, pe: &PrincipalElement, lambda: &Weight) -> Result<MultReport> {
    let p = multiplicity::principal_character(rs, pe, lambda)?;
    let d = multiplicity::sl2_decompose(&p)?;
    Ok(MultReport {
        lambda: lambda.clone(),
        mlambda: BigIntJson(d.multiplicity(0)),
        dim: BigIntJson(p.dimension()),
        sl2: NumericKeyMap(d.iter().map(|(k, n)| (k, n.clone())).collect()),
        character: BTreeMapJson(p.coeffs()),
    })
}

impl Report for MultReport {
    fn summary(&self) -> Vec<(&'static str, String)> {
        vec![
            ("lambda", list(self.lambda.coords())),
            ("mlambda", self.mlambda.0.to_string()),
            ("dim", self.dim.0.to_string()),
        ]
    }

    fn rows(&self) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
        let rows = self
            .sl2
            .0
            .iter()
            .map(|(k, n)| vec![k.to_string(), n.to_string()])
            .collect();
        Some((vec!["k", "N"], rows))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RayRow {
    pub k: u32,
    pub mlambda: BigIntJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct RayReport {
    pub lambda: Weight,
    pub kmax: u32,
    pub rows: Vec<RayRow>,
    pub saturation: SaturationOutcome,
}

/// `m_{k lambda}` for `k = 1..=kmax` and the first `k` with invariants.
pub fn ray(
    rs: &RootSystem,
    pe: &PrincipalElement,
    lambda: &Weight,
    kmax: u32,
) -> Result<RayReport> {
    if kmax == 0 {
        return Err(Error::Hypothesis("kmax must be at least 1".into()));
    }
    let values = multiplicity::ray_multiplicities(rs, pe, lambda, kmax)?;
    let saturation = match values.iter().find(|(_, m)| m > &BigInt::from(0)) {
        Some((k, m)) => SaturationOutcome::Found {
            k: *k,
            mlambda: BigIntJson(m.clone()),
        },
        None => SaturationOutcome::NoneUpTo { kmax },
    };
    Ok(RayReport {
        lambda: lambda.clone(),
        kmax,
        rows: values
            .into_iter()
            .map(|(k, m)| RayRow {
                k,
                mlambda: BigIntJson(m),
            })
            .collect(),
        saturation,
    })
}

impl Report for RayReport {
    fn summary(&self) -> Vec<(&'static str, String)> {
        let sat = match &self.saturation {
            SaturationOutcome::Found { k, .. } => format!("k={k}"),
            SaturationOutcome::NoneUpTo { kmax } => format!("none for k <= {kmax}"),
        };
        vec![
            ("lambda", list(self.lambda.coords())),
            ("kmax", self.kmax.to_string()),
            ("saturation", sat),
        ]
    }

    fn rows(&self) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
        let rows = self
            .rows
            .iter()
            .map(|r| vec![r.k.to_string(), r.mlambda.0.to_string()])
            .collect();
        Some((vec!["k", "m"], rows))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    #[serde(flatten)]
    pub census: OrbitCensus,
}

pub fn census(cartan_type: &CartanType) -> Result<CensusReport> {
    Ok(CensusReport {
        cartan_type: cartan_type.to_string(),
        census: OrbitCensus::for_type(cartan_type)?,
    })
}

impl Report for CensusReport {
    fn summary(&self) -> Vec<(&'static str, String)> {
        vec![
            ("type", self.cartan_type.clone()),
            ("dimX", self.census.dim_x.to_string()),
            ("curves", self.census.curves.to_string()),
            ("surfaces", self.census.surfaces.to_string()),
        ]
    }
}

impl Report for SelftestReport {
    fn summary(&self) -> Vec<(&'static str, String)> {
        vec![
            ("seed", self.seed.to_string()),
            ("passed", self.passed.to_string()),
        ]
    }

    fn rows(&self) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
        let rows = self
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.name.to_string(),
                    c.cases.to_string(),
                    c.failures.to_string(),
                    c.first_failure.clone().unwrap_or_else(|| "-".into()),
                ]
            })
            .collect();
        Some((vec!["check", "cases", "failures", "first_failure"], rows))
    }
}
