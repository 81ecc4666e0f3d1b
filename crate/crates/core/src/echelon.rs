//! Exact row reduction of relation matrices over `Q(w)` and extraction of
//! leading terms.
//!
//! Columns are X-partitions of fixed weight and length in ascending
//! lexicographic order, so the pivot of a reduced row is the leading term
//! of the corresponding linear combination of relations. Every pivot
//! carries a certificate: the combination of input rows that produces it.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::ConditionSet;
use crate::cyclotomic::CycNum;
use crate::error::Error;
use crate::partition::{partitions_in_box, Partition};
use crate::vertexrel::{enumerate_descriptors, DescriptorOptions, RelationDescriptor, RelationGenerator};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRow {
    pub label: String,
    pub coeffs: Vec<CycNum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationMatrix {
    pub degree: u32,
    pub length: usize,
    pub columns: Vec<Partition>,
    pub rows: Vec<MatrixRow>,
}

/// A descriptor together with the scalar its relation is multiplied by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledDescriptor {
    pub scale: CycNum,
    pub descriptor: RelationDescriptor,
}

impl ScaledDescriptor {
    pub fn unscaled(descriptor: RelationDescriptor) -> Self {
        ScaledDescriptor {
            scale: CycNum::one(),
            descriptor,
        }
    }

    /// `S(-11)X(-3)` or `(1/3)*R(-11)X(-3)`.
    pub fn label(&self) -> String {
        if self.scale.is_one() {
            self.descriptor.to_string()
        } else {
            format!("({})*{}", self.scale, self.descriptor)
        }
    }

    pub fn parse_label(label: &str) -> Result<Self, Error> {
        let label = label.trim();
        if let Some(rest) = label.strip_prefix('(') {
            let (scale, desc) = rest
                .split_once(")*")
                .ok_or_else(|| Error::InvalidDescriptor(format!("cannot parse `{label}`")))?;
            Ok(ScaledDescriptor {
                scale: scale.parse()?,
                descriptor: desc.parse()?,
            })
        } else {
            Ok(Self::unscaled(label.parse()?))
        }
    }
}

/// One line of a descriptor file: either `{"relation": "R(-11)X(-3)"}` or
/// the structured form `{"kind": "R", "left": [], "p": 11, "right": [3]}`,
/// each with an optional `"scale"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum DescriptorLine {
    Text {
        relation: String,
        scale: Option<CycNum>,
    },
    Structured {
        #[serde(flatten)]
        descriptor: RelationDescriptor,
        scale: Option<CycNum>,
    },
}

/// Reads JSON-lines descriptors; blank lines and `#` comments are skipped.
pub fn parse_descriptor_lines(text: &str) -> Result<Vec<ScaledDescriptor>, Error> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed: DescriptorLine = serde_json::from_str(line)
            .map_err(|e| Error::Parse(format!("descriptor line {}: {e}", i + 1)))?;
        let (descriptor, scale) = match parsed {
            DescriptorLine::Text { relation, scale } => (relation.parse()?, scale),
            DescriptorLine::Structured { descriptor, scale } => {
                descriptor.validate()?;
                (descriptor, scale)
            }
        };
        out.push(ScaledDescriptor {
            scale: scale.unwrap_or_else(CycNum::one),
            descriptor,
        });
    }
    Ok(out)
}

impl RelationMatrix {
    /// Matrix of the given relations over all partitions of `degree` with
    /// `length` parts in `2..=max_part`. Rows keep their input order.
    pub fn from_descriptors(
        degree: u32,
        length: usize,
        max_part: u32,
        descriptors: &[ScaledDescriptor],
    ) -> Result<Self, Error> {
        let columns = partitions_in_box(degree, length, 2, max_part);
        let index: BTreeMap<&Partition, usize> = columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut gen = RelationGenerator::new(max_part, None);
        let mut rows = Vec::with_capacity(descriptors.len());
        for sd in descriptors {
            let d = &sd.descriptor;
            if d.degree() != degree || d.length() != length {
                return Err(Error::InvalidDescriptor(format!(
                    "{d} has degree {} and length {}, expected {degree} and {length}",
                    d.degree(),
                    d.length()
                )));
            }
            let rel = gen.generate(d)?;
            let mut coeffs = vec![CycNum::zero(); columns.len()];
            for (pi, v) in &rel.terms {
                coeffs[index[pi]] = v * &sd.scale;
            }
            rows.push(MatrixRow {
                label: sd.label(),
                coeffs,
            });
        }
        Ok(RelationMatrix {
            degree,
            length,
            columns,
            rows,
        })
    }

    /// Drops zero rows and rows identical to an earlier one.
    pub fn deduplicated(mut self) -> Self {
        let mut seen = std::collections::HashSet::new();
        self.rows
            .retain(|r| r.coeffs.iter().any(|c| !c.is_zero()) && seen.insert(r.coeffs.clone()));
        self
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("relation");
        for c in &self.columns {
            let _ = write!(s, "\t{c}");
        }
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.label);
            for v in &r.coeffs {
                let _ = write!(s, "\t{v}");
            }
            s.push('\n');
        }
        s
    }

    /// Inverse of [`RelationMatrix::to_tsv`]; degree and length are read off
    /// the columns.
    pub fn from_tsv(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix".into()))?;
        let columns: Vec<Partition> = header
            .split('\t')
            .skip(1)
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        let mut rows = Vec::new();
        for line in lines {
            let mut fields = line.split('\t');
            let label = fields.next().unwrap_or("").to_string();
            let coeffs: Vec<CycNum> = fields.map(str::parse).collect::<Result<_, _>>()?;
            if coeffs.len() != columns.len() {
                return Err(Error::Parse(format!(
                    "row `{label}` has {} entries for {} columns",
                    coeffs.len(),
                    columns.len()
                )));
            }
            rows.push(MatrixRow { label, coeffs });
        }
        let degree = columns.first().map_or(0, |c| c.weight() as u32);
        let length = columns.first().map_or(0, Partition::len);
        Ok(RelationMatrix {
            degree,
            length,
            columns,
            rows,
        })
    }
}

/// Reduced row echelon form together with, for every nonzero reduced row,
/// its expression in the input rows.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub reduced: RelationMatrix,
    pub pivot_columns: Vec<usize>,
    /// `combinations[i]` lists `(input row, multiplier)` for reduced row `i`.
    pub combinations: Vec<Vec<(usize, CycNum)>>,
}

struct BasisRow {
    pivot: usize,
    coeffs: Vec<CycNum>,
    combo: BTreeMap<usize, CycNum>,
}

fn axpy(dst: &mut [CycNum], f: &CycNum, src: &[CycNum]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= &(f * s);
        }
    }
}

fn combo_axpy(dst: &mut BTreeMap<usize, CycNum>, f: &CycNum, src: &BTreeMap<usize, CycNum>) {
    for (k, s) in src {
        let e = dst.entry(*k).or_insert_with(CycNum::zero);
        *e -= &(f * s);
        if e.is_zero() {
            dst.remove(k);
        }
    }
}

/// Gauss-Jordan elimination keeping multipliers.
///
/// Rows are absorbed one at a time into a basis kept in reduced echelon
/// form, so rows that turn out dependent are discarded immediately.
pub fn reduce_with_certificates(m: &RelationMatrix) -> Reduction {
    let ncols = m.columns.len();
    let mut basis: Vec<BasisRow> = Vec::new();
    // pivot column -> basis index
    let mut by_pivot: BTreeMap<usize, usize> = BTreeMap::new();
    for (ri, row) in m.rows.iter().enumerate() {
        let mut v = row.coeffs.clone();
        let mut combo = BTreeMap::from([(ri, CycNum::one())]);
        for (&col, &bi) in &by_pivot {
            if v[col].is_zero() {
                continue;
            }
            let f = v[col].clone();
            axpy(&mut v, &f, &basis[bi].coeffs);
            combo_axpy(&mut combo, &f, &basis[bi].combo);
        }
        let Some(pivot) = v.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        let inv = v[pivot].inv().expect("pivot entry is nonzero");
        for c in v.iter_mut() {
            *c *= &inv;
        }
        for c in combo.values_mut() {
            *c *= &inv;
        }
        // clear the new pivot column from the existing basis
        for b in basis.iter_mut() {
            if b.coeffs[pivot].is_zero() {
                continue;
            }
            let f = b.coeffs[pivot].clone();
            axpy(&mut b.coeffs, &f, &v);
            combo_axpy(&mut b.combo, &f, &combo);
        }
        by_pivot.insert(pivot, basis.len());
        basis.push(BasisRow {
            pivot,
            coeffs: v,
            combo,
        });
    }
    basis.sort_by_key(|b| b.pivot);

    let mut rows = Vec::with_capacity(m.rows.len());
    let mut combinations = Vec::with_capacity(basis.len());
    let mut pivot_columns = Vec::with_capacity(basis.len());
    for b in basis {
        rows.push(MatrixRow {
            label: format!("pivot {}", m.columns[b.pivot]),
            coeffs: b.coeffs,
        });
        pivot_columns.push(b.pivot);
        combinations.push(b.combo.into_iter().collect());
    }
    while rows.len() < m.rows.len() {
        rows.push(MatrixRow {
            label: "zero".into(),
            coeffs: vec![CycNum::zero(); ncols],
        });
    }
    Reduction {
        reduced: RelationMatrix {
            degree: m.degree,
            length: m.length,
            columns: m.columns.clone(),
            rows,
        },
        pivot_columns,
        combinations,
    }
}

/// Reduced row echelon form; zero rows last, column order unchanged.
pub fn row_reduce(m: &RelationMatrix) -> RelationMatrix {
    reduce_with_certificates(m).reduced
}

pub fn rank(m: &RelationMatrix) -> usize {
    reduce_with_certificates(m).pivot_columns.len()
}

/// A pivot and the combination of input rows whose leading term it is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub pivot: Partition,
    pub combination: Vec<(String, CycNum)>,
}

/// Re-generates the relations named in the certificate and checks that
/// their combination has leading partition `pivot` with coefficient 1.
pub fn verify_certificate(cert: &Certificate, max_part: u32) -> Result<bool, Error> {
    let mut gen = RelationGenerator::new(max_part, None);
    let mut total: BTreeMap<Partition, CycNum> = BTreeMap::new();
    for (label, mult) in &cert.combination {
        let sd = ScaledDescriptor::parse_label(label)?;
        let rel = gen.generate(&sd.descriptor)?;
        let f = mult * &sd.scale;
        for (pi, v) in rel.terms {
            *total.entry(pi).or_insert_with(CycNum::zero) += &(&f * &v);
        }
    }
    let lead = total.iter().find(|(_, v)| !v.is_zero());
    Ok(matches!(lead, Some((pi, v)) if *pi == cert.pivot && v.is_one()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingTermReport {
    pub degree: u32,
    pub length: usize,
    pub max_part: u32,
    pub columns: usize,
    pub relations: usize,
    pub pivots: Vec<Partition>,
    pub new_pivots: Vec<Partition>,
    pub matched_conditions: Vec<(Partition, Vec<u32>)>,
    pub certificates: Vec<Certificate>,
    pub budget_exceeded: bool,
}

impl LeadingTermReport {
    fn empty(degree: u32, length: usize, max_part: u32) -> Self {
        LeadingTermReport {
            degree,
            length,
            max_part,
            columns: 0,
            relations: 0,
            pivots: Vec::new(),
            new_pivots: Vec::new(),
            matched_conditions: Vec::new(),
            certificates: Vec::new(),
            budget_exceeded: false,
        }
    }

    pub fn has_pivot(&self, p: &Partition) -> bool {
        self.pivots.contains(p)
    }

    pub fn certificate(&self, p: &Partition) -> Option<&Certificate> {
        self.certificates.iter().find(|c| &c.pivot == p)
    }
}

/// Pivots of `m` with certificates; a pivot is new when no proper
/// sub-partition of it already violates `conditions`.
pub fn leading_terms(m: &RelationMatrix, max_part: u32, conditions: &ConditionSet) -> LeadingTermReport {
    let red = reduce_with_certificates(m);
    let pivots: Vec<Partition> = red.pivot_columns.iter().map(|&c| m.columns[c].clone()).collect();
    let certificates = pivots
        .iter()
        .zip(&red.combinations)
        .map(|(p, combo)| Certificate {
            pivot: p.clone(),
            combination: combo
                .iter()
                .map(|(ri, v)| (m.rows[*ri].label.clone(), v.clone()))
                .collect(),
        })
        .collect();
    let new_pivots = pivots
        .iter()
        .filter(|p| conditions.proper_violations(p).is_empty())
        .cloned()
        .collect();
    let matched_conditions = pivots
        .iter()
        .map(|p| (p.clone(), conditions.whole_matches(p)))
        .filter(|(_, ids)| !ids.is_empty())
        .collect();
    LeadingTermReport {
        degree: m.degree,
        length: m.length,
        max_part,
        columns: m.columns.len(),
        relations: m.rows.len(),
        pivots,
        new_pivots,
        matched_conditions,
        certificates,
        budget_exceeded: false,
    }
}

/// Column bound for a scan cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MaxPartRule {
    Fixed(u32),
    /// No bound beyond what the degree and length allow.
    Full,
}

impl MaxPartRule {
    pub fn resolve(self, degree: u32, length: usize) -> u32 {
        let full = degree.saturating_sub(2 * (length as u32).saturating_sub(1));
        match self {
            MaxPartRule::Fixed(m) => m.min(full.max(2)),
            MaxPartRule::Full => full,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub degrees: RangeInclusive<u32>,
    pub lengths: Vec<usize>,
    pub max_part: MaxPartRule,
    /// Cells needing more descriptors than this are skipped and flagged.
    pub descriptor_budget: Option<usize>,
    pub descriptors: DescriptorOptions,
}

/// Builds, reduces and classifies one `(degree, length)` cell.
pub fn scan_cell(
    degree: u32,
    length: usize,
    max_part: u32,
    budget: Option<usize>,
    opts: &DescriptorOptions,
    conditions: &ConditionSet,
) -> Result<LeadingTermReport, Error> {
    let descriptors = enumerate_descriptors(degree, length, max_part, opts);
    if budget.is_some_and(|b| descriptors.len() > b) {
        let mut r = LeadingTermReport::empty(degree, length, max_part);
        r.relations = descriptors.len();
        r.budget_exceeded = true;
        return Ok(r);
    }
    let scaled: Vec<ScaledDescriptor> = descriptors.into_iter().map(ScaledDescriptor::unscaled).collect();
    let m = RelationMatrix::from_descriptors(degree, length, max_part, &scaled)?.deduplicated();
    Ok(leading_terms(&m, max_part, conditions))
}

/// Runs every cell of the grid in parallel; output ordered by `(degree, length)`.
pub fn scan(config: &ScanConfig, conditions: &ConditionSet) -> Result<Vec<LeadingTermReport>, Error> {
    let cells: Vec<(u32, usize)> = config
        .degrees
        .clone()
        .flat_map(|d| config.lengths.iter().map(move |&l| (d, l)))
        .collect();
    cells
        .par_iter()
        .map(|&(d, l)| {
            let mp = config.max_part.resolve(d, l);
            scan_cell(d, l, mp, config.descriptor_budget, &config.descriptors, conditions)
        })
        .collect()
}
