//! Forbidden-pattern conditions on partitions and the generating series of
//! the partitions that avoid them.
//!
//! A [`ForbiddenPattern`] is a family of tuples `base + step·k·(1,…,1)`,
//! `k ∈ Z` restricted to residue classes, with every part positive. A
//! partition violates the pattern when one of its sub-partitions is such a
//! tuple; which sub-partitions are inspected is set by the [`MatchMode`].
//!
//! Two condition sets are built in:
//!
//! - `a22-level5`: the 34 conditions for `L(5Λ0)` over `A2(2)`, matched on
//!   contiguous windows anywhere in the partition;
//! - `a11-level2`: the 11 basis conditions for `L(2Λ0)` over `A1(1)` in the
//!   `(2,1)`-specialized grading, matched on arbitrary sub-multisets.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;
use crate::qseries::TruncatedSeries;

/// Condition id reported for a part equal to 1.
pub const PART_ONE_ID: u32 = 1;
/// Condition id reported for three equal parts.
pub const TRIPLE_REPEAT_ID: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenPattern {
    pub id: u32,
    pub base: Vec<i64>,
    pub step: i64,
    pub k_modulus: u32,
    pub k_residues: Vec<u32>,
}

impl ForbiddenPattern {
    /// Pattern valid for every `k`.
    pub fn unconstrained(id: u32, base: &[i64], step: i64) -> Self {
        ForbiddenPattern {
            id,
            base: base.to_vec(),
            step,
            k_modulus: 1,
            k_residues: vec![0],
        }
    }

    /// Pattern valid for `k mod modulus ∈ residues`.
    pub fn with_residues(id: u32, base: &[i64], step: i64, modulus: u32, residues: &[u32]) -> Self {
        let mut k_residues: Vec<u32> = residues.iter().map(|r| r % modulus).collect();
        k_residues.sort_unstable();
        k_residues.dedup();
        ForbiddenPattern {
            id,
            base: base.to_vec(),
            step,
            k_modulus: modulus,
            k_residues,
        }
    }

    /// Pattern valid for `k mod modulus ∉ excluded`.
    pub fn excluding(id: u32, base: &[i64], step: i64, modulus: u32, excluded: &[u32]) -> Self {
        let allowed: Vec<u32> = (0..modulus).filter(|r| !excluded.contains(r)).collect();
        Self::with_residues(id, base, step, modulus, &allowed)
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn admits_k(&self, k: i64) -> bool {
        let r = k.rem_euclid(i64::from(self.k_modulus)) as u32;
        self.k_residues.contains(&r)
    }

    fn validate(&self) -> Result<(), String> {
        if self.base.is_empty() {
            return Err("empty base tuple".into());
        }
        if self.base.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("base {:?} is not weakly decreasing", self.base));
        }
        if self.step <= 0 {
            return Err(format!("step {} must be positive", self.step));
        }
        if self.k_modulus == 0 {
            return Err("modulus must be positive".into());
        }
        if self.k_residues.iter().any(|&r| r >= self.k_modulus) {
            return Err(format!("residues {:?} exceed modulus {}", self.k_residues, self.k_modulus));
        }
        Ok(())
    }

    /// The instance for shift `k`, if `k` is admitted and all parts are positive.
    pub fn instance(&self, k: i64) -> Option<Vec<u32>> {
        if !self.admits_k(k) {
            return None;
        }
        self.base
            .iter()
            .map(|&b| u32::try_from(b + self.step * k).ok().filter(|&p| p >= 1))
            .collect()
    }

    /// Does the tuple equal some admitted instance?
    pub fn matches(&self, window: &[u32]) -> bool {
        if window.len() != self.base.len() {
            return false;
        }
        let d = i64::from(window[0]) - self.base[0];
        if d.rem_euclid(self.step) != 0 {
            return false;
        }
        let k = d / self.step;
        self.admits_k(k)
            && window
                .iter()
                .zip(&self.base)
                .all(|(&w, &b)| i64::from(w) - b == d)
    }
}

impl fmt::Display for ForbiddenPattern {
    /// One line of the condition-file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base: Vec<String> = self.base.iter().map(i64::to_string).collect();
        let res: Vec<String> = self.k_residues.iter().map(u32::to_string).collect();
        write!(
            f,
            "{} {} {} {} {}",
            self.id,
            base.join(","),
            self.step,
            self.k_modulus,
            res.join(",")
        )
    }
}

/// Which sub-partitions of `μ` are compared against pattern instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatchMode {
    /// Contiguous windows of the sorted partition, anywhere.
    Window,
    /// Only the window formed by the smallest parts.
    Suffix,
    /// Any sub-multiset.
    SubMultiset,
}

impl MatchMode {
    fn name(self) -> &'static str {
        match self {
            MatchMode::Window => "window",
            MatchMode::Suffix => "suffix",
            MatchMode::SubMultiset => "sub-multiset",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "window" => Some(MatchMode::Window),
            "suffix" => Some(MatchMode::Suffix),
            "sub-multiset" | "submultiset" => Some(MatchMode::SubMultiset),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSet {
    pub name: String,
    pub no_part_one: bool,
    pub no_triple_repeat: bool,
    pub mode: MatchMode,
    pub patterns: Vec<ForbiddenPattern>,
}

/// Result of [`satisfies`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub violated: Vec<u32>,
}

impl ConditionSet {
    pub fn new(name: &str, mode: MatchMode, patterns: Vec<ForbiddenPattern>) -> Result<Self, Error> {
        let cs = ConditionSet {
            name: name.to_string(),
            no_part_one: true,
            no_triple_repeat: true,
            mode,
            patterns,
        };
        cs.validate().map_err(|msg| Error::ConditionFile { line: 0, msg })?;
        Ok(cs)
    }

    fn validate(&self) -> Result<(), String> {
        let mut ids = BTreeSet::new();
        for p in &self.patterns {
            p.validate().map_err(|e| format!("condition {}: {e}", p.id))?;
            if !ids.insert(p.id) || p.id == PART_ONE_ID || p.id == TRIPLE_REPEAT_ID {
                return Err(format!("duplicate condition id {}", p.id));
            }
        }
        Ok(())
    }

    pub fn with_mode(mut self, mode: MatchMode) -> Self {
        self.mode = mode;
        self
    }

    /// A copy with one more pattern (the id must be fresh).
    pub fn with_pattern(mut self, p: ForbiddenPattern) -> Result<Self, Error> {
        self.patterns.push(p);
        self.validate().map_err(|msg| Error::ConditionFile { line: 0, msg })?;
        Ok(self)
    }

    fn max_pattern_len(&self) -> usize {
        self.patterns.iter().map(ForbiddenPattern::len).max().unwrap_or(0)
    }

    /// Ids of flag conditions and patterns violated by the tuple `t`
    /// itself (`t` taken as a whole sub-partition).
    fn tuple_violations(&self, t: &[u32], out: &mut BTreeSet<u32>) {
        if self.no_part_one && t.len() == 1 && t[0] == 1 {
            out.insert(PART_ONE_ID);
        }
        if self.no_triple_repeat && t.len() == 3 && t[0] == t[2] {
            out.insert(TRIPLE_REPEAT_ID);
        }
        for p in &self.patterns {
            if p.matches(t) {
                out.insert(p.id);
            }
        }
    }

    fn sub_tuples_ending_at(&self, mu: &[u32], end: usize, len: usize, f: &mut impl FnMut(&[u32])) {
        match self.mode {
            MatchMode::Window | MatchMode::Suffix => {
                if end + 1 >= len {
                    f(&mu[end + 1 - len..=end]);
                }
            }
            MatchMode::SubMultiset => {
                let mut buf = Vec::with_capacity(len);
                choose_before(mu, end, len - 1, 0, &mut buf, &mut |prefix: &[u32]| {
                    let mut t = prefix.to_vec();
                    t.push(mu[end]);
                    f(&t);
                });
            }
        }
    }

    /// Violations witnessed by sub-partitions whose last element is `mu[end]`.
    fn violations_ending_at(&self, mu: &[u32], end: usize, out: &mut BTreeSet<u32>) {
        let top = self.max_pattern_len().max(3);
        for len in 1..=top.min(end + 1) {
            self.sub_tuples_ending_at(mu, end, len, &mut |t| self.tuple_violations(t, out));
        }
    }

    /// All violated condition ids of a partition.
    pub fn violations(&self, mu: &Partition) -> BTreeSet<u32> {
        let parts = mu.parts();
        let mut out = BTreeSet::new();
        if self.no_part_one && parts.contains(&1) {
            out.insert(PART_ONE_ID);
        }
        match self.mode {
            MatchMode::Suffix => {
                if let Some(end) = parts.len().checked_sub(1) {
                    self.violations_ending_at(parts, end, &mut out);
                }
                // three equal parts are forbidden anywhere
                if self.no_triple_repeat && parts.windows(3).any(|w| w[0] == w[2]) {
                    out.insert(TRIPLE_REPEAT_ID);
                }
            }
            _ => {
                for end in 0..parts.len() {
                    self.violations_ending_at(parts, end, &mut out);
                }
            }
        }
        out
    }

    /// Incremental test used while growing a partition one smallest part at
    /// a time: does some sub-partition ending at the last part violate?
    fn last_part_violates(&self, parts: &[u32]) -> bool {
        let mut out = BTreeSet::new();
        let end = parts.len() - 1;
        self.violations_ending_at(parts, end, &mut out);
        !out.is_empty()
    }

    /// Ids of patterns (and flags) whose instance is all of `mu`.
    pub fn whole_matches(&self, mu: &Partition) -> Vec<u32> {
        let mut out = BTreeSet::new();
        self.tuple_violations(mu.parts(), &mut out);
        out.into_iter().collect()
    }

    /// Violations witnessed by sub-partitions strictly shorter than `mu`.
    pub fn proper_violations(&self, mu: &Partition) -> BTreeSet<u32> {
        let parts = mu.parts();
        let mut out = BTreeSet::new();
        for len in 1..parts.len() {
            for end in (len - 1)..parts.len() {
                if self.mode == MatchMode::Suffix && end + 1 != parts.len() {
                    continue;
                }
                self.sub_tuples_ending_at(parts, end, len, &mut |t| self.tuple_violations(t, &mut out));
            }
        }
        out
    }

    /// Renders the set in the declarative text format read by [`ConditionSet::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("name {}\nmode {}\n", self.name, self.mode.name());
        if self.no_part_one {
            s.push_str("no-part-one\n");
        }
        if self.no_triple_repeat {
            s.push_str("no-triple-repeat\n");
        }
        s.push_str("# id base step modulus residues\n");
        for p in &self.patterns {
            s.push_str(&format!("{p}\n"));
        }
        s
    }

    /// Parses the text format:
    ///
    /// ```text
    /// name my-set
    /// mode window            # or suffix, sub-multiset
    /// no-part-one
    /// no-triple-repeat
    /// 13 5,5,2,2 1 1 0       # id base step modulus residues
    /// ```
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut cs = ConditionSet {
            name: "custom".into(),
            no_part_one: false,
            no_triple_repeat: false,
            mode: MatchMode::Window,
            patterns: Vec::new(),
        };
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| Error::ConditionFile { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[0] {
                "name" => {
                    cs.name = fields.get(1).ok_or_else(|| err("missing name".into()))?.to_string();
                }
                "mode" => {
                    let m = fields.get(1).ok_or_else(|| err("missing mode".into()))?;
                    cs.mode = MatchMode::parse(m).ok_or_else(|| err(format!("unknown mode `{m}`")))?;
                }
                "no-part-one" => cs.no_part_one = true,
                "no-triple-repeat" => cs.no_triple_repeat = true,
                _ => {
                    if fields.len() != 5 {
                        return Err(err(format!("expected 5 fields, found {}", fields.len())));
                    }
                    let int = |s: &str| -> Result<i64, Error> {
                        s.parse().map_err(|_| err(format!("invalid integer `{s}`")))
                    };
                    let list = |s: &str| -> Result<Vec<i64>, Error> { s.split(',').map(int).collect() };
                    let id = u32::try_from(int(fields[0])?).map_err(|_| err("negative id".into()))?;
                    let base = list(fields[1])?;
                    let step = int(fields[2])?;
                    let modulus = u32::try_from(int(fields[3])?).map_err(|_| err("negative modulus".into()))?;
                    let residues = list(fields[4])?
                        .into_iter()
                        .map(|r| u32::try_from(r).map_err(|_| err("negative residue".into())))
                        .collect::<Result<Vec<u32>, Error>>()?;
                    if modulus == 0 {
                        return Err(err("modulus must be positive".into()));
                    }
                    if let Some(r) = residues.iter().find(|&&r| r >= modulus) {
                        return Err(err(format!("residue {r} not below modulus {modulus}")));
                    }
                    let p = ForbiddenPattern::with_residues(id, &base, step, modulus, &residues);
                    p.validate().map_err(err)?;
                    cs.patterns.push(p);
                }
            }
        }
        cs.validate().map_err(|msg| Error::ConditionFile { line: 0, msg })?;
        Ok(cs)
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

fn choose_before(
    mu: &[u32],
    end: usize,
    need: usize,
    start: usize,
    buf: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if need == 0 {
        f(buf);
        return;
    }
    for i in start..end {
        if end - i < need {
            break;
        }
        buf.push(mu[i]);
        choose_before(mu, end, need - 1, i + 1, buf, f);
        buf.pop();
    }
}

/// `(ok, violated ids)` for a partition.
pub fn satisfies(mu: &Partition, cs: &ConditionSet) -> Verdict {
    let violated: Vec<u32> = cs.violations(mu).into_iter().collect();
    Verdict {
        ok: violated.is_empty(),
        violated,
    }
}

/// Like [`satisfies`] on a raw tuple, rejecting unsorted input.
pub fn satisfies_parts(parts: &[u32], cs: &ConditionSet) -> Result<Verdict, Error> {
    Ok(satisfies(&Partition::new(parts.to_vec())?, cs))
}

/// Depth-first enumeration of admissible partitions with parts `<= max`,
/// weight `<= budget`, calling `f` on every node (including the root).
fn descend(
    cs: &ConditionSet,
    parts: &mut Vec<u32>,
    remaining: u32,
    max: u32,
    prune: bool,
    f: &mut impl FnMut(&[u32], u32) -> bool,
) {
    if !f(parts, remaining) {
        return;
    }
    let lowest = if cs.no_part_one { 2 } else { 1 };
    for x in (lowest..=max.min(remaining)).rev() {
        parts.push(x);
        if !prune || !cs.last_part_violates(parts) {
            descend(cs, parts, remaining - x, x, prune, f);
        }
        parts.pop();
    }
}

/// Counts per weight of the partitions of `0..=order` satisfying `cs`.
pub fn count_series(cs: &ConditionSet, order: usize) -> TruncatedSeries {
    let n = order as u32;
    let lowest = if cs.no_part_one { 2 } else { 1 };
    // windows are prefix-closed except in suffix mode
    let prune = cs.mode != MatchMode::Suffix;
    let per_branch: Vec<Vec<u64>> = (lowest..=n)
        .into_par_iter()
        .map(|top| {
            let mut counts = vec![0u64; order + 1];
            let mut parts = vec![top];
            if prune && cs.last_part_violates(&parts) {
                return counts;
            }
            descend(cs, &mut parts, n - top, top, prune, &mut |p, rem| {
                if prune || satisfies(&Partition::new(p.to_vec()).expect("sorted"), cs).ok {
                    counts[(n - rem) as usize] += 1;
                }
                true
            });
            counts
        })
        .collect();
    let mut total = vec![0u64; order + 1];
    total[0] = 1;
    for branch in per_branch {
        for (t, c) in total.iter_mut().zip(branch) {
            *t += c;
        }
    }
    TruncatedSeries::new(total.into_iter().map(Into::into).collect(), order)
}

/// All partitions of `n` satisfying `cs`, in descending lexicographic order.
pub fn admissible_partitions(cs: &ConditionSet, n: u32) -> Vec<Partition> {
    partitions_filtered(cs, n, None)
}

/// All partitions of `n` with exactly `len` parts satisfying `cs`.
pub fn candidates_of_length(n: u32, len: usize, cs: &ConditionSet) -> Vec<Partition> {
    partitions_filtered(cs, n, Some(len))
}

/// Length-7 partitions of `n` satisfying `cs`.
pub fn length7_candidates(n: u32, cs: &ConditionSet) -> Vec<Partition> {
    candidates_of_length(n, 7, cs)
}

fn partitions_filtered(cs: &ConditionSet, n: u32, len: Option<usize>) -> Vec<Partition> {
    let prune = cs.mode != MatchMode::Suffix;
    let mut out = Vec::new();
    descend(cs, &mut Vec::new(), n, n, prune, &mut |p, rem| {
        let too_long = len.is_some_and(|l| p.len() > l);
        if too_long {
            return false;
        }
        if rem == 0 && len.is_none_or(|l| p.len() == l) {
            let mu = Partition::new(p.to_vec()).expect("sorted");
            if prune || satisfies(&mu, cs).ok {
                out.push(mu);
            }
        }
        rem > 0
    });
    out
}

/// One row of a series comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub n: usize,
    pub count: i64,
    pub chi: i64,
    pub delta: i64,
}

/// Per-degree comparison of the admissible-partition count with `chi`.
pub fn compare_with_character(
    cs: &ConditionSet,
    chi: &TruncatedSeries,
    order: usize,
) -> Vec<ComparisonRow> {
    let g = count_series(cs, order);
    compare_series(&g, chi, order)
}

pub fn compare_series(g: &TruncatedSeries, chi: &TruncatedSeries, order: usize) -> Vec<ComparisonRow> {
    use num_traits::ToPrimitive;
    assert!(g.order() >= order && chi.order() >= order, "series order below {order}");
    (0..=order)
        .map(|n| {
            let count = g.coeff(n).to_i64().expect("count fits in i64");
            let chi = chi.coeff(n).to_i64().expect("coefficient fits in i64");
            ComparisonRow {
                n,
                count,
                chi,
                delta: count - chi,
            }
        })
        .collect()
}

/// The 34 conditions for `L(5Λ0)` over `A2(2)`.
pub fn a22_level5() -> ConditionSet {
    use ForbiddenPattern as P;
    // length-3 families are parametrized by their largest part k
    let mut v = vec![
        P::unconstrained(3, &[0, 0, -1], 1),
        P::unconstrained(4, &[0, -1, -1], 1),
        P::excluding(5, &[0, -1, -2], 1, 6, &[1]),
        P::excluding(6, &[0, 0, -2], 1, 6, &[4]),
        P::excluding(7, &[0, -2, -2], 1, 6, &[4]),
        P::with_residues(8, &[0, -2, -3], 1, 6, &[5]),
        P::with_residues(9, &[0, -1, -3], 1, 6, &[4]),
        P::with_residues(10, &[0, 0, -3], 1, 6, &[1]),
        P::unconstrained(11, &[4, 4, 2, 2], 6),
        P::unconstrained(12, &[5, 4, 2, 2], 6),
        P::unconstrained(13, &[5, 5, 2, 2], 1),
        P::unconstrained(14, &[10, 10, 8, 7], 6),
        P::unconstrained(15, &[7, 6, 5, 3], 6),
        P::unconstrained(16, &[7, 6, 4, 3], 2),
        P::excluding(17, &[6, 5, 2, 2], 1, 6, &[4]),
        P::excluding(18, &[8, 8, 5, 4], 1, 6, &[4]),
    ];
    let step6: [(u32, &[i64]); 15] = [
        (19, &[8, 8, 5, 3]),
        (20, &[9, 7, 6, 5]),
        (21, &[10, 8, 8, 5]),
        (22, &[7, 4, 4, 2]),
        (23, &[7, 6, 4, 2, 2]),
        (24, &[8, 7, 5, 4, 2]),
        (25, &[9, 9, 5, 5, 2]),
        (26, &[10, 8, 7, 5, 4]),
        (27, &[10, 10, 8, 6, 5]),
        (29, &[10, 10, 8, 5, 5]),
        (30, &[11, 10, 8, 5, 5]),
        (31, &[9, 8, 6, 4, 2, 2]),
        (32, &[10, 10, 8, 6, 4, 3]),
        (33, &[11, 8, 8, 5, 2, 2]),
        (34, &[12, 11, 9, 7, 4, 4]),
    ];
    v.extend(step6.iter().map(|(id, base)| P::unconstrained(*id, base, 6)));
    v.push(P::with_residues(28, &[11, 10, 8, 6, 5], 1, 6, &[0, 1, 2]));
    v.sort_by_key(|p| p.id);
    ConditionSet::new("a22-level5", MatchMode::Window, v).expect("builtin set is valid")
}

/// The 11 basis conditions for `L(2Λ0)` over `A1(1)`.
pub fn a11_level2() -> ConditionSet {
    use ForbiddenPattern as P;
    let v = vec![
        P::unconstrained(3, &[0, 0, -1], 1),
        P::unconstrained(4, &[0, -1, -1], 1),
        P::excluding(5, &[0, -1, -2], 1, 3, &[1]),
        P::excluding(6, &[0, 0, -2], 1, 3, &[1]),
        P::excluding(7, &[0, -2, -2], 1, 3, &[1]),
        P::with_residues(8, &[0, -2, -3], 1, 3, &[2]),
        P::with_residues(9, &[0, -1, -3], 1, 3, &[1]),
        P::excluding(10, &[0, 0, -3], 1, 3, &[0]),
        P::excluding(11, &[0, -3, -3], 1, 3, &[0]),
    ];
    ConditionSet::new("a11-level2", MatchMode::SubMultiset, v).expect("builtin set is valid")
}

pub const BUILTIN_SETS: [&str; 2] = ["a22-level5", "a11-level2"];

pub fn builtin(name: &str) -> Result<ConditionSet, Error> {
    match name {
        "a22-level5" => Ok(a22_level5()),
        "a11-level2" => Ok(a11_level2()),
        _ => Err(Error::UnknownConditionSet(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn builtin_shapes() {
        let a = a22_level5();
        assert_eq!(a.patterns.len(), 32);
        let ids: Vec<u32> = a.patterns.iter().map(|p| p.id).collect();
        assert_eq!(ids, (3..=34).collect::<Vec<_>>());
        let b = a11_level2();
        assert_eq!(b.patterns.len(), 9);
        assert!(builtin("nope").is_err());
    }

    #[test]
    fn named_examples() {
        let cs = a22_level5();
        let v = satisfies(&part(&[3, 3, 2]), &cs);
        assert!(!v.ok);
        assert!(v.violated.contains(&3));
        assert!(satisfies(&part(&[4, 2, 2]), &cs).ok);
        let v = satisfies(&part(&[5, 5, 2, 2]), &cs);
        assert_eq!(v.violated, vec![13]);
        assert!(satisfies(&part(&[8]), &cs).ok);
        assert_eq!(satisfies(&part(&[3, 1]), &cs).violated, vec![PART_ONE_ID]);
        assert_eq!(satisfies(&part(&[9, 5, 5, 5]), &cs).violated, vec![TRIPLE_REPEAT_ID]);
        assert!(satisfies_parts(&[2, 3], &cs).is_err());
    }

    #[test]
    fn residue_constraints() {
        let cs = a22_level5();
        // condition 5 allowed only at k ≡ 1: (7,6,5) passes, (8,7,6) fails
        assert!(satisfies(&part(&[7, 6, 5]), &cs).ok);
        assert_eq!(satisfies(&part(&[8, 7, 6]), &cs).violated, vec![5]);
        // condition 8 only at k ≡ 5
        assert_eq!(satisfies(&part(&[11, 9, 8]), &cs).violated, vec![8]);
        assert!(satisfies(&part(&[12, 10, 9]), &cs).ok);
        // condition 16 steps by 2 only
        assert_eq!(satisfies(&part(&[9, 8, 6, 5]), &cs).violated, vec![16]);
        assert!(satisfies(&part(&[8, 7, 5, 4]), &cs).ok);
        // condition 28 at k ≡ 0, 1, 2
        assert_eq!(satisfies(&part(&[13, 12, 10, 8, 7]), &cs).violated, vec![28]);
        assert!(satisfies(&part(&[15, 14, 12, 10, 9]), &cs).ok);
    }

    #[test]
    fn windows_anywhere() {
        let cs = a22_level5();
        // (5,5,2,2) in the middle
        assert!(satisfies(&part(&[9, 5, 5, 2, 2]), &cs).violated.contains(&13));
        let suffix = cs.clone().with_mode(MatchMode::Suffix);
        assert!(satisfies(&part(&[12, 5, 5, 2, 2]), &suffix).violated.contains(&13));
        assert!(satisfies(&part(&[5, 5, 2, 2, 2]), &cs).violated.contains(&13));
        // a middle window is invisible in suffix mode
        assert!(satisfies(&part(&[20, 5, 5, 2, 2, 2]), &cs).violated.contains(&13));
        assert!(!satisfies(&part(&[5, 5, 2, 2, 2]), &suffix).violated.contains(&13));
    }

    #[test]
    fn sub_multiset_mode() {
        let cs = a11_level2();
        // (5,2,2) is a sub-multiset of (5,4,2,2) but not a window
        assert_eq!(satisfies(&part(&[5, 4, 2, 2]), &cs).violated, vec![11]);
        let windows = cs.clone().with_mode(MatchMode::Window);
        assert!(satisfies(&part(&[5, 4, 2, 2]), &windows).ok);
    }

    #[test]
    fn small_counts() {
        let cs = a22_level5();
        let g = count_series(&cs, 10);
        let got: Vec<i64> = g.coeffs().iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(got, vec![1, 0, 1, 1, 2, 2, 3, 3, 5, 5, 7]);
        let eight: Vec<String> = admissible_partitions(&cs, 8).iter().map(|p| p.to_string()).collect();
        assert_eq!(eight, vec!["8", "62", "53", "44", "422"]);
        assert_eq!(count_series(&cs, 0), TruncatedSeries::one(0));
    }

    #[test]
    fn borcea_small() {
        let cs = a11_level2();
        let four: Vec<String> = admissible_partitions(&cs, 4).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, vec!["4", "22"]);
    }

    #[test]
    fn length7() {
        let cs = a22_level5();
        assert!(length7_candidates(13, &cs).is_empty());
        assert!(length7_candidates(20, &cs).is_empty());
        assert_eq!(length7_candidates(42, &cs), vec![part(&[10, 10, 8, 6, 4, 2, 2])]);
    }

    #[test]
    fn text_round_trip() {
        for cs in [a22_level5(), a11_level2(), a22_level5().with_mode(MatchMode::Suffix)] {
            let text = cs.to_text();
            assert_eq!(ConditionSet::parse(&text).unwrap(), cs);
        }
    }

    #[test]
    fn text_errors() {
        assert!(matches!(
            ConditionSet::parse("3 0,0,-1 1 1\n"),
            Err(Error::ConditionFile { line: 1, .. })
        ));
        assert!(ConditionSet::parse("3 0,1 1 1 0\n").is_err());
        assert!(ConditionSet::parse("3 0,0 0 1 0\n").is_err());
        assert!(ConditionSet::parse("3 0,0 1 6 7\n").is_err());
        assert!(ConditionSet::parse("3 0,0 1 1 0\n3 1,1 1 1 0\n").is_err());
        assert!(ConditionSet::parse("mode sideways\n").is_err());
        assert!(ConditionSet::parse("# nothing\n\nname empty\n").is_ok());
    }

    #[test]
    fn proper_and_whole() {
        let cs = a22_level5();
        assert!(cs.proper_violations(&part(&[5, 5, 2, 2])).is_empty());
        assert_eq!(cs.whole_matches(&part(&[5, 5, 2, 2])), vec![13]);
        assert_eq!(cs.proper_violations(&part(&[4, 4, 3, 3])), BTreeSet::from([3, 4]));
        assert_eq!(cs.whole_matches(&part(&[3, 3, 3])), vec![TRIPLE_REPEAT_ID]);
    }

    /// Independent checker: enumerate every admitted instance of every
    /// pattern up to weight `n` and look windows up in that set.
    fn instance_table(cs: &ConditionSet, n: u32) -> BTreeSet<Vec<u32>> {
        let mut set = BTreeSet::new();
        for p in &cs.patterns {
            let bound = i64::from(n) + 100;
            for k in -bound..=bound {
                if let Some(inst) = p.instance(k) {
                    if inst.iter().map(|&x| u64::from(x)).sum::<u64>() <= u64::from(n) {
                        set.insert(inst);
                    }
                }
            }
        }
        set
    }

    fn all_partitions(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for x in (1..=max.min(n)).rev() {
            cur.push(x);
            all_partitions(n - x, x, cur, out);
            cur.pop();
        }
    }

    fn brute_ok(mu: &[u32], table: &BTreeSet<Vec<u32>>) -> bool {
        if mu.contains(&1) || mu.windows(3).any(|w| w[0] == w[2]) {
            return false;
        }
        (1..=mu.len()).all(|len| mu.windows(len).all(|w| !table.contains(w)))
    }

    #[test]
    fn double_implementation_agrees() {
        let cs = a22_level5();
        let table = instance_table(&cs, 12);
        let g = count_series(&cs, 12);
        for n in 0..=12u32 {
            let mut all = Vec::new();
            all_partitions(n, n.max(1), &mut Vec::new(), &mut all);
            let mut brute = 0;
            for mu in &all {
                let fast = satisfies(&Partition::new(mu.clone()).unwrap(), &cs).ok;
                assert_eq!(fast, brute_ok(mu, &table), "disagreement on {mu:?}");
                brute += u64::from(fast);
            }
            assert_eq!(g.coeff(n as usize).to_u64().unwrap(), brute, "count at {n}");
        }
    }

    #[test]
    fn adding_a_pattern_never_increases_counts() {
        let base = a22_level5();
        let extra = base
            .clone()
            .with_pattern(ForbiddenPattern::unconstrained(99, &[0, -4, -4], 1))
            .unwrap();
        let g0 = count_series(&base, 30);
        let g1 = count_series(&extra, 30);
        for n in 0..=30 {
            assert!(g1.coeff(n) <= g0.coeff(n));
        }
        assert!(g1.coeff(30) < g0.coeff(30));
    }

    fn arb_partition() -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(1u32..25, 0..9).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
    }

    proptest! {
        #[test]
        fn window_locality(mu in arb_partition(), extra in 1u32..25) {
            // appending a smallest part adds only windows ending at it
            let cs = a22_level5();
            let small = *mu.last().unwrap_or(&extra);
            prop_assume!(extra <= small);
            let before = cs.violations(&part(&mu));
            let mut longer = mu.clone();
            longer.push(extra);
            let after = cs.violations(&part(&longer));
            prop_assert!(before.is_subset(&after));
            if !cs.last_part_violates(&longer) {
                prop_assert_eq!(before, after);
            }
        }
    }
}
