//! Homogeneous relations on `L(5Λ0)` as sparse maps over X-partitions.
//!
//! A relation of degree `n` and leading length `ℓ` is the list of
//! coefficients of the monomials `X(-π)v` with `|π| = n`, `ℓ(π) = ℓ`; all
//! monomials of shorter X-length (and every `α`-tail) are discarded, i.e.
//! relations live in the quotient by `L(n, ℓ-1)`. In that quotient the
//! operators `X(-m)` commute, so a product of X-operators is identified
//! with the sorted partition of its indices.
//!
//! Two relation families are generated:
//!
//! - `R(-p)` with X-multipliers: only the cubic part `X(α,α,α; w)` has
//!   leading length, the quadratic correction lies in lower length.
//! - `S(-p)` with X-multipliers: `G(-p) = X(α,α,να)` minus the `Ψ`-shifted
//!   `H = X(-α,-α,ν²α)` terms obtained by moving `E^±(-α)` past the
//!   multipliers.
//!
//! Parts equal to 1 are dropped (`X(-1)v ∈ Cα(-1)v`), and so are parts
//! beyond `max_part`: the dropped columns are all lexicographically larger
//! than the retained ones, so pivots of the projection are pivots of the
//! full relation space.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{omega_antisym, omega_pow, CycNum};
use crate::error::Error;
use crate::partition::{partitions_in_box, Partition};
use crate::qseries::psi_integers;

/// Smallest degree of a triple with all parts at least 2.
pub const MIN_TRIPLE_DEGREE: u32 = 6;

/// Coefficient of `X(-(a,b,c))` in `X(ν^h α, ν^i α, ν^j α; w)`, renormalized
/// so that the all-equal case is a single power of `w`.
///
/// For two equal parts the repeated value plays the role of `A` and the
/// single value `B`, whatever their relative size.
pub fn triple_coeff(h: i64, i: i64, j: i64, a: i64, b: i64, c: i64) -> Result<CycNum, Error> {
    if !(a >= b && b >= c && c >= 1) {
        return Err(Error::InvalidTriple(a, b, c));
    }
    let w = omega_pow;
    let v = if a == b && b == c {
        w(-a * (h + i + j))
    } else if a == b || b == c {
        let (rep, single) = if a == b { (a, c) } else { (b, a) };
        w(-rep * (i + j) - single * h) + w(-rep * (h + j) - single * i) + w(-rep * (h + i) - single * j)
    } else {
        [
            w(-c * h - b * i - a * j),
            w(-b * h - c * i - a * j),
            w(-c * h - a * i - b * j),
            w(-a * h - c * i - b * j),
            w(-b * h - a * i - c * j),
            w(-a * h - b * i - c * j),
        ]
        .into_iter()
        .sum()
    };
    Ok(v)
}

/// The three cubic vertex-operator products that enter the relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleKind {
    /// `X(α, α, α; w)`, the leading part of `R(w)`.
    R,
    /// `G(w) = X(α, α, να; w)`.
    G,
    /// `H(w) = X(-α, -α, ν²α; w)`, with `-α = ν³α`.
    H,
}

impl TripleKind {
    pub fn rotation(self) -> (i64, i64, i64) {
        match self {
            TripleKind::R => (0, 0, 0),
            TripleKind::G => (0, 0, 1),
            TripleKind::H => (3, 3, 2),
        }
    }
}

/// Terms `X(-(a,b,c))` of the degree `-n` coefficient of a cubic product,
/// restricted to `2 <= c <= b <= a <= max_part`.
pub fn triple_expansion(kind: TripleKind, n: u32, max_part: u32) -> BTreeMap<Partition, CycNum> {
    let (h, i, j) = kind.rotation();
    partitions_in_box(n, 3, 2, max_part)
        .into_iter()
        .map(|t| {
            let p = t.parts();
            let v = triple_coeff(h, i, j, p[0].into(), p[1].into(), p[2].into())
                .expect("partitions_in_box yields sorted triples");
            (t, v)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelationKind {
    R,
    S,
}

/// `X(-q_1)⋯X(-q_h) K(-p) X(-r_1)⋯X(-r_m) v` with `K` one of `R`, `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RelationDescriptor {
    pub kind: RelationKind,
    pub left: Vec<u32>,
    pub p: u32,
    pub right: Vec<u32>,
}

impl RelationDescriptor {
    pub fn new(kind: RelationKind, left: Vec<u32>, p: u32, right: Vec<u32>) -> Result<Self, Error> {
        let d = RelationDescriptor { kind, left, p, right };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.p == 0 {
            return Err(Error::InvalidDescriptor(format!("{self}: p must be positive")));
        }
        if let Some(m) = self.left.iter().chain(&self.right).find(|&&m| m < 2) {
            return Err(Error::InvalidDescriptor(format!(
                "{self}: multiplier {m} is below 2"
            )));
        }
        Ok(())
    }

    pub fn degree(&self) -> u32 {
        self.p + self.left.iter().sum::<u32>() + self.right.iter().sum::<u32>()
    }

    pub fn length(&self) -> usize {
        3 + self.left.len() + self.right.len()
    }

    /// Order of `Ψ` beyond which no shifted term survives the part bounds.
    pub fn required_psi_order(&self, max_part: u32) -> usize {
        let left = self.left.iter().map(|&q| max_part.saturating_sub(q));
        let right = self.right.iter().map(|&r| r.saturating_sub(2));
        left.chain(right).max().unwrap_or(0) as usize
    }
}

impl fmt::Display for RelationDescriptor {
    /// `X(-6)S(-8)`, `R(-12)X(-2)`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in &self.left {
            write!(f, "X(-{q})")?;
        }
        let k = match self.kind {
            RelationKind::R => 'R',
            RelationKind::S => 'S',
        };
        write!(f, "{k}(-{})", self.p)?;
        for r in &self.right {
            write!(f, "X(-{r})")?;
        }
        Ok(())
    }
}

impl FromStr for RelationDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidDescriptor(format!("cannot parse `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = compact.as_str();
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut center: Option<(RelationKind, u32)> = None;
        while !rest.is_empty() {
            let head = rest.chars().next().ok_or_else(bad)?;
            let close = rest.find(')').ok_or_else(bad)?;
            let arg = rest.get(1..close).ok_or_else(bad)?;
            let arg = arg
                .strip_prefix("(-")
                .ok_or_else(bad)?
                .parse::<u32>()
                .map_err(|_| bad())?;
            rest = &rest[close + 1..];
            match (head, center) {
                ('X', None) => left.push(arg),
                ('X', Some(_)) => right.push(arg),
                ('R', None) => center = Some((RelationKind::R, arg)),
                ('S', None) => center = Some((RelationKind::S, arg)),
                _ => return Err(bad()),
            }
        }
        let (kind, p) = center.ok_or_else(bad)?;
        RelationDescriptor::new(kind, left, p, right)
    }
}

/// A relation modulo `L(degree, length - 1)`: `Σ terms[π] X(-π) v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub degree: u32,
    pub length: usize,
    pub label: String,
    #[serde(with = "terms_as_pairs")]
    pub terms: BTreeMap<Partition, CycNum>,
}

mod terms_as_pairs {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        terms: &BTreeMap<Partition, CycNum>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        s.collect_seq(terms.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<Partition, CycNum>, D::Error> {
        let pairs: Vec<(Partition, CycNum)> = Vec::deserialize(d)?;
        Ok(pairs.into_iter().collect())
    }
}

impl Relation {
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Zero::is_zero)
    }

    /// Coefficient of `X(-π)`, zero when absent.
    pub fn coeff(&self, pi: &Partition) -> CycNum {
        self.terms.get(pi).cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn scaled(&self, s: &CycNum) -> Relation {
        Relation {
            degree: self.degree,
            length: self.length,
            label: self.label.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    /// Removes explicit zero coefficients.
    pub fn pruned(mut self) -> Relation {
        self.terms.retain(|_, v| !v.is_zero());
        self
    }

    /// Lexicographically smallest partition with a nonzero coefficient.
    pub fn leading_partition(&self) -> Option<&Partition> {
        self.terms.iter().find(|(_, v)| !v.is_zero()).map(|(k, _)| k)
    }

    /// `[coefficient, [parts]]` pairs, one per line, zeros omitted.
    pub fn to_pairs_text(&self) -> String {
        let mut out = String::new();
        for (pi, v) in self.terms.iter().filter(|(_, v)| !v.is_zero()) {
            let parts: Vec<String> = pi.parts().iter().map(u32::to_string).collect();
            out.push_str(&format!("[{v}, [{}]]\n", parts.join(",")));
        }
        out
    }

    /// Two-line TSV: header of partitions, then the coefficient row.
    pub fn to_tsv(&self, columns: &[Partition]) -> String {
        let header: Vec<String> = columns.iter().map(Partition::to_string).collect();
        let row: Vec<String> = columns.iter().map(|c| self.coeff(c).to_string()).collect();
        format!("relation\t{}\n{}\t{}\n", header.join("\t"), self.label, row.join("\t"))
    }
}

/// Generates relations; caches `Ψ` coefficients and `H` triple expansions.
pub struct RelationGenerator {
    max_part: u32,
    fixed_psi_order: Option<usize>,
    psi: Vec<CycNum>,
    h_cache: HashMap<u32, BTreeMap<Partition, CycNum>>,
}

impl RelationGenerator {
    /// `psi_order` bounds the shift indices in the `Ψ`-sums; with `None`
    /// the order grows to whatever each descriptor requires.
    pub fn new(max_part: u32, psi_order: Option<usize>) -> Self {
        let order = psi_order.unwrap_or(max_part as usize);
        RelationGenerator {
            max_part,
            fixed_psi_order: psi_order,
            psi: psi_integers(order).into_iter().map(CycNum::from).collect(),
            h_cache: HashMap::new(),
        }
    }

    fn ensure_psi_order(&mut self, order: usize) {
        if self.fixed_psi_order.is_none() && self.psi.len() <= order {
            self.psi = psi_integers(order).into_iter().map(CycNum::from).collect();
        }
    }

    pub fn max_part(&self) -> u32 {
        self.max_part
    }

    fn h_terms(&mut self, n: u32) -> &BTreeMap<Partition, CycNum> {
        let max_part = self.max_part;
        self.h_cache
            .entry(n)
            .or_insert_with(|| triple_expansion(TripleKind::H, n, max_part))
    }

    pub fn generate(&mut self, d: &RelationDescriptor) -> Result<Relation, Error> {
        d.validate()?;
        let max_part = self.max_part;
        let mut acc = Accumulator::new(max_part);
        let multipliers: Vec<u32> = d.left.iter().chain(&d.right).copied().collect();

        let lead_kind = match d.kind {
            RelationKind::R => TripleKind::R,
            RelationKind::S => TripleKind::G,
        };
        for (t, v) in triple_expansion(lead_kind, d.p, max_part) {
            acc.add(t.parts().iter().copied(), multipliers.iter().map(|&m| i64::from(m)), &v);
        }

        if d.kind == RelationKind::S {
            self.ensure_psi_order(d.required_psi_order(max_part));
            self.subtract_h_sum(d, &mut acc);
        }

        Ok(Relation {
            degree: d.degree(),
            length: d.length(),
            label: d.to_string(),
            terms: acc.terms,
        })
    }

    /// Subtracts `Σ ∏a_{i_u} ∏a_{j_v} X(-q-i) H(-p+Σi-Σj) X(-r+j)`.
    fn subtract_h_sum(&mut self, d: &RelationDescriptor, acc: &mut Accumulator) {
        let max_part = i64::from(self.max_part);
        // per-slot admissible (shifted part, psi coefficient) choices
        let slots: Vec<Vec<(i64, i64, CycNum)>> = d
            .left
            .iter()
            .map(|&q| {
                let q = i64::from(q);
                (0..self.psi.len() as i64)
                    .map(|i| (q + i, -i, self.psi[i as usize].clone()))
                    .take_while(|(part, _, _)| *part <= max_part)
                    .collect()
            })
            .chain(d.right.iter().map(|&r| {
                let r = i64::from(r);
                (0..self.psi.len() as i64)
                    .map(|j| (r - j, j, self.psi[j as usize].clone()))
                    .take_while(|(part, _, _)| *part >= 2)
                    .collect()
            }))
            .collect();

        let mut choice = Vec::with_capacity(slots.len());
        self.walk_shifts(d.p, &slots, &mut choice, CycNum::from(-1), acc);
    }

    fn walk_shifts(
        &mut self,
        p: u32,
        slots: &[Vec<(i64, i64, CycNum)>],
        choice: &mut Vec<i64>,
        coeff: CycNum,
        acc: &mut Accumulator,
    ) {
        let depth = choice.len();
        if depth == slots.len() {
            let shift: i64 = slots
                .iter()
                .zip(choice.iter())
                .map(|(slot, &k)| slot[k as usize].1)
                .sum();
            let h_degree = i64::from(p) + shift;
            if h_degree < i64::from(MIN_TRIPLE_DEGREE) {
                return;
            }
            let parts: Vec<i64> = slots
                .iter()
                .zip(choice.iter())
                .map(|(slot, &k)| slot[k as usize].0)
                .collect();
            let h = self.h_terms(h_degree as u32).clone();
            for (t, v) in &h {
                acc.add(t.parts().iter().copied(), parts.iter().copied(), &(&coeff * v));
            }
            return;
        }
        for k in 0..slots[depth].len() {
            let a = &slots[depth][k].2;
            if a.is_zero() {
                continue;
            }
            let next = &coeff * a;
            choice.push(k as i64);
            self.walk_shifts(p, slots, choice, next, acc);
            choice.pop();
        }
    }
}

struct Accumulator {
    max_part: u32,
    terms: BTreeMap<Partition, CycNum>,
}

impl Accumulator {
    fn new(max_part: u32) -> Self {
        Accumulator {
            max_part,
            terms: BTreeMap::new(),
        }
    }

    /// Adds `v · X(-triple) X(-extra)`; drops monomials with a part outside
    /// `2..=max_part`.
    fn add(&mut self, triple: impl Iterator<Item = u32>, extra: impl Iterator<Item = i64>, v: &CycNum) {
        let mut parts: Vec<u32> = triple.collect();
        for e in extra {
            if e < 2 || e > i64::from(self.max_part) {
                return;
            }
            parts.push(e as u32);
        }
        if parts.iter().any(|&x| x < 2 || x > self.max_part) {
            return;
        }
        let key = Partition::from_parts(parts).expect("parts are positive");
        *self.terms.entry(key).or_insert_with(CycNum::zero) += v;
    }
}

/// One-shot form of [`RelationGenerator::generate`].
pub fn generate_relation(
    d: &RelationDescriptor,
    max_part: u32,
    psi_order: usize,
) -> Result<Relation, Error> {
    RelationGenerator::new(max_part, Some(psi_order)).generate(d)
}

/// Options for [`enumerate_descriptors`].
#[derive(Clone, Debug)]
pub struct DescriptorOptions {
    /// Smallest `p` of the cubic factor.
    pub min_p: u32,
    /// Largest X-multiplier; defaults to the column bound.
    pub max_multiplier: Option<u32>,
}

impl Default for DescriptorOptions {
    fn default() -> Self {
        DescriptorOptions {
            min_p: MIN_TRIPLE_DEGREE,
            max_multiplier: None,
        }
    }
}

/// All descriptors of total degree `degree` and leading length `length`,
/// sorted. Multipliers range over `2..=max_multiplier`; `R` relations are
/// listed once per multiplier multiset (placement does not matter modulo
/// lower length), `S` relations once per split into left and right
/// multisets.
pub fn enumerate_descriptors(
    degree: u32,
    length: usize,
    max_part: u32,
    opts: &DescriptorOptions,
) -> Vec<RelationDescriptor> {
    if length < 3 {
        return Vec::new();
    }
    let count = length - 3;
    let top = opts.max_multiplier.unwrap_or(max_part);
    let mut out = BTreeSet::new();
    let mut mset = Vec::with_capacity(count);
    multisets(2, top, count, degree, &mut mset, &mut |m: &[u32]| {
        let sum: u32 = m.iter().sum();
        if sum > degree || degree - sum < opts.min_p {
            return;
        }
        let p = degree - sum;
        out.insert(RelationDescriptor {
            kind: RelationKind::R,
            left: Vec::new(),
            p,
            right: m.to_vec(),
        });
        for mask in 0u32..(1 << m.len()) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (bit, &x) in m.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    left.push(x);
                } else {
                    right.push(x);
                }
            }
            out.insert(RelationDescriptor {
                kind: RelationKind::S,
                left,
                p,
                right,
            });
        }
    });
    out.into_iter().collect()
}

fn multisets(
    lo: u32,
    hi: u32,
    count: usize,
    budget: u32,
    cur: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if cur.len() == count {
        f(cur);
        return;
    }
    let used: u32 = cur.iter().sum();
    for x in lo..=hi {
        if used + x > budget {
            break;
        }
        cur.push(x);
        multisets(x, hi, count, budget, cur, f);
        cur.pop();
    }
}

/// `[X(m), X(n)] = x·X(m+n) + alpha·α(m+n) + c·c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XxBracket {
    pub x: CycNum,
    pub alpha: CycNum,
    pub c: CycNum,
}

pub fn bracket_xx(m: i64, n: i64) -> XxBracket {
    let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
    let w = CycNum::omega();
    let x = &omega_pow(2) * &omega_antisym(n - m) * CycNum::ratio(1, 6);
    let alpha = &w * CycNum::ratio(-sign, 6);
    let c = if m + n == 0 {
        &w * CycNum::ratio(sign * m, 36)
    } else {
        CycNum::zero()
    };
    XxBracket { x, alpha, c }
}

/// Coefficient of `X(m+n)` in `[α(m), X(n)]`.
pub fn bracket_ax(m: i64, _n: i64) -> Result<CycNum, Error> {
    if !is_heisenberg_index(m) {
        return Err(Error::NotHeisenbergIndex(m));
    }
    Ok(CycNum::from(1))
}

/// Coefficient of `c` in `[α(m), α(n)]`.
pub fn bracket_aa(m: i64, n: i64) -> Result<BigRational, Error> {
    for k in [m, n] {
        if !is_heisenberg_index(k) {
            return Err(Error::NotHeisenbergIndex(k));
        }
    }
    Ok(if m + n == 0 {
        BigRational::new(m.into(), 6.into())
    } else {
        BigRational::zero()
    })
}

pub fn is_heisenberg_index(j: i64) -> bool {
    matches!(j.rem_euclid(6), 1 | 5)
}

/// Basis of the Lie algebra spanned by `X(n)`, `α(j)` (`j ≡ ±1 mod 6`), `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KBasis {
    X(i64),
    Alpha(i64),
    C,
}

/// A finite linear combination of [`KBasis`] elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KElement(BTreeMap<KBasis, CycNum>);

impl KElement {
    pub fn basis(b: KBasis) -> Self {
        let mut m = BTreeMap::new();
        m.insert(b, CycNum::from(1));
        KElement(m)
    }

    pub fn add_term(&mut self, b: KBasis, v: CycNum) {
        if let KBasis::Alpha(j) = b {
            // α(j) vanishes off the Heisenberg indices
            if !is_heisenberg_index(j) {
                return;
            }
        }
        let e = self.0.entry(b).or_insert_with(CycNum::zero);
        *e += v;
        if e.is_zero() {
            self.0.remove(&b);
        }
    }

    pub fn add(&mut self, other: &KElement) {
        for (b, v) in &other.0 {
            self.add_term(*b, v.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<KBasis, CycNum> {
        &self.0
    }

    /// Bilinear extension of the basis brackets.
    pub fn bracket(&self, other: &KElement) -> KElement {
        let mut out = KElement::default();
        for (b1, v1) in &self.0 {
            for (b2, v2) in &other.0 {
                let coeff = v1 * v2;
                for (b, v) in basis_bracket(*b1, *b2).0 {
                    out.add_term(b, &coeff * &v);
                }
            }
        }
        out
    }
}

fn basis_bracket(x: KBasis, y: KBasis) -> KElement {
    use KBasis::*;
    let mut out = KElement::default();
    match (x, y) {
        (C, _) | (_, C) => {}
        (Alpha(m), Alpha(n)) => {
            let c = bracket_aa(m, n).expect("alpha indices are Heisenberg");
            out.add_term(C, CycNum::from(c));
        }
        (Alpha(m), X(n)) => {
            out.add_term(X(m + n), bracket_ax(m, n).expect("alpha index is Heisenberg"));
        }
        (X(m), Alpha(n)) => {
            out.add_term(X(m + n), -bracket_ax(n, m).expect("alpha index is Heisenberg"));
        }
        (X(m), X(n)) => {
            let b = bracket_xx(m, n);
            out.add_term(X(m + n), b.x);
            out.add_term(Alpha(m + n), b.alpha);
            out.add_term(C, b.c);
        }
    }
    out
}

/// `α(-λ) X(-μ) v` with every part of `λ` congruent to ±1 mod 6.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMonomial {
    alpha: Partition,
    x: Partition,
}

impl GradedMonomial {
    pub fn new(alpha: Partition, x: Partition) -> Result<Self, Error> {
        if let Some(&bad) = alpha.parts().iter().find(|&&p| !is_heisenberg_index(p.into())) {
            return Err(Error::NotHeisenbergIndex(bad.into()));
        }
        Ok(GradedMonomial { alpha, x })
    }

    pub fn alpha_part(&self) -> &Partition {
        &self.alpha
    }

    pub fn x_part(&self) -> &Partition {
        &self.x
    }

    pub fn degree(&self) -> u64 {
        self.alpha.weight() + self.x.weight()
    }
}

/// The monomial order: larger `|μ|` is smaller, then longer `μ`, then
/// lexicographically smaller `μ`, then longer `λ`, then lexicographically
/// smaller `λ`.
pub fn compare_monomials(x: &GradedMonomial, y: &GradedMonomial) -> Result<Ordering, Error> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch(x.degree(), y.degree()));
    }
    Ok(y.x.weight()
        .cmp(&x.x.weight())
        .then_with(|| y.x.len().cmp(&x.x.len()))
        .then_with(|| x.x.cmp(&y.x))
        .then_with(|| y.alpha.len().cmp(&x.alpha.len()))
        .then_with(|| x.alpha.cmp(&y.alpha)))
}
