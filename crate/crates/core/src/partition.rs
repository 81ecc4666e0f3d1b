//! Integer partitions stored as weakly decreasing tuples.
//!
//! The derived ordering is lexicographic with the largest part compared
//! first, which is the column order used for relation matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(
                parts.iter().map(|&p| i64::from(p)).collect(),
            ));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self, Error> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    /// Digit-concatenated (`5522`) when every part is a single digit,
    /// comma-separated (`10,10,8,7`) otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&p| p < 10) {
            for p in &self.0 {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::Parse(format!("invalid partition `{s}`"));
        let parts: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Partition::new(parts)
    }
}

/// All partitions of `n` with exactly `len` parts, each in `lo..=hi`, in
/// ascending lexicographic order.
pub fn partitions_in_box(n: u32, len: usize, lo: u32, hi: u32) -> Vec<Partition> {
    fn rec(rem: u32, slots: usize, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if rem == 0 {
                out.push(Partition(cur.clone()));
            }
            return;
        }
        let slots32 = slots as u32;
        if rem < lo * slots32 {
            return;
        }
        // smallest admissible first part keeps the rest <= it
        let first_min = rem.div_ceil(slots32).max(lo);
        let first_max = hi.min(rem - lo * (slots32 - 1));
        for a in first_min..=first_max {
            cur.push(a);
            rec(rem - a, slots - 1, lo, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo == 0 || lo > hi {
        return out;
    }
    rec(n, len, lo, hi, &mut Vec::with_capacity(len), &mut out);
    out
}
