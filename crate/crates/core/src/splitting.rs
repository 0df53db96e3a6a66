//! Generic splitting types `(b_1 >= ... >= b_r)` and the constraints a
//! mu-semistable reflexive sheaf on P^3 puts on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Degrees of the summands of the restriction to a generic line, non-increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplittingType(Vec<i64>);

impl SplittingType {
    /// Rejects empty or increasing input.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySplittingType);
        }
        if !is_non_increasing(&entries) {
            return Err(Error::MalformedShape(format!(
                "splitting type {entries:?} is not non-increasing"
            )));
        }
        Ok(SplittingType(entries))
    }

    /// Canonicalizes arbitrary entries by sorting them non-increasingly.
    pub fn sorted(mut entries: Vec<i64>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `c_1(O(b)) = sum of b_i`.
    pub fn c1(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn b_max(&self) -> i64 {
        self.0[0]
    }

    pub fn b_min(&self) -> i64 {
        *self.0.last().expect("non-empty")
    }

    /// `sum of b_i^2`, as used by the twist-invariant h^1 bound.
    pub fn sum_of_squares(&self) -> Rational {
        self.0.iter().map(|&b| Rational::from(b).pow(2)).sum()
    }

    /// Splitting type of `F(k)`.
    pub fn shift(&self, k: i64) -> Self {
        SplittingType(self.0.iter().map(|b| b + k).collect())
    }

    /// Splitting type of `F^*`: negate and reverse.
    pub fn dual(&self) -> Self {
        SplittingType(self.0.iter().rev().map(|b| -b).collect())
    }
}

impl TryFrom<Vec<i64>> for SplittingType {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SplittingType> for Vec<i64> {
    fn from(b: SplittingType) -> Self {
        b.0
    }
}

impl fmt::Debug for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

fn is_non_increasing(entries: &[i64]) -> bool {
    entries.windows(2).all(|w| w[0] >= w[1])
}

/// True iff `entries` has length `r`, sums to `c1`, and is non-increasing.
pub fn validate(entries: &[i64], r: i64, c1: i64) -> bool {
    entries.len() as i64 == r && entries.iter().sum::<i64>() == c1 && is_non_increasing(entries)
}

/// Every consecutive gap `b_i - b_{i+1}` is at most 2.
pub fn gap_ok(b: &SplittingType) -> bool {
    b.0.windows(2).all(|w| w[0] - w[1] <= 2)
}

/// `|c_1|/r + r`, the radius of the box every entry must lie in.
pub fn splitting_radius(r: i64, c1: i64) -> Result<Rational> {
    if r <= 0 {
        return Err(Error::NonPositiveRank(r.to_string()));
    }
    Ok(Rational::from(c1.abs()) / Rational::from(r) + Rational::from(r))
}

/// Every `|b_i| <= |c_1|/r + r`. Requires `validate(b, r, c1)`.
pub fn magnitude_ok(b: &SplittingType, r: i64, c1: i64) -> Result<bool> {
    if !validate(b.entries(), r, c1) {
        return Err(Error::InvalidSplittingType { entries: b.to_string(), rank: r, c1 });
    }
    let t = splitting_radius(r, c1)?;
    Ok(b.0.iter().all(|&x| Rational::from(x.abs()) <= t))
}

/// All splitting types of rank `r` with `c_1 = c1` inside the magnitude box,
/// optionally filtered by the gap condition. Sorted lexicographically descending.
pub fn enumerate_splitting_types(r: i64, c1: i64, reflexive_gap: bool) -> Result<Vec<SplittingType>> {
    let t = splitting_radius(r, c1)?;
    let bound = i64::try_from(t.floor()).expect("radius fits in i64");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(r as usize);
    extend(&mut prefix, r as usize, c1, bound, bound, reflexive_gap, &mut out);
    Ok(out)
}

// Entries are chosen from largest to smallest, so the output comes out in
// descending lexicographic order without a sort.
fn extend(
    prefix: &mut Vec<i64>,
    remaining: usize,
    sum_left: i64,
    cap: i64,
    bound: i64,
    gap: bool,
    out: &mut Vec<SplittingType>,
) {
    if remaining == 0 {
        if sum_left == 0 {
            out.push(SplittingType(prefix.clone()));
        }
        return;
    }
    let rest = remaining as i64 - 1;
    let mut lo = -bound;
    if gap {
        if let Some(&last) = prefix.last() {
            lo = lo.max(last - 2);
        }
    }
    let mut x = cap;
    while x >= lo {
        // the remaining entries lie in [-bound, x]
        if sum_left - x <= rest * x && sum_left - x >= -rest * bound {
            prefix.push(x);
            extend(prefix, remaining - 1, sum_left - x, x, bound, gap, out);
            prefix.pop();
        }
        x -= 1;
    }
}
