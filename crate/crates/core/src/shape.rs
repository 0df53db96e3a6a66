//! Direct sums of line bundles `O(a_1)^{e_1} + ... + O(a_m)^{e_m}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bounds::h0_line_bundle;
use crate::chow::{Ambient, ChernCharacter};

/// A split bundle as `(twist, exponent)` pairs, twists strictly descending and
/// exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<(i64, u64)>", into = "Vec<(i64, u64)>")]
pub struct ShapeDescriptor(Vec<(i64, u64)>);

impl ShapeDescriptor {
    /// Merges equal twists and drops zero exponents.
    pub fn new(summands: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut merged: BTreeMap<i64, u64> = BTreeMap::new();
        for (twist, exp) in summands {
            *merged.entry(twist).or_default() += exp;
        }
        ShapeDescriptor(merged.into_iter().rev().filter(|&(_, e)| e > 0).collect())
    }

    /// One copy of each listed twist.
    pub fn from_twists(twists: &[i64]) -> Self {
        Self::new(twists.iter().map(|&t| (t, 1)))
    }

    pub fn single(twist: i64, exponent: u64) -> Self {
        Self::new([(twist, exponent)])
    }

    pub fn summands(&self) -> &[(i64, u64)] {
        &self.0
    }

    pub fn rank(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of `O(twist)`, zero if absent.
    pub fn exponent(&self, twist: i64) -> u64 {
        self.0.iter().find(|&&(t, _)| t == twist).map_or(0, |&(_, e)| e)
    }

    pub fn concat(&self, other: &ShapeDescriptor) -> Self {
        Self::new(self.0.iter().chain(&other.0).copied())
    }

    /// Twists with multiplicity, descending.
    pub fn twists(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().flat_map(|&(t, e)| std::iter::repeat_n(t, e as usize))
    }

    pub fn chern_character(&self, ambient: Ambient) -> ChernCharacter {
        self.0.iter().fold(ChernCharacter::zero(ambient), |acc, &(t, e)| {
            acc.add(&ChernCharacter::line_bundle(ambient, t).scale(e as i64)).expect("same ambient")
        })
    }
}

impl From<Vec<(i64, u64)>> for ShapeDescriptor {
    fn from(v: Vec<(i64, u64)>) -> Self {
        Self::new(v)
    }
}

impl From<ShapeDescriptor> for Vec<(i64, u64)> {
    fn from(s: ShapeDescriptor) -> Self {
        s.0
    }
}

impl fmt::Display for ShapeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, &(t, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "O({t})")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ShapeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `dim Hom(A, B)` on P^n for split `A`, `B`: sum of `e_a e_b h^0 O(t_b - t_a)`.
pub fn hom_dim(a: &ShapeDescriptor, b: &ShapeDescriptor, ambient: Ambient) -> BigInt {
    let n = ambient.dim();
    a.summands()
        .iter()
        .flat_map(|&(ta, ea)| {
            b.summands()
                .iter()
                .map(move |&(tb, eb)| BigInt::from(ea) * BigInt::from(eb) * h0_line_bundle(n, tb - ta))
        })
        .sum()
}
