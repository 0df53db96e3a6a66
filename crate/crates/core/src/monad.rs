//! Linear monads on P^2 for normalized sheaves, the kernel presentation in the
//! `c + d = 0` case, partition types of zero-dimensional quotients, and the
//! dimensions entering the group action on each stratum.
//!
//! The monad shape assumes the sheaf satisfies the vanishing hypotheses of the
//! linearity criterion (`H^0(F(-1)) = H^2(F(-2)) = 0` and so on). Those are
//! statements about an actual sheaf and are not checked here.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chow::{Ambient, ChernCharacter};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::shape::{hom_dim, ShapeDescriptor};

/// `-r + 1 <= d <= 0`.
pub fn is_normalized(r: i64, d: i64) -> Result<bool> {
    if r <= 0 {
        return Err(Error::NonPositiveRank(r.to_string()));
    }
    Ok(-r < d && d <= 0)
}

/// `c = -chi(F(-1))` for `ch(F) = (r, d, ch_2)` on P^2.
pub fn charge(r: i64, d: i64, ch2: &Rational) -> Rational {
    let x = ChernCharacter::new(Ambient::P2, vec![Rational::from(r), Rational::from(d), ch2.clone()])
        .expect("integer rank");
    -x.twist(-1).euler_characteristic()
}

/// `O(-1)^v -> O^w -> O(1)^u` with `(v, w, u) = (d + c, r + d + 2c, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonadShape {
    pub v: u64,
    pub w: u64,
    pub u: u64,
}

impl MonadShape {
    pub fn left(&self) -> ShapeDescriptor {
        ShapeDescriptor::single(-1, self.v)
    }

    pub fn middle(&self) -> ShapeDescriptor {
        ShapeDescriptor::single(0, self.w)
    }

    pub fn right(&self) -> ShapeDescriptor {
        ShapeDescriptor::single(1, self.u)
    }

    /// `w - v - u`.
    pub fn rank(&self) -> i64 {
        self.w as i64 - self.v as i64 - self.u as i64
    }

    /// `v - u`.
    pub fn degree(&self) -> i64 {
        self.v as i64 - self.u as i64
    }

    /// `ch(middle) - ch(left) - ch(right)`, the character of the cohomology sheaf.
    pub fn homology_character(&self) -> ChernCharacter {
        let ch = |s: ShapeDescriptor| s.chern_character(Ambient::P2);
        ch(self.middle())
            .sub(&ch(self.left()))
            .and_then(|x| x.sub(&ch(self.right())))
            .expect("same ambient")
    }

    /// Shape of the dualized monad: the outer exponents swap.
    pub fn dual(&self) -> MonadShape {
        MonadShape { v: self.u, w: self.w, u: self.v }
    }
}

impl fmt::Display for MonadShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} -> {}", self.left(), self.middle(), self.right())
    }
}

fn non_negative(what: &'static str, value: i64) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::Negative { what, value })
}

/// The linear monad whose middle homology has character `(r, d, ch_2)`.
pub fn monad_shape(r: i64, d: i64, ch2: &Rational) -> Result<MonadShape> {
    if !is_normalized(r, d)? {
        return Err(Error::NotNormalized { rank: r, d });
    }
    let c = charge(r, d, ch2);
    let c = c
        .to_i64()
        .ok_or_else(|| Error::NotRealizable(format!("charge {c} is not an integer")))?;
    if c < 0 {
        return Err(Error::NotRealizable(format!("charge {c} is negative")));
    }
    if d + c < 0 {
        return Err(Error::NotRealizable(format!("left exponent d + c = {} is negative", d + c)));
    }
    let shape = MonadShape {
        v: non_negative("left exponent", d + c)?,
        w: non_negative("middle exponent", r + d + 2 * c)?,
        u: non_negative("right exponent", c)?,
    };
    let target = ChernCharacter::new(Ambient::P2, vec![Rational::from(r), Rational::from(d), ch2.clone()])?;
    if shape.homology_character() != target {
        return Err(Error::NotRealizable(format!("monad {shape} does not reproduce {target:?}")));
    }
    Ok(shape)
}

pub fn dual_complex_shape(m: &MonadShape) -> MonadShape {
    m.dual()
}

/// Source and target of a map between split bundles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapShape {
    pub source: ShapeDescriptor,
    pub target: ShapeDescriptor,
}

/// When `c + d = 0`, `F` is the kernel of a surjection `O^{r+c} -> O(1)^c`
/// and `F^*` has the resolution `0 -> O(-1)^c -> O^{r+c} -> F^* -> 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelPresentation {
    pub surjection: MapShape,
    pub dual_resolution: MapShape,
    /// `dim Hom(O(-1)^c, O^{r+c}) = 3c(r+c)`.
    #[serde(with = "crate::rational::bigint_string")]
    pub hom_dim: BigInt,
}

pub fn kernel_presentation(r: i64, c: i64) -> Result<KernelPresentation> {
    if r <= 0 {
        return Err(Error::NonPositiveRank(r.to_string()));
    }
    let c = non_negative("charge", c)?;
    let free = ShapeDescriptor::single(0, r as u64 + c);
    let dual_resolution = MapShape { source: ShapeDescriptor::single(-1, c), target: free.clone() };
    let hom_dim = hom_dim(&dual_resolution.source, &dual_resolution.target, Ambient::P2);
    Ok(KernelPresentation {
        surjection: MapShape { source: free, target: ShapeDescriptor::single(1, c) },
        dual_resolution,
        hom_dim,
    })
}

/// An integer partition, parts non-increasing and positive.
pub type Partition = Vec<u32>;

/// A multiset of partitions, one per support point of a zero-dimensional
/// sheaf, kept sorted in descending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct PartitionType(Vec<Partition>);

impl PartitionType {
    pub fn new(mut parts: Vec<Partition>) -> Result<Self> {
        for p in &mut parts {
            if p.is_empty() || p.contains(&0) {
                return Err(Error::MalformedShape(format!("partition {p:?} must have positive parts")));
            }
            p.sort_unstable_by(|a, b| b.cmp(a));
        }
        parts.sort_by(|a, b| b.cmp(a));
        Ok(PartitionType(parts))
    }

    pub fn parts(&self) -> &[Partition] {
        &self.0
    }

    /// Length `l` of the quotient.
    pub fn total(&self) -> u64 {
        self.0.iter().flatten().map(|&x| u64::from(x)).sum()
    }

    pub fn points(&self) -> usize {
        self.0.len()
    }

    /// `Some(sum m_x^2)` when every partition is `(1, ..., 1)`, else `None`.
    pub fn reduced_aut_dim(&self) -> Option<u64> {
        self.0
            .iter()
            .map(|p| p.iter().all(|&x| x == 1).then(|| (p.len() as u64).pow(2)))
            .sum()
    }
}

impl TryFrom<Vec<Partition>> for PartitionType {
    type Error = Error;
    fn try_from(v: Vec<Partition>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<PartitionType> for Vec<Partition> {
    fn from(p: PartitionType) -> Self {
        p.0
    }
}

impl fmt::Display for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("(")?;
            for (j, x) in p.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PartitionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Partitions of `n`, each non-increasing, in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for x in (1..=cap.min(rest)).rev() {
            prefix.push(x);
            go(rest - x, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All multisets of partitions with total `l`, in descending order.
pub fn partition_types(l: i64) -> Result<Vec<PartitionType>> {
    let l = u32::try_from(l).map_err(|_| Error::Negative { what: "length", value: l })?;
    // every partition of every size 1..=l, in descending order; a multiset is
    // a non-increasing sequence of indices into this list
    let mut catalog: Vec<Partition> = (1..=l).flat_map(partitions_of).collect();
    catalog.sort_by(|a, b| b.cmp(a));

    fn go(catalog: &[Partition], start: usize, rest: u32, chosen: &mut Vec<Partition>, out: &mut Vec<PartitionType>) {
        if rest == 0 {
            out.push(PartitionType(chosen.clone()));
            return;
        }
        for (i, p) in catalog.iter().enumerate().skip(start) {
            let size: u32 = p.iter().sum();
            if size <= rest {
                chosen.push(p.clone());
                go(catalog, i, rest - size, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&catalog, 0, l, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Dimensions attached to the stratum of partition type `lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumDims {
    pub length: u64,
    /// `dim Hom(O^{r+c}, Q) = l (r + c)`.
    pub hom_dim: u64,
    /// `l (r + c) - 1`, absent when `l = 0`.
    pub projective_dim: Option<u64>,
    /// `dim Aut(O(-1)^c) = c^2`.
    pub aut_left: u64,
    /// `dim Aut(O^{r+c}) = (r + c)^2`.
    pub aut_middle: u64,
    /// Known only when every point is reduced-type `(1, ..., 1)`.
    pub aut_lambda: Option<u64>,
}

pub fn stratum_dims(r: i64, c: i64, lambda: &PartitionType) -> Result<StratumDims> {
    if r <= 0 {
        return Err(Error::NonPositiveRank(r.to_string()));
    }
    let c = non_negative("charge", c)?;
    let free = r as u64 + c;
    let length = lambda.total();
    let hom_dim = length * free;
    Ok(StratumDims {
        length,
        hom_dim,
        projective_dim: (length > 0).then(|| hom_dim - 1),
        aut_left: c * c,
        aut_middle: free * free,
        aut_lambda: lambda.reduced_aut_dim(),
    })
}
