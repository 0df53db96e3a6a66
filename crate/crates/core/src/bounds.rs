//! Explicit cohomology bounds for torsion-free sheaves on P^2 and P^3, and the
//! resulting bound on `ch_3` of a mu-semistable reflexive sheaf on P^3.
//!
//! Two flavours are provided. Per-splitting-type bounds use the actual
//! `sum b_i^2`; worst-case bounds ([`euler_bound`], [`ch3_bound`]) replace every
//! `b_i` by the radius `t = |c_1|/n + n`, so they depend on `(n, c_1, ch_2)` only.
//!
//! Negative intermediate factors can occur when `ch_2` is large and positive.
//! They are clamped at zero unless the caller asks for literal evaluation.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::chow::{Ambient, ChernCharacter};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::splitting::{splitting_radius, SplittingType};

/// Whether negative intermediate factors are clamped at zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Mode {
    #[default]
    Clamped,
    Literal,
}

impl Mode {
    pub fn is_literal(self) -> bool {
        self == Mode::Literal
    }

    fn apply(self, x: Rational) -> Rational {
        match self {
            Mode::Clamped => x.clamp_nonneg(),
            Mode::Literal => x,
        }
    }
}

/// `h^0(P^n, O(k)) = C(k+n, n)` for `k >= 0`, else 0.
pub fn h0_line_bundle(n: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 1..=n as i64 {
        acc = acc * BigInt::from(k + i) / BigInt::from(i);
    }
    acc
}

/// `C(b+2, 2) = (b+2)(b+1)/2` as a polynomial in `b`; for `b <= -3` this
/// equals `h^0 O(-b-3)` on P^2.
fn binom2_poly(b: i64) -> Rational {
    Rational::from(b + 2) * Rational::from(b + 1) / Rational::from(2)
}

/// `(h^0 O(b), h^0 O(-b-N-1))` summed over the splitting type: upper bounds for
/// the lowest and highest cohomology of a torsion-free sheaf with splitting type `b`.
pub fn extreme_bounds(b: &SplittingType, ambient: Ambient) -> (Rational, Rational) {
    let n = ambient.dim();
    let low: BigInt = b.entries().iter().map(|&bi| h0_line_bundle(n, bi)).sum();
    let high: BigInt = b.entries().iter().map(|&bi| h0_line_bundle(n, -bi - n as i64 - 1)).sum();
    (Rational::from(low), Rational::from(high))
}

fn check_rank(b: &SplittingType, rank: &Rational) -> Result<()> {
    if Rational::from(b.rank() as i64) != *rank {
        return Err(Error::RankMismatch { splitting: b.rank(), rank: rank.to_string() });
    }
    Ok(())
}

fn integral_c1(x: &ChernCharacter) -> Result<i64> {
    x.c1().to_i64().ok_or_else(|| Error::NonIntegralChern { index: 1, value: x.c1().to_string() })
}

/// Upper bounds for `h^0, h^1, h^2` of a torsion-free sheaf on P^2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct P2Bounds {
    pub h0: Rational,
    pub h1: Rational,
    pub h2: Rational,
}

/// `h^0, h^2 <= sum C(b_i+2, 2)` and `h^1 <= -(n + 3/2 c_1 + ch_2) + sum C(b_i+2, 2)`.
pub fn p2_bounds(b: &SplittingType, ch: &ChernCharacter) -> Result<P2Bounds> {
    if ch.ambient() != Ambient::P2 {
        return Err(Error::DimensionMismatch { left: ch.ambient().dim(), right: 2 });
    }
    check_rank(b, ch.rank())?;
    let binoms: Rational = b.entries().iter().map(|&bi| binom2_poly(bi)).sum();
    let h1 = &binoms - ch.euler_characteristic();
    Ok(P2Bounds { h0: binoms.clone(), h1, h2: binoms })
}

/// `-ch_2 + (1/2) sum b_i^2`, an upper bound for `h^1` on P^2 that is
/// unchanged by twisting and dualizing.
pub fn h1_invariant_bound(b: &SplittingType, ch2: &Rational) -> Rational {
    b.sum_of_squares() / Rational::from(2) - ch2
}

/// `Q = |c_1|/n + n + 4 - ch_2 + (1/2) sum b_i^2`: past `Q` the relevant
/// cohomology of the hyperplane restriction vanishes.
pub fn vanishing_q(n: i64, c1: i64, ch2: &Rational, b: &SplittingType) -> Result<Rational> {
    if b.rank() as i64 != n {
        return Err(Error::RankMismatch { splitting: b.rank(), rank: n.to_string() });
    }
    Ok(splitting_radius(n, c1)? + Rational::from(4) + h1_invariant_bound(b, ch2))
}

/// The four separate vanishing thresholds on P^2, one per cohomology group.
/// Vanishing holds for `k` strictly greater than each value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingThresholds {
    /// `h^0 F(-k) = 0` for `k > b_max`.
    pub h0_negative: Rational,
    /// `h^2 F(k) = 0` for `k > -b_min - 3`.
    pub h2_positive: Rational,
    /// `h^1 F(k) = 0` for `k > -b_min + h^1 F(-b_min)`.
    pub h1_positive: Rational,
    /// `h^1 F(-k) = 0` for `k > b_max + 3 + h^1 F^*(b_max)`.
    pub h1_negative: Rational,
}

impl VanishingThresholds {
    pub fn max(&self) -> Rational {
        [&self.h0_negative, &self.h2_positive, &self.h1_positive, &self.h1_negative]
            .into_iter()
            .max()
            .cloned()
            .expect("four entries")
    }
}

/// Diagnostic only: these do not feed into [`vanishing_q`] or [`ch3_bound`].
pub fn vanishing_thresholds(b: &SplittingType, ch2: &Rational) -> VanishingThresholds {
    let h1 = h1_invariant_bound(b, ch2);
    let (bmax, bmin) = (Rational::from(b.b_max()), Rational::from(b.b_min()));
    VanishingThresholds {
        h0_negative: bmax.clone(),
        h2_positive: -&bmin - Rational::from(3),
        h1_positive: -&bmin + &h1,
        h1_negative: bmax + Rational::from(3) + h1,
    }
}

/// `|chi(F)| < 2 (t + 4 + W) W + (n/6)(t + 3)^3` with `t = |c_1|/n + n` and
/// `W = -ch_2 + n t^2 / 2`.
pub fn euler_bound(n: i64, c1: i64, ch2: &Rational) -> Result<Rational> {
    euler_bound_with(n, c1, ch2, Mode::Clamped)
}

pub fn euler_bound_with(n: i64, c1: i64, ch2: &Rational, mode: Mode) -> Result<Rational> {
    let t = splitting_radius(n, c1)?;
    let nq = Rational::from(n);
    let w = mode.apply(&nq * t.pow(2) / Rational::from(2) - ch2);
    let q = &t + Rational::from(4) + &w;
    let middle = Rational::from(2) * mode.apply(q) * &w;
    let extremes = &nq / Rational::from(6) * (t + Rational::from(3)).pow(3);
    Ok(middle + extremes)
}

/// Strict upper bound for `|ch_3|` of a mu-semistable reflexive sheaf on P^3:
/// `euler_bound + 2|ch_2| + (11/6)|c_1| + n`.
pub fn ch3_bound(n: i64, c1: i64, ch2: &Rational) -> Result<Rational> {
    ch3_bound_with(n, c1, ch2, Mode::Clamped)
}

pub fn ch3_bound_with(n: i64, c1: i64, ch2: &Rational, mode: Mode) -> Result<Rational> {
    Ok(euler_bound_with(n, c1, ch2, mode)?
        + Rational::from(2) * ch2.abs()
        + Rational::frac(11, 6) * Rational::from(c1.abs())
        + Rational::from(n))
}

/// Everything known about a sheaf on P^3 with a given splitting type and
/// Chern character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub rank: i64,
    pub c1: i64,
    pub ch2: Rational,
    /// `|c_1|/n + n`.
    pub splitting_radius: Rational,
    pub q: Rational,
    /// `ceil(Q)`, the first integer twist past which vanishing holds.
    #[serde(with = "crate::rational::bigint_string")]
    pub q_int: BigInt,
    /// Bounds for `h^0, ..., h^3`.
    pub h_bounds: Vec<Rational>,
    pub euler_bound: Rational,
    pub ch3_bound: Rational,
    pub literal_mode: bool,
}

/// Cohomology bounds for a torsion-free sheaf on P^3 via restriction to a
/// generic hyperplane: `h^1, h^2 <= Q (-ch_2 + (1/2) sum b_i^2)`.
pub fn p3_bounds(b: &SplittingType, ch: &ChernCharacter, mode: Mode) -> Result<BoundReport> {
    if ch.ambient() != Ambient::P3 {
        return Err(Error::DimensionMismatch { left: ch.ambient().dim(), right: 3 });
    }
    if !ch.rank().is_positive() {
        return Err(Error::NonPositiveRank(ch.rank().to_string()));
    }
    check_rank(b, ch.rank())?;
    let rank = b.rank() as i64;
    let c1 = integral_c1(ch)?;
    let restricted = ch.restrict_to_hyperplane()?;
    let ch2 = restricted.ch2().clone();

    let t = splitting_radius(rank, c1)?;
    let invariant = mode.apply(h1_invariant_bound(b, &ch2));
    let q = mode.apply(&t + Rational::from(4) + &invariant);
    let middle = mode.apply(&q * &invariant);
    let (h0, h3) = extreme_bounds(b, Ambient::P3);

    Ok(BoundReport {
        rank,
        c1,
        splitting_radius: t,
        q_int: q.ceil(),
        h_bounds: vec![h0, middle.clone(), middle, h3],
        euler_bound: euler_bound_with(rank, c1, &ch2, mode)?,
        ch3_bound: ch3_bound_with(rank, c1, &ch2, mode)?,
        literal_mode: mode.is_literal(),
        q,
        ch2,
    })
}

/// Worst-case report from `(n, c_1, ch_2)` alone: every `b_i` is replaced by
/// the radius `t`, and `h^0`, `h^3` are bounded together by `(n/6)(t+3)^3`.
pub fn worst_case_report(n: i64, c1: i64, ch2: &Rational, mode: Mode) -> Result<BoundReport> {
    let t = splitting_radius(n, c1)?;
    let w = mode.apply(Rational::from(n) * t.pow(2) / Rational::from(2) - ch2);
    let q = mode.apply(&t + Rational::from(4) + &w);
    let middle = mode.apply(&q * &w);
    let extremes = Rational::from(n) / Rational::from(6) * (&t + Rational::from(3)).pow(3);
    Ok(BoundReport {
        rank: n,
        c1,
        ch2: ch2.clone(),
        splitting_radius: t,
        q_int: q.ceil(),
        h_bounds: vec![extremes.clone(), middle.clone(), middle, extremes],
        euler_bound: euler_bound_with(n, c1, ch2, mode)?,
        ch3_bound: ch3_bound_with(n, c1, ch2, mode)?,
        literal_mode: mode.is_literal(),
        q,
    })
}

/// `ch_3` of integer Chern data `(c_1, c_2, c_3)`: `(c_1^3 - 3 c_1 c_2 + 3 c_3)/6`.
pub fn ch3_of_classes(c1: i64, c2: i64, c3: i64) -> Rational {
    let c1 = BigInt::from(c1);
    let numer = c1.pow(3) - BigInt::from(3) * &c1 * BigInt::from(c2) + BigInt::from(3) * BigInt::from(c3);
    Rational::from(numer) / Rational::from(6)
}

/// `ch_2` of integer Chern data: `(c_1^2 - 2 c_2)/2`.
pub fn ch2_of_classes(c1: i64, c2: i64) -> Rational {
    Rational::from(c1 * c1 - 2 * c2) / Rational::from(2)
}

/// True iff `|ch_3| < ch3_bound` for rank `r` reflexive data `(c_1, c_2, c_3)`.
pub fn c3_within_bound(r: i64, c1: i64, c2: i64, c3: i64) -> Result<bool> {
    let bound = ch3_bound(r, c1, &ch2_of_classes(c1, c2))?;
    Ok(ch3_of_classes(c1, c2, c3).abs() < bound)
}

/// Closed integer interval `[min, max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct C3Interval {
    pub min: i64,
    pub max: i64,
}

impl C3Interval {
    pub fn len(&self) -> u64 {
        (self.max - self.min + 1).max(0) as u64
    }

    pub fn is_empty(&self) -> bool {
        self.max < self.min
    }

    pub fn contains(&self, c3: i64) -> bool {
        self.min <= c3 && c3 <= self.max
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.min..=self.max
    }
}

/// All integers `c_3` with `|ch_3(r, c_1, c_2, c_3)| < ch3_bound(r, c_1, ch_2)`.
///
/// Since `6 ch_3 = A + 3 c_3` with `A = c_1^3 - 3 c_1 c_2`, this is the set of
/// `c_3` with `-6B < A + 3 c_3 < 6B`.
pub fn enumerate_admissible_c3(r: i64, c1: i64, c2: i64) -> Result<C3Interval> {
    let bound = ch3_bound(r, c1, &ch2_of_classes(c1, c2))?;
    let a = Rational::from(BigInt::from(c1).pow(3) - BigInt::from(3 * c1) * BigInt::from(c2));
    let six_b = Rational::from(6) * bound;
    let three = Rational::from(3);
    let lo = (-&six_b - &a) / three.clone();
    let hi = (six_b - a) / three;
    let to_i64 = |x: BigInt| {
        x.to_i64().ok_or_else(|| Error::MalformedShape(format!("c_3 endpoint {x} out of range")))
    };
    Ok(C3Interval { min: to_i64(lo.floor() + 1)?, max: to_i64(hi.ceil() - 1)? })
}
