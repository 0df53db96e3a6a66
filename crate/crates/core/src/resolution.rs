//! Two-term resolutions `0 -> R^{-1} -> R^0 -> F -> 0` of rank-two reflexive
//! sheaves on P^3 with `c_1 = -1`, and the dimensions of the spaces that
//! parametrize them.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chow::{Ambient, ChernCharacter, ChernClasses};
use crate::error::{Error, Result};
use crate::shape::{hom_dim, ShapeDescriptor};

/// All `s >= 1` with `(2s+1)^2 <= 4 c_2 - 7`; empty unless `c_2 > 4`.
///
/// This is the integer form of `1 <= s <= (-1 + sqrt(4 c_2 - 7))/2`.
pub fn admissible_s(c2: i64) -> Vec<i64> {
    if c2 <= 4 {
        return Vec::new();
    }
    let limit = BigInt::from(4) * BigInt::from(c2) - BigInt::from(7);
    (1..)
        .take_while(|&s: &i64| {
            let odd = BigInt::from(2 * s + 1);
            &odd * &odd <= limit
        })
        .collect()
}

pub fn is_admissible(c2: i64, s: i64) -> bool {
    if c2 <= 4 || s < 1 {
        return false;
    }
    let odd = BigInt::from(2 * s + 1);
    &odd * &odd <= BigInt::from(4) * BigInt::from(c2) - BigInt::from(7)
}

fn require_admissible(c2: i64, s: i64) -> Result<()> {
    if is_admissible(c2, s) {
        Ok(())
    } else {
        Err(Error::InadmissibleResolution { c2, s })
    }
}

/// A validated `(c_2, s, c_3)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResolutionParams {
    pub c2: i64,
    pub s: i64,
    pub c3: i64,
}

impl ResolutionParams {
    pub fn new(c2: i64, s: i64) -> Result<Self> {
        Ok(ResolutionParams { c2, s, c3: c3_of(c2, s)? })
    }

    pub fn chern_classes(&self) -> ChernClasses {
        ChernClasses::p3(2, -1, self.c2, self.c3)
    }
}

/// `c_3 = c_2^2 - 2 s c_2 + 2 s (s+1)`.
pub fn c3_of(c2: i64, s: i64) -> Result<i64> {
    require_admissible(c2, s)?;
    Ok(c2 * c2 - 2 * s * c2 + 2 * s * (s + 1))
}

/// `R^{-1} = O(-s-2) + O(s-1-c_2)`, `R^0 = O(-s-1) + O(-1) + O(-2) + O(s-c_2)`.
pub fn resolution_shapes(c2: i64, s: i64) -> Result<(ShapeDescriptor, ShapeDescriptor)> {
    require_admissible(c2, s)?;
    Ok((
        ShapeDescriptor::from_twists(&[-s - 2, s - 1 - c2]),
        ShapeDescriptor::from_twists(&[-s - 1, -1, -2, s - c2]),
    ))
}

/// Whether `ch(R^0) - ch(R^{-1})` equals the character of `(2, -1, c_2, c_3)`.
pub fn verify_resolution_chern(c2: i64, s: i64) -> Result<bool> {
    let params = ResolutionParams::new(c2, s)?;
    verify_with_c3(c2, s, params.c3)
}

/// As [`verify_resolution_chern`] but against an arbitrary `c_3`.
pub fn verify_with_c3(c2: i64, s: i64, c3: i64) -> Result<bool> {
    Ok(resolved_character(c2, s)? == ChernClasses::p3(2, -1, c2, c3).to_character(Ambient::P3))
}

/// `ch(R^0) - ch(R^{-1})`.
pub fn resolved_character(c2: i64, s: i64) -> Result<ChernCharacter> {
    let (r_minus, r_zero) = resolution_shapes(c2, s)?;
    r_zero.chern_character(Ambient::P3).sub(&r_minus.chern_character(Ambient::P3))
}

/// Dimensions of `Hom(R^{-1}, R^0)`, its projectivization, and
/// `G = Aut(R^{-1}) x Aut(R^0)`. The Quot-scheme factor is not computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    #[serde(with = "crate::rational::bigint_string")]
    pub dim_hom: BigInt,
    #[serde(with = "crate::rational::bigint_string")]
    pub dim_pv: BigInt,
    #[serde(with = "crate::rational::bigint_string")]
    pub dim_g: BigInt,
}

pub fn presentation_report(c2: i64, s: i64) -> Result<PresentationReport> {
    let (r_minus, r_zero) = resolution_shapes(c2, s)?;
    let dim_hom = hom_dim(&r_minus, &r_zero, Ambient::P3);
    let dim_g = hom_dim(&r_minus, &r_minus, Ambient::P3) + hom_dim(&r_zero, &r_zero, Ambient::P3);
    Ok(PresentationReport { dim_pv: &dim_hom - 1, dim_hom, dim_g })
}
