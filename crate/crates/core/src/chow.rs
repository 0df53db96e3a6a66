//! Intersection-theory arithmetic on P^2 and P^3.
//!
//! The Chow ring of P^n is `Q[H]/(H^{n+1})`, so a Chern character is just the
//! vector of coefficients `(ch_0, ..., ch_n)` of `1, H, ..., H^n`. Products are
//! truncated convolutions, and integration picks out the `H^n` coefficient.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Ambient projective space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ambient {
    P2,
    P3,
}

impl Ambient {
    pub fn from_dim(n: i64) -> Result<Self> {
        match n {
            2 => Ok(Ambient::P2),
            3 => Ok(Ambient::P3),
            _ => Err(Error::UnsupportedDimension(n)),
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Ambient::P2 => 2,
            Ambient::P3 => 3,
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P^{}", self.dim())
    }
}

fn check_same(a: Ambient, b: Ambient) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() })
    }
}

/// `(ch_0, ..., ch_n)` on P^n, where `ch_0` is the (integer) rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChernCharacter {
    ambient: Ambient,
    components: Vec<Rational>,
}

impl ChernCharacter {
    pub fn new(ambient: Ambient, components: Vec<Rational>) -> Result<Self> {
        let expected = ambient.dim() + 1;
        if components.len() != expected {
            return Err(Error::ComponentCount { dim: ambient.dim(), expected, got: components.len() });
        }
        if !components[0].is_integer() {
            return Err(Error::NonIntegralRank(components[0].to_string()));
        }
        Ok(ChernCharacter { ambient, components })
    }

    /// Builds a character from its components; the length decides the ambient space.
    pub fn from_components(components: Vec<Rational>) -> Result<Self> {
        let ambient = Ambient::from_dim(components.len() as i64 - 1)?;
        Self::new(ambient, components)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn components(&self) -> &[Rational] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Rational> {
        self.components
    }

    pub fn ch(&self, i: usize) -> &Rational {
        &self.components[i]
    }

    pub fn rank(&self) -> &Rational {
        &self.components[0]
    }

    pub fn c1(&self) -> &Rational {
        &self.components[1]
    }

    pub fn ch2(&self) -> &Rational {
        &self.components[2]
    }

    /// `ch_3`, present only on P^3.
    pub fn ch3(&self) -> Option<&Rational> {
        self.components.get(3)
    }

    /// `ch(O(k)) = exp(kH)` truncated past `H^n`.
    pub fn line_bundle(ambient: Ambient, k: i64) -> Self {
        let k = Rational::from(k);
        let mut components = Vec::with_capacity(ambient.dim() + 1);
        let mut term = Rational::one();
        for i in 0..=ambient.dim() {
            if i > 0 {
                term = &term * &k / Rational::from(i as i64);
            }
            components.push(term.clone());
        }
        ChernCharacter { ambient, components }
    }

    pub fn zero(ambient: Ambient) -> Self {
        ChernCharacter { ambient, components: vec![Rational::zero(); ambient.dim() + 1] }
    }

    /// Product in the truncated Chow ring.
    pub fn mul(&self, other: &ChernCharacter) -> Result<Self> {
        check_same(self.ambient, other.ambient)?;
        Ok(ChernCharacter {
            ambient: self.ambient,
            components: convolve(&self.components, &other.components),
        })
    }

    pub fn add(&self, other: &ChernCharacter) -> Result<Self> {
        check_same(self.ambient, other.ambient)?;
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect();
        Ok(ChernCharacter { ambient: self.ambient, components })
    }

    pub fn sub(&self, other: &ChernCharacter) -> Result<Self> {
        check_same(self.ambient, other.ambient)?;
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect();
        Ok(ChernCharacter { ambient: self.ambient, components })
    }

    /// Multiplies every component by an integer (direct sums of copies).
    pub fn scale(&self, m: i64) -> Self {
        let m = Rational::from(m);
        ChernCharacter {
            ambient: self.ambient,
            components: self.components.iter().map(|c| c * &m).collect(),
        }
    }

    /// `ch(F(k)) = ch(F) * exp(kH)`.
    pub fn twist(&self, k: i64) -> Self {
        self.mul(&Self::line_bundle(self.ambient, k)).expect("same ambient")
    }

    /// `ch(F^*)`: degree-`i` component picks up `(-1)^i`.
    pub fn dual(&self) -> Self {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        ChernCharacter { ambient: self.ambient, components }
    }

    /// `chi(F) = integral of ch(F) * td(P^n)`.
    pub fn euler_characteristic(&self) -> Rational {
        let td = ToddClass::of(self.ambient);
        let n = self.ambient.dim();
        (0..=n).map(|i| &self.components[i] * &td.components[n - i]).sum()
    }

    /// Restriction to a hyperplane P^2 in P^3: drop `ch_3`.
    pub fn restrict_to_hyperplane(&self) -> Result<Self> {
        if self.ambient != Ambient::P3 {
            return Err(Error::DimensionMismatch { left: self.ambient.dim(), right: 3 });
        }
        Ok(ChernCharacter { ambient: Ambient::P2, components: self.components[..3].to_vec() })
    }

    /// `ch(i_* F_H)` for a sheaf `F` on P^3 with character `self`:
    /// `(0, ch_0, ch_1 - ch_0/2, ch_2 - ch_1/2 + ch_0/6)`.
    pub fn pushforward_from_hyperplane(&self) -> Result<Self> {
        if self.ambient != Ambient::P3 {
            return Err(Error::DimensionMismatch { left: self.ambient.dim(), right: 3 });
        }
        let c = &self.components;
        let half = Rational::frac(1, 2);
        let sixth = Rational::frac(1, 6);
        let components = vec![
            Rational::zero(),
            c[0].clone(),
            &c[1] - &half * &c[0],
            &c[2] - &half * &c[1] + &sixth * &c[0],
        ];
        Ok(ChernCharacter { ambient: Ambient::P3, components })
    }
}

impl fmt::Debug for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ch[{}](", self.ambient)?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    (0..a.len())
        .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum())
        .collect()
}

/// Todd class of the tangent bundle of P^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToddClass {
    ambient: Ambient,
    components: Vec<Rational>,
}

impl ToddClass {
    pub fn of(ambient: Ambient) -> Self {
        let components = match ambient {
            Ambient::P2 => vec![Rational::one(), Rational::frac(3, 2), Rational::one()],
            Ambient::P3 => vec![
                Rational::one(),
                Rational::from(2),
                Rational::frac(11, 6),
                Rational::one(),
            ],
        };
        ToddClass { ambient, components }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn components(&self) -> &[Rational] {
        &self.components
    }
}

pub fn todd(n: i64) -> Result<ToddClass> {
    Ok(ToddClass::of(Ambient::from_dim(n)?))
}

pub fn ch_line_bundle(n: i64, k: i64) -> Result<ChernCharacter> {
    Ok(ChernCharacter::line_bundle(Ambient::from_dim(n)?, k))
}

/// Integer Chern classes `(r, c_1, c_2[, c_3])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernClasses {
    pub rank: i64,
    pub c1: i64,
    pub c2: i64,
    /// Only meaningful on P^3.
    pub c3: Option<i64>,
}

impl ChernClasses {
    pub fn p2(rank: i64, c1: i64, c2: i64) -> Self {
        ChernClasses { rank, c1, c2, c3: None }
    }

    pub fn p3(rank: i64, c1: i64, c2: i64, c3: i64) -> Self {
        ChernClasses { rank, c1, c2, c3: Some(c3) }
    }

    /// Newton identities: `ch_1 = c_1`, `ch_2 = (c_1^2 - 2c_2)/2`,
    /// `ch_3 = (c_1^3 - 3c_1c_2 + 3c_3)/6`. A missing `c_3` counts as 0 on P^3.
    pub fn to_character(&self, ambient: Ambient) -> ChernCharacter {
        let c1 = Rational::from(self.c1);
        let c2 = Rational::from(self.c2);
        let mut components = vec![
            Rational::from(self.rank),
            c1.clone(),
            (c1.pow(2) - Rational::from(2) * &c2) / Rational::from(2),
        ];
        if ambient == Ambient::P3 {
            let c3 = Rational::from(self.c3.unwrap_or(0));
            components.push(
                (c1.pow(3) - Rational::from(3) * &c1 * &c2 + Rational::from(3) * c3) / Rational::from(6),
            );
        }
        ChernCharacter { ambient, components }
    }

    pub fn from_character(x: &ChernCharacter) -> Result<Self> {
        let integral = |index: usize, value: Rational| {
            value.to_i64().ok_or(Error::NonIntegralChern { index, value: value.to_string() })
        };
        let rank = x.rank().to_i64().ok_or_else(|| Error::NonIntegralRank(x.rank().to_string()))?;
        let c1r = x.c1().clone();
        let c1 = integral(1, c1r.clone())?;
        // c_2 = c_1^2/2 - ch_2
        let c2r = c1r.pow(2) / Rational::from(2) - x.ch2();
        let c2 = integral(2, c2r.clone())?;
        let c3 = match x.ch3() {
            // c_3 = 2 ch_3 - c_1^3/3 + c_1 c_2
            Some(ch3) => Some(integral(
                3,
                Rational::from(2) * ch3 - c1r.pow(3) / Rational::from(3) + &c1r * &c2r,
            )?),
            None => None,
        };
        Ok(ChernClasses { rank, c1, c2, c3 })
    }
}

pub fn chern_to_character(c: &ChernClasses, n: i64) -> Result<ChernCharacter> {
    Ok(c.to_character(Ambient::from_dim(n)?))
}

pub fn character_to_chern(x: &ChernCharacter) -> Result<ChernClasses> {
    ChernClasses::from_character(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ch(parts: &[&str]) -> ChernCharacter {
        ChernCharacter::from_components(parts.iter().map(|s| q(s)).collect()).unwrap()
    }

    #[test]
    fn todd_values() {
        assert_eq!(todd(2).unwrap().components(), ch(&["1", "3/2", "1"]).components());
        assert_eq!(todd(3).unwrap().components(), ch(&["1", "2", "11/6", "1"]).components());
        assert_eq!(todd(4), Err(Error::UnsupportedDimension(4)));
        assert_eq!(todd(1), Err(Error::UnsupportedDimension(1)));
    }

    #[test]
    fn line_bundle_characters() {
        assert_eq!(ch_line_bundle(3, 0).unwrap(), ch(&["1", "0", "0", "0"]));
        assert_eq!(ch_line_bundle(3, 2).unwrap(), ch(&["1", "2", "2", "4/3"]));
        assert_eq!(ch_line_bundle(2, -1).unwrap(), ch(&["1", "-1", "1/2"]));
        assert!(ch_line_bundle(5, 1).is_err());
    }

    #[test]
    fn products() {
        let x = ch(&["2", "-1", "-9/2", "71/6"]);
        assert_eq!(ch(&["1", "0", "0", "0"]).mul(&x).unwrap(), x);
        assert_eq!(
            ch(&["1", "1", "1/2", "1/6"]).mul(&ch(&["1", "-1", "1/2", "-1/6"])).unwrap(),
            ch(&["1", "0", "0", "0"])
        );
        let y = ch(&["2", "0", "-5"]);
        assert_eq!(y.mul(&ch_line_bundle(2, -1).unwrap()).unwrap(), ch(&["2", "-2", "-4"]));
        assert_eq!(y.twist(-1), ch(&["2", "-2", "-4"]));
        assert_eq!(
            y.mul(&x),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn twist_and_dual() {
        let x = ch(&["2", "-1", "-9/2", "71/6"]);
        assert_eq!(x.twist(0), x);
        assert_eq!(x.twist(2).twist(-5), x.twist(-3));
        assert_eq!(ch(&["1", "1", "1/2", "1/6"]).dual(), ch(&["1", "-1", "1/2", "-1/6"]));
        assert_eq!(x.dual(), ch(&["2", "1", "-9/2", "-71/6"]));
        assert_eq!(x.dual().dual(), x);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(ch_line_bundle(3, 2).unwrap().euler_characteristic(), Rational::from(10));
        assert_eq!(ch(&["1", "0", "0"]).euler_characteristic(), Rational::one());
        assert_eq!(ch(&["2", "0", "-5"]).euler_characteristic(), Rational::from(-3));
    }

    #[test]
    fn restriction_and_pushforward() {
        let x = ch(&["2", "-1", "-9/2", "71/6"]);
        assert_eq!(x.restrict_to_hyperplane().unwrap(), ch(&["2", "-1", "-9/2"]));
        assert_eq!(ch(&["1", "0", "0", "0"]).restrict_to_hyperplane().unwrap(), ch(&["1", "0", "0"]));
        assert!(ch(&["1", "0", "0"]).restrict_to_hyperplane().is_err());
        assert_eq!(
            ch(&["1", "0", "0", "0"]).pushforward_from_hyperplane().unwrap(),
            ch(&["0", "1", "-1/2", "1/6"])
        );
        assert_eq!(x.pushforward_from_hyperplane().unwrap(), ch(&["0", "2", "-2", "-11/3"]));
        for k in -3..=3 {
            assert_eq!(
                x.twist(k).restrict_to_hyperplane().unwrap(),
                x.restrict_to_hyperplane().unwrap().twist(k)
            );
        }
    }

    #[test]
    fn chern_class_conversions() {
        let c = ChernClasses::p3(2, -1, 5, 19);
        assert_eq!(chern_to_character(&c, 3).unwrap(), ch(&["2", "-1", "-9/2", "71/6"]));
        assert_eq!(character_to_chern(&ch(&["2", "-1", "-9/2", "71/6"])).unwrap(), c);
        assert_eq!(chern_to_character(&ChernClasses::p3(4, 0, 0, 0), 3).unwrap(), ch(&["4", "0", "0", "0"]));
        assert_eq!(chern_to_character(&ChernClasses::p2(2, 0, 7), 2).unwrap(), ch(&["2", "0", "-7"]));
        assert_eq!(character_to_chern(&ch(&["1", "0", "0", "0"])).unwrap(), ChernClasses::p3(1, 0, 0, 0));
        assert!(matches!(
            character_to_chern(&ch(&["2", "0", "1/3"])),
            Err(Error::NonIntegralChern { index: 2, .. })
        ));
    }

    #[test]
    fn rank_must_be_integral() {
        assert!(matches!(
            ChernCharacter::from_components(vec![q("1/2"), q("0"), q("0")]),
            Err(Error::NonIntegralRank(_))
        ));
        assert!(ChernCharacter::from_components(vec![q("1")]).is_err());
    }
}
