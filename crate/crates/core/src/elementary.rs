//! Concrete crystals: the spin crystal `B = {+, −}` and its tensor powers,
//! `B∞`, the one-point crystals `T_λ` and `C`, and the affinization `Aff(B)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::{AffineCrystal, Crystal, Dir, FactorData, Signature};
use crate::error::CrystalError;
use crate::weights::{AffineWeight, ClassicalWeight, Color, ExtInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_int(x: i64) -> Option<Sign> {
        match x.signum() {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// `+1` or `−1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '−' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// One row of the spin crystal table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinRow {
    pub e: Option<Sign>,
    pub f: Option<Sign>,
    pub epsilon: i64,
    pub phi: i64,
}

pub fn spin_table(i: Color, x: Sign) -> SpinRow {
    use Sign::*;
    match (i, x) {
        (Color::One, Plus) => SpinRow { e: None, f: Some(Minus), epsilon: 0, phi: 1 },
        (Color::One, Minus) => SpinRow { e: Some(Plus), f: None, epsilon: 1, phi: 0 },
        (Color::Zero, Plus) => SpinRow { e: Some(Minus), f: None, epsilon: 1, phi: 0 },
        (Color::Zero, Minus) => SpinRow { e: None, f: Some(Plus), epsilon: 0, phi: 1 },
    }
}

impl Crystal for Sign {
    fn weight(&self) -> ClassicalWeight {
        // wt(±) = ±(Λ₁ − Λ₀)
        ClassicalWeight::new(-self.value(), self.value())
    }

    fn epsilon(&self, i: Color) -> ExtInt {
        spin_table(i, *self).epsilon.into()
    }

    fn phi(&self, i: Color) -> ExtInt {
        spin_table(i, *self).phi.into()
    }

    fn raise(&self, i: Color) -> Option<Self> {
        spin_table(i, *self).e
    }

    fn lower(&self, i: Color) -> Option<Self> {
        spin_table(i, *self).f
    }
}

/// An element of `B^{⊗n}`, leftmost factor first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SpinTensor(pub Vec<Sign>);

impl SpinTensor {
    pub fn new(letters: Vec<Sign>) -> Self {
        Self(letters)
    }

    pub fn uniform(sign: Sign, n: usize) -> Self {
        Self(vec![sign; n])
    }

    /// The `k`-th tensor of length `n` in lexicographic order with `+ < −`.
    pub fn from_index(n: usize, k: u64) -> Self {
        Self(
            (0..n)
                .map(|j| {
                    if (k >> (n - 1 - j)) & 1 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect(),
        )
    }

    pub fn all(n: usize) -> impl Iterator<Item = SpinTensor> {
        (0..1u64 << n).map(move |k| SpinTensor::from_index(n, k))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Sign] {
        &self.0
    }

    pub fn is_uniform(&self) -> Option<Sign> {
        let first = *self.0.first()?;
        self.0.iter().all(|&s| s == first).then_some(first)
    }

    fn signature(&self, i: Color) -> Signature {
        let data: Vec<FactorData> = self.0.iter().map(|b| FactorData::of(b, i)).collect();
        Signature::new(&data)
    }

    fn act_with(&self, i: Color, dir: Dir) -> Option<Self> {
        let k = self.signature(i).position(dir)?;
        let letter = self.0[k].act(i, dir)?;
        let mut out = self.0.clone();
        out[k] = letter;
        Some(Self(out))
    }
}

impl Crystal for SpinTensor {
    fn weight(&self) -> ClassicalWeight {
        self.0.iter().map(|s| s.weight()).sum()
    }

    fn epsilon(&self, i: Color) -> ExtInt {
        if self.0.is_empty() {
            return ExtInt::Finite(0);
        }
        self.signature(i).epsilon()
    }

    fn phi(&self, i: Color) -> ExtInt {
        if self.0.is_empty() {
            return ExtInt::Finite(0);
        }
        self.signature(i).phi()
    }

    fn raise(&self, i: Color) -> Option<Self> {
        self.act_with(i, Dir::Raise)
    }

    fn lower(&self, i: Color) -> Option<Self> {
        self.act_with(i, Dir::Lower)
    }
}

impl fmt::Display for SpinTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for SpinTensor {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "ε" || s.is_empty() {
            return Ok(Self::default());
        }
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != '⊗')
            .map(|c| {
                Sign::from_symbol(c)
                    .ok_or_else(|| CrystalError::Parse(format!("unexpected spin letter {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SpinTensor)
    }
}

/// A letter `(n)` of `B∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BInfLetter(pub i64);

pub fn binf_op(i: Color, dir: Dir, x: BInfLetter) -> BInfLetter {
    let step = match (i, dir) {
        (Color::One, Dir::Raise) | (Color::Zero, Dir::Lower) => -1,
        (Color::One, Dir::Lower) | (Color::Zero, Dir::Raise) => 1,
    };
    BInfLetter(x.0 + step)
}

/// The isomorphism `T_λ ⊗ B∞ ≅ B∞ ⊗ T_{−λ}` for `λ = m(Λ₀ − Λ₁)`: `t_λ ⊗ (n) ↦ (m+n) ⊗ t_{−λ}`.
pub fn tshift_iso(m: i64, x: BInfLetter) -> BInfLetter {
    BInfLetter(m + x.0)
}

impl Crystal for BInfLetter {
    fn weight(&self) -> ClassicalWeight {
        ClassicalWeight::new(2 * self.0, -2 * self.0)
    }

    fn epsilon(&self, i: Color) -> ExtInt {
        match i {
            Color::One => self.0.into(),
            Color::Zero => (-self.0).into(),
        }
    }

    fn phi(&self, i: Color) -> ExtInt {
        match i {
            Color::One => (-self.0).into(),
            Color::Zero => self.0.into(),
        }
    }

    fn raise(&self, i: Color) -> Option<Self> {
        Some(binf_op(i, Dir::Raise, *self))
    }

    fn lower(&self, i: Color) -> Option<Self> {
        Some(binf_op(i, Dir::Lower, *self))
    }
}

impl fmt::Display for BInfLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

/// The single element `t_λ` of `T_λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TLambda(pub ClassicalWeight);

impl Crystal for TLambda {
    fn weight(&self) -> ClassicalWeight {
        self.0
    }

    fn epsilon(&self, _: Color) -> ExtInt {
        ExtInt::NegInf
    }

    fn phi(&self, _: Color) -> ExtInt {
        ExtInt::NegInf
    }

    fn raise(&self, _: Color) -> Option<Self> {
        None
    }

    fn lower(&self, _: Color) -> Option<Self> {
        None
    }
}

impl fmt::Display for TLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{}]", self.0)
    }
}

/// The trivial crystal `C = {c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Trivial;

impl Crystal for Trivial {
    fn weight(&self) -> ClassicalWeight {
        ClassicalWeight::ZERO
    }

    fn epsilon(&self, _: Color) -> ExtInt {
        ExtInt::Finite(0)
    }

    fn phi(&self, _: Color) -> ExtInt {
        ExtInt::Finite(0)
    }

    fn raise(&self, _: Color) -> Option<Self> {
        None
    }

    fn lower(&self, _: Color) -> Option<Self> {
        None
    }
}

impl fmt::Display for Trivial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("c")
    }
}

/// `z^zexp ⊗ inner` in `Aff(B)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Aff<B> {
    pub zexp: i64,
    pub inner: B,
}

impl<B> Aff<B> {
    pub fn new(zexp: i64, inner: B) -> Self {
        Self { zexp, inner }
    }
}

impl<B: Crystal> Crystal for Aff<B> {
    fn weight(&self) -> ClassicalWeight {
        self.inner.weight()
    }

    fn epsilon(&self, i: Color) -> ExtInt {
        self.inner.epsilon(i)
    }

    fn phi(&self, i: Color) -> ExtInt {
        self.inner.phi(i)
    }

    fn raise(&self, i: Color) -> Option<Self> {
        let shift = if i == Color::Zero { 1 } else { 0 };
        Some(Self::new(self.zexp + shift, self.inner.raise(i)?))
    }

    fn lower(&self, i: Color) -> Option<Self> {
        let shift = if i == Color::Zero { 1 } else { 0 };
        Some(Self::new(self.zexp - shift, self.inner.lower(i)?))
    }
}

impl<B: Crystal> AffineCrystal for Aff<B> {
    fn affine_weight(&self) -> AffineWeight {
        self.inner.weight().af() + AffineWeight::new(0, 0, self.zexp)
    }
}

impl<B: fmt::Display> fmt::Display for Aff<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z^{}|{}", self.zexp, self.inner)
    }
}

impl FromStr for Aff<SpinTensor> {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (z, spins) = s
            .trim()
            .split_once('|')
            .ok_or_else(|| CrystalError::Parse(format!("expected z^k|spins, got {s:?}")))?;
        let zexp = z
            .trim()
            .strip_prefix("z^")
            .and_then(|k| k.parse().ok())
            .ok_or_else(|| CrystalError::Parse(format!("bad z exponent {z:?}")))?;
        Ok(Self::new(zexp, spins.parse()?))
    }
}
