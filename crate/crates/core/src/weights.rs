//! Weight lattices of affine sl2.
//!
//! Affine weights live in `P = ZΛ₀ ⊕ ZΛ₁ ⊕ Zδ`, classical weights in
//! `P_cl = P / Zδ`. Both are stored as plain integer coordinates; the only
//! structure needed downstream is the coroot pairing `⟨h_i, Λ_j⟩ = δ_ij`,
//! `⟨h_i, δ⟩ = 0`, `⟨d, δ⟩ = 1` and the simple reflections.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A Dynkin node of affine sl2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Zero,
    One,
}

impl Color {
    pub const ALL: [Color; 2] = [Color::Zero, Color::One];

    pub fn index(self) -> usize {
        match self {
            Color::Zero => 0,
            Color::One => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<Color> {
        match i {
            0 => Some(Color::Zero),
            1 => Some(Color::One),
            _ => None,
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::Zero => Color::One,
            Color::One => Color::Zero,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// An element of `P_cl`: `a0·Λ₀ + a1·Λ₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ClassicalWeight {
    pub a0: i64,
    pub a1: i64,
}

impl ClassicalWeight {
    pub const ZERO: ClassicalWeight = ClassicalWeight { a0: 0, a1: 0 };

    pub const fn new(a0: i64, a1: i64) -> Self {
        Self { a0, a1 }
    }

    /// `m(Λ₀ − Λ₁)`, the level-zero weights the path model is built on.
    pub const fn level_zero(m: i64) -> Self {
        Self { a0: m, a1: -m }
    }

    /// `cl(α_i)`: `cl(α₁) = 2Λ₁ − 2Λ₀` and `cl(α₀) = −cl(α₁)`.
    pub const fn simple_root(i: Color) -> Self {
        match i {
            Color::One => Self { a0: -2, a1: 2 },
            Color::Zero => Self { a0: 2, a1: -2 },
        }
    }

    pub fn level(self) -> i64 {
        self.a0 + self.a1
    }

    /// `⟨h_i, w⟩`.
    pub fn pair(self, i: Color) -> i64 {
        match i {
            Color::Zero => self.a0,
            Color::One => self.a1,
        }
    }

    /// `s_i(w) = w − ⟨h_i, w⟩ cl(α_i)`.
    pub fn reflect(self, i: Color) -> Self {
        let k = self.pair(i);
        let alpha = Self::simple_root(i);
        Self {
            a0: self.a0 - k * alpha.a0,
            a1: self.a1 - k * alpha.a1,
        }
    }

    /// The section `af: P_cl → P` fixing `Λ₀` and `Λ₁`.
    pub fn af(self) -> AffineWeight {
        AffineWeight::new(self.a0, self.a1, 0)
    }

    pub fn scale(self, k: i64) -> Self {
        Self {
            a0: self.a0 * k,
            a1: self.a1 * k,
        }
    }
}

impl Add for ClassicalWeight {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            a0: self.a0 + rhs.a0,
            a1: self.a1 + rhs.a1,
        }
    }
}

impl Sub for ClassicalWeight {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            a0: self.a0 - rhs.a0,
            a1: self.a1 - rhs.a1,
        }
    }
}

impl Neg for ClassicalWeight {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a0: -self.a0,
            a1: -self.a1,
        }
    }
}

impl std::iter::Sum for ClassicalWeight {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*L0 + {}*L1", self.a0, self.a1)
    }
}

/// An element of `P`: `a0·Λ₀ + a1·Λ₁ + d·δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct AffineWeight {
    pub a0: i64,
    pub a1: i64,
    pub d: i64,
}

impl AffineWeight {
    pub const ZERO: AffineWeight = AffineWeight { a0: 0, a1: 0, d: 0 };
    pub const DELTA: AffineWeight = AffineWeight { a0: 0, a1: 0, d: 1 };

    pub const fn new(a0: i64, a1: i64, d: i64) -> Self {
        Self { a0, a1, d }
    }

    /// `α₁ = 2Λ₁ − 2Λ₀`, `α₀ = δ − α₁`.
    pub const fn simple_root(i: Color) -> Self {
        match i {
            Color::One => Self { a0: -2, a1: 2, d: 0 },
            Color::Zero => Self { a0: 2, a1: -2, d: 1 },
        }
    }

    pub fn level(self) -> i64 {
        self.a0 + self.a1
    }

    /// `⟨h_i, w⟩`; the δ part pairs to zero.
    pub fn pair(self, i: Color) -> i64 {
        self.cl().pair(i)
    }

    /// `⟨d, w⟩`.
    pub fn degree(self) -> i64 {
        self.d
    }

    pub fn cl(self) -> ClassicalWeight {
        ClassicalWeight::new(self.a0, self.a1)
    }

    pub fn reflect(self, i: Color) -> Self {
        let k = self.pair(i);
        let alpha = Self::simple_root(i);
        Self {
            a0: self.a0 - k * alpha.a0,
            a1: self.a1 - k * alpha.a1,
            d: self.d - k * alpha.d,
        }
    }
}

impl Add for AffineWeight {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            a0: self.a0 + rhs.a0,
            a1: self.a1 + rhs.a1,
            d: self.d + rhs.d,
        }
    }
}

impl Sub for AffineWeight {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            a0: self.a0 - rhs.a0,
            a1: self.a1 - rhs.a1,
            d: self.d - rhs.d,
        }
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*L0 + {}*L1 + {}*delta", self.a0, self.a1, self.d)
    }
}

/// Either kind of weight, for the `pair`/`reflect` entry points that accept both.
pub trait Weight: Copy {
    fn pair(self, i: Color) -> i64;
    fn reflect(self, i: Color) -> Self;
}

impl Weight for ClassicalWeight {
    fn pair(self, i: Color) -> i64 {
        ClassicalWeight::pair(self, i)
    }
    fn reflect(self, i: Color) -> Self {
        ClassicalWeight::reflect(self, i)
    }
}

impl Weight for AffineWeight {
    fn pair(self, i: Color) -> i64 {
        AffineWeight::pair(self, i)
    }
    fn reflect(self, i: Color) -> Self {
        AffineWeight::reflect(self, i)
    }
}

pub fn pair<W: Weight>(i: Color, w: W) -> i64 {
    w.pair(i)
}

pub fn reflect<W: Weight>(i: Color, w: W) -> W {
    w.reflect(i)
}

/// `Z ⊔ {−∞}`, the codomain of `ε_i` and `φ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::NegInf => None,
            ExtInt::Finite(v) => Some(v),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, ExtInt::NegInf)
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::NegInf, ExtInt::NegInf) => Ordering::Equal,
            (ExtInt::NegInf, ExtInt::Finite(_)) => Ordering::Less,
            (ExtInt::Finite(_), ExtInt::NegInf) => Ordering::Greater,
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: i64) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::NegInf,
            ExtInt::Finite(v) => ExtInt::Finite(v + rhs),
        }
    }
}

impl Sub<i64> for ExtInt {
    type Output = ExtInt;
    fn sub(self, rhs: i64) -> ExtInt {
        self + (-rhs)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
        }
    }
}
