//! The m-path model `𝒫_{m,l}`.
//!
//! A path is a bi-infinite integer sequence `(i_k)` with `i_k = 0` far to the
//! left and `i_k = m, −m` at even, odd `k` far to the right. Only the finite
//! window between the two tails is stored.
//!
//! Under the crystal structure inherited from
//! `u_∞ ⊗ ⋯ ⊗ i_{k} ⊗ i_{k+1} ⊗ ⋯ ⊗ t_λ ⊗ u_{−∞}` the signature profile is a
//! running sum of walls `w_k = i_{k−1} + i_k`:
//! `a_k = −Σ_{q≤k} w_q` for `i = 1` and `a_k = +Σ_{q≤k} w_q` for `i = 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::{AffineCrystal, Crystal, Dir};
use crate::elementary::Sign;
use crate::error::{CrystalError, Result};
use crate::weights::{AffineWeight, ClassicalWeight, Color, ExtInt};

/// `m` at even positions, `−m` at odd ones.
pub fn pattern(m: i64, k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        m
    } else {
        -m
    }
}

/// Entry `g_k` of the ground-state path.
pub fn ground_entry(m: i64, k: i64) -> i64 {
    if k < 0 {
        0
    } else {
        pattern(m, k)
    }
}

/// The energy function `H((x) ⊗ (y)) = max(x, −y)` on `B∞ ⊗ B∞`.
pub fn energy(x: i64, y: i64) -> i64 {
    x.max(-y)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawPath", into = "RawPath")]
pub struct Path {
    m: i64,
    l: i64,
    window_start: i64,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawPath {
    m: i64,
    l: i64,
    window_start: i64,
    entries: Vec<i64>,
}

impl From<RawPath> for Path {
    fn from(r: RawPath) -> Self {
        Path::canonicalize(r.m, r.l, r.window_start, &r.entries)
    }
}

impl From<Path> for RawPath {
    fn from(p: Path) -> Self {
        RawPath {
            m: p.m,
            l: p.l,
            window_start: p.window_start,
            entries: p.entries,
        }
    }
}

/// One wall, counted with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Wall {
    pub position: i64,
    pub sign: Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    InfiniteLeft,
    Finite,
    InfiniteRight,
    /// The single domain of a wall-free path.
    Whole,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainClass {
    Up,
    Down,
    UpRegular,
    DownRegular,
    Maximal,
    Minimal,
}

impl DomainClass {
    pub fn is_critical(self) -> bool {
        matches!(self, DomainClass::Maximal | DomainClass::Minimal)
    }

    /// Class of `t_j` given its neighbours in a unit-step sequence.
    pub fn of_finite(prev: i64, t: i64, next: i64) -> Option<DomainClass> {
        match (prev - t, next - t) {
            (-1, 1) => Some(DomainClass::UpRegular),
            (1, -1) => Some(DomainClass::DownRegular),
            (-1, -1) => Some(DomainClass::Maximal),
            (1, 1) => Some(DomainClass::Minimal),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DomainClass::Up => "up",
            DomainClass::Down => "down",
            DomainClass::UpRegular => "up-regular",
            DomainClass::DownRegular => "down-regular",
            DomainClass::Maximal => "maximal",
            DomainClass::Minimal => "minimal",
        }
    }
}

impl fmt::Display for DomainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    pub kind: DomainKind,
    /// First position of a finite domain; for a zero-length domain the
    /// position of the stacked walls around it.
    pub start: i64,
    /// `None` for infinite domains.
    pub length: Option<i64>,
    pub ty: i64,
    pub class: Option<DomainClass>,
    /// Domain parameter `c(d)`, finite domains only.
    pub param: Option<i64>,
}

/// The classification record of a path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTuple {
    pub m: i64,
    pub l: i64,
    pub n: usize,
    pub types: Vec<i64>,
    pub params: Vec<i64>,
    pub walls: Vec<Sign>,
    pub depth: i64,
    /// Set when the path has no walls, where the depth is meaningless.
    pub degenerate: bool,
}

impl fmt::Display for ClassTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        writeln!(f, "m={}", self.m)?;
        writeln!(f, "l={}", self.l)?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "types={}", join(&self.types))?;
        writeln!(f, "params={}", join(&self.params))?;
        let walls: String = self.walls.iter().map(|s| s.symbol()).collect();
        writeln!(f, "walls={walls}")?;
        writeln!(f, "depth={}", self.depth)?;
        if self.degenerate {
            writeln!(f, "degenerate=true")?;
        }
        Ok(())
    }
}

impl Path {
    /// Builds the canonical path whose entries on `[s, s + raw.len())` are
    /// `raw`, with zeros to the left and the ground pattern to the right.
    ///
    /// The canonical window runs from the first nonzero entry to the last
    /// entry that differs from the pattern. When the two tails meet the window
    /// is empty and `window_start` records where the pattern begins.
    pub fn canonicalize(m: i64, l: i64, s: i64, raw: &[i64]) -> Path {
        let end = s + raw.len() as i64;
        let val = |k: i64| {
            if k < s {
                0
            } else if k >= end {
                pattern(m, k)
            } else {
                raw[(k - s) as usize]
            }
        };
        if m == 0 {
            let first = (s..end).find(|&k| val(k) != 0);
            return match first {
                None => Path { m, l, window_start: 0, entries: Vec::new() },
                Some(a) => {
                    let b = (s..end).rev().find(|&k| val(k) != 0).unwrap();
                    Path { m, l, window_start: a, entries: (a..=b).map(val).collect() }
                }
            };
        }
        let last = (s..end).rev().find(|&k| val(k) != pattern(m, k)).unwrap_or(s - 1);
        let first = (s..=last).find(|&k| val(k) != 0).unwrap_or(last + 1);
        Path {
            m,
            l,
            window_start: first,
            entries: (first..=last).map(val).collect(),
        }
    }

    /// The ground-state path `g`.
    pub fn ground(m: i64, l: i64) -> Path {
        Path::canonicalize(m, l, 0, &[])
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn window_start(&self) -> i64 {
        self.window_start
    }

    /// Last position of the window; `window_start − 1` when it is empty.
    pub fn window_end(&self) -> i64 {
        self.window_start + self.entries.len() as i64 - 1
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn with_l(&self, l: i64) -> Path {
        Path { l, ..self.clone() }
    }

    pub fn entry_at(&self, k: i64) -> i64 {
        if k < self.window_start {
            0
        } else if k > self.window_end() {
            pattern(self.m, k)
        } else {
            self.entries[(k - self.window_start) as usize]
        }
    }

    /// `w_k = i_{k−1} + i_k`.
    pub fn wall_value(&self, k: i64) -> i64 {
        self.entry_at(k - 1) + self.entry_at(k)
    }

    /// Positions that can carry walls.
    fn wall_range(&self) -> std::ops::RangeInclusive<i64> {
        self.window_start..=self.window_end() + 1
    }

    pub fn wall_count(&self) -> usize {
        self.wall_range().map(|k| self.wall_value(k).unsigned_abs() as usize).sum()
    }

    pub fn walls(&self) -> Vec<Wall> {
        let mut out = Vec::new();
        for k in self.wall_range() {
            let w = self.wall_value(k);
            if let Some(sign) = Sign::from_int(w) {
                out.extend(std::iter::repeat_n(Wall { position: k, sign }, w.unsigned_abs() as usize));
            }
        }
        out
    }

    pub fn wall_signs(&self) -> Vec<Sign> {
        self.walls().into_iter().map(|w| w.sign).collect()
    }

    /// `(k, a_k)` for `k ∈ [s−2, t+2]`.
    pub fn a_profile(&self, i: Color) -> Vec<(i64, i64)> {
        let sigma = match i {
            Color::One => -1,
            Color::Zero => 1,
        };
        let mut acc = 0;
        (self.window_start - 2..=self.window_end() + 2)
            .map(|k| {
                acc += sigma * self.wall_value(k);
                (k, acc)
            })
            .collect()
    }

    /// Position acted on by `ẽ_i` / `f̃_i`, or `None` when the result is 0.
    pub fn acting_position(&self, i: Color, dir: Dir) -> Option<i64> {
        let prof = self.a_profile(i);
        let min = prof.iter().map(|&(_, a)| a).min().unwrap();
        let right = self.window_end() + 1;
        match dir {
            Dir::Lower => {
                let &(k, _) = prof.iter().rev().find(|&&(_, a)| a == min).unwrap();
                (k < right).then_some(k)
            }
            Dir::Raise => {
                if min == 0 {
                    return None;
                }
                prof.iter().find(|&&(_, a)| a == min).map(|&(k, _)| k)
            }
        }
    }

    pub fn apply(&self, i: Color, dir: Dir) -> Option<Path> {
        let k = self.acting_position(i, dir)?;
        let delta = match (i, dir) {
            (Color::One, Dir::Lower) | (Color::Zero, Dir::Raise) => 1,
            (Color::One, Dir::Raise) | (Color::Zero, Dir::Lower) => -1,
        };
        let lo = self.window_start - 1;
        let hi = self.window_end() + 1;
        let raw: Vec<i64> = (lo..=hi)
            .map(|q| self.entry_at(q) + if q == k { delta } else { 0 })
            .collect();
        Some(Path::canonicalize(self.m, self.l, lo, &raw))
    }

    /// Applies a word of operators left to right; `None` as soon as one returns 0.
    pub fn apply_word(&self, word: &[(Color, Dir)]) -> Option<Path> {
        word.iter().try_fold(self.clone(), |p, &(i, d)| p.apply(i, d))
    }

    fn profile_extremes(&self, i: Color) -> (i64, i64) {
        let prof = self.a_profile(i);
        let min = prof.iter().map(|&(_, a)| a).min().unwrap();
        (min, prof.last().unwrap().1)
    }

    /// `(m + 2Σ(i_k − g_k))(Λ₀ − Λ₁)`.
    pub fn classical_weight(&self) -> ClassicalWeight {
        let lo = self.window_start.min(0);
        let hi = self.window_end().max(-1);
        let diff: i64 = (lo..=hi).map(|k| self.entry_at(k) - ground_entry(self.m, k)).sum();
        ClassicalWeight::level_zero(self.m + 2 * diff)
    }

    /// `⟨d, wt(p)⟩ = l + Σ_k k·(H(i_{k−1} ⊗ i_k) − H(g_{k−1} ⊗ g_k))`.
    pub fn degree(&self) -> i64 {
        let lo = self.window_start.min(0);
        let hi = self.window_end().max(-1) + 1;
        let sum: i64 = (lo..=hi)
            .map(|k| {
                let here = energy(self.entry_at(k - 1), self.entry_at(k));
                let ground = energy(ground_entry(self.m, k - 1), ground_entry(self.m, k));
                k * (here - ground)
            })
            .sum();
        self.l + sum
    }

    pub fn affine_weight(&self) -> AffineWeight {
        self.classical_weight().af() + AffineWeight::new(0, 0, self.degree())
    }

    pub fn domains(&self) -> Vec<Domain> {
        let walls = self.walls();
        let n = walls.len();
        if n == 0 {
            return vec![Domain {
                kind: DomainKind::Whole,
                start: self.window_start,
                length: None,
                ty: 0,
                class: None,
                param: None,
            }];
        }
        // The type after each wall moves by (−1)^k·sign(w_k), which fills in
        // zero-length domains between stacked walls.
        let mut types = Vec::with_capacity(n + 1);
        let mut t = 0;
        types.push(t);
        for w in &walls {
            t += pattern(1, w.position) * w.sign.value();
            types.push(t);
        }
        debug_assert_eq!(t, self.m);

        let mut out = Vec::with_capacity(n + 1);
        let up = |a: i64, b: i64| if a < b { DomainClass::Up } else { DomainClass::Down };
        out.push(Domain {
            kind: DomainKind::InfiniteLeft,
            start: walls[0].position,
            length: None,
            ty: 0,
            class: Some(up(types[0], types[1])),
            param: None,
        });
        for j in 1..n {
            let start = walls[j - 1].position;
            let length = walls[j].position - start;
            let class = DomainClass::of_finite(types[j - 1], types[j], types[j + 1]);
            let param = class.map(|c| {
                if c.is_critical() {
                    (length - 1).div_euclid(2)
                } else {
                    length.div_euclid(2)
                }
            });
            out.push(Domain {
                kind: DomainKind::Finite,
                start,
                length: Some(length),
                ty: types[j],
                class,
                param,
            });
        }
        out.push(Domain {
            kind: DomainKind::InfiniteRight,
            start: walls[n - 1].position,
            length: None,
            ty: self.m,
            class: Some(up(types[n - 1], types[n])),
            param: None,
        });
        out
    }

    /// Types of the finite domains `d_1, …, d_{n−1}`.
    pub fn domain_types(&self) -> Vec<i64> {
        finite(&self.domains()).map(|d| d.ty).collect()
    }

    pub fn domain_params(&self) -> Vec<i64> {
        finite(&self.domains()).map(|d| d.param.unwrap_or(0)).collect()
    }

    /// Extremality read off the skeleton. Computes both the wall criterion
    /// and the minimal-length criterion and fails if they disagree.
    pub fn is_extremal_char(&self) -> Result<bool> {
        let signs = self.wall_signs();
        let walls_equal = signs.windows(2).all(|w| w[0] == w[1]);
        let minimal_lengths = finite(&self.domains()).all(|d| {
            let c = d.param.unwrap_or(0);
            let lmin = match d.class {
                Some(cl) if cl.is_critical() => 2 * c + 1,
                _ => 2 * c,
            };
            d.length == Some(lmin)
        });
        if walls_equal != minimal_lengths {
            return Err(CrystalError::InternalInconsistency { walls_equal, minimal_lengths });
        }
        Ok(walls_equal)
    }

    pub fn classify(&self) -> ClassTuple {
        let doms = self.domains();
        let n = self.wall_count();
        let degree = self.degree();
        ClassTuple {
            m: self.m,
            l: self.l,
            n,
            types: finite(&doms).map(|d| d.ty).collect(),
            params: finite(&doms).map(|d| d.param.unwrap_or(0)).collect(),
            walls: self.wall_signs(),
            depth: if n == 0 { 0 } else { degree.div_euclid(n as i64) },
            degenerate: n == 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("paths always serialize")
    }
}

fn finite(doms: &[Domain]) -> impl Iterator<Item = &Domain> {
    doms.iter().filter(|d| d.kind == DomainKind::Finite)
}

/// `|t_j − t_{j−1}| = 1` with `t_0 = 0` and `t_n = m`.
pub fn is_config(m: i64, types: &[i64], n: usize) -> bool {
    if n == 0 {
        return m == 0 && types.is_empty();
    }
    if types.len() != n - 1 {
        return false;
    }
    let mut full = Vec::with_capacity(n + 1);
    full.push(0);
    full.extend_from_slice(types);
    full.push(m);
    full.windows(2).all(|w| (w[1] - w[0]).abs() == 1)
}

/// The extremal path `p^(sign)_depth` of `𝒫_{m,l}(n; t⃗; c⃗)`.
///
/// Finite domains are alternating blocks `±t_j, ∓t_j, …` whose shape
/// depends on the class of `t_j`; the right tail starts so that its leftmost
/// `m` sits at `2·depth` for `+` and its leftmost `−m` at `2·depth − 1` for `−`.
pub fn construct_extremal(
    m: i64,
    l: i64,
    n: usize,
    types: &[i64],
    params: &[i64],
    sign: Sign,
    depth: i64,
) -> Result<Path> {
    if n == 0 {
        if m != 0 || !types.is_empty() || !params.is_empty() {
            return Err(CrystalError::InvalidConfig(format!(
                "n = 0 requires m = 0 and empty vectors (m = {m})"
            )));
        }
        return Ok(Path::ground(0, l));
    }
    if (n as i64) < m.abs() || (n as i64 - m.abs()) % 2 != 0 {
        return Err(CrystalError::InvalidConfig(format!(
            "n − |m| = {} is not a non-negative even integer",
            n as i64 - m.abs()
        )));
    }
    if !is_config(m, types, n) {
        return Err(CrystalError::InvalidConfig(format!(
            "types {types:?} are not a unit-step sequence from 0 to {m} with {} entries",
            n - 1
        )));
    }
    if params.len() != n - 1 || params.iter().any(|&c| c < 0) {
        return Err(CrystalError::InvalidConfig(format!(
            "expected {} non-negative parameters, got {params:?}",
            n - 1
        )));
    }

    let mut full = vec![0];
    full.extend_from_slice(types);
    full.push(m);
    let s = sign.value();
    let right_up = full[n - 1] < full[n];
    let start = match (sign, right_up) {
        (Sign::Plus, true) => 2 * depth,
        (Sign::Plus, false) | (Sign::Minus, true) => 2 * depth - 1,
        (Sign::Minus, false) => 2 * depth - 2,
    };

    let mut blocks: Vec<Vec<i64>> = Vec::with_capacity(n - 1);
    for j in 1..n {
        let t = full[j];
        let c = params[j - 1] as usize;
        let class = DomainClass::of_finite(full[j - 1], t, full[j + 1])
            .expect("unit-step sequences classify every entry");
        let (first, len) = match class {
            DomainClass::UpRegular => (s * t, 2 * c),
            DomainClass::DownRegular => (-s * t, 2 * c),
            DomainClass::Maximal => (s * t, 2 * c + 1),
            DomainClass::Minimal => (-s * t, 2 * c + 1),
            DomainClass::Up | DomainClass::Down => unreachable!(),
        };
        blocks.push((0..len).map(|q| if q % 2 == 0 { first } else { -first }).collect());
    }
    let raw: Vec<i64> = blocks.concat();
    let window_start = start - raw.len() as i64;
    Ok(Path::canonicalize(m, l, window_start, &raw))
}

impl Crystal for Path {
    fn weight(&self) -> ClassicalWeight {
        self.classical_weight()
    }

    fn epsilon(&self, i: Color) -> ExtInt {
        let (min, _) = self.profile_extremes(i);
        ExtInt::Finite(-min)
    }

    fn phi(&self, i: Color) -> ExtInt {
        let (min, last) = self.profile_extremes(i);
        ExtInt::Finite(last - min)
    }

    fn raise(&self, i: Color) -> Option<Self> {
        self.apply(i, Dir::Raise)
    }

    fn lower(&self, i: Color) -> Option<Self> {
        self.apply(i, Dir::Lower)
    }
}

impl AffineCrystal for Path {
    fn affine_weight(&self) -> AffineWeight {
        Path::affine_weight(self)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.entries.iter().map(i64::to_string).collect();
        write!(
            f,
            "m={} l={} @{} [{}]",
            self.m,
            self.l,
            self.window_start,
            body.join(",")
        )
    }
}

impl FromStr for Path {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| CrystalError::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::weyl_s;
    use proptest::prelude::*;
    use Sign::{Minus as M, Plus as P};

    fn p1212() -> Path {
        Path::canonicalize(3, 0, -2, &[0, 0, 2, -1, 3, -3, 3])
    }

    #[test]
    fn canonical_windows() {
        let g = Path::canonicalize(1, 0, 0, &[1, -1, 1]);
        assert_eq!(g, Path::ground(1, 0));
        assert!(g.entries().is_empty());
        let p = p1212();
        assert_eq!((p.window_start(), p.entries()), (0, &[2, -1][..]));
        let z = Path::canonicalize(0, 0, 5, &[0]);
        assert!(z.entries().is_empty());
        assert_eq!(z, Path::ground(0, 0));
    }

    #[test]
    fn entries_extrapolate() {
        let g = Path::ground(2, 0);
        assert_eq!(g.entry_at(4), 2);
        assert_eq!(g.entry_at(5), -2);
        assert_eq!(g.entry_at(-7), 0);
        assert_eq!(p1212().entry_at(1), -1);
        assert_eq!(p1212().entry_at(2), 3);
    }

    #[test]
    fn profiles() {
        let g = Path::ground(1, 0);
        for (k, a) in g.a_profile(Color::Zero) {
            assert_eq!(a, if k <= -1 { 0 } else { 1 });
        }
        let prof: std::collections::HashMap<i64, i64> = p1212().a_profile(Color::One).into_iter().collect();
        assert_eq!(prof[&-1], 0);
        assert_eq!(prof[&0], -2);
        assert_eq!(prof[&1], -3);
        assert_eq!(prof[&2], -5);
        assert_eq!(prof[&3], -5);
        let p = Path::canonicalize(2, 0, -3, &[1, -2, 0, 5]);
        for i in Color::ALL {
            let prof = p.a_profile(i);
            assert_eq!(prof[0].1, 0);
            assert_eq!(prof[1].1, 0);
            let n = prof.len();
            assert_eq!(prof[n - 1].1, prof[n - 2].1);
        }
    }

    #[test]
    fn operators_on_ground_state() {
        let g = Path::ground(1, 0);
        let f0 = g.apply(Color::Zero, Dir::Lower).unwrap();
        assert_eq!(f0, Path::canonicalize(1, 0, -1, &[-1]));
        assert_eq!((f0.window_start(), f0.entries()), (-1, &[][..]));
        assert_eq!((f0.entry_at(-2), f0.entry_at(-1), f0.entry_at(0)), (0, -1, 1));
        assert_eq!(g.apply(Color::One, Dir::Lower), None);
        let e1 = g.apply(Color::One, Dir::Raise).unwrap();
        assert_eq!(e1, Path::canonicalize(1, 0, -2, &[0, 0, 0, -1, 1]));
        assert_eq!(e1, weyl_s(Color::One, &g).unwrap());
        assert_eq!(e1, construct_extremal(1, 0, 1, &[], &[], M, 1).unwrap());
        assert_eq!(e1.apply(Color::One, Dir::Lower), Some(g.clone()));
        assert_eq!(g.apply(Color::Zero, Dir::Raise), None);
    }

    #[test]
    fn wall_counts_and_walls() {
        let vis = Path::canonicalize(3, 0, 0, &[1, -1, 3]);
        assert_eq!(vis.wall_count(), 3);
        assert_eq!(p1212().wall_count(), 5);
        for m in -4..=4 {
            assert_eq!(Path::ground(m, 0).wall_count(), m.unsigned_abs() as usize);
        }
        let w: Vec<(i64, Sign)> = p1212().walls().iter().map(|w| (w.position, w.sign)).collect();
        assert_eq!(w, vec![(0, P), (0, P), (1, P), (2, P), (2, P)]);
        let w: Vec<(i64, Sign)> = Path::ground(-2, 0).walls().iter().map(|w| (w.position, w.sign)).collect();
        assert_eq!(w, vec![(0, M), (0, M)]);
        assert!(Path::ground(0, 0).walls().is_empty());
    }

    #[test]
    fn domains_of_the_1212_path() {
        let d = p1212().domains();
        assert_eq!(d.len(), 6);
        assert_eq!(p1212().domain_types(), vec![1, 2, 1, 2]);
        let classes: Vec<_> = d.iter().map(|d| d.class.unwrap()).collect();
        use DomainClass::*;
        assert_eq!(classes, vec![Up, UpRegular, Maximal, Minimal, UpRegular, Up]);
        assert_eq!(p1212().domain_params(), vec![0, 0, 0, 0]);
        let lengths: Vec<_> = d.iter().filter_map(|d| d.length).collect();
        assert_eq!(lengths, vec![0, 1, 1, 0]);
        assert_eq!(d[0].ty, 0);
        assert_eq!(d[5].ty, 3);
    }

    #[test]
    fn wall_free_domain() {
        let d = Path::ground(0, 0).domains();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].class, None);
    }

    #[test]
    fn configurations() {
        assert!(is_config(1, &[1, 2], 3));
        assert!(!is_config(3, &[], 1));
        assert!(is_config(0, &[], 0));
        assert!(!is_config(0, &[1], 3));
        assert!(is_config(-1, &[], 1));
    }

    #[test]
    fn construction_examples() {
        assert_eq!(construct_extremal(1, 0, 1, &[], &[], P, 0).unwrap(), Path::ground(1, 0));
        let p = construct_extremal(1, 0, 3, &[1, 2], &[0, 0], P, 0).unwrap();
        assert_eq!(p, Path::canonicalize(1, 0, -2, &[2, -1, 1]));
        assert!(p.wall_signs().iter().all(|&s| s == P));
        let q = construct_extremal(1, 0, 3, &[1, 2], &[0, 0], M, 0).unwrap();
        assert!(q.wall_signs().iter().all(|&s| s == M));
        let pw: Vec<i64> = p.walls().iter().map(|w| w.position - 1).collect();
        let qw: Vec<i64> = q.walls().iter().map(|w| w.position).collect();
        assert_eq!(pw, qw);
        assert_eq!(construct_extremal(3, 0, 5, &[1, 2, 1, 2], &[0; 4], P, 1).unwrap(), p1212());
        assert!(matches!(
            construct_extremal(3, 0, 1, &[], &[], P, 0),
            Err(CrystalError::InvalidConfig(_))
        ));
        assert!(construct_extremal(1, 0, 3, &[1, 2], &[0, -1], P, 0).is_err());
    }

    #[test]
    fn extremal_characterization() {
        assert_eq!(p1212().is_extremal_char(), Ok(true));
        if let Some(q) = p1212().apply(Color::One, Dir::Lower) {
            assert_eq!(q.is_extremal_char(), Ok(false));
        }
        let q = p1212().apply(Color::Zero, Dir::Lower).unwrap();
        assert_eq!(q.is_extremal_char(), Ok(false));
        assert_eq!(Path::ground(0, 0).is_extremal_char(), Ok(true));
    }

    #[test]
    fn weights() {
        for m in -3..=3 {
            assert_eq!(Path::ground(m, 0).classical_weight(), ClassicalWeight::level_zero(m));
            assert_eq!(Path::ground(m, 4).affine_weight(), ClassicalWeight::level_zero(m).af() + AffineWeight::new(0, 0, 4));
        }
        assert_eq!(p1212().classical_weight(), ClassicalWeight::level_zero(5));
        assert_eq!(Path::ground(0, 0).classical_weight(), ClassicalWeight::ZERO);
        let g = Path::ground(1, 0);
        let f0 = g.apply(Color::Zero, Dir::Lower).unwrap();
        assert_eq!(f0.degree(), g.degree() - 1);
    }

    #[test]
    fn extremal_degree_gaps() {
        let fams: &[(i64, usize, &[i64], &[i64])] = &[
            (1, 3, &[1, 2], &[0, 0]),
            (3, 5, &[1, 2, 1, 2], &[0, 1, 0, 2]),
            (0, 2, &[1], &[1]),
            (-2, 4, &[-1, 0, -1], &[0, 2, 1]),
        ];
        for &(m, n, t, c) in fams {
            for sign in [P, M] {
                let base = construct_extremal(m, 0, n, t, c, sign, 0).unwrap().degree();
                for l in -3..=3 {
                    let p = construct_extremal(m, 0, n, t, c, sign, l).unwrap();
                    assert_eq!(p.degree() - base, l * n as i64);
                }
            }
        }
    }

    #[test]
    fn classification_records() {
        let c = p1212().classify();
        assert_eq!((c.n, c.types.clone(), c.params.clone()), (5, vec![1, 2, 1, 2], vec![0; 4]));
        assert_eq!(c.walls, vec![P; 5]);
        assert!(!c.degenerate);
        let base = construct_extremal(3, 0, 5, &[1, 2, 1, 2], &[0; 4], P, 0).unwrap().classify();
        let seven = construct_extremal(3, 0, 5, &[1, 2, 1, 2], &[0; 4], P, 7).unwrap().classify();
        assert_eq!(seven.depth - base.depth, 7);
        let z = Path::ground(0, 0).classify();
        assert!(z.degenerate && z.n == 0 && z.types.is_empty() && z.depth == 0);
    }

    #[test]
    fn json_format() {
        let p = p1212();
        assert_eq!(p.to_json(), r#"{"m":3,"l":0,"window_start":0,"entries":[2,-1]}"#);
        let q: Path = r#"{"m":3,"l":0,"window_start":-2,"entries":[0,0,2,-1,3,-3]}"#.parse().unwrap();
        assert_eq!(q, p);
        assert!("{\"m\":1}".parse::<Path>().is_err());
    }

    fn arb_path() -> impl Strategy<Value = Path> {
        (-3i64..=3, -3i64..=3, -6i64..=6, prop::collection::vec(-4i64..=4, 0..10))
            .prop_map(|(m, l, s, raw)| Path::canonicalize(m, l, s, &raw))
    }

    proptest! {
        #[test]
        fn canonicalize_is_idempotent(p in arb_path(), pad_left in 0usize..4, pad_right in 0usize..4) {
            let again = Path::canonicalize(p.m(), p.l(), p.window_start(), p.entries());
            prop_assert_eq!(&again, &p);
            let lo = p.window_start() - pad_left as i64;
            let hi = p.window_end() + pad_right as i64;
            let raw: Vec<i64> = (lo..=hi).map(|k| p.entry_at(k)).collect();
            prop_assert_eq!(Path::canonicalize(p.m(), p.l(), lo, &raw), p);
        }

        #[test]
        fn json_round_trip(p in arb_path()) {
            let back: Path = p.to_json().parse().unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn crystal_axioms_on_paths(p in arb_path()) {
            for i in Color::ALL {
                let eps = p.epsilon(i).finite().unwrap();
                let phi = p.phi(i).finite().unwrap();
                prop_assert_eq!(phi, eps + p.pairing(i));
                if let Some(q) = p.raise(i) {
                    prop_assert_eq!(q.lower(i), Some(p.clone()));
                    prop_assert_eq!(q.affine_weight(), p.affine_weight() + AffineWeight::simple_root(i));
                    prop_assert_eq!(q.epsilon(i).finite().unwrap(), eps - 1);
                } else {
                    prop_assert_eq!(eps, 0);
                }
                if let Some(q) = p.lower(i) {
                    prop_assert_eq!(q.raise(i), Some(p.clone()));
                } else {
                    prop_assert_eq!(phi, 0);
                }
            }
        }
    }
}
