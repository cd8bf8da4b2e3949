//! The crystal contract shared by every concrete crystal in the crate:
//! weights, `ε_i`, `φ_i`, Kashiwara operators, the tensor product rule, the
//! Weyl group action `S_i`, bounded extremality and bounded crystal graphs.
//!
//! Tensor products use Kashiwara's convention: for `b₁ ⊗ b₂`,
//! `ẽ_i` acts on `b₁` when `φ_i(b₁) ≥ ε_i(b₂)` and `f̃_i` acts on `b₁` when
//! `φ_i(b₁) > ε_i(b₂)`. For longer tensors the acted factor is read off the
//! signature profile `a_k = Σ_{j<k} φ_i(b_j) − ε_i(b_{j+1})` in one pass.

use std::collections::HashMap;
use std::fmt::{self, Display, Write as _};
use std::hash::Hash;

use crate::error::{CrystalError, Result};
use crate::weights::{AffineWeight, ClassicalWeight, Color, ExtInt};

/// Raising (`ẽ_i`) or lowering (`f̃_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    Raise,
    Lower,
}

impl Dir {
    pub fn inverse(self) -> Dir {
        match self {
            Dir::Raise => Dir::Lower,
            Dir::Lower => Dir::Raise,
        }
    }
}

/// A crystal element. `None` from [`Crystal::raise`]/[`Crystal::lower`] is the ideal element 0.
pub trait Crystal: Clone {
    /// Classical weight (for affine crystals, `cl` of the affine weight).
    fn weight(&self) -> ClassicalWeight;
    fn epsilon(&self, i: Color) -> ExtInt;
    fn phi(&self, i: Color) -> ExtInt;
    fn raise(&self, i: Color) -> Option<Self>;
    fn lower(&self, i: Color) -> Option<Self>;

    fn act(&self, i: Color, dir: Dir) -> Option<Self> {
        match dir {
            Dir::Raise => self.raise(i),
            Dir::Lower => self.lower(i),
        }
    }

    /// `⟨h_i, wt(b)⟩`.
    fn pairing(&self, i: Color) -> i64 {
        self.weight().pair(i)
    }
}

/// Crystals that carry a full affine weight.
pub trait AffineCrystal: Crystal {
    fn affine_weight(&self) -> AffineWeight;
}

/// `(ε_i, φ_i, wt)` of a tensor product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorStats {
    pub epsilon: ExtInt,
    pub phi: ExtInt,
    pub weight: ClassicalWeight,
}

/// Data of `b₁ ⊗ b₂` from the data of the factors.
pub fn tensor_stats<A: Crystal, B: Crystal>(i: Color, b1: &A, b2: &B) -> TensorStats {
    combine_stats(
        i,
        (b1.epsilon(i), b1.phi(i), b1.weight()),
        (b2.epsilon(i), b2.phi(i), b2.weight()),
    )
}

pub(crate) fn combine_stats(
    i: Color,
    (e1, p1, w1): (ExtInt, ExtInt, ClassicalWeight),
    (e2, p2, w2): (ExtInt, ExtInt, ClassicalWeight),
) -> TensorStats {
    TensorStats {
        epsilon: e1.max(e2 - w1.pair(i)),
        phi: p2.max(p1 + w2.pair(i)),
        weight: w1 + w2,
    }
}

/// Per-factor input to the signature rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorData {
    pub epsilon: ExtInt,
    pub phi: ExtInt,
    pub pairing: i64,
}

impl FactorData {
    pub fn of<B: Crystal>(b: &B, i: Color) -> Self {
        Self {
            epsilon: b.epsilon(i),
            phi: b.phi(i),
            pairing: b.pairing(i),
        }
    }
}

/// Single-pass signature profile of `b_1 ⊗ … ⊗ b_N`.
///
/// Factors with `ε_i = −∞` (the `T_λ` tokens) are never acted upon; they only
/// shift the running profile by `⟨h_i, λ⟩`.
#[derive(Debug, Clone)]
pub struct Signature {
    /// Indices of the factors with finite data, left to right.
    active: Vec<usize>,
    /// Profile value at each active factor.
    profile: Vec<i64>,
    epsilon: ExtInt,
    phi: ExtInt,
}

impl Signature {
    pub fn new(factors: &[FactorData]) -> Self {
        let mut active = Vec::new();
        let mut profile = Vec::new();
        let mut lead_shift = 0;
        let mut pending_shift = 0;
        let mut first_eps = 0;
        let mut last_phi = 0;
        for (idx, f) in factors.iter().enumerate() {
            match (f.epsilon, f.phi) {
                (ExtInt::Finite(e), ExtInt::Finite(p)) => {
                    if active.is_empty() {
                        lead_shift = pending_shift;
                        first_eps = e;
                        profile.push(0);
                    } else {
                        let prev = *profile.last().unwrap();
                        profile.push(prev + last_phi + pending_shift - e);
                    }
                    active.push(idx);
                    last_phi = p;
                    pending_shift = 0;
                }
                _ => pending_shift += f.pairing,
            }
        }
        if active.is_empty() {
            return Self {
                active,
                profile,
                epsilon: ExtInt::NegInf,
                phi: ExtInt::NegInf,
            };
        }
        let min = *profile.iter().min().unwrap();
        let last = *profile.last().unwrap();
        Self {
            epsilon: ExtInt::Finite(first_eps - lead_shift - min),
            phi: ExtInt::Finite(last_phi + pending_shift + last - min),
            active,
            profile,
        }
    }

    pub fn epsilon(&self) -> ExtInt {
        self.epsilon
    }

    pub fn phi(&self) -> ExtInt {
        self.phi
    }

    pub fn profile(&self) -> &[i64] {
        &self.profile
    }

    /// Index of the factor the operator acts on: the leftmost global minimum
    /// of the profile for `ẽ_i`, the rightmost for `f̃_i`. `None` only when
    /// every factor has `ε_i = −∞`.
    pub fn position(&self, dir: Dir) -> Option<usize> {
        let min = *self.profile.iter().min()?;
        let k = match dir {
            Dir::Raise => self.profile.iter().position(|&a| a == min)?,
            Dir::Lower => self.profile.iter().rposition(|&a| a == min)?,
        };
        Some(self.active[k])
    }
}

/// Applies `ẽ_i`/`f̃_i` to a tensor product given as a slice of factors.
pub fn tensor_op<B: Crystal>(i: Color, dir: Dir, factors: &[B]) -> Option<Vec<B>> {
    let data: Vec<FactorData> = factors.iter().map(|b| FactorData::of(b, i)).collect();
    let k = Signature::new(&data).position(dir)?;
    let acted = factors[k].act(i, dir)?;
    let mut out = factors.to_vec();
    out[k] = acted;
    Some(out)
}

/// The Weyl group action: `S_i b = f̃_i^k b` for `k = ⟨h_i, wt b⟩ ≥ 0`, `ẽ_i^{−k} b` otherwise.
pub fn weyl_s<B: Crystal>(i: Color, b: &B) -> Result<B> {
    let k = b.pairing(i);
    let dir = if k >= 0 { Dir::Lower } else { Dir::Raise };
    let mut cur = b.clone();
    for _ in 0..k.unsigned_abs() {
        cur = cur
            .act(i, dir)
            .ok_or(CrystalError::NonNormal { color: i.index() })?;
    }
    Ok(cur)
}

/// `ẽ_i b = 0` or `f̃_i b = 0`.
pub fn is_i_extremal<B: Crystal>(i: Color, b: &B) -> bool {
    b.raise(i).is_none() || b.lower(i).is_none()
}

/// Bounded extremality test: every `S_{i_1}⋯S_{i_l} b` over alternating words
/// of length `≤ depth` must be `i`-extremal for both colors.
///
/// Reduced words in the affine Weyl group of sl2 alternate, so this visits the
/// Weyl orbit up to length `depth`. A `false` answer is always a genuine
/// refutation; `true` is decisive for spin tensors and paths once
/// `depth ≥ 2n`.
pub fn is_extremal_bounded<B: Crystal>(b: &B, depth: usize) -> bool {
    let both = |x: &B| Color::ALL.iter().all(|&i| is_i_extremal(i, x));
    if !both(b) {
        return false;
    }
    for start in Color::ALL {
        let mut cur = b.clone();
        let mut color = start;
        for _ in 0..depth {
            cur = match weyl_s(color, &cur) {
                Ok(next) => next,
                Err(_) => return false,
            };
            if !both(&cur) {
                return false;
            }
            color = color.other();
        }
    }
    true
}

/// A finite piece of a crystal graph: nodes in discovery order and the
/// `f̃_i` arrows between them.
#[derive(Debug, Clone)]
pub struct CrystalGraph<B> {
    pub nodes: Vec<B>,
    /// `(from, color, to)`: `f̃_color(nodes[from]) = nodes[to]`.
    pub edges: Vec<(usize, Color, usize)>,
}

impl<B: Display> CrystalGraph<B> {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, node) in self.nodes.iter().enumerate() {
            let label = node.to_string().replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  n{k} [label=\"{label}\"];");
        }
        for (from, color, to) in &self.edges {
            let _ = writeln!(out, "  n{from} -> n{to} [label=\"{color}\"];");
        }
        out.push_str("}\n");
        out
    }
}

impl<B> CrystalGraph<B> {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }
}

/// Breadth-first closure of `seed` under `ẽ_i`, `f̃_i` up to edge distance
/// `radius`. Neighbors are explored in the order `e₀, e₁, f₀, f₁`.
pub fn bfs_component<B: Crystal + Eq + Hash>(seed: &B, radius: usize) -> CrystalGraph<B> {
    let ops = [
        (Color::Zero, Dir::Raise),
        (Color::One, Dir::Raise),
        (Color::Zero, Dir::Lower),
        (Color::One, Dir::Lower),
    ];
    let mut index: HashMap<B, usize> = HashMap::new();
    let mut nodes = vec![seed.clone()];
    index.insert(seed.clone(), 0);
    let mut frontier = vec![0usize];
    for _ in 0..radius {
        let mut next = Vec::new();
        for &k in &frontier {
            for (i, dir) in ops {
                if let Some(b) = nodes[k].act(i, dir) {
                    if !index.contains_key(&b) {
                        index.insert(b.clone(), nodes.len());
                        next.push(nodes.len());
                        nodes.push(b);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut edges = Vec::new();
    for (k, b) in nodes.iter().enumerate() {
        for i in Color::ALL {
            if let Some(t) = b.lower(i).and_then(|x| index.get(&x).copied()) {
                edges.push((k, i, t));
            }
        }
    }
    CrystalGraph { nodes, edges }
}

/// Shortest-path distances from the seed, aligned with `graph.nodes`.
pub fn bfs_distances<B: Crystal + Eq + Hash>(graph: &CrystalGraph<B>) -> Vec<usize> {
    let mut dist = vec![usize::MAX; graph.nodes.len()];
    if graph.nodes.is_empty() {
        return dist;
    }
    let mut adj = vec![Vec::new(); graph.nodes.len()];
    for &(a, _, b) in &graph.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    dist[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for &t in &adj[k] {
            if dist[t] == usize::MAX {
                dist[t] = dist[k] + 1;
                queue.push_back(t);
            }
        }
    }
    dist
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dir::Raise => f.write_str("e"),
            Dir::Lower => f.write_str("f"),
        }
    }
}
