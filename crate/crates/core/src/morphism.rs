//! The path-spin morphism `ψ`, its affinization `ψ̂`, the energy function on
//! `B∞ ⊗ B∞`, component indices in `Aff(B^{⊗n})` and a strict-morphism checker.

use std::fmt;

use crate::crystal::{tensor_op, AffineCrystal, Crystal, Dir};
use crate::elementary::{Aff, BInfLetter, Sign, SpinTensor};
use crate::error::{CrystalError, Result};
use crate::path::Path;
use crate::weights::Color;

pub use crate::path::energy;

/// `ψ(p) = (−ι₁) ⊗ ⋯ ⊗ (−ι_n)` where `ι_k` are the wall types of `p`.
pub fn psi(p: &Path) -> Result<SpinTensor> {
    let signs = p.wall_signs();
    if signs.is_empty() {
        return Err(CrystalError::EmptySpin);
    }
    Ok(SpinTensor(signs.into_iter().map(Sign::flip).collect()))
}

/// `ψ̂(p) = z^{⟨d, wt p⟩} ⊗ ψ(p)`.
pub fn psi_hat(p: &Path) -> Result<Aff<SpinTensor>> {
    Ok(Aff::new(p.degree(), psi(p)?))
}

pub fn check_energy_axioms(window: i64) -> bool {
    check_energy_axioms_with(window, energy)
}

/// Scans `(x) ⊗ (y)` with `|x|, |y| ≤ window` for a violation of the energy
/// function axioms under `ẽ_0` and `ẽ_1`.
pub fn check_energy_axioms_with(window: i64, h: impl Fn(i64, i64) -> i64) -> bool {
    for x in -window..=window {
        for y in -window..=window {
            let pair = [BInfLetter(x), BInfLetter(y)];
            for i in Color::ALL {
                let Some(out) = tensor_op(i, Dir::Raise, &pair) else {
                    continue;
                };
                let before = h(x, y);
                let after = h(out[0].0, out[1].0);
                let want = match i {
                    Color::One => before,
                    Color::Zero if pair[0].phi(i) >= pair[1].epsilon(i) => before + 1,
                    Color::Zero => before - 1,
                };
                if after != want {
                    return false;
                }
            }
        }
    }
    true
}

/// The component `Aff(B^{⊗n})_i` containing `z^{i+kn} ⊗ (±)^{⊗n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentIndex {
    pub n: usize,
    pub i: i64,
}

impl fmt::Display for ComponentIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Aff(B^{})_{}", self.n, self.i)
    }
}

/// Locates the connected component of `x` by walking to a uniform tensor.
///
/// `ẽ₁` and `f̃₀` each turn one `−` into `+`, and `f̃₁`, `ẽ₀` do the reverse,
/// so a greedy walk in either direction terminates within `n` steps. Greedy
/// walks can stall (e.g. on `+−+` going up), in which case a breadth-first
/// walk bounded by `4n²` layers takes over.
pub fn component_index(x: &Aff<SpinTensor>) -> Result<ComponentIndex> {
    let n = x.inner.len();
    if n == 0 {
        return Err(CrystalError::EmptySpin);
    }
    let index = |a: &Aff<SpinTensor>| ComponentIndex { n, i: a.zexp.rem_euclid(n as i64) };
    let greedy = |ops: [(Color, Dir); 2]| {
        let mut cur = x.clone();
        loop {
            if cur.inner.is_uniform().is_some() {
                return Some(cur);
            }
            cur = ops.iter().find_map(|&(i, d)| cur.act(i, d))?;
        }
    };
    let up = [(Color::One, Dir::Raise), (Color::Zero, Dir::Lower)];
    let down = [(Color::One, Dir::Lower), (Color::Zero, Dir::Raise)];
    if let Some(end) = greedy(up).or_else(|| greedy(down)) {
        return Ok(index(&end));
    }

    // Layered search over the spin part; any route to a uniform tensor
    // gives the same exponent mod n, so the first one found decides.
    let bound = 4 * n * n;
    let mut seen = std::collections::HashSet::from([x.inner.clone()]);
    let mut layer = vec![x.clone()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for cur in &layer {
            for i in Color::ALL {
                for d in [Dir::Raise, Dir::Lower] {
                    let Some(b) = cur.act(i, d) else { continue };
                    if b.inner.is_uniform().is_some() {
                        return Ok(index(&b));
                    }
                    if seen.insert(b.inner.clone()) {
                        next.push(b);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Err(CrystalError::NotReached { steps: bound })
}

/// One failed check of a strict morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub sample: String,
    pub check: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}\t{}", self.sample, self.check, self.lhs, self.rhs)
    }
}

fn show<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "0".to_string(), T::to_string)
}

/// Checks that `map` preserves `wt`, `ε_i`, `φ_i` and commutes with `ẽ_i`,
/// `f̃_i` (including `0 ↦ 0`) on every sample. Samples where `map` returns
/// `None` lie outside its domain and are skipped.
pub fn check_strict<T, F>(map: F, samples: &[Path]) -> Vec<Violation>
where
    T: Crystal + PartialEq + fmt::Display,
    F: Fn(&Path) -> Option<T>,
{
    let mut out = Vec::new();
    for p in samples {
        let Some(img) = map(p) else { continue };
        let mut push = |check: String, lhs: String, rhs: String| {
            out.push(Violation { sample: p.to_string(), check, lhs, rhs });
        };
        if p.weight() != img.weight() {
            push("wt".into(), p.weight().to_string(), img.weight().to_string());
        }
        for i in Color::ALL {
            if p.epsilon(i) != img.epsilon(i) {
                push(format!("eps{i}"), p.epsilon(i).to_string(), img.epsilon(i).to_string());
            }
            if p.phi(i) != img.phi(i) {
                push(format!("phi{i}"), p.phi(i).to_string(), img.phi(i).to_string());
            }
            for d in [Dir::Raise, Dir::Lower] {
                let lhs = p.act(i, d).and_then(|q| map(&q));
                let rhs = img.act(i, d);
                if lhs != rhs {
                    push(format!("{d}{i}"), show(&lhs), show(&rhs));
                }
            }
        }
    }
    out
}

/// [`check_strict`] plus preservation of the affine weight.
pub fn check_strict_affine<T, F>(map: F, samples: &[Path]) -> Vec<Violation>
where
    T: AffineCrystal + PartialEq + fmt::Display,
    F: Fn(&Path) -> Option<T>,
{
    let mut out = check_strict(&map, samples);
    for p in samples {
        let Some(img) = map(p) else { continue };
        if p.affine_weight() != img.affine_weight() {
            out.push(Violation {
                sample: p.to_string(),
                check: "affine wt".into(),
                lhs: p.affine_weight().to_string(),
                rhs: img.affine_weight().to_string(),
            });
        }
    }
    out
}
