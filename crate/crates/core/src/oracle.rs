//! Deliberately naive reference implementations, used to cross-check the
//! production code. Nothing outside tests calls into this module.

use std::fmt;

use crate::crystal::{combine_stats, is_extremal_bounded, Crystal, Dir, TensorStats};
use crate::elementary::{Aff, BInfLetter, SpinTensor, TLambda};
use crate::error::{CrystalError, Result};
use crate::path::Path;
use crate::weights::{ClassicalWeight, Color, ExtInt};

fn stats_of<B: Crystal>(i: Color, b: &B) -> TensorStats {
    TensorStats { epsilon: b.epsilon(i), phi: b.phi(i), weight: b.weight() }
}

/// Data of the left-bracketed product `((b₁ ⊗ b₂) ⊗ ⋯) ⊗ b_k`.
fn prefix_stats<B: Crystal>(i: Color, factors: &[B]) -> TensorStats {
    let mut acc = stats_of(i, &factors[0]);
    for b in &factors[1..] {
        let s = stats_of(i, b);
        acc = combine_stats(i, (acc.epsilon, acc.phi, acc.weight), (s.epsilon, s.phi, s.weight));
    }
    acc
}

/// Index of the factor acted on, found by splitting off the last factor and
/// applying the two-factor rule recursively.
pub fn pairwise_locate<B: Crystal>(i: Color, dir: Dir, factors: &[B]) -> usize {
    let k = factors.len();
    if k == 1 {
        return 0;
    }
    let left = prefix_stats(i, &factors[..k - 1]);
    let right = factors[k - 1].epsilon(i);
    let go_left = match dir {
        Dir::Raise => left.phi >= right,
        Dir::Lower => left.phi > right,
    };
    if go_left {
        pairwise_locate(i, dir, &factors[..k - 1])
    } else {
        k - 1
    }
}

pub fn pairwise_tensor_op<B: Crystal>(i: Color, dir: Dir, factors: &[B]) -> Option<Vec<B>> {
    if factors.is_empty() {
        return None;
    }
    let k = pairwise_locate(i, dir, factors);
    let acted = factors[k].act(i, dir)?;
    let mut out = factors.to_vec();
    out[k] = acted;
    Some(out)
}

/// Factors of `u_∞ ⊗ i_{lo} ⊗ ⋯ ⊗ i_{hi} ⊗ t_λ ⊗ u_{−∞}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TruncFactor {
    UInf,
    Letter(BInfLetter),
    T(TLambda),
    UNegInf,
}

impl Crystal for TruncFactor {
    fn weight(&self) -> ClassicalWeight {
        match self {
            TruncFactor::Letter(x) => x.weight(),
            TruncFactor::T(t) => t.weight(),
            TruncFactor::UInf | TruncFactor::UNegInf => ClassicalWeight::ZERO,
        }
    }

    fn epsilon(&self, i: Color) -> ExtInt {
        match self {
            TruncFactor::Letter(x) => x.epsilon(i),
            TruncFactor::T(t) => t.epsilon(i),
            TruncFactor::UInf | TruncFactor::UNegInf => ExtInt::Finite(0),
        }
    }

    fn phi(&self, i: Color) -> ExtInt {
        match self {
            TruncFactor::Letter(x) => x.phi(i),
            TruncFactor::T(t) => t.phi(i),
            TruncFactor::UInf | TruncFactor::UNegInf => ExtInt::Finite(0),
        }
    }

    fn raise(&self, i: Color) -> Option<Self> {
        match self {
            TruncFactor::Letter(x) => x.raise(i).map(TruncFactor::Letter),
            _ => None,
        }
    }

    fn lower(&self, i: Color) -> Option<Self> {
        match self {
            TruncFactor::Letter(x) => x.lower(i).map(TruncFactor::Letter),
            _ => None,
        }
    }
}

impl fmt::Display for TruncFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruncFactor::UInf => f.write_str("u+"),
            TruncFactor::Letter(x) => write!(f, "{x}"),
            TruncFactor::T(t) => write!(f, "{t}"),
            TruncFactor::UNegInf => f.write_str("u-"),
        }
    }
}

/// The truncated tensor for `p`, keeping `margin` letters beyond its window
/// on each side. The right cut always ends on an odd position.
pub fn truncate(p: &Path, margin: i64) -> (i64, Vec<TruncFactor>) {
    let lo = p.window_start() - margin;
    let mut hi = p.window_end() + margin;
    if hi.rem_euclid(2) == 0 {
        hi += 1;
    }
    let mut factors = vec![TruncFactor::UInf];
    factors.extend((lo..=hi).map(|k| TruncFactor::Letter(BInfLetter(p.entry_at(k)))));
    factors.push(TruncFactor::T(TLambda(ClassicalWeight::level_zero(p.m()))));
    factors.push(TruncFactor::UNegInf);
    (lo, factors)
}

/// `ẽ_i`/`f̃_i` on a path computed through its truncated tensor.
pub fn truncated_path_op(i: Color, dir: Dir, p: &Path, margin: i64) -> Result<Option<Path>> {
    let (lo, factors) = truncate(p, margin);
    let k = pairwise_locate(i, dir, &factors);
    let last_letter = factors.len() - 3;
    let position = lo + k as i64 - 1;
    match (&factors[k], dir) {
        (TruncFactor::UInf, Dir::Raise) | (TruncFactor::UNegInf, Dir::Lower) => return Ok(None),
        (TruncFactor::UInf, Dir::Lower) | (TruncFactor::UNegInf, Dir::Raise) => {
            return Err(CrystalError::MarginTooSmall { position })
        }
        (TruncFactor::T(_), _) => return Ok(None),
        (TruncFactor::Letter(_), _) if k == 1 || k == last_letter => {
            return Err(CrystalError::MarginTooSmall { position })
        }
        _ => {}
    }
    let acted = factors[k].act(i, dir).expect("B∞ letters never return 0");
    let mut out = factors;
    out[k] = acted;
    let raw: Vec<i64> = out[1..=last_letter]
        .iter()
        .map(|f| match f {
            TruncFactor::Letter(x) => x.0,
            _ => unreachable!(),
        })
        .collect();
    Ok(Some(Path::canonicalize(p.m(), p.l(), lo, &raw)))
}

/// Every element of `B^{⊗n}` that passes the bounded extremality test at depth `2n`.
pub fn exhaustive_extremal(n: usize) -> Vec<SpinTensor> {
    SpinTensor::all(n).filter(|x| is_extremal_bounded(x, 2 * n)).collect()
}

/// The same over `z^k ⊗ B^{⊗n}` with `|k| ≤ zwindow`.
pub fn exhaustive_extremal_affine(n: usize, zwindow: i64) -> Vec<Aff<SpinTensor>> {
    let mut out = Vec::new();
    for z in -zwindow..=zwindow {
        for x in SpinTensor::all(n) {
            let a = Aff::new(z, x);
            if is_extremal_bounded(&a, 2 * n) {
                out.push(a);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::tensor_op;
    use crate::elementary::Sign::{self, Minus as M, Plus as P};

    #[test]
    fn pairwise_small_cases() {
        assert_eq!(pairwise_tensor_op(Color::One, Dir::Lower, &[M, P, P]), Some(vec![M, M, P]));
        for x in [P, M] {
            for i in Color::ALL {
                assert_eq!(pairwise_tensor_op(i, Dir::Raise, &[x]), x.raise(i).map(|y| vec![y]));
                assert_eq!(pairwise_tensor_op(i, Dir::Lower, &[x]), x.lower(i).map(|y| vec![y]));
            }
        }
    }

    #[test]
    fn pairwise_equals_single_pass_small() {
        for n in 1..=7 {
            for x in SpinTensor::all(n) {
                for i in Color::ALL {
                    for d in [Dir::Raise, Dir::Lower] {
                        let want: Option<Vec<Sign>> = tensor_op(i, d, x.letters());
                        assert_eq!(pairwise_tensor_op(i, d, x.letters()), want);
                    }
                }
            }
        }
    }

    #[test]
    fn both_bracketings_agree_on_triples() {
        for x in SpinTensor::all(3) {
            let [a, b, c] = [x.0[0], x.0[1], x.0[2]];
            for i in Color::ALL {
                for d in [Dir::Raise, Dir::Lower] {
                    let left = pairwise_tensor_op(i, d, &[a, b, c]);
                    // right bracketing: b₁ ⊗ (b₂ ⊗ b₃)
                    let bc = SpinTensor(vec![b, c]);
                    let s = stats_of(i, &bc);
                    let on_first = match d {
                        Dir::Raise => a.phi(i) >= s.epsilon,
                        Dir::Lower => a.phi(i) > s.epsilon,
                    };
                    let right = if on_first {
                        a.act(i, d).map(|y| vec![y, b, c])
                    } else {
                        bc.act(i, d).map(|t| vec![a, t.0[0], t.0[1]])
                    };
                    assert_eq!(left, right, "{x} {i} {d}");
                }
            }
        }
    }

    #[test]
    fn truncated_ground_state() {
        let g = Path::ground(1, 0);
        let got = truncated_path_op(Color::Zero, Dir::Lower, &g, 4).unwrap();
        assert_eq!(got, g.apply(Color::Zero, Dir::Lower));
        assert_eq!(truncated_path_op(Color::One, Dir::Lower, &g, 4).unwrap(), None);
        assert_eq!(truncated_path_op(Color::Zero, Dir::Raise, &g, 4).unwrap(), None);
    }

    #[test]
    fn truncated_matches_apply() {
        for m in -2..=2 {
            for s in -2..=1 {
                for a in -2..=2 {
                    for b in -2..=2 {
                        let p = Path::canonicalize(m, 0, s, &[a, b]);
                        for i in Color::ALL {
                            for d in [Dir::Raise, Dir::Lower] {
                                let t4 = truncated_path_op(i, d, &p, 4).unwrap();
                                assert_eq!(t4, p.apply(i, d), "{p} {i} {d}");
                                assert_eq!(truncated_path_op(i, d, &p, 8).unwrap(), t4);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tiny_margin_is_reported() {
        let g = Path::ground(1, 0);
        assert!(matches!(
            truncated_path_op(Color::Zero, Dir::Lower, &g, 0),
            Err(CrystalError::MarginTooSmall { .. })
        ));
    }

    #[test]
    fn extremal_sets() {
        let e3 = exhaustive_extremal(3);
        assert_eq!(e3, vec![SpinTensor::uniform(P, 3), SpinTensor::uniform(M, 3)]);
        assert_eq!(exhaustive_extremal(1).len(), 2);
        let a = exhaustive_extremal_affine(2, 4);
        assert_eq!(a.len(), 2 * 9);
        assert!(a.iter().all(|x| x.inner.is_uniform().is_some()));
    }
}
