//! Seeded random generators for paths, spin tensors and operator words.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::crystal::Dir;
use crate::elementary::{Sign, SpinTensor};
use crate::path::Path;
use crate::weights::Color;

pub const DEFAULT_SEED: u64 = 20260;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random path with `|m| ≤ max_m` and at most `max_walls` walls.
pub fn random_path(rng: &mut impl Rng, max_m: i64, max_walls: usize) -> Path {
    loop {
        let m = rng.gen_range(-max_m..=max_m);
        let l = rng.gen_range(-3..=3);
        let s = rng.gen_range(-6..=6);
        let len = rng.gen_range(0..=8);
        let spread = rng.gen_range(1..=3);
        let raw: Vec<i64> = (0..len).map(|_| rng.gen_range(-spread..=spread)).collect();
        let p = Path::canonicalize(m, l, s, &raw);
        if p.wall_count() <= max_walls {
            return p;
        }
    }
}

pub fn random_spin_tensor(rng: &mut impl Rng, min_n: usize, max_n: usize) -> SpinTensor {
    let n = rng.gen_range(min_n..=max_n);
    SpinTensor((0..n).map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }).collect())
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Vec<(Color, Dir)> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = if rng.gen_bool(0.5) { Color::Zero } else { Color::One };
            let d = if rng.gen_bool(0.5) { Dir::Raise } else { Dir::Lower };
            (i, d)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        let a: Vec<Path> = {
            let mut r = rng(7);
            (0..20).map(|_| random_path(&mut r, 3, 9)).collect()
        };
        let b: Vec<Path> = {
            let mut r = rng(7);
            (0..20).map(|_| random_path(&mut r, 3, 9)).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(|p| p.m().abs() <= 3 && p.wall_count() <= 9));
    }
}
