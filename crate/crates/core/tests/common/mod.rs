#![allow(dead_code)]

use std::collections::HashSet;

use sl2_crystal::crystal::bfs_component;
use sl2_crystal::elementary::Sign;
use sl2_crystal::path::{construct_extremal, Path};

/// Every unit-step sequence `t_1..t_{n−1}` from `0` to `m`.
pub fn configs(m: i64, n: usize) -> Vec<Vec<i64>> {
    fn go(m: i64, n: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let last = *prefix.last().unwrap_or(&0);
        let left = n - prefix.len();
        if left == 1 {
            if (m - last).abs() == 1 {
                out.push(prefix.clone());
            }
            return;
        }
        for step in [-1, 1] {
            let t = last + step;
            if (m - t).abs() <= (left - 1) as i64 {
                prefix.push(t);
                go(m, n, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(m, n, &mut Vec::new(), &mut out);
    out
}

/// All `(m, n, t⃗)` with `1 ≤ n ≤ n_max`, `|m| ≤ m_max`.
pub fn families(m_max: i64, n_max: usize) -> Vec<(i64, usize, Vec<i64>)> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for m in -m_max..=m_max {
            for t in configs(m, n) {
                out.push((m, n, t));
            }
        }
    }
    out
}

pub fn extremal(m: i64, n: usize, t: &[i64], c: &[i64], sign: Sign, l: i64) -> Path {
    construct_extremal(m, 0, n, t, c, sign, l).unwrap()
}

/// Paths reached from `seed` within `radius` operator steps.
pub fn ball(seed: &Path, radius: usize) -> Vec<Path> {
    bfs_component(seed, radius).nodes
}

pub fn as_set(v: &[Path]) -> HashSet<Path> {
    v.iter().cloned().collect()
}

/// Seeds of the affinization checks: every configuration for the listed
/// `(m, n)` with zero parameters, plus one with unit parameters.
pub fn affine_seeds() -> Vec<(i64, usize, Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for (m, n) in [(0i64, 2usize), (1, 1), (1, 3), (2, 2), (2, 4)] {
        for (k, t) in configs(m, n).into_iter().enumerate() {
            out.push((m, n, t.clone(), vec![0; n - 1]));
            if k == 0 && n > 1 {
                out.push((m, n, t, vec![1; n - 1]));
            }
        }
    }
    out
}
