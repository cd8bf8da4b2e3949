//! Named, seeded invariant suites. Each returns the number of trials and
//! a description of every violation found.

use std::fmt;

use crate::crystal::{tensor_op, weyl_s, Crystal, Dir};
use crate::morphism::{check_energy_axioms, check_energy_axioms_with, check_strict, psi};
use crate::oracle::{pairwise_tensor_op, truncated_path_op};
use crate::path::Path;
use crate::sampling::{random_path, random_spin_tensor, random_word, rng};
use crate::weights::Color;

pub const SUITES: &[&str] = &["tensor", "skeleton", "strict", "oracle", "weyl", "energy"];

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub name: String,
    pub trials: usize,
    pub violations: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} trials, {} violations",
            self.name,
            self.trials,
            self.violations.len()
        )?;
        for v in self.violations.iter().take(10) {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

pub fn run_suite(name: &str, seed: u64, trials: usize) -> Option<SuiteReport> {
    let violations = match name {
        "tensor" => tensor(seed, trials),
        "skeleton" => skeleton(seed, trials),
        "strict" => strict(seed, trials),
        "oracle" => oracle(seed, trials),
        "weyl" => weyl(seed, trials),
        "energy" => energy(),
        _ => return None,
    };
    Some(SuiteReport { name: name.to_string(), trials, violations })
}

/// Single-pass tensor operators against the recursive pairwise rule.
pub fn tensor(seed: u64, trials: usize) -> Vec<String> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for _ in 0..trials {
        let x = random_spin_tensor(&mut r, 1, 16);
        for i in Color::ALL {
            for d in [Dir::Raise, Dir::Lower] {
                let a = tensor_op(i, d, x.letters());
                let b = pairwise_tensor_op(i, d, x.letters());
                if a != b {
                    out.push(format!("{x} {d}{i}: single-pass {a:?} vs pairwise {b:?}"));
                }
            }
        }
    }
    out
}

/// `(n, t⃗, c⃗)` of a path.
pub fn skeleton_of(p: &Path) -> (usize, Vec<i64>, Vec<i64>) {
    (p.wall_count(), p.domain_types(), p.domain_params())
}

/// Wall count, domain types and parameters are invariant under every
/// nonzero operator along a random word.
pub fn skeleton(seed: u64, trials: usize) -> Vec<String> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for _ in 0..trials {
        let p = random_path(&mut r, 3, 9);
        let base = skeleton_of(&p);
        let mut cur = p.clone();
        for (i, d) in random_word(&mut r, 20) {
            let Some(next) = cur.apply(i, d) else { continue };
            let sk = skeleton_of(&next);
            if sk != base {
                out.push(format!("{cur} {d}{i} -> {next}: {base:?} became {sk:?}"));
            }
            cur = next;
        }
    }
    out
}

/// `ψ` is a strict morphism on random paths.
pub fn strict(seed: u64, trials: usize) -> Vec<String> {
    let mut r = rng(seed);
    let samples: Vec<Path> = (0..trials).map(|_| random_path(&mut r, 3, 9)).collect();
    check_strict(|p: &Path| psi(p).ok(), &samples)
        .iter()
        .map(|v| v.to_string())
        .collect()
}

/// Path operators against the truncated-tensor computation at two margins.
pub fn oracle(seed: u64, trials: usize) -> Vec<String> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for _ in 0..trials {
        let p = random_path(&mut r, 3, 9);
        for i in Color::ALL {
            for d in [Dir::Raise, Dir::Lower] {
                let want = p.apply(i, d);
                for margin in [4, 8] {
                    match truncated_path_op(i, d, &p, margin) {
                        Ok(got) if got == want => {}
                        got => out.push(format!("{p} {d}{i} margin {margin}: {got:?} vs {want:?}")),
                    }
                }
            }
        }
    }
    out
}

/// `S_i² = id`, `wt(S_i b) = s_i wt(b)` and `S_i ẽ_i = f̃_i S_i` on paths and spin tensors.
pub fn weyl(seed: u64, trials: usize) -> Vec<String> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for _ in 0..trials {
        let p = random_path(&mut r, 3, 9);
        let x = random_spin_tensor(&mut r, 1, 10);
        weyl_checks(&p, &mut out);
        weyl_checks(&x, &mut out);
    }
    out
}

fn weyl_checks<B: Crystal + PartialEq + fmt::Display>(b: &B, out: &mut Vec<String>) {
    for i in Color::ALL {
        let s = match weyl_s(i, b) {
            Ok(s) => s,
            Err(e) => {
                out.push(format!("{b} S{i}: {e}"));
                continue;
            }
        };
        match weyl_s(i, &s) {
            Ok(ss) if ss == *b => {}
            other => out.push(format!("{b} S{i}S{i}: {other:?}", other = other.map(|x| x.to_string()))),
        }
        if s.weight() != b.weight().reflect(i) {
            out.push(format!("{b} wt S{i}: {} vs {}", s.weight(), b.weight().reflect(i)));
        }
        if let Some(e) = b.raise(i) {
            let lhs = weyl_s(i, &e).ok();
            let rhs = s.lower(i);
            if let (Some(l), Some(r)) = (&lhs, &rhs) {
                if l != r {
                    out.push(format!("{b} S{i}e{i} = {l} but f{i}S{i} = {r}"));
                }
            }
        }
    }
}

pub fn energy() -> Vec<String> {
    let mut out = Vec::new();
    if !check_energy_axioms(6) {
        out.push("H = max(m, -n) violates the energy axioms".to_string());
    }
    if check_energy_axioms_with(3, |m, n| m.max(n)) {
        out.push("corrupted H = max(m, n) passed the energy axioms".to_string());
    }
    out
}
