mod common;

use common::{affine_seeds, ball, configs, extremal, families};
use sl2_crystal::crystal::{is_extremal_bounded, weyl_s, Crystal, Dir};
use sl2_crystal::elementary::Sign::{self, Minus as M, Plus as P};
use sl2_crystal::error::CrystalError;
use sl2_crystal::morphism::{check_strict_affine, component_index, psi, psi_hat};
use sl2_crystal::path::{construct_extremal, Path};
use sl2_crystal::sampling::{random_path, random_word, rng};
use sl2_crystal::weights::Color;

fn params_for(n: usize, salt: usize) -> Vec<i64> {
    (0..n.saturating_sub(1)).map(|j| ((j + salt) % 3) as i64).collect()
}

#[test]
fn weyl_table_on_extremals() {
    for (m, n, t) in families(4, 6) {
        for salt in 0..2 {
            let c = params_for(n, salt);
            for l in -3..=3 {
                let plus = extremal(m, n, &t, &c, P, l);
                let minus = extremal(m, n, &t, &c, M, l);
                assert_eq!(weyl_s(Color::One, &minus).unwrap(), extremal(m, n, &t, &c, P, l - 1));
                assert_eq!(weyl_s(Color::Zero, &plus).unwrap(), minus);
                assert_eq!(weyl_s(Color::One, &plus).unwrap(), extremal(m, n, &t, &c, M, l + 1));
                assert_eq!(weyl_s(Color::Zero, &minus).unwrap(), plus);
            }
        }
    }
}

#[test]
fn powers_of_lowering_operators() {
    for (m, n, t) in families(3, 6) {
        let c = params_for(n, 1);
        for l in -2..=2 {
            let plus = extremal(m, n, &t, &c, P, l);
            let minus = extremal(m, n, &t, &c, M, l);
            let word1 = vec![(Color::One, Dir::Lower); n];
            let word0 = vec![(Color::Zero, Dir::Lower); n];
            assert_eq!(minus.apply_word(&word1), Some(extremal(m, n, &t, &c, P, l - 1)));
            assert_eq!(plus.apply_word(&word0), Some(minus.clone()));
        }
    }
}

#[test]
fn degree_gaps_between_depths() {
    for (m, n, t) in families(3, 6) {
        let c = params_for(n, 0);
        for sign in [P, M] {
            let base = extremal(m, n, &t, &c, sign, 0).degree();
            for l in -3..=3 {
                assert_eq!(extremal(m, n, &t, &c, sign, l).degree() - base, l * n as i64);
            }
        }
    }
}

#[test]
fn construct_classify_round_trip() {
    for (m, n, t) in families(4, 6) {
        for salt in 0..3 {
            let c = params_for(n, salt);
            for sign in [P, M] {
                let p0 = extremal(m, n, &t, &c, sign, 0);
                for l in [-2, 0, 3] {
                    let p = extremal(m, n, &t, &c, sign, l);
                    let k = p.classify();
                    assert_eq!((k.m, k.n, &k.types, &k.params), (m, n, &t, &c));
                    assert_eq!(k.walls, vec![sign; n]);
                    assert_eq!(k.depth - p0.classify().depth, l);
                    assert_eq!(p.is_extremal_char(), Ok(true));
                }
            }
        }
    }
}

#[test]
fn extremal_construction_nonempty_exactly_on_parity() {
    for m in -4i64..=4 {
        for n in 0..=8usize {
            let ok_parity = n as i64 >= m.abs() && (n as i64 - m.abs()) % 2 == 0;
            let cs = configs(m, n);
            assert_eq!(!cs.is_empty(), ok_parity, "m={m} n={n}");
            for t in cs {
                assert!(construct_extremal(m, 0, n, &t, &vec![0; n.saturating_sub(1)], P, 0).is_ok());
            }
            if !ok_parity {
                let t = vec![0; n.saturating_sub(1)];
                assert!(matches!(
                    construct_extremal(m, 0, n, &t, &t, P, 0),
                    Err(CrystalError::InvalidConfig(_))
                ));
            }
        }
    }
}

#[test]
fn operators_move_one_wall_left() {
    let mut r = rng(11);
    for _ in 0..2000 {
        let p = random_path(&mut r, 3, 9);
        for i in Color::ALL {
            let Some(q) = p.apply(i, Dir::Lower) else { continue };
            let a: Vec<(i64, Sign)> = p.walls().iter().map(|w| (w.position, w.sign)).collect();
            let b: Vec<(i64, Sign)> = q.walls().iter().map(|w| (w.position, w.sign)).collect();
            assert_eq!(a.len(), b.len());
            let changed: Vec<usize> = (0..a.len()).filter(|&j| a[j] != b[j]).collect();
            assert_eq!(changed.len(), 1, "{p} -> {q}");
            let j = changed[0];
            assert_eq!(b[j].0, a[j].0 - 1);
            assert_ne!(b[j].1, a[j].1);
            let da: Vec<Option<i64>> = p.domains().iter().map(|d| d.length).collect();
            let db: Vec<Option<i64>> = q.domains().iter().map(|d| d.length).collect();
            if j >= 1 {
                assert_eq!(db[j], da[j].map(|x| x - 1));
            }
            if j + 1 < a.len() {
                assert_eq!(db[j + 1], da[j + 1].map(|x| x + 1));
            }
        }
    }
}

#[test]
fn characterization_agrees_with_bounded_search() {
    let mut r = rng(5);
    for _ in 0..1500 {
        let p = random_path(&mut r, 3, 7);
        let by_char = p.is_extremal_char().unwrap();
        let depth = 2 * p.wall_count().max(1);
        assert_eq!(by_char, is_extremal_bounded(&p, depth), "{p}");
    }
}

#[test]
fn psi_hat_is_strict_on_random_walks() {
    let mut r = rng(3);
    let mut samples = Vec::new();
    for _ in 0..500 {
        let p = random_path(&mut r, 3, 9);
        samples.push(p.apply_word(&random_word(&mut r, 6)).unwrap_or(p));
    }
    let v = check_strict_affine(|p: &Path| psi_hat(p).ok(), &samples);
    assert!(v.is_empty(), "{}", v[0]);
}

#[test]
fn components_have_distinct_extremal_weights() {
    for (m, n, t, c) in affine_seeds() {
        let mut weights = std::collections::HashSet::new();
        for l in -3..=3 {
            for sign in [P, M] {
                assert!(weights.insert(extremal(m, n, &t, &c, sign, l).affine_weight()));
            }
        }
    }
}

#[test]
fn component_index_constant_on_path_components() {
    for (m, n, t, c) in affine_seeds() {
        let seed = extremal(m, n, &t, &c, P, 0);
        let want = component_index(&psi_hat(&seed).unwrap()).unwrap();
        for p in ball(&seed, 8) {
            assert_eq!(component_index(&psi_hat(&p).unwrap()).unwrap(), want);
        }
    }
}

#[test]
fn wall_free_paths_are_isolated() {
    let z = Path::ground(0, 2);
    assert_eq!(psi(&z), Err(CrystalError::EmptySpin));
    for i in Color::ALL {
        assert_eq!(z.apply(i, Dir::Raise), None);
        assert_eq!(z.apply(i, Dir::Lower), None);
        assert_eq!(z.epsilon(i).finite(), Some(0));
    }
}
