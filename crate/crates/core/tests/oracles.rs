//! The library against exhaustive reference computations on seeded random
//! relations.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use dowker::*;

fn sample(seed: u64, count: usize, max_x: usize, max_y: usize) -> Vec<Relation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (nx, ny) = (rng.gen_range(0..=max_x), rng.gen_range(0..=max_y));
            let p = rng.gen_range(0.1..0.8);
            random_relation(&mut rng, nx, ny, p)
        })
        .collect()
}

fn sorted_labels(s: &Simplex, labels: &LabelSet) -> Vec<String> {
    let mut l = s.label_vec(labels);
    l.sort();
    l
}

#[test]
fn dowker_matches_subset_enumeration() {
    for r in sample(1, 300, 7, 7) {
        assert_eq!(dowker(&r).labelled_simplices(), oracle_dowker(&r), "{r:?}");
    }
}

#[test]
fn weights_match_column_counts() {
    for r in sample(2, 200, 6, 8) {
        let t = total_weight(&r);
        let d = differential_weight(&r);
        let t_got: Vec<_> = t
            .values()
            .iter()
            .map(|(s, &v)| (sorted_labels(s, r.x_labels()), v))
            .collect();
        let d_got: Vec<_> = d
            .values()
            .iter()
            .map(|(s, &v)| (sorted_labels(s, r.x_labels()), v))
            .collect();
        assert_eq!(
            t_got.into_iter().collect::<BTreeMap<_, _>>(),
            oracle_total(&r)
        );
        assert_eq!(
            d_got.into_iter().collect::<BTreeMap<_, _>>(),
            oracle_differential(&r)
        );
        assert_eq!(d.sum(), r.ny() as u64);
    }
}

#[test]
fn morphism_check_matches_pairwise_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut accepted = 0;
    for _ in 0..400 {
        let (nx, ny) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let src = random_relation(&mut rng, nx, 4, 0.4);
        let tgt = random_relation(&mut rng, 3, ny, 0.6);
        let f: Vec<usize> = (0..src.nx()).map(|_| rng.gen_range(0..tgt.nx())).collect();
        let g: Vec<usize> = (0..src.ny()).map(|_| rng.gen_range(0..tgt.ny())).collect();
        let expected = oracle_is_morphism(&src, &tgt, &f, &g);
        match RelMorphism::new(src.clone(), tgt.clone(), f.clone(), g.clone()) {
            Ok(_) => {
                assert!(expected);
                accepted += 1;
            }
            Err(Error::MorphismViolation(ws)) => {
                assert!(!expected);
                let bad = raw_pairs(&src)
                    .into_iter()
                    .filter(|&(x, y)| !tgt.get(f[x], g[y]))
                    .count();
                assert_eq!(ws.len(), bad);
            }
            Err(e) => panic!("{e}"),
        }
    }
    assert!(accepted > 20, "too few valid samples: {accepted}");
}

#[test]
fn face_poset_covers_are_one_vertex_extensions() {
    for r in sample(4, 100, 6, 6) {
        let p = face_poset(&dowker(&r));
        let got: BTreeSet<(Simplex, Simplex)> = p
            .covers()
            .iter()
            .map(|&(a, b)| (p.element(a).clone(), p.element(b).clone()))
            .collect();
        let els = p.elements();
        let expected: BTreeSet<(Simplex, Simplex)> = els
            .iter()
            .flat_map(|a| els.iter().map(move |b| (a, b)))
            .filter(|(a, b)| b.len() == a.len() + 1 && a.is_face_of(b))
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect();
        assert_eq!(got, expected);
    }
}

#[test]
fn betti_matches_dense_elimination() {
    for r in sample(5, 200, 7, 7) {
        let mut b = betti(&dowker(&r)).0;
        while b.last() == Some(&0) {
            b.pop();
        }
        assert_eq!(b, oracle_betti(&oracle_dowker(&r)), "{r:?}");
    }
}

#[test]
fn redundancy_costalks_match_definition() {
    for r in sample(6, 150, 6, 6) {
        let c = redundancy_cosheaf(&r);
        for (i, s) in c.base().elements().iter().enumerate() {
            assert_eq!(
                c.costalk(i).labelled_simplices(),
                oracle_redundancy_costalk(&r, s.vertices()),
                "{r:?} at {s:?}"
            );
        }
    }
}

#[test]
fn cosections_count_nonzero_columns() {
    for r in sample(7, 150, 6, 7) {
        let nonzero = (0..r.ny())
            .filter(|&y| (0..r.nx()).any(|x| r.get(x, y)))
            .count();
        assert_eq!(global_cosections(&coshv_rep0(&r)).len(), nonzero);
        // Each section of the sheaf is free on exactly one such column.
        assert_eq!(sheaf_global_sections(&shv_rep0(&r)).dimension(), nonzero);
    }
}

#[test]
fn r2_reference_values() {
    let r = r2();
    assert_eq!(oracle_dowker(&r).len(), 10);
    assert_eq!(oracle_betti(&oracle_dowker(&r)), vec![1, 1]);
    assert_eq!(oracle_betti(&oracle_dowker(&r.transpose())), vec![1, 1]);
    assert_eq!(global_cosections(&coshv_rep0(&r)).len(), 6);
}
