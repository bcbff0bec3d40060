mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use dowker::weights::reconstruct_from_total_with;
use dowker::*;

fn relation(max_x: usize, max_y: usize) -> impl Strategy<Value = Relation> {
    (0..=max_x, 0..=max_y).prop_flat_map(|(nx, ny)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), ny), nx).prop_map(move |rows| {
            let x: Vec<String> = (0..nx).map(|i| format!("x{i}")).collect();
            let y: Vec<String> = (0..ny).map(|i| format!("y{i}")).collect();
            let m: Vec<Vec<u8>> = rows
                .iter()
                .map(|r| r.iter().map(|&b| b as u8).collect())
                .collect();
            Relation::from_matrix(&x, &y, &m).unwrap()
        })
    })
}

/// Morphisms are sampled from a seed so that targets can be built around
/// the maps; shrinking only reaches the seed.
fn morphism_pair(seed: u64) -> (RelMorphism, RelMorphism) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (x1, y1) = (rng.gen_range(0..=4), rng.gen_range(0..=5));
    let r1 = random_relation(&mut rng, x1, y1, 0.5);
    let (x2, y2) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let (r2, maps) = random_target(&mut rng, &r1, x2, y2, "m", 1);
    let (f1, g1) = maps.into_iter().next().unwrap();
    let (x3, y3) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let (r3, maps) = random_target(&mut rng, &r2, x3, y3, "n", 1);
    let (f2, g2) = maps.into_iter().next().unwrap();
    (
        RelMorphism::new(r1, r2.clone(), f1, g1).unwrap(),
        RelMorphism::new(r2, r3, f2, g2).unwrap(),
    )
}

proptest! {
    #[test]
    fn transpose_is_an_involution(r in relation(6, 6)) {
        prop_assert_eq!(r.transpose().transpose(), r.clone());
        prop_assert_eq!(r.transpose().is_positive(), r.is_positive());
    }

    #[test]
    fn y_sigma_reverses_inclusion(r in relation(5, 6)) {
        let k = dowker(&r);
        let p = face_poset(&k);
        for &(lo, hi) in p.covers() {
            let big = y_sigma(&r, p.element(lo)).unwrap();
            let small = y_sigma(&r, p.element(hi)).unwrap();
            prop_assert!(small.is_subset(&big));
            prop_assert!(!small.is_empty());
        }
    }

    #[test]
    fn total_weight_sums_differential_over_cofaces(r in relation(5, 7)) {
        let t = total_weight(&r);
        let d = differential_weight(&r);
        prop_assert!(t.is_filtration());
        prop_assert_eq!(d.sum(), r.ny() as u64);
        for s in t.values().keys() {
            let above: u64 = d.values().iter().filter(|(c, _)| s.is_face_of(c)).map(|(_, &v)| v).sum();
            prop_assert_eq!(t.get(s), above);
        }
    }

    #[test]
    fn differential_weight_is_costalk_minus_coface_union(r in relation(5, 7)) {
        let d = differential_weight(&r);
        let k = dowker(&r);
        for s in std::iter::once(Simplex::empty()).chain(k.simplices().iter().cloned()) {
            let own = y_sigma(&r, &s).unwrap();
            let mut union = BTreeSet::new();
            for x in 0..r.nx() {
                if !s.contains(x) {
                    union.extend(y_sigma(&r, &s.with(x)).unwrap());
                }
            }
            prop_assert_eq!(d.get(&s), (own.len() - union.len()) as u64);
        }
    }

    #[test]
    fn reconstructions_round_trip(r in relation(5, 7)) {
        let t = reconstruct_from_total(&total_weight(&r)).unwrap();
        prop_assert!(t.equivalent_up_to_columns(&r));
        let d = reconstruct_from_differential(&differential_weight(&r));
        prop_assert!(d.equivalent_up_to_columns(&r));
    }

    #[test]
    fn peeling_order_does_not_matter(r in relation(5, 7), picks in prop::collection::vec(any::<usize>(), 32)) {
        let mut it = picks.into_iter().cycle();
        let out = reconstruct_from_total_with(&total_weight(&r), |eligible| it.next().unwrap() % eligible.len())
            .unwrap();
        prop_assert!(out.equivalent_up_to_columns(&r));
    }

    #[test]
    fn sheaf_representation_is_contravariant(seed in any::<u64>()) {
        let (m1, m2) = morphism_pair(seed);
        let m21 = m2.compose(&m1).unwrap();
        let composed = induced_sheaf_morphism0(&m1).compose(&induced_sheaf_morphism0(&m2)).unwrap();
        prop_assert_eq!(induced_sheaf_morphism0(&m21), composed);
        let id = RelMorphism::identity(m1.source());
        prop_assert_eq!(induced_sheaf_morphism0(&id), SheafMorphism::identity(&shv_rep0(m1.source())));
    }

    #[test]
    fn dual_of_induced_is_induced_on_transpose(seed in any::<u64>()) {
        let (m, _) = morphism_pair(seed);
        let dual = induced_complex_cosheaf_morphism(&m).dual().unwrap();
        prop_assert_eq!(dual, induced_complex_cosheaf_morphism(&m.transpose()));
    }

    #[test]
    fn cosection_map_follows_g(seed in any::<u64>()) {
        let (m, _) = morphism_pair(seed);
        let c = induced_cosheaf_morphism0(&m);
        let (src, tgt) = (global_cosections(c.source()), global_cosections(c.target()));
        let map = c.cosection_map().unwrap();
        prop_assert_eq!(map.len(), src.len());
        for (class, &image) in map.iter().enumerate() {
            let (i, y) = src.representative(class);
            prop_assert_eq!(tgt.class_of(c.base_map()[i], m.g()[y]), Some(image));
        }
    }

    #[test]
    fn euler_characteristic_from_betti(r in relation(6, 6)) {
        let k = dowker(&r);
        prop_assert_eq!(betti(&k).euler_characteristic(), k.euler_characteristic());
    }

    #[test]
    fn sheaf_sections_count_nonzero_columns(r in relation(5, 6)) {
        let nonzero = (0..r.ny()).filter(|&y| !r.column_support(y).is_empty()).count();
        prop_assert_eq!(sheaf_global_sections(&shv_rep0(&r)).dimension(), nonzero);
    }

    #[test]
    fn redundancy_costalks_sit_inside_full_costalks(r in relation(5, 6)) {
        let s = redundancy_cosheaf(&r);
        let full = coshv_rep(&r);
        let k = dowker(&r);
        for (i, sigma) in s.base().elements().iter().enumerate() {
            prop_assert!(s.costalk(i).is_subcomplex_of(full.costalk(i)));
            if k.maximal().contains(sigma) {
                prop_assert!(s.costalk(i).is_empty());
            }
        }
    }
}

#[test]
fn weights_are_not_natural() {
    // Merging two columns shrinks a weight; adding a column grows one.
    let two = rel(&["a"], &["1", "2"], &["11"]);
    let one = rel(&["a"], &["1"], &["1"]);
    let merge = RelMorphism::new(two.clone(), one.clone(), vec![0], vec![0, 0]).unwrap();
    let a = Simplex::vertex(0);
    assert!(total_weight(merge.source()).get(&a) > total_weight(merge.target()).get(&a));
    let grow = RelMorphism::new(one.clone(), two.clone(), vec![0], vec![0]).unwrap();
    assert!(total_weight(grow.source()).get(&a) < total_weight(grow.target()).get(&a));
    // Both induce the identity on Dowker complexes.
    assert_eq!(
        induced_simplicial_map(&merge).vertex_map(),
        induced_simplicial_map(&grow).vertex_map()
    );
}
