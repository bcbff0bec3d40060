//! Fixtures and brute-force reference computations shared by the
//! integration tests. Nothing here calls into the library's algorithms;
//! it only reads relations through their raw matrix accessors.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dowker::{RelMorphism, Relation};
use rand::Rng;

pub fn rel(x: &[&str], y: &[&str], rows: &[&str]) -> Relation {
    let matrix: Vec<Vec<u8>> = rows
        .iter()
        .map(|r| {
            r.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| (c == '1') as u8)
                .collect()
        })
        .collect();
    Relation::from_matrix(x, y, &matrix).unwrap()
}

fn numbers(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// The 4x20 relation whose Dowker complex is the same as r2's.
pub fn r1_wide() -> Relation {
    let y = numbers(20);
    let y: Vec<&str> = y.iter().map(String::as_str).collect();
    rel(
        &["a", "b", "c", "d"],
        &y,
        &[
            "10000011111100001111",
            "01100011100010000000",
            "00011000010011111111",
            "00000100001101111111",
        ],
    )
}

pub fn r2() -> Relation {
    rel(
        &["a", "b", "c", "d"],
        &["1", "2", "3", "4", "5", "6"],
        &["101001", "110000", "011101", "001010"],
    )
}

/// The 5x5 relation used for the morphism examples.
pub fn r_morph() -> Relation {
    rel(
        &["a", "b", "c", "d", "e"],
        &["1", "2", "3", "4", "5"],
        &["11000", "10100", "01111", "00110", "00011"],
    )
}

pub fn big_r2() -> Relation {
    rel(
        &["A", "B", "C"],
        &["1", "2", "3", "4", "5"],
        &["11000", "10100", "01111"],
    )
}

pub fn big_r3() -> Relation {
    rel(
        &["A", "B", "C"],
        &["1", "2", "3", "4", "5"],
        &["11000", "10100", "01100"],
    )
}

pub fn big_r4() -> Relation {
    rel(&["A", "B", "C"], &["1", "2", "3"], &["110", "101", "011"])
}

pub const F: [usize; 5] = [0, 1, 2, 2, 2];
pub const G: [usize; 5] = [0, 1, 2, 3, 4];
pub const G_PRIME: [usize; 5] = [0, 1, 2, 2, 2];

pub fn to_r4() -> RelMorphism {
    RelMorphism::new(r_morph(), big_r4(), F.to_vec(), G_PRIME.to_vec()).unwrap()
}

/// A uniformly random relation with the given shape and density.
pub fn random_relation<R: Rng>(rng: &mut R, nx: usize, ny: usize, p: f64) -> Relation {
    let x: Vec<String> = (0..nx).map(|i| format!("x{i}")).collect();
    let y: Vec<String> = (0..ny).map(|i| format!("y{i}")).collect();
    let m: Vec<Vec<u8>> = (0..nx)
        .map(|_| (0..ny).map(|_| rng.gen_bool(p) as u8).collect())
        .collect();
    Relation::from_matrix(&x, &y, &m).unwrap()
}

/// A random relation with no empty row and no empty column.
pub fn random_positive<R: Rng>(rng: &mut R, nx: usize, ny: usize, p: f64) -> Relation {
    loop {
        let r = random_relation(rng, nx, ny, p);
        if r.is_positive() {
            return r;
        }
    }
}

fn relation_with(x: &[String], y: &[String], pairs: &BTreeSet<(usize, usize)>) -> Relation {
    let m: Vec<Vec<u8>> = (0..x.len())
        .map(|i| {
            (0..y.len())
                .map(|j| pairs.contains(&(i, j)) as u8)
                .collect()
        })
        .collect();
    Relation::from_matrix(x, y, &m).unwrap()
}

/// Random maps `f`, `g` out of `src`, plus a random target that contains
/// the image of every related pair of every map in `maps`.
pub fn random_target<R: Rng>(
    rng: &mut R,
    src: &Relation,
    nx: usize,
    ny: usize,
    prefix: &str,
    count: usize,
) -> (Relation, Vec<Maps>) {
    let maps: Vec<Maps> = (0..count)
        .map(|_| {
            (
                (0..src.nx()).map(|_| rng.gen_range(0..nx)).collect(),
                (0..src.ny()).map(|_| rng.gen_range(0..ny)).collect(),
            )
        })
        .collect();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..nx {
        for j in 0..ny {
            if rng.gen_bool(0.3) {
                pairs.insert((i, j));
            }
        }
    }
    for (f, g) in &maps {
        for (x, y) in raw_pairs(src) {
            pairs.insert((f[x], g[y]));
        }
    }
    let xs: Vec<String> = (0..nx).map(|i| format!("{prefix}x{i}")).collect();
    let ys: Vec<String> = (0..ny).map(|i| format!("{prefix}y{i}")).collect();
    (relation_with(&xs, &ys, &pairs), maps)
}

/// Row map and column map out of a relation.
pub type Maps = (Vec<usize>, Vec<usize>);

pub fn raw_pairs(r: &Relation) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..r.nx() {
        for y in 0..r.ny() {
            if r.rows()[x][y] {
                out.push((x, y));
            }
        }
    }
    out
}

/// Bitmask of the rows related to column `y`.
fn column_mask(r: &Relation, y: usize) -> u64 {
    (0..r.nx())
        .filter(|&x| r.rows()[x][y])
        .fold(0, |m, x| m | 1 << x)
}

fn mask_labels(r: &Relation, mask: u64) -> Vec<String> {
    (0..r.nx())
        .filter(|x| mask >> x & 1 == 1)
        .map(|x| r.x_labels().label(x).to_owned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Every nonempty row subset with a common column, by exhaustive search.
pub fn oracle_dowker(r: &Relation) -> BTreeSet<Vec<String>> {
    assert!(r.nx() <= 16);
    let cols: Vec<u64> = (0..r.ny()).map(|y| column_mask(r, y)).collect();
    (1u64..1 << r.nx())
        .filter(|&s| cols.iter().any(|&c| c & s == s))
        .map(|s| mask_labels(r, s))
        .collect()
}

/// `σ -> #{y : σ ⊆ supp(y)}` over all row subsets (including ∅) in the
/// complex.
pub fn oracle_total(r: &Relation) -> BTreeMap<Vec<String>, u64> {
    let cols: Vec<u64> = (0..r.ny()).map(|y| column_mask(r, y)).collect();
    (0u64..1 << r.nx())
        .filter_map(|s| {
            let n = cols.iter().filter(|&&c| c & s == s).count() as u64;
            (s == 0 || n > 0).then(|| (mask_labels(r, s), n))
        })
        .collect()
}

/// `σ -> #{y : supp(y) = σ}` over the same keys as [`oracle_total`].
pub fn oracle_differential(r: &Relation) -> BTreeMap<Vec<String>, u64> {
    let cols: Vec<u64> = (0..r.ny()).map(|y| column_mask(r, y)).collect();
    oracle_total(r)
        .keys()
        .map(|k| {
            let mask = k
                .iter()
                .map(|l| r.x_labels().id(l).unwrap())
                .fold(0u64, |m, x| m | 1 << x);
            (
                k.clone(),
                cols.iter().filter(|&&c| c == mask).count() as u64,
            )
        })
        .collect()
}

/// Whether `(f, g)` preserves every related pair, checked pair by pair.
pub fn oracle_is_morphism(src: &Relation, tgt: &Relation, f: &[usize], g: &[usize]) -> bool {
    raw_pairs(src)
        .into_iter()
        .all(|(x, y)| tgt.rows()[f[x]][g[y]])
}

/// Rank over GF(2) by Gaussian elimination on boolean rows.
pub fn gf2_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers of a complex given as a set of nonempty label lists,
/// without trailing zeros.
pub fn oracle_betti(simplices: &BTreeSet<Vec<String>>) -> Vec<usize> {
    let top = simplices.iter().map(Vec::len).max().unwrap_or(0);
    let by_dim: Vec<Vec<&Vec<String>>> = (1..=top)
        .map(|n| simplices.iter().filter(|s| s.len() == n).collect())
        .collect();
    // rank of ∂_d : C_d -> C_{d-1} for d = 1..top-1
    let rank = |d: usize| -> usize {
        if d == 0 || d >= by_dim.len() {
            return 0;
        }
        let rows: Vec<Vec<bool>> = by_dim[d - 1]
            .iter()
            .map(|face| {
                by_dim[d]
                    .iter()
                    .map(|s| face.iter().all(|v| s.contains(v)))
                    .collect()
            })
            .collect();
        gf2_rank(rows)
    };
    let mut betti: Vec<usize> = (0..by_dim.len())
        .map(|d| by_dim[d].len() - rank(d) - rank(d + 1))
        .collect();
    while betti.last() == Some(&0) {
        betti.pop();
    }
    betti
}

/// The redundancy costalk at `σ` straight from its definition: subsets of
/// `Y_σ` witnessed by some row outside `σ`.
pub fn oracle_redundancy_costalk(r: &Relation, sigma: &[usize]) -> BTreeSet<Vec<String>> {
    let ys: Vec<usize> = (0..r.ny())
        .filter(|&y| sigma.iter().all(|&x| r.rows()[x][y]))
        .collect();
    let mut out = BTreeSet::new();
    for mask in 1u64..1 << ys.len() {
        let subset: Vec<usize> = (0..ys.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ys[i])
            .collect();
        let witnessed = (0..r.nx())
            .filter(|x| !sigma.contains(x))
            .any(|x| subset.iter().all(|&y| r.rows()[x][y]));
        if witnessed {
            let mut labels: Vec<String> = subset
                .iter()
                .map(|&y| r.y_labels().label(y).to_owned())
                .collect();
            labels.sort();
            out.insert(labels);
        }
    }
    out
}
