//! Simplicial homology with GF(2) coefficients.

use std::collections::BTreeMap;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A dense GF(2) matrix stored as bit-packed columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    nrows: usize,
    columns: Vec<Vec<u64>>,
}

impl Gf2Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            columns: vec![vec![0; nrows.div_ceil(64)]; ncols],
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.columns[j][i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.columns[j][i / 64] |= 1 << (i % 64);
    }

    /// Column reduction by lowest set bit.
    pub fn rank(&self) -> usize {
        let mut cols = self.columns.clone();
        let low = |c: &[u64]| {
            c.iter()
                .enumerate()
                .rev()
                .find(|(_, w)| **w != 0)
                .map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
        };
        let mut pivot_of: BTreeMap<usize, usize> = BTreeMap::new();
        let mut rank = 0;
        for j in 0..cols.len() {
            while let Some(l) = low(&cols[j]) {
                match pivot_of.get(&l) {
                    Some(&p) => {
                        let (head, tail) = cols.split_at_mut(j);
                        for (a, b) in tail[0].iter_mut().zip(&head[p]) {
                            *a ^= b;
                        }
                    }
                    None => {
                        pivot_of.insert(l, j);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

/// `∂_dim`: rows are the `(dim-1)`-simplices and columns the `dim`-simplices,
/// both in canonical order. `∂_0` has no rows.
pub fn boundary_matrix(k: &SimplicialComplex, dim: usize) -> Result<Gf2Matrix> {
    let max = k.dimension();
    if dim as isize > max {
        return Err(Error::DimensionOutOfRange { dim, max });
    }
    let cols = k.simplices_of_dim(dim);
    if dim == 0 {
        return Ok(Gf2Matrix::zeros(0, cols.len()));
    }
    let rows: BTreeMap<&Simplex, usize> = k
        .simplices_of_dim(dim - 1)
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut m = Gf2Matrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for &v in s.vertices() {
            m.set(rows[&s.without(v)], j);
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    /// Equal homology: the vectors agree once trailing zeros are dropped.
    pub fn same_homology(&self, other: &BettiVector) -> bool {
        fn trimmed(v: &[usize]) -> &[usize] {
            let end = v.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
            &v[..end]
        }
        trimmed(&self.0) == trimmed(&other.0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

pub fn betti(k: &SimplicialComplex) -> BettiVector {
    let Ok(top) = usize::try_from(k.dimension()) else {
        return BettiVector(vec![]);
    };
    let ranks: Vec<usize> = (0..=top)
        .map(|d| boundary_matrix(k, d).expect("in range").rank())
        .chain([0])
        .collect();
    BettiVector(
        (0..=top)
            .map(|d| k.simplices_of_dim(d).len() - ranks[d] - ranks[d + 1])
            .collect(),
    )
}
