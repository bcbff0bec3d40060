//! Exact kernels of integer matrices.

use nalgebra::DMatrix;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form over the rationals; returns the pivot columns.
fn rref(rows: &mut [Vec<Rational64>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational64::one() / rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c];
                for (v, &p) in row.iter_mut().zip(&pivot) {
                    *v -= factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

fn to_rational(a: &DMatrix<i64>) -> Vec<Vec<Rational64>> {
    (0..a.nrows())
        .map(|i| {
            (0..a.ncols())
                .map(|j| Rational64::from_integer(a[(i, j)]))
                .collect()
        })
        .collect()
}

pub fn rank(a: &DMatrix<i64>) -> usize {
    rref(&mut to_rational(a), a.ncols()).len()
}

/// A basis of `{v : a v = 0}`, each vector scaled to primitive integers with
/// a positive leading entry. The basis is the standard one read off the
/// reduced echelon form, so it is deterministic.
pub fn kernel_basis(a: &DMatrix<i64>) -> Vec<Vec<i64>> {
    let n = a.ncols();
    let mut rows = to_rational(a);
    let pivots = rref(&mut rows, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational64::zero(); n];
            v[fc] = Rational64::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][fc];
            }
            primitive(&v)
        })
        .collect()
}

fn primitive(v: &[Rational64]) -> Vec<i64> {
    let denom = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x * denom).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -1,
        _ => 1,
    };
    ints.iter().map(|x| sign * x / g.max(1)).collect()
}
