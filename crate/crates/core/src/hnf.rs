//! Integer row reduction to Hermite normal form.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-style Hermite normal form `H = T·M` with `T` unimodular.
///
/// Rows `0..rank` of `H` are nonzero with strictly increasing pivot columns,
/// positive pivots, and entries above each pivot reduced into
/// `[0, pivot)`. The remaining rows are zero.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub transform: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn axpy(target: &mut [BigInt], q: &BigInt, source: &[BigInt]) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

fn sub_rows(rows: &mut [Vec<BigInt>], t: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (src, tsrc) = (rows[source].clone(), t[source].clone());
    axpy(&mut rows[target], q, &src);
    axpy(&mut t[target], q, &tsrc);
}

/// Hermite normal form of `m` (rows of equal length `ncols`).
pub fn row_echelon(m: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let nrows = m.len();
    let mut rows = m;
    let mut t: Vec<Vec<BigInt>> = (0..nrows)
        .map(|i| (0..nrows).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        loop {
            let best = (r..nrows)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            t.swap(r, best);
            let mut done = true;
            for i in r + 1..nrows {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                sub_rows(&mut rows, &mut t, i, r, &q);
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < nrows && !rows[r][col].is_zero() {
            if rows[r][col].is_negative() {
                for x in rows[r].iter_mut().chain(t[r].iter_mut()) {
                    *x = -core::mem::take(x);
                }
            }
            for i in 0..r {
                let q = rows[i][col].div_floor(&rows[r][col]);
                sub_rows(&mut rows, &mut t, i, r, &q);
            }
            pivots.push(col);
            r += 1;
        }
    }
    Echelon { rows, transform: t, pivots }
}

/// A basis of `{u ∈ ℤ^cols : M·u = 0}`, in Hermite normal form.
pub fn integer_kernel(m: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let transposed: Vec<Vec<BigInt>> = (0..ncols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect();
    let e = row_echelon(transposed, m.len());
    let rank = e.rank();
    let kernel: Vec<Vec<BigInt>> = e.transform[rank..].to_vec();
    if kernel.is_empty() {
        return kernel;
    }
    let h = row_echelon(kernel, ncols);
    h.rows[..h.rank()].to_vec()
}

/// A Hermite basis of the lattice spanned by `vectors`.
pub fn lattice_basis(vectors: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let h = row_echelon(vectors.to_vec(), ncols);
    h.rows[..h.rank()].to_vec()
}

/// Integer coordinates of `v` in a Hermite basis, if `v` lies in its span.
pub fn coordinates(basis: &[Vec<BigInt>], pivots: &[usize], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for (b, &p) in basis.iter().zip(pivots) {
        let (q, r) = rest[p].div_rem(&b[p]);
        if !r.is_zero() {
            return None;
        }
        axpy(&mut rest, &q, b);
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

pub fn pivot_columns(basis: &[Vec<BigInt>]) -> Vec<usize> {
    basis
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero basis row"))
        .collect()
}

/// An integer solution of `U·s = e`, if one exists.
pub fn solve_integer(u: &[Vec<BigInt>], ncols: usize, e: &[BigInt]) -> Option<Vec<BigInt>> {
    let nrows = u.len();
    // T·Uᵀ = H, so U·Tᵀ = Hᵀ and s = Tᵀ·y with Hᵀ·y = e.
    let transposed: Vec<Vec<BigInt>> = (0..ncols).map(|j| u.iter().map(|row| row[j].clone()).collect()).collect();
    let h = row_echelon(transposed, nrows);
    let mut y: Vec<BigInt> = Vec::with_capacity(h.rank());
    for (k, &p) in h.pivots.iter().enumerate() {
        let mut rhs = e[p].clone();
        for (kk, yk) in y.iter().enumerate() {
            rhs -= &h.rows[kk][p] * yk;
        }
        let (q, r) = rhs.div_rem(&h.rows[k][p]);
        if !r.is_zero() {
            return None;
        }
        y.push(q);
    }
    for (j, ej) in e.iter().enumerate() {
        let lhs: BigInt = y.iter().enumerate().map(|(k, yk)| &h.rows[k][j] * yk).sum();
        if &lhs != ej {
            return None;
        }
    }
    let s = (0..ncols)
        .map(|i| y.iter().enumerate().map(|(k, yk)| &h.transform[k][i] * yk).sum())
        .collect();
    Some(s)
}
