//! Exact rank of integer matrices over the rationals.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

trait Exact: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl Exact for i64 {}
impl Exact for BigInt {}

/// Fraction-free elimination; `None` on overflow.
fn rank_generic<T: Exact>(mut rows: Vec<Vec<T>>) -> Option<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            let f = rows[i][col].clone();
            if f.is_zero() {
                continue;
            }
            let mut g = T::zero();
            for j in col..ncols {
                let v = rows[i][j].checked_mul(&pivot)?.checked_sub(&f.checked_mul(&rows[rank][j])?)?;
                g = g.gcd(&v);
                rows[i][j] = v;
            }
            if !g.is_zero() && g != T::one() {
                for x in rows[i][col..].iter_mut() {
                    *x = x.div_floor(&g);
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Rank over ℚ of a matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    if let Some(r) = rank_generic(rows.to_vec()) {
        return r;
    }
    let big = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    rank_generic::<BigInt>(big).expect("arbitrary precision does not overflow")
}

/// Rank over ℚ of a sparse matrix (rows of `(column, value)`, no zeros).
///
/// Pivots on `±1` entries first, choosing short rows and columns, which
/// keeps boundary matrices of simplicial complexes sparse and integral; the
/// part without unit entries goes to the dense routine.
pub fn rank_sparse(rows: &[Vec<(usize, i64)>], ncols: usize) -> usize {
    unit_elimination(rows, ncols).unwrap_or_else(|| {
        let dense: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| {
                let mut d = alloc::vec![0; ncols];
                for &(c, v) in r {
                    d[c] = v;
                }
                d
            })
            .collect();
        rank(&dense)
    })
}

fn unit_elimination(rows: &[Vec<(usize, i64)>], ncols: usize) -> Option<usize> {
    let mut rows: Vec<Option<Vec<(usize, i64)>>> =
        rows.iter().filter(|r| !r.is_empty()).map(|r| Some(r.clone())).collect();
    let mut col_count = alloc::vec![0usize; ncols];
    for r in rows.iter().flatten() {
        for &(c, _) in r {
            col_count[c] += 1;
        }
    }
    let mut rank = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            let Some(r) = r else { continue };
            for &(c, v) in r {
                if v.abs() == 1 {
                    let cost = (r.len() - 1) * (col_count[c] - 1);
                    if best.is_none_or(|(_, _, b)| cost < b) {
                        best = Some((i, c, cost));
                    }
                }
            }
        }
        let Some((pi, pc, _)) = best else { break };
        let pivot = rows[pi].take().expect("live row");
        for &(c, _) in &pivot {
            col_count[c] -= 1;
        }
        let p = pivot.iter().find(|&&(c, _)| c == pc).expect("pivot entry").1;
        rank += 1;
        for slot in rows.iter_mut() {
            let Some(r) = slot else { continue };
            let Some(&(_, a)) = r.iter().find(|&&(c, _)| c == pc) else { continue };
            // r -= (a / p) * pivot, exact because p = ±1
            let f = a.checked_mul(p)?;
            let mut out = Vec::with_capacity(r.len() + pivot.len());
            let (mut x, mut y) = (0, 0);
            while x < r.len() || y < pivot.len() {
                let take_r = y == pivot.len() || (x < r.len() && r[x].0 < pivot[y].0);
                let take_p = x == r.len() || (y < pivot.len() && pivot[y].0 < r[x].0);
                if take_r {
                    out.push(r[x]);
                    x += 1;
                } else if take_p {
                    let v = f.checked_mul(pivot[y].1)?.checked_neg()?;
                    col_count[pivot[y].0] += 1;
                    out.push((pivot[y].0, v));
                    y += 1;
                } else {
                    let v = r[x].1.checked_sub(f.checked_mul(pivot[y].1)?)?;
                    if v == 0 {
                        col_count[r[x].0] -= 1;
                    } else {
                        out.push((r[x].0, v));
                    }
                    x += 1;
                    y += 1;
                }
            }
            if out.is_empty() {
                *slot = None;
            } else {
                *r = out;
            }
        }
    }
    let rest: Vec<Vec<i64>> = rows
        .into_iter()
        .flatten()
        .map(|r| {
            let mut d = alloc::vec![0; ncols];
            for (c, v) in r {
                d[c] = v;
            }
            d
        })
        .collect();
    Some(rank + if rest.is_empty() { 0 } else { self::rank(&rest) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, -1]]), 2);
        assert_eq!(rank(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]), 3);
    }

    #[test]
    fn sparse_agrees_with_dense() {
        let dense = vec![vec![1, 1, 0, 0], vec![0, 1, -1, 0], vec![1, 0, 1, 0], vec![2, 0, 0, 3], vec![0, 0, 0, 6]];
        let sparse: Vec<Vec<(usize, i64)>> = dense
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
            .collect();
        assert_eq!(rank_sparse(&sparse, 4), rank(&dense));
        assert_eq!(rank(&dense), 4);
    }

    proptest::proptest! {
        #[test]
        fn sparse_rank_matches(m in proptest::collection::vec(proptest::collection::vec(-2i64..3, 5), 0..7)) {
            let sparse: Vec<Vec<(usize, i64)>> = m
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
                .collect();
            proptest::prop_assert_eq!(rank_sparse(&sparse, 5), rank(&m));
        }
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 3;
        let m = vec![vec![big, 1, 7], vec![3, big, 5], vec![11, 13, big]];
        assert_eq!(rank(&m), 3);
    }
}
