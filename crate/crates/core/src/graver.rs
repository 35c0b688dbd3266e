//! Graver bases of lattices.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::binomial::{canonical_set, Binomial};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::lattice::{lawrence_lift, toric_from_lattice, Lattice};
use crate::monomial::VariableContext;

/// Largest coordinate bound accepted by [`graver_bruteforce`].
pub const MAX_BOX: i64 = 12;

/// The primitive (conformally minimal) vectors of a lattice, one per sign
/// pair, stored as canonical binomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraverBasis {
    ambient: usize,
    elements: Vec<Binomial>,
}

impl GraverBasis {
    pub fn from_vectors(ambient: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        let elements = vectors.iter().map(|v| Binomial::from_vector(v)).collect::<Result<Vec<_>>>()?;
        Ok(GraverBasis { ambient, elements: canonical_set(elements) })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `plus - minus` per element.
    pub fn vectors(&self) -> Vec<Vec<i64>> {
        self.elements.iter().map(Binomial::vector).collect()
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        self.elements.binary_search(b).is_ok()
    }

    /// Elements whose coordinates are all at most `bound` in absolute value.
    pub fn within_box(&self, bound: i64) -> GraverBasis {
        let elements = self
            .elements
            .iter()
            .filter(|b| b.vector().iter().all(|x| x.abs() <= bound))
            .cloned()
            .collect();
        GraverBasis { ambient: self.ambient, elements }
    }
}

/// Minimal generators of the toric ideal of the Lawrence lifting, which are
/// exactly `x^a y^b - x^b y^a` for the Graver elements `a - b`.
pub fn graver_basis(l: &Lattice, budget: &Budget) -> Result<GraverBasis> {
    let n = l.ambient();
    if l.rank() == 0 {
        return Ok(GraverBasis { ambient: n, elements: Vec::new() });
    }
    let lift = lawrence_lift(l);
    let ctx = VariableContext::lawrence(n)?;
    let j = toric_from_lattice(&lift, &ctx, budget)?;
    let vectors: Vec<Vec<i64>> = j.generators().iter().map(|g| g.vector()[..n].to_vec()).collect();
    GraverBasis::from_vectors(n, &vectors)
}

/// `u ⊑ v`: same orthant and `|u_i| ≤ |v_i|`.
pub fn conformal_le(u: &[i64], v: &[i64]) -> bool {
    u.iter().zip(v).all(|(&a, &b)| (a == 0 || (a > 0) == (b > 0)) && a.abs() <= b.abs())
}

/// Independent oracle: all primitive lattice vectors with `‖u‖∞ ≤ bound`.
/// A vector is primitive exactly when no smaller primitive vector is
/// conformal to it, and conformal predecessors never leave the box, so the
/// result is the Graver basis intersected with the box.
pub fn graver_bruteforce(l: &Lattice, bound: i64) -> Result<GraverBasis> {
    if !(0..=MAX_BOX).contains(&bound) {
        return Err(Error::BudgetExhausted { what: "box", limit: MAX_BOX as u64 });
    }
    let n = l.ambient();
    let h = l.hermite()?;
    let basis = h.basis();
    let pivots: Vec<usize> = basis.iter().map(|b| b.iter().position(|&x| x != 0).expect("nonzero row")).collect();

    let mut points = Vec::new();
    let mut partial = alloc::vec![0i64; n];
    enumerate_box(basis, &pivots, 0, bound, &mut partial, &mut points);
    points.retain(|u| u.iter().any(|&x| x != 0));
    points.sort_by_key(|u| (u.iter().map(|x| x.abs()).sum::<i64>(), u.clone()));

    let mut graver: Vec<Vec<i64>> = Vec::new();
    for u in points {
        if !graver.iter().any(|g| conformal_le(g, &u)) {
            graver.push(u);
        }
    }
    let halves: Vec<Vec<i64>> = graver
        .into_iter()
        .filter(|u| u.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        .collect();
    GraverBasis::from_vectors(n, &halves)
}

/// Points `Σ c_k b_k` in the box; the pivot of `b_k` bounds `c_k` given
/// `c_0..c_{k-1}`.
fn enumerate_box(
    basis: &[Vec<i64>],
    pivots: &[usize],
    k: usize,
    bound: i64,
    partial: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if k == basis.len() {
        if partial.iter().all(|x| x.abs() <= bound) {
            out.push(partial.clone());
        }
        return;
    }
    let p = pivots[k];
    let d = basis[k][p];
    let base = partial[p];
    // need |base + c d| ≤ bound
    let lo = div_ceil(-bound - base, d);
    let hi = div_floor(bound - base, d);
    for c in lo..=hi {
        for (x, &b) in partial.iter_mut().zip(&basis[k]) {
            *x += c * b;
        }
        enumerate_box(basis, pivots, k + 1, bound, partial, out);
        for (x, &b) in partial.iter_mut().zip(&basis[k]) {
            *x -= c * b;
        }
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}

/// Coordinates of each Graver vector in the Hermite basis of `l`.
pub fn lattice_coordinates(l: &Lattice, vectors: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let h: Vec<Vec<BigInt>> = l.hermite()?.basis().iter().map(|b| b.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let piv = crate::hnf::pivot_columns(&h);
    vectors
        .iter()
        .map(|v| {
            let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            let c = crate::hnf::coordinates(&h, &piv, &big).ok_or_else(|| Error::invalid("vector outside the lattice"))?;
            c.iter().map(|x| x.to_i64().ok_or(Error::IntegerOverflow("lattice coordinates"))).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{kernel_lattice, IntegerMatrix};
    use alloc::vec;

    fn vecs(g: &GraverBasis) -> Vec<Vec<i64>> {
        g.vectors()
    }

    #[test]
    fn small_graver_bases() {
        let b = Budget::default();
        let l = Lattice::new(2, vec![vec![1, -1]]).unwrap();
        assert_eq!(vecs(&graver_basis(&l, &b).unwrap()), vec![vec![1, -1]]);
        assert_eq!(graver_bruteforce(&l, 5).unwrap(), graver_basis(&l, &b).unwrap());
        let l = Lattice::new(3, vec![vec![1, -2, 1]]).unwrap();
        assert_eq!(graver_basis(&l, &b).unwrap().len(), 1);
        assert_eq!(graver_bruteforce(&l, 6).unwrap(), graver_basis(&l, &b).unwrap());
    }

    #[test]
    fn rational_normal_curve() {
        let b = Budget::default();
        let a = IntegerMatrix::from_rows(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]).unwrap();
        let l = kernel_lattice(&a).unwrap();
        let g = graver_basis(&l, &b).unwrap();
        assert_eq!(graver_bruteforce(&l, 6).unwrap(), g.within_box(6));
        for u in g.vectors() {
            assert!(a.mul_vec(&u).iter().all(|x| *x == BigInt::from(0)));
        }
    }

    #[test]
    fn box_limit() {
        let l = Lattice::new(2, vec![vec![1, -1]]).unwrap();
        assert!(graver_bruteforce(&l, 13).unwrap_err().is_budget());
    }

    #[test]
    fn conformality() {
        assert!(conformal_le(&[1, 0, -1], &[2, 1, -1]));
        assert!(!conformal_le(&[1, 0, -1], &[2, 1, 1]));
        assert!(!conformal_le(&[3, 0], &[2, 1]));
    }
}
