//! Integer matrices, lattices, gradings and toric ideals.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::feasibility::{strict_feasible_int, Sign};
use crate::groebner::{groebner_marked, minimal_generators, Budget};
use crate::hnf::{coordinates, integer_kernel, lattice_basis, pivot_columns};
use crate::ideal::BinomialIdeal;
use crate::monomial::{Monomial, VariableContext};
use crate::order::TermOrder;

/// A rectangular matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn new(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
        }
        Ok(IntegerMatrix { cols, rows })
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::new(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, &b)| a * BigInt::from(b)).sum())
            .collect()
    }
}

/// A strictly positive weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading(Vec<i64>);

impl Grading {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::invalid("grading weights must be positive"));
        }
        Ok(Grading(weights))
    }

    pub fn standard(n: usize) -> Self {
        Grading(alloc::vec![1; n])
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self, m: &Monomial) -> i128 {
        m.weighted_degree(&self.0)
    }
}

/// A sublattice of `ℤ^n` given by linearly independent basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    basis: Vec<Vec<i64>>,
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn to_small(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::IntegerOverflow("lattice vector"))).collect()
}

impl Lattice {
    pub fn new(ambient: usize, basis: Vec<Vec<i64>>) -> Result<Self> {
        for b in &basis {
            if b.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: b.len() });
            }
        }
        if crate::linalg::rank(&basis) != basis.len() {
            return Err(Error::invalid("lattice basis vectors are linearly dependent"));
        }
        Ok(Lattice { ambient, basis })
    }

    /// The lattice spanned by arbitrary integer vectors, in Hermite basis.
    pub fn spanned_by(ambient: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        let big: Vec<Vec<BigInt>> = vectors.iter().map(|v| to_big(v)).collect();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: v.len() });
            }
        }
        let basis = lattice_basis(&big, ambient).iter().map(|b| to_small(b)).collect::<Result<_>>()?;
        Ok(Lattice { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// The same lattice in Hermite normal form.
    pub fn hermite(&self) -> Result<Lattice> {
        Lattice::spanned_by(self.ambient, &self.basis)
    }

    /// Integer coordinates of `v` in the Hermite basis of this lattice.
    pub fn hermite_coordinates(&self, v: &[i64]) -> Result<Option<Vec<i64>>> {
        let h: Vec<Vec<BigInt>> = self.hermite()?.basis.iter().map(|b| to_big(b)).collect();
        let piv = pivot_columns(&h);
        coordinates(&h, &piv, &to_big(v)).map(|c| to_small(&c)).transpose()
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        Ok(self.hermite_coordinates(v)?.is_some())
    }

    /// Whether `ℤ^n / L` is torsion-free, i.e. `L = (L ⊗ ℚ) ∩ ℤ^n`.
    pub fn is_saturated(&self) -> Result<bool> {
        if self.basis.is_empty() {
            return Ok(true);
        }
        let big: Vec<Vec<BigInt>> = self.basis.iter().map(|b| to_big(b)).collect();
        let complement = integer_kernel(&big, self.ambient);
        let saturation = integer_kernel(&complement, self.ambient);
        let sat = if complement.is_empty() {
            // L has full rank; its saturation is ℤ^n
            (0..self.ambient).map(|i| to_big(&unit(self.ambient, i))).collect()
        } else {
            saturation
        };
        let h = self.hermite()?;
        let hb: Vec<Vec<BigInt>> = h.basis.iter().map(|b| to_big(b)).collect();
        let piv = pivot_columns(&hb);
        Ok(sat.iter().all(|v| coordinates(&hb, &piv, v).is_some()))
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = alloc::vec![0; n];
    v[i] = 1;
    v
}

/// `{u ∈ ℤ^cols : A·u = 0}`; empty when `A` has full column rank.
pub fn kernel_lattice(a: &IntegerMatrix) -> Result<Lattice> {
    let k = integer_kernel(a.rows(), a.ncols());
    let basis = k.iter().map(|b| to_small(b)).collect::<Result<Vec<_>>>()?;
    Ok(Lattice { ambient: a.ncols(), basis })
}

/// One binomial `x^{u+} - x^{u-}` per basis vector.
pub fn lattice_ideal_generators(l: &Lattice, ctx: &VariableContext) -> Result<BinomialIdeal> {
    if ctx.len() != l.ambient() {
        return Err(Error::DimensionMismatch { expected: l.ambient(), found: ctx.len() });
    }
    let gens = l.basis().iter().map(|u| Binomial::from_vector(u)).collect::<Result<Vec<_>>>()?;
    BinomialIdeal::new(ctx.clone(), gens)
}

/// A strictly positive `w` with `w·v = 0` for all `v`, preferring
/// all-ones; `None` if there is none.
pub fn positive_grading(vectors: &[Vec<i64>], n: usize) -> Result<Option<Grading>> {
    if vectors.iter().all(|v| v.iter().sum::<i64>() == 0) {
        return Ok(Some(Grading::standard(n)));
    }
    let big: Vec<Vec<BigInt>> = vectors.iter().map(|v| to_big(v)).collect();
    let complement = integer_kernel(&big, n);
    if complement.is_empty() {
        return Ok(None);
    }
    let constraints: Vec<(Vec<BigInt>, Sign)> = (0..n)
        .map(|i| (complement.iter().map(|c| c[i].clone()).collect(), Sign::Positive))
        .collect();
    let Some(y) = strict_feasible_int(complement.len(), &constraints)? else {
        return Ok(None);
    };
    let w: Vec<BigInt> = (0..n)
        .map(|i| complement.iter().zip(&y).map(|(c, yk)| &c[i] * yk).sum())
        .collect();
    let g = w.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
    let w: Vec<BigInt> = w.into_iter().map(|x| x / &g).collect();
    Ok(Some(Grading::new(to_small(&w)?)?))
}

/// The lattice spanned by the exponent vectors of an ideal's generators.
pub fn lattice_of(ideal: &BinomialIdeal) -> Result<Lattice> {
    Lattice::spanned_by(ideal.nvars(), &ideal.vectors())
}

/// `J : (x_1⋯x_n)^∞` for a homogeneous binomial ideal, one variable at a
/// time: a reduced basis in the weighted reverse lex order with `x_i`
/// cheapest has `x_i | lead ⇒ x_i | trail`, so dividing each element by its
/// `x_i`-content generates `J : x_i^∞`. Returns minimal generators.
pub fn saturate_toric(j: &BinomialIdeal, grading: &Grading, budget: &Budget) -> Result<BinomialIdeal> {
    let n = j.nvars();
    if grading.weights().len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: grading.weights().len() });
    }
    if let Some(g) = j.generators().iter().find(|g| !g.is_homogeneous(grading.weights())) {
        let _ = g;
        return Err(Error::NotHomogeneous);
    }
    if j.is_empty() {
        return Ok(j.clone());
    }
    let mut gens: Vec<Binomial> = j.generators().to_vec();
    for i in 0..n {
        if gens.iter().all(|g| g.plus().exponents()[i] == 0 && g.minus().exponents()[i] == 0) {
            continue;
        }
        let order_vars: Vec<usize> = (0..n).filter(|&k| k != i).chain(core::iter::once(i)).collect();
        let order = TermOrder::weighted_revlex(grading.weights().to_vec(), order_vars)?;
        let basis = groebner_marked(&gens, &order, budget.spairs, Some(grading.weights()), None)?;
        gens = basis
            .into_iter()
            .map(|m| {
                let k = m.lead[i].min(m.trail[i]);
                let (mut a, mut b) = (m.lead, m.trail);
                a[i] -= k;
                b[i] -= k;
                Binomial::new(Monomial::new(a), Monomial::new(b))
            })
            .collect::<Result<Vec<_>>>()?;
    }
    let sat = j.with_generators(gens)?;
    j.with_generators(minimal_generators(&sat, budget)?)
}

/// Kernel lattice, lattice-basis ideal, saturation.
pub fn toric_from_matrix(a: &IntegerMatrix, ctx: &VariableContext, budget: &Budget) -> Result<BinomialIdeal> {
    if ctx.len() != a.ncols() {
        return Err(Error::DimensionMismatch { expected: a.ncols(), found: ctx.len() });
    }
    let l = kernel_lattice(a)?;
    toric_from_lattice(&l, ctx, budget).map_err(|e| match e {
        Error::NotHomogeneous => Error::NoPositiveGrading,
        e => e,
    })
}

/// The lattice ideal `I_L` (toric when `L` is saturated).
pub fn toric_from_lattice(l: &Lattice, ctx: &VariableContext, budget: &Budget) -> Result<BinomialIdeal> {
    let grading = positive_grading(l.basis(), l.ambient())?.ok_or(Error::NotHomogeneous)?;
    let j = lattice_ideal_generators(l, ctx)?;
    saturate_toric(&j, &grading, budget)
}

/// `{(u, -u) : u ∈ L}` in `ℤ^{2n}`.
pub fn lawrence_lift(l: &Lattice) -> Lattice {
    let basis = l
        .basis()
        .iter()
        .map(|u| u.iter().copied().chain(u.iter().map(|&x| -x)).collect())
        .collect();
    Lattice { ambient: 2 * l.ambient(), basis }
}

/// A pairing `(i, j)` of all coordinates with `u_i = -u_j` on `l`, which
/// exhibits `l` as a Lawrence lifting up to renaming variables. `None` when
/// no such pairing exists.
pub fn lawrence_pairing(l: &Lattice) -> Option<Vec<(usize, usize)>> {
    let n = l.ambient();
    if n % 2 == 1 {
        return None;
    }
    let opposite = |i: usize, j: usize| l.basis().iter().all(|u| u[i] == -u[j]);
    let compatible: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| j != i && opposite(i, j)).collect()).collect();
    let mut partner = alloc::vec![usize::MAX; n];
    fn search(compatible: &[Vec<usize>], partner: &mut [usize]) -> bool {
        let Some(i) = partner.iter().position(|&p| p == usize::MAX) else { return true };
        for &j in &compatible[i] {
            if partner[j] == usize::MAX {
                partner[i] = j;
                partner[j] = i;
                if search(compatible, partner) {
                    return true;
                }
                partner[i] = usize::MAX;
                partner[j] = usize::MAX;
            }
        }
        false
    }
    search(&compatible, &mut partner).then(|| (0..n).filter(|&i| i < partner[i]).map(|i| (i, partner[i])).collect())
}
