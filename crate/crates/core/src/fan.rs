//! Enumeration of all reduced Gröbner bases of a homogeneous binomial ideal.
//!
//! Weights only matter through their pairing with the lattice `L` spanned by
//! the generators, so all polyhedral work happens in coordinates `z ∈ ℚ^r`
//! with `z_k = w·b_k` for a Hermite basis `b_1..b_r` of `L`. A vector
//! `v = Σ t_k b_k ∈ L` then pairs as `w·v = t·z`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::MonomialIdeal;
use crate::binomial::{canonical_set, Binomial};
use crate::error::{Error, Result};
use crate::feasibility::{primitive, strict_feasible_int, Sign};
use crate::groebner::{buchberger_reduced, Budget, GroebnerBasis};
use crate::hnf::{coordinates, lattice_basis, pivot_columns};
use crate::ideal::BinomialIdeal;
use crate::order::{shift_positive, TermOrder};

/// Largest number of variables for [`lex_orders_sweep`].
pub const MAX_LEX_VARIABLES: usize = 8;

/// Upper end of the uniform range for sampled weights.
pub const SAMPLE_WEIGHT_RANGE: i64 = 1000;

/// A full-dimensional cell of a central arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCell {
    pub signs: Vec<Sign>,
    /// Integer weight strictly realising `signs`.
    pub witness: Vec<BigInt>,
}

impl SignCell {
    /// Re-checks every sign by exact dot products.
    pub fn certify(&self, vectors: &[Vec<i64>]) -> bool {
        self.signs.len() == vectors.len()
            && vectors.iter().zip(&self.signs).all(|(v, &s)| Sign::of(&dot_i64(&self.witness, v)) == Some(s))
    }
}

fn dot_i64(w: &[BigInt], v: &[i64]) -> BigInt {
    w.iter().zip(v).map(|(a, &b)| a * BigInt::from(b)).sum()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Coordinates with respect to a Hermite basis of a lattice, and the way
/// back from `z` to an ambient weight.
struct Frame {
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    ambient: usize,
}

impl Frame {
    fn new(ambient: usize, vectors: &[Vec<i64>]) -> Frame {
        let big: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let basis = lattice_basis(&big, ambient);
        let pivots = pivot_columns(&basis);
        Frame { basis, pivots, ambient }
    }

    fn rank(&self) -> usize {
        self.basis.len()
    }

    fn coords(&self, v: &[i64]) -> Result<Vec<BigInt>> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        coordinates(&self.basis, &self.pivots, &big).ok_or_else(|| Error::invalid("vector outside the lattice"))
    }

    /// A primitive integer `w` with `B·w` a positive multiple of `z`.
    fn ambient_weight(&self, z: &[BigInt]) -> Vec<BigInt> {
        let mut w = alloc::vec![BigRational::zero(); self.ambient];
        for k in (0..self.rank()).rev() {
            let p = self.pivots[k];
            let mut rhs = BigRational::from_integer(z[k].clone());
            for j in p + 1..self.ambient {
                if !self.basis[k][j].is_zero() {
                    rhs -= BigRational::from_integer(self.basis[k][j].clone()) * &w[j];
                }
            }
            w[p] = rhs / BigRational::from_integer(self.basis[k][p].clone());
        }
        primitive(&w)
    }
}

/// All full-dimensional cells of the arrangement `{v·w = 0}`, one per pair
/// `±σ` (the first vector is always positive), by depth-first search over
/// sign prefixes. A child that agrees with its parent's witness inherits it;
/// only the opposite sign calls the feasibility oracle.
pub fn enumerate_cells(vectors: &[Vec<i64>], budget: &Budget) -> Result<Vec<SignCell>> {
    let Some(n) = vectors.first().map(Vec::len) else {
        return Ok(Vec::new());
    };
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
        if v.iter().all(|&x| x == 0) {
            return Err(Error::invalid("zero vector in arrangement"));
        }
    }
    let frame = Frame::new(n, vectors);
    let r = frame.rank();
    let coords: Vec<Vec<BigInt>> = vectors.iter().map(|v| frame.coords(v)).collect::<Result<_>>()?;

    let mut cells = Vec::new();
    // (constraints so far, witness)
    let first = alloc::vec![(coords[0].clone(), Sign::Positive)];
    let z0 = strict_feasible_int(r, &first)?.expect("a nonzero vector has a positive side");
    let mut stack = alloc::vec![(first, z0)];
    while let Some((cons, z)) = stack.pop() {
        let k = cons.len();
        if k == vectors.len() {
            if cells.len() as u64 >= budget.cells {
                return Err(Error::BudgetExhausted { what: "cell", limit: budget.cells });
            }
            let signs = cons.iter().map(|c| c.1).collect();
            let cell = SignCell { signs, witness: frame.ambient_weight(&z) };
            debug_assert!(cell.certify(vectors));
            cells.push(cell);
            continue;
        }
        let t = &coords[k];
        let d = dot(t, &z);
        let mut children = Vec::with_capacity(2);
        for s in [Sign::Negative, Sign::Positive] {
            let mut c = cons.clone();
            c.push((t.clone(), s));
            if Sign::of(&d) == Some(s) {
                children.push((c, z.clone()));
            } else if let Some(z2) = strict_feasible_int(r, &c)? {
                children.push((c, z2));
            }
        }
        stack.extend(children);
    }
    Ok(cells)
}

/// Reduced Gröbner bases found by an enumeration, one per initial ideal.
#[derive(Debug, Clone)]
pub struct FanEnumeration {
    bases: Vec<GroebnerBasis>,
    witnesses: Vec<Vec<i64>>,
    /// Regions, cells, orders or samples visited.
    pub visited: usize,
    /// `false` for sampling.
    pub exhaustive: bool,
}

impl FanEnumeration {
    fn from_map(map: BTreeMap<MonomialIdeal, (GroebnerBasis, Vec<i64>)>, visited: usize, exhaustive: bool) -> Self {
        let (bases, witnesses) = map.into_values().unzip();
        FanEnumeration { bases, witnesses, visited, exhaustive }
    }

    /// One reduced basis per Gröbner cone, sorted by initial ideal.
    pub fn bases(&self) -> &[GroebnerBasis] {
        &self.bases
    }

    /// A positive integer weight in the open cone of each basis.
    pub fn witnesses(&self) -> &[Vec<i64>] {
        &self.witnesses
    }

    /// Distinct reduced bases as sets of binomials, sorted.
    pub fn reduced_gbs(&self) -> Vec<Vec<Binomial>> {
        let mut sets: Vec<Vec<Binomial>> = self.bases.iter().map(|g| g.elements().to_vec()).collect();
        sets.sort();
        sets.dedup();
        sets
    }

    /// Union of all reduced bases.
    pub fn universal_gb(&self) -> Vec<Binomial> {
        canonical_set(self.bases.iter().flat_map(|g| g.elements().iter().cloned()))
    }

    pub fn initial_ideals(&self) -> Vec<MonomialIdeal> {
        self.bases.iter().map(GroebnerBasis::initial_ideal).collect()
    }
}

/// Finds the reduced basis at a weight, reusing a known basis when the
/// weight lies in its open cone.
struct BasisCache<'a> {
    ideal: &'a BinomialIdeal,
    budget: &'a Budget,
    found: Vec<GroebnerBasis>,
}

impl<'a> BasisCache<'a> {
    fn new(ideal: &'a BinomialIdeal, budget: &'a Budget) -> Self {
        BasisCache { ideal, budget, found: Vec::new() }
    }

    fn at_weight(&mut self, w: &[i64]) -> Result<GroebnerBasis> {
        if let Some(g) = self.found.iter().find(|g| g.cone_contains(w)) {
            return Ok(g.clone());
        }
        let n = self.ideal.nvars();
        let order = TermOrder::weight(w.to_vec(), TermOrder::grevlex(n))?;
        let g = buchberger_reduced(self.ideal, &order, self.budget)?;
        self.found.push(g.clone());
        Ok(g)
    }
}

fn to_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::IntegerOverflow("weight vector"))).collect()
}

fn setup(ideal: &BinomialIdeal) -> Result<(Vec<i64>, Frame)> {
    if ideal.is_empty() {
        return Err(Error::invalid("the zero ideal has no Gröbner fan to enumerate"));
    }
    let grading = ideal.grading()?;
    let frame = Frame::new(ideal.nvars(), &ideal.vectors());
    Ok((grading.weights().to_vec(), frame))
}

/// Every reduced Gröbner basis of a homogeneous binomial ideal.
///
/// Depth-first refinement: a region `R` (an open polyhedral cone given by
/// sign constraints) with witness `z` is finished when the basis `G` at `z`
/// satisfies `R ⊆ C(G)`, which holds iff `R ∩ {v_g < 0}` is infeasible for
/// every `g ∈ G`. Otherwise `R` is split along such a `v_g`. Every split
/// hyperplane is the vector of a basis element, so the leaves coarsen the
/// cells of the arrangement of all such vectors (for toric ideals, a
/// subarrangement of the Graver arrangement), and every open Gröbner cone
/// meets some leaf.
pub fn enumerate_reduced_gbs(ideal: &BinomialIdeal, budget: &Budget) -> Result<FanEnumeration> {
    let (grading, frame) = setup(ideal)?;
    let r = frame.rank();
    let mut cache = BasisCache::new(ideal, budget);
    let mut found: BTreeMap<MonomialIdeal, (GroebnerBasis, Vec<i64>)> = BTreeMap::new();
    let mut stack: Vec<(Vec<(Vec<BigInt>, Sign)>, Vec<BigInt>)> = alloc::vec![(Vec::new(), alloc::vec![BigInt::zero(); r])];
    let mut visited = 0usize;
    while let Some((mut cons, z)) = stack.pop() {
        visited += 1;
        if visited as u64 > budget.cells {
            return Err(Error::BudgetExhausted { what: "cell", limit: budget.cells });
        }
        let w = shift_positive(&to_i64(&frame.ambient_weight(&z))?, &grading)?;
        let g = cache.at_weight(&w)?;
        let mut leaf = true;
        for v in g.oriented_vectors() {
            let t = frame.coords(&v)?;
            if cons.iter().any(|(c, s)| *s == Sign::Positive && *c == t) {
                continue;
            }
            let d = dot(&t, &z);
            if d.is_zero() {
                // the witness sits on a wall of R: split it there
                for s in [Sign::Negative, Sign::Positive] {
                    let mut c = cons.clone();
                    c.push((t.clone(), s));
                    if let Some(z2) = strict_feasible_int(r, &c)? {
                        stack.push((c, z2));
                    }
                }
                leaf = false;
                break;
            }
            debug_assert!(d > BigInt::zero(), "weight orders never prefer the lighter term");
            let mut c = cons.clone();
            c.push((t.clone(), Sign::Negative));
            if let Some(z2) = strict_feasible_int(r, &c)? {
                stack.push((c, z2));
            }
            cons.push((t, Sign::Positive));
        }
        if leaf {
            debug_assert!(g.cone_contains(&w));
            found.entry(g.initial_ideal()).or_insert((g, w));
        }
    }
    Ok(FanEnumeration::from_map(found, visited, true))
}

/// The literal arrangement route: one reduced basis per cell of the
/// arrangement of `vectors` (which must contain every vector of every
/// reduced basis, e.g. the Graver basis), taking both `σ` and `-σ`.
pub fn enumerate_reduced_gbs_over_cells(
    ideal: &BinomialIdeal,
    vectors: &[Vec<i64>],
    budget: &Budget,
) -> Result<FanEnumeration> {
    let (grading, frame) = setup(ideal)?;
    let cells = enumerate_cells(vectors, budget)?;
    let mut cache = BasisCache::new(ideal, budget);
    let mut found = BTreeMap::new();
    for cell in &cells {
        for sign in [1i64, -1] {
            let raw: Vec<BigInt> = cell.witness.iter().map(|x| x * sign).collect();
            // the arrangement may live in a larger ambient span; project via z
            let z: Vec<BigInt> = frame.basis.iter().map(|b| dot(b, &raw)).collect();
            let w = shift_positive(&to_i64(&frame.ambient_weight(&z))?, &grading)?;
            let g = cache.at_weight(&w)?;
            if !g.cone_contains(&w) {
                return Err(Error::invalid("arrangement does not contain every Gröbner basis vector"));
            }
            found.entry(g.initial_ideal()).or_insert((g, w));
        }
    }
    Ok(FanEnumeration::from_map(found, cells.len(), true))
}

/// `μ`-free shortcut for callers that only need the union.
pub fn universal_gb(ideal: &BinomialIdeal, budget: &Budget) -> Result<Vec<Binomial>> {
    Ok(enumerate_reduced_gbs(ideal, budget)?.universal_gb())
}

pub fn enumerate_initial_ideals(ideal: &BinomialIdeal, budget: &Budget) -> Result<Vec<MonomialIdeal>> {
    Ok(enumerate_reduced_gbs(ideal, budget)?.initial_ideals())
}

/// Reduced bases at `samples` random positive integer weights drawn from a
/// seeded ChaCha stream. A draw whose basis does not lie strictly inside its
/// Gröbner cone (a non-generic weight) is redrawn.
pub fn sample_reduced_gbs(ideal: &BinomialIdeal, samples: usize, seed: u64, budget: &Budget) -> Result<FanEnumeration> {
    setup(ideal)?;
    let n = ideal.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cache = BasisCache::new(ideal, budget);
    let mut found = BTreeMap::new();
    let mut draws = 0usize;
    for _ in 0..samples {
        loop {
            draws += 1;
            if draws > samples.saturating_mul(64).max(64) {
                return Err(Error::BudgetExhausted { what: "weight draw", limit: draws as u64 });
            }
            let w: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=SAMPLE_WEIGHT_RANGE)).collect();
            let g = cache.at_weight(&w)?;
            if g.cone_contains(&w) {
                found.entry(g.initial_ideal()).or_insert((g, w));
                break;
            }
        }
    }
    Ok(FanEnumeration::from_map(found, samples, false))
}

pub fn sample_initial_ideals(ideal: &BinomialIdeal, samples: usize, seed: u64, budget: &Budget) -> Result<Vec<MonomialIdeal>> {
    Ok(sample_reduced_gbs(ideal, samples, seed, budget)?.initial_ideals())
}

/// Reduced bases for all `n!` lexicographic orders.
pub fn lex_orders_sweep(ideal: &BinomialIdeal, budget: &Budget) -> Result<FanEnumeration> {
    let n = ideal.nvars();
    if n > MAX_LEX_VARIABLES {
        return Err(Error::BudgetExhausted { what: "lex order", limit: (1..=MAX_LEX_VARIABLES as u64).product() });
    }
    if ideal.is_empty() {
        return Err(Error::invalid("the zero ideal has no Gröbner bases to sweep"));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut known: Vec<GroebnerBasis> = Vec::new();
    let mut found = BTreeMap::new();
    let mut count = 0;
    loop {
        count += 1;
        let order = TermOrder::lex_by(perm.clone())?;
        let cached = known.iter().find(|g| {
            g.marked_terms().all(|(l, t)| order.cmp_exponents(l.exponents(), t.exponents()).is_gt())
        });
        let g = match cached {
            Some(g) => g.clone(),
            None => {
                let g = buchberger_reduced(ideal, &order, budget)?;
                known.push(g.clone());
                g
            }
        };
        found.entry(g.initial_ideal()).or_insert((g, Vec::new()));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(FanEnumeration::from_map(found, count, true))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;
    use alloc::vec;

    fn minors_2x3() -> BinomialIdeal {
        parse_ideal(
            "x1 x2 x3 y1 y2 y3",
            &["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"],
        )
        .unwrap()
    }

    #[test]
    fn cells_of_small_arrangements() {
        let b = Budget::default();
        assert_eq!(enumerate_cells(&[vec![1, -1]], &b).unwrap().len(), 1);
        let cells = enumerate_cells(&[vec![1, 0], vec![0, 1]], &b).unwrap();
        assert_eq!(cells.len(), 2);
        let three = [vec![1, 0], vec![0, 1], vec![1, 1]];
        let cells = enumerate_cells(&three, &b).unwrap();
        assert_eq!(cells.len(), 3);
        for c in &cells {
            assert!(c.certify(&three));
        }
        // a lower-dimensional span in a larger ambient space
        let cells = enumerate_cells(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]], &b).unwrap();
        assert_eq!(cells.len(), 3);
    }

    #[test]
    fn cell_budget() {
        let err = enumerate_cells(&[vec![1, 0], vec![0, 1]], &Budget::uniform(1)).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn principal_ideal() {
        let i = parse_ideal("x y z", &["x*z - y^2"]).unwrap();
        let f = enumerate_reduced_gbs(&i, &Budget::default()).unwrap();
        assert_eq!(f.reduced_gbs().len(), 1);
        assert_eq!(f.initial_ideals().len(), 2);
    }

    #[test]
    fn two_lines() {
        let i = parse_ideal("x y z", &["x - y", "y - z"]).unwrap();
        let f = enumerate_reduced_gbs(&i, &Budget::default()).unwrap();
        assert_eq!(f.universal_gb().len(), 3);
        let ins = f.initial_ideals();
        assert_eq!(ins.len(), 3);
        assert!(ins.iter().all(|m| m.len() == 2));
        let lex = lex_orders_sweep(&i, &Budget::default()).unwrap();
        assert_eq!(lex.visited, 6);
        assert_eq!(lex.reduced_gbs().len(), 3);
        assert_eq!(lex.universal_gb(), f.universal_gb());
    }

    #[test]
    fn generic_minors_have_one_basis() {
        let i = minors_2x3();
        let f = enumerate_reduced_gbs(&i, &Budget::default()).unwrap();
        assert_eq!(f.reduced_gbs(), vec![canonical_set(i.generators().to_vec())]);
        for (g, w) in f.bases().iter().zip(f.witnesses()) {
            assert!(g.cone_contains(w));
            assert!(w.iter().all(|&x| x > 0));
        }
        let lex = lex_orders_sweep(&i, &Budget::default()).unwrap();
        assert_eq!(lex.visited, 720);
        assert_eq!(lex.universal_gb(), f.universal_gb());
    }

    #[test]
    fn refinement_matches_arrangement() {
        let b = Budget::default();
        for i in [
            minors_2x3(),
            parse_ideal("x y z", &["x - y", "y - z"]).unwrap(),
            parse_ideal("a b c d", &["a*d - b*c", "a*c - b^2", "b*d - c^2"]).unwrap(),
        ] {
            let l = crate::lattice::lattice_of(&i).unwrap();
            let g = crate::graver::graver_basis(&l, &b).unwrap();
            let by_cells = enumerate_reduced_gbs_over_cells(&i, &g.vectors(), &b).unwrap();
            let refined = enumerate_reduced_gbs(&i, &b).unwrap();
            assert_eq!(by_cells.initial_ideals(), refined.initial_ideals());
            assert_eq!(by_cells.universal_gb(), refined.universal_gb());
        }
    }

    #[test]
    fn sampling_is_reproducible() {
        let i = parse_ideal("a b c d", &["a*d - b*c", "a*c - b^2", "b*d - c^2"]).unwrap();
        let b = Budget::default();
        let s1 = sample_initial_ideals(&i, 20, 7, &b).unwrap();
        let s2 = sample_initial_ideals(&i, 20, 7, &b).unwrap();
        assert_eq!(s1, s2);
        let all = enumerate_initial_ideals(&i, &b).unwrap();
        assert!(s1.iter().all(|m| all.contains(m)));
    }

    #[test]
    fn permutations() {
        let mut p = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 6);
    }
}
