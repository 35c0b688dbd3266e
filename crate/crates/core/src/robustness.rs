//! Robustness of binomial ideals and the structural criteria around it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::binomial::{canonical_set, Binomial};
use crate::error::{Error, Result};
use crate::fan::enumerate_reduced_gbs;
use crate::graver::graver_basis;
use crate::groebner::{buchberger_reduced, minimal_generators, Budget};
use crate::hnf::solve_integer;
use crate::ideal::BinomialIdeal;
use crate::lattice::{lattice_of, lawrence_pairing};
use crate::monomial::{Monomial, VariableContext};
use crate::order::TermOrder;
use crate::text::ScaledBinomial;

/// Outcome of [`robust_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessReport {
    pub robust: bool,
    pub mu: usize,
    pub ugb_size: usize,
    /// `None` when the Graver basis was not requested.
    pub graver_size: Option<usize>,
    /// Elements of the universal basis lying in the ideal of the others.
    pub redundant_elements: Vec<Binomial>,
    /// Minimal generators coincide with the Graver basis.
    pub lawrence_like: Option<bool>,
    /// The lattice is a Lawrence lifting up to renaming variables.
    pub lawrence_type: bool,
    /// Variable supports of the irreducible components.
    pub components: Vec<Vec<usize>>,
    pub minimal_generators: Vec<Binomial>,
    pub universal_gb: Vec<Binomial>,
    pub reduced_gbs: usize,
    pub initial_ideals: usize,
}

/// Decides whether the universal Gröbner basis (the union of all reduced
/// bases) generates the ideal minimally.
pub fn robust_check(ideal: &BinomialIdeal, budget: &Budget) -> Result<RobustnessReport> {
    robust_check_with(ideal, budget, true)
}

pub fn robust_check_with(ideal: &BinomialIdeal, budget: &Budget, with_graver: bool) -> Result<RobustnessReport> {
    let mingens = minimal_generators(ideal, budget)?;
    let fan = enumerate_reduced_gbs(ideal, budget)?;
    let ugb = fan.universal_gb();
    let order = TermOrder::grevlex(ideal.nvars());
    let mut redundant = Vec::new();
    for (k, g) in ugb.iter().enumerate() {
        let rest: Vec<Binomial> = ugb.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, b)| b.clone()).collect();
        if rest.is_empty() {
            continue;
        }
        let gb = buchberger_reduced(&ideal.with_generators(rest)?, &order, budget)?;
        if gb.contains(g)? {
            redundant.push(g.clone());
        }
    }
    let lattice = lattice_of(ideal)?;
    let (graver_size, lawrence_like) = if with_graver {
        let graver = graver_basis(&lattice, budget)?;
        (Some(graver.len()), Some(graver.elements() == mingens.as_slice()))
    } else {
        (None, None)
    };
    Ok(RobustnessReport {
        robust: redundant.is_empty() && ugb.len() == mingens.len(),
        mu: mingens.len(),
        ugb_size: ugb.len(),
        graver_size,
        redundant_elements: redundant,
        lawrence_like,
        lawrence_type: lawrence_pairing(&lattice).is_some(),
        components: irreducible_components(ideal)?.into_iter().map(|c| c.variables).collect(),
        minimal_generators: mingens,
        universal_gb: ugb,
        reduced_gbs: fan.reduced_gbs().len(),
        initial_ideals: fan.bases().len(),
    })
}

/// Monomials occurring as a term of two different binomials.
pub fn shared_monomials(set: &[Binomial]) -> Vec<Monomial> {
    let mut seen: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for b in set {
        *seen.entry(b.plus()).or_insert(0) += 1;
        *seen.entry(b.minus()).or_insert(0) += 1;
    }
    seen.into_iter().filter(|&(_, c)| c > 1).map(|(m, _)| m.clone()).collect()
}

/// A block of generators on a common set of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Indices into the original context, increasing.
    pub variables: Vec<usize>,
    /// The block over the restricted context.
    pub ideal: BinomialIdeal,
}

/// Connected components of the graph joining generators with intersecting
/// supports, ordered by smallest variable.
pub fn irreducible_components(f: &BinomialIdeal) -> Result<Vec<Component>> {
    let n = f.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let supports: Vec<BTreeSet<usize>> = f.generators().iter().map(|g| g.support().into_iter().collect()).collect();
    for i in 0..n {
        for j in i + 1..n {
            if !supports[i].is_disjoint(&supports[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut blocks: BTreeMap<usize, (BTreeSet<usize>, Vec<usize>)> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        let e = blocks.entry(root).or_default();
        e.0.extend(supports[i].iter().copied());
        e.1.push(i);
    }
    let mut out: Vec<Component> = blocks
        .into_values()
        .map(|(vars, gens)| {
            let variables: Vec<usize> = vars.into_iter().collect();
            let ctx = f.context().select(&variables)?;
            let gens = gens.iter().map(|&k| f.generators()[k].select(&variables)).collect::<Result<Vec<_>>>()?;
            Ok(Component { variables, ideal: BinomialIdeal::new(ctx, gens)? })
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.variables.cmp(&b.variables));
    Ok(out)
}

/// Shapes recognised by [`classify_quadratic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadraticShape {
    Singleton,
    /// `F = {x_i y_j - x_j y_i : i < j}`; `x` and `y` list the variables of
    /// the two rows, column by column.
    DeterminantalTwoByN { n: usize, x: Vec<usize>, y: Vec<usize> },
    NotRobustShape,
}

/// Matches a connected set of irreducible quadrics against the 2×2 minors
/// of a generic `2 × n` matrix.
///
/// Two variables share a term of some minor exactly when they lie in
/// different rows and columns, so for `n ≥ 3` the co-occurrence graph is
/// `K_{n,n}` minus a perfect matching: its unique 2-colouring gives the
/// rows and the missing edges give the columns.
pub fn classify_quadratic(f: &BinomialIdeal) -> Result<QuadraticShape> {
    if f.is_empty() {
        return Err(Error::invalid("empty generating set"));
    }
    if let Some(g) = f.generators().iter().find(|g| g.degree() != 2) {
        return Err(Error::InvalidInput(format!("not quadratic: {}", g.display(f.context()))));
    }
    if let Some(g) = f.generators().iter().find(|g| !g.is_irreducible()) {
        return Err(Error::HypothesisViolation(format!("reducible binomial {}", g.display(f.context()))));
    }
    if irreducible_components(f)?.len() != 1 {
        return Err(Error::HypothesisViolation("the set splits into components on disjoint variables".into()));
    }
    if f.len() == 1 {
        return Ok(QuadraticShape::Singleton);
    }
    let vars: BTreeSet<usize> = f.generators().iter().flat_map(|g| g.support()).collect();
    let nv = vars.len();
    if nv % 2 != 0 || nv < 6 || f.len() != (nv / 2) * (nv / 2 - 1) / 2 {
        return Ok(QuadraticShape::NotRobustShape);
    }
    let n = nv / 2;
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = vars.iter().map(|&v| (v, BTreeSet::new())).collect();
    for g in f.generators() {
        for m in [g.plus(), g.minus()] {
            let s: Vec<usize> = m.support().collect();
            if s.len() != 2 {
                return Ok(QuadraticShape::NotRobustShape);
            }
            adj.get_mut(&s[0]).expect("support").insert(s[1]);
            adj.get_mut(&s[1]).expect("support").insert(s[0]);
        }
    }
    // 2-colour by breadth-first search from the smallest variable
    let mut colour: BTreeMap<usize, bool> = BTreeMap::new();
    let start = *vars.iter().next().expect("nonempty");
    colour.insert(start, false);
    let mut queue = alloc::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let c = colour[&v];
        for &u in &adj[&v] {
            match colour.get(&u) {
                Some(&cu) if cu == c => return Ok(QuadraticShape::NotRobustShape),
                Some(_) => {}
                None => {
                    colour.insert(u, !c);
                    queue.push_back(u);
                }
            }
        }
    }
    if colour.len() != nv {
        return Ok(QuadraticShape::NotRobustShape);
    }
    let x: Vec<usize> = vars.iter().copied().filter(|v| !colour[v]).collect();
    let ys: Vec<usize> = vars.iter().copied().filter(|v| colour[v]).collect();
    if x.len() != n {
        return Ok(QuadraticShape::NotRobustShape);
    }
    let mut y = Vec::with_capacity(n);
    for xi in &x {
        let partners: Vec<usize> = ys.iter().copied().filter(|yj| !adj[xi].contains(yj)).collect();
        if partners.len() != 1 || y.contains(&partners[0]) {
            return Ok(QuadraticShape::NotRobustShape);
        }
        y.push(partners[0]);
    }
    let nvars = f.nvars();
    let mut minors = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a = alloc::vec![0u32; nvars];
            let mut b = alloc::vec![0u32; nvars];
            a[x[i]] += 1;
            a[y[j]] += 1;
            b[x[j]] += 1;
            b[y[i]] += 1;
            minors.push(Binomial::new(Monomial::new(a), Monomial::new(b))?);
        }
    }
    if canonical_set(minors) == canonical_set(f.generators().to_vec()) {
        Ok(QuadraticShape::DeterminantalTwoByN { n, x, y })
    } else {
        Ok(QuadraticShape::NotRobustShape)
    }
}

/// Pure-difference binomials obtained by a torus rescaling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rescaling {
    /// `x_i ↦ scale_i · x_i`.
    pub scale: Vec<BigRational>,
    pub ideal: BinomialIdeal,
}

/// Finds `t ∈ (ℚ^*)^n` with `c1·t^a·x^a + c2·t^b·x^b ∝ x^a - x^b` for every
/// generator, i.e. `t^{a-b} = -c2/c1`. Writing `ℚ^* = {±1} × ⊕_p ℤ`, this is
/// a linear system over `GF(2)` for the signs and one integer system per
/// prime (over a coprime base of the numbers involved).
pub fn rescale_normalize(ctx: &VariableContext, gens: &[ScaledBinomial]) -> Result<Rescaling> {
    let n = ctx.len();
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    let mut targets: Vec<BigRational> = Vec::new();
    for g in gens {
        let [(c1, m1), (c2, m2)] = &g.terms;
        if m1.len() != n || m2.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m1.len().max(m2.len()) });
        }
        if c1.is_zero() || c2.is_zero() {
            return Err(Error::invalid("zero coefficient"));
        }
        vectors.push(m1.exponents().iter().zip(m2.exponents()).map(|(&a, &b)| a as i64 - b as i64).collect());
        targets.push(-(c2 / c1));
    }
    let signs = solve_gf2(&vectors, &targets.iter().map(|r| r.is_negative()).collect::<Vec<_>>(), n).ok_or_else(|| {
        Error::NotRescalable("the signs of the coefficients admit no consistent choice of variable signs".into())
    })?;

    let mut atoms: Vec<BigInt> = Vec::new();
    for r in &targets {
        for x in [r.numer().abs(), r.denom().clone()] {
            if !x.is_one() {
                atoms.push(x);
            }
        }
    }
    let base = coprime_base(atoms);
    let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut scale: Vec<BigRational> = signs
        .iter()
        .map(|&neg| if neg { -BigRational::one() } else { BigRational::one() })
        .collect();
    for p in &base {
        let rhs: Vec<BigInt> = targets
            .iter()
            .map(|r| BigInt::from(valuation(&r.numer().abs(), p)) - BigInt::from(valuation(r.denom(), p)))
            .collect();
        if rhs.iter().all(Zero::is_zero) {
            continue;
        }
        let e = solve_integer(&rows, n, &rhs)
            .ok_or_else(|| Error::NotRescalable(format!("no rational rescaling balances the factor {p}")))?;
        for (s, k) in scale.iter_mut().zip(e) {
            *s *= pow_rational(p, &k);
        }
    }
    let pure = gens
        .iter()
        .map(|g| Binomial::new(g.terms[0].1.clone(), g.terms[1].1.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Rescaling { scale, ideal: BinomialIdeal::new(ctx.clone(), pure)? })
}

fn pow_rational(p: &BigInt, k: &BigInt) -> BigRational {
    let e: u32 = num_traits::ToPrimitive::to_u32(&k.abs()).expect("small exponent");
    let v = BigRational::from_integer(num_traits::pow(p.clone(), e as usize));
    if k.is_negative() {
        v.recip()
    } else {
        v
    }
}

/// Pairwise coprime numbers `> 1` such that every input is a product of
/// their powers.
fn coprime_base(mut xs: Vec<BigInt>) -> Vec<BigInt> {
    loop {
        xs.sort();
        xs.dedup();
        xs.retain(|x| !x.is_one());
        let mut split = None;
        'outer: for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                let g = xs[i].gcd(&xs[j]);
                if !g.is_one() {
                    split = Some((i, j, g));
                    break 'outer;
                }
            }
        }
        let Some((i, j, g)) = split else { return xs };
        let (a, b) = (&xs[i] / &g, &xs[j] / &g);
        xs[i] = a;
        xs[j] = b;
        xs.push(g);
    }
}

fn valuation(x: &BigInt, p: &BigInt) -> i64 {
    let mut x = x.clone();
    let mut k = 0;
    while !x.is_zero() && (&x % p).is_zero() {
        x /= p;
        k += 1;
    }
    k
}

/// Solves `Σ_j v_j s_j ≡ t (mod 2)` for each row.
fn solve_gf2(rows: &[Vec<i64>], rhs: &[bool], n: usize) -> Option<Vec<bool>> {
    let mut m: Vec<(Vec<bool>, bool)> =
        rows.iter().zip(rhs).map(|(r, &t)| (r.iter().map(|x| x.rem_euclid(2) == 1).collect(), t)).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i].0[c]) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i].0[c] {
                let (row, t) = m[r].clone();
                for (a, b) in m[i].0.iter_mut().zip(&row) {
                    *a ^= b;
                }
                m[i].1 ^= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|(_, t)| *t) {
        return None;
    }
    let mut s = alloc::vec![false; n];
    for (k, &c) in pivots.iter().enumerate() {
        s[c] = m[k].1;
    }
    Some(s)
}

/// A `2 × n` matrix of monomials `X_1..X_n / Y_1..Y_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    context: VariableContext,
    x: Vec<Monomial>,
    y: Vec<Monomial>,
}

impl MonomialMatrix {
    pub fn new(context: VariableContext, x: Vec<Monomial>, y: Vec<Monomial>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::DimensionMismatch { expected: x.len(), found: y.len() });
        }
        if x.len() < 2 {
            return Err(Error::invalid("a monomial matrix needs at least two columns"));
        }
        for m in x.iter().chain(&y) {
            if m.len() != context.len() {
                return Err(Error::DimensionMismatch { expected: context.len(), found: m.len() });
            }
            if m.degree() == 0 {
                return Err(Error::invalid("matrix entries must have degree at least 1"));
            }
        }
        Ok(MonomialMatrix { context, x, y })
    }

    pub fn context(&self) -> &VariableContext {
        &self.context
    }

    pub fn columns(&self) -> usize {
        self.x.len()
    }

    pub fn top(&self) -> &[Monomial] {
        &self.x
    }

    pub fn bottom(&self) -> &[Monomial] {
        &self.y
    }

    /// `z_ij = gcd(X_i, Y_j)` (0-based).
    pub fn z(&self, i: usize, j: usize) -> Monomial {
        self.x[i].gcd(&self.y[j])
    }
}

/// The minors `X_i Y_j - X_j Y_i` and the pairs whose minor is reducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minors {
    pub ideal: BinomialIdeal,
    pub reducible: Vec<(usize, usize)>,
}

pub fn minors_of_monomial_matrix(a: &MonomialMatrix) -> Result<Minors> {
    let n = a.columns();
    let mut gens = Vec::new();
    let mut reducible = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = a.x[i].checked_mul(&a.y[j])?;
            let q = a.x[j].checked_mul(&a.y[i])?;
            let b = Binomial::new(p, q).map_err(|_| Error::InvalidInput(format!("minor ({}, {}) vanishes", i + 1, j + 1)))?;
            if !b.is_irreducible() {
                reducible.push((i, j));
            }
            gens.push(b);
        }
    }
    Ok(Minors { ideal: BinomialIdeal::new(a.context.clone(), gens)?, reducible })
}

/// Which pair of entries fails to be coprime (0-based columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoprimalityWitness {
    /// `z_ij = gcd(X_i, Y_j)` with `i ≠ j`.
    Z { i: usize, j: usize, gcd: Monomial },
    SameColumn { i: usize, gcd: Monomial },
    Top { i: usize, j: usize, gcd: Monomial },
    Bottom { i: usize, j: usize, gcd: Monomial },
}

impl CoprimalityWitness {
    pub fn gcd(&self) -> &Monomial {
        match self {
            CoprimalityWitness::Z { gcd, .. }
            | CoprimalityWitness::SameColumn { gcd, .. }
            | CoprimalityWitness::Top { gcd, .. }
            | CoprimalityWitness::Bottom { gcd, .. } => gcd,
        }
    }

    /// `z_{12} = c` style, 1-based.
    pub fn describe(&self, ctx: &VariableContext) -> String {
        let g = self.gcd().display(ctx);
        match self {
            CoprimalityWitness::Z { i, j, .. } => format!("z_{{{}{}}} = gcd(X_{}, Y_{}) = {g}", i + 1, j + 1, i + 1, j + 1),
            CoprimalityWitness::SameColumn { i, .. } => format!("gcd(X_{}, Y_{}) = {g}", i + 1, i + 1),
            CoprimalityWitness::Top { i, j, .. } => format!("gcd(X_{}, X_{}) = {g}", i + 1, j + 1),
            CoprimalityWitness::Bottom { i, j, .. } => format!("gcd(Y_{}, Y_{}) = {g}", i + 1, j + 1),
        }
    }
}

/// `None` when all `2n` entries are pairwise coprime, otherwise the first
/// offending pair, preferring an off-diagonal `z_ij`. Requires irreducible
/// minors.
pub fn coprimality_criterion(a: &MonomialMatrix) -> Result<Option<CoprimalityWitness>> {
    let minors = minors_of_monomial_matrix(a)?;
    if let Some(&(i, j)) = minors.reducible.first() {
        return Err(Error::HypothesisViolation(format!("the minor on columns {} and {} is reducible", i + 1, j + 1)));
    }
    let n = a.columns();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let g = a.z(i, j);
                if !g.is_one() {
                    return Ok(Some(CoprimalityWitness::Z { i, j, gcd: g }));
                }
            }
        }
    }
    for i in 0..n {
        let g = a.z(i, i);
        if !g.is_one() {
            return Ok(Some(CoprimalityWitness::SameColumn { i, gcd: g }));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let g = a.x[i].gcd(&a.x[j]);
            if !g.is_one() {
                return Ok(Some(CoprimalityWitness::Top { i, j, gcd: g }));
            }
            let g = a.y[i].gcd(&a.y[j]);
            if !g.is_one() {
                return Ok(Some(CoprimalityWitness::Bottom { i, j, gcd: g }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_ideal, parse_monomial, parse_scaled_binomial};
    use alloc::string::ToString;
    use alloc::vec;

    fn minors(n: usize) -> BinomialIdeal {
        let names: Vec<String> =
            (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect();
        let ctx = VariableContext::new(names).unwrap();
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut a = vec![0u32; 2 * n];
                let mut b = vec![0u32; 2 * n];
                a[i] = 1;
                a[n + j] = 1;
                b[j] = 1;
                b[n + i] = 1;
                gens.push(Binomial::new(Monomial::new(a), Monomial::new(b)).unwrap());
            }
        }
        BinomialIdeal::new(ctx, gens).unwrap()
    }

    #[test]
    fn two_linear_forms_are_not_robust() {
        let i = parse_ideal("x y z", &["x - y", "y - z"]).unwrap();
        let r = robust_check(&i, &Budget::default()).unwrap();
        assert!(!r.robust);
        assert_eq!((r.mu, r.ugb_size), (2, 3));
        assert_eq!(r.redundant_elements.len(), 3);
    }

    #[test]
    fn minors_are_robust() {
        let r = robust_check(&minors(4), &Budget::default()).unwrap();
        assert!(r.robust);
        assert_eq!((r.mu, r.ugb_size), (6, 6));
        assert!(shared_monomials(&r.universal_gb).is_empty());
    }

    #[test]
    fn components() {
        let i = parse_ideal("x1 x2 x3 x4", &["x1 - x2", "x3 - x4"]).unwrap();
        let c = irreducible_components(&i).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[1].variables, vec![2, 3]);
        assert_eq!(c[1].ideal.generators()[0].display(c[1].ideal.context()).to_string(), "x3 - x4");
        assert_eq!(irreducible_components(&minors(3)).unwrap().len(), 1);
        let i = parse_ideal("x y z w a b c d", &["x*y - z*w", "x^2 - y*z", "a*b - c*d", "a^2 - b*c"]).unwrap();
        assert_eq!(irreducible_components(&i).unwrap().len(), 2);
    }

    #[test]
    fn quadratic_shapes() {
        let i = parse_ideal("x y z w", &["x*y - z*w"]).unwrap();
        assert_eq!(classify_quadratic(&i).unwrap(), QuadraticShape::Singleton);
        match classify_quadratic(&minors(4)).unwrap() {
            QuadraticShape::DeterminantalTwoByN { n, x, y } => {
                assert_eq!(n, 4);
                assert_eq!(x, vec![0, 1, 2, 3]);
                assert_eq!(y, vec![4, 5, 6, 7]);
            }
            other => panic!("{other:?}"),
        }
        let i = parse_ideal("x1 x2 x3 x4 x5 x6", &["x1*x2 - x3*x4", "x1*x3 - x5*x6"]).unwrap();
        assert_eq!(classify_quadratic(&i).unwrap(), QuadraticShape::NotRobustShape);
        let i = parse_ideal("x y z", &["x^2*y - z^3"]).unwrap();
        assert!(matches!(classify_quadratic(&i), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn rescaling() {
        let ctx = VariableContext::new(["x", "y", "z", "w"]).unwrap();
        let g = parse_scaled_binomial(&ctx, "6*x*y - z*w").unwrap();
        let r = rescale_normalize(&ctx, &[g]).unwrap();
        assert_eq!(r.ideal.generators()[0].display(&ctx).to_string(), "x*y - z*w");
        // the torus action really maps 6xy - zw to a multiple of xy - zw
        let t = &r.scale;
        assert_eq!(BigRational::from_integer(6.into()) * &t[0] * &t[1], t[2].clone() * &t[3]);

        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let g = parse_scaled_binomial(&ctx, "x^2 - 2*y^2").unwrap();
        assert!(matches!(rescale_normalize(&ctx, &[g]), Err(Error::NotRescalable(_))));
        let g = parse_scaled_binomial(&ctx, "x^2 + y^2").unwrap();
        assert!(matches!(rescale_normalize(&ctx, &[g]), Err(Error::NotRescalable(_))));
    }

    #[test]
    fn scaled_minors() {
        // minors of (2a 3b 5c / d 7e f) rescale to plain minors
        let ctx = VariableContext::new(["a", "b", "c", "d", "e", "f"]).unwrap();
        let gens: Vec<ScaledBinomial> = ["14*a*e - 3*b*d", "2*a*f - 5*c*d", "3*b*f - 35*c*e"]
            .iter()
            .map(|s| parse_scaled_binomial(&ctx, s).unwrap())
            .collect();
        let r = rescale_normalize(&ctx, &gens).unwrap();
        assert_eq!(r.ideal.len(), 3);
        for g in &gens {
            let [(c1, m1), (c2, m2)] = &g.terms;
            let at = |m: &Monomial| {
                m.exponents().iter().zip(&r.scale).fold(BigRational::one(), |acc, (&e, s)| acc * num_traits::pow(s.clone(), e as usize))
            };
            assert_eq!(c1 * at(m1), -(c2 * at(m2)));
        }
    }

    #[test]
    fn monomial_matrix_criterion() {
        let ctx = VariableContext::default_for(7).unwrap();
        let m = |s: &str| parse_monomial(&ctx, s).unwrap();
        let a = MonomialMatrix::new(ctx.clone(), vec![m("a*c"), m("b"), m("f")], vec![m("d"), m("c*e"), m("g")]).unwrap();
        let minors = minors_of_monomial_matrix(&a).unwrap();
        assert!(minors.reducible.is_empty());
        assert!(minors.ideal.generators().iter().any(|g| g.display(&ctx).to_string() == "a*c^2*e - b*d"));
        let w = coprimality_criterion(&a).unwrap().unwrap();
        assert_eq!(w, CoprimalityWitness::Z { i: 0, j: 1, gcd: m("c") });
        assert_eq!(w.describe(&ctx), "z_{12} = gcd(X_1, Y_2) = c");

        let a = MonomialMatrix::new(ctx.clone(), vec![m("a"), m("b"), m("c")], vec![m("d"), m("e"), m("f")]).unwrap();
        assert_eq!(coprimality_criterion(&a).unwrap(), None);
        let a = MonomialMatrix::new(ctx.clone(), vec![m("a^2"), m("b"), m("c")], vec![m("d"), m("e^3"), m("f")]).unwrap();
        assert_eq!(coprimality_criterion(&a).unwrap(), None);
        let a = MonomialMatrix::new(ctx.clone(), vec![m("a"), m("b"), m("c")], vec![m("a"), m("e"), m("f")]).unwrap();
        assert!(!minors_of_monomial_matrix(&a).unwrap().reducible.is_empty());
        assert!(matches!(coprimality_criterion(&a), Err(Error::HypothesisViolation(_))));
    }
}
