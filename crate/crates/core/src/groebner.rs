//! Buchberger's algorithm for pure-difference binomial ideals.
//!
//! Every S-pair and every reduction step on `a - b` replaces one term by
//! another monomial, so the engine only ever holds pairs of monomials. A
//! step that makes the two terms equal produces zero; a lone monomial
//! cannot arise.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::betti::MonomialIdeal;
use crate::binomial::{canonical_set, Binomial};
use crate::error::{Error, Result};
use crate::ideal::BinomialIdeal;
use crate::monomial::{divides, Exponent, Monomial};
use crate::order::TermOrder;

/// Resource guards for the exhaustive procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// S-pair reductions per Gröbner basis computation.
    pub spairs: u64,
    /// Sign cells per arrangement enumeration.
    pub cells: u64,
    /// Multidegrees per Betti table.
    pub multidegrees: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { spairs: 1_000_000, cells: 1_000_000, multidegrees: 1_000_000 }
    }
}

impl Budget {
    pub fn uniform(limit: u64) -> Self {
        Budget { spairs: limit, cells: limit, multidegrees: limit }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Marked {
    pub lead: Vec<Exponent>,
    pub trail: Vec<Exponent>,
}

impl Marked {
    fn from_binomial(b: &Binomial, order: &TermOrder) -> Marked {
        let (l, t) = b.marked(order);
        Marked { lead: l.exponents().to_vec(), trail: t.exponents().to_vec() }
    }

    fn to_binomial(&self) -> Binomial {
        Binomial::new(Monomial::new(self.lead.clone()), Monomial::new(self.trail.clone()))
            .expect("marked binomials have distinct terms")
    }
}

/// `m / lead * trail`, assuming `lead | m`.
fn rewrite(m: &mut [Exponent], lead: &[Exponent], trail: &[Exponent]) -> Result<()> {
    for ((x, &l), &t) in m.iter_mut().zip(lead).zip(trail) {
        *x = (*x - l).checked_add(t).ok_or(Error::ExponentOverflow)?;
    }
    Ok(())
}

/// Normal form of a monomial: rewrite with the first applicable reducer
/// until none applies.
fn reduce_monomial(m: &mut [Exponent], reducers: &[&Marked]) -> Result<()> {
    while let Some(g) = reducers.iter().find(|g| divides(&g.lead, m)) {
        rewrite(m, &g.lead, &g.trail)?;
    }
    Ok(())
}

/// Full normal form of `a - b`: the larger term is rewritten first, then the
/// smaller one once the larger is irreducible. `None` is zero.
fn reduce_pair(
    mut a: Vec<Exponent>,
    mut b: Vec<Exponent>,
    reducers: &[&Marked],
    order: &TermOrder,
) -> Result<Option<Marked>> {
    loop {
        match order.cmp_exponents(&a, &b) {
            Ordering::Equal => return Ok(None),
            Ordering::Less => core::mem::swap(&mut a, &mut b),
            Ordering::Greater => {}
        }
        if let Some(g) = reducers.iter().find(|g| divides(&g.lead, &a)) {
            rewrite(&mut a, &g.lead, &g.trail)?;
            continue;
        }
        if let Some(g) = reducers.iter().find(|g| divides(&g.lead, &b)) {
            rewrite(&mut b, &g.lead, &g.trail)?;
            continue;
        }
        return Ok(Some(Marked { lead: a, trail: b }));
    }
}

fn lcm(a: &[Exponent], b: &[Exponent]) -> Vec<Exponent> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn coprime(a: &[Exponent], b: &[Exponent]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn pair_key(l: &[Exponent], grading: Option<&[i64]>) -> i128 {
    match grading {
        Some(w) => l.iter().zip(w).map(|(&e, &w)| e as i128 * w as i128).sum(),
        None => l.iter().map(|&e| e as i128).sum(),
    }
}

/// Buchberger with the product and chain criteria. Pairs are processed by
/// increasing degree of their lcm; with `truncate = Some(d)` pairs of degree
/// above `d` are never reduced, which yields a basis correct up to degree
/// `d` for homogeneous input.
pub(crate) fn groebner_marked(
    gens: &[Binomial],
    order: &TermOrder,
    spair_limit: u64,
    grading: Option<&[i64]>,
    truncate: Option<i128>,
) -> Result<Vec<Marked>> {
    let mut basis: Vec<Marked> = Vec::new();
    // live[i]: whether basis[i] is used as a reducer
    let mut live: Vec<bool> = Vec::new();
    let mut queue: BTreeSet<(i128, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut used: u64 = 0;

    let add = |h: Marked,
               basis: &mut Vec<Marked>,
               live: &mut Vec<bool>,
               queue: &mut BTreeSet<(i128, usize, usize)>,
               pending: &mut BTreeSet<(usize, usize)>| {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let key = pair_key(&lcm(&g.lead, &h.lead), grading);
            queue.insert((key, i, j));
            pending.insert((i, j));
            if live[i] && divides(&h.lead, &g.lead) {
                live[i] = false;
            }
        }
        basis.push(h);
        live.push(true);
    };

    for g in gens {
        let m = Marked::from_binomial(g, order);
        let reducers: Vec<&Marked> = basis.iter().zip(&live).filter(|(_, &l)| l).map(|(g, _)| g).collect();
        if let Some(h) = reduce_pair(m.lead, m.trail, &reducers, order)? {
            add(h, &mut basis, &mut live, &mut queue, &mut pending);
        }
    }

    while let Some((key, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        if let Some(d) = truncate {
            if key > d {
                break;
            }
        }
        let (fi, fj) = (&basis[i], &basis[j]);
        if coprime(&fi.lead, &fj.lead) {
            continue;
        }
        let l = lcm(&fi.lead, &fj.lead);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k].lead, &l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        used += 1;
        if used > spair_limit {
            return Err(Error::BudgetExhausted { what: "S-pair", limit: spair_limit });
        }
        // l/lead_i * trail_i  versus  l/lead_j * trail_j
        let mut a = l.clone();
        rewrite(&mut a, &fi.lead, &fi.trail)?;
        let mut b = l;
        rewrite(&mut b, &fj.lead, &fj.trail)?;
        let reducers: Vec<&Marked> = basis.iter().zip(&live).filter(|(_, &l)| l).map(|(g, _)| g).collect();
        if let Some(h) = reduce_pair(a, b, &reducers, order)? {
            add(h, &mut basis, &mut live, &mut queue, &mut pending);
        }
    }

    interreduce(basis, order)
}

/// Minimalises and reduces a Gröbner basis.
fn interreduce(basis: Vec<Marked>, order: &TermOrder) -> Result<Vec<Marked>> {
    let mut minimal: Vec<Marked> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && divides(&h.lead, &g.lead) && (h.lead != g.lead || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<&Marked> =
            minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, h)| h).collect();
        let mut t = g.trail.clone();
        reduce_monomial(&mut t, &others)?;
        debug_assert_eq!(order.cmp_exponents(&g.lead, &t), Ordering::Greater);
        reduced.push(Marked { lead: g.lead.clone(), trail: t });
    }
    Ok(reduced)
}

/// The reduced Gröbner basis of an ideal for one term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    marked: Vec<Marked>,
    elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub(crate) fn from_marked(order: TermOrder, mut marked: Vec<Marked>) -> Self {
        marked.sort_by(|a, b| a.to_binomial().cmp(&b.to_binomial()));
        let elements = marked.iter().map(Marked::to_binomial).collect();
        GroebnerBasis { order, marked, elements }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Elements in canonical form and canonical sort.
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `(lead, trail)` per element, aligned with [`Self::elements`].
    pub fn marked_terms(&self) -> impl Iterator<Item = (Monomial, Monomial)> + '_ {
        self.marked
            .iter()
            .map(|m| (Monomial::new(m.lead.clone()), Monomial::new(m.trail.clone())))
    }

    /// `lead - trail` per element.
    pub fn oriented_vectors(&self) -> Vec<Vec<i64>> {
        self.marked
            .iter()
            .map(|m| m.lead.iter().zip(&m.trail).map(|(&a, &b)| a as i64 - b as i64).collect())
            .collect()
    }

    pub fn leading_terms(&self) -> Vec<Monomial> {
        self.marked.iter().map(|m| Monomial::new(m.lead.clone())).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.leading_terms())
    }

    fn reducers(&self) -> Vec<&Marked> {
        self.marked.iter().collect()
    }

    /// Normal form of a binomial; `None` means it reduces to zero.
    pub fn normal_form(&self, b: &Binomial) -> Result<Option<Binomial>> {
        let m = Marked::from_binomial(b, &self.order);
        Ok(reduce_pair(m.lead, m.trail, &self.reducers(), &self.order)?.map(|m| m.to_binomial()))
    }

    pub fn normal_form_monomial(&self, m: &Monomial) -> Result<Monomial> {
        let mut e = m.exponents().to_vec();
        reduce_monomial(&mut e, &self.reducers())?;
        Ok(Monomial::new(e))
    }

    pub fn contains(&self, b: &Binomial) -> Result<bool> {
        Ok(self.normal_form(b)?.is_none())
    }

    /// A monomial lies in the ideal exactly when its normal form is zero,
    /// which never happens for a pure-difference basis: every binomial
    /// vanishes at the all-ones point while a monomial does not.
    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        self.normal_form_monomial(m).map(|_| false)
    }

    /// Whether `w` strictly prefers every lead term to its trail, i.e. lies
    /// in the open Gröbner cone of this basis.
    pub fn cone_contains(&self, w: &[i64]) -> bool {
        self.marked.iter().all(|m| {
            let d: i128 = m
                .lead
                .iter()
                .zip(&m.trail)
                .zip(w)
                .map(|((&a, &b), &w)| (a as i128 - b as i128) * w as i128)
                .sum();
            d > 0
        })
    }
}

fn check_order(ideal: &BinomialIdeal, order: &TermOrder) -> Result<()> {
    if order.nvars() != ideal.nvars() {
        return Err(Error::DimensionMismatch { expected: ideal.nvars(), found: order.nvars() });
    }
    Ok(())
}

/// The S-pair `lcm/lt(f)·f - lcm/lt(g)·g`, or `None` when it vanishes.
pub fn s_pair(f: &Binomial, g: &Binomial, order: &TermOrder) -> Result<Option<Binomial>> {
    let (mf, mg) = (Marked::from_binomial(f, order), Marked::from_binomial(g, order));
    let l = lcm(&mf.lead, &mg.lead);
    let mut a = l.clone();
    rewrite(&mut a, &mf.lead, &mf.trail)?;
    let mut b = l;
    rewrite(&mut b, &mg.lead, &mg.trail)?;
    if a == b {
        return Ok(None);
    }
    Ok(Some(Binomial::new(Monomial::new(a), Monomial::new(b))?))
}

/// Full normal form of `b` modulo `reducers` (tried in sequence order, the
/// larger term first). `None` is zero.
pub fn reduce(b: &Binomial, reducers: &[Binomial], order: &TermOrder) -> Result<Option<Binomial>> {
    let marked: Vec<Marked> = reducers.iter().map(|g| Marked::from_binomial(g, order)).collect();
    let refs: Vec<&Marked> = marked.iter().collect();
    let m = Marked::from_binomial(b, order);
    Ok(reduce_pair(m.lead, m.trail, &refs, order)?.map(|m| m.to_binomial()))
}

/// The reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger_reduced(ideal: &BinomialIdeal, order: &TermOrder, budget: &Budget) -> Result<GroebnerBasis> {
    check_order(ideal, order)?;
    if ideal.is_empty() {
        return Err(Error::invalid("empty ideal"));
    }
    let grading = ideal.grading().ok();
    let marked = groebner_marked(
        ideal.generators(),
        order,
        budget.spairs,
        grading.as_ref().map(|g| g.weights()),
        None,
    )?;
    Ok(GroebnerBasis::from_marked(order.clone(), marked))
}

/// Membership in `ideal`, decided with the graded reverse lex basis.
pub fn ideal_membership(b: &Binomial, ideal: &BinomialIdeal, budget: &Budget) -> Result<bool> {
    if b.nvars() != ideal.nvars() {
        return Err(Error::DimensionMismatch { expected: ideal.nvars(), found: b.nvars() });
    }
    if ideal.is_empty() {
        return Ok(false);
    }
    buchberger_reduced(ideal, &TermOrder::grevlex(ideal.nvars()), budget)?.contains(b)
}

/// Minimal monomial generators of `in_<(I)`.
pub fn initial_ideal(ideal: &BinomialIdeal, order: &TermOrder, budget: &Budget) -> Result<MonomialIdeal> {
    Ok(buchberger_reduced(ideal, order, budget)?.initial_ideal())
}

/// A minimal generating subset, chosen greedily by increasing degree: an
/// element is kept iff it is not in the ideal of the elements kept before
/// it. Input must be homogeneous for a positive grading.
///
/// Within one degree `d` the test is linear algebra in the degree-`d` piece
/// of `S / (kept elements of lower degree)`: each candidate becomes an edge
/// between the normal forms of its two terms and is redundant exactly when
/// those are already connected.
pub fn minimal_generators(ideal: &BinomialIdeal, budget: &Budget) -> Result<Vec<Binomial>> {
    let grading = ideal.grading()?;
    let w = grading.weights();
    let n = ideal.nvars();
    let order = TermOrder::grevlex(n);

    let mut gens: Vec<(i128, Binomial)> =
        ideal.generators().iter().map(|g| (g.weighted_degree(w), g.clone())).collect();
    gens.sort();

    let mut kept: Vec<Binomial> = Vec::new();
    let mut idx = 0;
    while idx < gens.len() {
        let d = gens[idx].0;
        let end = idx + gens[idx..].iter().take_while(|(e, _)| *e == d).count();
        let lower: Vec<Marked> = if kept.is_empty() {
            Vec::new()
        } else {
            groebner_marked(&kept, &order, budget.spairs, Some(w), Some(d))?
        };
        let reducers: Vec<&Marked> = lower.iter().collect();
        let mut forest = UnionFind::default();
        for (_, g) in &gens[idx..end] {
            let mut p = g.plus().exponents().to_vec();
            let mut q = g.minus().exponents().to_vec();
            reduce_monomial(&mut p, &reducers)?;
            reduce_monomial(&mut q, &reducers)?;
            if p != q && forest.union(p, q) {
                kept.push(g.clone());
            }
        }
        idx = end;
    }
    Ok(canonical_set(kept))
}

#[derive(Default)]
struct UnionFind {
    index: BTreeMap<Vec<Exponent>, usize>,
    parent: Vec<usize>,
}

impl UnionFind {
    fn id(&mut self, key: Vec<Exponent>) -> usize {
        let next = self.parent.len();
        let id = *self.index.entry(key).or_insert(next);
        if id == next {
            self.parent.push(next);
        }
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes; false when already joined.
    fn union(&mut self, a: Vec<Exponent>, b: Vec<Exponent>) -> bool {
        let (a, b) = (self.id(a), self.id(b));
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// `μ`, the minimal number of generators.
pub fn mu(ideal: &BinomialIdeal, budget: &Budget) -> Result<usize> {
    minimal_generators(ideal, budget).map(|g| g.len())
}

/// Compares the marked leads of a basis with a weight vector: `true` when
/// every lead has strictly larger weight than its trail.
pub fn marking_agrees(gb: &GroebnerBasis, weights: &[i64]) -> bool {
    gb.cone_contains(weights)
}
