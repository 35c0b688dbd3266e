//! Graded Betti numbers of monomial ideals.
//!
//! For `b ∈ ℕ^n` the upper Koszul complex is
//! `K^b(I) = {σ ⊆ supp b : x^{b-σ} ∈ I}` and
//! `β_{i,b}(S/I) = dim H̃_{i-2}(K^b(I); ℚ)` for `i ≥ 1`. Nonzero multidegrees
//! lie in the lcm lattice of the generators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::linalg::rank_sparse;
use crate::monomial::{divides, Exponent, Monomial};

/// A monomial ideal by its minimal generators, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes under divisibility. The number of variables is taken
    /// from the generators (zero if there are none).
    pub fn new(generators: Vec<Monomial>) -> Self {
        let n = generators.first().map_or(0, Monomial::len);
        Self::with_nvars(n, generators)
    }

    pub fn with_nvars(nvars: usize, mut generators: Vec<Monomial>) -> Self {
        generators.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        generators.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for g in generators {
            if !min.iter().any(|m| m.divides(&g)) {
                min.push(g);
            }
        }
        min.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        MonomialIdeal { nvars, generators: min }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.contains_exponents(m.exponents())
    }

    fn contains_exponents(&self, e: &[Exponent]) -> bool {
        self.generators.iter().any(|g| divides(g.exponents(), e))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// `I : m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                Monomial::new(g.exponents().iter().zip(m.exponents()).map(|(&a, &b)| a.saturating_sub(b)).collect())
            })
            .collect();
        MonomialIdeal::with_nvars(self.nvars, gens)
    }
}

/// A finite simplicial complex on vertices `0..vertices.len()`, faces stored
/// as bitmasks grouped by size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// The ambient variable behind each vertex.
    pub vertices: Vec<usize>,
    /// `faces[k]` holds the faces with `k` vertices, sorted; empty when the
    /// complex is void.
    pub faces: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    pub fn is_void(&self) -> bool {
        self.faces.first().is_none_or(Vec::is_empty)
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// A vertex joined to every face makes the complex contractible.
    pub fn is_cone(&self) -> bool {
        (0..self.vertices.len()).any(|v| {
            self.faces.iter().enumerate().all(|(size, level)| {
                level.iter().all(|&f| {
                    f >> v & 1 == 1 || self.faces.get(size + 1).is_some_and(|up| up.binary_search(&(f | 1 << v)).is_ok())
                })
            })
        })
    }

    /// `dim H̃_k(Δ; ℚ)` for `k ≥ -1`.
    pub fn reduced_homology(&self, k: isize) -> u64 {
        if k < -1 {
            return 0;
        }
        self.reduced_betti().get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// `dim H̃_k` for `k = -1, 0, …, dim Δ` (entry `k + 1`).
    pub fn reduced_betti(&self) -> Vec<u64> {
        if self.is_void() || self.is_cone() {
            return alloc::vec![0; self.faces.len()];
        }
        let ranks: Vec<usize> = (0..=self.faces.len()).map(|size| self.boundary_rank(size)).collect();
        (0..self.faces.len()).map(|size| (self.faces[size].len() - ranks[size] - ranks[size + 1]) as u64).collect()
    }

    /// Rank of the boundary map from faces with `size` vertices.
    fn boundary_rank(&self, size: usize) -> usize {
        if size == 0 || size >= self.faces.len() {
            return 0;
        }
        let (src, dst) = (&self.faces[size], &self.faces[size - 1]);
        let rows: Vec<Vec<(usize, i64)>> = src
            .iter()
            .map(|&f| {
                let mut row = Vec::with_capacity(size);
                let mut sign = 1;
                for v in 0..64 {
                    if f >> v & 1 == 1 {
                        let j = dst.binary_search(&(f & !(1 << v))).expect("complex is closed under faces");
                        row.push((j, sign));
                        sign = -sign;
                    }
                }
                row.sort_unstable();
                row
            })
            .collect();
        rank_sparse(&rows, dst.len())
    }
}

/// `K^b(I)` on the support of `b`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    if b.len() != ideal.nvars() {
        return Err(Error::DimensionMismatch { expected: ideal.nvars(), found: b.len() });
    }
    let vertices: Vec<usize> = b.support().collect();
    if vertices.len() > 63 {
        return Err(Error::invalid("multidegree support too large"));
    }
    let exps = b.exponents();
    let in_ideal = |mask: u64| {
        let mut e = exps.to_vec();
        for (k, &v) in vertices.iter().enumerate() {
            if mask >> k & 1 == 1 {
                e[v] -= 1;
            }
        }
        ideal.contains_exponents(&e)
    };
    let mut faces: Vec<Vec<u64>> = Vec::new();
    if !in_ideal(0) {
        return Ok(SimplicialComplex { vertices, faces });
    }
    faces.push(alloc::vec![0]);
    loop {
        let last = faces.last().expect("nonempty");
        let mut next = BTreeSet::new();
        for &f in last {
            let top = 64 - f.leading_zeros() as usize;
            // extend only above the highest vertex so each face is built once
            for v in top..vertices.len() {
                let g = f | 1 << v;
                // x^{b-σ} ∈ I is inherited by subsets, so this stays a complex
                if in_ideal(g) {
                    next.insert(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        faces.push(next.into_iter().collect());
    }
    Ok(SimplicialComplex { vertices, faces })
}

/// Graded Betti numbers `β_{i,j}(S/I)` with `j` the total degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, u64), u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            if v != 0 {
                *map.entry(k).or_insert(0) += v;
            }
        }
        BettiTable { entries: map }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u64), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max (j - i)` over nonzero entries.
    pub fn regularity(&self) -> u64 {
        self.entries.keys().map(|&(i, j)| j.saturating_sub(i as u64)).max().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{i,j}` for `i = 0..=pdim`.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = alloc::vec![0; self.projective_dimension() + 1];
        for (&(i, _), &v) in &self.entries {
            t[i] += v;
        }
        t
    }

    /// Coefficients of `Σ_{i,j} (-1)^i β_{i,j} t^j`.
    pub fn alternating_sums(&self) -> BTreeMap<u64, i64> {
        let mut out = BTreeMap::new();
        for (&(i, j), &v) in &self.entries {
            let s = if i % 2 == 0 { v as i64 } else { -(v as i64) };
            *out.entry(j).or_insert(0) += s;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Rows `j - i`, columns `i`, as in Macaulay2's `betti` display.
    pub fn to_text(&self) -> String {
        let pdim = self.projective_dimension();
        let reg = self.regularity();
        let cell = |v: u64| if v == 0 { String::from(".") } else { format!("{v}") };
        let mut grid: Vec<Vec<String>> = Vec::new();
        grid.push(core::iter::once(String::new()).chain((0..=pdim).map(|i| format!("{i}"))).collect());
        grid.push(core::iter::once(String::from("total:")).chain(self.totals().iter().map(|&v| format!("{v}"))).collect());
        for r in 0..=reg {
            let mut row = alloc::vec![format!("{r}:")];
            row.extend((0..=pdim).map(|i| cell(self.get(i, r + i as u64))));
            grid.push(row);
        }
        let ncols = pdim + 2;
        let widths: Vec<usize> = (0..ncols).map(|c| grid.iter().map(|row| row[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &grid {
            let line: Vec<String> = row.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// The lcm lattice of the generators (lcms of all nonempty subsets).
pub fn lcm_lattice(ideal: &MonomialIdeal, limit: u64) -> Result<BTreeSet<Vec<Exponent>>> {
    let gens: Vec<&[Exponent]> = ideal.generators().iter().map(Monomial::exponents).collect();
    let mut all: BTreeSet<Vec<Exponent>> = gens.iter().map(|g| g.to_vec()).collect();
    let mut frontier: Vec<Vec<Exponent>> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &gens {
                if divides(g, m) {
                    continue;
                }
                let l: Vec<Exponent> = m.iter().zip(g.iter()).map(|(&a, &b)| a.max(b)).collect();
                if !all.contains(&l) {
                    if all.len() as u64 >= limit {
                        return Err(Error::BudgetExhausted { what: "multidegree", limit });
                    }
                    all.insert(l.clone());
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    Ok(all)
}

/// Multigraded Betti numbers `β_{i,b}(S/I)`, nonzero entries only.
pub fn multigraded_betti(ideal: &MonomialIdeal, budget: &Budget) -> Result<BTreeMap<(usize, Vec<Exponent>), u64>> {
    let mut out = BTreeMap::new();
    out.insert((0, alloc::vec![0; ideal.nvars()]), 1);
    for b in lcm_lattice(ideal, budget.multidegrees)? {
        let k = upper_koszul_complex(ideal, &Monomial::new(b.clone()))?;
        for (size, h) in k.reduced_betti().into_iter().enumerate() {
            if h > 0 {
                // H̃_{size-1} contributes to β_{size+1}
                out.insert((size + 1, b.clone()), h);
            }
        }
    }
    Ok(out)
}

/// `β_{i,j}(S/I)` for a monomial ideal.
pub fn graded_betti(ideal: &MonomialIdeal, budget: &Budget) -> Result<BettiTable> {
    let multi = multigraded_betti(ideal, budget)?;
    Ok(BettiTable::from_entries(
        multi.into_iter().map(|((i, b), v)| ((i, b.iter().map(|&e| e as u64).sum()), v)),
    ))
}

/// Numerator `K(t)` of the Hilbert series `K(t)/(1-t)^n` of `S/I`, as
/// coefficients by degree. Computed with `K(I + (m)) = K(I) - t^{deg m}·K(I : m)`,
/// which reorganises inclusion–exclusion over generator subsets.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> BTreeMap<u64, i64> {
    let mut poly = numerator_rec(ideal.generators());
    poly.retain(|_, v| *v != 0);
    poly
}

fn numerator_rec(gens: &[Monomial]) -> BTreeMap<u64, i64> {
    let mut out = BTreeMap::new();
    if gens.is_empty() {
        out.insert(0, 1);
        return out;
    }
    if gens.iter().enumerate().all(|(i, g)| gens[i + 1..].iter().all(|h| g.is_coprime(h))) {
        out.insert(0, 1);
        for g in gens {
            let d = g.degree();
            let prev: Vec<(u64, i64)> = out.iter().map(|(&k, &v)| (k, v)).collect();
            for (k, v) in prev {
                *out.entry(k + d).or_insert(0) -= v;
            }
        }
        return out;
    }
    let (m, rest) = gens.split_last().expect("nonempty");
    let base = numerator_rec(rest);
    let colon = MonomialIdeal::with_nvars(m.len(), rest.to_vec()).colon(m);
    let sub = numerator_rec(colon.generators());
    out = base;
    let d = m.degree();
    for (k, v) in sub {
        *out.entry(k + d).or_insert(0) -= v;
    }
    out
}

/// Outcome of comparing Betti tables across initial ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiRobustness {
    pub robust: bool,
    /// Distinct tables, sorted.
    pub tables: Vec<BettiTable>,
    /// One representative initial ideal per distinct table.
    pub witnesses: Vec<MonomialIdeal>,
    pub initial_ideals: usize,
    /// `false` when the initial ideals came from sampling.
    pub exhaustive: bool,
}

/// Groups initial ideals by Betti table.
pub fn betti_robustness(initial_ideals: &[MonomialIdeal], exhaustive: bool, budget: &Budget) -> Result<BettiRobustness> {
    let mut by_table: BTreeMap<BettiTable, MonomialIdeal> = BTreeMap::new();
    for m in initial_ideals {
        let t = graded_betti(m, budget)?;
        by_table.entry(t).or_insert_with(|| m.clone());
    }
    let (tables, witnesses): (Vec<_>, Vec<_>) = by_table.into_iter().unzip();
    Ok(BettiRobustness {
        robust: tables.len() <= 1,
        tables,
        witnesses,
        initial_ideals: initial_ideals.len(),
        exhaustive,
    })
}

/// Where `betti_robustness_check` takes its initial ideals from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitialIdealSource {
    Exhaustive,
    Sample { samples: usize, seed: u64 },
}

/// Betti tables of all (or sampled) initial ideals of a toric ideal.
pub fn betti_robustness_check(
    ideal: &crate::ideal::BinomialIdeal,
    source: InitialIdealSource,
    budget: &Budget,
) -> Result<BettiRobustness> {
    match source {
        InitialIdealSource::Exhaustive => {
            let ideals = crate::fan::enumerate_initial_ideals(ideal, budget)?;
            betti_robustness(&ideals, true, budget)
        }
        InitialIdealSource::Sample { samples, seed } => {
            let ideals = crate::fan::sample_initial_ideals(ideal, samples, seed, budget)?;
            betti_robustness(&ideals, false, budget)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolutionPredicates {
    pub cohen_macaulay: bool,
    pub linear: bool,
    pub squarefree: bool,
}

/// Cohen–Macaulay (`pdim = codim`), linear resolution (all generators of
/// one degree `d` and `β_{i,j} = 0` unless `j = d + i - 1`), squarefree.
pub fn resolution_predicates(table: &BettiTable, ideal: &MonomialIdeal, codim: usize) -> ResolutionPredicates {
    let degrees: BTreeSet<u64> = ideal.generators().iter().map(Monomial::degree).collect();
    let linear = match degrees.iter().next() {
        Some(&d) if degrees.len() == 1 => {
            table.entries().keys().all(|&(i, j)| i == 0 || j + 1 == d + i as u64)
        }
        _ => ideal.is_empty(),
    };
    ResolutionPredicates {
        cohen_macaulay: table.projective_dimension() == codim,
        linear,
        squarefree: ideal.is_squarefree(),
    }
}
