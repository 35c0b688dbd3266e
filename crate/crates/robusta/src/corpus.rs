//! Generated test corpora: monomial matrices with and without a shared
//! variable between an `X_i` and a `Y_j`, and the exhaustive list of small
//! connected sets of irreducible quadrics.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use robusta_core::lattice::{lattice_of, saturate_toric};
use robusta_core::robustness::{irreducible_components, minors_of_monomial_matrix, MonomialMatrix};
use robusta_core::{Binomial, BinomialIdeal, Budget, Monomial, Result, VariableContext};

/// A generated monomial matrix and the gcd planted in it, if any.
#[derive(Debug, Clone)]
pub struct CorpusMatrix {
    pub matrix: MonomialMatrix,
    /// `(i, j)` with `gcd(X_i, Y_j) ≠ 1` by construction (0-based).
    pub planted: Option<(usize, usize)>,
}

/// Fresh variables handed out in order `u1, u2, …`.
struct Fresh(usize);

impl Fresh {
    fn next(&mut self) -> usize {
        self.0 += 1;
        self.0 - 1
    }
}

/// An entry of degree 1 or 2 in fresh variables, multiplied by `shared`.
fn entry(rng: &mut ChaCha8Rng, fresh: &mut Fresh, shared: Option<usize>) -> Vec<(usize, u32)> {
    let mut e = Vec::new();
    let budget = match shared {
        Some(c) => {
            e.push((c, 1));
            rng.gen_range(0..=1)
        }
        None => rng.gen_range(1..=2),
    };
    match budget {
        0 => {}
        1 => e.push((fresh.next(), 1)),
        _ if rng.gen_bool(0.25) => e.push((fresh.next(), 2)),
        _ => {
            e.push((fresh.next(), 1));
            e.push((fresh.next(), 1));
        }
    }
    e
}

fn candidate(rng: &mut ChaCha8Rng, n: usize, plant: bool) -> Result<CorpusMatrix> {
    let mut fresh = Fresh(0);
    let planted = plant.then(|| {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        (i, j, fresh.next())
    });
    let mut rows: [Vec<Vec<(usize, u32)>>; 2] = [Vec::new(), Vec::new()];
    for (r, row) in rows.iter_mut().enumerate() {
        for k in 0..n {
            let shared = planted.and_then(|(i, j, c)| ((r == 0 && k == i) || (r == 1 && k == j)).then_some(c));
            row.push(entry(rng, &mut fresh, shared));
        }
    }
    let nvars = fresh.0;
    let ctx = VariableContext::indexed("u", nvars)?;
    let mono = |e: &Vec<(usize, u32)>| {
        let mut v = vec![0u32; nvars];
        for &(i, d) in e {
            v[i] += d;
        }
        Monomial::new(v)
    };
    let [top, bottom] = rows;
    let matrix = MonomialMatrix::new(ctx, top.iter().map(mono).collect(), bottom.iter().map(mono).collect())?;
    Ok(CorpusMatrix { matrix, planted: planted.map(|(i, j, _)| (i, j)) })
}

/// `per_kind` pairwise-coprime matrices and `per_kind` matrices with a
/// planted `z_ij`, alternating between 3 and 4 columns. Only matrices whose
/// minors are irreducible and homogeneous under some positive grading are
/// kept.
pub fn monomial_matrix_corpus(seed: u64, per_kind: usize) -> Result<Vec<CorpusMatrix>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for plant in [false, true] {
        let mut kept = 0;
        let mut attempts = 0;
        while kept < per_kind {
            attempts += 1;
            if attempts > 1000 * per_kind.max(1) {
                return Err(robusta_core::Error::BudgetExhausted { what: "corpus draw", limit: attempts as u64 });
            }
            let n = if kept % 2 == 0 { 3 } else { 4 };
            let c = candidate(&mut rng, n, plant)?;
            let minors = minors_of_monomial_matrix(&c.matrix)?;
            if !minors.reducible.is_empty() || minors.ideal.grading().is_err() {
                continue;
            }
            out.push(c);
            kept += 1;
        }
    }
    Ok(out)
}

/// A set of quadrics closed under the checks of [`quadratic_exhaustion`].
#[derive(Debug, Clone)]
pub struct QuadricSet {
    pub ideal: BinomialIdeal,
}

type Key = Vec<(Vec<u32>, Vec<u32>)>;

fn permute(e: &[u32], p: &[usize]) -> Vec<u32> {
    let mut out = vec![0; e.len()];
    for (i, &x) in e.iter().enumerate() {
        out[p[i]] = x;
    }
    out
}

fn orient(a: Vec<u32>, b: Vec<u32>) -> (Vec<u32>, Vec<u32>) {
    if a > b {
        (a, b)
    } else {
        (b, a)
    }
}

fn canonical(set: &[(Vec<u32>, Vec<u32>)], perms: &[Vec<usize>]) -> Key {
    perms
        .iter()
        .map(|p| {
            let mut k: Key = set.iter().map(|(a, b)| orient(permute(a, p), permute(b, p))).collect();
            k.sort();
            k
        })
        .min()
        .expect("at least the identity")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Irreducible quadratic binomials in `n` variables, as exponent pairs.
fn irreducible_quadrics(n: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut monomials = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut e = vec![0u32; n];
            e[i] += 1;
            e[j] += 1;
            monomials.push(e);
        }
    }
    let mut out = Vec::new();
    for (k, a) in monomials.iter().enumerate() {
        for b in &monomials[k + 1..] {
            let b = Binomial::new(Monomial::new(a.clone()), Monomial::new(b.clone())).expect("distinct");
            if b.is_irreducible() {
                out.push((b.plus().exponents().to_vec(), b.minus().exponents().to_vec()));
            }
        }
    }
    out
}

/// Every set of at most `max_size` irreducible quadratic pure-difference
/// binomials in at most `max_vars` variables, up to renaming variables,
/// that
///
/// * is connected (one irreducible component),
/// * spans a saturated lattice, and
/// * minimally generates its own toric closure.
///
/// Each ideal lives in the context of the variables it uses.
pub fn quadratic_exhaustion(max_size: usize, max_vars: usize, budget: &Budget) -> Result<Vec<QuadricSet>> {
    let perms = permutations(max_vars);
    let quadrics = irreducible_quadrics(max_vars);
    let mut level: BTreeSet<Key> = BTreeSet::from([Vec::new()]);
    let mut all: BTreeSet<Key> = BTreeSet::new();
    for _ in 0..max_size {
        let next: BTreeSet<Key> = level
            .par_iter()
            .flat_map_iter(|set| {
                quadrics
                    .iter()
                    .filter(|q| !set.contains(q))
                    .map(|q| {
                        let mut s = set.clone();
                        s.push(q.clone());
                        canonical(&s, &perms)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        all.extend(next.iter().cloned());
        level = next;
    }
    let keys: Vec<Key> = all.into_iter().collect();
    let kept: Vec<Option<QuadricSet>> = keys.par_iter().map(|k| admissible(k, budget)).collect::<Result<_>>()?;
    Ok(kept.into_iter().flatten().collect())
}

fn admissible(key: &Key, budget: &Budget) -> Result<Option<QuadricSet>> {
    let n = key[0].0.len();
    let used: Vec<usize> = (0..n).filter(|&i| key.iter().any(|(a, b)| a[i] > 0 || b[i] > 0)).collect();
    let ctx = VariableContext::default_for(n)?.select(&used)?;
    let gens: Vec<Binomial> = key
        .iter()
        .map(|(a, b)| {
            let pick = |e: &Vec<u32>| Monomial::new(used.iter().map(|&i| e[i]).collect());
            Binomial::new(pick(a), pick(b))
        })
        .collect::<Result<_>>()?;
    let f = BinomialIdeal::new(ctx, gens.clone())?;
    if irreducible_components(&f)?.len() != 1 || !lattice_of(&f)?.is_saturated()? {
        return Ok(None);
    }
    let closure = saturate_toric(&f, &robusta_core::Grading::standard(f.nvars()), budget)?;
    let mut mine = gens;
    mine.sort();
    let mut theirs = closure.generators().to_vec();
    theirs.sort();
    Ok((mine == theirs).then_some(QuadricSet { ideal: f }))
}

/// Shuffles generator order deterministically; used by invariance checks.
pub fn shuffled(ideal: &BinomialIdeal, seed: u64) -> Result<BinomialIdeal> {
    let mut gens = ideal.generators().to_vec();
    gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    ideal.with_generators(gens)
}
