//! Acceptance run: one line per criterion.
//!
//! Criterion 1 asks for a Graver basis strictly larger than the four
//! generators. The Graver basis of that lattice has exactly four elements
//! (confirmed by a brute-force search), so the clause cannot hold; it is
//! listed in `EXPECTED_FAILURES` and reported as such. An unexpected pass
//! fails the run just like an unexpected failure.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use robusta::corpus::{monomial_matrix_corpus, quadratic_exhaustion, shuffled};
use robusta::reproduce::{generic_minors, kernel_4x6, lawrence_base, lawrence_ideal, lex_sweep_set};
use robusta_core::betti::{
    betti_robustness_check, graded_betti, hilbert_numerator, multigraded_betti, resolution_predicates,
    InitialIdealSource,
};
use robusta_core::fan::{enumerate_reduced_gbs, enumerate_reduced_gbs_over_cells, lex_orders_sweep};
use robusta_core::graver::{graver_basis, graver_bruteforce};
use robusta_core::groebner::{buchberger_reduced, minimal_generators};
use robusta_core::lattice::{kernel_lattice, lattice_of, lawrence_lift, toric_from_matrix};
use robusta_core::robustness::{
    classify_quadratic, coprimality_criterion, minors_of_monomial_matrix, robust_check, robust_check_with,
    shared_monomials, QuadraticShape,
};
use robusta_core::text::{parse_binomial, parse_ideal};
use robusta_core::{
    Binomial, BinomialIdeal, Budget, IntegerMatrix, Lattice, Monomial, MonomialIdeal, TermOrder, VariableContext,
};

const EXPECTED_FAILURES: &[usize] = &[1];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn set(bs: &[Binomial]) -> BTreeSet<Binomial> {
    bs.iter().cloned().collect()
}

fn criterion_1(b: &Budget) -> Outcome {
    let ctx = e(VariableContext::default_for(6))?;
    let ideal = e(toric_from_matrix(&kernel_4x6(), &ctx, b))?;
    let expected: BTreeSet<Binomial> = ["b^2*e - a^2*f", "b*c^2 - a*d*f", "a*c^2 - b*d*e", "c^4 - d^2*e*f"]
        .iter()
        .map(|s| parse_binomial(&ctx, s))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(set(ideal.generators()) == expected, "generators differ")?;
    let r = e(robust_check(&ideal, b))?;
    ensure(r.robust, "not robust")?;
    ensure(r.mu == 4 && r.ugb_size == 4, format!("mu {} ugb {}", r.mu, r.ugb_size))?;
    let lattice = e(lattice_of(&ideal))?;
    let graver = e(graver_basis(&lattice, b))?;
    let brute = e(graver_bruteforce(&lattice, 8))?;
    ensure(brute.elements() == graver.elements(), "Graver basis disagrees with the box-8 search")?;
    ensure(!r.lawrence_type, "lattice is a Lawrence lifting")?;
    ensure(
        graver.len() > 4,
        format!(
            "generators, robust, ugb = mu = 4 hold; Graver basis has {} elements (box-8 search agrees), not > 4",
            graver.len()
        ),
    )?;
    Ok(format!("graver {}", graver.len()))
}

fn criterion_2(b: &Budget) -> Outcome {
    let mut notes = Vec::new();
    for n in [3, 4, 5] {
        let ideal = e(generic_minors(2, n))?;
        let fan = e(enumerate_reduced_gbs(&ideal, b))?;
        ensure(ideal.len() == n * (n - 1) / 2, "minor count")?;
        ensure(set(&fan.universal_gb()) == set(ideal.generators()), format!("2x{n}: UGB differs from the minors"))?;
        ensure(e(robust_check_with(&ideal, b, false))?.robust, format!("2x{n} not robust"))?;
        notes.push(format!("2x{n} ugb {}", ideal.len()));
    }
    for c in [3, 4] {
        let ideal = e(generic_minors(3, c))?;
        let ugb = e(enumerate_reduced_gbs(&ideal, b))?.universal_gb();
        let minors = set(ideal.generators());
        ensure(minors.is_subset(&set(&ugb)) && ugb.len() > minors.len(), format!("3x{c}: not a strict superset"))?;
        ensure(!e(robust_check_with(&ideal, b, false))?.robust, format!("3x{c} robust"))?;
        if c == 3 {
            // second route: one basis per cell of the Graver arrangement
            let graver = e(graver_basis(&e(lattice_of(&ideal))?, b))?;
            let alt = e(enumerate_reduced_gbs_over_cells(&ideal, &graver.vectors(), b))?;
            ensure(set(&alt.universal_gb()) == set(&ugb), "3x3: arrangement route disagrees")?;
        }
        notes.push(format!("3x{c} ugb {} > {}", ugb.len(), minors.len()));
    }
    Ok(notes.join(", "))
}

fn criterion_3(b: &Budget) -> Outcome {
    let ideal = e(parse_ideal("x y z", &["x - y", "y - z"]))?;
    let fan = e(enumerate_reduced_gbs(&ideal, b))?;
    let ins = fan.initial_ideals();
    ensure(!ins.is_empty() && ins.iter().all(|m| m.len() == 2), "an initial ideal without two generators")?;
    let r = e(robust_check(&ideal, b))?;
    ensure(!r.robust && r.ugb_size == 3 && r.mu == 2, format!("robust {} ugb {}", r.robust, r.ugb_size))?;
    Ok(format!("{} initial ideals with mu 2, ugb 3, not robust", ins.len()))
}

fn criterion_4(b: &Budget) -> Outcome {
    let mut notes = Vec::new();
    let mut non_robust = 0;
    for (name, ideal) in e(lex_sweep_set(b))? {
        ensure(ideal.generators().iter().all(|g| g.degree() == 2), format!("{name}: not quadratic"))?;
        let lex = e(lex_orders_sweep(&ideal, b))?.universal_gb();
        let ugb = e(enumerate_reduced_gbs(&ideal, b))?.universal_gb();
        ensure(set(&lex) == set(&ugb), format!("{name}: lex union {} vs {}", lex.len(), ugb.len()))?;
        if !e(robust_check_with(&ideal, b, false))?.robust {
            non_robust += 1;
        }
        notes.push(format!("{name} {}", ugb.len()));
    }
    ensure(non_robust > 0, "no non-robust ideal in the set")?;
    Ok(notes.join(", "))
}

fn criterion_5(b: &Budget) -> Outcome {
    let corpus = e(monomial_matrix_corpus(robusta::reproduce::CORPUS_SEED, robusta::reproduce::CORPUS_PER_KIND))?;
    ensure(corpus.len() >= 20, "corpus too small")?;
    let planted = corpus.iter().filter(|c| c.planted.is_some()).count();
    ensure(2 * planted == corpus.len(), "corpus is not half planted")?;
    for (k, c) in corpus.iter().enumerate() {
        let a = &c.matrix;
        ensure(matches!(a.columns(), 3 | 4), "matrix width")?;
        ensure(a.top().iter().chain(a.bottom()).all(|m| m.degree() <= 2), "entry degree")?;
        let minors = e(minors_of_monomial_matrix(a))?;
        ensure(minors.reducible.is_empty(), "reducible minor")?;
        // direct gcd scan, independent of the criterion's witness search
        let coprime_direct = (0..a.columns())
            .all(|i| (0..a.columns()).all(|j| i == j || a.top()[i].is_coprime(&a.bottom()[j])));
        ensure(coprime_direct == c.planted.is_none(), format!("instance {k}: planting not visible"))?;
        let crit = e(coprimality_criterion(a))?.is_none();
        let robust = e(robust_check_with(&minors.ideal, b, false))?.robust;
        ensure(robust == crit, format!("instance {k}: robust {robust}, coprime {crit}"))?;
    }
    Ok(format!("{} instances, {planted} planted", corpus.len()))
}

fn criterion_6(b: &Budget) -> Outcome {
    let mut notes = Vec::new();
    for n in [3usize, 4] {
        let ideal = e(generic_minors(2, n))?;
        let ins = e(enumerate_reduced_gbs(&ideal, b))?.initial_ideals();
        let mut tables = BTreeSet::new();
        for m in &ins {
            let t = e(graded_betti(m, b))?;
            let p = resolution_predicates(&t, m, n - 1);
            ensure(m.is_squarefree() && p.squarefree, "initial ideal not squarefree")?;
            ensure(p.linear, "resolution not linear")?;
            ensure(t.projective_dimension() == n - 1 && p.cohen_macaulay, "pdim differs from n - 1")?;
            let alt: BTreeMap<u64, i64> = t.alternating_sums().into_iter().filter(|&(_, v)| v != 0).collect();
            ensure(alt == hilbert_numerator(m), "table contradicts the Hilbert numerator")?;
            tables.insert(t);
        }
        ensure(tables.len() == 1, format!("2x{n}: {} distinct tables", tables.len()))?;
        notes.push(format!("2x{n}: {} initial ideals, one table", ins.len()));
    }
    Ok(notes.join(", "))
}

fn criterion_7(b: &Budget) -> Outcome {
    const SEED: u64 = 1;
    const SAMPLES: usize = 4;
    let lift = lawrence_lift(&e(kernel_lattice(&lawrence_base()))?);
    let ideal = e(lawrence_ideal(b))?;
    let mingens = e(minimal_generators(&ideal, b))?;
    let graver = e(graver_basis(&lift, b))?;
    ensure(set(&mingens) == set(graver.elements()), "mingens differ from the Graver basis")?;
    let r = e(betti_robustness_check(&ideal, InitialIdealSource::Sample { samples: SAMPLES, seed: SEED }, b))?;
    ensure(r.tables.len() >= 2 && !r.robust, "sampled tables agree")?;
    // different tables, same Hilbert series
    let sums: BTreeSet<_> = r.tables.iter().map(|t| t.alternating_sums()).collect();
    ensure(sums.len() == 1, "tables disagree on the Hilbert series")?;
    Ok(format!(
        "mingens = Graver = {}, seed {SEED}, {SAMPLES} weights, {} initial ideals, {} tables",
        graver.len(),
        r.initial_ideals,
        r.tables.len()
    ))
}

// ---- criterion 8 ----

fn random_lattice(rng: &mut ChaCha8Rng) -> Lattice {
    loop {
        let n = rng.gen_range(3..=5);
        let rows = rng.gen_range(1..=2);
        let mut a: Vec<Vec<i64>> = vec![vec![1; n]];
        for _ in 1..rows {
            a.push((0..n).map(|_| rng.gen_range(0..=3)).collect());
        }
        let refs: Vec<&[i64]> = a.iter().map(Vec::as_slice).collect();
        let l = kernel_lattice(&IntegerMatrix::from_rows(&refs).unwrap()).unwrap();
        if l.rank() > 0 {
            return l;
        }
    }
}

fn graver_suite(b: &Budget) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut count = 0;
    while count < 12 {
        let l = random_lattice(&mut rng);
        let graver = e(graver_basis(&l, b))?;
        let bound = if l.ambient() == 5 { 6 } else { 8 };
        let brute = e(graver_bruteforce(&l, bound))?;
        ensure(graver.within_box(bound).elements() == brute.elements(), format!("Graver mismatch on {:?}", l.basis()))?;
        count += 1;
    }
    Ok(count)
}

/// Exact rank by fraction-free elimination.
fn rank_exact(mut m: Vec<Vec<i128>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            for j in c + 1..cols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    r
}

/// Multigraded Betti numbers from the Taylor complex: in degree `b` the
/// complex of subsets with lcm exactly `b`.
fn taylor_betti(gens: &[Monomial]) -> BTreeMap<(usize, Vec<u32>), u64> {
    let k = gens.len();
    let lcm = |s: usize| -> Vec<u32> {
        let mut v = vec![0u32; gens[0].len()];
        for (i, g) in gens.iter().enumerate() {
            if s >> i & 1 == 1 {
                for (x, &y) in v.iter_mut().zip(g.exponents()) {
                    *x = (*x).max(y);
                }
            }
        }
        v
    };
    let mut by_degree: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for s in 0..1usize << k {
        by_degree.entry(lcm(s)).or_default().push(s);
    }
    let mut out = BTreeMap::new();
    for (deg, subsets) in by_degree {
        let size = |s: &usize| s.count_ones() as usize;
        let max = subsets.iter().map(size).max().unwrap();
        let level = |d: usize| -> Vec<usize> { subsets.iter().copied().filter(|s| size(s) == d).collect() };
        let boundary_rank = |d: usize| -> usize {
            if d == 0 {
                return 0;
            }
            let (hi, lo) = (level(d), level(d - 1));
            if hi.is_empty() || lo.is_empty() {
                return 0;
            }
            let m: Vec<Vec<i128>> = hi
                .iter()
                .map(|&s| {
                    lo.iter()
                        .map(|&t| {
                            if t & s != t {
                                return 0;
                            }
                            let gone = (s ^ t).trailing_zeros();
                            if (s & ((1 << gone) - 1)).count_ones() % 2 == 0 {
                                1
                            } else {
                                -1
                            }
                        })
                        .collect()
                })
                .collect();
            rank_exact(m)
        };
        let ranks: Vec<usize> = (0..=max + 1).map(boundary_rank).collect();
        for d in 0..=max {
            let h = level(d).len() - ranks[d] - ranks[d + 1];
            if h > 0 {
                out.insert((d, deg.clone()), h as u64);
            }
        }
    }
    out
}

fn taylor_suite(b: &Budget) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(80);
    let mut count = 0;
    while count < 12 {
        let k = rng.gen_range(2..=6);
        let gens: Vec<Monomial> =
            (0..k).map(|_| Monomial::new((0..4).map(|_| rng.gen_range(0..=2)).collect())).filter(|m| !m.is_one()).collect();
        let ideal = MonomialIdeal::with_nvars(4, gens);
        if ideal.is_empty() {
            continue;
        }
        let ours = e(multigraded_betti(&ideal, b))?;
        let taylor = taylor_betti(ideal.generators());
        ensure(ours == taylor, format!("Betti numbers differ from the Taylor complex for {:?}", ideal.generators()))?;
        count += 1;
    }
    Ok(count)
}

fn gb_suite(b: &Budget, robust_seen: &mut Vec<BinomialIdeal>) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(800);
    let mut count = 0;
    while count < 24 {
        let l = random_lattice(&mut rng);
        let ctx = e(VariableContext::default_for(l.ambient()))?;
        let ideal = e(robusta_core::lattice::toric_from_lattice(&l, &ctx, b))?;
        let n = ideal.nvars();
        let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=50)).collect();
        let orders = [TermOrder::grevlex(n), TermOrder::lex(n), e(TermOrder::weight(weights, TermOrder::grevlex(n)))?];
        for order in &orders {
            let g = e(buchberger_reduced(&ideal, order, b))?;
            let again = e(buchberger_reduced(&e(shuffled(&ideal, count as u64))?, order, b))?;
            ensure(g.elements() == again.elements(), "reduced basis depends on generator order")?;
            let idem = e(buchberger_reduced(&e(ideal.with_generators(g.elements().to_vec()))?, order, b))?;
            ensure(idem.elements() == g.elements(), "reduced basis is not idempotent")?;
        }
        if e(robust_check_with(&ideal, b, false))?.robust {
            robust_seen.push(ideal);
        }
        count += 1;
    }
    Ok(count)
}

fn robust_properties(ideal: &BinomialIdeal, b: &Budget) -> Result<(), String> {
    let r = e(robust_check_with(ideal, b, false))?;
    ensure(r.robust, "instance is not robust")?;
    ensure(shared_monomials(&r.universal_gb).is_empty(), "robust basis with a shared monomial")?;
    let f = e(ideal.with_generators(r.minimal_generators.clone()))?;
    for k in 1..f.nvars() {
        let part = e(f.restrict_to_variables(k))?;
        if !part.is_empty() {
            ensure(e(robust_check_with(&part, b, false))?.robust, format!("restriction to {k} variables not robust"))?;
        }
    }
    Ok(())
}

fn criterion_8(b: &Budget) -> Outcome {
    let graver = graver_suite(b)?;
    let taylor = taylor_suite(b)?;
    let mut robust = Vec::new();
    let gb = gb_suite(b, &mut robust)?;
    let ctx = e(VariableContext::default_for(6))?;
    robust.push(e(toric_from_matrix(&kernel_4x6(), &ctx, b))?);
    for n in [3, 4, 5] {
        robust.push(e(generic_minors(2, n))?);
    }
    for c in e(monomial_matrix_corpus(robusta::reproduce::CORPUS_SEED, robusta::reproduce::CORPUS_PER_KIND))? {
        if c.planted.is_none() {
            robust.push(e(minors_of_monomial_matrix(&c.matrix))?.ideal);
        }
    }
    for q in e(quadratic_exhaustion(3, 5, b))? {
        if e(robust_check_with(&q.ideal, b, false))?.robust {
            robust.push(q.ideal);
        }
    }
    for ideal in &robust {
        robust_properties(ideal, b)?;
    }
    Ok(format!(
        "graver {graver} lattices, taylor {taylor} ideals, reduced bases {gb} ideals, {} robust instances",
        robust.len()
    ))
}

fn criterion_9(b: &Budget) -> Outcome {
    let sets = e(quadratic_exhaustion(3, 5, b))?;
    ensure(!sets.is_empty(), "no sets")?;
    let mut robust = 0;
    for s in &sets {
        ensure(s.ideal.len() <= 3 && s.ideal.nvars() <= 5, "set out of range")?;
        let r = e(robust_check_with(&s.ideal, b, false))?.robust;
        let shaped = !matches!(e(classify_quadratic(&s.ideal))?, QuadraticShape::NotRobustShape);
        ensure(r == shaped, format!("robust {r} but classification {shaped}"))?;
        robust += usize::from(r);
    }
    // no 2xn minors fit in five variables; check that branch directly
    for n in [3, 4] {
        let ideal = e(shuffled(&e(generic_minors(2, n))?, n as u64))?;
        let r = e(robust_check_with(&ideal, b, false))?.robust;
        let shape = e(classify_quadratic(&ideal))?;
        ensure(r && matches!(shape, QuadraticShape::DeterminantalTwoByN { .. }), format!("2x{n} minors misclassified"))?;
    }
    Ok(format!("{} sets, {robust} robust; 2x3 and 2x4 minors classified", sets.len()))
}

fn main() -> ExitCode {
    let budget = Budget::default();
    let criteria: [(&str, fn(&Budget) -> Outcome); 9] = [
        ("4x6 kernel: generators, robustness, Graver size", criterion_1),
        ("generic minors: universal exactly for two rows", criterion_2),
        ("two linear forms: mu 2 everywhere, not robust", criterion_3),
        ("lex orders reach the universal basis", criterion_4),
        ("monomial matrices: robust iff coprime", criterion_5),
        ("2xn minors: one linear squarefree table", criterion_6),
        ("Lawrence ideal: tables differ under sampling", criterion_7),
        ("property suites", criterion_8),
        ("quadric sets: robust iff classified", criterion_9),
    ];
    let mut ok = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        let t = Instant::now();
        let outcome = f(&budget);
        let secs = t.elapsed().as_secs_f64();
        let expected_fail = EXPECTED_FAILURES.contains(&n);
        let (status, detail) = match (&outcome, expected_fail) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Err(d), false) => {
                ok = false;
                ("FAIL", d.clone())
            }
            (Err(d), true) => ("FAIL (expected)", d.clone()),
            (Ok(d), true) => {
                ok = false;
                ("PASS (unexpected)", d.clone())
            }
        };
        println!("criterion {n}: {status} [{secs:.1}s] {name}: {detail}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
