//! Reference computations with stored expected results.
//!
//! Each check produces a JSON value; `reproduce-paper` compares it with the
//! file of the same name under `golden/v1`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use robusta_core::betti::{resolution_predicates, MonomialIdeal};
use robusta_core::fan::{enumerate_reduced_gbs, lex_orders_sweep, sample_reduced_gbs};
use robusta_core::graver::graver_basis;
use robusta_core::groebner::minimal_generators;
use robusta_core::lattice::{kernel_lattice, lattice_of, lawrence_lift, toric_from_lattice, toric_from_matrix};
use robusta_core::robustness::{classify_quadratic, coprimality_criterion, minors_of_monomial_matrix, robust_check, robust_check_with, QuadraticShape};
use robusta_core::text::parse_ideal;
use robusta_core::{Binomial, BinomialIdeal, Budget, IntegerMatrix, Monomial, Result, VariableContext};
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{monomial_matrix_corpus, quadratic_exhaustion};
use crate::formats::write_monomial_matrix;
use crate::parallel;
use crate::report::SCHEMA;

/// Seed and sample count for the sampled Betti comparison.
pub const LAWRENCE_SEED: u64 = 1;
pub const LAWRENCE_SAMPLES: usize = 8;
/// Seed and size of the monomial-matrix corpus.
pub const CORPUS_SEED: u64 = 2024;
pub const CORPUS_PER_KIND: usize = 12;

pub struct CheckResult {
    pub name: &'static str,
    pub description: &'static str,
    pub value: Value,
    pub seconds: f64,
}

/// Golden files compiled into the binary.
pub const GOLDEN: &[(&str, &str)] = &[
    ("kernel-4x6", include_str!("../golden/v1/kernel-4x6.json")),
    ("two-linear-forms", include_str!("../golden/v1/two-linear-forms.json")),
    ("generic-minors", include_str!("../golden/v1/generic-minors.json")),
    ("lex-sweep", include_str!("../golden/v1/lex-sweep.json")),
    ("determinantal-betti", include_str!("../golden/v1/determinantal-betti.json")),
    ("lawrence-betti", include_str!("../golden/v1/lawrence-betti.json")),
    ("monomial-matrices", include_str!("../golden/v1/monomial-matrices.json")),
    ("quadric-sets", include_str!("../golden/v1/quadric-sets.json")),
];

fn texts(ctx: &VariableContext, bs: &[Binomial]) -> Vec<String> {
    bs.iter().map(|b| b.display(ctx).to_string()).collect()
}

fn monomials(ctx: &VariableContext, m: &MonomialIdeal) -> Vec<String> {
    m.generators().iter().map(|g| g.display(ctx).to_string()).collect()
}

/// The 2×2 minors of a generic `r × c` matrix in variables `x11, x12, …`.
pub fn generic_minors(r: usize, c: usize) -> Result<BinomialIdeal> {
    let names: Vec<String> = (1..=r).flat_map(|i| (1..=c).map(move |j| format!("x{i}{j}"))).collect();
    let ctx = VariableContext::new(names)?;
    let n = r * c;
    let var = |i: usize, j: usize| i * c + j;
    let mut gens = Vec::new();
    for i in 0..r {
        for k in i + 1..r {
            for j in 0..c {
                for l in j + 1..c {
                    let mut a = vec![0u32; n];
                    let mut b = vec![0u32; n];
                    a[var(i, j)] += 1;
                    a[var(k, l)] += 1;
                    b[var(i, l)] += 1;
                    b[var(k, j)] += 1;
                    gens.push(Binomial::new(Monomial::new(a), Monomial::new(b))?);
                }
            }
        }
    }
    BinomialIdeal::new(ctx, gens)
}

/// The 4×6 matrix whose kernel gives a robust toric ideal with four
/// generators in `a, …, f`.
pub fn kernel_4x6() -> IntegerMatrix {
    IntegerMatrix::from_rows(&[&[1, 1, 1, 1, 1, 1], &[1, 1, 0, 0, 0, 0], &[0, 0, 1, 2, 0, 0], &[1, 0, 1, 0, 3, 1]])
        .expect("rectangular")
}

/// The 2×5 matrix whose kernel is lifted to a Lawrence ideal in 10 variables.
pub fn lawrence_base() -> IntegerMatrix {
    IntegerMatrix::from_rows(&[&[1, 1, 1, 1, 1], &[0, 1, 2, 7, 8]]).expect("rectangular")
}

/// Toric ideal of the Lawrence lifting of `kernel(lawrence_base())`.
pub fn lawrence_ideal(budget: &Budget) -> Result<BinomialIdeal> {
    let l = kernel_lattice(&lawrence_base())?;
    toric_from_lattice(&lawrence_lift(&l), &VariableContext::lawrence(5)?, budget)
}

fn check_kernel_4x6(budget: &Budget) -> Result<Value> {
    let ctx = VariableContext::default_for(6)?;
    let ideal = toric_from_matrix(&kernel_4x6(), &ctx, budget)?;
    let r = robust_check(&ideal, budget)?;
    let graver = graver_basis(&lattice_of(&ideal)?, budget)?;
    Ok(json!({
        "minimal_generators": texts(&ctx, &r.minimal_generators),
        "robust": r.robust,
        "mu": r.mu,
        "ugb_size": r.ugb_size,
        "graver_size": r.graver_size,
        "graver": texts(&ctx, graver.elements()),
        "lawrence_like": r.lawrence_like,
        "lawrence_type": r.lawrence_type,
    }))
}

fn check_two_linear_forms(budget: &Budget) -> Result<Value> {
    let ideal = parse_ideal("x y z", &["x - y", "y - z"])?;
    let ctx = ideal.context().clone();
    let fan = enumerate_reduced_gbs(&ideal, budget)?;
    let r = robust_check(&ideal, budget)?;
    let ins: Vec<Value> = fan
        .initial_ideals()
        .iter()
        .map(|m| json!({"generators": monomials(&ctx, m), "mu": m.len()}))
        .collect();
    Ok(json!({
        "initial_ideals": ins,
        "universal_gb": texts(&ctx, &r.universal_gb),
        "mu": r.mu,
        "robust": r.robust,
    }))
}

fn check_generic_minors(budget: &Budget) -> Result<Value> {
    let shapes = [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4)];
    let rows: Vec<Value> = shapes
        .par_iter()
        .map(|&(r, c)| {
            let ideal = generic_minors(r, c)?;
            let rep = robust_check_with(&ideal, budget, false)?;
            let minors: BTreeSet<&Binomial> = ideal.generators().iter().collect();
            let ugb: BTreeSet<&Binomial> = rep.universal_gb.iter().collect();
            Ok(json!({
                "shape": format!("{r}x{c}"),
                "minors": ideal.len(),
                "ugb_size": rep.ugb_size,
                "ugb_contains_minors": minors.is_subset(&ugb),
                "reduced_gbs": rep.reduced_gbs,
                "robust": rep.robust,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(Value::Array(rows))
}

/// Quadratic toric ideals with at most 8 variables for the lex sweep.
pub fn lex_sweep_set(budget: &Budget) -> Result<Vec<(&'static str, BinomialIdeal)>> {
    let hankel = |c: usize| -> Result<BinomialIdeal> {
        let a = IntegerMatrix::from_rows(&[&vec![1; c + 1], &(0..=c as i64).collect::<Vec<_>>()])?;
        toric_from_matrix(&a, &VariableContext::default_for(c + 1)?, budget)
    };
    let cube: Vec<Vec<i64>> = (0..6i64)
        .map(|r| (0..8i64).map(|v| i64::from((v >> (r / 2)) & 1 == r % 2)).collect())
        .collect();
    let segre = IntegerMatrix::from_rows(&cube.iter().map(Vec::as_slice).collect::<Vec<_>>())?;
    Ok(vec![
        ("2x3 minors", generic_minors(2, 3)?),
        ("2x4 minors", generic_minors(2, 4)?),
        ("rational normal curve, degree 3", hankel(3)?),
        ("rational normal curve, degree 4", hankel(4)?),
        ("2x2x2 Segre", toric_from_matrix(&segre, &VariableContext::default_for(8)?, budget)?),
    ])
}

fn check_lex_sweep(budget: &Budget) -> Result<Value> {
    let set = lex_sweep_set(budget)?;
    let rows: Vec<Value> = set
        .par_iter()
        .map(|(name, ideal)| {
            let lex = lex_orders_sweep(ideal, budget)?;
            let fan = enumerate_reduced_gbs(ideal, budget)?;
            let rep = robust_check_with(ideal, budget, false)?;
            Ok(json!({
                "ideal": name,
                "generators": texts(ideal.context(), ideal.generators()),
                "lex_union": lex.universal_gb().len(),
                "universal_gb": fan.universal_gb().len(),
                "equal": lex.universal_gb() == fan.universal_gb(),
                "robust": rep.robust,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(Value::Array(rows))
}

fn check_determinantal_betti(budget: &Budget) -> Result<Value> {
    let rows: Vec<Value> = [3usize, 4]
        .iter()
        .map(|&n| {
            let ideal = generic_minors(2, n)?;
            let ins = enumerate_reduced_gbs(&ideal, budget)?.initial_ideals();
            let tables: Vec<_> = ins.par_iter().map(|m| parallel::graded_betti(m, budget)).collect::<Result<_>>()?;
            let distinct: BTreeSet<_> = tables.iter().collect();
            let preds: Vec<_> = tables.iter().zip(&ins).map(|(t, m)| resolution_predicates(t, m, n - 1)).collect();
            Ok(json!({
                "shape": format!("2x{n}"),
                "initial_ideals": ins.len(),
                "distinct_tables": distinct.len(),
                "totals": tables[0].totals(),
                "table": tables[0].to_text(),
                "all_squarefree": preds.iter().all(|p| p.squarefree),
                "all_linear": preds.iter().all(|p| p.linear),
                "all_cohen_macaulay": preds.iter().all(|p| p.cohen_macaulay),
                "projective_dimension": tables[0].projective_dimension(),
            }))
        })
        .collect::<Result<_>>()?;
    Ok(Value::Array(rows))
}

fn check_lawrence_betti(budget: &Budget) -> Result<Value> {
    let lift = lawrence_lift(&kernel_lattice(&lawrence_base())?);
    let ideal = lawrence_ideal(budget)?;
    let mingens = minimal_generators(&ideal, budget)?;
    let graver = graver_basis(&lift, budget)?;
    let fan = sample_reduced_gbs(&ideal, LAWRENCE_SAMPLES, LAWRENCE_SEED, budget)?;
    let r = parallel::betti_robustness(&fan.initial_ideals(), false, budget)?;
    Ok(json!({
        "variables": ideal.nvars(),
        "lattice_rank": lift.rank(),
        "mu": mingens.len(),
        "graver_size": graver.len(),
        "mingens_equal_graver": graver.elements() == mingens.as_slice(),
        "samples": LAWRENCE_SAMPLES,
        "seed": LAWRENCE_SEED,
        "initial_ideals": fan.initial_ideals().len(),
        "distinct_tables": r.tables.len(),
        "table_totals": r.tables.iter().map(|t| t.totals()).collect::<Vec<_>>(),
        "robust_betti": r.robust,
    }))
}

fn check_monomial_matrices(budget: &Budget) -> Result<Value> {
    let corpus = monomial_matrix_corpus(CORPUS_SEED, CORPUS_PER_KIND)?;
    let rows: Vec<Value> = corpus
        .par_iter()
        .map(|c| {
            let minors = minors_of_monomial_matrix(&c.matrix)?;
            let rep = robust_check_with(&minors.ideal, budget, false)?;
            let w = coprimality_criterion(&c.matrix)?;
            Ok(json!({
                "matrix": write_monomial_matrix(&c.matrix),
                "planted": c.planted.map(|(i, j)| [i + 1, j + 1]),
                "coprime": w.is_none(),
                "witness": w.map(|w| w.describe(c.matrix.context())),
                "robust": rep.robust,
                "agrees": rep.robust == c.planted.is_none() && rep.robust == (minors.reducible.is_empty() && coprimality_criterion(&c.matrix)?.is_none()),
            }))
        })
        .collect::<Result<_>>()?;
    let agree = rows.iter().filter(|r| r["agrees"] == true).count();
    Ok(json!({"seed": CORPUS_SEED, "instances": rows.len(), "agreements": agree, "matrices": rows}))
}

fn shape_name(s: &QuadraticShape) -> String {
    match s {
        QuadraticShape::Singleton => "singleton".into(),
        QuadraticShape::DeterminantalTwoByN { n, .. } => format!("2x{n} minors"),
        QuadraticShape::NotRobustShape => "other".into(),
    }
}

fn check_quadric_sets(budget: &Budget) -> Result<Value> {
    let sets = quadratic_exhaustion(3, 5, budget)?;
    let rows: Vec<Value> = sets
        .par_iter()
        .map(|s| {
            let rep = robust_check_with(&s.ideal, budget, false)?;
            let shape = classify_quadratic(&s.ideal)?;
            let matches = !matches!(shape, QuadraticShape::NotRobustShape);
            Ok(json!({
                "generators": texts(s.ideal.context(), s.ideal.generators()),
                "robust": rep.robust,
                "shape": shape_name(&shape),
                "agrees": rep.robust == matches,
            }))
        })
        .collect::<Result<_>>()?;
    let agree = rows.iter().filter(|r| r["agrees"] == true).count();
    let robust = rows.iter().filter(|r| r["robust"] == true).count();
    Ok(json!({"sets": rows.len(), "robust": robust, "agreements": agree, "details": rows}))
}

type CheckFn = fn(&Budget) -> Result<Value>;

const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("kernel-4x6", "toric ideal of a 4x6 kernel: four generators, robust", check_kernel_4x6),
    ("two-linear-forms", "(x-y, y-z): every initial ideal has two generators, not robust", check_two_linear_forms),
    ("generic-minors", "2x2 minors are universal exactly for two rows", check_generic_minors),
    ("lex-sweep", "lex orders reach the universal basis of quadratic toric ideals", check_lex_sweep),
    ("determinantal-betti", "initial ideals of 2xn minors share one linear table", check_determinantal_betti),
    ("lawrence-betti", "a Lawrence ideal with initial ideals of different tables", check_lawrence_betti),
    ("monomial-matrices", "minors of monomial matrices: robust iff entries coprime", check_monomial_matrices),
    ("quadric-sets", "connected quadric sets: robust iff singleton or 2xn minors", check_quadric_sets),
];

pub fn run_all(budget: &Budget) -> Result<Vec<CheckResult>> {
    CHECKS
        .iter()
        .map(|&(name, description, f)| {
            let t = Instant::now();
            let value = f(budget)?;
            Ok(CheckResult { name, description, value, seconds: t.elapsed().as_secs_f64() })
        })
        .collect()
}

pub fn golden(name: &str) -> Option<Value> {
    GOLDEN.iter().find(|g| g.0 == name).map(|g| serde_json::from_str(g.1).expect("golden files are valid JSON"))
}

pub fn write_golden(dir: &Path, results: &[CheckResult]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for r in results {
        let mut s = serde_json::to_string_pretty(&r.value).expect("serialisable");
        s.push('\n');
        std::fs::write(dir.join(format!("{}.json", r.name)), s)?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct SummaryRow {
    pub name: &'static str,
    pub description: &'static str,
    pub status: &'static str,
    #[serde(skip)]
    pub seconds: f64,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub schema: &'static str,
    pub kind: &'static str,
    pub all_match: bool,
    pub checks: Vec<SummaryRow>,
}

pub fn summary(results: &[CheckResult], compare: bool) -> Summary {
    let checks: Vec<SummaryRow> = results
        .iter()
        .map(|r| {
            let status = if !compare {
                "written"
            } else {
                match golden(r.name) {
                    Some(g) if g == r.value => "match",
                    Some(_) => "mismatch",
                    None => "missing",
                }
            };
            SummaryRow { name: r.name, description: r.description, status, seconds: r.seconds }
        })
        .collect();
    let all_match = checks.iter().all(|c| c.status == "match" || c.status == "written");
    Summary { schema: SCHEMA, kind: "reproduce", all_match, checks }
}

impl Summary {
    pub fn text(&self) -> String {
        let w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(s, "{:<w$}  {:<8}  {:>7.2}s  {}", c.name, c.status, c.seconds, c.description);
        }
        let _ = writeln!(s, "{}", if self.all_match { "all checks match" } else { "MISMATCH" });
        s
    }
}
