//! Command-line interface.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use robusta_core::betti::resolution_predicates;
use robusta_core::fan::{enumerate_reduced_gbs, enumerate_reduced_gbs_over_cells, lex_orders_sweep, sample_reduced_gbs};
use robusta_core::graver::{graver_basis, graver_bruteforce};
use robusta_core::lattice::{kernel_lattice, lattice_of, toric_from_matrix};
use robusta_core::robustness::{coprimality_criterion, minors_of_monomial_matrix, robust_check_with};
use robusta_core::{BinomialIdeal, Budget, Error};

use crate::budget::budget_from_env;
use crate::formats::{self, FormatError};
use crate::parallel;
use crate::report::{
    to_json, BettiJson, BettiRobustnessJson, BruteforceJson, CoprimalityJson, GraverJson, IdealJson, RobustnessJson,
    UgbJson,
};
use crate::reproduce;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for unreadable or invalid input.
pub const EXIT_INVALID: i32 = 1;
/// Exit status when a resource budget runs out.
pub const EXIT_BUDGET: i32 = 2;
/// Exit status when `reproduce-paper` finds a mismatch with a golden file.
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "robusta", version, about = "Robustness, Graver and universal Groebner bases, and Betti tables of toric ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,

    /// S-pair budget per Groebner basis computation.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub spairs: Option<u64>,

    /// Cell budget per fan enumeration.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub cells: Option<u64>,

    /// Multidegree budget per Betti table.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub multidegrees: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Exhaustive refinement of the weight space.
    Cells,
    /// Exhaustive walk over the cells of the full Graver arrangement.
    Arrangement,
    /// All lexicographic orders.
    Lex,
    /// Seeded random weights.
    Sample,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct IdealSource {
    /// Binomial ideal file (`vars:` line, one binomial per line).
    #[arg(long)]
    pub ideal: Option<PathBuf>,
    /// Integer matrix file; its toric ideal is used.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Toric ideal of the integer kernel of a matrix.
    Toric {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Graver basis of a lattice.
    Graver {
        #[command(flatten)]
        source: IdealSource,
        /// Also run the brute-force box enumeration and compare.
        #[arg(long)]
        bruteforce: bool,
        /// Coordinate bound for --bruteforce.
        #[arg(long = "box", default_value_t = 6)]
        bound: i64,
    },
    /// Reduced Groebner bases, universal Groebner basis and initial ideals.
    Ugb {
        #[command(flatten)]
        source: IdealSource,
        #[arg(long, value_enum, default_value_t = Mode::Cells)]
        mode: Mode,
        /// Number of weight samples in sample mode.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed for sample mode.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decide whether the universal Groebner basis generates minimally.
    Robust {
        /// Binomial ideal file.
        #[arg(long, group = "input")]
        ideal: Option<PathBuf>,
        /// Integer matrix file.
        #[arg(long, group = "input")]
        matrix: Option<PathBuf>,
        /// 2 x n monomial matrix file; its 2 x 2 minors are checked.
        #[arg(long = "monomial-matrix", group = "input")]
        monomial_matrix: Option<PathBuf>,
        /// Skip the Graver basis.
        #[arg(long)]
        no_graver: bool,
    },
    /// Graded Betti numbers of a monomial ideal, or of all initial ideals.
    Betti {
        /// Monomial ideal file (one monomial per line).
        #[arg(long = "monomial-ideal", group = "input")]
        monomial_ideal: Option<PathBuf>,
        /// Binomial ideal file; requires --all-orders.
        #[arg(long, group = "input", requires = "all_orders")]
        ideal: Option<PathBuf>,
        /// Integer matrix file; requires --all-orders.
        #[arg(long, group = "input", requires = "all_orders")]
        matrix: Option<PathBuf>,
        /// Compare the tables of all initial ideals.
        #[arg(long)]
        all_orders: bool,
        /// Sample this many weights instead of enumerating.
        #[arg(long, requires = "seed")]
        sample: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Codimension for the Cohen-Macaulay predicate.
        #[arg(long)]
        codim: Option<usize>,
    },
    /// Rerun the reference computations and compare with the stored results.
    ReproducePaper {
        /// Write the computed results to this directory instead of comparing.
        #[arg(long)]
        write_golden: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            CliError::Budget(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Core(c) | FormatError::Algebra { source: c, .. } if c.is_budget() => CliError::Budget(c.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, CliError> {
    r.map_err(|e| match CliError::from(e) {
        CliError::Invalid(m) => CliError::Invalid(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Budget from defaults, the environment, then flags.
pub fn budget(cli: &Cli) -> Result<Budget, CliError> {
    let mut b = budget_from_env().map_err(CliError::Invalid)?;
    if let Some(n) = cli.spairs {
        b.spairs = n;
    }
    if let Some(n) = cli.cells {
        b.cells = n;
    }
    if let Some(n) = cli.multidegrees {
        b.multidegrees = n;
    }
    Ok(b)
}

fn load_ideal(source: &IdealSource, budget: &Budget) -> Result<BinomialIdeal, CliError> {
    match (&source.ideal, &source.matrix) {
        (Some(p), _) => Ok(in_file(p, formats::parse_ideal(&read(p)?))?.ideal),
        (_, Some(p)) => matrix_ideal(p, budget),
        _ => Err(CliError::Invalid("an input file is required".into())),
    }
}

fn matrix_ideal(p: &Path, budget: &Budget) -> Result<BinomialIdeal, CliError> {
    let m = in_file(p, formats::parse_matrix(&read(p)?))?;
    Ok(toric_from_matrix(&m.matrix, &m.context, budget)?)
}

/// Runs a parsed command line and returns what it prints on success.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let budget = budget(cli)?;
    let threads = cli.threads.map(|t| t as usize);
    parallel::with_threads(threads, || dispatch(cli, &budget))
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => to_json(value),
        Format::Text => text(),
    }
}

fn dispatch(cli: &Cli, budget: &Budget) -> Result<String, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Toric { matrix } => {
            let m = in_file(matrix, formats::parse_matrix(&read(matrix)?))?;
            let l = kernel_lattice(&m.matrix)?;
            let ideal = toric_from_matrix(&m.matrix, &m.context, budget)?;
            let doc = IdealJson::new(&ideal, None);
            Ok(emit(f, &doc, || format!("# kernel rank {}\n{}", l.rank(), formats::write_ideal(&ideal))))
        }
        Command::Graver { source, bruteforce, bound } => {
            let (ctx, lattice) = match (&source.ideal, &source.matrix) {
                (Some(p), _) => {
                    let i = in_file(p, formats::parse_ideal(&read(p)?))?.ideal;
                    (i.context().clone(), lattice_of(&i)?)
                }
                (_, Some(p)) => {
                    let m = in_file(p, formats::parse_matrix(&read(p)?))?;
                    (m.context, kernel_lattice(&m.matrix)?)
                }
                _ => return Err(CliError::Invalid("an input file is required".into())),
            };
            let g = graver_basis(&lattice, budget)?;
            let bf = if *bruteforce {
                let b = graver_bruteforce(&lattice, *bound)?;
                Some(BruteforceJson { bound: *bound, size: b.len(), agrees: b == g.within_box(*bound) })
            } else {
                None
            };
            let doc = GraverJson::new(&ctx, &g, bf);
            Ok(emit(f, &doc, || doc.text()))
        }
        Command::Ugb { source, mode, samples, seed } => {
            let ideal = load_ideal(source, budget)?;
            let (name, fan) = match mode {
                Mode::Cells => ("cells", enumerate_reduced_gbs(&ideal, budget)?),
                Mode::Arrangement => {
                    let g = graver_basis(&lattice_of(&ideal)?, budget)?;
                    ("arrangement", enumerate_reduced_gbs_over_cells(&ideal, &g.vectors(), budget)?)
                }
                Mode::Lex => ("lex", lex_orders_sweep(&ideal, budget)?),
                Mode::Sample => {
                    let seed = seed.ok_or_else(|| CliError::Invalid("--mode sample requires --seed".into()))?;
                    ("sample", sample_reduced_gbs(&ideal, *samples, seed, budget)?)
                }
            };
            let doc = UgbJson::new(name, ideal.context(), &fan);
            Ok(emit(f, &doc, || doc.text()))
        }
        Command::Robust { ideal, matrix, monomial_matrix, no_graver } => {
            let (ideal, criterion) = match (ideal, matrix, monomial_matrix) {
                (Some(p), _, _) => (in_file(p, formats::parse_ideal(&read(p)?))?.ideal, None),
                (_, Some(p), _) => (matrix_ideal(p, budget)?, None),
                (_, _, Some(p)) => {
                    let a = in_file(p, formats::parse_monomial_matrix(&read(p)?))?;
                    let minors = minors_of_monomial_matrix(&a)?;
                    (minors.ideal.clone(), Some((a, minors.reducible)))
                }
                _ => return Err(CliError::Invalid("one of --ideal, --matrix, --monomial-matrix is required".into())),
            };
            let report = robust_check_with(&ideal, budget, !no_graver)?;
            let mm = match &criterion {
                Some((a, reducible)) if reducible.is_empty() => {
                    let w = coprimality_criterion(a)?;
                    Some(CoprimalityJson::new(a, w.as_ref(), reducible, report.robust))
                }
                // the coprimality criterion presumes irreducible minors
                Some((_, reducible)) => Some(CoprimalityJson {
                    coprime: false,
                    witness: None,
                    reducible_minors: reducible.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
                    agrees: false,
                }),
                None => None,
            };
            let doc = RobustnessJson::new(ideal.context(), &report, mm);
            Ok(emit(f, &doc, || doc.text()))
        }
        Command::Betti { monomial_ideal, ideal, matrix, all_orders, sample, seed, codim } => {
            if let Some(p) = monomial_ideal {
                if *all_orders {
                    return Err(CliError::Invalid("--all-orders applies to binomial ideals".into()));
                }
                let m = in_file(p, formats::parse_monomial_ideal(&read(p)?))?;
                let t = parallel::graded_betti(&m.ideal, budget)?;
                let doc = BettiJson::new(&m.context, &m.ideal, &t);
                return Ok(emit(f, &doc, || {
                    let mut s = t.to_text();
                    if let Some(c) = codim {
                        let p = resolution_predicates(&t, &m.ideal, *c);
                        s.push_str(&format!(
                            "Cohen-Macaulay: {}, linear: {}, squarefree: {}\n",
                            p.cohen_macaulay, p.linear, p.squarefree
                        ));
                    }
                    s
                }));
            }
            let source = IdealSource { ideal: ideal.clone(), matrix: matrix.clone() };
            let ideal = load_ideal(&source, budget)?;
            let (ideals, exhaustive, sampled) = match sample {
                Some(k) => {
                    let s = seed.ok_or_else(|| CliError::Invalid("--sample requires --seed".into()))?;
                    (sample_reduced_gbs(&ideal, *k, s, budget)?.initial_ideals(), false, Some((*k, s)))
                }
                None => (enumerate_reduced_gbs(&ideal, budget)?.initial_ideals(), true, None),
            };
            let r = parallel::betti_robustness(&ideals, exhaustive, budget)?;
            let doc = BettiRobustnessJson::new(ideal.context(), &r, sampled);
            Ok(emit(f, &doc, || doc.text()))
        }
        Command::ReproducePaper { write_golden } => {
            let results = reproduce::run_all(budget)?;
            if let Some(dir) = write_golden {
                reproduce::write_golden(dir, &results).map_err(|e| CliError::Invalid(format!("{}: {e}", dir.display())))?;
            }
            let summary = reproduce::summary(&results, write_golden.is_none());
            let text = match f {
                Format::Json => to_json(&summary),
                Format::Text => summary.text(),
            };
            if write_golden.is_none() && !summary.all_match {
                return Err(CliError::Mismatch(text));
            }
            Ok(text)
        }
    }
}
