//! Thread-parallel drivers over the pure core routines. Results are merged
//! in a fixed order, so output does not depend on the number of threads.

use std::collections::BTreeMap;

use rayon::prelude::*;
use robusta_core::betti::{lcm_lattice, upper_koszul_complex, BettiRobustness, BettiTable, MonomialIdeal};
use robusta_core::monomial::Exponent;
use robusta_core::{Budget, Monomial, Result};

/// Multigraded Betti numbers with one task per lcm-lattice multidegree.
pub fn multigraded_betti(ideal: &MonomialIdeal, budget: &Budget) -> Result<BTreeMap<(usize, Vec<Exponent>), u64>> {
    let degrees: Vec<Vec<Exponent>> = lcm_lattice(ideal, budget.multidegrees)?.into_iter().collect();
    let parts: Vec<Vec<((usize, Vec<Exponent>), u64)>> = degrees
        .par_iter()
        .map(|b| {
            let k = upper_koszul_complex(ideal, &Monomial::new(b.clone()))?;
            Ok(k.reduced_betti()
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                .map(|(size, h)| ((size + 1, b.clone()), h))
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut out: BTreeMap<_, _> = parts.into_iter().flatten().collect();
    out.insert((0, vec![0; ideal.nvars()]), 1);
    Ok(out)
}

pub fn graded_betti(ideal: &MonomialIdeal, budget: &Budget) -> Result<BettiTable> {
    let multi = multigraded_betti(ideal, budget)?;
    Ok(BettiTable::from_entries(
        multi.into_iter().map(|((i, b), v)| ((i, b.iter().map(|&e| u64::from(e)).sum()), v)),
    ))
}

/// Groups initial ideals by Betti table, as in the core routine.
pub fn betti_robustness(initial_ideals: &[MonomialIdeal], exhaustive: bool, budget: &Budget) -> Result<BettiRobustness> {
    let tables: Vec<BettiTable> = initial_ideals.par_iter().map(|m| graded_betti(m, budget)).collect::<Result<_>>()?;
    let mut by_table: BTreeMap<BettiTable, MonomialIdeal> = BTreeMap::new();
    for (t, m) in tables.into_iter().zip(initial_ideals) {
        by_table.entry(t).or_insert_with(|| m.clone());
    }
    let (tables, witnesses): (Vec<_>, Vec<_>) = by_table.into_iter().unzip();
    Ok(BettiRobustness { robust: tables.len() <= 1, tables, witnesses, initial_ideals: initial_ideals.len(), exhaustive })
}

/// Runs `f` on a pool with `threads` workers (`None`: rayon's default).
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use robusta_core::betti;

    #[test]
    fn agrees_with_sequential() {
        let gens = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [2, 0, 0, 1]];
        let ideal = MonomialIdeal::new(gens.iter().map(|g| Monomial::new(g.to_vec())).collect());
        let b = Budget::default();
        assert_eq!(graded_betti(&ideal, &b).unwrap(), betti::graded_betti(&ideal, &b).unwrap());
        let one = with_threads(Some(1), || graded_betti(&ideal, &b).unwrap());
        let four = with_threads(Some(4), || graded_betti(&ideal, &b).unwrap());
        assert_eq!(one, four);
    }
}
