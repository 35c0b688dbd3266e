//! Budget configuration from the environment and the command line.

use robusta_core::Budget;

/// Environment variable overriding the default budgets.
pub const BUDGET_ENV: &str = "ROBUSTA_BUDGET";

/// Parses a budget override on top of `base`.
///
/// Accepted forms are a single positive integer, applied to every budget,
/// or a comma-separated list of `spairs=N`, `cells=N`, `multidegrees=N`.
pub fn parse_budget(spec: &str, base: Budget) -> Result<Budget, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(base);
    }
    if let Ok(n) = spec.parse::<u64>() {
        return positive("budget", n).map(Budget::uniform);
    }
    let mut out = base;
    for part in spec.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, found {part:?}"))?;
        let key = key.trim();
        let n: u64 = value.trim().parse().map_err(|_| format!("{key}: not a positive integer: {value:?}"))?;
        let n = positive(key, n)?;
        match key {
            "spairs" => out.spairs = n,
            "cells" => out.cells = n,
            "multidegrees" => out.multidegrees = n,
            _ => return Err(format!("unknown budget {key:?} (expected spairs, cells or multidegrees)")),
        }
    }
    Ok(out)
}

fn positive(key: &str, n: u64) -> Result<u64, String> {
    if n == 0 {
        Err(format!("{key} must be positive"))
    } else {
        Ok(n)
    }
}

/// Defaults overridden by [`BUDGET_ENV`] when it is set.
pub fn budget_from_env() -> Result<Budget, String> {
    match std::env::var(BUDGET_ENV) {
        Ok(spec) => parse_budget(&spec, Budget::default()).map_err(|e| format!("{BUDGET_ENV}: {e}")),
        Err(_) => Ok(Budget::default()),
    }
}
