//! JSON documents and plain-text renderings of results.
//!
//! Every JSON document starts with `"schema": "robusta/1"` and a `kind`.
//! Field order is the declaration order below and all collections are
//! canonically sorted, so equal results serialise to equal bytes.

use std::fmt::Write as _;

use num_rational::BigRational;
use robusta_core::betti::{BettiRobustness, BettiTable, MonomialIdeal};
use robusta_core::robustness::{CoprimalityWitness, MonomialMatrix};
use robusta_core::text::format_rational;
use robusta_core::{Binomial, BinomialIdeal, FanEnumeration, GraverBasis, RobustnessReport, VariableContext};
use serde::Serialize;

pub const SCHEMA: &str = "robusta/1";

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialises");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct BinomialJson {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
    pub text: String,
}

impl BinomialJson {
    pub fn new(ctx: &VariableContext, b: &Binomial) -> Self {
        BinomialJson {
            plus: b.plus().exponents().to_vec(),
            minus: b.minus().exponents().to_vec(),
            text: b.display(ctx).to_string(),
        }
    }
}

fn texts(ctx: &VariableContext, bs: &[Binomial]) -> Vec<String> {
    bs.iter().map(|b| b.display(ctx).to_string()).collect()
}

fn monomial_texts(ctx: &VariableContext, m: &MonomialIdeal) -> Vec<String> {
    m.generators().iter().map(|g| g.display(ctx).to_string()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealJson {
    pub schema: &'static str,
    pub kind: &'static str,
    pub variables: Vec<String>,
    pub generators: Vec<BinomialJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale: Option<Vec<String>>,
}

impl IdealJson {
    pub fn new(ideal: &BinomialIdeal, scale: Option<&[BigRational]>) -> Self {
        let ctx = ideal.context();
        IdealJson {
            schema: SCHEMA,
            kind: "ideal",
            variables: ctx.names().to_vec(),
            generators: ideal.generators().iter().map(|b| BinomialJson::new(ctx, b)).collect(),
            scale: scale.map(|s| s.iter().map(format_rational).collect()),
        }
    }
}

pub fn ideal_text(ideal: &BinomialIdeal) -> String {
    crate::formats::write_ideal(ideal)
}

#[derive(Debug, Clone, Serialize)]
pub struct BruteforceJson {
    #[serde(rename = "box")]
    pub bound: i64,
    pub size: usize,
    /// The brute-force set equals the Graver basis cut to the box.
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraverJson {
    pub schema: &'static str,
    pub kind: &'static str,
    pub variables: Vec<String>,
    pub size: usize,
    pub vectors: Vec<Vec<i64>>,
    pub binomials: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bruteforce: Option<BruteforceJson>,
}

impl GraverJson {
    pub fn new(ctx: &VariableContext, g: &GraverBasis, bruteforce: Option<BruteforceJson>) -> Self {
        GraverJson {
            schema: SCHEMA,
            kind: "graver",
            variables: ctx.names().to_vec(),
            size: g.len(),
            vectors: g.vectors(),
            binomials: texts(ctx, g.elements()),
            bruteforce,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("Graver basis: {} elements\n", self.size);
        for b in &self.binomials {
            let _ = writeln!(s, "  {b}");
        }
        if let Some(bf) = &self.bruteforce {
            let verdict = if bf.agrees { "agrees" } else { "DISAGREES" };
            let _ = writeln!(s, "brute force in box {}: {} elements, {verdict}", bf.bound, bf.size);
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct UgbJson {
    pub schema: &'static str,
    pub kind: &'static str,
    pub mode: String,
    pub variables: Vec<String>,
    pub exhaustive: bool,
    /// Regions, cells, orders or weight samples visited.
    pub cells: usize,
    pub reduced_gbs: Vec<Vec<String>>,
    pub universal_gb: Vec<String>,
    pub initial_ideals: Vec<Vec<String>>,
}

impl UgbJson {
    pub fn new(mode: &str, ctx: &VariableContext, fan: &FanEnumeration) -> Self {
        UgbJson {
            schema: SCHEMA,
            kind: "ugb",
            mode: mode.to_string(),
            variables: ctx.names().to_vec(),
            exhaustive: fan.exhaustive,
            cells: fan.visited,
            reduced_gbs: fan.reduced_gbs().iter().map(|g| texts(ctx, g)).collect(),
            universal_gb: texts(ctx, &fan.universal_gb()),
            initial_ideals: fan.initial_ideals().iter().map(|m| monomial_texts(ctx, m)).collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "mode {}: {} cells visited, {} initial ideals, {} distinct reduced bases as sets{}\n",
            self.mode,
            self.cells,
            self.initial_ideals.len(),
            self.reduced_gbs.len(),
            if self.exhaustive { "" } else { " (sampled)" }
        );
        let _ = writeln!(s, "universal Groebner basis: {} elements", self.universal_gb.len());
        for b in &self.universal_gb {
            let _ = writeln!(s, "  {b}");
        }
        for (k, m) in self.initial_ideals.iter().enumerate() {
            let _ = writeln!(s, "in_{k} = ({})", m.join(", "));
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoprimalityJson {
    pub coprime: bool,
    pub witness: Option<String>,
    pub reducible_minors: Vec<[usize; 2]>,
    /// `robust` equals `coprime`.
    pub agrees: bool,
}

impl CoprimalityJson {
    pub fn new(a: &MonomialMatrix, witness: Option<&CoprimalityWitness>, reducible: &[(usize, usize)], robust: bool) -> Self {
        CoprimalityJson {
            coprime: witness.is_none(),
            witness: witness.map(|w| w.describe(a.context())),
            reducible_minors: reducible.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
            agrees: witness.is_none() == robust,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RobustnessJson {
    pub schema: &'static str,
    pub kind: &'static str,
    pub variables: Vec<String>,
    pub robust: bool,
    pub mu: usize,
    pub ugb_size: usize,
    pub graver_size: Option<usize>,
    pub redundant_elements: Vec<String>,
    pub lawrence_like: Option<bool>,
    pub lawrence_type: bool,
    pub components: Vec<Vec<String>>,
    pub minimal_generators: Vec<String>,
    pub universal_gb: Vec<String>,
    pub reduced_gbs: usize,
    pub initial_ideals: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial_matrix: Option<CoprimalityJson>,
}

impl RobustnessJson {
    pub fn new(ctx: &VariableContext, r: &RobustnessReport, monomial_matrix: Option<CoprimalityJson>) -> Self {
        RobustnessJson {
            schema: SCHEMA,
            kind: "robustness",
            variables: ctx.names().to_vec(),
            robust: r.robust,
            mu: r.mu,
            ugb_size: r.ugb_size,
            graver_size: r.graver_size,
            redundant_elements: texts(ctx, &r.redundant_elements),
            lawrence_like: r.lawrence_like,
            lawrence_type: r.lawrence_type,
            components: r.components.iter().map(|c| c.iter().map(|&i| ctx.name(i).to_string()).collect()).collect(),
            minimal_generators: texts(ctx, &r.minimal_generators),
            universal_gb: texts(ctx, &r.universal_gb),
            reduced_gbs: r.reduced_gbs,
            initial_ideals: r.initial_ideals,
            monomial_matrix,
        }
    }

    pub fn text(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut s = format!("robust: {}\n", yes(self.robust));
        let _ = writeln!(s, "mu: {}", self.mu);
        let _ = writeln!(s, "universal Groebner basis: {} elements", self.ugb_size);
        if let Some(g) = self.graver_size {
            let _ = writeln!(s, "Graver basis: {g} elements");
        }
        if let Some(l) = self.lawrence_like {
            let _ = writeln!(s, "minimal generators = Graver basis: {}", yes(l));
        }
        let _ = writeln!(s, "Lawrence lifting up to renaming: {}", yes(self.lawrence_type));
        let _ = writeln!(s, "initial ideals: {}, distinct reduced bases as sets: {}", self.initial_ideals, self.reduced_gbs);
        let _ = writeln!(s, "components: {}", self.components.iter().map(|c| format!("{{{}}}", c.join(","))).collect::<Vec<_>>().join(" "));
        let _ = writeln!(s, "minimal generators:");
        for b in &self.minimal_generators {
            let _ = writeln!(s, "  {b}");
        }
        if !self.redundant_elements.is_empty() {
            let _ = writeln!(s, "redundant in the universal basis:");
            for b in &self.redundant_elements {
                let _ = writeln!(s, "  {b}");
            }
        }
        if let Some(m) = &self.monomial_matrix {
            match &m.witness {
                None => s.push_str("matrix entries pairwise coprime: yes\n"),
                Some(w) => {
                    let _ = writeln!(s, "matrix entries pairwise coprime: no, {w}");
                }
            }
            let _ = writeln!(s, "coprimality matches robustness: {}", yes(m.agrees));
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u64,
    pub rank: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiTableJson {
    pub entries: Vec<BettiEntry>,
    pub totals: Vec<u64>,
    pub projective_dimension: usize,
    pub regularity: u64,
    pub text: String,
}

impl BettiTableJson {
    pub fn new(t: &BettiTable) -> Self {
        BettiTableJson {
            entries: t.entries().iter().map(|(&(i, j), &rank)| BettiEntry { i, j, rank }).collect(),
            totals: t.totals(),
            projective_dimension: t.projective_dimension(),
            regularity: t.regularity(),
            text: t.to_text(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiJson {
    pub schema: &'static str,
    pub kind: &'static str,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub table: BettiTableJson,
}

impl BettiJson {
    pub fn new(ctx: &VariableContext, ideal: &MonomialIdeal, t: &BettiTable) -> Self {
        BettiJson {
            schema: SCHEMA,
            kind: "betti",
            variables: ctx.names().to_vec(),
            generators: monomial_texts(ctx, ideal),
            table: BettiTableJson::new(t),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessedTable {
    pub table: BettiTableJson,
    pub initial_ideal: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiRobustnessJson {
    pub schema: &'static str,
    pub kind: &'static str,
    pub variables: Vec<String>,
    pub robust: bool,
    pub exhaustive: bool,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub initial_ideals: usize,
    pub tables: Vec<WitnessedTable>,
}

impl BettiRobustnessJson {
    pub fn new(ctx: &VariableContext, r: &BettiRobustness, sample: Option<(usize, u64)>) -> Self {
        BettiRobustnessJson {
            schema: SCHEMA,
            kind: "betti_robustness",
            variables: ctx.names().to_vec(),
            robust: r.robust,
            exhaustive: r.exhaustive,
            samples: sample.map(|s| s.0),
            seed: sample.map(|s| s.1),
            initial_ideals: r.initial_ideals,
            tables: r
                .tables
                .iter()
                .zip(&r.witnesses)
                .map(|(t, w)| WitnessedTable { table: BettiTableJson::new(t), initial_ideal: monomial_texts(ctx, w) })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "robust Betti numbers: {} ({} initial ideals{}, {} distinct tables)\n",
            if self.robust { "yes" } else { "no" },
            self.initial_ideals,
            match (self.samples, self.seed) {
                (Some(k), Some(seed)) => format!(" from {k} samples, seed {seed}"),
                _ => String::new(),
            },
            self.tables.len()
        );
        for (k, t) in self.tables.iter().enumerate() {
            let _ = writeln!(s, "\ntable {k}, e.g. in = ({})", t.initial_ideal.join(", "));
            s.push_str(&t.table.text);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use robusta_core::text::parse_ideal;

    #[test]
    fn ideal_json_shape() {
        let i = parse_ideal("x y z", &["x - y", "y - z"]).unwrap();
        let raw = to_json(&IdealJson::new(&i, None));
        let v: serde_json::Value = serde_json::from_str(&raw).unwrap();
        assert_eq!(v["schema"], "robusta/1");
        assert_eq!(v["variables"], serde_json::json!(["x", "y", "z"]));
        assert_eq!(v["generators"][0]["plus"], serde_json::json!([1, 0, 0]));
        assert_eq!(v["generators"][0]["minus"], serde_json::json!([0, 1, 0]));
        assert!(v.get("scale").is_none());
        let at: Vec<usize> = ["\"schema\"", "\"kind\"", "\"variables\"", "\"generators\""]
            .iter()
            .map(|k| raw.find(k).unwrap())
            .collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]));
    }
}
