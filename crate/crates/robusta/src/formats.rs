//! Plain-text input formats.
//!
//! Every format ignores blank lines and `#` comments. Files that carry
//! variable names declare them on a `vars:` line.
//!
//! * `.mat`: `rows cols`, then one row of integers per line.
//! * `.ideal`: `vars: a b c ...`, then one binomial per line.
//! * `.mideal`: one monomial per line.
//! * monomial matrix: `2 n`, then the `2n` entries, top row first.

use num_bigint::BigInt;
use num_rational::BigRational;
use robusta_core::betti::MonomialIdeal;
use robusta_core::robustness::{rescale_normalize, MonomialMatrix};
use robusta_core::text::{parse_monomial, parse_scaled_binomial};
use robusta_core::{BinomialIdeal, IntegerMatrix, VariableContext};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Algebra { line: usize, source: robusta_core::Error },
    #[error(transparent)]
    Core(#[from] robusta_core::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

fn syntax<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(FormatError::Syntax { line, message: message.into() })
}

/// Content lines with their 1-based numbers.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

/// Splits off a leading `vars:` declaration.
fn take_vars<'a>(lines: &mut &[(usize, &'a str)]) -> Result<Option<VariableContext>> {
    let Some(&(n, first)) = lines.first() else { return Ok(None) };
    let Some(rest) = first.strip_prefix("vars:") else { return Ok(None) };
    *lines = &lines[1..];
    VariableContext::new(rest.split_whitespace())
        .map(Some)
        .map_err(|source| FormatError::Algebra { line: n, source })
}

/// Identifiers in order of first appearance.
fn infer_variables<'a>(texts: impl IntoIterator<Item = &'a str>) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for t in texts {
        let mut chars = t.char_indices().peekable();
        while let Some((i, c)) = chars.next() {
            if c.is_ascii_alphabetic() || c == '_' {
                let mut end = i + c.len_utf8();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let name = &t[i..end];
                if !names.iter().any(|n| n == name) {
                    names.push(name.to_string());
                }
            } else if c.is_ascii_digit() {
                while chars.peek().is_some_and(|&(_, d)| d.is_ascii_digit()) {
                    chars.next();
                }
            }
        }
    }
    names
}

fn dims(line: usize, s: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    match parts.as_slice() {
        [r, c] => match (r.parse(), c.parse()) {
            (Ok(r), Ok(c)) => Ok((r, c)),
            _ => syntax(line, format!("expected two sizes, found {s:?}")),
        },
        _ => syntax(line, format!("expected \"rows cols\", found {s:?}")),
    }
}

/// A matrix together with names for its columns.
#[derive(Debug, Clone)]
pub struct MatrixFile {
    pub context: VariableContext,
    pub matrix: IntegerMatrix,
}

pub fn parse_matrix(text: &str) -> Result<MatrixFile> {
    let all = content_lines(text);
    let mut lines = all.as_slice();
    let vars = take_vars(&mut lines)?;
    let Some((&(n, header), rows)) = lines.split_first() else {
        return syntax(1, "empty matrix file");
    };
    let (r, c) = dims(n, header)?;
    if c == 0 {
        return syntax(n, "a matrix needs at least one column");
    }
    if rows.len() != r {
        return syntax(n, format!("header announces {r} rows, found {}", rows.len()));
    }
    let mut out = Vec::with_capacity(r);
    for &(n, row) in rows {
        let entries: Vec<BigInt> = row
            .split_whitespace()
            .map(|t| t.parse::<BigInt>().map_err(|_| FormatError::Syntax { line: n, message: format!("not an integer: {t:?}") }))
            .collect::<Result<_>>()?;
        if entries.len() != c {
            return syntax(n, format!("expected {c} entries, found {}", entries.len()));
        }
        out.push(entries);
    }
    let context = match vars {
        Some(v) if v.len() != c => return syntax(all[0].0, format!("{} names for {c} columns", v.len())),
        Some(v) => v,
        None => VariableContext::default_for(c)?,
    };
    Ok(MatrixFile { context, matrix: IntegerMatrix::new(c, out)? })
}

pub fn write_matrix(m: &IntegerMatrix) -> String {
    let mut s = format!("{} {}\n", m.nrows(), m.ncols());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

/// A binomial ideal file. Generators with coefficients other than `c, -c`
/// are normalised by rescaling the variables; `scale` records the factors.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ideal: BinomialIdeal,
    pub scale: Option<Vec<BigRational>>,
}

pub fn parse_ideal(text: &str) -> Result<IdealFile> {
    let all = content_lines(text);
    let mut lines = all.as_slice();
    let Some(ctx) = take_vars(&mut lines)? else {
        return syntax(all.first().map_or(1, |l| l.0), "an ideal file starts with a \"vars:\" line");
    };
    let scaled = lines
        .iter()
        .map(|&(n, l)| parse_scaled_binomial(&ctx, l).map_err(|source| FormatError::Algebra { line: n, source }))
        .collect::<Result<Vec<_>>>()?;
    let pure: Option<Vec<_>> = scaled.iter().map(|b| b.to_pure()).collect();
    match pure {
        Some(gens) => {
            let gens = gens.into_iter().collect::<robusta_core::Result<Vec<_>>>()?;
            Ok(IdealFile { ideal: BinomialIdeal::new(ctx, gens)?, scale: None })
        }
        None => {
            let r = rescale_normalize(&ctx, &scaled)?;
            Ok(IdealFile { ideal: r.ideal, scale: Some(r.scale) })
        }
    }
}

pub fn write_ideal(ideal: &BinomialIdeal) -> String {
    let ctx = ideal.context();
    let mut s = format!("vars: {}\n", ctx.names().join(" "));
    for g in ideal.generators() {
        s.push_str(&g.display(ctx).to_string());
        s.push('\n');
    }
    s
}

/// A monomial ideal with names for its variables.
#[derive(Debug, Clone)]
pub struct MonomialIdealFile {
    pub context: VariableContext,
    pub ideal: MonomialIdeal,
}

pub fn parse_monomial_ideal(text: &str) -> Result<MonomialIdealFile> {
    let all = content_lines(text);
    let mut lines = all.as_slice();
    let context = match take_vars(&mut lines)? {
        Some(c) => c,
        None => VariableContext::new(infer_variables(lines.iter().map(|l| l.1)))?,
    };
    let gens = lines
        .iter()
        .map(|&(n, l)| parse_monomial(&context, l).map_err(|source| FormatError::Algebra { line: n, source }))
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        return syntax(1, "a monomial ideal needs at least one generator");
    }
    let ideal = MonomialIdeal::with_nvars(context.len(), gens);
    Ok(MonomialIdealFile { context, ideal })
}

pub fn write_monomial_ideal(ctx: &VariableContext, ideal: &MonomialIdeal) -> String {
    let mut s = format!("vars: {}\n", ctx.names().join(" "));
    for m in ideal.generators() {
        s.push_str(&m.display(ctx).to_string());
        s.push('\n');
    }
    s
}

/// Reads `2 n` and the `2n` entries. Without a `vars:` line the variables
/// are the identifiers of the entries in order of first appearance.
pub fn parse_monomial_matrix(text: &str) -> Result<MonomialMatrix> {
    let all = content_lines(text);
    let mut lines = all.as_slice();
    let vars = take_vars(&mut lines)?;
    let Some((&(n, header), rest)) = lines.split_first() else {
        return syntax(1, "empty monomial matrix file");
    };
    let (r, c) = dims(n, header)?;
    if r != 2 {
        return syntax(n, format!("only 2-row matrices are supported, found {r}"));
    }
    let tokens: Vec<(usize, &str)> = rest.iter().flat_map(|&(n, l)| l.split_whitespace().map(move |t| (n, t))).collect();
    if tokens.len() != 2 * c {
        return syntax(n, format!("expected {} entries, found {}", 2 * c, tokens.len()));
    }
    let context = match vars {
        Some(v) => v,
        None => VariableContext::new(infer_variables(tokens.iter().map(|t| t.1)))?,
    };
    let entries = tokens
        .iter()
        .map(|&(n, t)| parse_monomial(&context, t).map_err(|source| FormatError::Algebra { line: n, source }))
        .collect::<Result<Vec<_>>>()?;
    let (x, y) = entries.split_at(c);
    Ok(MonomialMatrix::new(context, x.to_vec(), y.to_vec())?)
}

pub fn write_monomial_matrix(a: &MonomialMatrix) -> String {
    let ctx = a.context();
    let row = |r: &[robusta_core::Monomial]| r.iter().map(|m| m.display(ctx).to_string()).collect::<Vec<_>>().join(" ");
    format!("vars: {}\n2 {}\n{}\n{}\n", ctx.names().join(" "), a.columns(), row(a.top()), row(a.bottom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let text = "# example\n2 3\n1 1 1\n0 1 2\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.context.names(), ["a", "b", "c"]);
        assert_eq!(write_matrix(&m.matrix), "2 3\n1 1 1\n0 1 2\n");
        assert!(parse_matrix("2 3\n1 1 1\n").is_err());
        assert!(parse_matrix("1 3\n1 x 1\n").is_err());
        let named = parse_matrix("vars: p q\n1 2\n1 1\n").unwrap();
        assert_eq!(named.context.names(), ["p", "q"]);
    }

    #[test]
    fn ideal_files() {
        let f = parse_ideal("vars: x y z\nx - y\ny - z  # second\n").unwrap();
        assert_eq!(f.ideal.len(), 2);
        assert!(f.scale.is_none());
        assert_eq!(parse_ideal(&write_ideal(&f.ideal)).unwrap().ideal, f.ideal);
        let err = parse_ideal("vars: x y\nx - w\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2"));
        assert!(parse_ideal("x - y\n").is_err());
        let scaled = parse_ideal("vars: x y z w\n2*x*y - z*w\n").unwrap();
        assert!(scaled.scale.is_some());
        assert_eq!(scaled.ideal.len(), 1);
    }

    #[test]
    fn monomial_files() {
        let f = parse_monomial_ideal("x1*y2\nx1*y3\nx2*y3\n").unwrap();
        assert_eq!(f.context.names(), ["x1", "y2", "y3", "x2"]);
        assert_eq!(f.ideal.len(), 3);
        let again = parse_monomial_ideal(&write_monomial_ideal(&f.context, &f.ideal)).unwrap();
        assert_eq!(again.ideal, f.ideal);

        let a = parse_monomial_matrix("2 3\na*c b f\nd c*e g\n").unwrap();
        assert_eq!(a.context().names(), ["a", "c", "b", "f", "d", "e", "g"]);
        assert_eq!(a.columns(), 3);
        let again = parse_monomial_matrix(&write_monomial_matrix(&a)).unwrap();
        assert_eq!(again, a);
        assert!(parse_monomial_matrix("3 1\na\nb\nc\n").is_err());
        assert!(parse_monomial_matrix("2 2\na b c\n").is_err());
    }

    #[test]
    fn inference_skips_exponents() {
        assert_eq!(infer_variables(["u1^2*u3", "u22*u1"]), ["u1", "u3", "u22"]);
    }
}
