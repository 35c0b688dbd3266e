//! Text grammar for binomials and monomials.
//!
//! ```text
//! binomial := term ("-" | "+") term
//! term     := coeff? factor ("*" factor)*
//! factor   := varname ("^" posint)?
//! coeff    := ["+" | "-"] integer ["/" integer] ["*"]
//! ```
//!
//! Whitespace is insignificant. Variables must belong to the declared
//! context.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::ideal::BinomialIdeal;
use crate::monomial::{Monomial, VariableContext};

/// `c1·m1 + c2·m2` with arbitrary nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledBinomial {
    pub terms: [(BigRational, Monomial); 2],
}

impl ScaledBinomial {
    /// The pure difference `m1 - m2` when `c1 = -c2`.
    pub fn to_pure(&self) -> Option<Result<Binomial>> {
        let [(c1, m1), (c2, m2)] = &self.terms;
        if *c1 == -c2.clone() {
            Some(Binomial::new(m1.clone(), m2.clone()))
        } else {
            None
        }
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i + 1)
            .unwrap_or_else(|| self.src.chars().count() + 1)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { column: self.column(), message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn identifier(&mut self) -> Option<String> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.pos += 1,
            _ => return None,
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }
}

fn parse_factors(cur: &mut Cursor, ctx: &VariableContext, exps: &mut [u32]) -> Result<()> {
    loop {
        let Some(name) = cur.identifier() else {
            return cur.error("expected a variable");
        };
        let Some(i) = ctx.index_of(&name) else {
            return cur.error(format!("unknown variable {name}"));
        };
        let mut e: u32 = 1;
        if cur.eat('^') {
            let Some(d) = cur.digits() else {
                return cur.error("expected an exponent");
            };
            e = d.parse().map_err(|_| Error::ExponentOverflow)?;
            if e == 0 {
                return cur.error("exponent must be positive");
            }
        }
        exps[i] = exps[i].checked_add(e).ok_or(Error::ExponentOverflow)?;
        if !cur.eat('*') {
            return Ok(());
        }
    }
}

fn parse_term(cur: &mut Cursor, ctx: &VariableContext, sign: i32) -> Result<(BigRational, Monomial)> {
    let mut coeff = BigRational::one();
    if sign < 0 {
        coeff = -coeff;
    }
    if let Some(num) = cur.digits() {
        let num: BigInt = num.parse().expect("digits");
        let mut c = BigRational::from_integer(num);
        if cur.eat('/') {
            let Some(den) = cur.digits() else {
                return cur.error("expected a denominator");
            };
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return cur.error("zero denominator");
            }
            c /= BigRational::from_integer(den);
        }
        if c.is_zero() {
            return cur.error("zero coefficient");
        }
        coeff *= c;
        if !cur.eat('*') && !matches!(cur.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_') {
            // a bare coefficient is a constant term
            return Ok((coeff, Monomial::one(ctx.len())));
        }
    }
    let mut exps = alloc::vec![0u32; ctx.len()];
    parse_factors(cur, ctx, &mut exps)?;
    Ok((coeff, Monomial::new(exps)))
}

/// Parses a binomial with arbitrary rational coefficients.
pub fn parse_scaled_binomial(ctx: &VariableContext, s: &str) -> Result<ScaledBinomial> {
    let mut cur = Cursor::new(s);
    let first_sign = if cur.eat('-') {
        -1
    } else {
        cur.eat('+');
        1
    };
    let t1 = parse_term(&mut cur, ctx, first_sign)?;
    let second_sign = if cur.eat('-') {
        -1
    } else if cur.eat('+') {
        1
    } else if cur.peek().is_none() {
        return cur.error("expected a second term");
    } else {
        return cur.error("expected '+' or '-'");
    };
    let t2 = parse_term(&mut cur, ctx, second_sign)?;
    if cur.peek().is_some() {
        return cur.error("a binomial has exactly two terms");
    }
    if t1.1 == t2.1 {
        return Err(Error::ZeroBinomial);
    }
    Ok(ScaledBinomial { terms: [t1, t2] })
}

/// Parses a pure-difference binomial such as `b^2*e - a^2*f`.
pub fn parse_binomial(ctx: &VariableContext, s: &str) -> Result<Binomial> {
    let scaled = parse_scaled_binomial(ctx, s)?;
    match scaled.to_pure() {
        Some(b) => b,
        None => Err(Error::Parse {
            column: 1,
            message: "coefficients are not of the form c, -c; rescale the variables first".into(),
        }),
    }
}

/// Parses `factor (* factor)*` or `1`.
pub fn parse_monomial(ctx: &VariableContext, s: &str) -> Result<Monomial> {
    let mut cur = Cursor::new(s);
    if cur.eat('1') && cur.peek().is_none() {
        return Ok(Monomial::one(ctx.len()));
    }
    cur.pos = 0;
    let mut exps = alloc::vec![0u32; ctx.len()];
    parse_factors(&mut cur, ctx, &mut exps)?;
    if cur.peek().is_some() {
        return cur.error("unexpected trailing input");
    }
    Ok(Monomial::new(exps))
}

/// Builds an ideal from a whitespace-separated variable list and binomial
/// strings.
pub fn parse_ideal(vars: &str, gens: &[&str]) -> Result<BinomialIdeal> {
    let ctx = VariableContext::new(vars.split_whitespace())?;
    let gens = gens.iter().map(|g| parse_binomial(&ctx, g)).collect::<Result<Vec<_>>>()?;
    BinomialIdeal::new(ctx, gens)
}

pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders a scaled binomial in the grammar above.
pub fn format_scaled(ctx: &VariableContext, b: &ScaledBinomial) -> String {
    let mut out = String::new();
    for (k, (c, m)) in b.terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() {
            out.push_str(&format_rational(&a));
            out.push('*');
        }
        out.push_str(&format!("{}", m.display(ctx)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ctx() -> VariableContext {
        VariableContext::default_for(6).unwrap()
    }

    #[test]
    fn parses_example() {
        let b = parse_binomial(&ctx(), "b^2*e - a^2*f").unwrap();
        assert_eq!(b.vector(), vec![-2, 2, 0, 0, 1, -1]);
        let spaced = parse_binomial(&ctx(), "  b ^ 2 * e-a^2 *f ").unwrap();
        assert_eq!(b, spaced);
        assert_eq!(b.display(&ctx()).to_string(), "b^2*e - a^2*f");
    }

    #[test]
    fn rejects_bad_input() {
        let c = ctx();
        assert!(matches!(parse_binomial(&c, "a - b - c"), Err(Error::Parse { .. })));
        assert!(matches!(parse_binomial(&c, "a - z"), Err(Error::Parse { .. })));
        assert!(matches!(parse_binomial(&c, "a"), Err(Error::Parse { .. })));
        assert!(matches!(parse_binomial(&c, "a^0 - b"), Err(Error::Parse { .. })));
        assert!(matches!(parse_binomial(&c, "2*a - b"), Err(Error::Parse { .. })));
        assert_eq!(parse_binomial(&c, "a*b - b*a"), Err(Error::ZeroBinomial));
    }

    #[test]
    fn coefficients() {
        let c = ctx();
        let s = parse_scaled_binomial(&c, "-3/2*a*b + 2 c*d").unwrap();
        assert_eq!(s.terms[0].0, BigRational::new((-3).into(), 2.into()));
        assert_eq!(s.terms[1].0, BigRational::from_integer(2.into()));
        assert_eq!(format_scaled(&c, &s), "-3/2*a*b + 2*c*d");
        assert!(parse_binomial(&c, "2*a - 2*b").is_ok());
        assert!(parse_binomial(&c, "a + b").is_err());
    }

    #[test]
    fn monomials() {
        let c = ctx();
        assert_eq!(parse_monomial(&c, "a*c^2").unwrap().exponents(), &[1, 0, 2, 0, 0, 0]);
        assert!(parse_monomial(&c, "1").unwrap().is_one());
        assert!(parse_monomial(&c, "a b").is_err());
    }

    proptest::proptest! {
        #[test]
        fn text_round_trip(
            a in proptest::collection::vec(0u32..5, 6),
            b in proptest::collection::vec(0u32..5, 6),
        ) {
            proptest::prop_assume!(a != b);
            let bin = Binomial::new(Monomial::new(a), Monomial::new(b)).unwrap();
            let text = bin.display(&ctx()).to_string();
            proptest::prop_assert_eq!(parse_binomial(&ctx(), &text).unwrap(), bin);
        }
    }
}
