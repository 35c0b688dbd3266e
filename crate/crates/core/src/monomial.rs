//! Variable contexts and dense exponent-vector monomials.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type Exponent = u32;

/// Ordered, duplicate-free list of variable names shared by every monomial
/// of one computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("no variables".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!("bad variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidContext(format!("duplicate variable {name}")));
            }
        }
        Ok(VariableContext { names })
    }

    /// `x1, …, xn`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    /// `a, b, c, …` when `n <= 26`, otherwise `x1, …, xn`.
    pub fn default_for(n: usize) -> Result<Self> {
        if n <= 26 {
            Self::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
        } else {
            Self::indexed("x", n)
        }
    }

    /// Context of a Lawrence lifting: `x1..xn, y1..yn`.
    pub fn lawrence(n: usize) -> Result<Self> {
        Self::new(
            (1..=n)
                .map(|i| format!("x{i}"))
                .chain((1..=n).map(|i| format!("y{i}"))),
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Sub-context on the given variable indices, in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        Self::new(indices.iter().map(|&i| self.names[i].clone()))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<Exponent>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(alloc::vec![0; n])
    }

    pub fn new(exponents: Vec<Exponent>) -> Self {
        Monomial(exponents)
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = alloc::vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    /// Builds a monomial from signed exponents, rejecting negatives.
    pub fn from_i64(exponents: &[i64]) -> Result<Self> {
        exponents
            .iter()
            .map(|&e| Exponent::try_from(e).map_err(|_| Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<Exponent> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i128 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i128 * w as i128)
            .sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        divides(&self.0, &other.0)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / other`; `None` unless `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn restrict(&self, k: usize) -> Monomial {
        Monomial(self.0[..k].to_vec())
    }

    pub fn select(&self, indices: &[usize]) -> Monomial {
        Monomial(indices.iter().map(|&i| self.0[i]).collect())
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> DisplayMonomial<'a> {
        DisplayMonomial { m: self, ctx }
    }
}

pub(crate) fn divides(a: &[Exponent], b: &[Exponent]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub struct DisplayMonomial<'a> {
    m: &'a Monomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn context_validation() {
        assert!(VariableContext::new(["a", "b"]).is_ok());
        assert!(VariableContext::new(Vec::<String>::new()).is_err());
        assert!(VariableContext::new(["a", "a"]).is_err());
        assert!(VariableContext::new(["1a"]).is_err());
        let l = VariableContext::lawrence(2).unwrap();
        assert_eq!(l.names(), &["x1", "x2", "y1", "y2"]);
    }

    #[test]
    fn gcd_lcm_divides() {
        let a = Monomial::new(vec![2, 0, 1]);
        let b = Monomial::new(vec![1, 3, 0]);
        assert_eq!(a.gcd(&b), Monomial::new(vec![1, 0, 0]));
        assert_eq!(a.lcm(&b), Monomial::new(vec![2, 3, 1]));
        assert!(a.gcd(&b).divides(&a));
        assert!(!a.is_coprime(&b));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.checked_div(&a.gcd(&b)), Some(Monomial::new(vec![1, 0, 1])));
    }

    #[test]
    fn overflow_is_reported() {
        let a = Monomial::new(vec![u32::MAX]);
        assert_eq!(a.checked_mul(&Monomial::new(vec![1])), Err(Error::ExponentOverflow));
        assert!(Monomial::from_i64(&[-1]).is_err());
    }

    #[test]
    fn display() {
        let ctx = VariableContext::default_for(3).unwrap();
        assert_eq!(Monomial::new(vec![2, 0, 1]).display(&ctx).to_string(), "a^2*c");
        assert_eq!(Monomial::one(3).display(&ctx).to_string(), "1");
    }
}
