//! Pure-difference binomials `x^a - x^b`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VariableContext};
use crate::order::TermOrder;

/// `plus - minus`, stored with `plus > minus` in graded reverse lex so that a
/// binomial and its negative share one representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let (a, b) = (a.exponents(), b.exponents());
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl Binomial {
    /// `a - b` up to sign. Fails when the terms coincide.
    pub fn new(a: Monomial, b: Monomial) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
        }
        match grevlex_cmp(&a, &b) {
            Ordering::Equal => Err(Error::ZeroBinomial),
            Ordering::Greater => Ok(Binomial { plus: a, minus: b }),
            Ordering::Less => Ok(Binomial { plus: b, minus: a }),
        }
    }

    /// `x^{u+} - x^{u-}`.
    pub fn from_vector(u: &[i64]) -> Result<Self> {
        let plus: Vec<i64> = u.iter().map(|&x| x.max(0)).collect();
        let minus: Vec<i64> = u.iter().map(|&x| (-x).max(0)).collect();
        Self::new(Monomial::from_i64(&plus)?, Monomial::from_i64(&minus)?)
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn nvars(&self) -> usize {
        self.plus.len()
    }

    /// Exponent vector `plus - minus`.
    pub fn vector(&self) -> Vec<i64> {
        self.plus
            .exponents()
            .iter()
            .zip(self.minus.exponents())
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    /// `(lead, trail)` under `order`.
    pub fn marked(&self, order: &TermOrder) -> (&Monomial, &Monomial) {
        match order.cmp_exponents(self.plus.exponents(), self.minus.exponents()) {
            Ordering::Less => (&self.minus, &self.plus),
            _ => (&self.plus, &self.minus),
        }
    }

    pub fn lead(&self, order: &TermOrder) -> &Monomial {
        self.marked(order).0
    }

    /// Vector `lead - trail` under `order`.
    pub fn oriented_vector(&self, order: &TermOrder) -> Vec<i64> {
        let v = self.vector();
        if self.marked(order).0 == &self.plus {
            v
        } else {
            v.into_iter().map(|x| -x).collect()
        }
    }

    pub fn degree(&self) -> u64 {
        self.plus.degree().max(self.minus.degree())
    }

    pub fn weighted_degree(&self, grading: &[i64]) -> i128 {
        self.plus.weighted_degree(grading).max(self.minus.weighted_degree(grading))
    }

    pub fn is_homogeneous(&self, grading: &[i64]) -> bool {
        self.plus.weighted_degree(grading) == self.minus.weighted_degree(grading)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.plus.exponents()[i] > 0 || self.minus.exponents()[i] > 0)
            .collect()
    }

    pub fn has_term(&self, m: &Monomial) -> bool {
        &self.plus == m || &self.minus == m
    }

    /// Both terms have no common variable and the exponent vector is
    /// primitive.
    pub fn is_irreducible(&self) -> bool {
        let content = self.vector().iter().fold(0i64, |g, &x| g.gcd(&x));
        self.plus.is_coprime(&self.minus) && content == 1
    }

    /// Divides both terms by their gcd.
    pub fn coprime_part(&self) -> Result<Self> {
        let g = self.plus.gcd(&self.minus);
        Binomial::new(
            self.plus.checked_div(&g).expect("gcd divides"),
            self.minus.checked_div(&g).expect("gcd divides"),
        )
    }

    pub fn restrict(&self, k: usize) -> Result<Self> {
        Binomial::new(self.plus.restrict(k), self.minus.restrict(k))
    }

    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        Binomial::new(self.plus.select(indices), self.minus.select(indices))
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> DisplayBinomial<'a> {
        DisplayBinomial { b: self, ctx }
    }
}

impl PartialOrd for Binomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical sort: by the graded reverse lex order of the larger term, then
/// of the smaller one.
impl Ord for Binomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.plus, &other.plus).then_with(|| grevlex_cmp(&self.minus, &other.minus))
    }
}

pub struct DisplayBinomial<'a> {
    b: &'a Binomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for DisplayBinomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.b.plus.display(self.ctx), self.b.minus.display(self.ctx))
    }
}

/// Sorted, deduplicated copy.
pub fn canonical_set(items: impl IntoIterator<Item = Binomial>) -> Vec<Binomial> {
    let mut v: Vec<Binomial> = items.into_iter().collect();
    v.sort();
    v.dedup();
    v
}
