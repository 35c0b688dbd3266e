//! Term orders on exponent vectors.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Exponent, Monomial};

/// A monomial order.
///
/// Variable sequences list variable indices from most to least significant.
/// `RevLex` compares a positive weight first and then breaks ties
/// reverse-lexicographically, so the last listed variable is the cheapest;
/// with unit weights it is graded reverse lex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex(Vec<usize>),
    RevLex { weights: Vec<i64>, order: Vec<usize> },
    Weight { weights: Vec<i64>, tiebreak: Box<TermOrder> },
}

fn check_permutation(perm: &[usize]) -> Result<()> {
    let mut seen = alloc::vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(Error::InvalidOrder("variable sequence is not a permutation".into()));
        }
        seen[p] = true;
    }
    Ok(())
}

impl TermOrder {
    /// Lex with `x1 > x2 > … > xn`.
    pub fn lex(n: usize) -> Self {
        TermOrder::Lex((0..n).collect())
    }

    pub fn lex_by(order: Vec<usize>) -> Result<Self> {
        check_permutation(&order)?;
        Ok(TermOrder::Lex(order))
    }

    /// Graded reverse lex with `x1 > x2 > … > xn`.
    pub fn grevlex(n: usize) -> Self {
        TermOrder::RevLex { weights: alloc::vec![1; n], order: (0..n).collect() }
    }

    pub fn grevlex_by(order: Vec<usize>) -> Result<Self> {
        check_permutation(&order)?;
        Ok(TermOrder::RevLex { weights: alloc::vec![1; order.len()], order })
    }

    /// Positive weight refined by reverse lex along `order`.
    pub fn weighted_revlex(weights: Vec<i64>, order: Vec<usize>) -> Result<Self> {
        check_permutation(&order)?;
        if weights.len() != order.len() {
            return Err(Error::DimensionMismatch { expected: order.len(), found: weights.len() });
        }
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::InvalidOrder("reverse lex weights must be positive".into()));
        }
        Ok(TermOrder::RevLex { weights, order })
    }

    /// Integer weight vector refined by `tiebreak`.
    pub fn weight(weights: Vec<i64>, tiebreak: TermOrder) -> Result<Self> {
        if weights.len() != tiebreak.nvars() {
            return Err(Error::DimensionMismatch { expected: tiebreak.nvars(), found: weights.len() });
        }
        Ok(TermOrder::Weight { weights, tiebreak: Box::new(tiebreak) })
    }

    /// Rational weight vector refined by `tiebreak`; the weights are cleared
    /// of denominators, which does not change the order.
    pub fn weight_rational(weights: &[BigRational], tiebreak: TermOrder) -> Result<Self> {
        Self::weight(integral_weights(weights)?, tiebreak)
    }

    pub fn nvars(&self) -> usize {
        match self {
            TermOrder::Lex(o) => o.len(),
            TermOrder::RevLex { order, .. } => order.len(),
            TermOrder::Weight { weights, .. } => weights.len(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        let n = self.nvars();
        for m in [a, b] {
            if m.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.len() });
            }
        }
        Ok(self.cmp_exponents(a.exponents(), b.exponents()))
    }

    /// Comparison without the length check.
    pub fn cmp_exponents(&self, a: &[Exponent], b: &[Exponent]) -> Ordering {
        match self {
            TermOrder::Lex(order) => {
                for &i in order {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            TermOrder::RevLex { weights, order } => {
                match weighted(a, weights).cmp(&weighted(b, weights)) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &i in order.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
            TermOrder::Weight { weights, tiebreak } => {
                match weighted(a, weights).cmp(&weighted(b, weights)) {
                    Ordering::Equal => tiebreak.cmp_exponents(a, b),
                    o => o,
                }
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp_exponents(a.exponents(), b.exponents()) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn weighted(e: &[Exponent], w: &[i64]) -> i128 {
    e.iter().zip(w).map(|(&e, &w)| e as i128 * w as i128).sum()
}

/// Scales a rational vector by the lcm of its denominators and divides by
/// the gcd of the result. Positive scaling preserves every weight comparison.
pub fn integral_weights(weights: &[BigRational]) -> Result<Vec<i64>> {
    let mut lcm = BigInt::one();
    for w in weights {
        lcm = lcm.lcm(w.denom());
    }
    let ints: Vec<BigInt> = weights.iter().map(|w| (w * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.iter()
        .map(|x| {
            let x = if g.is_zero() { x.clone() } else { x / &g };
            x.to_i64().ok_or(Error::IntegerOverflow("weight vector"))
        })
        .collect()
}

/// Shifts an integer weight by a multiple of a positive grading until every
/// entry is positive. On ideals homogeneous for the grading the induced
/// order on each graded piece is unchanged.
pub fn shift_positive(weights: &[i64], grading: &[i64]) -> Result<Vec<i64>> {
    let mut t: i64 = 0;
    for (&w, &g) in weights.iter().zip(grading) {
        if w <= 0 {
            // smallest t with w + t*g >= 1
            let need = (1 - w + g - 1) / g;
            t = t.max(need);
        }
    }
    weights
        .iter()
        .zip(grading)
        .map(|(&w, &g)| {
            g.checked_mul(t)
                .and_then(|x| x.checked_add(w))
                .ok_or(Error::IntegerOverflow("weight shift"))
        })
        .collect()
}

impl TermOrder {
    /// Whether every weight in this order is positive on every variable,
    /// which makes it a well-order.
    pub fn is_positive(&self) -> bool {
        match self {
            TermOrder::Lex(_) | TermOrder::RevLex { .. } => true,
            TermOrder::Weight { weights, tiebreak } => {
                weights.iter().all(|w| !w.is_negative()) && tiebreak.is_positive()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_examples() {
        let lex = TermOrder::lex(3);
        assert_eq!(lex.compare(&m(&[2, 0, 0]), &m(&[1, 1, 0])).unwrap(), Ordering::Greater);
        assert_eq!(lex.compare(&m(&[1, 1, 0]), &m(&[1, 1, 0])).unwrap(), Ordering::Equal);
        let yxz = TermOrder::lex_by(vec![1, 0, 2]).unwrap();
        assert_eq!(yxz.compare(&m(&[2, 0, 0]), &m(&[0, 1, 1])).unwrap(), Ordering::Less);
    }

    #[test]
    fn weight_tie_falls_to_grevlex() {
        // b^2 e vs a^2 f over a..f: equal unit weight, grevlex looks at f first.
        let o = TermOrder::weight(vec![1; 6], TermOrder::grevlex(6)).unwrap();
        let b2e = m(&[0, 2, 0, 0, 1, 0]);
        let a2f = m(&[2, 0, 0, 0, 0, 1]);
        assert_eq!(o.compare(&b2e, &a2f).unwrap(), Ordering::Greater);
    }

    #[test]
    fn grevlex_basics() {
        let o = TermOrder::grevlex(3);
        // xz vs y^2: same degree, z exponent decides, larger z is smaller.
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(), Ordering::Less);
        assert_eq!(o.compare(&m(&[0, 0, 2]), &m(&[1, 0, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn mismatched_lengths() {
        let o = TermOrder::lex(2);
        assert!(o.compare(&m(&[1]), &m(&[1, 0])).is_err());
        assert!(TermOrder::lex_by(vec![0, 0]).is_err());
        assert!(TermOrder::weighted_revlex(vec![0, 1], vec![0, 1]).is_err());
    }

    #[test]
    fn rational_weights_are_scaled() {
        let w = [BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into())];
        assert_eq!(integral_weights(&w).unwrap(), vec![2, -3]);
        assert_eq!(shift_positive(&[2, -3], &[1, 1]).unwrap(), vec![6, 1]);
    }

    proptest::proptest! {
        #[test]
        fn orders_are_multiplicative_and_total(
            a in proptest::collection::vec(0u32..4, 4),
            b in proptest::collection::vec(0u32..4, 4),
            t in proptest::collection::vec(0u32..4, 4),
            w in proptest::collection::vec(-5i64..6, 4),
        ) {
            let orders = [
                TermOrder::lex(4),
                TermOrder::grevlex(4),
                TermOrder::lex_by(vec![2, 0, 3, 1]).unwrap(),
                TermOrder::weight(w, TermOrder::grevlex(4)).unwrap(),
            ];
            let (ma, mb, mt) = (m(&a), m(&b), m(&t));
            for o in &orders {
                let c = o.compare(&ma, &mb).unwrap();
                proptest::prop_assert_eq!(c == Ordering::Equal, a == b);
                proptest::prop_assert_eq!(o.compare(&mb, &ma).unwrap(), c.reverse());
                let c2 = o.compare(&ma.checked_mul(&mt).unwrap(), &mb.checked_mul(&mt).unwrap()).unwrap();
                proptest::prop_assert_eq!(c, c2);
            }
        }
    }
}
