//! Exact strict feasibility of homogeneous sign systems by Fourier–Motzkin
//! elimination.
//!
//! A system is a list of pairs `(v, σ)` asking for `σ·(v·w) > 0`. Every
//! elimination step combines a positive and a negative occurrence of the
//! chosen variable; Chernikov's rule drops combinations built from more
//! than `k + 1` original rows after `k` eliminations, and duplicate rows are
//! merged. A feasible system yields an explicit rational witness by
//! back-substitution through the stored stages.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedAdd, CheckedMul, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn of(x: &BigInt) -> Option<Sign> {
        match x.sign() {
            num_bigint::Sign::Plus => Some(Sign::Positive),
            num_bigint::Sign::Minus => Some(Sign::Negative),
            num_bigint::Sign::NoSign => None,
        }
    }
}

trait Exact: Clone + Ord + Integer + Signed + CheckedMul + CheckedAdd + From<i64> + Into<BigInt> {}
impl Exact for i128 {}
impl Exact for BigInt {}

#[derive(Clone)]
struct Row<T> {
    a: Vec<T>,
    hist: Vec<u64>,
}

fn hist_len(h: &[u64]) -> u32 {
    h.iter().map(|w| w.count_ones()).sum()
}

fn normalize<T: Exact>(a: &mut [T]) {
    let g = a.iter().fold(T::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in a.iter_mut() {
            *x = x.div_floor(&g);
        }
    }
}

struct Overflow;

/// Runs elimination; `Ok(None)` when infeasible, otherwise the stages for
/// back-substitution.
#[allow(clippy::type_complexity)]
fn eliminate<T: Exact>(rows: Vec<Vec<T>>, dim: usize) -> core::result::Result<Option<Vec<(usize, Vec<Vec<T>>)>>, Overflow> {
    let words = rows.len().div_ceil(64).max(1);
    let mut current: Vec<Row<T>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, mut a)| {
            normalize(&mut a);
            let mut hist = alloc::vec![0u64; words];
            hist[i / 64] |= 1 << (i % 64);
            Row { a, hist }
        })
        .collect();
    if current.iter().any(|r| r.a.iter().all(Zero::is_zero)) {
        return Ok(None);
    }
    dedup(&mut current);
    let mut stages = Vec::new();
    let mut eliminated = 0u32;
    let mut remaining: Vec<bool> = alloc::vec![true; dim];
    while !current.is_empty() {
        let mut best: Option<(i64, usize)> = None;
        for v in (0..dim).filter(|&v| remaining[v]) {
            let pos = current.iter().filter(|r| r.a[v].is_positive()).count() as i64;
            let neg = current.iter().filter(|r| r.a[v].is_negative()).count() as i64;
            if pos + neg == 0 {
                continue;
            }
            let cost = pos * neg - pos - neg;
            if best.is_none_or(|(c, _)| cost < c) {
                best = Some((cost, v));
            }
        }
        let Some((_, v)) = best else {
            // rows remain but every coefficient is zero
            return Ok(None);
        };
        remaining[v] = false;
        eliminated += 1;
        stages.push((v, current.iter().map(|r| r.a.clone()).collect()));
        let (mut pos, mut neg, mut next) = (Vec::new(), Vec::new(), Vec::new());
        for r in current {
            match r.a[v].cmp(&T::zero()) {
                Ordering::Greater => pos.push(r),
                Ordering::Less => neg.push(r),
                Ordering::Equal => next.push(r),
            }
        }
        for p in &pos {
            for q in &neg {
                let hist: Vec<u64> = p.hist.iter().zip(&q.hist).map(|(a, b)| a | b).collect();
                if hist_len(&hist) > eliminated + 1 {
                    continue;
                }
                let (cp, cq) = (p.a[v].clone(), -q.a[v].clone());
                let mut a = Vec::with_capacity(dim);
                for (x, y) in p.a.iter().zip(&q.a) {
                    let s = cq.checked_mul(x).and_then(|s| cp.checked_mul(y).and_then(|t| s.checked_add(&t)));
                    a.push(s.ok_or(Overflow)?);
                }
                normalize(&mut a);
                if a.iter().all(Zero::is_zero) {
                    return Ok(None);
                }
                next.push(Row { a, hist });
            }
        }
        dedup(&mut next);
        current = next;
    }
    Ok(Some(stages))
}

/// Drops a row when an equal row has a history contained in its own; equal
/// rows with incomparable histories are both needed by Chernikov's rule.
fn dedup<T: Exact>(rows: &mut Vec<Row<T>>) {
    rows.sort_by(|x, y| x.a.cmp(&y.a).then_with(|| hist_len(&x.hist).cmp(&hist_len(&y.hist))));
    let mut kept: Vec<Row<T>> = Vec::with_capacity(rows.len());
    let mut group = 0;
    for r in rows.drain(..) {
        if kept.get(group).is_some_and(|g| g.a != r.a) {
            group = kept.len();
        }
        let redundant = kept[group.min(kept.len())..]
            .iter()
            .any(|k| k.hist.iter().zip(&r.hist).all(|(a, b)| a & !b == 0));
        if !redundant {
            kept.push(r);
        }
    }
    *rows = kept;
}

fn to_rational<T: Exact>(x: &T) -> BigRational {
    BigRational::from_integer(x.clone().into())
}

fn back_substitute<T: Exact>(stages: &[(usize, Vec<Vec<T>>)], dim: usize) -> Vec<BigRational> {
    let mut w: Vec<BigRational> = alloc::vec![BigRational::zero(); dim];
    for (v, rows) in stages.iter().rev() {
        let v = *v;
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for a in rows {
            if a[v].is_zero() {
                continue;
            }
            let rest: BigRational = a
                .iter()
                .enumerate()
                .filter(|&(j, x)| j != v && !x.is_zero())
                .map(|(j, x)| to_rational(x) * &w[j])
                .sum();
            let c = to_rational(&a[v]);
            let bound = -rest / &c;
            if c.is_positive() {
                if lower.as_ref().is_none_or(|l| bound > *l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|u| bound < *u) {
                upper = Some(bound);
            }
        }
        w[v] = match (lower, upper) {
            (None, None) => BigRational::zero(),
            (Some(l), None) => l.floor() + BigRational::one(),
            (None, Some(u)) => u.ceil() - BigRational::one(),
            (Some(l), Some(u)) => {
                let cand = l.floor() + BigRational::one();
                if cand < u {
                    cand
                } else {
                    (l + u) / BigRational::from_integer(2.into())
                }
            }
        };
    }
    w
}

fn satisfies(rows: &[Vec<BigInt>], w: &[BigRational]) -> bool {
    rows.iter().all(|a| {
        let s: BigRational = a.iter().zip(w).map(|(x, y)| BigRational::from_integer(x.clone()) * y).sum();
        s.is_positive()
    })
}

/// Integer form of the system: each row scaled so that `row·w > 0` is asked.
fn oriented_rows(constraints: &[(Vec<BigInt>, Sign)]) -> Vec<Vec<BigInt>> {
    constraints
        .iter()
        .map(|(v, s)| match s {
            Sign::Positive => v.clone(),
            Sign::Negative => v.iter().map(|x| -x).collect(),
        })
        .collect()
}

/// Decides `∃ w ∈ ℚ^dim : σ_i·(v_i·w) > 0 ∀ i` and returns a primitive
/// integer witness.
pub fn strict_feasible_int(dim: usize, constraints: &[(Vec<BigInt>, Sign)]) -> Result<Option<Vec<BigInt>>> {
    for (v, _) in constraints {
        if v.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
    }
    let rows = oriented_rows(constraints);
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().map(i128::from)).collect())
        .collect();
    let witness = match small.map(|s| eliminate::<i128>(s, dim)) {
        Some(Ok(None)) => return Ok(None),
        Some(Ok(Some(stages))) => back_substitute(&stages, dim),
        Some(Err(Overflow)) | None => match eliminate::<BigInt>(rows.clone(), dim) {
            Ok(None) => return Ok(None),
            Ok(Some(stages)) => back_substitute(&stages, dim),
            Err(Overflow) => unreachable!("arbitrary precision does not overflow"),
        },
    };
    if !satisfies(&rows, &witness) {
        return Err(Error::invalid("Fourier–Motzkin witness failed verification"));
    }
    Ok(Some(primitive(&witness)))
}

/// Rational front end of [`strict_feasible_int`].
pub fn strict_feasible(dim: usize, constraints: &[(Vec<BigRational>, Sign)]) -> Result<Option<Vec<BigRational>>> {
    let ints: Vec<(Vec<BigInt>, Sign)> = constraints
        .iter()
        .map(|(v, s)| {
            let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            (v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect(), *s)
        })
        .collect();
    Ok(strict_feasible_int(dim, &ints)?.map(|w| w.into_iter().map(BigRational::from_integer).collect()))
}

/// Positive multiple of a rational vector with coprime integer entries.
pub fn primitive(w: &[BigRational]) -> Vec<BigInt> {
    let l = w.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = w.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(v: &[i64], s: Sign) -> (Vec<BigInt>, Sign) {
        (v.iter().map(|&x| BigInt::from(x)).collect(), s)
    }

    fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn single_constraint() {
        let w = strict_feasible_int(2, &[c(&[1, -1], Sign::Positive)]).unwrap().unwrap();
        assert!(w[0] > w[1]);
    }

    #[test]
    fn contradictory_signs() {
        let sys = [c(&[1, -1], Sign::Positive), c(&[1, -1], Sign::Negative)];
        assert_eq!(strict_feasible_int(2, &sys).unwrap(), None);
        let sys = [c(&[1, 0], Sign::Positive), c(&[0, 1], Sign::Positive), c(&[1, 1], Sign::Negative)];
        assert_eq!(strict_feasible_int(2, &sys).unwrap(), None);
        assert_eq!(strict_feasible_int(2, &[c(&[0, 0], Sign::Positive)]).unwrap(), None);
    }

    #[test]
    fn minors_marking_is_realizable() {
        // x1 > x2 > x3 > y*: lead terms x1y2, x1y3, x2y3 of the three minors
        // over x1 x2 x3 y1 y2 y3.
        let sys = [
            c(&[1, -1, 0, -1, 1, 0], Sign::Positive),
            c(&[1, 0, -1, -1, 0, 1], Sign::Positive),
            c(&[0, 1, -1, 0, -1, 1], Sign::Positive),
        ];
        let w = strict_feasible_int(6, &sys).unwrap().unwrap();
        for (v, _) in &sys {
            assert!(dot(v, &w) > BigInt::zero());
        }
    }

    #[test]
    fn empty_system_and_mismatch() {
        assert_eq!(strict_feasible_int(3, &[]).unwrap(), Some(vec![BigInt::zero(); 3]));
        assert!(strict_feasible_int(3, &[c(&[1, 0], Sign::Positive)]).is_err());
    }

    #[test]
    fn rational_interface() {
        let half = BigRational::new(1.into(), 2.into());
        let sys = vec![(vec![half.clone(), -half], Sign::Negative)];
        let w = strict_feasible(2, &sys).unwrap().unwrap();
        assert!(w[0] < w[1]);
    }

    /// Independent check: a system of two-dimensional constraints is
    /// feasible iff some direction on a fine grid of the circle satisfies
    /// it, since the feasible region is an open cone.
    fn grid_feasible(rows: &[(Vec<BigInt>, Sign)]) -> bool {
        let n = 720;
        (0..n).any(|k| {
            let t = k as f64 * core::f64::consts::TAU / n as f64 + 0.0007;
            let (x, y) = (t.cos(), t.sin());
            rows.iter().all(|(v, s)| {
                let d = v[0].to_f64().unwrap() * x + v[1].to_f64().unwrap() * y;
                match s {
                    Sign::Positive => d > 1e-9,
                    Sign::Negative => d < -1e-9,
                }
            })
        })
    }

    proptest::proptest! {
        #[test]
        fn agrees_with_grid_search_in_the_plane(
            rows in proptest::collection::vec((proptest::collection::vec(-3i64..4, 2), proptest::bool::ANY), 1..6)
        ) {
            let sys: Vec<(Vec<BigInt>, Sign)> = rows
                .iter()
                .filter(|(v, _)| v.iter().any(|&x| x != 0))
                .map(|(v, s)| c(v, if *s { Sign::Positive } else { Sign::Negative }))
                .collect();
            let fm = strict_feasible_int(2, &sys).unwrap();
            if let Some(w) = &fm {
                for (v, s) in &sys {
                    let d = dot(v, w);
                    proptest::prop_assert_eq!(Sign::of(&d), Some(*s));
                }
            }
            proptest::prop_assert_eq!(fm.is_some(), grid_feasible(&sys));
        }

        #[test]
        fn witnesses_verify_in_higher_dimension(
            rows in proptest::collection::vec(proptest::collection::vec(-2i64..3, 4), 1..9)
        ) {
            // orient each row by a fixed point so the system is feasible
            let p = [3i64, -1, 2, 5];
            let sys: Vec<(Vec<BigInt>, Sign)> = rows
                .iter()
                .filter_map(|v| {
                    let d: i64 = v.iter().zip(&p).map(|(a, b)| a * b).sum();
                    match d.cmp(&0) {
                        Ordering::Greater => Some(c(v, Sign::Positive)),
                        Ordering::Less => Some(c(v, Sign::Negative)),
                        Ordering::Equal => None,
                    }
                })
                .collect();
            let w = strict_feasible_int(4, &sys).unwrap();
            proptest::prop_assert!(w.is_some());
        }
    }
}
