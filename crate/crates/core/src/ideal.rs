use alloc::vec::Vec;

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::lattice::{positive_grading, Grading};
use crate::monomial::VariableContext;

/// A finitely generated ideal of pure-difference binomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialIdeal {
    context: VariableContext,
    generators: Vec<Binomial>,
}

impl BinomialIdeal {
    /// Duplicate generators (equal up to sign) are dropped, keeping the
    /// first occurrence.
    pub fn new(context: VariableContext, generators: impl IntoIterator<Item = Binomial>) -> Result<Self> {
        let mut gens: Vec<Binomial> = Vec::new();
        for g in generators {
            if g.nvars() != context.len() {
                return Err(Error::DimensionMismatch { expected: context.len(), found: g.nvars() });
            }
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(BinomialIdeal { context, generators: gens })
    }

    pub fn context(&self) -> &VariableContext {
        &self.context
    }

    pub fn nvars(&self) -> usize {
        self.context.len()
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn vectors(&self) -> Vec<Vec<i64>> {
        self.generators.iter().map(Binomial::vector).collect()
    }

    /// Same context, other generators.
    pub fn with_generators(&self, generators: impl IntoIterator<Item = Binomial>) -> Result<Self> {
        Self::new(self.context.clone(), generators)
    }

    /// A strictly positive grading making every generator homogeneous,
    /// preferring all-ones.
    pub fn grading(&self) -> Result<Grading> {
        positive_grading(&self.vectors(), self.nvars())?.ok_or(Error::NotHomogeneous)
    }

    /// Generators supported on the first `k` variables, in a `k`-variable
    /// context.
    pub fn restrict_to_variables(&self, k: usize) -> Result<Self> {
        if k > self.nvars() {
            return Err(Error::invalid("restriction length exceeds the number of variables"));
        }
        if k == self.nvars() {
            return Ok(self.clone());
        }
        let gens = self
            .generators
            .iter()
            .filter(|g| g.support().iter().all(|&i| i < k))
            .map(|g| g.restrict(k))
            .collect::<Result<Vec<_>>>()?;
        if k == 0 {
            return Err(Error::invalid("restriction to zero variables has no context"));
        }
        let names: Vec<usize> = (0..k).collect();
        Self::new(self.context.select(&names)?, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;

    #[test]
    fn restriction_by_support() {
        let i = parse_ideal("x1 x2 x3 x4 x5 x6", &["x1*x2 - x3*x4", "x1*x5 - x2*x6"]).unwrap();
        let r = i.restrict_to_variables(4).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.nvars(), 4);
        assert_eq!(i.restrict_to_variables(6).unwrap(), i);
    }

    #[test]
    fn duplicates_collapse() {
        let i = parse_ideal("x y", &["x - y", "y - x"]).unwrap();
        assert_eq!(i.len(), 1);
    }

    #[test]
    fn grading_detection() {
        let i = parse_ideal("x y z", &["x*z - y^2"]).unwrap();
        assert_eq!(i.grading().unwrap().weights(), &[1, 1, 1]);
        let j = parse_ideal("x y", &["x^2 - y"]).unwrap();
        assert_eq!(j.grading().unwrap().weights(), &[1, 2]);
        let k = parse_ideal("x y", &["x^2 - y", "x - y"]).unwrap();
        assert_eq!(k.grading(), Err(Error::NotHomogeneous));
    }
}
