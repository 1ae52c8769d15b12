use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::primality::{is_prime, phi3};

/// `x` together with a multiset `{a_1, ..., a_n}` such that
/// `Φ₃(x) = Φ₃(a_1) ... Φ₃(a_n)`. Arguments are kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    x: BigUint,
    args: Vec<BigUint>,
}

pub fn product_of_phi3<'a>(args: impl IntoIterator<Item = &'a BigUint>) -> BigUint {
    args.into_iter().fold(BigUint::one(), |acc, a| acc * phi3(a))
}

impl Solution {
    /// A same-form factorization: the product identity holds and every
    /// `Φ₃(a_i)` is prime.
    pub fn new(x: BigUint, args: Vec<BigUint>) -> Result<Self> {
        let sol = Self::from_identity(x, args)?;
        for a in &sol.args {
            if !is_prime(&phi3(a))?.is_prime() {
                return Err(Error::NotASolution(format!("Φ₃({a}) is not prime")));
            }
        }
        Ok(sol)
    }

    /// Checks only the product identity, so family formulas can be probed on
    /// arguments whose `Φ₃` values are composite.
    pub fn from_identity(x: BigUint, mut args: Vec<BigUint>) -> Result<Self> {
        if x.is_zero() || args.is_empty() || args.iter().any(Zero::is_zero) {
            return Err(Error::NotASolution("x and every argument must be positive".into()));
        }
        args.sort();
        if phi3(&x) != product_of_phi3(&args) {
            return Err(Error::NotASolution(format!(
                "Φ₃({x}) != product of Φ₃ over {}",
                join(&args)
            )));
        }
        Ok(Solution { x, args })
    }

    /// Constructor for callers that have already established the identity.
    pub(crate) fn trusted(x: BigUint, mut args: Vec<BigUint>) -> Self {
        args.sort();
        debug_assert_eq!(phi3(&x), product_of_phi3(&args));
        Solution { x, args }
    }

    pub fn x(&self) -> &BigUint {
        &self.x
    }

    /// Arguments, ascending.
    pub fn args(&self) -> &[BigUint] {
        &self.args
    }

    pub fn n(&self) -> usize {
        self.args.len()
    }

    /// True when `Φ₃(x)` is itself prime (the `n = 1` rows of the oracle).
    pub fn is_trivial(&self) -> bool {
        self.args.len() == 1
    }

    pub fn args_string(&self) -> String {
        join(&self.args)
    }
}

pub(crate) fn join(args: &[BigUint]) -> String {
    args.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} args={{{}}}", self.x, self.args_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn sorts_and_validates() {
        let s = Solution::new(BigUint::from(16u32), v(&[3, 1, 2])).unwrap();
        assert_eq!(s.args(), v(&[1, 2, 3]).as_slice());
        assert_eq!(s.n(), 3);
        assert_eq!(s.to_string(), "x=16 args={1,2,3}");
    }

    #[test]
    fn rejects_broken_identity() {
        assert!(Solution::new(BigUint::from(17u32), v(&[1, 2, 3])).is_err());
        assert!(Solution::new(BigUint::zero(), v(&[1])).is_err());
        assert!(Solution::new(BigUint::from(4u32), vec![]).is_err());
    }

    #[test]
    fn identity_only_allows_composite_factors() {
        // Φ₃(16) = 273 = Φ₃(3) Φ₃(4) = 13 * 21, and 21 is composite.
        let s = Solution::from_identity(BigUint::from(16u32), v(&[3, 4])).unwrap();
        assert_eq!(s.n(), 2);
        assert!(Solution::new(BigUint::from(16u32), v(&[3, 4])).is_err());
    }
}
