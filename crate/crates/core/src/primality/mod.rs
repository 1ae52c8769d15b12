//! `Φ₃` evaluation and inversion, primality verdicts, and factorization at
//! oracle scale.

mod bpsw;
mod rho;
mod small;
pub mod wide;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bpsw::is_probable_prime;
pub use small::is_prime_u64;
pub use wide::is_prime_u128;

/// Seed used by [`factor`] for its randomized splitting.
pub const DEFAULT_SEED: u64 = 0x5eed_0003;

/// `t^2 + t + 1`.
pub fn phi3(t: &BigUint) -> BigUint {
    t * t + t + 1u32
}

/// `t^2 + t + 1` for word-size arguments (exact: the result fits in 128 bits).
pub fn phi3_u64(t: u64) -> u128 {
    let t = t as u128;
    t * t + t + 1
}

/// The `a >= 0` with `a^2 + a + 1 = p`, if any.
///
/// `a^2 + a + 1 = p` iff `(2a + 1)^2 = 4p - 3`.
pub fn inv_phi3(p: &BigUint) -> Option<BigUint> {
    if p.is_zero() {
        return None;
    }
    let disc: BigUint = p * 4u32 - 3u32;
    let r = disc.sqrt();
    if &r * &r != disc {
        return None;
    }
    // r is odd whenever r^2 = 4p - 3.
    Some((r - 1u32) >> 1)
}

/// Word-size [`inv_phi3`].
pub fn inv_phi3_u64(p: u64) -> Option<u64> {
    if p == 0 {
        return None;
    }
    let disc = 4 * p as u128 - 3;
    let r = num_integer::Roots::sqrt(&disc);
    (r * r == disc).then(|| ((r - 1) / 2) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Composite,
    PrimeDeterministic,
    ProbablePrime,
}

impl Verdict {
    pub fn is_prime(self) -> bool {
        self != Verdict::Composite
    }
}

/// A primality verdict and the method that produced it.
///
/// Inputs below 2^64 always get a deterministic verdict; larger inputs get
/// `probable-prime` from Baillie-PSW, which is a label and not a proof.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimalityEvidence {
    pub verdict: Verdict,
    pub method: &'static str,
}

impl PrimalityEvidence {
    pub fn is_prime(&self) -> bool {
        self.verdict.is_prime()
    }

    /// Short tag used in certificates and reports.
    pub fn tag(&self) -> String {
        format!("{}:{}", verdict_str(self.verdict), self.method)
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Composite => "composite",
        Verdict::PrimeDeterministic => "prime",
        Verdict::ProbablePrime => "probable-prime",
    }
}

impl fmt::Display for PrimalityEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

pub const METHOD_DETERMINISTIC: &str = "mr64";
pub const METHOD_BPSW: &str = "bpsw";

pub fn evidence_u64(n: u64) -> PrimalityEvidence {
    let verdict = if is_prime_u64(n) {
        Verdict::PrimeDeterministic
    } else {
        Verdict::Composite
    };
    PrimalityEvidence {
        verdict,
        method: METHOD_DETERMINISTIC,
    }
}

/// Primality verdict for `n >= 1`.
pub fn is_prime(n: &BigUint) -> Result<PrimalityEvidence> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    if let Some(w) = n.to_u64() {
        return Ok(evidence_u64(w));
    }
    let verdict = if is_probable_prime(n) {
        Verdict::ProbablePrime
    } else {
        Verdict::Composite
    };
    Ok(PrimalityEvidence {
        verdict,
        method: METHOD_BPSW,
    })
}

/// Prime factorization as `(prime, exponent)` pairs, ascending by prime.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization(pub Vec<(u64, u32)>);

impl Factorization {
    fn from_sorted(primes: &[u64]) -> Self {
        let mut out: Vec<(u64, u32)> = Vec::new();
        for &p in primes {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
        Factorization(out)
    }

    pub fn value(&self) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    /// Primes repeated by multiplicity.
    pub fn primes_with_multiplicity(&self) -> impl Iterator<Item = u64> + '_ {
        self.0
            .iter()
            .flat_map(|&(p, e)| std::iter::repeat_n(p, e as usize))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Largest input [`factor`] accepts.
pub const FACTOR_LIMIT: u64 = u64::MAX;

/// Complete factorization of a word-size integer.
pub fn factor_u64(n: u64, seed: u64) -> Factorization {
    let primes = rho::prime_factors_u64(n, seed);
    let f = Factorization::from_sorted(&primes);
    debug_assert_eq!(f.value(), BigUint::from(n), "factorization does not multiply back");
    f
}

/// Complete factorization of `1 <= n <= 2^64 - 1`.
///
/// Larger inputs are refused rather than partially factored.
pub fn factor(n: &BigUint) -> Result<Factorization> {
    factor_with_seed(n, DEFAULT_SEED)
}

pub fn factor_with_seed(n: &BigUint, seed: u64) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let w = n.to_u64().ok_or_else(|| Error::Scale {
        what: "factor input",
        value: n.to_string(),
        limit: FACTOR_LIMIT.to_string(),
    })?;
    Ok(factor_u64(w, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn phi3_examples() {
        assert_eq!(phi3(&big(1)), big(3));
        assert_eq!(phi3(&big(0)), big(1));
        assert_eq!(phi3(&big(18)), big(343));
        assert_eq!(phi3_u64(u64::MAX), {
            let t = BigUint::from(u64::MAX);
            let v = phi3(&t);
            v.to_u128().unwrap()
        });
    }

    #[test]
    fn inv_phi3_examples() {
        assert_eq!(inv_phi3(&big(7)), Some(big(2)));
        assert_eq!(inv_phi3(&big(5)), None);
        assert_eq!(inv_phi3(&big(307)), Some(big(17)));
        assert_eq!(inv_phi3(&big(1)), Some(big(0)));
        assert_eq!(inv_phi3(&big(0)), None);
        assert_eq!(inv_phi3_u64(307), Some(17));
        assert_eq!(inv_phi3_u64(5), None);
    }

    #[test]
    fn inv_phi3_roundtrip() {
        for t in 0..1_000_000u64 {
            assert_eq!(inv_phi3_u64(phi3_u64(t) as u64), Some(t));
        }
        for t in (0..1_000_000u64).step_by(997) {
            assert_eq!(inv_phi3(&phi3(&big(t))), Some(big(t)));
        }
        for p in 2..10_000u64 {
            if let Some(a) = inv_phi3_u64(p) {
                assert_eq!(phi3_u64(a), p as u128);
            }
        }
    }

    #[test]
    fn is_prime_examples() {
        let e = is_prime(&big(191)).unwrap();
        assert_eq!(e.verdict, Verdict::PrimeDeterministic);
        assert_eq!(is_prime(&big(343)).unwrap().verdict, Verdict::Composite);
        assert_eq!(is_prime(&big(1)).unwrap().verdict, Verdict::Composite);
        assert!(matches!(is_prime(&big(0)), Err(Error::ZeroInput)));
        let big_arg: BigUint = "39640921169".parse().unwrap();
        let e = is_prime(&phi3(&big_arg)).unwrap();
        assert_eq!(e.verdict, Verdict::ProbablePrime);
        assert_eq!(e.tag(), "probable-prime:bpsw");
    }

    #[test]
    fn verdicts_are_stable() {
        let n: BigUint = "1571400628930424061693".parse().unwrap();
        let first = is_prime(&n).unwrap();
        for _ in 0..3 {
            assert_eq!(is_prime(&n).unwrap(), first);
        }
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor(&big(651)).unwrap().0, vec![(3, 1), (7, 1), (31, 1)]);
        assert!(factor(&big(1)).unwrap().is_empty());
        assert_eq!(factor(&big(27391)).unwrap().0, vec![(7, 2), (13, 1), (43, 1)]);
        assert!(matches!(factor(&big(0)), Err(Error::ZeroInput)));
        let too_big = BigUint::from(u64::MAX) + 1u32;
        assert!(matches!(factor(&too_big), Err(Error::Scale { .. })));
    }

    #[test]
    fn factor_is_seed_independent() {
        let n = big(999_999_000_001 * 17 * 17);
        let a = factor_with_seed(&n, 1).unwrap();
        let b = factor_with_seed(&n, 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.value(), n);
    }

    /// Congruence facts about divisors of x^2 + x + 1.
    #[test]
    fn phi3_divisor_congruences() {
        for x in 1..=100_000u64 {
            let v = phi3_u64(x) as u64;
            assert_eq!(v.is_multiple_of(3), x % 3 == 1, "x = {x}");
            assert_ne!(v % 9, 0, "x = {x}");
        }
        for x in (1..=100_000u64).step_by(7) {
            let f = factor_u64(phi3_u64(x) as u64, DEFAULT_SEED);
            for (p, _) in f.0 {
                assert!(p == 3 || p % 3 == 1, "x = {x}, p = {p}");
            }
        }
    }
}
