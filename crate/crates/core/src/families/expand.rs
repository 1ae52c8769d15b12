use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use super::solution::product_of_phi3;
use crate::eisenstein::{recognize, Eisenstein, EisensteinInt};
use crate::error::{Error, Result};
use crate::primality::inv_phi3;

/// Which conjugate prime of `Φ₃(a_i)` divides `x + w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// `a_i + w`
    Direct,
    /// `1 + a_i w`
    Twisted,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SelectionVector(Vec<Factor>);

pub const MIN_FACTORS: usize = 2;
pub const MAX_FACTORS: usize = 4;

fn check_arity(n: usize) -> Result<()> {
    if (MIN_FACTORS..=MAX_FACTORS).contains(&n) {
        Ok(())
    } else {
        Err(Error::Arity {
            min: MIN_FACTORS,
            max: MAX_FACTORS,
            got: n,
        })
    }
}

impl SelectionVector {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        check_arity(factors.len())?;
        Ok(SelectionVector(factors))
    }

    pub fn all_direct(n: usize) -> Result<Self> {
        Self::new(vec![Factor::Direct; n])
    }

    /// All `2^n` selections of length `n`.
    pub fn enumerate(n: usize) -> Result<Vec<Self>> {
        check_arity(n)?;
        Ok((0..1u32 << n)
            .map(|mask| {
                SelectionVector(
                    (0..n)
                        .map(|i| {
                            if mask >> i & 1 == 1 {
                                Factor::Twisted
                            } else {
                                Factor::Direct
                            }
                        })
                        .collect(),
                )
            })
            .collect())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SelectionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .0
            .iter()
            .map(|s| match s {
                Factor::Direct => "direct",
                Factor::Twisted => "twisted",
            })
            .collect();
        f.write_str(&names.join(","))
    }
}

/// Accepts `direct,twisted,...` or the compact form `dt...`.
impl FromStr for SelectionVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_one = |t: &str| match t.trim() {
            "direct" | "d" => Ok(Factor::Direct),
            "twisted" | "t" => Ok(Factor::Twisted),
            other => Err(Error::Invalid(format!("unknown factor kind {other:?}"))),
        };
        let factors = if s.contains(',') {
            s.split(',').map(parse_one).collect::<Result<Vec<_>>>()?
        } else if s.chars().all(|c| c == 'd' || c == 't') {
            s.chars()
                .map(|c| parse_one(&c.to_string()))
                .collect::<Result<Vec<_>>>()?
        } else {
            vec![parse_one(s)?]
        };
        Self::new(factors)
    }
}

fn factor_element<T: Clone>(kind: Factor, value: T, one: T) -> Eisenstein<T> {
    match kind {
        Factor::Direct => Eisenstein::new(value, one),
        Factor::Twisted => Eisenstein::new(one, value),
    }
}

/// Coefficients `(P_m, P_n)` of `prod_i f_i = P_m + P_n w` where `f_i` is
/// `a_i + w` or `1 + a_i w` according to `sel`, in the variables `a, b, c, d`.
pub fn expand_product(sel: &SelectionVector) -> Result<(IntPolynomial, IntPolynomial)> {
    check_arity(sel.len())?;
    let one = IntPolynomial::constant(1);
    let product = sel
        .factors()
        .iter()
        .enumerate()
        .map(|(i, &kind)| factor_element(kind, IntPolynomial::var(i), one.clone()))
        .reduce(|acc, f| acc.mul(&f))
        .expect("arity checked");
    Ok((product.m, product.n))
}

/// The same product evaluated at concrete arguments.
pub fn eisenstein_product(args: &[BigUint], sel: &SelectionVector) -> EisensteinInt {
    assert_eq!(args.len(), sel.len(), "selection length must match arguments");
    args.iter()
        .zip(sel.factors())
        .map(|(a, &kind)| factor_element(kind, BigInt::from(a.clone()), BigInt::one()))
        .fold(EisensteinInt::from_i64(1, 0), |acc, f| acc.mul(&f))
}

/// `x` with `x^2 + x + 1 = prod Φ₃(a_i)`, read off an exact integer square root.
pub fn quadratic_root_x(args: &[BigUint]) -> Option<BigUint> {
    inv_phi3(&product_of_phi3(args)).filter(|x| !x.is_zero())
}

/// `x` recovered by recognizing the product selected by `sel` as a unit
/// multiple of `x + w` or its conjugate.
///
/// Panics if the recognizer and [`quadratic_root_x`] both succeed but
/// disagree, which would mean the norm is not multiplicative.
pub fn compute_x(args: &[BigUint], sel: &SelectionVector) -> Result<Option<BigUint>> {
    check_arity(args.len())?;
    if args.len() != sel.len() {
        return Err(Error::Invalid(format!(
            "{} arguments but selection of length {}",
            args.len(),
            sel.len()
        )));
    }
    let product = eisenstein_product(args, sel);
    let Some(r) = recognize(&product) else {
        return Ok(None);
    };
    if let Some(q) = quadratic_root_x(args) {
        assert_eq!(r.x, q, "recognizer and quadratic root disagree on {args:?}");
    }
    Ok(Some(r.x).filter(|x| !x.is_zero()))
}

/// `x` for an argument multiset by the quadratic-root path, confirmed by
/// finding a selection whose product the recognizer maps to the same `x`.
pub fn solve_x(args: &[BigUint]) -> Result<Option<BigUint>> {
    check_arity(args.len())?;
    let Some(q) = quadratic_root_x(args) else {
        return Ok(None);
    };
    for sel in SelectionVector::enumerate(args.len())? {
        if let Some(x) = compute_x(args, &sel)? {
            debug_assert_eq!(x, q);
            return Ok(Some(x));
        }
    }
    // A square root exists but no selection is recognized: only possible
    // when some Φ₃(a_i) is composite and splits differently.
    Ok(None)
}
