//! Sparse polynomials over `Z` in the variables `a, b, c, d`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub const VARIABLES: [char; 4] = ['a', 'b', 'c', 'd'];

pub type Exponents = [u32; 4];

/// Exact polynomial with integer coefficients. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl IntPolynomial {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = IntPolynomial::default();
        p.add_term([0; 4], c.into());
        p
    }

    /// The variable with index `i` (0 = a, ..., 3 = d).
    pub fn var(i: usize) -> Self {
        assert!(i < 4, "only four variables");
        let mut e = [0; 4];
        e[i] = 1;
        let mut p = IntPolynomial::default();
        p.add_term(e, BigInt::one());
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coefficient(&self, e: &Exponents) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn eval(&self, point: &[BigInt; 4]) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, v)| acc * v.pow(k))
            })
            .sum()
    }

    /// Terms in printing order: higher total degree first, then
    /// lexicographically larger exponent vectors first.
    fn ordered_terms(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(x, _), (y, _)| {
            let dx: u32 = x.iter().sum();
            let dy: u32 = y.iter().sum();
            dy.cmp(&dx).then_with(|| y.cmp(x))
        });
        v
    }
}

impl Zero for IntPolynomial {
    fn zero() -> Self {
        IntPolynomial::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(mut self) -> IntPolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Renders like `abc-a-b-c-1` or `2a^2b+3`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.ordered_terms().into_iter().enumerate() {
            let is_const = e.iter().all(|&k| k == 0);
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for (v, &k) in VARIABLES.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "{v}")?,
                    _ => write!(f, "{v}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Parses the [`Display`](fmt::Display) format back, e.g. `ab-ac-bc-c-1`.
impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: &str| Error::Invalid(format!("polynomial {s:?}: {why}"));
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = IntPolynomial::default();
        let mut i = 0;
        while i < chars.len() {
            let mut sign = BigInt::one();
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad("expected + or -"));
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: BigInt = if i > start {
                chars[start..i].iter().collect::<String>().parse().unwrap()
            } else {
                BigInt::one()
            };
            let mut e = [0u32; 4];
            let mut saw_var = false;
            while i < chars.len() {
                let Some(v) = VARIABLES.iter().position(|&v| v == chars[i]) else {
                    break;
                };
                i += 1;
                let mut k = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let s0 = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    k = chars[s0..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| bad("bad exponent"))?;
                }
                e[v] += k;
                saw_var = true;
            }
            if i == start && !saw_var {
                return Err(bad("empty term"));
            }
            out.add_term(e, sign * coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn display_roundtrip() {
        for s in [
            "abc-a-b-c-1",
            "ab+ac+bc+a+b+c",
            "ab-ac-bc-c-1",
            "a-b",
            "2a^2b-3",
            "-a+1",
            "0",
        ] {
            let poly = if s == "0" { IntPolynomial::zero() } else { p(s) };
            assert_eq!(poly.to_string(), s);
        }
    }

    #[test]
    fn parse_collects_like_terms() {
        assert_eq!(p("a+a-2a"), IntPolynomial::zero());
        assert_eq!(p("ba"), p("ab"));
        assert_eq!(p("a^2"), &IntPolynomial::var(0) * &IntPolynomial::var(0));
        assert!("a+".parse::<IntPolynomial>().is_err());
        assert!("x".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::var(0);
        let b = IntPolynomial::var(1);
        let one = IntPolynomial::constant(1);
        // (a + 1)(b + 1) = ab + a + b + 1
        let prod = &(&a + &one) * &(&b + &one);
        assert_eq!(prod, p("ab+a+b+1"));
        assert_eq!(&prod - &prod, IntPolynomial::zero());
        assert_eq!(-p("a-1"), p("1-a"));
    }

    #[test]
    fn eval() {
        let point = [2, 3, 5, 7].map(BigInt::from);
        assert_eq!(p("abc-a-b-c-1").eval(&point), BigInt::from(30 - 10 - 1));
        assert_eq!(p("d^2-4").eval(&point), BigInt::from(45));
        assert_eq!(IntPolynomial::zero().eval(&point), BigInt::zero());
    }
}
