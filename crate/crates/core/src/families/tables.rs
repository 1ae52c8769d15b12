//! The parameterized families and sporadic solutions for two, three and four
//! factors.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::expand::solve_x;
use super::solution::Solution;
use crate::error::{Error, Result};

/// `((a+1)^2, {a, a+1})`. The identity holds for every `a >= 1`; primality of
/// the factors is not checked here.
pub fn two_factor_family(a: &BigUint) -> Result<Solution> {
    if a.is_zero() {
        return Err(Error::Invalid("two-factor family needs a >= 1".into()));
    }
    let b = a + 1u32;
    let x = &b * &b;
    Solution::from_identity(x, vec![a.clone(), b])
}

/// For `1 <= a <= b` with `(a + b + 1) | ab`: `c = ab / (a + b + 1)` and
/// `x = c(ab + a + b) + a + b`. `None` when `c` is not an integer or the
/// ordering precondition fails.
pub fn three_factor_family(a: &BigUint, b: &BigUint) -> Option<Solution> {
    let (c, x) = three_factor_params(a, b)?;
    Some(Solution::trusted(x, vec![a.clone(), b.clone(), c]))
}

/// `(c, x)` of [`three_factor_family`] without building a [`Solution`].
pub fn three_factor_params(a: &BigUint, b: &BigUint) -> Option<(BigUint, BigUint)> {
    if a.is_zero() || a > b {
        return None;
    }
    let ab = a * b;
    let (c, r) = ab.div_rem(&(a + b + 1u32));
    if !r.is_zero() {
        return None;
    }
    let x = &c * (&ab + a + b) + a + b;
    Some((c, x))
}

/// The four rational parameterizations `d = N(a,b,c) / D(a,b,c)` of
/// four-factor solutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FourFamily {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
}

impl FourFamily {
    pub const ALL: [FourFamily; 4] = [
        FourFamily::One,
        FourFamily::Two,
        FourFamily::Three,
        FourFamily::Four,
    ];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(k: u8) -> Result<Self> {
        Self::ALL
            .get((k as usize).wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::Invalid(format!("four-factor family index {k} not in 1..=4")))
    }

    pub fn numerator_text(self) -> &'static str {
        match self {
            FourFamily::One => "abc-a-b-c-2",
            FourFamily::Two => "abc-a-b-c",
            FourFamily::Three => "abc+ab+a+b-c-1",
            FourFamily::Four => "abc+ab+a+b-c+1",
        }
    }

    pub fn denominator_text(self) -> &'static str {
        match self {
            FourFamily::One | FourFamily::Two => "ab+ac+bc+a+b+c",
            FourFamily::Three | FourFamily::Four => "ac+bc-ab+c+1",
        }
    }

    pub fn side_conditions(self) -> &'static str {
        match self {
            FourFamily::One | FourFamily::Two => "a<=b<=c",
            FourFamily::Three | FourFamily::Four => "a<=b, a<=c",
        }
    }

    /// Normalization of the parameters.
    pub fn admits(self, a: &BigUint, b: &BigUint, c: &BigUint) -> bool {
        match self {
            FourFamily::One | FourFamily::Two => a <= b && b <= c,
            FourFamily::Three | FourFamily::Four => a <= b && a <= c,
        }
    }

    /// `(N, D)` as exact integers.
    pub fn ratio(self, a: &BigUint, b: &BigUint, c: &BigUint) -> (BigInt, BigInt) {
        let (a, b, c) = (BigInt::from(a.clone()), BigInt::from(b.clone()), BigInt::from(c.clone()));
        let abc = &a * &b * &c;
        let ab = &a * &b;
        let ac = &a * &c;
        let bc = &b * &c;
        match self {
            FourFamily::One | FourFamily::Two => {
                let shift = if self == FourFamily::One { 2 } else { 0 };
                (abc - &a - &b - &c - shift, ab + ac + bc + a + b + c)
            }
            FourFamily::Three | FourFamily::Four => {
                let shift = if self == FourFamily::Three { -1 } else { 1 };
                (abc + &ab + &a + &b - &c + shift, ac + bc - ab + c + 1)
            }
        }
    }
}

impl fmt::Display for FourFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "four-factor-family-{}", self.index())
    }
}

/// `d` for family `k` at `(a, b, c)` if it is a positive integer and the
/// parameters satisfy the family's ordering.
pub fn four_factor_family(k: FourFamily, a: &BigUint, b: &BigUint, c: &BigUint) -> Option<BigUint> {
    if a.is_zero() || !k.admits(a, b, c) {
        return None;
    }
    let (num, den) = k.ratio(a, b, c);
    if !den.is_positive() {
        return None;
    }
    let (d, r) = num.div_rem(&den);
    if !r.is_zero() || !d.is_positive() {
        return None;
    }
    d.to_biguint()
}

/// Full solution for a four-family parameter triple, with `x` computed.
pub fn four_factor_solution(k: FourFamily, a: &BigUint, b: &BigUint, c: &BigUint) -> Option<Solution> {
    let d = four_factor_family(k, a, b, c)?;
    let args = vec![a.clone(), b.clone(), c.clone(), d];
    let x = solve_x(&args).ok()??;
    Some(Solution::trusted(x, args))
}

/// Three-factor sporadic solutions as `(args, x)`.
pub const SPORADIC_3: [([u64; 3], u64); 3] = [([2, 2, 2], 18), ([1, 2, 5], 25), ([1, 3, 3], 22)];

/// Four-factor sporadic argument multisets; `x` is recomputed.
pub const SPORADIC_4: [[u64; 4]; 2] = [[2, 2, 2, 17], [2, 2, 3, 6]];

/// The four-factor multisets containing 1.
pub const ONES_4: [[u64; 4]; 8] = [
    [1, 2, 2, 5],
    [1, 2, 2, 6],
    [1, 2, 3, 15],
    [1, 2, 3, 17],
    [1, 2, 5, 24],
    [1, 2, 6, 14],
    [1, 2, 6, 15],
    [1, 3, 3, 21],
];

fn big_args(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| BigUint::from(x)).collect()
}

fn computed(args: &[u64]) -> Solution {
    let args = big_args(args);
    let x = solve_x(&args)
        .expect("table arity is valid")
        .expect("table entries are solutions");
    Solution::new(x, args).expect("table entries are same-form factorizations")
}

/// Sporadic solutions for `n` in `{3, 4}`.
pub fn sporadics(n: usize) -> Result<Vec<Solution>> {
    match n {
        3 => SPORADIC_3
            .iter()
            .map(|(args, x)| Solution::new(BigUint::from(*x), big_args(args)))
            .collect(),
        4 => Ok(SPORADIC_4.iter().map(|a| computed(a)).collect()),
        _ => Err(Error::Invalid(format!("sporadic solutions exist only for n = 3, 4, not {n}"))),
    }
}

/// The eight four-factor solutions with an argument equal to 1.
pub fn ones_tuples() -> Vec<Solution> {
    ONES_4.iter().map(|a| computed(a)).collect()
}

/// One machine-readable record per family or sporadic table.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub n: usize,
    pub formula: String,
    pub side_conditions: String,
}

pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = vec![
        CatalogEntry {
            id: "two-factor-family".into(),
            n: 2,
            formula: "(a, a+1; x=(a+1)^2)".into(),
            side_conditions: "a>=1".into(),
        },
        CatalogEntry {
            id: "three-factor-family".into(),
            n: 3,
            formula: "(a, b, c=ab/(a+b+1); x=c(ab+a+b)+a+b)".into(),
            side_conditions: "a<=b".into(),
        },
    ];
    for (i, (args, x)) in SPORADIC_3.iter().enumerate() {
        out.push(CatalogEntry {
            id: format!("sporadic-3-{}", i + 1),
            n: 3,
            formula: format!("({},{},{}; x={x})", args[0], args[1], args[2]),
            side_conditions: String::new(),
        });
    }
    for k in FourFamily::ALL {
        out.push(CatalogEntry {
            id: k.to_string(),
            n: 4,
            formula: format!("(a, b, c, d=({})/({}))", k.numerator_text(), k.denominator_text()),
            side_conditions: k.side_conditions().into(),
        });
    }
    for (i, args) in SPORADIC_4.iter().enumerate() {
        out.push(CatalogEntry {
            id: format!("sporadic-4-{}", i + 1),
            n: 4,
            formula: format!("({},{},{},{})", args[0], args[1], args[2], args[3]),
            side_conditions: String::new(),
        });
    }
    out
}
