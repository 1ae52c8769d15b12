//! Arithmetic in the Eisenstein integers `Z[w]`, `w = (1 + sqrt(-3)) / 2` a
//! primitive sixth root of unity, written in the basis `{1, w}`.
//!
//! The only reduction rule needed is `w^2 = w - 1`. Multiplication is generic
//! over the coordinate ring so the same code expands products of symbolic
//! factors (see [`crate::families::expand_product`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An element `m + n*w` with coordinates in `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Eisenstein<T> {
    pub m: T,
    pub n: T,
}

/// Exact Eisenstein integer with arbitrary-precision coordinates.
pub type EisensteinInt = Eisenstein<BigInt>;

impl<T> Eisenstein<T> {
    pub const fn new(m: T, n: T) -> Self {
        Eisenstein { m, n }
    }
}

impl<T> Eisenstein<T>
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    /// `(m1 + n1 w)(m2 + n2 w) = (m1 m2 - n1 n2) + (m1 n2 + n1 m2 + n1 n2) w`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let nn = &self.n * &rhs.n;
        let m = &(&self.m * &rhs.m) - &nn;
        let n = &(&(&self.m * &rhs.n) + &(&self.n * &rhs.m)) + &nn;
        Eisenstein { m, n }
    }

    /// Complex conjugate. `conj(w) = 1 - w`, so `conj(m + n w) = (m + n) - n w`.
    pub fn conj(&self) -> Self
    where
        T: Zero,
    {
        Eisenstein {
            m: &self.m + &self.n,
            n: &T::zero() - &self.n,
        }
    }
}

impl EisensteinInt {
    pub fn from_i64(m: i64, n: i64) -> Self {
        Eisenstein::new(BigInt::from(m), BigInt::from(n))
    }

    /// `x + w`, the element whose norm is `x^2 + x + 1`.
    pub fn linear(x: &BigUint) -> Self {
        Eisenstein::new(BigInt::from(x.clone()), BigInt::one())
    }

    /// `1 + a w`, the conjugate prime of `a + w` up to the unit `w`.
    pub fn twisted(a: &BigUint) -> Self {
        Eisenstein::new(BigInt::one(), BigInt::from(a.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero() && self.n.is_zero()
    }

    /// The norm form `m^2 + mn + n^2`.
    pub fn norm(&self) -> BigUint {
        let v = &self.m * &self.m + &self.m * &self.n + &self.n * &self.n;
        v.to_biguint().expect("norm form is positive semidefinite")
    }
}

impl Mul for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        Eisenstein::mul(self, rhs)
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        Eisenstein::new(-self.m, -self.n)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*z6", self.m, self.n)
    }
}

/// The six units `w^k`.
const UNITS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// `w^k` for `k` in `0..6`.
pub fn unit(k: usize) -> Result<EisensteinInt, Error> {
    UNITS
        .get(k)
        .map(|&(m, n)| EisensteinInt::from_i64(m, n))
        .ok_or(Error::UnitIndex(k))
}

/// Which entry of the twelve-entry unit table matched.
///
/// `form_index = k` means `u = w^k (x + w)`; `form_index = 6 + k` means
/// `u = w^k conj(x + w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub x: BigUint,
    pub form_index: usize,
}

impl RecognitionResult {
    pub fn unit_power(&self) -> usize {
        self.form_index % 6
    }

    pub fn conjugated(&self) -> bool {
        self.form_index >= 6
    }
}

/// `w^k (x + w)` for `form_index < 6`, `w^k conj(x + w)` otherwise.
pub fn table_entry(x: &BigUint, form_index: usize) -> EisensteinInt {
    assert!(form_index < 12, "form index {form_index} out of range");
    let base = EisensteinInt::linear(x);
    let base = if form_index >= 6 { base.conj() } else { base };
    let k = form_index % 6;
    let (um, un) = UNITS[k];
    EisensteinInt::from_i64(um, un).mul(&base)
}

/// Recover `x >= 0` such that `u` is a unit multiple of `x + w` or its
/// conjugate.
///
/// Succeeds exactly when `m = ±1`, `n = ±1` or `m + n = ±1`. The cases are
/// tried in that order and each yields `x` as a linear function of `m` and `n`
/// chosen by sign. The reported `form_index` is the smallest table entry equal
/// to `u`, which only matters for `x` in `{0, 1}` where the table repeats.
pub fn recognize(u: &EisensteinInt) -> Option<RecognitionResult> {
    let one = BigInt::one();
    let neg_one = -BigInt::one();
    let m = &u.m;
    let n = &u.n;
    let sum = m + n;

    // x as a signed integer; each arm only fires on inputs where it is >= 0.
    let x: BigInt = if *m == one {
        // (1, x) or (1, -(x+1))
        if !n.is_negative() {
            n.clone()
        } else {
            -n - 1
        }
    } else if *m == neg_one {
        // (-1, x+1) or (-1, -x)
        if n.is_positive() {
            n - 1
        } else {
            -n
        }
    } else if *n == one {
        // (x, 1) or (-(x+1), 1)
        if !m.is_negative() {
            m.clone()
        } else {
            -m - 1
        }
    } else if *n == neg_one {
        // (x+1, -1) or (-x, -1)
        if m.is_positive() {
            m - 1
        } else {
            -m
        }
    } else if sum == one {
        // (x+1, -x) or (-x, x+1)
        if m.is_positive() {
            m - 1
        } else {
            -m
        }
    } else if sum == neg_one {
        // (-(x+1), x) or (x, -(x+1))
        if !n.is_negative() {
            n.clone()
        } else {
            m.clone()
        }
    } else {
        return None;
    };

    debug_assert!(x.sign() != Sign::Minus);
    let x = x.to_biguint()?;
    let form_index = (0..12).find(|&i| table_entry(&x, i) == *u)?;
    Some(RecognitionResult { x, form_index })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(m: i64, n: i64) -> EisensteinInt {
        EisensteinInt::from_i64(m, n)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(e(1, 1).mul(&e(2, 1)), e(1, 4));
        assert_eq!(e(0, 1).mul(&e(0, 1)), e(-1, 1));
        assert_eq!(e(1, 0).mul(&e(-17, 23)), e(-17, 23));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(e(9, 1).conj(), e(10, -1));
        assert_eq!(e(0, 0).conj(), e(0, 0));
        assert_eq!(e(5, 7).conj(), e(12, -7));
        assert_eq!(e(5, 7).conj().conj(), e(5, 7));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(e(2, 1).norm(), BigUint::from(7u32));
        assert_eq!(e(1, 4).norm(), BigUint::from(21u32));
        for k in 0..6 {
            assert_eq!(unit(k).unwrap().norm(), BigUint::one());
        }
        assert_eq!(e(0, 0).norm(), BigUint::zero());
    }

    #[test]
    fn units() {
        assert_eq!(unit(0).unwrap(), e(1, 0));
        assert_eq!(unit(2).unwrap(), e(-1, 1));
        let u3 = unit(3).unwrap();
        assert_eq!(u3.mul(&u3), e(1, 0));
        let w = unit(1).unwrap();
        let mut acc = unit(0).unwrap();
        for k in 0..6 {
            assert_eq!(acc, unit(k).unwrap());
            acc = acc.mul(&w);
        }
        assert_eq!(acc, unit(0).unwrap());
        assert!(matches!(unit(6), Err(Error::UnitIndex(6))));
    }

    #[test]
    fn table_matches_printed_rows() {
        let x = BigUint::from(10u32);
        let expected = [
            (10, 1),
            (-1, 11),
            (-11, 10),
            (-10, -1),
            (1, -11),
            (11, -10),
            (11, -1),
            (1, 10),
            (-10, 11),
            (-11, 1),
            (-1, -10),
            (10, -11),
        ];
        for (i, &(m, n)) in expected.iter().enumerate() {
            assert_eq!(table_entry(&x, i), e(m, n), "entry {i}");
        }
    }

    #[test]
    fn recognize_examples() {
        let r = recognize(&e(1, 4)).unwrap();
        assert_eq!(r.x, BigUint::from(4u32));
        assert_eq!(r.form_index, 7);
        assert_eq!(recognize(&e(5, 7)), None);
        assert_eq!(recognize(&e(0, 0)), None);
    }

    #[test]
    fn recognize_small_x_picks_smallest_form() {
        // x = 0: the left column is the unit group itself.
        for k in 0..6 {
            let r = recognize(&unit(k).unwrap().mul(&e(0, 1))).unwrap();
            assert_eq!(r.x, BigUint::zero());
            assert!(r.form_index < 6);
        }
        // x = 1: 1 + w is ramified, and both columns coincide up to shift.
        let r = recognize(&e(1, 1)).unwrap();
        assert_eq!((r.x, r.form_index), (BigUint::one(), 0));
        let r = recognize(&e(2, -1)).unwrap();
        assert_eq!((r.x, r.form_index), (BigUint::one(), 5));
    }

    #[test]
    fn display() {
        assert_eq!(e(-3, 12).to_string(), "-3 + 12*z6");
    }
}
