//! Baillie-PSW probable-prime test for integers of any size: a strong
//! Fermat test to base 2 followed by a strong Lucas test with Selfridge's
//! parameter choice. No composite is known to pass both.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::small::SMALL_PRIMES;

/// Jacobi symbol `(a / n)` for odd positive `n`.
pub(crate) fn jacobi(a: &BigUint, n: &BigUint) -> i32 {
    debug_assert!(n.is_odd());
    let mut a = a % n;
    let mut n = n.clone();
    let mut t = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            a >>= tz;
            let r = (&n % 8u32).to_u32().unwrap();
            if tz % 2 == 1 && (r == 3 || r == 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32) == BigUint::from(3u32) && (&n % 4u32) == BigUint::from(3u32) {
            t = -t;
        }
        a %= &n;
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

fn to_residue(v: i64, n: &BigUint) -> BigUint {
    BigInt::from(v)
        .mod_floor(&BigInt::from(n.clone()))
        .to_biguint()
        .expect("mod_floor by a positive modulus is nonnegative")
}

/// Strong probable-prime test to base `a`, odd `n > 3`.
pub(crate) fn is_sprp(n: &BigUint, a: u32) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    let mut y = BigUint::from(a).modpow(&d, n);
    if y == one || y == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        y = &y * &y % n;
        if y == n_minus_1 {
            return true;
        }
        if y == one {
            return false;
        }
    }
    false
}

/// Selfridge's method A: the first `D` in `5, -7, 9, -11, ...` with
/// `(D / n) = -1`. Returns `None` when some `D` exposes a factor of `n`.
/// `n` must be odd and not a perfect square.
fn selfridge_d(n: &BigUint) -> Option<i64> {
    let mut d: i64 = 5;
    loop {
        let j = jacobi(&to_residue(d, n), n);
        if j == -1 {
            return Some(d);
        }
        if j == 0 && BigUint::from(d.unsigned_abs()) != *n {
            return None;
        }
        d = if d > 0 { -(d + 2) } else { -d + 2 };
    }
}

fn halve_mod(v: BigUint, n: &BigUint) -> BigUint {
    if v.is_odd() {
        (v + n) >> 1
    } else {
        v >> 1
    }
}

/// Strong Lucas probable-prime test with `P = 1`, `Q = (1 - D) / 4`.
pub(crate) fn is_strong_lucas_prp(n: &BigUint, d_param: i64) -> bool {
    let q_param = (1 - d_param) / 4;
    let dm = to_residue(d_param, n);
    let qm = to_residue(q_param, n);

    let k = n + 1u32;
    let s = k.trailing_zeros().expect("n + 1 > 0");
    let d = &k >> s;

    // Lucas sequences at index 1: U = 1, V = P = 1, Q^1.
    let mut u = BigUint::one();
    let mut v = BigUint::one();
    let mut qk = qm.clone();
    let bits = d.bits();
    for i in (0..bits - 1).rev() {
        // Index j -> 2j.
        u = &u * &v % n;
        v = (&v * &v + (n - &qk) * 2u32) % n;
        qk = &qk * &qk % n;
        if d.bit(i) {
            // Index j -> j + 1.
            let u_next = halve_mod((&u + &v) % n, n);
            let v_next = halve_mod((&dm * &u + &v) % n, n);
            u = u_next;
            v = v_next;
            qk = &qk * &qm % n;
        }
    }

    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v + (n - &qk) * 2u32) % n;
        if v.is_zero() {
            return true;
        }
        qk = &qk * &qk % n;
    }
    false
}

/// Baillie-PSW. Exact for small inputs via trial division.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        if *n == BigUint::from(p) {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    let largest = *SMALL_PRIMES.last().unwrap() as u64;
    if *n < BigUint::from(largest * largest) {
        return true;
    }
    if !is_sprp(n, 2) {
        return false;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        return false;
    }
    match selfridge_d(n) {
        Some(d) => is_strong_lucas_prp(n, d),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primality::small::is_prime_u64;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in [3u64, 5, 7, 11, 13, 101, 1009] {
            for a in 0..p {
                let e = big(a).modpow(&big((p - 1) / 2), &big(p));
                let expect = if a == 0 {
                    0
                } else if e.is_one() {
                    1
                } else {
                    -1
                };
                assert_eq!(jacobi(&big(a), &big(p)), expect, "({a}/{p})");
            }
        }
        // Composite modulus: (2/15) = (2/3)(2/5) = (-1)(-1) = 1.
        assert_eq!(jacobi(&big(2), &big(15)), 1);
        assert_eq!(jacobi(&big(5), &big(15)), 0);
    }

    #[test]
    fn strong_lucas_pseudoprimes_pass_lucas_but_not_base2() {
        for n in [5459u64, 5777, 10877, 16109, 18971, 22499, 24569, 25199, 40309, 58519] {
            let nb = big(n);
            let d = selfridge_d(&nb).expect("no small factor exposed");
            assert!(is_strong_lucas_prp(&nb, d), "{n} is a strong Lucas pseudoprime");
            assert!(!is_sprp(&nb, 2), "{n} is not a base-2 strong pseudoprime");
            assert!(!is_probable_prime(&nb));
        }
    }

    #[test]
    fn base2_pseudoprimes_fail_lucas() {
        for n in [2047u64, 3277, 4033, 4681, 8321, 15841, 29341, 42799, 49141, 52633] {
            let nb = big(n);
            assert!(is_sprp(&nb, 2), "{n} is a base-2 strong pseudoprime");
            assert!(!is_probable_prime(&nb), "{n}");
        }
    }

    #[test]
    fn lucas_accepts_primes() {
        for p in (1_000_000u64..1_002_000).filter(|&p| is_prime_u64(p)) {
            let nb = big(p);
            let d = selfridge_d(&nb).unwrap();
            assert!(is_strong_lucas_prp(&nb, d), "{p}");
        }
    }

    #[test]
    fn agrees_with_deterministic_test() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20_000 {
            let n: u64 = rng.gen_range(2..u64::MAX) | 1;
            assert_eq!(is_probable_prime(&big(n)), is_prime_u64(n), "{n}");
        }
        for n in 0..20_000u64 {
            assert_eq!(is_probable_prime(&big(n)), is_prime_u64(n), "{n}");
        }
    }

    #[test]
    fn beyond_64_bits() {
        let two64 = BigUint::one() << 64;
        assert!(is_probable_prime(&(&two64 + 13u32)));
        assert!(!is_probable_prime(&(&two64 + 1u32))); // 274177 * 67280421310721
        let mersenne = |e: u32| (BigUint::one() << e) - 1u32;
        assert!(is_probable_prime(&mersenne(89)));
        assert!(is_probable_prime(&mersenne(127)));
        assert!(!is_probable_prime(&mersenne(67)));
        assert!(!is_probable_prime(&mersenne(101)));
        // Product of two primes just above 2^64.
        let p = &two64 + 13u32;
        let q = (BigUint::one() << 70) + 25u32;
        assert!(is_probable_prime(&q));
        assert!(!is_probable_prime(&(&p * &q)));
        assert!(!is_probable_prime(&(&p * &p)));
    }
}
