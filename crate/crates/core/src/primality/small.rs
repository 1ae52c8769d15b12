//! Word-size primality: trial division and a Miller-Rabin base set that is
//! deterministic for every `n < 2^64`.

/// Primes below 1024.
pub(crate) static SMALL_PRIMES: std::sync::LazyLock<Vec<u32>> = std::sync::LazyLock::new(|| {
    let limit = 1024usize;
    let mut sieve = vec![true; limit];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i < limit {
        if sieve[i] {
            let mut j = i * i;
            while j < limit {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..limit as u32).filter(|&p| sieve[p as usize]).collect()
});

/// Every odd composite below 2^64 fails the strong test for one of these.
const DETERMINISTIC_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Strong probable-prime test to base `a` for odd `n > 2`.
pub(crate) fn is_sprp(n: u64, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let mut y = pow_mod(a, d, n);
    if y == 1 || y == n - 1 {
        return true;
    }
    for _ in 1..s {
        y = mul_mod(y, y, n);
        if y == n - 1 {
            return true;
        }
        if y == 1 {
            return false;
        }
    }
    false
}

/// Deterministic primality for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in SMALL_PRIMES.iter().take(16) {
        let p = p as u64;
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // 53 is the 16th prime; anything below 53^2 that survived is prime.
    if n < 53 * 53 {
        return true;
    }
    DETERMINISTIC_BASES.iter().all(|&a| is_sprp(n, a))
}
