//! Complete factorization of 64-bit integers: trial division by primes below
//! 1024, then Brent's variant of Pollard rho on the cofactor.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::small::{is_prime_u64, mul_mod, SMALL_PRIMES};

/// One nontrivial factor of composite odd `n`, or `None` if this `c` cycled.
fn brent(n: u64, c: u64, y0: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |y: u64| ((y as u128 * y as u128 + c as u128) % n as u128) as u64;
    let mut y = y0;
    let mut x;
    let mut g = 1;
    let mut q = 1;
    let mut r = 1u64;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 40 {
            return None;
        }
        if g == n {
            // Batch overshot; step back one at a time.
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
    }
    (g != n).then_some(g)
}

fn split(n: u64, rng: &mut ChaCha8Rng) -> u64 {
    loop {
        let c = rng.gen_range(1..n);
        let y0 = rng.gen_range(0..n);
        if let Some(d) = brent(n, c, y0) {
            return d;
        }
    }
}

fn push_prime_factors(n: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let r = (n as f64).sqrt() as u64;
    for cand in [r.saturating_sub(1), r, r + 1] {
        if cand > 1 && cand.checked_mul(cand) == Some(n) {
            push_prime_factors(cand, rng, out);
            push_prime_factors(cand, rng, out);
            return;
        }
    }
    let d = split(n, rng);
    push_prime_factors(d, rng, out);
    push_prime_factors(n / d, rng, out);
}

/// Prime factors of `n` with multiplicity, ascending. `n = 0` yields nothing.
pub(crate) fn prime_factors_u64(mut n: u64, seed: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
    }
    if n > 1 {
        let largest = *SMALL_PRIMES.last().unwrap() as u64;
        if n < largest * largest {
            out.push(n);
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            push_prime_factors(n, &mut rng, &mut out);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semiprimes() {
        let cases = [
            (1_000_000_007u64 * 998_244_353, vec![998_244_353, 1_000_000_007]),
            (4_294_967_291 * 4_294_967_279, vec![4_294_967_279, 4_294_967_291]),
            (1_048_573 * 1_048_573 * 13, vec![13, 1_048_573, 1_048_573]),
        ];
        for (n, expect) in cases {
            assert_eq!(prime_factors_u64(n, 1), expect);
            assert_eq!(prime_factors_u64(n, 99), expect);
        }
    }

    #[test]
    fn product_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let n: u64 = rng.gen_range(1..u64::MAX);
            let f = prime_factors_u64(n, 0);
            assert_eq!(f.iter().product::<u64>(), n);
            assert!(f.iter().all(|&p| is_prime_u64(p)));
            assert!(f.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
