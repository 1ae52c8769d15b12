//! 128-bit factoring for the threat-search kernels, where the quantities
//! being split outgrow a machine word but stay far below 2^127.

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bpsw::is_probable_prime;
use super::rho::prime_factors_u64;
use super::small::{is_prime_u64, SMALL_PRIMES};

/// Largest modulus the Montgomery arithmetic below accepts.
pub const WIDE_LIMIT: u128 = (1 << 127) - 1;

#[inline]
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let (a0, a1) = (a as u64 as u128, a >> 64);
    let (b0, b1) = (b as u64 as u128, b >> 64);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 as u64 as u128) + (p10 as u64 as u128);
    let lo = (p00 as u64 as u128) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

/// Montgomery arithmetic modulo an odd `n < 2^127`, `R = 2^128`.
#[derive(Clone, Copy, Debug)]
struct Mont {
    n: u128,
    /// `-n^{-1} mod R`
    neg_inv: u128,
    /// `R^2 mod n`
    r2: u128,
}

impl Mont {
    fn new(n: u128) -> Self {
        assert!(n & 1 == 1 && n <= WIDE_LIMIT, "Montgomery modulus must be odd and below 2^127");
        let mut inv = n;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let mut r2 = (u128::MAX % n + 1) % n;
        for _ in 0..128 {
            r2 <<= 1;
            if r2 >= n {
                r2 -= n;
            }
        }
        Mont {
            n,
            neg_inv: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline]
    fn redc(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.neg_inv);
        let (mh, ml) = mul_wide(m, self.n);
        let (_, carry) = lo.overflowing_add(ml);
        let t = hi + mh + carry as u128;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }

    #[inline]
    fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = mul_wide(a, b);
        self.redc(hi, lo)
    }

    #[inline]
    fn add(&self, a: u128, b: u128) -> u128 {
        let s = a + b;
        if s >= self.n {
            s - self.n
        } else {
            s
        }
    }

    fn enter(&self, a: u128) -> u128 {
        self.mul(a % self.n, self.r2)
    }

    fn leave(&self, a: u128) -> u128 {
        self.redc(0, a)
    }

    fn pow(&self, base: u128, mut exp: u128) -> u128 {
        let mut acc = self.enter(1);
        let mut b = self.enter(base);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        self.leave(acc)
    }
}

fn is_sprp_wide(n: u128, a: u128) -> bool {
    let mont = Mont::new(n);
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let one = mont.enter(1);
    let minus_one = mont.enter(n - 1);
    let mut y = mont.enter(mont.pow(a, d));
    if y == one || y == minus_one {
        return true;
    }
    for _ in 1..s {
        y = mont.mul(y, y);
        if y == minus_one {
            return true;
        }
        if y == one {
            return false;
        }
    }
    false
}

/// Deterministic below 2^64, Baillie-PSW above.
pub fn is_prime_u128(n: u128) -> bool {
    if n <= u64::MAX as u128 {
        return is_prime_u64(n as u64);
    }
    if n & 1 == 0 {
        return false;
    }
    if n <= WIDE_LIMIT && !is_sprp_wide(n, 2) {
        return false;
    }
    is_probable_prime(&BigUint::from(n))
}

fn brent(mont: &Mont, c: u128, y0: u128) -> Option<u128> {
    const BATCH: u64 = 128;
    let n = mont.n;
    let f = |y: u128| mont.add(mont.mul(y, y), c);
    let mut y = y0;
    let mut x;
    let mut g: u128 = 1;
    let mut q = mont.enter(1);
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
                q = mont.mul(q, x.abs_diff(y));
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 44 {
            return None;
        }
        if g == n {
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

fn push_prime_factors(n: u128, rng: &mut ChaCha8Rng, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if n <= u64::MAX as u128 {
        out.extend(prime_factors_u64(n as u64, rng.gen()).into_iter().map(u128::from));
        return;
    }
    if is_prime_u128(n) {
        out.push(n);
        return;
    }
    let r = n.sqrt();
    if r * r == n {
        push_prime_factors(r, rng, out);
        push_prime_factors(r, rng, out);
        return;
    }
    let mont = Mont::new(n);
    let d = loop {
        let c = rng.gen_range(1..n);
        let y0 = rng.gen_range(0..n);
        if let Some(d) = brent(&mont, c, y0) {
            break d;
        }
    };
    push_prime_factors(d, rng, out);
    push_prime_factors(n / d, rng, out);
}

/// Prime factors of `0 < n <= WIDE_LIMIT` with multiplicity, ascending.
pub fn prime_factors_u128(mut n: u128, seed: u64) -> Vec<u128> {
    assert!(n > 0 && n <= WIDE_LIMIT, "wide factoring requires 0 < n < 2^127");
    let mut out = Vec::new();
    for &p in SMALL_PRIMES.iter() {
        let p = p as u128;
        if p * p > n {
            break;
        }
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
    }
    if n > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        push_prime_factors(n, &mut rng, &mut out);
    }
    out.sort_unstable();
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors_u128(n: u128, seed: u64) -> Vec<u128> {
    let factors = prime_factors_u128(n, seed);
    let mut divs = vec![1u128];
    let mut i = 0;
    while i < factors.len() {
        let p = factors[i];
        let mut e = 0;
        while i < factors.len() && factors[i] == p {
            e += 1;
            i += 1;
        }
        let prev = divs.len();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p;
            for j in 0..prev {
                divs.push(divs[j] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn montgomery_matches_bigint() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let n = rng.gen_range(3..=WIDE_LIMIT) | 1;
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let m = Mont::new(n);
            let got = m.leave(m.mul(m.enter(a), m.enter(b)));
            let expect = BigUint::from(a) * BigUint::from(b) % BigUint::from(n);
            assert_eq!(BigUint::from(got), expect);
        }
    }

    #[test]
    fn wide_primality() {
        let p = (1u128 << 64) + 13;
        assert!(is_prime_u128(p));
        assert!(is_prime_u128((1 << 89) - 1));
        assert!(is_prime_u128((1 << 127) - 1));
        assert!(!is_prime_u128((1 << 67) - 1));
        assert!(!is_prime_u128(p * 3));
    }

    #[test]
    fn factors_wide_composites() {
        assert_eq!(prime_factors_u128((1 << 67) - 1, 0), vec![193_707_721, 761_838_257_287]);
        let p = 18_446_744_073_709_551_557u128;
        let q = 4_294_967_291u128;
        assert_eq!(prime_factors_u128(p * q, 5), vec![q, p]);
        assert_eq!(prime_factors_u128(q * q * q * 7, 5), vec![7, q, q, q]);

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1..1u128 << 90);
            let f = prime_factors_u128(n, 1);
            assert_eq!(f.iter().product::<u128>(), n);
            assert!(f.iter().all(|&p| is_prime_u128(p)));
        }
    }

    #[test]
    fn divisors() {
        assert_eq!(divisors_u128(1, 0), vec![1]);
        assert_eq!(divisors_u128(12, 0), vec![1, 2, 3, 4, 6, 12]);
        let d = divisors_u128(720_720, 0);
        assert_eq!(d.len(), 240);
        assert!(d.iter().all(|x| 720_720 % x == 0));
    }
}
