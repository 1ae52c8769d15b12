//! Candidate entries for threat searches.

use crate::primality::{is_prime_u128, phi3_u64};

/// Primes `p <= limit` (sieve of Eratosthenes).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Primes `p <= limit` with `Φ₃(p)` prime: the only values an entry of a
/// threat can take.
pub fn threat_entries(limit: u64) -> Vec<u64> {
    primes_up_to(limit)
        .into_iter()
        .filter(|&p| is_prime_u128(phi3_u64(p)))
        .collect()
}
