//! Odd quadruple threats through the first four-factor family.
//!
//! Write the family-1 tuple as `d < a <= b <= c`, where `d` is the value the
//! family formula returns. Clearing the denominator gives
//!
//! ```text
//! e*b*c - f*(b + c) - g = 0,   e = a - d,  f = d*a + d + 1,  g = (d + 1)*a + 2,
//! ```
//!
//! which factors as `(e*b - f)(e*c - f) = f^2 + e*g =: M`. For a fixed pair
//! `(d, a)` every completion comes from a divisor `δ <= sqrt(M)`:
//! `b = (f + δ)/e`, `c = (f + M/δ)/e`. Requiring `b >= a` bounds `a` by the
//! largest root of `a^3 - 3d*a^2 - 3(d + 1)*a - 2` (about `3d + 1`), so each
//! anchor `d` owns a finite, fully enumerable slice of the family.

use num_bigint::BigUint;

use super::certificate::{is_n_threat, ThreatCertificate};
use super::checkpoint::AnchorStat;
use super::driver::{run_anchored, SearchControl, SearchOutcome};
use super::params::threat_entries;
use crate::error::{Error, Result};
use crate::families::{solve_x, Solution};
use crate::primality::wide::{divisors_u128, WIDE_LIMIT};
use crate::primality::{is_prime, is_prime_u128, phi3, phi3_u64, DEFAULT_SEED};

/// Largest `a_max` accepted by [`search_odd_quadruple_threats`].
pub const MAX_A_MAX: u64 = 100_000_000;

/// Largest `q_bound` accepted by [`min_prime_factor_scan`].
pub const MAX_Q_BOUND: u64 = 100_000_000_000_000;

/// Default bound for the smallest-factor scan.
pub const DEFAULT_Q_BOUND: u64 = 100_000_000;

/// `(e, f, g, M)` for the anchor pair `d < a`, or `None` if `M` is too large
/// to factor at word scale.
fn kernel_constants(d: u64, a: u64) -> Option<(u128, u128, u128, u128)> {
    let (d, a) = (d as u128, a as u128);
    let e = a - d;
    let f = d.checked_mul(a)?.checked_add(d + 1)?;
    let g = (d + 1).checked_mul(a)?.checked_add(2)?;
    let m = f.checked_mul(f)?.checked_add(e.checked_mul(g)?)?;
    (m <= WIDE_LIMIT).then_some((e, f, g, m))
}

/// Largest second entry `a` that admits a completion with smallest entry `d`.
pub fn partner_limit(d: u64) -> u64 {
    let cubic = |a: u64| {
        let (a, d) = (a as i128, d as i128);
        a * a * a - 3 * d * a * a - 3 * (d + 1) * a - 2
    };
    let mut a = 3 * d + 1;
    while cubic(a + 1) <= 0 {
        a += 1;
    }
    while a > d && cubic(a) > 0 {
        a -= 1;
    }
    a
}

/// Every `(b, c)` with `a <= b <= c` such that family 1 at `(a, b, c)`
/// returns `d`. Requires `1 <= d < a`.
pub fn family1_completions(d: u64, a: u64) -> Result<Vec<(u128, u128)>> {
    if d == 0 || d >= a {
        return Err(Error::Invalid(format!("anchor pair needs 1 <= d < a, got d={d}, a={a}")));
    }
    let (e, f, _, m) = kernel_constants(d, a).ok_or_else(|| Error::Scale {
        what: "family-1 anchor pair",
        value: format!("({d}, {a})"),
        limit: WIDE_LIMIT.to_string(),
    })?;
    let mut out = Vec::new();
    for delta in divisors_u128(m, DEFAULT_SEED) {
        let cofactor = m / delta;
        if delta > cofactor {
            break;
        }
        let (p, q) = (f + delta, f + cofactor);
        if p % e == 0 && q % e == 0 {
            let (b, c) = (p / e, q / e);
            if b >= a as u128 {
                out.push((b, c));
            }
        }
    }
    Ok(out)
}

/// The completion for a single divisor `δ` of `M`, in exact arithmetic at any
/// scale. `None` if `δ` does not divide `M` or the division by `e` is inexact.
pub fn family1_completion_from_divisor(
    d: &BigUint,
    a: &BigUint,
    delta: &BigUint,
) -> Option<(BigUint, BigUint)> {
    if d >= a || delta == &BigUint::ZERO {
        return None;
    }
    let e = a - d;
    let f = d * a + d + 1u32;
    let g = (d + 1u32) * a + 2u32;
    let m = &f * &f + &e * &g;
    if &m % delta != BigUint::ZERO {
        return None;
    }
    let (p, q) = (&f + delta, &f + &m / delta);
    if &p % &e != BigUint::ZERO || &q % &e != BigUint::ZERO {
        return None;
    }
    Some((p / &e, q / e))
}

/// Threats among the completions of `(d, a)` where `d` and `a` are already
/// known to be threat entries.
fn threats_for_pair(d: u64, a: u64) -> Result<(u64, Vec<ThreatCertificate>)> {
    let completions = family1_completions(d, a)?;
    let mut found = Vec::new();
    for &(b, c) in &completions {
        if !(is_prime_u128(b) && is_prime_u128(c)) {
            continue;
        }
        let (b, c) = (BigUint::from(b), BigUint::from(c));
        if !is_prime(&phi3(&b))?.is_prime() || !is_prime(&phi3(&c))?.is_prime() {
            continue;
        }
        let args = vec![BigUint::from(d), BigUint::from(a), b, c];
        let x = solve_x(&args)?.ok_or_else(|| {
            Error::Invalid(format!("family-1 completion without x: {args:?}"))
        })?;
        if let Some(cert) = is_n_threat(&Solution::from_identity(x, args)?)? {
            found.push(cert);
        }
    }
    Ok((completions.len() as u64, found))
}

fn anchor_work(d: u64, partners: &[u64], a_cap: u64) -> Result<(Vec<ThreatCertificate>, AnchorStat)> {
    let hi = partner_limit(d).min(a_cap);
    let mut stat = AnchorStat {
        anchor: d,
        ..AnchorStat::default()
    };
    let mut certs = Vec::new();
    let start = partners.partition_point(|&a| a <= d);
    for &a in partners[start..].iter().take_while(|&&a| a <= hi) {
        let (candidates, found) = threats_for_pair(d, a)?;
        stat.partners += 1;
        stat.candidates += candidates;
        stat.threats += found.len() as u64;
        certs.extend(found);
    }
    Ok((certs, stat))
}

fn odd_entries(limit: u64) -> Vec<u64> {
    threat_entries(limit).into_iter().filter(|&p| p % 2 == 1).collect()
}

/// Family-1 odd quadruple threats whose second-smallest entry is at most
/// `a_max`. Families 3 and 4 force an even entry when the parameters are
/// odd, and family 2 forces a non-integral fourth entry, so family 1 is the
/// only source of odd quadruple threats.
pub fn search_odd_quadruple_threats(a_max: u64, ctl: &SearchControl<'_>) -> Result<SearchOutcome> {
    if a_max == 0 {
        return Err(Error::Invalid("a_max must be positive".into()));
    }
    if a_max > MAX_A_MAX {
        return Err(Error::Scale {
            what: "a_max",
            value: a_max.to_string(),
            limit: MAX_A_MAX.to_string(),
        });
    }
    let entries = odd_entries(a_max);
    let anchors: Vec<u64> = entries.iter().copied().filter(|&d| d < a_max).collect();
    run_anchored(&format!("odd-quad a_max={a_max}"), &anchors, Vec::new(), ctl, |d| {
        anchor_work(d, &entries, a_max)
    })
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub q_bound: u64,
    pub outcome: SearchOutcome,
}

impl ScanReport {
    /// The bound is certified when every anchor was swept and nothing found.
    pub fn certified(&self) -> bool {
        self.outcome.complete && self.outcome.certificates.is_empty()
    }

    pub fn certified_bound(&self) -> Option<u64> {
        self.certified().then_some(self.q_bound)
    }
}

/// Sweeps family 1 anchored at every possible smallest entry `d` with
/// `Φ₃(d) <= q_bound`. Since `d` is the smallest entry, a clean sweep shows
/// that no odd quadruple threat has an argument `a` with `Φ₃(a) <= q_bound`.
pub fn min_prime_factor_scan(q_bound: u64, ctl: &SearchControl<'_>) -> Result<ScanReport> {
    if q_bound == 0 {
        return Err(Error::Invalid("q_bound must be positive".into()));
    }
    if q_bound > MAX_Q_BOUND {
        return Err(Error::Scale {
            what: "q_bound",
            value: q_bound.to_string(),
            limit: MAX_Q_BOUND.to_string(),
        });
    }
    let mut d_max = num_integer::Roots::sqrt(&q_bound);
    while d_max > 0 && phi3_u64(d_max) > q_bound as u128 {
        d_max -= 1;
    }
    let anchors = odd_entries(d_max);
    let entries = match anchors.last() {
        Some(&d) => odd_entries(partner_limit(d)),
        None => Vec::new(),
    };
    let outcome = run_anchored(&format!("min-factor-scan q_bound={q_bound}"), &anchors, Vec::new(), ctl, |d| {
        anchor_work(d, &entries, u64::MAX)
    })?;
    Ok(ScanReport { q_bound, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{four_factor_family, FourFamily};

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn kernel_matches_direct_family_evaluation() {
        // All family-1 tuples with parameters up to 60, by direct evaluation.
        let mut direct = Vec::new();
        for a in 1..=60u64 {
            for b in a..=60 {
                for c in b..=60 {
                    if let Some(d) = four_factor_family(FourFamily::One, &big(a), &big(b), &big(c)) {
                        let d: u64 = (&d).try_into().unwrap();
                        assert!(d < a, "smallest entry is the family value: {a},{b},{c},{d}");
                        direct.push((d, a, b as u128, c as u128));
                    }
                }
            }
        }
        assert!(!direct.is_empty());
        for &(d, a, b, c) in &direct {
            assert!(a <= partner_limit(d), "partner bound too small for {d},{a}");
            let comps = family1_completions(d, a).unwrap();
            assert!(comps.contains(&(b, c)), "missing ({d},{a},{b},{c})");
        }
        // Conversely, every completion evaluates back through the formula.
        for d in 1..=12u64 {
            for a in d + 1..=partner_limit(d) + 3 {
                let comps = family1_completions(d, a).unwrap();
                if a > partner_limit(d) {
                    assert!(comps.is_empty(), "completion beyond partner bound at {d},{a}");
                }
                for (b, c) in comps {
                    let (b, c) = (big(b as u64), big(c as u64));
                    assert_eq!(four_factor_family(FourFamily::One, &big(a), &b, &c), Some(big(d)));
                }
            }
        }
    }

    #[test]
    fn partner_limit_is_about_three_d() {
        for d in [1u64, 2, 3, 10, 1000, 39_640_921_169] {
            let a = partner_limit(d);
            assert!(a >= 3 * d && a <= 3 * d + 2, "d={d} a={a}");
        }
    }

    #[test]
    fn degenerate_pair_has_no_candidate() {
        // a = b = 3 cannot be completed to an odd family-1 tuple.
        assert_eq!(four_factor_family(FourFamily::One, &big(3), &big(3), &big(3)), None);
        assert!(family1_completions(3, 3).is_err());
        assert!(family1_completions(0, 3).is_err());
    }

    #[test]
    fn small_searches_are_empty() {
        let ctl = SearchControl::default();
        let out = search_odd_quadruple_threats(1000, &ctl).unwrap();
        assert!(out.complete);
        assert!(out.certificates.is_empty());
        assert!(out.total_candidates() > 0);

        let scan = min_prime_factor_scan(10, &ctl).unwrap();
        assert!(scan.outcome.anchor_stats.is_empty());
        assert_eq!(scan.certified_bound(), Some(10));
        assert!(matches!(min_prime_factor_scan(MAX_Q_BOUND + 1, &ctl), Err(Error::Scale { .. })));
    }

    #[test]
    fn divisor_form_at_scale() {
        let (b, c) = family1_completion_from_divisor(&big(1), &big(2), &big(1)).unwrap();
        let comps = family1_completions(1, 2).unwrap();
        assert!(comps.contains(&((&b).try_into().unwrap(), (&c).try_into().unwrap())));
        assert_eq!(family1_completion_from_divisor(&big(2), &big(2), &big(1)), None);
    }
}
