//! Quadruple threats over the four-factor tables and families.

use num_bigint::BigUint;

use super::certificate::{is_n_threat, ThreatCertificate};
use super::checkpoint::AnchorStat;
use super::driver::{run_anchored, SearchControl, SearchOutcome};
use super::params::threat_entries;
use crate::error::{Error, Result};
use crate::families::{ones_tuples, solve_x, sporadics, FourFamily, Solution};
use crate::primality::{is_prime_u128, is_prime_u64, phi3_u64};

/// Largest `entry_bound` accepted by [`search_quadruple_threats`]; keeps the
/// family numerators inside 128-bit arithmetic.
pub const MAX_ENTRY_BOUND: u64 = 1_000_000;

/// Family value `d` at word scale; same contract as
/// [`crate::families::four_factor_family`].
pub(crate) fn family_value(k: FourFamily, a: u64, b: u64, c: u64) -> Option<u64> {
    let admits = match k {
        FourFamily::One | FourFamily::Two => a <= b && b <= c,
        FourFamily::Three | FourFamily::Four => a <= b && a <= c,
    };
    if a == 0 || !admits {
        return None;
    }
    let (a, b, c) = (a as i128, b as i128, c as i128);
    let (num, den) = match k {
        FourFamily::One => (a * b * c - a - b - c - 2, a * b + a * c + b * c + a + b + c),
        FourFamily::Two => (a * b * c - a - b - c, a * b + a * c + b * c + a + b + c),
        FourFamily::Three => (a * b * c + a * b + a + b - c - 1, a * c + b * c - a * b + c + 1),
        FourFamily::Four => (a * b * c + a * b + a + b - c + 1, a * c + b * c - a * b + c + 1),
    };
    if den <= 0 || num <= 0 || num % den != 0 {
        return None;
    }
    u64::try_from(num / den).ok()
}

fn certify(args: Vec<BigUint>) -> Result<Option<ThreatCertificate>> {
    let Some(x) = solve_x(&args)? else {
        return Ok(None);
    };
    is_n_threat(&Solution::from_identity(x, args)?)
}

fn anchor_work(a: u64, entries: &[u64]) -> Result<(Vec<ThreatCertificate>, AnchorStat)> {
    let mut stat = AnchorStat {
        anchor: a,
        ..AnchorStat::default()
    };
    let mut certs = Vec::new();
    let start = entries.partition_point(|&p| p < a);
    let rest = &entries[start..];
    for &b in rest {
        stat.partners += 1;
        for &c in rest {
            for k in FourFamily::ALL {
                let Some(d) = family_value(k, a, b, c) else {
                    continue;
                };
                stat.candidates += 1;
                if !is_prime_u64(d) || !is_prime_u128(phi3_u64(d)) {
                    continue;
                }
                let args = [a, b, c, d].map(BigUint::from).to_vec();
                if let Some(cert) = certify(args)? {
                    stat.threats += 1;
                    certs.push(cert);
                }
            }
        }
    }
    Ok((certs, stat))
}

/// Threats among the sporadic and ones tables, which need no search.
fn table_threats() -> Result<Vec<ThreatCertificate>> {
    let mut out = Vec::new();
    for sol in sporadics(4)?.iter().chain(ones_tuples().iter()) {
        if let Some(c) = is_n_threat(sol)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Quadruple threats from the tables plus every family instance whose three
/// parameters are at most `entry_bound`. Parameters are drawn from the
/// primes `p` with `Φ₃(p)` prime, since every entry of a threat is one.
/// Sorted by `x`, one certificate per argument multiset.
pub fn search_quadruple_threats(entry_bound: u64, ctl: &SearchControl<'_>) -> Result<SearchOutcome> {
    if entry_bound == 0 {
        return Err(Error::Invalid("entry_bound must be positive".into()));
    }
    if entry_bound > MAX_ENTRY_BOUND {
        return Err(Error::Scale {
            what: "entry_bound",
            value: entry_bound.to_string(),
            limit: MAX_ENTRY_BOUND.to_string(),
        });
    }
    let entries = threat_entries(entry_bound);
    run_anchored(
        &format!("quad entry_bound={entry_bound}"),
        &entries,
        table_threats()?,
        ctl,
        |a| anchor_work(a, &entries),
    )
}

/// True if `d` for the certificate's multiset is reachable from family `k`
/// with some ordering of the other three entries.
pub fn reached_by_family(cert: &ThreatCertificate, k: FourFamily) -> bool {
    let Ok(args) = cert
        .args()
        .iter()
        .map(u64::try_from)
        .collect::<Result<Vec<u64>, _>>()
    else {
        return false;
    };
    if args.len() != 4 {
        return false;
    }
    let idx = [0usize, 1, 2, 3];
    itertools::Itertools::permutations(idx.iter(), 4).any(|p| {
        family_value(k, args[*p[0]], args[*p[1]], args[*p[2]]) == Some(args[*p[3]])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::four_factor_family;

    #[test]
    fn word_family_matches_exact() {
        for k in FourFamily::ALL {
            for a in 1..=14u64 {
                for b in 1..=14u64 {
                    for c in 1..=14u64 {
                        let exact = four_factor_family(k, &a.into(), &b.into(), &c.into());
                        assert_eq!(family_value(k, a, b, c).map(BigUint::from), exact, "{k} {a},{b},{c}");
                    }
                }
            }
        }
    }

    #[test]
    fn entry_bound_five_reaches_191_through_family_three() {
        let out = search_quadruple_threats(5, &SearchControl::default()).unwrap();
        let xs: Vec<String> = out.certificates.iter().map(|c| c.x().to_string()).collect();
        assert_eq!(xs, ["191"]);
        assert!(reached_by_family(&out.certificates[0], FourFamily::Three));
        assert_eq!(family_value(FourFamily::Three, 3, 3, 5), Some(2));
    }

    #[test]
    fn entry_bound_100_has_one_even_threat() {
        let out = search_quadruple_threats(100, &SearchControl::default()).unwrap();
        let even: Vec<_> = out.certificates.iter().filter(|c| c.has_even_entry()).collect();
        assert_eq!(even.len(), 1);
        assert_eq!(even[0].x(), &BigUint::from(191u32));
        let xs: Vec<&BigUint> = out.certificates.iter().map(|c| c.x()).collect();
        assert!(xs.windows(2).all(|w| w[0] < w[1]));
        for c in &out.certificates {
            assert!(c.revalidate());
        }
    }

    #[test]
    fn chunking_does_not_change_output() {
        let one = search_quadruple_threats(60, &SearchControl::default()).unwrap();
        let ctl = SearchControl {
            anchors_per_chunk: 1,
            ..SearchControl::default()
        };
        let many = search_quadruple_threats(60, &ctl).unwrap();
        assert_eq!(one.certificates, many.certificates);
        assert_eq!(one.anchor_stats, many.anchor_stats);
    }
}
