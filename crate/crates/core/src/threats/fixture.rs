//! The known odd quadruple threat, stored as a plain text fixture.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use super::certificate::{EvidenceEntry, ThreatCertificate};
use super::odd::family1_completion_from_divisor;
use crate::error::{Error, Result};
use crate::families::{four_factor_family, product_of_phi3, FourFamily, Solution};
use crate::primality::{is_prime, phi3};

/// Path of the fixture relative to the crate root.
pub const FIXTURE_RELATIVE_PATH: &str = "fixtures/odd_quadruple_threat.txt";

/// The fixture as shipped, compiled into the binary.
pub const EMBEDDED_FIXTURE: &str = include_str!("../../fixtures/odd_quadruple_threat.txt");

/// Divisor of the family-1 constant that produces the last two arguments
/// from the first two.
pub const FIXTURE_DIVISOR: u32 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub x: BigUint,
    pub args: Vec<BigUint>,
}

/// Parses `x` followed by the arguments, one decimal integer per line.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_fixture(text: &str, path: &Path) -> Result<Fixture> {
    let err = |reason: String| Error::Fixture {
        path: path.to_path_buf(),
        reason,
    };
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !line.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(format!("line {}: not a decimal integer: {line:?}", i + 1)));
        }
        values.push(line.parse::<BigUint>().expect("digits only"));
    }
    if !(3..=5).contains(&values.len()) {
        return Err(err(format!(
            "expected x and 2 to 4 arguments, found {} integers",
            values.len()
        )));
    }
    let x = values.remove(0);
    Ok(Fixture { x, args: values })
}

pub fn load_fixture(path: &Path) -> Result<Fixture> {
    let text = fs::read_to_string(path).map_err(|e| Error::Fixture {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    parse_fixture(&text, path)
}

pub fn embedded_fixture() -> Fixture {
    parse_fixture(EMBEDDED_FIXTURE, Path::new(FIXTURE_RELATIVE_PATH)).expect("shipped fixture parses")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIPPED",
        })
    }
}

/// One line of a verification table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if passed { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
        }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::Skipped,
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

#[derive(Clone, Debug)]
pub struct FixtureReport {
    pub checks: Vec<Check>,
    /// Present when every check passed.
    pub certificate: Option<ThreatCertificate>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// Checks the exact product identity, the primality of all `2n + 1`
/// quantities, that every argument is odd, and (for four arguments) that the
/// smallest argument is the family-1 value of the other three. Never fails
/// early: every check is reported.
pub fn verify_fixture(fixture: &Fixture) -> Result<FixtureReport> {
    let mut checks = Vec::new();
    let lhs = phi3(&fixture.x);
    let rhs = product_of_phi3(&fixture.args);
    checks.push(Check::new(
        "product identity",
        lhs == rhs,
        format!("Φ₃(x) has {} digits", lhs.to_string().len()),
    ));

    let mut sorted = fixture.args.clone();
    sorted.sort();
    let mut quantities = vec![("x".to_string(), fixture.x.clone())];
    quantities.extend(sorted.iter().enumerate().map(|(i, a)| (format!("a{}", i + 1), a.clone())));
    quantities.extend(sorted.iter().enumerate().map(|(i, a)| (format!("phi3(a{})", i + 1), phi3(a))));
    let mut evidence = Vec::new();
    for (quantity, value) in quantities {
        if value == BigUint::ZERO {
            checks.push(Check::new(format!("{quantity} prime"), false, "zero"));
            continue;
        }
        let ev = is_prime(&value)?;
        checks.push(Check::new(format!("{quantity} prime"), ev.is_prime(), ev.tag()));
        evidence.push(EvidenceEntry {
            quantity,
            value,
            evidence: ev,
        });
    }

    let all_odd = fixture.x.bit(0) && sorted.iter().all(|a| a.bit(0));
    checks.push(Check::new("all entries odd", all_odd, ""));

    if sorted.len() == 4 {
        let d = four_factor_family(FourFamily::One, &sorted[1], &sorted[2], &sorted[3]);
        checks.push(Check::new(
            "family-1 parameterization",
            d.as_ref() == Some(&sorted[0]),
            "smallest argument from the other three",
        ));
    }

    let passed = checks.iter().all(Check::passed);
    let certificate = if passed {
        let sol = Solution::from_identity(fixture.x.clone(), sorted)?;
        let cert = super::certificate::is_n_threat(&sol)?
            .ok_or_else(|| Error::Invalid("fixture passed checks but is not a threat".into()))?;
        debug_assert_eq!(cert.evidence(), evidence.as_slice());
        Some(cert)
    } else {
        None
    };
    Ok(FixtureReport { checks, certificate })
}

/// The last two arguments of a four-argument fixture, recomputed from the
/// first two through the family-1 divisor kernel.
pub fn reconstruct_from_anchor(fixture: &Fixture, delta: &BigUint) -> Option<(BigUint, BigUint)> {
    let mut sorted = fixture.args.clone();
    sorted.sort();
    if sorted.len() != 4 {
        return None;
    }
    family1_completion_from_divisor(&sorted[0], &sorted[1], delta)
}

/// Where the fixture is read from when no path is given.
pub fn default_fixture_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(FIXTURE_RELATIVE_PATH)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixture_verifies() {
        let f = embedded_fixture();
        assert_eq!(f.x.to_string().len(), 77);
        let report = verify_fixture(&f).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        let cert = report.certificate.unwrap();
        assert_eq!(cert.evidence().len(), 9);
        assert!(!cert.has_even_entry());
        assert!(!cert.fully_deterministic());
    }

    #[test]
    fn divisor_five_reaches_the_fixture() {
        let f = embedded_fixture();
        let (b, c) = reconstruct_from_anchor(&f, &BigUint::from(FIXTURE_DIVISOR)).unwrap();
        assert_eq!((&b, &c), (&f.args[2], &f.args[3]));
    }

    #[test]
    fn perturbed_fixture_fails_identity() {
        let text = EMBEDDED_FIXTURE.replace("91939084808732106267", "91939084808732106268");
        let f = parse_fixture(&text, Path::new("t")).unwrap();
        let report = verify_fixture(&f).unwrap();
        assert!(!report.passed());
        assert_eq!(report.checks[0].status, CheckStatus::Fail);
        assert!(report.certificate.is_none());
    }

    #[test]
    fn malformed_fixtures() {
        assert!(matches!(parse_fixture("12\n", Path::new("t")), Err(Error::Fixture { .. })));
        assert!(matches!(parse_fixture("1\n2\nx\n", Path::new("t")), Err(Error::Fixture { .. })));
        assert!(matches!(
            load_fixture(Path::new("/nonexistent/fixture.txt")),
            Err(Error::Fixture { .. })
        ));
    }
}
