use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Solution;
use crate::primality::{is_prime, phi3, PrimalityEvidence};

/// One of the `2n + 1` quantities that must be prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceEntry {
    /// `x`, `a1`..`an`, or `phi3(a1)`..`phi3(an)`.
    pub quantity: String,
    pub value: BigUint,
    pub evidence: PrimalityEvidence,
}

/// A solution in which `x`, every `a_i` and every `Φ₃(a_i)` are prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreatCertificate {
    solution: Solution,
    evidence: Vec<EvidenceEntry>,
}

fn required_quantities(sol: &Solution) -> Vec<(String, BigUint)> {
    let mut out = vec![("x".to_string(), sol.x().clone())];
    for (i, a) in sol.args().iter().enumerate() {
        out.push((format!("a{}", i + 1), a.clone()));
    }
    for (i, a) in sol.args().iter().enumerate() {
        out.push((format!("phi3(a{})", i + 1), phi3(a)));
    }
    out
}

/// Certificate for `sol` if all `2n + 1` quantities pass the primality test.
/// Stops at the first composite.
pub fn is_n_threat(sol: &Solution) -> Result<Option<ThreatCertificate>> {
    let n = sol.n();
    if !(2..=4).contains(&n) {
        return Err(Error::Arity { min: 2, max: 4, got: n });
    }
    let mut evidence = Vec::with_capacity(2 * n + 1);
    for (quantity, value) in required_quantities(sol) {
        let ev = is_prime(&value)?;
        if !ev.is_prime() {
            return Ok(None);
        }
        evidence.push(EvidenceEntry {
            quantity,
            value,
            evidence: ev,
        });
    }
    Ok(Some(ThreatCertificate {
        solution: sol.clone(),
        evidence,
    }))
}

/// [`is_n_threat`] on raw parts; rejects pairs that violate the product
/// identity.
pub fn check_threat(x: BigUint, args: Vec<BigUint>) -> Result<Option<ThreatCertificate>> {
    let sol = Solution::from_identity(x, args)?;
    is_n_threat(&sol)
}

impl ThreatCertificate {
    pub fn solution(&self) -> &Solution {
        &self.solution
    }

    pub fn n(&self) -> usize {
        self.solution.n()
    }

    pub fn x(&self) -> &BigUint {
        self.solution.x()
    }

    pub fn args(&self) -> &[BigUint] {
        self.solution.args()
    }

    pub fn evidence(&self) -> &[EvidenceEntry] {
        &self.evidence
    }

    /// True if every verdict is deterministic (all quantities below 2^64).
    pub fn fully_deterministic(&self) -> bool {
        self.evidence
            .iter()
            .all(|e| e.evidence.verdict == crate::primality::Verdict::PrimeDeterministic)
    }

    pub fn has_even_entry(&self) -> bool {
        self.args().iter().any(|a| !a.bit(0))
    }

    /// Recomputes the identity and every verdict from scratch.
    pub fn revalidate(&self) -> bool {
        let Ok(sol) = Solution::from_identity(self.x().clone(), self.args().to_vec()) else {
            return false;
        };
        matches!(is_n_threat(&sol), Ok(Some(c)) if c == *self)
    }

    pub fn to_record(&self) -> CertificateRecord {
        CertificateRecord {
            n: self.n(),
            x: self.x().to_string(),
            args: self.args().iter().map(ToString::to_string).collect(),
            evidence: self
                .evidence
                .iter()
                .map(|e| EvidenceRecord {
                    quantity: e.quantity.clone(),
                    value: e.value.to_string(),
                    tag: e.evidence.tag(),
                })
                .collect(),
        }
    }
}

/// Serialized form of a certificate. Integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub n: usize,
    pub x: String,
    pub args: Vec<String>,
    pub evidence: Vec<EvidenceRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceRecord {
    pub quantity: String,
    pub value: String,
    pub tag: String,
}

impl CertificateRecord {
    /// Rebuilds the certificate, recomputing every verdict.
    pub fn revalidate(&self) -> Result<ThreatCertificate> {
        let parse = |s: &str| {
            s.parse::<BigUint>()
                .map_err(|_| Error::Invalid(format!("not a decimal integer: {s:?}")))
        };
        let x = parse(&self.x)?;
        let args = self.args.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
        let cert = check_threat(x, args)?
            .ok_or_else(|| Error::NotASolution(format!("x={} is no longer a threat", self.x)))?;
        if cert.to_record() != *self {
            return Err(Error::Invalid(format!("certificate for x={} does not reproduce", self.x)));
        }
        Ok(cert)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn quadruple_threat_191() {
        let cert = check_threat(BigUint::from(191u32), v(&[2, 3, 3, 5])).unwrap().unwrap();
        assert_eq!(cert.evidence().len(), 9);
        assert!(cert.fully_deterministic());
        assert!(cert.has_even_entry());
        assert!(cert.revalidate());
        let names: Vec<_> = cert.evidence().iter().map(|e| e.quantity.as_str()).collect();
        assert_eq!(
            names,
            ["x", "a1", "a2", "a3", "a4", "phi3(a1)", "phi3(a2)", "phi3(a3)", "phi3(a4)"]
        );
        let rec = cert.to_record();
        assert_eq!(rec.revalidate().unwrap(), cert);
    }

    #[test]
    fn non_threats() {
        assert!(check_threat(BigUint::from(4u32), v(&[1, 2])).unwrap().is_none());
        assert!(check_threat(BigUint::from(18u32), v(&[2, 2, 2])).unwrap().is_none());
        assert!(check_threat(BigUint::from(17u32), v(&[2, 2, 2])).is_err());
    }

    #[test]
    fn tampered_record_is_rejected() {
        let cert = check_threat(BigUint::from(191u32), v(&[2, 3, 3, 5])).unwrap().unwrap();
        let mut rec = cert.to_record();
        rec.evidence[0].tag = "probable-prime:bpsw".into();
        assert!(rec.revalidate().is_err());
        let mut rec = cert.to_record();
        rec.x = "192".into();
        assert!(rec.revalidate().is_err());
    }
}
