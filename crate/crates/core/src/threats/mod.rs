//! Threats: solutions in which `x`, every `a_i` and every `Φ₃(a_i)` are
//! prime. Checks that none exist with two or three factors, searches for
//! four-factor ones, and verifies the known odd example.

mod certificate;
mod checkpoint;
mod driver;
mod fixture;
mod odd;
mod params;
mod quad;
mod structural;

pub use certificate::{
    check_threat, is_n_threat, CertificateRecord, EvidenceEntry, EvidenceRecord, ThreatCertificate,
};
pub use checkpoint::{AnchorStat, Checkpoint, CHECKPOINT_FORMAT, CHECKPOINT_VERSION};
pub use driver::{SearchControl, SearchOutcome};
pub use fixture::{
    default_fixture_path, embedded_fixture, load_fixture, parse_fixture, reconstruct_from_anchor,
    verify_fixture, Check, CheckStatus, Fixture, FixtureReport, EMBEDDED_FIXTURE, FIXTURE_DIVISOR,
    FIXTURE_RELATIVE_PATH,
};
pub use odd::{
    family1_completion_from_divisor, family1_completions, min_prime_factor_scan, partner_limit,
    search_odd_quadruple_threats, ScanReport, DEFAULT_Q_BOUND, MAX_A_MAX, MAX_Q_BOUND,
};
pub use params::{primes_up_to, threat_entries};
pub use quad::{reached_by_family, search_quadruple_threats, MAX_ENTRY_BOUND};
pub use structural::{no_double_triple_threats, no_double_triple_threats_from, DoubleTripleReport};
