//! The published solution tables and threats, re-derived and checked one
//! claim per line.

use num_bigint::BigUint;

use crate::error::Result;
use crate::families::{
    classify, ones_tuples, solve_x, sporadics, Label, Solution, ONES_4, SPORADIC_3, SPORADIC_4,
};
use crate::threats::{check_threat, verify_fixture, Check, Fixture};

/// `x` for each entry of [`SPORADIC_4`].
pub const SPORADIC_4_X: [u64; 2] = [324, 165];

/// `x` for each entry of [`ONES_4`].
pub const ONES_4_X: [u64; 8] = [67, 79, 256, 289, 625, 436, 466, 484];

fn big_args(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| BigUint::from(x)).collect()
}

fn tuple_name(args: &[u64], x: u64) -> String {
    let args: Vec<String> = args.iter().map(u64::to_string).collect();
    format!("({}; x={x})", args.join(","))
}

/// `args` with the stated `x` is a same-form factorization, `x` is what the
/// quadratic root and recognizer produce, and classification returns `label`.
fn table_check(kind: &str, args: &[u64], x: u64, label: impl Fn(&Label) -> bool) -> Result<Check> {
    let big = big_args(args);
    let solved = solve_x(&big)?;
    let sol = Solution::new(BigUint::from(x), big);
    let (ok, detail) = match (&solved, &sol) {
        (Some(s), Ok(sol)) if *s == BigUint::from(x) => {
            let labels = classify(sol)?;
            let hit = labels.matches.iter().any(|m| label(&m.label));
            (hit, labels.labels().join(" "))
        }
        (_, Err(e)) => (false, e.to_string()),
        (s, _) => (false, format!("computed x = {s:?}")),
    };
    Ok(Check::new(format!("{kind} {}", tuple_name(args, x)), ok, detail))
}

/// Checks that need no big-integer primality: the sporadic tables, the
/// tuples containing 1, and the even quadruple threat.
pub fn desk_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (i, (args, x)) in SPORADIC_3.iter().enumerate() {
        let want = Label::Sporadic3(i as u8 + 1);
        checks.push(table_check("sporadic-3", args, *x, |l| *l == want)?);
    }
    for (i, (args, x)) in SPORADIC_4.iter().zip(SPORADIC_4_X).enumerate() {
        let want = Label::Sporadic4(i as u8 + 1);
        checks.push(table_check("sporadic-4", args, x, |l| *l == want)?);
    }
    checks.push(Check::new(
        "sporadic tables complete",
        sporadics(3)?.len() == 3 && sporadics(4)?.len() == 2,
        "3 three-factor, 2 four-factor",
    ));
    for (args, x) in ONES_4.iter().zip(ONES_4_X) {
        checks.push(table_check("ones-tuple", args, x, |l| matches!(l, Label::FourFactor(_)))?);
    }
    let ones = ones_tuples();
    let computed: Vec<BigUint> = ones.iter().map(|s| s.x().clone()).collect();
    checks.push(Check::new(
        "ones tuples: exactly eight",
        ones.len() == 8 && computed == ONES_4_X.map(BigUint::from).to_vec(),
        format!("{} tuples", ones.len()),
    ));
    checks.push(Check::new(
        "ones tuple (1,3,3,21) has even x=484",
        computed.last() == Some(&BigUint::from(484u32)) && !computed[7].bit(0),
        "",
    ));
    let threat = check_threat(BigUint::from(191u32), big_args(&[2, 3, 3, 5]))?;
    checks.push(Check::new(
        "quadruple threat (2,3,3,5; x=191)",
        threat.as_ref().is_some_and(|c| c.evidence().len() == 9),
        threat.map(|_| "9 quantities prime").unwrap_or("not a threat"),
    ));
    Ok(checks)
}

/// The odd quadruple threat, or a SKIPPED line if `fixture` is `None`.
pub fn fixture_checks(fixture: Option<&Fixture>) -> Result<Vec<Check>> {
    let Some(f) = fixture else {
        return Ok(vec![Check::skipped("odd quadruple threat fixture", "big-integer checks skipped")]);
    };
    let report = verify_fixture(f)?;
    Ok(report
        .checks
        .into_iter()
        .map(|c| Check {
            name: format!("odd quadruple threat: {}", c.name),
            ..c
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threats::{embedded_fixture, CheckStatus};

    #[test]
    fn all_claims_pass() {
        let desk = desk_checks().unwrap();
        assert!(desk.iter().all(|c| c.status == CheckStatus::Pass), "{desk:?}");
        let big = fixture_checks(Some(&embedded_fixture())).unwrap();
        assert!(big.iter().all(|c| c.status == CheckStatus::Pass), "{big:?}");
        let skipped = fixture_checks(None).unwrap();
        assert_eq!(skipped[0].status, CheckStatus::Skipped);
    }
}
