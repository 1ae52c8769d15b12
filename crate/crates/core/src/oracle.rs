//! Brute-force ground truth: factor `Φ₃(x)` for every `x` up to a bound and
//! keep the `x` whose prime factors are all themselves `Φ₃` values.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{classify, Classification, Solution};
use crate::primality::{factor_u64, inv_phi3_u64, phi3_u64, DEFAULT_SEED};

/// Largest `x` with `Φ₃(x) < 2^64`, the factoring scale.
pub const ORACLE_X_LIMIT: u64 = u32::MAX as u64;

/// Default bound for routine runs.
pub const DEFAULT_X_MAX: u64 = 1_000_000;

/// Rows are produced and handed out in blocks of this many `x` values.
pub const CHUNK: u64 = 1 << 16;

pub fn check_bound(x_max: u64) -> Result<()> {
    if x_max == 0 {
        return Err(Error::Invalid("x_max must be positive".into()));
    }
    if x_max > ORACLE_X_LIMIT {
        return Err(Error::Scale {
            what: "x_max",
            value: x_max.to_string(),
            limit: ORACLE_X_LIMIT.to_string(),
        });
    }
    Ok(())
}

/// The multiset `{a_i}` with `Φ₃(x) = prod Φ₃(a_i)` and every `Φ₃(a_i)`
/// prime, if `x` has one. A prime `Φ₃(x)` gives the single argument `x`.
pub fn solution_at(x: u64) -> Option<Solution> {
    let value = phi3_u64(x);
    let value = u64::try_from(value).ok()?;
    let mut args = Vec::new();
    for (p, e) in factor_u64(value, DEFAULT_SEED).0 {
        let a = inv_phi3_u64(p)?;
        args.extend(std::iter::repeat_n(BigUint::from(a), e as usize));
    }
    Some(Solution::trusted(BigUint::from(x), args))
}

/// Feeds solutions for `x` in `1..=x_max` to `sink` in ascending order, one
/// block at a time. Blocks are computed in parallel on the current rayon pool.
pub fn for_each_block<F>(x_max: u64, mut sink: F) -> Result<()>
where
    F: FnMut(Vec<Solution>) -> Result<()>,
{
    check_bound(x_max)?;
    let mut start = 1u64;
    while start <= x_max {
        let end = (start + CHUNK - 1).min(x_max);
        let block: Vec<Solution> = (start..=end)
            .into_par_iter()
            .filter_map(solution_at)
            .collect();
        sink(block)?;
        start = end + 1;
    }
    Ok(())
}

/// Every solution with `x <= x_max`, sorted by `x`, including `n = 1` rows.
pub fn enumerate_solutions(x_max: u64) -> Result<Vec<Solution>> {
    let mut out = Vec::new();
    for_each_block(x_max, |block| {
        out.extend(block);
        Ok(())
    })?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RowStatus {
    /// `Φ₃(x)` is prime.
    Prime,
    Classified,
    /// `n` in `{2, 3, 4}` and no family or sporadic matched.
    Mismatch,
    /// `n >= 5`: no classification exists to check against.
    Unclassified,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Prime => "prime",
            RowStatus::Classified => "classified",
            RowStatus::Mismatch => "mismatch",
            RowStatus::Unclassified => "unclassified",
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleRow {
    pub solution: Solution,
    pub classification: Option<Classification>,
    pub status: RowStatus,
}

impl OracleRow {
    pub fn labels(&self) -> Vec<String> {
        match (&self.classification, self.status) {
            (Some(c), _) => c.labels(),
            (None, RowStatus::Prime) => vec!["prime".into()],
            (None, RowStatus::Unclassified) => vec![format!("unclassified-n{}", self.solution.n())],
            (None, _) => vec![],
        }
    }
}

pub fn classify_row(solution: Solution) -> OracleRow {
    let n = solution.n();
    let (classification, status) = match n {
        1 => (None, RowStatus::Prime),
        2..=4 => {
            let c = classify(&solution).expect("arity in range");
            let status = if c.is_empty() {
                RowStatus::Mismatch
            } else {
                RowStatus::Classified
            };
            (Some(c), status)
        }
        _ => (None, RowStatus::Unclassified),
    };
    OracleRow {
        solution,
        classification,
        status,
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub x_max: u64,
    pub rows: Vec<OracleRow>,
    pub mismatches: Vec<Solution>,
}

impl OracleReport {
    /// Solutions with exactly `n` arguments, ascending by `x`.
    pub fn solutions_with_n(&self, n: usize) -> impl Iterator<Item = &Solution> {
        self.rows
            .iter()
            .map(|r| &r.solution)
            .filter(move |s| s.n() == n)
    }

    pub fn counts_by_n(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for r in &self.rows {
            *m.entry(r.solution.n()).or_insert(0) += 1;
        }
        m
    }

    pub fn is_complete(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Enumerates up to `x_max` and classifies every solution with two to four
/// factors. An empty `mismatches` list is the empirical form of the
/// classification theorems up to `x_max`.
pub fn completeness_check(x_max: u64) -> Result<OracleReport> {
    let rows: Vec<OracleRow> = enumerate_solutions(x_max)?
        .into_par_iter()
        .map(classify_row)
        .collect();
    let mismatches = rows
        .iter()
        .filter(|r| r.status == RowStatus::Mismatch)
        .map(|r| r.solution.clone())
        .collect();
    Ok(OracleReport {
        x_max,
        rows,
        mismatches,
    })
}
