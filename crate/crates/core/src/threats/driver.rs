//! Chunked, parallel, resumable execution of anchored searches.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::certificate::ThreatCertificate;
use super::checkpoint::{AnchorStat, Checkpoint};
use crate::error::Result;

/// How an anchored search is run.
#[derive(Clone, Copy, Debug)]
pub struct SearchControl<'a> {
    /// Resume from and write progress to this file.
    pub checkpoint: Option<&'a Path>,
    /// Checked between chunks; once set, the search stops after flushing.
    pub stop: Option<&'a AtomicBool>,
    pub anchors_per_chunk: usize,
    /// Stop after this many chunks in this invocation.
    pub max_chunks: Option<usize>,
}

impl Default for SearchControl<'_> {
    fn default() -> Self {
        SearchControl {
            checkpoint: None,
            stop: None,
            anchors_per_chunk: 64,
            max_chunks: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Deduplicated by argument multiset, sorted by `x` then arguments.
    pub certificates: Vec<ThreatCertificate>,
    /// One entry per completed anchor, ascending.
    pub anchor_stats: Vec<AnchorStat>,
    pub last_completed_anchor: Option<u64>,
    /// False if stopped before every anchor was processed.
    pub complete: bool,
    pub resumed_from: Option<u64>,
}

impl SearchOutcome {
    pub fn total_candidates(&self) -> u64 {
        self.anchor_stats.iter().map(|s| s.candidates).sum()
    }
}

type CertKey = (BigUint, Vec<BigUint>);

fn key(c: &ThreatCertificate) -> CertKey {
    (c.x().clone(), c.args().to_vec())
}

/// Runs `work` on every anchor in `anchors` (ascending). `extra` holds
/// certificates found outside the anchored loop; they are merged into the
/// result but not checkpointed.
pub(crate) fn run_anchored<F>(
    run: &str,
    anchors: &[u64],
    extra: Vec<ThreatCertificate>,
    ctl: &SearchControl<'_>,
    work: F,
) -> Result<SearchOutcome>
where
    F: Fn(u64) -> Result<(Vec<ThreatCertificate>, AnchorStat)> + Sync,
{
    debug_assert!(anchors.windows(2).all(|w| w[0] < w[1]));
    let mut state = match ctl.checkpoint {
        Some(p) => Checkpoint::load(p, run)?.unwrap_or_else(|| Checkpoint::new(run)),
        None => Checkpoint::new(run),
    };
    let resumed_from = state.last_completed_anchor;

    let mut found: BTreeMap<CertKey, ThreatCertificate> = BTreeMap::new();
    for rec in &state.certificates {
        let cert = rec.revalidate()?;
        found.insert(key(&cert), cert);
    }

    let pending: Vec<u64> = anchors
        .iter()
        .copied()
        .filter(|&a| resumed_from.is_none_or(|last| a > last))
        .collect();

    let chunk = ctl.anchors_per_chunk.max(1);
    let mut complete = true;
    for (i, block) in pending.chunks(chunk).enumerate() {
        let stopped = ctl.stop.is_some_and(|s| s.load(Ordering::SeqCst));
        if stopped || ctl.max_chunks.is_some_and(|m| i >= m) {
            complete = false;
            break;
        }
        let results = block
            .par_iter()
            .map(|&a| work(a))
            .collect::<Result<Vec<_>>>()?;
        for (certs, stat) in results {
            for c in certs {
                found.insert(key(&c), c);
            }
            state.anchor_stats.push(stat);
        }
        state.last_completed_anchor = block.last().copied();
        if let Some(p) = ctl.checkpoint {
            state.certificates = found.values().map(ThreatCertificate::to_record).collect();
            state.store(p)?;
        }
    }

    for c in extra {
        found.entry(key(&c)).or_insert(c);
    }
    Ok(SearchOutcome {
        certificates: found.into_values().collect(),
        anchor_stats: state.anchor_stats,
        last_completed_anchor: state.last_completed_anchor,
        complete,
        resumed_from,
    })
}
