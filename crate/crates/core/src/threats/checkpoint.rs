//! Resumable progress for anchored searches.
//!
//! A checkpoint is a single JSON document whose first two fields are the
//! format name and version. It is written to a sibling temporary file and
//! renamed into place, so readers never observe a partial write.

use std::fs::{self, File};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::certificate::CertificateRecord;
use crate::error::{Error, Result};

pub const CHECKPOINT_FORMAT: &str = "phi3-search-checkpoint";
pub const CHECKPOINT_VERSION: u32 = 1;

/// Work counters for one anchor of an anchored search.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchorStat {
    pub anchor: u64,
    /// Second parameters tried with this anchor.
    pub partners: u64,
    /// Parameter tuples that satisfied the family equation.
    pub candidates: u64,
    pub threats: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub format: String,
    pub version: u32,
    /// Search kind plus its bound, e.g. `odd-quad a_max=1000`.
    pub run: String,
    pub last_completed_anchor: Option<u64>,
    pub certificates: Vec<CertificateRecord>,
    pub anchor_stats: Vec<AnchorStat>,
}

impl Checkpoint {
    pub fn new(run: impl Into<String>) -> Self {
        Checkpoint {
            format: CHECKPOINT_FORMAT.into(),
            version: CHECKPOINT_VERSION,
            run: run.into(),
            last_completed_anchor: None,
            certificates: Vec::new(),
            anchor_stats: Vec::new(),
        }
    }

    /// Loads `path` if it exists. Refuses files of another format or
    /// version, or written by a different run.
    pub fn load(path: &Path, run: &str) -> Result<Option<Self>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let err = |reason: String| Error::Checkpoint {
            path: path.to_path_buf(),
            reason,
        };
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| err(format!("unreadable: {e}")))?;
        let format = value.get("format").and_then(|v| v.as_str());
        if format != Some(CHECKPOINT_FORMAT) {
            return Err(err(format!("not a search checkpoint (format {format:?})")));
        }
        let version = value.get("version").and_then(|v| v.as_u64());
        if version != Some(CHECKPOINT_VERSION as u64) {
            return Err(err(format!(
                "version {version:?} does not match {CHECKPOINT_VERSION}; refusing to resume"
            )));
        }
        let cp: Checkpoint =
            serde_json::from_value(value).map_err(|e| err(format!("malformed: {e}")))?;
        if cp.run != run {
            return Err(err(format!("written by run {:?}, not {run:?}", cp.run)));
        }
        Ok(Some(cp))
    }

    pub fn store(&self, path: &Path) -> Result<()> {
        let tmp = tmp_path(path);
        {
            let mut f = File::create(&tmp)?;
            serde_json::to_writer_pretty(&mut f, self).map_err(std::io::Error::other)?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

fn tmp_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".tmp");
    path.with_file_name(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_refusals() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.json");
        assert_eq!(Checkpoint::load(&path, "quad entry_bound=5").unwrap(), None);

        let mut cp = Checkpoint::new("quad entry_bound=5");
        cp.last_completed_anchor = Some(3);
        cp.anchor_stats.push(AnchorStat {
            anchor: 3,
            partners: 2,
            candidates: 1,
            threats: 0,
        });
        cp.store(&path).unwrap();
        assert!(!tmp_path(&path).exists());
        assert_eq!(Checkpoint::load(&path, "quad entry_bound=5").unwrap(), Some(cp.clone()));

        assert!(matches!(
            Checkpoint::load(&path, "quad entry_bound=6"),
            Err(Error::Checkpoint { .. })
        ));

        let text = fs::read_to_string(&path).unwrap().replace("\"version\": 1", "\"version\": 2");
        fs::write(&path, text).unwrap();
        let e = Checkpoint::load(&path, "quad entry_bound=5").unwrap_err();
        assert!(e.to_string().contains("refusing to resume"), "{e}");

        fs::write(&path, "not json").unwrap();
        assert!(Checkpoint::load(&path, "quad entry_bound=5").is_err());
    }
}
