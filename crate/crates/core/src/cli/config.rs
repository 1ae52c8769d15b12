use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::args::{FormatArg, GlobalArgs, SearchArgs};
use super::exit::Failure;
use phi3::report::Format;

pub const WORKERS_ENV: &str = "PHI3_WORKERS";

/// Defaults read from `--config`. Every key is optional; flags win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub x_max: Option<u64>,
    pub entry_bound: Option<u64>,
    pub a_max: Option<u64>,
    pub q_bound: Option<u64>,
    pub format: Option<String>,
    pub workers: Option<usize>,
    pub seed: Option<u64>,
    pub checkpoint: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::config(format!("config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Failure::config(format!("config {}: {e}", path.display())))
    }
}

/// Settings shared by every subcommand after merging flags, environment and
/// config file.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub workers: Option<usize>,
    pub seed: u64,
}

fn positive(name: &str, v: Option<u64>) -> Result<Option<u64>, Failure> {
    match v {
        Some(0) => Err(Failure::config(format!("--{name} must be positive"))),
        v => Ok(v),
    }
}

impl RunConfig {
    pub fn resolve(global: &GlobalArgs, file: &FileConfig) -> Result<Self, Failure> {
        let format = match (global.format, &file.format) {
            (Some(f), _) => Format::from(f),
            (None, Some(s)) => s.parse().map_err(|e| Failure::config(format!("config: {e}")))?,
            (None, None) => Format::from(FormatArg::Human),
        };
        let env_workers = match std::env::var(WORKERS_ENV) {
            Ok(s) => Some(
                s.parse::<usize>()
                    .map_err(|_| Failure::config(format!("{WORKERS_ENV}={s:?} is not a count")))?,
            ),
            Err(_) => None,
        };
        let workers = global.workers.or(env_workers).or(file.workers);
        if workers == Some(0) {
            return Err(Failure::config("worker count must be at least 1"));
        }
        Ok(RunConfig {
            format,
            workers,
            seed: global.seed.or(file.seed).unwrap_or(phi3::primality::DEFAULT_SEED),
        })
    }
}

pub fn x_max(flag: Option<u64>, file: &FileConfig) -> Result<u64, Failure> {
    Ok(positive("x-max", flag.or(file.x_max))?.unwrap_or(phi3::oracle::DEFAULT_X_MAX))
}

/// Search bounds after merging.
#[derive(Debug, Clone)]
pub struct SearchBounds {
    pub entry_bound: u64,
    pub a_max: u64,
    pub q_bound: u64,
    pub checkpoint: Option<PathBuf>,
}

pub const DEFAULT_ENTRY_BOUND: u64 = 100;
pub const DEFAULT_A_MAX: u64 = 1000;

impl SearchBounds {
    pub fn resolve(args: &SearchArgs, file: &FileConfig) -> Result<Self, Failure> {
        Ok(SearchBounds {
            entry_bound: positive("entry-bound", args.entry_bound.or(file.entry_bound))?
                .unwrap_or(DEFAULT_ENTRY_BOUND),
            a_max: positive("a-max", args.a_max.or(file.a_max))?.unwrap_or(DEFAULT_A_MAX),
            q_bound: positive("q-bound", args.q_bound.or(file.q_bound))?
                .unwrap_or(phi3::threats::DEFAULT_Q_BOUND),
            checkpoint: args.checkpoint.clone().or_else(|| file.checkpoint.clone()),
        })
    }
}
