//! Row-per-result output in three formats with a fixed field order.
//!
//! Integers are always written as exact decimal strings. In CSV, list fields
//! are joined into one quoted column; in JSON lines they are arrays.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::OracleRow;
use crate::threats::{AnchorStat, CertificateRecord, Check, ThreatCertificate};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Human,
    Jsonl,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "human" => Ok(Format::Human),
            "jsonl" => Ok(Format::Jsonl),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Invalid(format!("unknown format {other:?} (human, jsonl, csv)"))),
        }
    }
}

/// A record type: its CSV header, CSV fields, and human-readable line.
pub trait Record: Serialize {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
    fn human(&self) -> String;
    /// Header line for the human format, if any.
    fn human_header() -> Option<String> {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionRecord {
    pub x: String,
    pub n: usize,
    pub args: Vec<String>,
    pub labels: Vec<String>,
    pub status: &'static str,
}

impl From<&OracleRow> for SolutionRecord {
    fn from(row: &OracleRow) -> Self {
        SolutionRecord {
            x: row.solution.x().to_string(),
            n: row.solution.n(),
            args: row.solution.args().iter().map(ToString::to_string).collect(),
            labels: row.labels(),
            status: row.status.as_str(),
        }
    }
}

impl Record for SolutionRecord {
    const HEADER: &'static [&'static str] = &["x", "n", "args", "labels", "status"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.x.clone(),
            self.n.to_string(),
            self.args.join(","),
            self.labels.join(" "),
            self.status.to_string(),
        ]
    }

    fn human(&self) -> String {
        format!(
            "{:>12}  n={}  {{{}}}  {}",
            self.x,
            self.n,
            self.args.join(","),
            self.labels.join(" ")
        )
    }

    fn human_header() -> Option<String> {
        Some(format!("{:>12}  {:<3}  {{args}}  labels", "x", "n"))
    }
}

impl Record for CertificateRecord {
    const HEADER: &'static [&'static str] = &["n", "x", "args", "evidence"];

    fn fields(&self) -> Vec<String> {
        let evidence: Vec<String> = self
            .evidence
            .iter()
            .map(|e| format!("{}={}", e.quantity, e.tag))
            .collect();
        vec![self.n.to_string(), self.x.clone(), self.args.join(","), evidence.join(" ")]
    }

    fn human(&self) -> String {
        let mut s = format!("threat n={} x={} args={{{}}}", self.n, self.x, self.args.join(","));
        for e in &self.evidence {
            s.push_str(&format!("\n    {:<10} {:<22} {}", e.quantity, e.tag, e.value));
        }
        s
    }
}

impl Record for AnchorStat {
    const HEADER: &'static [&'static str] = &["anchor", "partners", "candidates", "threats"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.anchor.to_string(),
            self.partners.to_string(),
            self.candidates.to_string(),
            self.threats.to_string(),
        ]
    }

    fn human(&self) -> String {
        format!(
            "anchor {:>10}  partners {:>8}  candidates {:>10}  threats {}",
            self.anchor, self.partners, self.candidates, self.threats
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub status: String,
    pub claim: String,
    pub detail: String,
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> Self {
        CheckRecord {
            status: c.status.to_string(),
            claim: c.name.clone(),
            detail: c.detail.clone(),
        }
    }
}

impl Record for CheckRecord {
    const HEADER: &'static [&'static str] = &["status", "claim", "detail"];

    fn fields(&self) -> Vec<String> {
        vec![self.status.clone(), self.claim.clone(), self.detail.clone()]
    }

    fn human(&self) -> String {
        if self.detail.is_empty() {
            format!("{:<7} {}", self.status, self.claim)
        } else {
            format!("{:<7} {}  [{}]", self.status, self.claim, self.detail)
        }
    }
}

impl Record for crate::families::CatalogEntry {
    const HEADER: &'static [&'static str] = &["id", "n", "formula", "side_conditions"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.id.clone(),
            self.n.to_string(),
            self.formula.clone(),
            self.side_conditions.clone(),
        ]
    }

    fn human(&self) -> String {
        let cond = if self.side_conditions.is_empty() {
            String::new()
        } else {
            format!("  [{}]", self.side_conditions)
        };
        format!("{:<22} n={}  {}{}", self.id, self.n, self.formula, cond)
    }
}

/// Streams records of one type to `W`.
pub struct RecordWriter<W: Write> {
    format: Format,
    out: Sink<W>,
    started: bool,
}

enum Sink<W: Write> {
    Plain(W),
    Csv(Box<csv::Writer<W>>),
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Io(std::io::Error::other(e.to_string()))
}

impl<W: Write> RecordWriter<W> {
    pub fn new(format: Format, out: W) -> Self {
        let out = match format {
            Format::Csv => Sink::Csv(Box::new(csv::WriterBuilder::new().has_headers(false).from_writer(out))),
            _ => Sink::Plain(out),
        };
        RecordWriter {
            format,
            out,
            started: false,
        }
    }

    /// Writes the header (CSV, human) once. Called implicitly by `write`.
    pub fn begin<R: Record>(&mut self) -> Result<()> {
        if self.started {
            return Ok(());
        }
        self.started = true;
        match (&mut self.out, self.format) {
            (Sink::Csv(w), _) => w.write_record(R::HEADER).map_err(io_err),
            (Sink::Plain(w), Format::Human) => match R::human_header() {
                Some(h) => Ok(writeln!(w, "{h}")?),
                None => Ok(()),
            },
            _ => Ok(()),
        }
    }

    pub fn write<R: Record>(&mut self, record: &R) -> Result<()> {
        self.begin::<R>()?;
        match &mut self.out {
            Sink::Csv(w) => w.write_record(record.fields()).map_err(io_err),
            Sink::Plain(w) => {
                let line = match self.format {
                    Format::Jsonl => serde_json::to_string(record).map_err(io_err)?,
                    _ => record.human(),
                };
                Ok(writeln!(w, "{line}")?)
            }
        }
    }

    pub fn flush(&mut self) -> Result<()> {
        match &mut self.out {
            Sink::Csv(w) => Ok(w.flush()?),
            Sink::Plain(w) => Ok(w.flush()?),
        }
    }
}

/// Certificates as records, ready for a [`RecordWriter`].
pub fn certificate_records(certs: &[ThreatCertificate]) -> Vec<CertificateRecord> {
    certs.iter().map(ThreatCertificate::to_record).collect()
}
