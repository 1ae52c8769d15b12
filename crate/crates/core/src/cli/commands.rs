use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::sync::atomic::AtomicBool;

use num_bigint::BigUint;
use serde::Serialize;

use super::args::SearchArgs;
use super::config::{FileConfig, RunConfig, SearchBounds};
use super::exit::{self, Failure};
use phi3::claims::{desk_checks, fixture_checks};
use phi3::families::{catalog, classify, expand_product, Solution};
use phi3::oracle::{classify_row, for_each_block};
use phi3::primality::{factor_with_seed, inv_phi3_u64, phi3};
use phi3::report::{certificate_records, CheckRecord, Format, Record, RecordWriter, SolutionRecord};
use phi3::threats::{
    default_fixture_path, is_n_threat, load_fixture, min_prime_factor_scan,
    search_odd_quadruple_threats, search_quadruple_threats, AnchorStat, CheckStatus,
    SearchControl, SearchOutcome, ThreatCertificate,
};

pub type Out = RecordWriter<Box<dyn Write + Send>>;

pub fn enumerate(out: &mut Out, x_max: u64) -> Result<(), Failure> {
    out.begin::<SolutionRecord>()?;
    for_each_block(x_max, |block| {
        for sol in block.into_iter().filter(|s| s.n() >= 2) {
            out.write(&SolutionRecord::from(&classify_row(sol)))?;
        }
        out.flush()
    })?;
    Ok(())
}

#[derive(Serialize)]
struct ClassifyRecord {
    x: String,
    phi3: String,
    factorization: String,
    same_form: bool,
    args: Vec<String>,
    labels: Vec<String>,
    threat: bool,
    note: String,
}

impl Record for ClassifyRecord {
    const HEADER: &'static [&'static str] =
        &["x", "phi3", "factorization", "same_form", "args", "labels", "threat", "note"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.x.clone(),
            self.phi3.clone(),
            self.factorization.clone(),
            self.same_form.to_string(),
            self.args.join(","),
            self.labels.join(" "),
            self.threat.to_string(),
            self.note.clone(),
        ]
    }

    fn human(&self) -> String {
        let mut s = format!("x = {}\nphi3(x) = {} = {}\n", self.x, self.phi3, self.factorization);
        if !self.same_form {
            s.push_str(&format!("not a same-form factorization: {}", self.note));
            return s;
        }
        s.push_str(&format!("args = {{{}}}\n", self.args.join(",")));
        if self.labels.is_empty() {
            s.push_str(&format!("matches: none ({})\n", self.note));
        } else {
            s.push_str(&format!("matches: {}\n", self.labels.join(" ")));
        }
        s.push_str(&format!("threat: {}", if self.threat { "yes" } else { "no" }));
        s
    }
}

pub fn classify_x(out: &mut Out, x: u64, seed: u64) -> Result<(), Failure> {
    if x == 0 {
        return Err(Failure::config("x must be positive"));
    }
    phi3::oracle::check_bound(x)?;
    let value = phi3(&BigUint::from(x));
    let factors = factor_with_seed(&value, seed)?;
    let mut args = Vec::new();
    let mut bad = Vec::new();
    for p in factors.primes_with_multiplicity() {
        match inv_phi3_u64(p) {
            Some(a) => args.push(BigUint::from(a)),
            None => bad.push(p),
        }
    }
    let mut rec = ClassifyRecord {
        x: x.to_string(),
        phi3: value.to_string(),
        factorization: factors.to_string(),
        same_form: bad.is_empty(),
        args: Vec::new(),
        labels: Vec::new(),
        threat: false,
        note: String::new(),
    };
    if !bad.is_empty() {
        bad.dedup();
        let bad: Vec<String> = bad.iter().map(u64::to_string).collect();
        rec.note = format!("{} not of the form a^2+a+1", bad.join(", "));
    } else {
        let sol = Solution::new(BigUint::from(x), args)?;
        rec.args = sol.args().iter().map(ToString::to_string).collect();
        match sol.n() {
            1 => rec.note = "phi3(x) is prime".into(),
            2..=4 => {
                rec.labels = classify(&sol)?.labels();
                rec.threat = is_n_threat(&sol)?.is_some();
                if rec.labels.is_empty() {
                    rec.note = "no family or sporadic match".into();
                }
            }
            n => rec.note = format!("{n} factors; no classification beyond four"),
        }
    }
    out.write(&rec)?;
    Ok(())
}

pub fn verify_paper(out: &mut Out, fixture: Option<&Path>, skip_bignum: bool) -> Result<(), Failure> {
    let mut checks = desk_checks()?;
    if skip_bignum {
        checks.extend(fixture_checks(None)?);
    } else {
        let path = fixture.map(Path::to_path_buf).unwrap_or_else(default_fixture_path);
        let f = load_fixture(&path)?;
        checks.extend(fixture_checks(Some(&f))?);
    }
    out.begin::<CheckRecord>()?;
    for c in &checks {
        out.write(&CheckRecord::from(c))?;
    }
    out.flush()?;
    let failed = checks.iter().filter(|c| c.status == CheckStatus::Fail).count();
    if failed > 0 {
        return Err(Failure::new(exit::VERIFY_FAILED, format!("{failed} check(s) failed")));
    }
    Ok(())
}

#[derive(Serialize)]
struct ExpandRecord {
    selection: String,
    m: String,
    n: String,
}

impl Record for ExpandRecord {
    const HEADER: &'static [&'static str] = &["selection", "m", "n"];

    fn fields(&self) -> Vec<String> {
        vec![self.selection.clone(), self.m.clone(), self.n.clone()]
    }

    fn human(&self) -> String {
        format!("{}:\n  ({}) + ({})*w", self.selection, self.m, self.n)
    }
}

pub fn expand(out: &mut Out, sel: &str) -> Result<(), Failure> {
    let sel: phi3::families::SelectionVector = sel.parse()?;
    let (m, n) = expand_product(&sel)?;
    out.write(&ExpandRecord {
        selection: sel.to_string(),
        m: m.to_string(),
        n: n.to_string(),
    })?;
    Ok(())
}

pub fn catalog_cmd(out: &mut Out) -> Result<(), Failure> {
    for entry in catalog() {
        out.write(&entry)?;
    }
    Ok(())
}

fn write_stats(path: &Path, stats: &[AnchorStat]) -> Result<(), Failure> {
    let mut w = RecordWriter::new(Format::Jsonl, BufWriter::new(File::create(path)?));
    for s in stats {
        w.write(s)?;
    }
    w.flush()?;
    Ok(())
}

fn summarize(name: &str, outcome: &SearchOutcome) {
    eprintln!(
        "{name}: {} anchors, {} candidates, {} threats{}{}",
        outcome.anchor_stats.len(),
        outcome.total_candidates(),
        outcome.certificates.len(),
        match outcome.resumed_from {
            Some(a) => format!(", resumed after anchor {a}"),
            None => String::new(),
        },
        if outcome.complete { "" } else { " (incomplete)" },
    );
}

pub fn search_threats(
    out: &mut Out,
    args: &SearchArgs,
    file: &FileConfig,
    stop: &AtomicBool,
) -> Result<(), Failure> {
    let bounds = SearchBounds::resolve(args, file)?;
    let modes = [args.quad, args.odd_quad, args.min_factor_scan];
    let selected = modes.iter().filter(|&&m| m).count();
    if selected == 0 {
        return Err(Failure::config("choose at least one of --quad, --odd-quad, --min-factor-scan"));
    }
    if selected > 1 && (bounds.checkpoint.is_some() || args.stats.is_some()) {
        return Err(Failure::config("--checkpoint and --stats apply to a single search at a time"));
    }
    if args.chunk == 0 {
        return Err(Failure::config("--chunk must be positive"));
    }
    let ctl = SearchControl {
        checkpoint: bounds.checkpoint.as_deref(),
        stop: Some(stop),
        anchors_per_chunk: args.chunk,
        max_chunks: args.max_chunks,
    };

    let mut outcomes: Vec<(&str, SearchOutcome)> = Vec::new();
    if args.quad {
        outcomes.push(("quad", search_quadruple_threats(bounds.entry_bound, &ctl)?));
    }
    if args.odd_quad {
        outcomes.push(("odd-quad", search_odd_quadruple_threats(bounds.a_max, &ctl)?));
    }
    if args.min_factor_scan {
        let report = min_prime_factor_scan(bounds.q_bound, &ctl)?;
        match report.certified_bound() {
            Some(q) => eprintln!("min-factor-scan: certified, no odd quadruple threat with an argument a having phi3(a) <= {q}"),
            None if report.outcome.complete => eprintln!("min-factor-scan: NOT certified, threats found"),
            None => {}
        }
        outcomes.push(("min-factor-scan", report.outcome));
    }

    for (name, o) in &outcomes {
        summarize(name, o);
    }
    if let Some(path) = &args.stats {
        write_stats(path, &outcomes[0].1.anchor_stats)?;
    }
    if outcomes.iter().any(|(_, o)| !o.complete) {
        return Err(Failure::new(
            exit::INTERRUPTED,
            "search stopped before completion; rerun with the same --checkpoint to resume",
        ));
    }

    let mut certs: Vec<ThreatCertificate> = outcomes.into_iter().flat_map(|(_, o)| o.certificates).collect();
    certs.sort_by(|a, b| (a.x(), a.args()).cmp(&(b.x(), b.args())));
    certs.dedup_by(|a, b| a.x() == b.x() && a.args() == b.args());
    out.begin::<phi3::threats::CertificateRecord>()?;
    for rec in certificate_records(&certs) {
        out.write(&rec)?;
    }
    Ok(())
}

pub fn run_config(global: &super::args::GlobalArgs) -> Result<(RunConfig, FileConfig), Failure> {
    let file = match &global.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    Ok((RunConfig::resolve(global, &file)?, file))
}
