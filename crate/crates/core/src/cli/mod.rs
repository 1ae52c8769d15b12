//! Command-line front end.

mod args;
mod commands;
mod config;
pub mod exit;

use std::io::{self, BufWriter, Write};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::Parser;

pub use args::Cli;
use args::Command;
use exit::Failure;
use phi3::report::RecordWriter;

/// Parses the command line, runs it on a pool of the requested size, and
/// returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::CONFIG } else { 0 };
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {f}");
            f.code
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (cfg, file) = commands::run_config(&cli.global)?;

    let stop = Arc::new(AtomicBool::new(false));
    {
        let stop = Arc::clone(&stop);
        // Searches poll the flag between chunks, flush their checkpoint and
        // return; a second Ctrl-C is left to the default handler.
        let _ = ctrlc::set_handler(move || {
            if stop.swap(true, Ordering::SeqCst) {
                std::process::exit(exit::INTERRUPTED);
            }
        });
    }

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.workers {
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| Failure::config(format!("cannot start {} workers: {e}", cfg.workers.unwrap_or(0))))?;

    let sink: Box<dyn Write + Send> = Box::new(BufWriter::new(io::stdout()));
    let mut out = RecordWriter::new(cfg.format, sink);

    let result = pool.install(|| match &cli.command {
        Command::Enumerate { x_max } => commands::enumerate(&mut out, config::x_max(*x_max, &file)?),
        Command::Classify { x } => commands::classify_x(&mut out, *x, cfg.seed),
        Command::VerifyPaper {
            fixture,
            skip_bignum,
        } => commands::verify_paper(&mut out, fixture.as_deref(), *skip_bignum),
        Command::SearchThreats(args) => commands::search_threats(&mut out, args, &file, &stop),
        Command::Expand { sel } => commands::expand(&mut out, sel),
        Command::Catalog => commands::catalog_cmd(&mut out),
    });
    let flushed = out.flush();
    result?;
    match flushed {
        Err(phi3::Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}
