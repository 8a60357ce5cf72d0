mod args;
mod commands;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use abstractdd::algebra::Builtin;
use clap::Parser;

use args::{Cli, Command};
use commands::{abstraction, classify, enumerate, search};
use input::load_magma;
use report::{CliError, Report};

/// Runs `$body` with `$m` bound to the concrete magma of a catalog entry.
macro_rules! with_magma {
    ($b:expr, $m:ident => $body:expr) => {
        match $b {
            Builtin::Finite($m) => $body,
            Builtin::Int($m) => $body,
            Builtin::Real($m) => $body,
            Builtin::Pair($m) => $body,
        }
    };
}

fn run(cli: &Cli, r: &mut Report) -> Result<(), CliError> {
    match &cli.command {
        Command::Classify {
            magma,
            sample,
            seed,
        } => {
            let loaded = load_magma(magma)?;
            r.kv("MAGMA", loaded.magma.name());
            r.kv("INPUT", &loaded.origin);
            r.kv("MAGMA_SHA256", &loaded.digest);
            match &loaded.magma {
                Builtin::Finite(m) => {
                    classify::finite(m, r);
                    Ok(())
                }
                Builtin::Int(m) => classify::sampled(m, *sample, *seed, r),
                Builtin::Real(m) => classify::sampled(m, *sample, *seed, r),
                Builtin::Pair(m) => classify::sampled(m, *sample, *seed, r),
            }
        }
        Command::Abstract {
            magma,
            function,
            vars,
            order,
            policy,
        } => {
            let loaded = load_magma(magma)?;
            r.kv("MAGMA", loaded.magma.name());
            r.kv("INPUT", &loaded.origin);
            r.kv("MAGMA_SHA256", &loaded.digest);
            with_magma!(loaded.magma, m => abstraction::run(m, function, vars, *order, *policy, r))
        }
        Command::Search { magma, n } => {
            let loaded = load_magma(magma)?;
            r.kv("MAGMA", loaded.magma.name());
            r.kv("INPUT", &loaded.origin);
            r.kv("MAGMA_SHA256", &loaded.digest);
            match &loaded.magma {
                Builtin::Finite(m) => search::finite(m, *n, r),
                Builtin::Int(m) => search::declared(m, *n, r),
                Builtin::Real(m) => search::declared(m, *n, r),
                Builtin::Pair(m) => search::declared(m, *n, r),
            }
        }
        Command::Enumerate {
            size,
            filter,
            examples,
            sample,
            seed,
        } => enumerate::run(*size, filter, *examples, *sample, *seed, r),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cli = Cli::parse();
    let echo = std::iter::once("abstractdd".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    let mut report = Report::new(&echo);
    let outcome = run(&cli, &mut report);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(report.text().as_bytes());
    let _ = stdout.flush();
    // timing goes to stderr so that stdout stays byte-identical across runs
    eprintln!("elapsed: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(msg) = e.message() {
                eprintln!("error: {msg}");
            }
            e.exit_code()
        }
    }
}
