//! `reflekt`: exact verification workbench for the complex reflection
//! groups G(r,p,n). `verify` runs check suites over a grid of keys; the
//! other subcommands inspect one key at a time.

mod cache;
mod commands;
mod grid;
mod report;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Parser, Subcommand};
use reflekt_core::Budget;

use crate::cache::Cache;
use crate::report::{Config, Report};
use crate::suite::Suite;

#[derive(Parser)]
#[command(name = "reflekt", version, about = "Exact arithmetic for the reflection groups G(r,p,n)")]
struct Cli {
    /// Directory for enumerated-group cache files (falls back to the
    /// REFLEKT_CACHE environment variable; unset means no caching).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Bound on enumerated elements and on search combinations.
    #[arg(long, global = true, default_value_t = 1_000_000, value_name = "N")]
    budget: u64,

    /// Write a machine-readable JSON document to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites over a grid of group keys.
    Verify {
        /// Grid bounds in the form "r<=R,p|r,n<=N".
        #[arg(long, value_name = "SPEC", conflicts_with = "keys")]
        grid: Option<String>,

        /// Comma-separated suites to run: group, chars, involutions,
        /// gelfand, gim, aut, classify (default: all).
        #[arg(long = "check", value_name = "NAMES", value_delimiter = ',')]
        checks: Vec<String>,

        /// Explicit keys "r,p,n" instead of a grid.
        #[arg(value_name = "KEY")]
        keys: Vec<String>,
    },

    /// Irreducible character degrees, with exact value tables for p = 1.
    Chars {
        /// Group key "r,p,n".
        key: String,
        /// Include the character value table (needs p = 1).
        #[arg(long)]
        values: bool,
    },

    /// The generalized involution model for one key, when it exists.
    Gim {
        /// Group key "r,p,n".
        key: String,
    },

    /// Gelfand-model verdicts for the signed actions on symmetric elements.
    Gelfand {
        /// Group key "r,p,n".
        key: String,
        /// Which variant's class functions to emit: plain, restricted,
        /// or twisted (default: the variant predicted to succeed).
        #[arg(long, value_name = "NAME")]
        variant: Option<String>,
    },

    /// Automorphism group orders, by formula and by enumeration.
    Aut {
        /// Group key "r,p,n".
        key: String,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`reflekt ... | head`) instead of
    // panicking mid-print; Rust ignores SIGPIPE by default.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("usage error: {msg}");
    2
}

fn run(cli: Cli) -> Result<u8> {
    let cache = Cache::resolve(cli.cache_dir.clone());
    let budget = Budget { max_elements: cli.budget, max_search: cli.budget };
    let json = cli.json.as_deref();
    match cli.command {
        Command::Verify { grid, checks, keys } => {
            verify(grid, checks, keys, &cache, &budget, json)
        }
        Command::Chars { key, values } => {
            let key = match grid::parse_key(&key) {
                Ok(k) => k,
                Err(e) => return Ok(usage(e)),
            };
            Ok(commands::chars_cmd(key, values, &cache, &budget, json)? as u8)
        }
        Command::Gim { key } => {
            let key = match grid::parse_key(&key) {
                Ok(k) => k,
                Err(e) => return Ok(usage(e)),
            };
            Ok(commands::gim_cmd(key, &cache, &budget, json)? as u8)
        }
        Command::Gelfand { key, variant } => {
            let key = match grid::parse_key(&key) {
                Ok(k) => k,
                Err(e) => return Ok(usage(e)),
            };
            Ok(commands::gelfand_cmd(key, variant.as_deref(), &cache, &budget, json)? as u8)
        }
        Command::Aut { key } => {
            let key = match grid::parse_key(&key) {
                Ok(k) => k,
                Err(e) => return Ok(usage(e)),
            };
            Ok(commands::aut_cmd(key, &cache, &budget, json)? as u8)
        }
    }
}

fn verify(
    grid_spec: Option<String>,
    checks: Vec<String>,
    keys: Vec<String>,
    cache: &Cache,
    budget: &Budget,
    json: Option<&std::path::Path>,
) -> Result<u8> {
    let mut grid_keys = if !keys.is_empty() {
        let mut v = Vec::with_capacity(keys.len());
        for k in &keys {
            match grid::parse_key(k) {
                Ok(key) => v.push(key),
                Err(e) => return Ok(usage(e)),
            }
        }
        v
    } else if let Some(spec) = &grid_spec {
        match grid::parse_grid(spec) {
            Ok(v) => v,
            Err(e) => return Ok(usage(e)),
        }
    } else {
        grid::default_grid()
    };
    grid_keys.sort();
    grid_keys.dedup();

    let suites: Vec<Suite> = if checks.is_empty() {
        Suite::all().to_vec()
    } else {
        let mut requested = Vec::new();
        for name in &checks {
            match Suite::parse(name.trim()) {
                Some(s) => requested.push(s),
                None => return Ok(usage(format!("unknown check suite {name:?}"))),
            }
        }
        // Canonical order regardless of how they were asked for.
        Suite::all().into_iter().filter(|s| requested.contains(s)).collect()
    };

    let started = Instant::now();
    let checks_run = suite::run_verify(&grid_keys, &suites, cache, budget);
    let config = Config {
        grid: grid_keys.iter().map(|&k| grid::key_label(k)).collect(),
        suites: suites.iter().map(|s| s.name().to_string()).collect(),
        budget: budget.max_elements,
    };
    let report = Report::new(config, checks_run);
    print!("{}", report.human());
    println!("completed in {} ms", started.elapsed().as_millis());
    if let Some(path) = json {
        report.write_json(path)?;
        println!("wrote {}", path.display());
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}
