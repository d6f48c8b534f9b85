//! Command-line front end: construct matrices by route, run searches, verify
//! files, render matrix images and produce the coverage report.
//!
//! Exit codes: 0 success, 1 construction/search found nothing,
//! 2 verification failure, 3 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use propus_core::catalog::{Catalog, CatalogEntry, EntryKind};
use propus_core::driver::{construct, ConstructError, Method};
use propus_core::matrix::SignMatrix;
use propus_core::render::write_pgm;
use propus_core::report::run_report;
use propus_core::search::{
    search_conference, search_doptimal, search_propus, search_turyn, SearchSpec,
    MAX_SEARCH_ORDER,
};

const EXIT_OK: u8 = 0;
const EXIT_NOTHING_FOUND: u8 = 1;
const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "propus",
    version,
    about = "Construct, search and verify symmetric propus-Hadamard matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a symmetric propus-Hadamard matrix of a given order.
    Construct {
        /// Hadamard order (a positive multiple of 4).
        #[arg(long)]
        order: usize,
        /// Route: auto, paley-turyn, conference, doptimal, three-equal or
        /// miyamoto. Auto tries the routes cheapest first.
        #[arg(long, default_value = "auto")]
        method: Method,
        /// Write output here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format: the full matrix as text, or a catalog line with
        /// the triple's first rows (circulant routes only).
        #[arg(long, default_value = "matrix", value_parser = ["matrix", "catalog"])]
        format: String,
        /// Extra catalog file merged over the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Search node budget for missing ingredients.
        #[arg(long, default_value_t = 1 << 22)]
        budget: u64,
    },
    /// Enumerate ingredients; emits catalog lines on standard output.
    Search {
        /// Ingredient kind: propus, turyn, conference or doptimal.
        #[arg(long, value_parser = ["propus", "turyn", "conference", "doptimal"])]
        kind: String,
        /// Circulant order of the first rows.
        #[arg(long)]
        n: usize,
        /// Stop after this many results.
        #[arg(long)]
        limit: Option<usize>,
        /// Node budget; exceeding it reports exhaustion, not emptiness.
        #[arg(long, default_value_t = 1 << 22)]
        budget: u64,
    },
    /// Check a catalog file or a matrix file and print a property report.
    Verify {
        #[arg(long)]
        file: PathBuf,
    },
    /// Render a matrix file as a plain-text PGM image
    /// (pixel mapping: -1 -> 0, 0 -> 1, +1 -> 2).
    Render {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Classify every odd n below a bound as constructed, catalog-dependent
    /// or unresolved, cross-checked against the reference order tables.
    Report {
        #[arg(long, default_value_t = 200)]
        max_n: u32,
        /// Extra catalog file merged over the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Per-search node budget.
        #[arg(long, default_value_t = 1 << 21)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Construct {
            order,
            method,
            out,
            format,
            catalog,
            budget,
        } => cmd_construct(order, method, out, &format, catalog, budget),
        Command::Search {
            kind,
            n,
            limit,
            budget,
        } => cmd_search(&kind, n, limit, budget),
        Command::Verify { file } => cmd_verify(&file),
        Command::Render { file, out } => cmd_render(&file, &out),
        Command::Report {
            max_n,
            catalog,
            budget,
        } => cmd_report(max_n, catalog, budget),
    }
}

/// Built-in catalog, optionally extended by a user file. Rejected lines are
/// reported on standard error but do not abort.
fn load_catalog(extra: Option<PathBuf>) -> Result<Catalog, ExitCode> {
    let base = Catalog::builtin().clone();
    let Some(path) = extra else {
        return Ok(base);
    };
    match Catalog::load_path(&path) {
        Ok(outcome) => {
            for (line, reason) in &outcome.rejected {
                eprintln!("{}:{line}: rejected: {reason}", path.display());
            }
            Ok(base.merged(&outcome.catalog))
        }
        Err(e) => {
            eprintln!("cannot read catalog {}: {e}", path.display());
            Err(ExitCode::from(EXIT_USAGE))
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), ExitCode> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("cannot write {}: {e}", path.display());
            ExitCode::from(EXIT_USAGE)
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_construct(
    order: usize,
    method: Method,
    out: Option<PathBuf>,
    format: &str,
    catalog: Option<PathBuf>,
    budget: u64,
) -> ExitCode {
    let catalog = match load_catalog(catalog) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let outcome = match construct(order, method, &catalog, budget) {
        Ok(o) => o,
        Err(e @ ConstructError::BadOrder(_)) => {
            eprintln!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(EXIT_NOTHING_FOUND);
        }
    };
    let props = outcome.matrix.check_properties();
    eprintln!(
        "constructed order {} via {} ({props})",
        outcome.matrix.order(),
        outcome.method
    );
    let text = match format {
        "matrix" => outcome.matrix.to_text(),
        "catalog" => match outcome.triple_rows {
            Some(rows) => {
                let entry = CatalogEntry {
                    kind: EntryKind::Propus,
                    n: order / 4,
                    rows: rows.to_vec(),
                    provenance: format!("constructed via {}", outcome.method),
                };
                format!("{}\n", entry.to_line())
            }
            None => {
                eprintln!(
                    "the {} route does not go through a circulant triple; use --format matrix",
                    outcome.method
                );
                return ExitCode::from(EXIT_USAGE);
            }
        },
        _ => unreachable!("clap restricts the values"),
    };
    match emit(&text, out.as_deref()) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(code) => code,
    }
}

fn cmd_search(kind: &str, n: usize, limit: Option<usize>, budget: u64) -> ExitCode {
    if n == 0 || n > MAX_SEARCH_ORDER {
        eprintln!("search order must be in 1..={MAX_SEARCH_ORDER}");
        return ExitCode::from(EXIT_USAGE);
    }
    let with = |spec: SearchSpec| {
        let spec = spec.with_budget(budget);
        match limit {
            Some(k) if k >= 1 => spec.with_limit(k),
            Some(_) => spec,
            None => spec,
        }
    };
    let (lines, complete): (Vec<String>, bool) = match kind {
        "propus" => {
            let o = search_propus(&with(SearchSpec::propus(n)));
            let lines = o
                .items
                .iter()
                .map(|t| {
                    let rows = [
                        t.a().circulant_first_row().expect("search output is circulant"),
                        t.b().circulant_first_row().expect("search output is circulant"),
                        t.d().circulant_first_row().expect("search output is circulant"),
                    ];
                    CatalogEntry {
                        kind: EntryKind::Propus,
                        n,
                        rows: rows.to_vec(),
                        provenance: "search".into(),
                    }
                    .to_line()
                })
                .collect();
            (lines, o.complete)
        }
        "turyn" => {
            let o = search_turyn(&with(SearchSpec::turyn(n)));
            let lines = o
                .items
                .iter()
                .map(|p| {
                    CatalogEntry {
                        kind: EntryKind::Turyn,
                        n,
                        rows: vec![p.x_row().clone(), p.y_row().clone()],
                        provenance: "search".into(),
                    }
                    .to_line()
                })
                .collect();
            (lines, o.complete)
        }
        "conference" => {
            let o = search_conference(&with(SearchSpec::conference(n)));
            let lines = o
                .items
                .iter()
                .map(|p| {
                    CatalogEntry {
                        kind: EntryKind::Conference,
                        n,
                        rows: vec![p.a_row().clone(), p.b_row().clone()],
                        provenance: "search".into(),
                    }
                    .to_line()
                })
                .collect();
            (lines, o.complete)
        }
        "doptimal" => {
            let o = search_doptimal(&with(SearchSpec::doptimal(n)));
            let lines = o
                .items
                .iter()
                .map(|p| {
                    CatalogEntry {
                        kind: EntryKind::DOptimal,
                        n,
                        rows: vec![p.x_row().clone(), p.y_row().clone()],
                        provenance: "search".into(),
                    }
                    .to_line()
                })
                .collect();
            (lines, o.complete)
        }
        _ => unreachable!("clap restricts the values"),
    };
    for line in &lines {
        println!("{line}");
    }
    if lines.is_empty() {
        if complete {
            eprintln!("search space exhausted: no {kind} ingredient of order {n} exists");
        } else {
            eprintln!("search budget exhausted before covering the space; raise --budget");
        }
        return ExitCode::from(EXIT_NOTHING_FOUND);
    }
    ExitCode::from(EXIT_OK)
}

fn cmd_verify(file: &Path) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", file.display());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let first_meaningful = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    if first_meaningful.is_some_and(|l| l.starts_with("matrix")) {
        match SignMatrix::from_text(&text) {
            Ok(m) => {
                let props = m.check_properties();
                println!("{props}");
                if props.is_hadamard {
                    ExitCode::from(EXIT_OK)
                } else {
                    eprintln!("matrix is not Hadamard");
                    ExitCode::from(EXIT_VERIFY_FAILED)
                }
            }
            Err(e) => {
                eprintln!("malformed matrix file: {e}");
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
    } else {
        let outcome = Catalog::parse_str(&text);
        for entry in outcome.catalog.entries() {
            println!("verified: {}", entry.to_line());
        }
        for (line, reason) in &outcome.rejected {
            eprintln!("{}:{line}: rejected: {reason}", file.display());
        }
        if outcome.rejected.is_empty() {
            ExitCode::from(EXIT_OK)
        } else {
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
    }
}

fn cmd_render(file: &Path, out: &Path) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {e}", file.display());
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let matrix = match SignMatrix::from_text(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("render expects a matrix file: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match write_pgm(&matrix, out) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(e) => {
            eprintln!("cannot write {}: {e}", out.display());
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn cmd_report(max_n: u32, catalog: Option<PathBuf>, budget: u64) -> ExitCode {
    let catalog = match load_catalog(catalog) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let report = run_report(max_n, &catalog, budget);
    print!("{}", report.render_text());
    for n in &report.conflicts {
        eprintln!(
            "!! CONFLICT: n={n} constructed here but listed unresolved in the reference tables"
        );
    }
    ExitCode::from(EXIT_OK)
}
