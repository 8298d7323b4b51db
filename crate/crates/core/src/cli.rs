//! Command-line surface. Every subcommand writes one JSON document to
//! standard output (the `grid` subcommand writes JSON lines, one per cell);
//! human-readable diagnostics go to standard error.
//!
//! Exit codes: `0` for any well-formed result (including negative answers),
//! `2` for usage errors, `3` when a search budget is exceeded, `4` when an
//! input file cannot be read or parsed.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::coloring::{parse_krt, write_krt, Coloring, ColoringKind};
use crate::homogeneity::{
    build_track_trie, extract_monochromatic, is_end_homogeneous, is_monochromatic, EndHomogeneity, Monochromatic,
};
use crate::pnumbers::{exact_p, theorem9_bound, verify_bound_grid, GridRow, SearchOptions, Variant, DEFAULT_BUDGET};
use crate::track::{build_track, hiker_map};
use crate::Error;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INPUT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "hiker", version, about = "Hiker's tracks, end-homogeneous witnesses and exact p(k,r,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Kind {
    Constant,
    Parity,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum VariantArg {
    Track,
    #[value(alias = "sequence")]
    Seq,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Track => Variant::Track,
            VariantArg::Seq => Variant::Sequence,
        }
    }
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, value_enum, default_value = "track")]
    variant: VariantArg,
    /// Maximum number of colorings enumerated per ground size.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    workers: Option<usize>,
    /// Report wall-clock time in `elapsed_ms` (otherwise null).
    #[arg(long)]
    timings: bool,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        let mut opts = SearchOptions { budget: self.budget, ..SearchOptions::default() };
        if let Some(w) = self.workers {
            opts.workers = w.max(1);
        }
        opts
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a coloring and write it as KRT.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        tuple: usize,
        #[arg(long)]
        colors: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "const", default_value_t = 0)]
        constant: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build the hiker's track and hiker's map for one destination.
    Track {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        dest: usize,
    },
    /// Extract a monochromatic set by arity reduction.
    Extract {
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Check a sequence for end-homogeneity or a set for monochromaticity.
    Check {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_delimiter = ',', conflicts_with = "set", required_unless_present = "set")]
        seq: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Build the prefix trie of all tracks.
    Trie {
        #[arg(long)]
        coloring: PathBuf,
        /// Include every trie node in the output.
        #[arg(long)]
        dump: bool,
    },
    /// Compute p(k, r, n) exactly.
    Pnum {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 'n')]
        n: u32,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Evaluate the counting bound on p(k, r, n).
    Bound {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 'n')]
        n: u32,
    },
    /// Compute p and the bound for a list of k:r:n cells, one JSON line each.
    Grid {
        #[arg(long, value_delimiter = ',', value_parser = parse_cell, required = true)]
        cells: Vec<(usize, usize, u32)>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

fn parse_cell(s: &str) -> std::result::Result<(usize, usize, u32), String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [k, r, n] = parts[..] else {
        return Err(format!("expected k:r:n, found {s:?}"));
    };
    let bad = |_| format!("bad number in cell {s:?}");
    Ok((k.parse().map_err(bad)?, r.parse().map_err(bad)?, n.parse().map_err(bad)?))
}

/// A failed command: exit code plus message.
struct Failure {
    code: i32,
    message: String,
    payload: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let (code, payload) = match &e {
            Error::BudgetExceeded { ground_size, required, budget, lower_bound } => (
                EXIT_BUDGET,
                json!({
                    "ground_size": ground_size,
                    "required": required.to_string(),
                    "budget": budget,
                    "lower_bound": lower_bound,
                }),
            ),
            Error::Krt(_) => (EXIT_INPUT, json!({})),
            _ => (EXIT_USAGE, json!({})),
        };
        Failure { code, message: e.to_string(), payload }
    }
}

fn load(path: &Path) -> Result<Coloring, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("cannot read {}: {e}", path.display()),
        payload: json!({}),
    })?;
    parse_krt(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
        payload: json!({}),
    })
}

fn envelope(command: &str, status: &str, payload: Value, diagnostics: &[String]) -> Value {
    json!({
        "version": SCHEMA_VERSION,
        "command": command,
        "status": status,
        "payload": payload,
        "diagnostics": diagnostics,
    })
}

enum Output {
    Document { status: &'static str, payload: Value },
    Lines { lines: Vec<Value>, code: i32 },
}

fn ok(payload: Value) -> Output {
    Output::Document { status: "ok", payload }
}

fn execute(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Gen { kind, size, tuple, colors, seed, constant, out } => {
            let coloring_kind = match kind {
                Kind::Constant => ColoringKind::Constant(*constant),
                Kind::Parity => ColoringKind::Parity,
                Kind::Random => ColoringKind::Random { seed: *seed },
            };
            let c = Coloring::generate(&coloring_kind, *size, *tuple, *colors)?;
            fs::write(out, write_krt(&c)).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("cannot write {}: {e}", out.display()),
                payload: json!({}),
            })?;
            Ok(ok(json!({
                "file": out.display().to_string(),
                "N": size,
                "t": tuple,
                "r": colors,
                "subsets": c.colors().len(),
            })))
        }
        Command::Track { coloring, dest } => {
            let c = load(coloring)?;
            let tr = build_track(&c, *dest)?;
            let map = hiker_map(&c, &tr)?;
            Ok(ok(json!({
                "destination": tr.destination(),
                "points": tr.points(),
                "delta": tr.delta(),
                "arity": tr.arity(),
                "map": { "delta": map.delta, "arity": map.arity, "entries": map.entries },
            })))
        }
        Command::Extract { coloring } => {
            let c = load(coloring)?;
            let w = extract_monochromatic(&c)?;
            let confirmed = !matches!(is_monochromatic(&c, &w.members)?, Monochromatic::NotMonochromatic);
            Ok(ok(json!({ "color": w.color, "members": w.members, "verified": confirmed })))
        }
        Command::Check { coloring, seq, set } => {
            let c = load(coloring)?;
            if let Some(points) = seq {
                return Ok(match is_end_homogeneous(&c, points)? {
                    EndHomogeneity::Homogeneous => Output::Document {
                        status: "ok",
                        payload: json!({ "mode": "sequence", "points": points, "end_homogeneous": true, "violation": null }),
                    },
                    EndHomogeneity::Violation { indices } => {
                        let at: Vec<usize> = indices.iter().map(|&i| points[i]).collect();
                        Output::Document {
                            status: "property-false",
                            payload: json!({
                                "mode": "sequence",
                                "points": points,
                                "end_homogeneous": false,
                                "violation": { "indices": indices, "points": at },
                            }),
                        }
                    }
                });
            }
            let members = set.as_deref().unwrap_or_default();
            let (status, payload) = match is_monochromatic(&c, members)? {
                Monochromatic::Color(color) => (
                    "ok",
                    json!({ "mode": "set", "members": members, "monochromatic": true, "vacuous": false, "color": color }),
                ),
                Monochromatic::Vacuous => (
                    "ok",
                    json!({ "mode": "set", "members": members, "monochromatic": true, "vacuous": true, "color": null }),
                ),
                Monochromatic::NotMonochromatic => (
                    "property-false",
                    json!({ "mode": "set", "members": members, "monochromatic": false, "vacuous": false, "color": null }),
                ),
            };
            Ok(Output::Document { status, payload })
        }
        Command::Trie { coloring, dump } => {
            let c = load(coloring)?;
            let trie = build_track_trie(&c);
            let mut payload = serde_json::to_value(trie.stats()).expect("stats serialize");
            if *dump {
                payload["roots"] = json!(trie.roots());
                payload["nodes"] = serde_json::to_value(trie.nodes()).expect("nodes serialize");
            }
            Ok(ok(payload))
        }
        Command::Pnum { k, r, n, search } => {
            let variant = search.variant.into();
            let outcome = exact_p(*k, *r, *n, variant, &search.options());
            if let Err(e) = outcome {
                return Err(e.into());
            }
            let row = GridRow { k: *k, r: *r, n: *n, variant, outcome };
            Ok(ok(row.to_json(search.timings)))
        }
        Command::Bound { k, r, n } => {
            let bound = theorem9_bound(*k, *r, *n)?;
            Ok(ok(json!({ "k": k, "r": r, "n": n, "bound": bound.to_string() })))
        }
        Command::Grid { cells, search } => {
            let rows = verify_bound_grid(cells, search.variant.into(), &search.options());
            let code = if rows.iter().any(|r| matches!(r.outcome, Err(Error::BudgetExceeded { .. }))) {
                EXIT_BUDGET
            } else {
                EXIT_OK
            };
            Ok(Output::Lines { lines: rows.iter().map(|r| r.to_json(search.timings)).collect(), code })
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Gen { .. } => "gen",
        Command::Track { .. } => "track",
        Command::Extract { .. } => "extract",
        Command::Check { .. } => "check",
        Command::Trie { .. } => "trie",
        Command::Pnum { .. } => "pnum",
        Command::Bound { .. } => "bound",
        Command::Grid { .. } => "grid",
    }
}

/// Runs one invocation; `args` excludes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("hiker")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok(Output::Document { status, payload }) => {
            let _ = writeln!(out, "{}", envelope(name, status, payload, &[]));
            EXIT_OK
        }
        Ok(Output::Lines { lines, code }) => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
            code
        }
        Err(failure) => {
            let _ = writeln!(err, "hiker {name}: {}", failure.message);
            let _ = writeln!(out, "{}", envelope(name, "error", failure.payload, &[failure.message]));
            failure.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn cell_parsing() {
        assert_eq!(parse_cell("3:1:2"), Ok((3, 1, 2)));
        assert!(parse_cell("3:1").is_err());
        assert!(parse_cell("3:x:2").is_err());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["pnum", "-k", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        let (code, out) = call(&["bound", "-k", "3", "-r", "0", "-n", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("\"status\":\"error\""));
    }

    #[test]
    fn bound_and_pnum() {
        let (code, out) = call(&["bound", "-k", "4", "-r", "2", "-n", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["payload"]["bound"], json!("77"));

        let (code, out) = call(&["pnum", "-k", "3", "-r", "1", "-n", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["payload"]["p"], json!(4));
        assert_eq!(v["payload"]["bound"], json!("8"));
        assert_eq!(v["payload"]["variant"], json!("track"));

        let (code, out) = call(&["pnum", "-k", "5", "-r", "1", "-n", "2", "--budget", "10", "--variant", "seq"]);
        assert_eq!(code, EXIT_BUDGET);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], json!("error"));
        assert!(v["payload"]["lower_bound"].is_number());
    }

    #[test]
    fn missing_file_is_input_error() {
        assert_eq!(call(&["track", "--coloring", "/nonexistent/x.krt", "--dest", "1"]).0, EXIT_INPUT);
    }
}
