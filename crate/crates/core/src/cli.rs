//! Command-line front end. Exit codes: 0 success, 2 usage or input error,
//! 3 overflow or resource limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adjunction::{self, RuledTarget};
use crate::error::{CensusError, Result};
use crate::exec::{self, Strategy};
use crate::obstruction::{Profile, ProfileKind};
use crate::report::{self, CensusReport};
use crate::twist_words::{self, WordLine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "CENSUS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "hlf-census",
    version,
    about = "Singular-fiber census for hyperelliptic Lefschetz fibrations over the sphere"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate admissible vectors and evaluate every one.
    Census(CensusArgs),
    /// Decide the fiber-class equations on a blown-up ruled surface.
    Adjunction(AdjunctionArgs),
    /// Abelianization images of twist words.
    Word(WordArgs),
    /// Lower and known upper bounds over a genus range.
    Bounds(BoundsArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SimpleFormat {
    Table,
    Json,
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[arg(long)]
    genus: i64,
    /// Strict bound on n + s [default: 2g+4 for even g, 2g+6 for odd g]
    #[arg(long)]
    budget: Option<i64>,
    #[arg(long, default_value = "general")]
    profile: ProfileKind,
    /// Rule overrides, e.g. `+R8,-R11.li_2_5`
    #[arg(long, allow_hyphen_values = true)]
    rules: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// TOML profile; replaces --profile
    #[arg(long)]
    profile_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AdjunctionArgs {
    #[arg(long)]
    base_genus: i64,
    #[arg(long)]
    blowups: i64,
    #[arg(long)]
    fiber_genus: i64,
    #[arg(long, value_enum, default_value_t = SimpleFormat::Table)]
    format: SimpleFormat,
}

#[derive(Debug, Args)]
struct WordArgs {
    #[arg(long)]
    genus: i64,
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "file",
        conflicts_with = "file"
    )]
    word: Option<String>,
    /// One word per line; `#` lines are comments
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = SimpleFormat::Table)]
    format: SimpleFormat,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    /// Inclusive range `lo..hi`
    #[arg(long, value_parser = parse_range)]
    genus_range: (i64, i64),
    #[arg(long, default_value = "general")]
    profile: ProfileKind,
    #[arg(long, value_enum, default_value_t = SimpleFormat::Table)]
    format: SimpleFormat,
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad bound {x:?} in {s:?}: {e}"))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo < 2 {
        return Err(format!("genus range must start at 2 or more, got {lo}"));
    }
    if hi < lo {
        return Err(format!("empty genus range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// What a command produced: text for standard output, or for a file.
struct Output {
    text: String,
    path: Option<PathBuf>,
}

fn thread_cap() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CensusError::Config(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CensusError::Config(format!("cannot read {}: {e}", path.display())))
}

fn census(a: &CensusArgs) -> Result<Output> {
    let mut profile = match &a.profile_file {
        Some(p) => Profile::from_toml(&read(p)?)?,
        None => Profile::builtin(a.profile),
    };
    if let Some(r) = &a.rules {
        profile.apply_overrides(r)?;
    }
    let budget = a.budget.unwrap_or_else(|| report::default_budget(a.genus));
    let r = CensusReport::run(a.genus, budget, &profile, Strategy::default())?;
    let text = match a.format {
        Format::Table => r.to_table(),
        Format::Json => r.to_json()?,
        Format::Csv => r.to_csv()?,
    };
    Ok(Output {
        text,
        path: a.out.clone(),
    })
}

fn adjunction(a: &AdjunctionArgs) -> Result<Output> {
    let target = RuledTarget::new(a.base_genus, a.blowups, a.fiber_genus)?;
    let v = adjunction::decide(&target)?;
    let text = match a.format {
        SimpleFormat::Table => report::adjunction_table(&v),
        SimpleFormat::Json => report::adjunction_json(&v)?,
    };
    Ok(Output { text, path: None })
}

fn word(a: &WordArgs) -> Result<Output> {
    let (lines, from_file) = match (&a.word, &a.file) {
        (Some(w), _) => (
            vec![WordLine {
                line: 1,
                word: twist_words::parse(a.genus, w)?,
            }],
            false,
        ),
        (None, Some(p)) => (twist_words::parse_word_file(a.genus, &read(p)?)?, true),
        (None, None) => {
            return Err(CensusError::InvalidQuery(
                "one of --word or --file is required".into(),
            ))
        }
    };
    let reports = report::word_reports(a.genus, &lines, from_file)?;
    let text = match a.format {
        SimpleFormat::Table => report::word_table(a.genus, &reports),
        SimpleFormat::Json => report::word_json(&reports)?,
    };
    Ok(Output { text, path: None })
}

fn bounds(a: &BoundsArgs) -> Result<Output> {
    let profile = Profile::builtin(a.profile);
    let (lo, hi) = a.genus_range;
    let reports = (lo..=hi)
        .map(|g| report::bounds_report(g, &profile, Strategy::default()))
        .collect::<Result<Vec<_>>>()?;
    let text = match a.format {
        SimpleFormat::Table => report::bounds_table(&reports),
        SimpleFormat::Json => {
            let mut s = serde_json::to_string_pretty(&reports)
                .map_err(|e| CensusError::Resource(format!("json encoding: {e}")))?;
            s.push('\n');
            s
        }
    };
    Ok(Output { text, path: None })
}

fn exit_code(e: &CensusError) -> i32 {
    if e.is_resource() {
        EXIT_RESOURCE
    } else {
        EXIT_USAGE
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let result = thread_cap().and_then(|cap| {
        exec::with_thread_cap(cap, || match &cli.command {
            Command::Census(a) => census(a),
            Command::Adjunction(a) => adjunction(a),
            Command::Word(a) => word(a),
            Command::Bounds(a) => bounds(a),
        })
    });
    match result {
        Ok(Output { text, path: None }) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                EXIT_RESOURCE
            }
        },
        Ok(Output {
            text,
            path: Some(path),
        }) => match std::fs::write(&path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                EXIT_RESOURCE
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
