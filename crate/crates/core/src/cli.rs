//! Command-line front end.
//!
//! Exit codes: 0 affirmative, 1 negative, 2 usage or input error. Reports go
//! to standard output (or `--output`) as JSON with sorted keys; one-line
//! summaries and diagnostics go to standard error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::enumerator::{dovetail_union, run_budgeted, EnumProgram, ProgramError};
use crate::listing::{parse_listing, Listing, ListingError};
use crate::tobst::Tobst;
use crate::uniformity::{classify_corpus, type2_search, uniform_prefix, UniformityError};

pub const EXIT_AFFIRMATIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "enumorder",
    version,
    about = "Enumeration-order analysis of listings"
)]
pub struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[arg(long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare two listings for uniformity (or type-2 uniformity).
    Uniform(UniformArgs),
    /// Build the output BST of a listing.
    Tobst(TobstArgs),
    /// Group the listings in a directory by the order pattern of a prefix.
    Classify(ClassifyArgs),
    /// Run a register-machine program and write the listing it emits.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
pub struct UniformArgs {
    pub file_a: PathBuf,
    pub file_b: PathBuf,
    /// Search for prefix shifts that make the listings uniform.
    #[arg(long)]
    pub type2: bool,
    /// Largest shift tried on the first listing (default: its length).
    #[arg(long, requires = "type2")]
    pub max_m: Option<usize>,
    /// Largest shift tried on the second listing (default: its length).
    #[arg(long, requires = "type2")]
    pub max_n: Option<usize>,
    /// Minimum number of positions the shifted listings must share.
    #[arg(long, requires = "type2")]
    pub min_overlap: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Dot,
    Shape,
    Report,
}

#[derive(Debug, Args)]
pub struct TobstArgs {
    pub file: PathBuf,
    /// Snapshot after this many insertions (default: all).
    #[arg(long)]
    pub step: Option<usize>,
    #[arg(long, value_enum, default_value_t = Emit::Report)]
    pub emit: Emit,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub dir: PathBuf,
    #[arg(long)]
    pub prefix_len: usize,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub program: PathBuf,
    /// Step budget.
    #[arg(long)]
    pub steps: u64,
    /// Maximum number of values to emit.
    #[arg(long)]
    pub cap: usize,
    /// Further programs to interleave with the first.
    #[arg(long, num_args = 1.., value_name = "FILE")]
    pub dovetail: Vec<PathBuf>,
    /// Steps each program runs per round-robin turn.
    #[arg(long, default_value_t = 1)]
    pub slice: u64,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Listing { path: PathBuf, source: ListingError },
    #[error("{}: {source}", path.display())]
    Program { path: PathBuf, source: ProgramError },
    #[error(transparent)]
    Dovetail(#[from] ProgramError),
    #[error("{0}")]
    Uniformity(#[from] UniformityError),
    #[error("{0}")]
    Usage(String),
}

/// What a subcommand produced before it is written out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub body: String,
    pub summary: Option<String>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn file_label(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn load_listing(path: &Path) -> Result<Listing, CliError> {
    let text = read(path)?;
    parse_listing(&text)
        .map(|l| l.with_name(file_label(path)))
        .map_err(|source| CliError::Listing {
            path: path.to_path_buf(),
            source,
        })
}

pub fn load_program(path: &Path) -> Result<EnumProgram, CliError> {
    let text = read(path)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    EnumProgram::parse(name, &text).map_err(|source| CliError::Program {
        path: path.to_path_buf(),
        source,
    })
}

/// Pretty JSON with keys sorted and a trailing newline.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("report types serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("json values serialize");
    text.push('\n');
    text
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Type2Flags {
    pub max_m: Option<usize>,
    pub max_n: Option<usize>,
    pub min_overlap: usize,
}

pub fn cmd_uniform(
    file_a: &Path,
    file_b: &Path,
    type2: Option<Type2Flags>,
) -> Result<CommandOutput, CliError> {
    let h = load_listing(file_a)?;
    let g = load_listing(file_b)?;
    let verdict = uniform_prefix(&h, &g);
    let mut summary = format!(
        "{:?} over {} position(s)",
        verdict.kind, verdict.compared_length
    );
    if let Some((i, j)) = verdict.witness {
        summary.push_str(&format!("; first discordant pair ({i}, {j})"));
    }
    let (report, affirmative) = match type2 {
        None => (json!({ "verdict": verdict }), verdict.is_uniform()),
        Some(flags) => {
            let witness = type2_search(
                &h,
                &g,
                flags.max_m.unwrap_or(h.len()),
                flags.max_n.unwrap_or(g.len()),
                flags.min_overlap,
            );
            match witness {
                Some(w) => summary.push_str(&format!(
                    "; type-2 uniform with shifts m={}, n={} over {} position(s)",
                    w.m, w.n, w.overlap
                )),
                None => summary.push_str("; no type-2 witness in the searched range"),
            }
            (
                json!({ "verdict": verdict, "type2": witness }),
                witness.is_some(),
            )
        }
    };
    Ok(CommandOutput {
        exit_code: if affirmative {
            EXIT_AFFIRMATIVE
        } else {
            EXIT_NEGATIVE
        },
        body: to_sorted_json(&report),
        summary: Some(summary),
    })
}

pub fn cmd_tobst(file: &Path, step: Option<usize>, emit: Emit) -> Result<CommandOutput, CliError> {
    let listing = load_listing(file)?;
    let step = step.unwrap_or(listing.len());
    if step > listing.len() {
        return Err(CliError::Usage(format!(
            "{}: step {step} exceeds listing length {}",
            file.display(),
            listing.len()
        )));
    }
    let tree = Tobst::from_listing(&listing.prefix(step));
    let summary = format!(
        "{} node(s), height {}, {}",
        tree.len(),
        tree.height(),
        tree.spine_kind().as_str()
    );
    let body = match emit {
        Emit::Dot => tree.to_dot(),
        Emit::Shape => format!("{}\n", tree.shape()),
        Emit::Report => to_sorted_json(&json!({
            "step": step,
            "size": tree.len(),
            "height": tree.height(),
            "spine_kind": tree.spine_kind(),
            "shape": tree.shape(),
        })),
    };
    Ok(CommandOutput {
        exit_code: EXIT_AFFIRMATIVE,
        body,
        summary: Some(summary),
    })
}

/// Regular, non-hidden files in `dir`, sorted by name.
fn listing_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io_err = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err)? {
        let entry = entry.map_err(io_err)?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if !hidden && entry.file_type().map_err(io_err)?.is_file() {
            files.push(entry.path());
        }
    }
    files.sort();
    Ok(files)
}

pub fn cmd_classify(dir: &Path, prefix_len: usize) -> Result<CommandOutput, CliError> {
    let files = listing_files(dir)?;
    if files.is_empty() {
        return Err(CliError::Usage(format!(
            "{}: no listing files found",
            dir.display()
        )));
    }
    let listings = files
        .iter()
        .map(|p| load_listing(p))
        .collect::<Result<Vec<_>, _>>()?;
    let groups = classify_corpus(&listings, prefix_len)?;
    let summary = format!(
        "{} listing(s) in {} uniformity group(s) at prefix {prefix_len}",
        listings.len(),
        groups.len()
    );
    Ok(CommandOutput {
        exit_code: EXIT_AFFIRMATIVE,
        body: to_sorted_json(&groups),
        summary: Some(summary),
    })
}

/// Returns the listing text as the body; the run record goes in `summary`
/// as JSON so `--verbose` can print it.
pub fn cmd_enumerate(
    program: &Path,
    step_budget: u64,
    output_cap: usize,
    dovetail: &[PathBuf],
    slice: u64,
) -> Result<CommandOutput, CliError> {
    let first = load_program(program)?;
    let run = if dovetail.is_empty() {
        run_budgeted(&first, step_budget, output_cap)
    } else {
        let mut programs = vec![first];
        for path in dovetail {
            programs.push(load_program(path)?);
        }
        dovetail_union(&programs, slice, step_budget, output_cap)?
    };
    Ok(CommandOutput {
        exit_code: EXIT_AFFIRMATIVE,
        body: run.listing.to_text(),
        summary: Some(run.to_json()),
    })
}

fn dispatch(cli: &Cli) -> Result<CommandOutput, CliError> {
    match &cli.command {
        Command::Uniform(a) => {
            let flags = if a.type2 {
                let min_overlap = a
                    .min_overlap
                    .ok_or_else(|| CliError::Usage("--type2 requires --min-overlap".to_string()))?;
                Some(Type2Flags {
                    max_m: a.max_m,
                    max_n: a.max_n,
                    min_overlap,
                })
            } else {
                None
            };
            cmd_uniform(&a.file_a, &a.file_b, flags)
        }
        Command::Tobst(a) => cmd_tobst(&a.file, a.step, a.emit),
        Command::Classify(a) => cmd_classify(&a.dir, a.prefix_len),
        Command::Enumerate(a) => cmd_enumerate(&a.program, a.steps, a.cap, &a.dovetail, a.slice),
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_INPUT_ERROR
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_AFFIRMATIVE
            };
            return code;
        }
    };
    let output = match dispatch(&cli) {
        Ok(output) => output,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INPUT_ERROR;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &output.body).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => stdout
            .write_all(output.body.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_INPUT_ERROR;
    }
    if let Some(summary) = output.summary {
        let is_enumerate = matches!(cli.command, Command::Enumerate(_));
        if cli.verbose || !is_enumerate {
            let _ = writeln!(stderr, "{summary}");
        }
    }
    output.exit_code
}
