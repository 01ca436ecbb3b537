//! Command-line front end for `transpoly-core`: reports on family instances
//! and presentation files, grid verification, and conjecture sweeps.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 for usage
//! and input errors.

pub mod checks;
pub mod commands;
pub mod input;
pub mod num;
pub mod random;
pub mod report;
pub mod text;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use transpoly_core::FamilyParams;

use commands::{ReportOptions, SweepOptions, Target, UsageError, VerifyOptions};
use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "transpoly",
    version,
    about = "Cones, canonical modules and Hilbert series of transversal polymatroid base rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form invariants of a family instance, or brute-force ones of a presentation file.
    Report(ReportArgs),
    /// Compare every closed form with its oracle over a parameter grid.
    Verify(VerifyArgs),
    /// Check the conjectured type formula over the family grid and random presentations.
    Sweep(SweepArgs),
    /// Facet normals, extremal rays and the determinant certificate of a family instance.
    Rays(RaysArgs),
    /// Minimal generators of the canonical module.
    Canonical(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// List every canonical generator even when there are more than 1000.
    #[arg(long)]
    pub full: bool,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
}

impl FamilyArgs {
    fn params(&self) -> Result<FamilyParams, UsageError> {
        match (self.n, self.i, self.j) {
            (Some(n), Some(i), Some(j)) => Ok(FamilyParams::new(n, i, j)?),
            _ => Err(UsageError("--n, --i and --j are all required".into())),
        }
    }

    fn any(&self) -> bool {
        self.n.is_some() || self.i.is_some() || self.j.is_some()
    }
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Presentation file: n on the first line, then one line of elements per set.
    #[arg(long, conflicts_with_all = ["n", "i", "j"])]
    pub presentation: Option<PathBuf>,
    /// Run the oracles for this instance as well.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = 3)]
    pub max_t: u32,
    /// Highest degree searched for canonical generators of a presentation.
    #[arg(long)]
    pub degree_cap: Option<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl ReportArgs {
    fn target(&self) -> Result<Target, UsageError> {
        match &self.presentation {
            Some(path) => Ok(Target::Presentation(input::read_presentation(path).map_err(UsageError)?)),
            None if self.family.any() => Ok(Target::Family(self.family.params()?)),
            None => Err(UsageError("give --n --i --j or --presentation <file>".into())),
        }
    }

    fn options(&self) -> ReportOptions {
        ReportOptions { verify: self.verify, max_t: self.max_t, degree_cap: self.degree_cap, full: self.output.full }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_t: u32,
    /// Run only this check: base, exchange, cone, rays, det, type, a-invariant or hilbert.
    #[arg(long)]
    pub only: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    /// Number of random presentations, with n cycling through 4..=min(max-n, 5).
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Also check family instances with n <= 6 by brute force.
    #[arg(long)]
    pub brute_force: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RaysArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => text::render(report),
        Format::Json => report.to_json(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                RunOutput { code, stdout: rendered, stderr: String::new() }
            } else {
                RunOutput { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let (result, format, check_exit) = match &cli.command {
        Command::Report(a) => (a.target().and_then(|t| commands::report(&t, &a.options())), a.output.format, true),
        Command::Canonical(a) => {
            (a.target().and_then(|t| commands::canonical(&t, &a.options())), a.output.format, true)
        }
        Command::Verify(a) => (
            commands::verify(&VerifyOptions { max_n: a.max_n, max_t: a.max_t, only: a.only.clone() }),
            a.output.format,
            true,
        ),
        // counterexamples are findings, not failures
        Command::Sweep(a) => (
            commands::sweep(&SweepOptions {
                max_n: a.max_n,
                random: a.random,
                seed: a.seed,
                brute_force: a.brute_force,
            }),
            a.output.format,
            false,
        ),
        Command::Rays(a) => (a.family.params().and_then(|p| commands::rays(&p)), a.output.format, true),
    };
    match result {
        Err(UsageError(msg)) => {
            RunOutput { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
        Ok(report) => {
            let stdout = render(&report, format);
            match report.first_failure() {
                Some(first) if check_exit => RunOutput {
                    code: EXIT_CHECK_FAILED,
                    stdout,
                    stderr: format!("verification failed: {}: {}\n", first.name, first.detail),
                },
                _ => RunOutput { code: EXIT_OK, stdout, stderr: String::new() },
            }
        }
    }
}
