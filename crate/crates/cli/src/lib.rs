//! The `hcf` command line: algebra dumps, `HH^*` and `Δ` tables, brackets,
//! `E_2` pages, collapse certificates and series verification.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hcf_core::ManifoldSpec;

pub use report::Report;

/// JSON documents carry this version in their `schema` field.
pub const SCHEMA_VERSION: u32 = 1;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const MISMATCH: u8 = 1;
    pub const USAGE: u8 = 2;
}

#[derive(Parser, Debug)]
#[command(name = "hcf", version, about = "Hochschild and Connes computations for spheres and projective spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// One of S<k> (k >= 2), RP<n> (n >= 2), CP<n>, HP<n> (n >= 1).
    #[arg(long)]
    pub manifold: ManifoldSpec,
}

/// Inclusive integer range written `LO:HI`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: i32,
    pub hi: i32,
}

impl std::str::FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got {s:?}"))?;
        let parse = |v: &str| v.trim().parse::<i32>().map_err(|e| format!("{v:?}: {e}"));
        let r = Range { lo: parse(lo)?, hi: parse(hi)? };
        if r.lo > r.hi {
            return Err(format!("empty range {s}"));
        }
        Ok(r)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Basis, products and pairing of H^*(M; F2) with the Frobenius checks.
    Algebra(AlgebraArgs),
    /// HH^* dimensions from bar cochains against the monomial counts.
    Hh(HhArgs),
    /// Δ on labelled classes: brute force next to the closed form.
    Delta(HhArgs),
    /// Brackets of generators: brute force next to the table.
    Bracket(AlgebraArgs),
    /// The E2 page and the classification of monomials.
    E2(E2Args),
    /// Degree certificate for collapse at E2.
    Certify(CertifyArgs),
    /// Compares the closed-form Poincaré series with the series of E2.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub target: Target,
}

#[derive(Args, Debug)]
pub struct HhArgs {
    #[command(flatten)]
    pub target: Target,
    /// Largest Hochschild degree.
    #[arg(long, default_value_t = 4)]
    pub hdeg_max: usize,
}

#[derive(Args, Debug)]
pub struct E2Args {
    #[command(flatten)]
    pub target: Target,
    /// Regraded degree window `q` as `LO:HI`.
    #[arg(long, default_value = "-4:10", allow_hyphen_values = true)]
    pub window: Range,
    /// Largest column `p`.
    #[arg(long, default_value_t = 6)]
    pub col_cap: usize,
    /// Largest Hochschild degree in the classification listing.
    #[arg(long, default_value_t = 4)]
    pub hdeg_max: usize,
    /// Also compute E2 from brute-force HH^* and compare.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long, default_value_t = 10)]
    pub rmax: usize,
    /// Range of the stripe exponent `l` as `LO:HI`.
    #[arg(long, default_value = "0:20")]
    pub l_range: Range,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub target: Target,
    /// Compare coefficients of t^0 .. t^hi.
    #[arg(long, default_value_t = 60)]
    pub hi: i32,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

/// Runs one command and returns the rendered output and its exit code.
pub fn execute(cli: &Cli) -> Result<(Vec<u8>, u8), CliError> {
    let report = commands::dispatch(&cli.command)?;
    let bytes = report.render(cli.format)?;
    let code = if report.ok { exit::OK } else { exit::MISMATCH };
    Ok((bytes, code))
}

/// Parses `args`, runs the command, writes the output and returns the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::USAGE } else { exit::OK };
        }
    };
    let result = execute(&cli).and_then(|(bytes, code)| {
        match &cli.out {
            Some(path) => std::fs::write(path, &bytes)?,
            None => std::io::stdout().write_all(&bytes)?,
        }
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hcf: {e}");
            exit::USAGE
        }
    }
}
