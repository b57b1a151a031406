//! Command-line front end. `run` takes the argument vector and output
//! streams so it can be driven from tests; the binary only forwards to it.

mod commands;
pub mod error;
pub mod table;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "ovals", about = "Exact areas, Puiseux expansions and squarability certificates for ovals")]
#[command(arg_required_else_help = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a polynomial and print its canonical form.
    Parse {
        /// Polynomial text.
        #[arg(long)]
        expr: Option<String>,
        #[command(flatten)]
        input: InFile,
        /// Comma-separated variable list.
        #[arg(long, default_value = "x,y")]
        vars: String,
    },
    /// Implicit equation F(x, y) of a parametrized or Bezier curve.
    Implicitize {
        #[command(flatten)]
        curve: CurveArg,
    },
    /// Puiseux expansion of F(x, y) = 0 at the origin.
    Puiseux {
        /// Polynomial in x and y.
        #[arg(long)]
        curve: Option<String>,
        #[command(flatten)]
        input: InFile,
        #[arg(long, default_value_t = 5)]
        terms: usize,
        /// Print every branch rather than the principal one.
        #[arg(long)]
        all: bool,
    },
    /// Rational singular points of F(x, y) = 0.
    Singular {
        /// Polynomial in x and y.
        #[arg(long, conflicts_with = "param")]
        curve: Option<String>,
        /// Parametrized curve, implicitized first.
        #[arg(long)]
        param: Option<String>,
        #[command(flatten)]
        input: InFile,
    },
    /// Total area, or a segment cut by a chord or a vertical line.
    Area {
        #[command(flatten)]
        curve: CurveArg,
        /// Segment cut by the chord from the origin to P(t0).
        #[arg(long, group = "cut")]
        chord: Option<String>,
        /// Segment cut by the vertical line through P(t1) and P(t2), given as t1,t2.
        #[arg(long, group = "cut")]
        vertical: Option<String>,
        /// Free section 2*S1 - S at t_P.
        #[arg(long, group = "cut")]
        free_inlet: Option<String>,
        /// Report the other piece of a chord or vertical cut.
        #[arg(long)]
        complement: bool,
        /// Valid t_P range for --free-inlet, as lo,hi.
        #[arg(long, default_value = "1/2,1")]
        range: String,
    },
    /// CSV table of the free section against t_P.
    DamperTable {
        #[command(flatten)]
        curve: CurveArg,
        /// t_P range as lo,hi.
        #[arg(long, default_value = "1/2,1")]
        range: String,
        /// Number of rows, end points included.
        #[arg(long, default_value_t = 11)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Build a certificate Q(S, ...) for a family of cutting lines.
    Certify {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, value_enum, default_value_t = FamilyArg::Pencil)]
        family: FamilyArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against numerically measured areas.
    Verify {
        /// Certificate text ("roles: ..." line, then the polynomial).
        #[arg(long)]
        cert: Option<String>,
        #[command(flatten)]
        input: InFile,
        /// Parametrized curve to cut.
        #[arg(long, group = "subject")]
        param: Option<String>,
        /// Polygon to cut, as "(x,y) (x,y) ...".
        #[arg(long, group = "subject")]
        polygon: Option<String>,
        /// The unit square.
        #[arg(long, group = "subject")]
        square: bool,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Polygon vertices used by the area oracle.
        #[arg(long, default_value_t = 100_000)]
        oracle_samples: usize,
        #[arg(long, default_value = "0.1,2")]
        slope_window: String,
        #[arg(long, default_value = "0,1")]
        intercept_window: String,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Print every sample.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Debug, Args)]
pub struct InFile {
    /// Read the primary input text from a file.
    #[arg(long = "in", value_name = "PATH")]
    pub path: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CurveArg {
    /// Curve text: "x=...; y=...; t in [a,b]" or "bezier (x,y) (x,y) ...".
    #[arg(long)]
    pub param: Option<String>,
    #[command(flatten)]
    pub input: InFile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Chords through the origin, areas on the arc side.
    Pencil,
    /// Vertical lines x = c.
    Vertical,
    /// Chords through the origin, free section 2*S1 - S.
    FreeInlet,
}

/// Runs one invocation: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match commands::dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
