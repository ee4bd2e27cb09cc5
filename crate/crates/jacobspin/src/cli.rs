//! Command-line front end.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use jacobspin_core::sequences::{
    jacobsthal, jacobsthal_lucas, spinor_poly_term, spinor_term, split_quat_seq,
};
use jacobspin_core::series::gen_function_series;
use jacobspin_core::verifier::{Grid, Suite};
use jacobspin_core::{Rational, SeqKind, SplitQuat};

use crate::output::{emit_coeffs, emit_rows, write_json, Coeff, Format, Row, LEGEND};
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_STRICT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "jacobspin",
    version,
    about = "Exact hyperbolic Jacobsthal spinor toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Print a range of sequence terms.
    Gen(GenArgs),
    /// Expand a generating function as a truncated power series.
    Series(SeriesArgs),
    /// Print a Jacobsthal polynomial spinor, optionally evaluated at a point.
    Poly(PolyArgs),
    /// Split-quaternion arithmetic.
    Quat(QuatArgs),
    /// Check every registered identity over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenSeq {
    Hsj,
    Hsjl,
    J,
    Jl,
    Sjq,
    Sjlq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesSeq {
    Hsj,
    Hsjl,
}

impl From<SeriesSeq> for SeqKind {
    fn from(s: SeriesSeq) -> Self {
        match s {
            SeriesSeq::Hsj => SeqKind::Hsj,
            SeriesSeq::Hsjl => SeqKind::Hsjl,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QuatOp {
    Mul,
    Conj,
    Norm,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub seq: GenSeq,
    #[arg(long, default_value_t = 0)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub seq: SeriesSeq,
    #[arg(long, default_value_t = 32)]
    pub order: usize,
    /// Expand the published numerator instead of the seed-derived one.
    #[arg(long)]
    pub printed: bool,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long)]
    pub n: usize,
    /// Rational point such as `1`, `-3/4`.
    #[arg(long)]
    pub eval_at: Option<Rational>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct QuatArgs {
    #[arg(long, value_enum)]
    pub op: QuatOp,
    /// Quaternion such as `1+2i-3/2j+k`.
    #[arg(long, allow_hyphen_values = true)]
    pub lhs: SplitQuat,
    #[arg(long, allow_hyphen_values = true)]
    pub rhs: Option<SplitQuat>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `all`, or a comma-separated list of identity ids.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = Grid::default().n_max)]
    pub n_max: usize,
    #[arg(long, default_value_t = Grid::default().r_max)]
    pub r_max: usize,
    #[arg(long, default_value_t = Grid::default().t_max)]
    pub t_max: usize,
    #[arg(long, default_value_t = Grid::default().order)]
    pub order: usize,
    /// Exit with status 2 if any identity fails without a verified correction.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<jacobspin_core::Error> for Failure {
    fn from(e: jacobspin_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the subcommand,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Gen(a) => gen(a, out, err)?,
        Command::Series(a) => series(a, out, err)?,
        Command::Poly(a) => poly(a, out, err)?,
        Command::Quat(a) => quat(a, out)?,
        Command::Verify(a) => return verify(a, out),
    }
    Ok(EXIT_OK)
}

fn rows<T>(from: usize, to: usize, f: impl Fn(usize) -> T) -> Vec<Row<T>> {
    (from..=to).map(|n| Row { n, value: f(n) }).collect()
}

fn gen(a: GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    if a.from > a.to {
        return Err(Failure::Usage(format!(
            "--from {} exceeds --to {}",
            a.from, a.to
        )));
    }
    let (from, to, fmt) = (a.from, a.to, a.format);
    match a.seq {
        GenSeq::Hsj => emit_rows(
            out,
            err,
            fmt,
            &rows(from, to, |n| spinor_term(SeqKind::Hsj, n)),
        )?,
        GenSeq::Hsjl => emit_rows(
            out,
            err,
            fmt,
            &rows(from, to, |n| spinor_term(SeqKind::Hsjl, n)),
        )?,
        GenSeq::J => emit_rows(
            out,
            err,
            fmt,
            &rows(from, to, |n| Rational::from_integer(jacobsthal(n))),
        )?,
        GenSeq::Jl => emit_rows(
            out,
            err,
            fmt,
            &rows(from, to, |n| Rational::from_integer(jacobsthal_lucas(n))),
        )?,
        GenSeq::Sjq => emit_rows(
            out,
            err,
            fmt,
            &rows(from, to, |n| split_quat_seq(SeqKind::Hsj, n)),
        )?,
        GenSeq::Sjlq => emit_rows(
            out,
            err,
            fmt,
            &rows(from, to, |n| split_quat_seq(SeqKind::Hsjl, n)),
        )?,
    }
    Ok(())
}

fn series(a: SeriesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let s = gen_function_series(a.seq.into(), a.order, a.printed);
    let coeffs: Vec<_> = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| Coeff {
            n,
            coeff: c.clone(),
        })
        .collect();
    emit_coeffs(out, err, a.format, &coeffs)?;
    Ok(())
}

fn poly(a: PolyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let term = spinor_poly_term(a.n);
    match &a.eval_at {
        Some(x) => emit_rows(
            out,
            err,
            a.format,
            &[Row {
                n: a.n,
                value: term.eval(x),
            }],
        )?,
        None => emit_rows(
            out,
            err,
            a.format,
            &[Row {
                n: a.n,
                value: term,
            }],
        )?,
    }
    Ok(())
}

fn quat(a: QuatArgs, out: &mut dyn Write) -> Result<(), Failure> {
    match a.op {
        QuatOp::Mul => {
            let rhs = a
                .rhs
                .ok_or_else(|| Failure::Usage("--op mul requires --rhs".into()))?;
            writeln!(out, "{}", &a.lhs * &rhs)?;
        }
        QuatOp::Conj => writeln!(out, "{}", a.lhs.conj())?,
        QuatOp::Norm => writeln!(out, "{}", a.lhs.norm())?,
    }
    Ok(())
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let grid = Grid {
        n_max: a.n_max,
        r_max: a.r_max,
        t_max: a.t_max,
        order: a.order,
    };
    let suite = match a.suite.as_str() {
        "all" => Suite::All,
        list => Suite::Only(
            list.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect(),
        ),
    };
    let report = Report::run(&grid, &suite)?;
    match a.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => report.write_csv(out)?,
        Format::Pretty => {
            writeln!(out, "{LEGEND}")?;
            report.write_pretty(out)?
        }
    }
    Ok(if a.strict && report.bare_failures() > 0 {
        EXIT_STRICT
    } else {
        EXIT_OK
    })
}
