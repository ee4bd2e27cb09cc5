//! Rendering of values as JSON, CSV and plain text.
//!
//! Every number is written as an exact decimal or `p/q` string.

use std::fmt::Display;
use std::io::{self, Write};

use clap::ValueEnum;
use jacobspin_core::{HypSpinor, PolySpinor, Rational, SplitQuat};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// One indexed sequence value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row<T> {
    pub n: usize,
    pub value: T,
}

/// One indexed power-series coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coeff<T> {
    pub n: usize,
    pub coeff: T,
}

/// Flattening of a value into CSV cells.
pub trait Cells {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

impl Cells for Rational {
    fn header() -> &'static [&'static str] {
        &["value"]
    }

    fn cells(&self) -> Vec<String> {
        vec![self.to_string()]
    }
}

impl Cells for SplitQuat {
    fn header() -> &'static [&'static str] {
        &["a", "b", "c", "d"]
    }

    fn cells(&self) -> Vec<String> {
        [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .map(|r| r.to_string())
            .collect()
    }
}

impl Cells for HypSpinor {
    fn header() -> &'static [&'static str] {
        &["a1", "b1", "a2", "b2"]
    }

    fn cells(&self) -> Vec<String> {
        [&self.c1.re, &self.c1.hy, &self.c2.re, &self.c2.hy]
            .iter()
            .map(|r| r.to_string())
            .collect()
    }
}

impl Cells for PolySpinor {
    fn header() -> &'static [&'static str] {
        &["a1", "b1", "a2", "b2"]
    }

    fn cells(&self) -> Vec<String> {
        [&self.c1.re, &self.c1.hy, &self.c2.re, &self.c2.hy]
            .iter()
            .map(|p| p.to_string())
            .collect()
    }
}

pub const LEGEND: &str = "# u denotes the hyperbolic unit, u^2 = +1 (elsewhere often written j)";

pub fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

/// Header `n,<cells...>` then one record per item.
pub fn write_csv<'a, T, I>(out: &mut dyn Write, items: I) -> io::Result<()>
where
    T: Cells + 'a,
    I: IntoIterator<Item = (usize, &'a T)>,
{
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["n"];
    header.extend_from_slice(T::header());
    w.write_record(&header)?;
    for (n, v) in items {
        let mut rec = vec![n.to_string()];
        rec.extend(v.cells());
        w.write_record(&rec)?;
    }
    w.flush()
}

pub fn write_lines<'a, T, I>(out: &mut dyn Write, items: I) -> io::Result<()>
where
    T: Display + 'a,
    I: IntoIterator<Item = &'a T>,
{
    for v in items {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

/// Emits an indexed list in the requested format. JSON uses `Row` objects.
pub fn emit_rows<T>(
    out: &mut dyn Write,
    err: &mut dyn Write,
    format: Format,
    rows: &[Row<T>],
) -> io::Result<()>
where
    T: Cells + Display + Serialize,
{
    match format {
        Format::Json => write_json(out, &rows),
        Format::Csv => write_csv(out, rows.iter().map(|r| (r.n, &r.value))),
        Format::Pretty => {
            writeln!(err, "{LEGEND}")?;
            write_lines(out, rows.iter().map(|r| &r.value))
        }
    }
}

/// Same as [`emit_rows`] for series coefficients.
pub fn emit_coeffs<T>(
    out: &mut dyn Write,
    err: &mut dyn Write,
    format: Format,
    coeffs: &[Coeff<T>],
) -> io::Result<()>
where
    T: Cells + Display + Serialize,
{
    match format {
        Format::Json => write_json(out, &coeffs),
        Format::Csv => write_csv(out, coeffs.iter().map(|c| (c.n, &c.coeff))),
        Format::Pretty => {
            writeln!(err, "{LEGEND}")?;
            for c in coeffs {
                writeln!(out, "x^{}: {}", c.n, c.coeff)?;
            }
            Ok(())
        }
    }
}
