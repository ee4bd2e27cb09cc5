//! The verification report: suite verdicts, grid and wall-clock runtime.

use std::io::{self, Write};
use std::thread;
use std::time::Instant;

use jacobspin_core::verifier::{Counterexample, Grid, IdentityResult, Suite, Verdict};
use jacobspin_core::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    HoldsCorrected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub citation: String,
    pub statement: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub corrected_statement: Option<String>,
    pub points_checked: usize,
}

impl From<IdentityResult> for Entry {
    fn from(r: IdentityResult) -> Self {
        let (status, counterexample, corrected_statement) = match r.verdict {
            Verdict::Holds => (Status::Holds, None, None),
            Verdict::Fails { counterexample } => (Status::Fails, Some(counterexample), None),
            Verdict::HoldsCorrected {
                counterexample,
                corrected_statement,
            } => (
                Status::HoldsCorrected,
                Some(counterexample),
                Some(corrected_statement),
            ),
        };
        Entry {
            id: r.id,
            citation: r.citation,
            statement: r.statement,
            status,
            counterexample,
            corrected_statement,
            points_checked: r.points_checked,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub grid: Grid,
    pub results: Vec<Entry>,
    pub runtime_ms: u64,
}

impl Report {
    /// Verifies the selected identities on separate threads. Results keep
    /// registry order.
    pub fn run(grid: &Grid, suite: &Suite) -> Result<Self> {
        let start = Instant::now();
        grid.validate()?;
        let selected = suite.select()?;
        let results = thread::scope(|s| {
            let handles: Vec<_> = selected
                .iter()
                .map(|d| s.spawn(move || d.verify(grid)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verifier thread panicked").map(Entry::from))
                .collect::<Result<Vec<_>>>()
        })?;
        Ok(Report {
            grid: *grid,
            results,
            runtime_ms: start.elapsed().as_millis() as u64,
        })
    }

    pub fn bare_failures(&self) -> usize {
        self.results
            .iter()
            .filter(|e| e.status == Status::Fails)
            .count()
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "id",
            "status",
            "points_checked",
            "n",
            "r",
            "t",
            "lhs",
            "rhs",
            "citation",
            "statement",
            "corrected_statement",
        ])?;
        let opt = |v: Option<usize>| v.map(|k| k.to_string()).unwrap_or_default();
        for e in &self.results {
            let ce = e.counterexample.as_ref();
            w.write_record([
                e.id.clone(),
                status_name(e.status).to_string(),
                e.points_checked.to_string(),
                opt(ce.map(|c| c.params.n)),
                opt(ce.and_then(|c| c.params.r)),
                opt(ce.and_then(|c| c.params.t)),
                ce.map(|c| c.lhs.to_string()).unwrap_or_default(),
                ce.map(|c| c.rhs.to_string()).unwrap_or_default(),
                e.citation.clone(),
                e.statement.clone(),
                e.corrected_statement.clone().unwrap_or_default(),
            ])?;
        }
        w.flush()
    }

    pub fn write_pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        let g = &self.grid;
        writeln!(
            out,
            "grid: n <= {}, r <= {}, t <= {}, series order {}",
            g.n_max, g.r_max, g.t_max, g.order
        )?;
        for e in &self.results {
            writeln!(
                out,
                "{:<16} {:<20} {}",
                status_name(e.status),
                e.id,
                e.citation
            )?;
            if let Some(ce) = &e.counterexample {
                let p = &ce.params;
                let mut at = format!("n={}", p.n);
                if let Some(r) = p.r {
                    at.push_str(&format!(", r={r}"));
                }
                if let Some(t) = p.t {
                    at.push_str(&format!(", t={t}"));
                }
                writeln!(out, "    printed:   {}", e.statement)?;
                writeln!(out, "    fails at {at}: lhs = {}, rhs = {}", ce.lhs, ce.rhs)?;
            }
            if let Some(c) = &e.corrected_statement {
                writeln!(out, "    corrected: {c}")?;
            }
        }
        let count = |s| self.results.iter().filter(|e| e.status == s).count();
        writeln!(
            out,
            "{} holds, {} holds_corrected, {} fails ({} ms)",
            count(Status::Holds),
            count(Status::HoldsCorrected),
            count(Status::Fails),
            self.runtime_ms
        )
    }
}

pub fn status_name(s: Status) -> &'static str {
    match s {
        Status::Holds => "holds",
        Status::Fails => "fails",
        Status::HoldsCorrected => "holds_corrected",
    }
}
