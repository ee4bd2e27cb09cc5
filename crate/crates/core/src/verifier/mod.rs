//! Identity registry and the exhaustive grid checker behind the errata report.
//!
//! Every registered identity relates terms of one fixed second-order linear
//! recurrence, so agreement on a handful of consecutive indices already
//! forces agreement everywhere. The checker only ever claims equality on the
//! grid it was given.

mod registry;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::error::{Error, Result};
use crate::sequences::{printed_poly_binet, spinor_terms_by_recurrence, PolyBinet, SeqKind};
use crate::series::{gen_function_series, poly_gen_series, Series};
use crate::spinor::{ExtSpinor, HypSpinor, PolySpinor};

pub use registry::list_identities;

/// Parameter ranges: `n <= n_max`, `1 <= r <= r_max`, `t <= t_max`, and
/// generating-function coefficients up to `order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Grid {
    pub n_max: usize,
    pub r_max: usize,
    pub t_max: usize,
    pub order: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n_max: 64,
            r_max: 8,
            t_max: 8,
            order: 32,
        }
    }
}

impl Grid {
    pub fn validate(&self) -> Result<()> {
        if self.n_max == 0 {
            return Err(Error::MalformedGrid("n_max must be at least 1"));
        }
        if self.r_max == 0 {
            return Err(Error::MalformedGrid("r_max must be at least 1"));
        }
        Ok(())
    }
}

/// Which parameters an identity ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamSpace {
    /// `min <= n <= n_max`.
    N { min: usize },
    /// `1 <= r <= r_max`, `r + 1 <= n <= n_max`.
    NR,
    /// `0 <= n <= n_max`, `0 <= t <= t_max`.
    NT,
    /// Coefficient index `0 <= n <= order`.
    Coefficient,
}

impl ParamSpace {
    pub fn points(self, grid: &Grid) -> Vec<Params> {
        let n_only = |n| Params {
            n,
            r: None,
            t: None,
        };
        match self {
            ParamSpace::N { min } => (min..=grid.n_max).map(n_only).collect(),
            ParamSpace::Coefficient => (0..=grid.order).map(n_only).collect(),
            ParamSpace::NR => (1..=grid.n_max)
                .flat_map(|n| {
                    (1..=grid.r_max)
                        .filter(move |&r| n > r)
                        .map(move |r| Params {
                            n,
                            r: Some(r),
                            t: None,
                        })
                })
                .collect(),
            ParamSpace::NT => (0..=grid.n_max)
                .flat_map(|n| {
                    (0..=grid.t_max).map(move |t| Params {
                        n,
                        r: None,
                        t: Some(t),
                    })
                })
                .collect(),
        }
    }
}

/// One grid point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Params {
    pub n: usize,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub r: Option<usize>,
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub t: Option<usize>,
}

impl Params {
    fn r(&self) -> usize {
        self.r.expect("identity ranges over r")
    }

    fn t(&self) -> usize {
        self.t.expect("identity ranges over t")
    }
}

/// A side of an identity evaluated at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(tag = "kind", content = "value", rename_all = "snake_case")
)]
pub enum Value {
    Spinor(HypSpinor),
    PolySpinor(PolySpinor),
    ExtSpinor(ExtSpinor),
}

impl core::fmt::Display for Value {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Value::Spinor(s) => s.fmt(f),
            Value::PolySpinor(s) => s.fmt(f),
            Value::ExtSpinor(s) => s.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Counterexample {
    pub params: Params,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Exact equality at every grid point.
    Holds,
    /// The printed form fails and no verified correction exists.
    Fails { counterexample: Counterexample },
    /// The printed form fails; the corrected form holds on the whole grid.
    HoldsCorrected {
        counterexample: Counterexample,
        corrected_statement: String,
    },
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails { .. } => "fails",
            Verdict::HoldsCorrected { .. } => "holds_corrected",
        }
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails { counterexample } | Verdict::HoldsCorrected { counterexample, .. } => {
                Some(counterexample)
            }
        }
    }

    pub fn corrected_statement(&self) -> Option<&str> {
        match self {
            Verdict::HoldsCorrected {
                corrected_statement,
                ..
            } => Some(corrected_statement),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Printed,
    Corrected,
}

type Evaluator = fn(&Context<'_>, &Params, Form) -> (Value, Value);

/// A registered identity: its printed statement, the point evaluator for
/// both sides, and optionally a corrected statement.
#[derive(Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    /// Label shared by statements that belong together.
    pub group: &'static str,
    pub citation: &'static str,
    pub statement: &'static str,
    pub params: ParamSpace,
    eval: Evaluator,
    corrected: Option<fn() -> String>,
}

impl core::fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("group", &self.group)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

impl IdentityDescriptor {
    pub fn has_correction(&self) -> bool {
        self.corrected.is_some()
    }

    pub fn corrected_statement(&self) -> Option<String> {
        self.corrected.map(|f| f())
    }

    /// Evaluates both sides at one point.
    pub fn evaluate(&self, grid: &Grid, params: &Params, form: Form) -> (Value, Value) {
        (self.eval)(&Context::new(grid), params, form)
    }

    fn scan(&self, ctx: &Context<'_>, form: Form) -> (usize, Option<Counterexample>) {
        let points = self.params.points(ctx.grid);
        for p in &points {
            let (lhs, rhs) = (self.eval)(ctx, p, form);
            if lhs != rhs {
                return (
                    points.len(),
                    Some(Counterexample {
                        params: *p,
                        lhs,
                        rhs,
                    }),
                );
            }
        }
        (points.len(), None)
    }

    pub fn verify(&self, grid: &Grid) -> Result<IdentityResult> {
        grid.validate()?;
        let ctx = Context::new(grid);
        let (points_checked, printed) = self.scan(&ctx, Form::Printed);
        let verdict = match (printed, self.corrected) {
            (None, _) => Verdict::Holds,
            (Some(counterexample), None) => Verdict::Fails { counterexample },
            (Some(counterexample), Some(statement)) => match self.scan(&ctx, Form::Corrected).1 {
                None => Verdict::HoldsCorrected {
                    counterexample,
                    corrected_statement: statement(),
                },
                Some(_) => Verdict::Fails { counterexample },
            },
        };
        Ok(IdentityResult {
            id: self.id.to_string(),
            citation: self.citation.to_string(),
            statement: self.statement.to_string(),
            verdict,
            points_checked,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub id: String,
    pub citation: String,
    pub statement: String,
    pub verdict: Verdict,
    pub points_checked: usize,
}

/// Results in registry order for one grid. Deterministic in the grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub grid: Grid,
    pub results: Vec<IdentityResult>,
}

impl SuiteReport {
    pub fn bare_failures(&self) -> impl Iterator<Item = &IdentityResult> {
        self.results
            .iter()
            .filter(|r| matches!(r.verdict, Verdict::Fails { .. }))
    }
}

pub fn find_identity(id: &str) -> Result<IdentityDescriptor> {
    list_identities()
        .into_iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn verify_identity(id: &str, grid: &Grid) -> Result<IdentityResult> {
    find_identity(id)?.verify(grid)
}

/// Which registry entries to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Only(Vec<String>),
}

impl Suite {
    pub fn select(&self) -> Result<Vec<IdentityDescriptor>> {
        match self {
            Suite::All => Ok(list_identities()),
            Suite::Only(ids) if ids.is_empty() => Err(Error::UnknownIdentity(String::new())),
            Suite::Only(ids) => ids.iter().map(|id| find_identity(id)).collect(),
        }
    }
}

pub fn run_suite(grid: &Grid, suite: &Suite) -> Result<SuiteReport> {
    grid.validate()?;
    let results = suite
        .select()?
        .iter()
        .map(|d| d.verify(grid))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        grid: *grid,
        results,
    })
}

/// Values shared by the points of one scan, built on first use.
pub(crate) struct Context<'g> {
    grid: &'g Grid,
    recurrence: [OnceCell<Vec<HypSpinor>>; 2],
    gen_series: [[OnceCell<Series<HypSpinor>>; 2]; 2],
    poly_series: [OnceCell<Series<PolySpinor>>; 2],
    poly_binet: OnceCell<PolyBinet>,
    printed_poly_binet: OnceCell<ExtSpinor>,
}

fn kind_slot(kind: SeqKind) -> usize {
    match kind {
        SeqKind::Hsj => 0,
        SeqKind::Hsjl => 1,
    }
}

fn form_slot(form: Form) -> usize {
    match form {
        Form::Printed => 0,
        Form::Corrected => 1,
    }
}

impl<'g> Context<'g> {
    fn new(grid: &'g Grid) -> Self {
        Context {
            grid,
            recurrence: Default::default(),
            gen_series: Default::default(),
            poly_series: Default::default(),
            poly_binet: OnceCell::new(),
            printed_poly_binet: OnceCell::new(),
        }
    }

    /// Term `n` computed by the spinor recurrence alone.
    fn by_recurrence(&self, kind: SeqKind, n: usize) -> HypSpinor {
        let terms = self.recurrence[kind_slot(kind)].get_or_init(|| {
            let g = self.grid;
            spinor_terms_by_recurrence(kind, 2 * g.n_max + g.r_max + g.t_max + 4)
        });
        match terms.get(n) {
            Some(s) => s.clone(),
            None => spinor_terms_by_recurrence(kind, n).pop().expect("nonempty"),
        }
    }

    fn gen_coeff(&self, kind: SeqKind, form: Form, n: usize) -> HypSpinor {
        let series = self.gen_series[kind_slot(kind)][form_slot(form)]
            .get_or_init(|| gen_function_series(kind, self.grid.order, form == Form::Printed));
        series.coeff(n).expect("coefficient within order").clone()
    }

    fn poly_gen_coeff(&self, form: Form, n: usize) -> PolySpinor {
        let series = self.poly_series[form_slot(form)]
            .get_or_init(|| poly_gen_series(self.grid.order, form == Form::Printed));
        series.coeff(n).expect("coefficient within order").clone()
    }

    fn poly_binet(&self) -> &PolyBinet {
        self.poly_binet.get_or_init(PolyBinet::derive)
    }

    fn printed_poly_binet(&self) -> &ExtSpinor {
        self.printed_poly_binet.get_or_init(printed_poly_binet)
    }
}
