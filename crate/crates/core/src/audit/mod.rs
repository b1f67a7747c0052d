//! Identity checks: named comparisons between independently computed
//! series, with optional competing readings of a formula.
//!
//! A check holds base clauses, which must all agree, and variants, each a
//! set of clauses standing for one reading of a disputed formula. Every
//! clause compares its sides coefficientwise against its first side.
//! Clauses that involve brute-force enumeration are cut to the
//! enumeration bound; the others run at the requested order.

mod catalog;

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

pub use catalog::{catalog, find};

use crate::combinat::{count_restricted_two_color, series_from_counts, Counter};
use crate::qdsl;
use crate::qfactory::{named_series, JtpSpec, SeriesName};
use crate::series::{first_divergence_from, Series, Sign};

/// Default order for checks that need no enumeration.
pub const SERIES_ORDER: usize = 100;
/// Default enumeration bound.
pub const ENUM_BOUND: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    pub enum_bound: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig { enum_bound: ENUM_BOUND }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuditError {
    UnknownIdentity(String),
}

impl fmt::Display for AuditError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditError::UnknownIdentity(id) => write!(f, "unknown identity `{id}`"),
        }
    }
}

impl core::error::Error for AuditError {}

/// Two-color classes where blue parts are free and red parts are limited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RedClass {
    /// Red parts even and not `0, 6, 10 (mod 16)`.
    EvenAvoiding0610,
    /// Red parts not `0, 6, 10 (mod 16)`, odd ones included.
    Avoiding0610,
    /// Red parts even and not `0, 2, 14 (mod 16)`.
    EvenAvoiding0214,
    /// Red parts not `0, 2, 14 (mod 16)`, odd ones included.
    Avoiding0214,
}

impl RedClass {
    pub fn allows(self, v: u32) -> bool {
        let r = v % 16;
        match self {
            RedClass::EvenAvoiding0610 => v.is_multiple_of(2) && ![0, 6, 10].contains(&r),
            RedClass::Avoiding0610 => ![0, 6, 10].contains(&r),
            RedClass::EvenAvoiding0214 => v.is_multiple_of(2) && ![0, 2, 14].contains(&r),
            RedClass::Avoiding0214 => ![0, 2, 14].contains(&r),
        }
    }
}

/// One way of producing a series.
#[derive(Clone, Debug)]
pub enum Side {
    Catalog(SeriesName),
    /// The catalog entry's DSL transcription, parsed and evaluated.
    Transcribed(SeriesName),
    Oracle(Counter),
    Restricted(RedClass),
    JtpProduct(JtpSpec),
    JtpSum(JtpSpec),
    /// `sum_{k >= 0} s^k q^(k^2)` with `s = -1` when alternating.
    Squares {
        alternating: bool,
    },
    Const(i64),
    Printed(&'static [i64]),
    Dilate(usize, Box<Side>),
    Shift(usize, Box<Side>),
    Linear(Vec<(i64, Side)>),
}

fn sign_char(s: Sign) -> char {
    match s {
        Sign::Plus => '+',
        Sign::Minus => '-',
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Catalog(n) => f.write_str(n.key()),
            Side::Transcribed(n) => write!(f, "dsl:{}", n.key()),
            Side::Oracle(c) => write!(f, "enum:{}", c.key()),
            Side::Restricted(c) => write!(f, "enum:{c:?}"),
            Side::JtpProduct(s) => {
                write!(f, "jtp-product(q^{}, x={}q^{})", s.qscale, sign_char(s.xsign), s.xexp)
            }
            Side::JtpSum(s) => write!(f, "jtp-sum(q^{}, x={}q^{})", s.qscale, sign_char(s.xsign), s.xexp),
            Side::Squares { alternating: false } => f.write_str("squares"),
            Side::Squares { alternating: true } => f.write_str("signed-squares"),
            Side::Const(c) => write!(f, "{c}"),
            Side::Printed(cs) => write!(f, "printed{cs:?}"),
            Side::Dilate(k, s) => write!(f, "({s})(q^{k})"),
            Side::Shift(k, s) => write!(f, "q^{k}*{s}"),
            Side::Linear(terms) => {
                for (i, (c, s)) in terms.iter().enumerate() {
                    match (i, *c) {
                        (0, 1) => write!(f, "{s}")?,
                        (0, -1) => write!(f, "-{s}")?,
                        (0, c) => write!(f, "{c}*{s}")?,
                        (_, 1) => write!(f, " + {s}")?,
                        (_, -1) => write!(f, " - {s}")?,
                        (_, c) if c < 0 => write!(f, " - {}*{s}", -c)?,
                        (_, c) => write!(f, " + {c}*{s}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl Side {
    pub fn uses_enumeration(&self) -> bool {
        match self {
            Side::Oracle(_) | Side::Restricted(_) => true,
            Side::Dilate(_, s) | Side::Shift(_, s) => s.uses_enumeration(),
            Side::Linear(terms) => terms.iter().any(|(_, s)| s.uses_enumeration()),
            _ => false,
        }
    }

    pub fn eval(&self, order: usize) -> Result<Series, String> {
        let fail = |e: &dyn fmt::Display| format!("{self}: {e}");
        Ok(match self {
            Side::Catalog(n) => named_series(*n, order).map_err(|e| fail(&e))?,
            Side::Transcribed(n) => qdsl::expand(qdsl::transcription(*n), order).map_err(|e| fail(&e))?,
            Side::Oracle(c) => series_from_counts(order, |n| Ok::<_, core::convert::Infallible>(c.count(n))).unwrap(),
            Side::Restricted(class) => series_from_counts(order, |n| {
                Ok::<_, core::convert::Infallible>(count_restricted_two_color(n, &|v| class.allows(v)))
            })
            .unwrap(),
            Side::JtpProduct(s) => s.product_side(order).map_err(|e| fail(&e))?,
            Side::JtpSum(s) => s.sum_side(order).map_err(|e| fail(&e))?,
            Side::Squares { alternating } => {
                let mut coeffs = Series::zero(order).into_coeffs();
                let mut k = 0usize;
                while k * k <= order {
                    let sign = if *alternating && k % 2 == 1 { -1 } else { 1 };
                    coeffs[k * k] += sign;
                    k += 1;
                }
                Series::from_coeffs(coeffs)
            }
            Side::Const(c) => Series::constant(*c, order),
            Side::Printed(cs) => Series::from_i64s(cs).truncate(order.min(cs.len() - 1)),
            Side::Dilate(k, s) => s.eval(order)?.dilate(*k),
            Side::Shift(k, s) => s.eval(order)?.shift(*k),
            Side::Linear(terms) => {
                let mut acc = Series::zero(order);
                for (c, s) in terms {
                    acc = &acc + &s.eval(order)?.scale(&BigInt::from(*c));
                }
                acc
            }
        })
    }
}

/// Sides that must agree coefficientwise.
#[derive(Clone, Debug)]
pub struct Clause {
    pub label: &'static str,
    pub sides: Vec<Side>,
}

impl Clause {
    pub fn uses_enumeration(&self) -> bool {
        self.sides.iter().any(Side::uses_enumeration)
    }

    fn effective_order(&self, order: usize, cfg: &AuditConfig) -> usize {
        if self.uses_enumeration() {
            order.min(cfg.enum_bound)
        } else {
            order
        }
    }

    pub fn check(&self, order: usize, start: usize, cfg: &AuditConfig) -> ClauseResult {
        let order = self.effective_order(order, cfg);
        let mut series = Vec::with_capacity(self.sides.len());
        for side in &self.sides {
            match side.eval(order) {
                Ok(s) => series.push(s),
                Err(msg) => return ClauseResult::Failed(format!("{}: {msg}", self.label)),
            }
        }
        let mut worst: Option<Divergence> = None;
        for (k, other) in series.iter().enumerate().skip(1) {
            if let Some(index) = first_divergence_from(&series[0], other, start) {
                if worst.as_ref().is_none_or(|d| index < d.index) {
                    worst = Some(Divergence {
                        clause: self.label.to_string(),
                        index,
                        left: series[0].coeffs()[index].clone(),
                        right: other.coeffs()[index].clone(),
                        left_side: self.sides[0].to_string(),
                        right_side: self.sides[k].to_string(),
                    });
                }
            }
        }
        match worst {
            Some(d) => ClauseResult::Diverges(d),
            None => ClauseResult::Verified,
        }
    }
}

/// One reading of a disputed formula.
#[derive(Clone, Debug)]
pub struct Variant {
    pub name: &'static str,
    pub clauses: Vec<Clause>,
}

#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    /// First coefficient index compared.
    pub start: usize,
    pub clauses: Vec<Clause>,
    pub variants: Vec<Variant>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub clause: String,
    pub index: usize,
    pub left: BigInt,
    pub right: BigInt,
    pub left_side: String,
    pub right_side: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClauseResult {
    Verified,
    Diverges(Divergence),
    Failed(String),
}

impl ClauseResult {
    pub fn is_verified(&self) -> bool {
        matches!(self, ClauseResult::Verified)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantOutcome {
    pub name: String,
    pub result: ClauseResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Diverges(Divergence),
    /// The names of the variants that held.
    VariantResolved {
        verified: Vec<String>,
    },
    Failed(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Verified => "Verified",
            Status::Diverges(_) => "Diverges",
            Status::VariantResolved { .. } => "VariantResolved",
            Status::Failed(_) => "Failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub id: String,
    pub order: usize,
    /// The order used by enumeration clauses, when there are any.
    pub enum_order: Option<usize>,
    pub status: Status,
    pub variants: Vec<VariantOutcome>,
}

impl AuditReport {
    /// `Verified`, or `VariantResolved` with at least one variant holding.
    pub fn passed(&self) -> bool {
        match &self.status {
            Status::Verified => true,
            Status::VariantResolved { verified } => !verified.is_empty(),
            _ => false,
        }
    }
}

fn run_clauses(clauses: &[Clause], order: usize, start: usize, cfg: &AuditConfig) -> ClauseResult {
    for c in clauses {
        let r = c.check(order, start, cfg);
        if !r.is_verified() {
            return r;
        }
    }
    ClauseResult::Verified
}

impl IdentityCheck {
    fn all_clauses(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().chain(self.variants.iter().flat_map(|v| v.clauses.iter()))
    }

    pub fn uses_enumeration(&self) -> bool {
        self.all_clauses().any(Clause::uses_enumeration)
    }

    /// The enumeration bound when every clause enumerates, else
    /// [`SERIES_ORDER`].
    pub fn default_order(&self, cfg: &AuditConfig) -> usize {
        if self.all_clauses().all(Clause::uses_enumeration) {
            cfg.enum_bound
        } else {
            SERIES_ORDER
        }
    }

    pub fn run(&self, order: Option<usize>, cfg: &AuditConfig) -> AuditReport {
        let order = order.unwrap_or_else(|| self.default_order(cfg));
        let enum_order = self.uses_enumeration().then_some(order.min(cfg.enum_bound));
        let base = run_clauses(&self.clauses, order, self.start, cfg);
        let variants: Vec<VariantOutcome> = self
            .variants
            .iter()
            .map(|v| VariantOutcome {
                name: v.name.to_string(),
                result: run_clauses(&v.clauses, order, self.start, cfg),
            })
            .collect();
        let status = match base {
            ClauseResult::Failed(msg) => Status::Failed(msg),
            ClauseResult::Diverges(d) => Status::Diverges(d),
            ClauseResult::Verified if variants.is_empty() => Status::Verified,
            ClauseResult::Verified => {
                let verified: Vec<String> =
                    variants.iter().filter(|v| v.result.is_verified()).map(|v| v.name.clone()).collect();
                if !verified.is_empty() {
                    Status::VariantResolved { verified }
                } else if let Some(msg) = variants.iter().find_map(|v| match &v.result {
                    ClauseResult::Failed(m) => Some(m.clone()),
                    _ => None,
                }) {
                    Status::Failed(msg)
                } else {
                    match &variants[0].result {
                        ClauseResult::Diverges(d) => Status::Diverges(d.clone()),
                        _ => unreachable!("no variant verified or failed"),
                    }
                }
            }
        };
        AuditReport { id: self.id.to_string(), order, enum_order, status, variants }
    }
}

pub fn run_check(id: &str, order: Option<usize>, cfg: &AuditConfig) -> Result<AuditReport, AuditError> {
    let check = find(id).ok_or_else(|| AuditError::UnknownIdentity(id.to_string()))?;
    Ok(check.run(order, cfg))
}

/// The checks named by `ids`, in catalog order, and the distinct ids that
/// name nothing. `None` selects the whole catalog.
pub fn select(ids: Option<&[&str]>) -> (Vec<IdentityCheck>, Vec<String>) {
    let all = catalog();
    let Some(ids) = ids else {
        return (all, Vec::new());
    };
    let mut unknown: Vec<String> = Vec::new();
    for id in ids {
        if !all.iter().any(|c| c.id == *id) && !unknown.iter().any(|u| u == id) {
            unknown.push(id.to_string());
        }
    }
    (all.into_iter().filter(|c| ids.contains(&c.id)).collect(), unknown)
}

/// The `Failed` report standing in for an id outside the catalog.
pub fn unknown_report(id: &str, order: Option<usize>) -> AuditReport {
    AuditReport {
        id: id.to_string(),
        order: order.unwrap_or(0),
        enum_order: None,
        status: Status::Failed(AuditError::UnknownIdentity(id.to_string()).to_string()),
        variants: Vec::new(),
    }
}

/// Runs every selected check and returns the reports in catalog order,
/// followed by a `Failed` report for each unknown id.
pub fn run_suite(order: Option<usize>, ids: Option<&[&str]>, cfg: &AuditConfig) -> Vec<AuditReport> {
    let (checks, unknown) = select(ids);
    let mut reports: Vec<AuditReport> = checks.iter().map(|c| c.run(order, cfg)).collect();
    reports.extend(unknown.iter().map(|id| unknown_report(id, order)));
    reports
}
