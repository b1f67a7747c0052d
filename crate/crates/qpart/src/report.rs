//! Timed audit runs and their serialized form.

use std::time::Instant;

use qpart_core::audit::{
    select, unknown_report, AuditConfig, AuditReport, ClauseResult, Divergence, Status, VariantOutcome,
};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct TimedReport {
    pub report: AuditReport,
    pub millis: u128,
}

impl TimedReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Runs the selected checks concurrently. The result is in catalog order,
/// with unknown ids last.
pub fn run_timed(order: Option<usize>, ids: Option<&[&str]>, cfg: &AuditConfig) -> Vec<TimedReport> {
    let (checks, unknown) = select(ids);
    let mut out: Vec<TimedReport> = checks
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let report = c.run(order, cfg);
            TimedReport { report, millis: start.elapsed().as_millis() }
        })
        .collect();
    out.extend(unknown.iter().map(|id| TimedReport { report: unknown_report(id, order), millis: 0 }));
    out
}

/// The wire form of a report. Big integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportJson {
    pub id: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enum_order: Option<usize>,
    pub status: &'static str,
    #[serde(flatten)]
    pub detail: Detail,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified_variants: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant_outcomes: Option<Vec<VariantJson>>,
    pub millis: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Detail {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_divergence: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_side: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_side: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariantJson {
    pub name: String,
    pub status: &'static str,
    #[serde(flatten)]
    pub detail: Detail,
}

impl From<&Divergence> for Detail {
    fn from(d: &Divergence) -> Self {
        Detail {
            clause: Some(d.clause.clone()),
            first_divergence: Some(d.index),
            left_value: Some(d.left.to_string()),
            right_value: Some(d.right.to_string()),
            left_side: Some(d.left_side.clone()),
            right_side: Some(d.right_side.clone()),
            message: None,
        }
    }
}

fn failure(msg: &str) -> Detail {
    Detail { message: Some(msg.to_string()), ..Detail::default() }
}

impl From<&VariantOutcome> for VariantJson {
    fn from(v: &VariantOutcome) -> Self {
        let (status, detail) = match &v.result {
            ClauseResult::Verified => ("Verified", Detail::default()),
            ClauseResult::Diverges(d) => ("Diverges", d.into()),
            ClauseResult::Failed(m) => ("Failed", failure(m)),
        };
        VariantJson { name: v.name.clone(), status, detail }
    }
}

impl From<&TimedReport> for ReportJson {
    fn from(t: &TimedReport) -> Self {
        let r = &t.report;
        let (detail, verified_variants) = match &r.status {
            Status::Verified => (Detail::default(), None),
            Status::Diverges(d) => (d.into(), None),
            Status::VariantResolved { verified } => (Detail::default(), Some(verified.clone())),
            Status::Failed(m) => (failure(m), None),
        };
        ReportJson {
            id: r.id.clone(),
            order: r.order,
            enum_order: r.enum_order,
            status: r.status.label(),
            detail,
            verified_variants,
            variant_outcomes: (!r.variants.is_empty()).then(|| r.variants.iter().map(Into::into).collect()),
            millis: t.millis,
        }
    }
}
