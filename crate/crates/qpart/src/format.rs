//! Text, CSV and JSON-lines renderings. All three carry the same numbers.

use std::io::{self, Write};

use clap::ValueEnum;
use qpart_core::audit::{ClauseResult, Divergence, Status};
use qpart_core::series::Series;
use serde_json::json;

use crate::report::{ReportJson, TimedReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    /// One JSON object per line.
    Json,
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

pub fn write_series(out: &mut dyn Write, s: &Series, format: OutputFormat) -> io::Result<()> {
    let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    match format {
        OutputFormat::Text => writeln!(out, "{}", coeffs.join(" ")),
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["n", "coefficient"]).map_err(csv_err)?;
            for (n, c) in coeffs.iter().enumerate() {
                w.write_record([n.to_string().as_str(), c]).map_err(csv_err)?;
            }
            w.flush()
        }
        OutputFormat::Json => writeln!(out, "{}", json!({ "order": s.order(), "coefficients": coeffs })),
    }
}

/// Rows of `(n, count)` for one counter.
pub fn write_counts(out: &mut dyn Write, key: &str, rows: &[(u32, String)], format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Text => {
            for (n, c) in rows {
                writeln!(out, "{key}({n}) = {c}")?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["family", "n", "count"]).map_err(csv_err)?;
            for (n, c) in rows {
                w.write_record([key, n.to_string().as_str(), c]).map_err(csv_err)?;
            }
            w.flush()
        }
        OutputFormat::Json => {
            for (n, c) in rows {
                writeln!(out, "{}", json!({ "family": key, "n": n, "count": c }))?;
            }
            Ok(())
        }
    }
}

pub fn write_partitions(out: &mut dyn Write, n: u32, parts: &[String], format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Text => {
            for p in parts {
                writeln!(out, "{p}")?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["n", "partition"]).map_err(csv_err)?;
            for p in parts {
                w.write_record([n.to_string().as_str(), p]).map_err(csv_err)?;
            }
            w.flush()
        }
        OutputFormat::Json => {
            for p in parts {
                writeln!(out, "{}", json!({ "n": n, "partition": p }))?;
            }
            Ok(())
        }
    }
}

fn divergence_text(d: &Divergence) -> String {
    format!("at {} in {}: {} = {}, {} = {}", d.index, d.clause, d.left_side, d.left, d.right_side, d.right)
}

fn text_report(out: &mut dyn Write, t: &TimedReport) -> io::Result<()> {
    let r = &t.report;
    let mut head = format!("{:<22} order={}", r.id, r.order);
    if let Some(e) = r.enum_order {
        head.push_str(&format!(" enum_order={e}"));
    }
    let status = match &r.status {
        Status::Verified => "Verified".to_string(),
        Status::Diverges(d) => format!("Diverges {}", divergence_text(d)),
        Status::VariantResolved { verified } => format!("VariantResolved: {}", verified.join("; ")),
        Status::Failed(m) => format!("Failed: {m}"),
    };
    writeln!(out, "{head} {status} ({} ms)", t.millis)?;
    for v in &r.variants {
        let outcome = match &v.result {
            ClauseResult::Verified => "Verified".to_string(),
            ClauseResult::Diverges(d) => format!("Diverges {}", divergence_text(d)),
            ClauseResult::Failed(m) => format!("Failed: {m}"),
        };
        writeln!(out, "    variant \"{}\": {outcome}", v.name)?;
    }
    Ok(())
}

const REPORT_HEADER: [&str; 13] = [
    "id",
    "variant",
    "order",
    "enum_order",
    "status",
    "clause",
    "first_divergence",
    "left_side",
    "left_value",
    "right_side",
    "right_value",
    "message",
    "millis",
];

pub fn write_reports(out: &mut dyn Write, reports: &[TimedReport], format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Text => reports.iter().try_for_each(|t| text_report(out, t)),
        OutputFormat::Json => {
            for t in reports {
                let line = serde_json::to_string(&ReportJson::from(t)).map_err(io::Error::other)?;
                writeln!(out, "{line}")?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(REPORT_HEADER).map_err(csv_err)?;
            for t in reports {
                let j = ReportJson::from(t);
                let opt = |o: &Option<String>| o.clone().unwrap_or_default();
                let num = |o: Option<usize>| o.map(|v| v.to_string()).unwrap_or_default();
                let status = match &j.verified_variants {
                    Some(v) => format!("{}: {}", j.status, v.join("; ")),
                    None => j.status.to_string(),
                };
                w.write_record([
                    j.id.clone(),
                    String::new(),
                    j.order.to_string(),
                    num(j.enum_order),
                    status,
                    opt(&j.detail.clause),
                    num(j.detail.first_divergence),
                    opt(&j.detail.left_side),
                    opt(&j.detail.left_value),
                    opt(&j.detail.right_side),
                    opt(&j.detail.right_value),
                    opt(&j.detail.message),
                    j.millis.to_string(),
                ])
                .map_err(csv_err)?;
                for v in j.variant_outcomes.iter().flatten() {
                    w.write_record([
                        j.id.clone(),
                        v.name.clone(),
                        j.order.to_string(),
                        num(j.enum_order),
                        v.status.to_string(),
                        opt(&v.detail.clause),
                        num(v.detail.first_divergence),
                        opt(&v.detail.left_side),
                        opt(&v.detail.left_value),
                        opt(&v.detail.right_side),
                        opt(&v.detail.right_value),
                        opt(&v.detail.message),
                        String::new(),
                    ])
                    .map_err(csv_err)?;
                }
            }
            w.flush()
        }
    }
}
