//! JSON form of certificate reports.

use lyness_core::certify::{CertificateReport, CertificateSummary, ReportKind};
use lyness_core::rational::fraction_text;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct JsonReport {
    pub step: String,
    pub region: String,
    pub bindings: String,
    pub kind: &'static str,
    pub input_count: usize,
    pub output_count: usize,
    /// `num/den`; null for an identity that holds.
    pub min_coefficient: Option<String>,
    pub witness: Option<String>,
    pub all_positive: bool,
    pub all_integer: bool,
    pub cleared_denominator: String,
    pub passed: bool,
    pub elapsed_ms: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct JsonCounts {
    pub delta2_numerator: usize,
    pub eq16: usize,
    pub eq17: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct JsonSummary {
    pub overall_pass: bool,
    pub steps: Vec<JsonReport>,
    pub counts: JsonCounts,
}

impl From<&CertificateReport> for JsonReport {
    fn from(r: &CertificateReport) -> Self {
        JsonReport {
            step: r.step.clone(),
            region: r.region.clone(),
            bindings: r.bindings.clone(),
            kind: match r.kind {
                ReportKind::Identity => "identity",
                ReportKind::Positivity => "positivity",
            },
            input_count: r.input_count,
            output_count: r.output_count,
            min_coefficient: r.min_coefficient.as_ref().map(fraction_text),
            witness: r.witness().map(str::to_string),
            all_positive: r.all_positive,
            all_integer: r.all_integer,
            cleared_denominator: r.cleared_denominator.clone(),
            passed: r.passed(),
            // microsecond resolution keeps the text short
            elapsed_ms: (r.elapsed.as_secs_f64() * 1e6).round() / 1e3,
        }
    }
}

impl From<&CertificateSummary> for JsonSummary {
    fn from(s: &CertificateSummary) -> Self {
        JsonSummary {
            overall_pass: s.overall_pass(),
            steps: s.reports.iter().map(JsonReport::from).collect(),
            counts: JsonCounts {
                delta2_numerator: s.counts.delta2_numerator,
                eq16: s.counts.eq16,
                eq17: s.counts.eq17,
            },
        }
    }
}

pub fn summary_json(summary: &CertificateSummary) -> String {
    let mut text =
        serde_json::to_string_pretty(&JsonSummary::from(summary)).expect("plain data serializes");
    text.push('\n');
    text
}

pub fn reports_json(reports: &[CertificateReport]) -> String {
    let steps: Vec<JsonReport> = reports.iter().map(JsonReport::from).collect();
    let mut text = serde_json::to_string_pretty(&steps).expect("plain data serializes");
    text.push('\n');
    text
}

/// One line per report: verdict, step, output size and smallest coefficient.
pub fn report_line(r: &CertificateReport) -> String {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let min = r
        .min_coefficient
        .as_ref()
        .map(fraction_text)
        .unwrap_or_else(|| "-".to_string());
    let mut line = format!(
        "{verdict} {:<22} terms={:<5} min={min}",
        r.step, r.output_count
    );
    if let Some(w) = r.witness() {
        line.push_str(&format!(" witness={w}"));
    }
    line
}
