//! Report rendering (JSON, CSV, table) and CI gate evaluation.
//!
//! Renderers are pure: identical reports produce identical bytes, with all
//! map ordering fixed upstream. Gates compare exact rationals by
//! cross-multiplication — no floats — so a report that passes at threshold
//! `t` can never fail at any `t' < t`, and boundary cases (actual equal to
//! threshold) pass deterministically.

use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::metrics::MetricsReport;
use crate::ratio::Ratio;

/// How gates treat an UNDEFINED (0/0) metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UndefinedPolicy {
    /// An undefined gated metric is a violation.
    #[default]
    Fail,
    /// An undefined gated metric is skipped.
    Skip,
}

/// Minimum thresholds for the gated metrics; unset thresholds are not
/// checked.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GateConfig {
    pub min_ctf: Option<Ratio>,
    pub min_mtf: Option<Ratio>,
    pub min_reuse_ratio: Option<Ratio>,
    pub undefined_policy: UndefinedPolicy,
}

impl GateConfig {
    pub fn any_threshold_set(&self) -> bool {
        self.min_ctf.is_some() || self.min_mtf.is_some() || self.min_reuse_ratio.is_some()
    }
}

/// One failed threshold: the metric, what was required, and what the report
/// actually holds (possibly 0/0).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateViolation {
    pub metric: &'static str,
    pub required: Ratio,
    pub actual: Ratio,
}

impl fmt::Display for GateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.actual.is_defined() {
            write!(
                f,
                "{} = {} ({}) is below the required minimum {} ({})",
                self.metric,
                self.actual,
                self.actual.decimal().unwrap_or_default(),
                self.required,
                self.required.decimal().unwrap_or_default(),
            )
        } else {
            write!(f, "{} is undefined (0/0) and the undefined policy is fail", self.metric)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateResult {
    pub passed: bool,
    pub violations: Vec<GateViolation>,
}

/// Checks every set threshold against the exact ratio. `actual >= required`
/// passes (boundary equality passes); comparison is by u128
/// cross-multiplication inside [`Ratio::value_ge`].
pub fn evaluate_gates(report: &MetricsReport, config: &GateConfig) -> GateResult {
    let undefined = Ratio::undefined();
    let checks: [(&'static str, Option<Ratio>, Ratio); 3] = [
        ("ctf", config.min_ctf, report.ctf),
        ("mtf_system", config.min_mtf, report.mtf_system),
        ("reuse_ratio", config.min_reuse_ratio, report.reuse_ratio.unwrap_or(undefined)),
    ];
    let mut violations = Vec::new();
    for (metric, threshold, actual) in checks {
        let Some(required) = threshold else { continue };
        if !actual.is_defined() {
            if config.undefined_policy == UndefinedPolicy::Fail {
                violations.push(GateViolation { metric, required, actual });
            }
            continue;
        }
        if !actual.value_ge(&required) {
            violations.push(GateViolation { metric, required, actual });
        }
    }
    GateResult { passed: violations.is_empty(), violations }
}

/// Pretty JSON with a stable key order and a trailing newline.
pub fn render_json(report: &MetricsReport) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(report).expect("report serialization is infallible");
    bytes.push(b'\n');
    bytes
}

/// `metric,name,num,den,value` rows: summary counts, the three ratios,
/// per-class entries, undefined-MTF names, and category counts.
pub fn render_csv(report: &MetricsReport) -> Vec<u8> {
    let mut out = String::new();
    out.push_str("metric,name,num,den,value\n");
    let summary = [
        ("files", report.model_summary.files),
        ("classes", report.model_summary.classes),
        ("methods", report.model_summary.methods),
        ("parse_errors", report.model_summary.parse_errors),
    ];
    for (name, count) in summary {
        let _ = writeln!(out, "summary,{},{count},,", csv_field(name));
    }
    csv_ratio_row(&mut out, "ctf", "", &report.ctf);
    csv_ratio_row(&mut out, "mtf_system", "", &report.mtf_system);
    for (name, ratio) in &report.mtf_per_class {
        csv_ratio_row(&mut out, "mtf_per_class", name, ratio);
    }
    for name in &report.undefined_mtf {
        let _ = writeln!(out, "undefined_mtf,{},,,", csv_field(name));
    }
    if let Some(reuse) = &report.reuse_ratio {
        csv_ratio_row(&mut out, "reuse_ratio", "", reuse);
    }
    for (category, count) in &report.category_counts {
        let _ = writeln!(out, "category_count,{},{count},,", csv_field(category.as_str()));
    }
    out.into_bytes()
}

fn csv_ratio_row(out: &mut String, metric: &str, name: &str, ratio: &Ratio) {
    let value = ratio.decimal().unwrap_or_default();
    let _ = writeln!(
        out,
        "{metric},{},{},{},{value}",
        csv_field(name),
        ratio.num(),
        ratio.den(),
    );
}

/// RFC-4180-style quoting: fields containing commas, quotes, or newlines are
/// wrapped in double quotes with inner quotes doubled.
fn csv_field(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Aligned plain-text table: summary counts, system metrics, per-class MTF
/// (sorted by class name), and category counts.
pub fn render_table(report: &MetricsReport) -> String {
    let mut out = String::new();
    let s = &report.model_summary;
    let _ = writeln!(out, "files         {:>8}", s.files);
    let _ = writeln!(out, "classes       {:>8}", s.classes);
    let _ = writeln!(out, "methods       {:>8}", s.methods);
    let _ = writeln!(out, "parse errors  {:>8}", s.parse_errors);
    out.push('\n');

    let name_width = report
        .mtf_per_class
        .keys()
        .map(|k| k.len())
        .chain(report.category_counts.keys().map(|c| c.as_str().len()))
        .chain(["mtf_system".len()])
        .max()
        .unwrap_or(10)
        .max("metric".len());
    let _ = writeln!(out, "{:<name_width$}  {:>9}  {:>9}", "metric", "fraction", "value");
    table_ratio_row(&mut out, "ctf", &report.ctf, name_width);
    table_ratio_row(&mut out, "mtf_system", &report.mtf_system, name_width);
    if let Some(reuse) = &report.reuse_ratio {
        table_ratio_row(&mut out, "reuse_ratio", reuse, name_width);
    }
    if !report.mtf_per_class.is_empty() {
        out.push('\n');
        let _ = writeln!(out, "per-class mtf");
        for (name, ratio) in &report.mtf_per_class {
            table_ratio_row(&mut out, name, ratio, name_width);
        }
    }
    if !report.undefined_mtf.is_empty() {
        out.push('\n');
        let _ = writeln!(out, "undefined mtf (no methods): {}", report.undefined_mtf.join(", "));
    }
    out.push('\n');
    let _ = writeln!(out, "categories");
    for (category, count) in &report.category_counts {
        let _ = writeln!(out, "{:<name_width$}  {:>9}", category.as_str(), count);
    }
    out
}

fn table_ratio_row(out: &mut String, name: &str, ratio: &Ratio, name_width: usize) {
    let fraction = ratio.to_string();
    let value = ratio.decimal().unwrap_or_else(|| "undefined".to_string());
    let _ = writeln!(out, "{name:<name_width$}  {fraction:>9}  {value:>9}");
}
