//! Rendering of analysis results as JSON, CSV and plain text.
//!
//! JSON output is byte-stable: keys appear in a fixed order and relations
//! are written as token lists in declaration order.

use std::fmt::Write as _;

use serde::Serialize;

use crate::axioms::{AlgebraClass, AxiomReport, AxiomResult, AxiomStatus, Witness};
use crate::calculus::CalculusSpec;
use crate::closure::{ClosureResult, ClosureStatus};
use crate::metrics::{MetricsSeries, StopReason};
use crate::model::{ExtensionCheck, InvolutionCheck, SchemeVerdict, Strength, StrengthVerdict};

fn round1(x: f64) -> f64 {
    (x * 10.0).round() / 10.0
}

#[derive(Serialize)]
struct WitnessJson {
    args: Vec<String>,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct AxiomJson<'a> {
    id: &'a str,
    status: AxiomStatus,
    holds: bool,
    violations: u64,
    tested: u64,
    percent: f64,
    samples: Vec<WitnessJson>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    calculus: &'a str,
    axioms: Vec<AxiomJson<'a>>,
    classification: &'a [AlgebraClass],
}

fn witness_json(calc: &CalculusSpec, w: &Witness) -> WitnessJson {
    WitnessJson {
        args: w.args.iter().map(|r| calc.format_relation(r)).collect(),
        lhs: calc.format_relation(&w.lhs),
        rhs: calc.format_relation(&w.rhs),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// `{"calculus", "axioms": [{"id", "status", "holds", "violations", "tested", "percent", "samples"}], "classification"}`.
pub fn axiom_report_json(calc: &CalculusSpec, report: &AxiomReport) -> String {
    let axioms = report
        .results
        .iter()
        .map(|r| AxiomJson {
            id: r.axiom.name(),
            status: r.status,
            holds: r.holds(),
            violations: r.violations,
            tested: r.tested,
            percent: round1(r.percent()),
            samples: r.samples.iter().map(|w| witness_json(calc, w)).collect(),
        })
        .collect();
    to_json(&ReportJson {
        calculus: &report.calculus,
        axioms,
        classification: &report.classes,
    })
}

/// `✓` when the axiom holds, `n/a` when inapplicable, otherwise the percentage.
pub fn verdict_cell(r: &AxiomResult) -> String {
    match r.status {
        AxiomStatus::Holds => "✓".to_string(),
        AxiomStatus::Inapplicable => "n/a".to_string(),
        AxiomStatus::Violated => {
            let p = r.percent();
            if p < 1.0 {
                "<1%".to_string()
            } else {
                format!("{:.1}%", p)
            }
        }
    }
}

pub fn axiom_report_text(calc: &CalculusSpec, report: &AxiomReport) -> String {
    let mut out = format!("calculus {} ({} base relations)\n\n", report.calculus, calc.len());
    for r in &report.results {
        let _ = write!(out, "{:<8} {:>6}", r.axiom.name(), verdict_cell(r));
        if r.status == AxiomStatus::Violated {
            let _ = write!(out, "  {}/{}", r.violations, r.tested);
            if let Some(w) = r.samples.first() {
                let args: Vec<String> = w.args.iter().map(|a| calc.format_relation(a)).collect();
                let _ = write!(
                    out,
                    "  e.g. {}: {} vs {}",
                    args.join(" "),
                    calc.format_relation(&w.lhs),
                    calc.format_relation(&w.rhs)
                );
            }
        }
        out.push('\n');
    }
    let classes: Vec<&str> = report.classes.iter().map(|c| c.label()).collect();
    let _ = writeln!(
        out,
        "\nclassification: {}",
        if classes.is_empty() { "none".to_string() } else { classes.join(", ") }
    );
    out
}

#[derive(Serialize)]
struct MetricsRow {
    k: usize,
    #[serde(rename = "I_percent")]
    i_percent: f64,
    #[serde(rename = "O_percent")]
    o_percent: f64,
}

#[derive(Serialize)]
struct MetricsJson<'a> {
    calculus: &'a str,
    stop_reason: StopReason,
    rows: Vec<MetricsRow>,
}

fn rows(series: &MetricsSeries) -> Vec<MetricsRow> {
    series
        .information
        .iter()
        .zip(&series.overlap)
        .enumerate()
        .map(|(k, (i, o))| MetricsRow {
            k,
            i_percent: i * 100.0,
            o_percent: o * 100.0,
        })
        .collect()
}

pub fn metrics_json(series: &MetricsSeries) -> String {
    to_json(&MetricsJson {
        calculus: &series.calculus,
        stop_reason: series.stop_reason,
        rows: rows(series),
    })
}

/// Columns `k,I_percent,O_percent`.
pub fn metrics_csv(series: &MetricsSeries) -> String {
    let mut out = String::from("k,I_percent,O_percent\n");
    for r in rows(series) {
        let _ = writeln!(out, "{},{:.4},{:.4}", r.k, r.i_percent, r.o_percent);
    }
    out
}

pub fn metrics_text(series: &MetricsSeries) -> String {
    let mut out = format!("calculus {}\n\n  k  I (%)  O (%)\n", series.calculus);
    for r in rows(series) {
        let _ = writeln!(out, "{:>3} {:>6.1} {:>6.1}", r.k, r.i_percent, r.o_percent);
    }
    let reason = match series.stop_reason {
        StopReason::MaxK => "maximum k reached",
        StopReason::Threshold => "information content below threshold",
        StopReason::Capacity => "too many distinct relations; series truncated",
    };
    let _ = writeln!(out, "\nstopped: {reason}");
    out
}

#[derive(Serialize)]
struct ClosureJson<'a> {
    calculus: &'a str,
    status: ClosureStatus,
    witness: Option<[usize; 2]>,
    passes: usize,
    revisions: u64,
    warnings: &'a [String],
    matrix: Vec<Vec<String>>,
}

fn matrix(calc: &CalculusSpec, result: &ClosureResult) -> Vec<Vec<String>> {
    let net = &result.network;
    (0..net.len())
        .map(|i| (0..net.len()).map(|j| calc.format_relation(net.get(i, j))).collect())
        .collect()
}

pub fn closure_json(calc: &CalculusSpec, result: &ClosureResult) -> String {
    to_json(&ClosureJson {
        calculus: calc.name(),
        status: result.status,
        witness: result.witness.map(|(i, j)| [i, j]),
        passes: result.passes,
        revisions: result.revisions,
        warnings: &result.warnings,
        matrix: matrix(calc, result),
    })
}

pub fn closure_text(calc: &CalculusSpec, result: &ClosureResult) -> String {
    let status = match result.status {
        ClosureStatus::Closed => "closed (algebraically closed; consistency not implied)",
        ClosureStatus::Inconsistent => "inconsistent",
        ClosureStatus::PassLimit => "stopped at pass limit (not a fixpoint)",
    };
    let mut out = format!("status: {status}\n");
    if let Some((i, j)) = result.witness {
        let _ = writeln!(out, "empty constraint: {i} {j}");
    }
    for w in &result.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let _ = writeln!(out, "passes: {}, revisions: {}\n", result.passes, result.revisions);
    let net = &result.network;
    for i in 0..net.len() {
        for j in 0..net.len() {
            if i != j {
                let _ = writeln!(out, "{i} {} {j}", calc.format_relation(net.get(i, j)));
            }
        }
    }
    out
}

/// Everything `validate` reports about a calculus and a model.
#[derive(Debug, Clone, Serialize)]
pub struct Validation {
    pub calculus: String,
    pub model: Option<String>,
    pub scheme: SchemeJson,
    pub strength: Option<StrengthVerdict>,
    pub injective_interpretation: bool,
    pub involution: Option<InvolutionJson>,
    pub general_extension: Option<ExtensionJson>,
    /// The weak tables derived from the model, in `.qcalc` form.
    pub derived: Option<String>,
    /// Whether the derived tables equal the calculus tables.
    pub derived_matches: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SchemeJson {
    pub jepd: bool,
    pub has_identity: bool,
    pub converse_closed: bool,
    pub serial: bool,
    pub non_empty_bases: bool,
    pub partition_scheme: bool,
}

impl From<SchemeVerdict> for SchemeJson {
    fn from(v: SchemeVerdict) -> Self {
        SchemeJson {
            jepd: v.jepd,
            has_identity: v.has_identity,
            converse_closed: v.converse_closed,
            serial: v.serial,
            non_empty_bases: v.non_empty_bases,
            partition_scheme: v.partition_scheme(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvolutionJson {
    #[serde(flatten)]
    pub check: InvolutionCheck,
    pub consistent: bool,
}

impl From<InvolutionCheck> for InvolutionJson {
    fn from(check: InvolutionCheck) -> Self {
        InvolutionJson {
            consistent: check.consistent(),
            check,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionJson {
    pub holds: bool,
    pub exhaustive: bool,
    pub tested: usize,
    pub witness: Option<[String; 2]>,
}

impl ExtensionJson {
    pub fn new(calc: &CalculusSpec, e: &ExtensionCheck) -> Self {
        ExtensionJson {
            holds: e.holds,
            exhaustive: e.exhaustive,
            tested: e.tested,
            witness: e
                .witness
                .as_ref()
                .map(|(r, s)| [calc.format_relation(r), calc.format_relation(s)]),
        }
    }
}

pub fn validation_json(v: &Validation) -> String {
    to_json(v)
}

fn strength_line(s: Strength) -> String {
    match s {
        Strength::Strong => "strong".to_string(),
        Strength::None => "none (not even abstract)".to_string(),
        other => format!("{other} (not strong)"),
    }
}

pub fn validation_text(v: &Validation) -> String {
    let mut out = format!("calculus {}", v.calculus);
    if let Some(m) = &v.model {
        let _ = write!(out, ", model {m}");
    }
    out.push_str("\n\n");
    let s = &v.scheme;
    let yes = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(out, "JEPD: {}", yes(s.jepd));
    let _ = writeln!(out, "non-empty base relations: {}", yes(s.non_empty_bases));
    let _ = writeln!(out, "identity among base relations: {}", yes(s.has_identity));
    let _ = writeln!(out, "closed under converse: {}", yes(s.converse_closed));
    let _ = writeln!(out, "serial: {}", yes(s.serial));
    let _ = writeln!(out, "partition scheme: {}", yes(s.partition_scheme));
    let _ = writeln!(out, "injective interpretation: {}", yes(v.injective_interpretation));
    if let Some(st) = &v.strength {
        let _ = writeln!(out, "converse: {}", strength_line(st.converse));
        let _ = writeln!(out, "composition: {}", strength_line(st.composition));
    }
    if let Some(e) = &v.general_extension {
        let _ = writeln!(
            out,
            "general relations: {} ({} pairs, {})",
            if e.holds { "same level" } else { "level lost" },
            e.tested,
            if e.exhaustive { "exhaustive" } else { "sampled" }
        );
    }
    if let Some(l) = &v.involution {
        let _ = writeln!(
            out,
            "strong converse {} converse involution: {}",
            if l.check.strong_converse == l.check.involution_on_all { "agrees with" } else { "disagrees with" },
            if l.consistent { "consistent" } else { "INCONSISTENT" }
        );
    }
    if let Some(m) = v.derived_matches {
        let _ = writeln!(out, "derived tables equal calculus tables: {}", yes(m));
    }
    if let Some(d) = &v.derived {
        let _ = writeln!(out, "\n{d}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::analyze;
    use crate::catalog::builtin_calculus;
    use crate::metrics::{metrics_series, SeriesOptions};

    #[test]
    fn allen_json_all_hold() {
        let allen = builtin_calculus("allen").unwrap();
        let json = axiom_report_json(&allen, &analyze(&allen));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["calculus"], "allen");
        for a in v["axioms"].as_array().unwrap() {
            assert_eq!(a["status"], "holds", "{}", a["id"]);
            assert_eq!(a["samples"], serde_json::json!([]));
        }
        assert!(v["classification"].as_array().unwrap().contains(&"RA".into()));
    }

    #[test]
    fn json_is_stable() {
        let t2 = builtin_calculus("toy-t2").unwrap();
        assert_eq!(
            axiom_report_json(&t2, &analyze(&t2)),
            axiom_report_json(&t2, &analyze(&t2))
        );
    }

    #[test]
    fn point_calculus_metrics_json() {
        let pc = builtin_calculus("point-calculus").unwrap();
        let s = metrics_series(&pc, &SeriesOptions { max_k: 1, ..Default::default() });
        let v: serde_json::Value = serde_json::from_str(&metrics_json(&s)).unwrap();
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 2);
        assert!((rows[0]["I_percent"].as_f64().unwrap() - 66.667).abs() < 1e-3);
        assert!((rows[1]["I_percent"].as_f64().unwrap() - 51.852).abs() < 1e-3);
        assert!(metrics_csv(&s).starts_with("k,I_percent,O_percent\n0,66.6667,"));
    }
}
