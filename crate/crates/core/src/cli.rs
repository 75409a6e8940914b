//! Command-line front end.
//!
//! Exit codes: 0 on success (axioms hold, network closed), 1 when a
//! violation or inconsistency is found, 2 on usage, input or parse errors.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};

use crate::axioms::{analyze_with, AnalyzeOptions, AxiomId, AxiomStatus};
use crate::calculus::CalculusSpec;
use crate::catalog;
use crate::closure::{a_closure, ClosureOptions, ClosureStatus};
use crate::error::Error;
use crate::io::{parse_calculus, parse_model, parse_network, serialize_calculus};
use crate::metrics::{metrics_series, SeriesOptions, StopReason};
use crate::model::{
    check_general_extension, check_converse_involution, check_injective_interpretation, check_scheme, classify_strength, derive_tables,
    FiniteModel, Strength,
};
use crate::report::{self, ExtensionJson, Validation};

#[derive(Debug, Parser)]
#[command(name = "qcalc", version, about = "Analyze binary qualitative calculi")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check relation-algebra axioms and classify the calculus
    Analyze(AnalyzeArgs),
    /// Compute the algebraic closure of a constraint network
    Solve(SolveArgs),
    /// Information content of composition chains
    Metrics(MetricsArgs),
    /// Check a calculus against a finite model
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Builtin calculus name or path to a .qcalc file
    pub calculus: String,
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
    /// Seed for randomized checks
    #[arg(long, default_value_t = crate::DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated axioms to report, e.g. RA4,RA7sub,PL
    #[arg(long, value_delimiter = ',')]
    pub axioms: Option<Vec<AxiomId>>,
    /// Check RA10 on sampled general relations instead of base relations
    #[arg(long)]
    pub ra10_full: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub common: Common,
    /// Path to a .qcsp network file
    pub network: String,
    /// Override the RA7 verdict used to pick the storage scheme
    #[arg(long)]
    pub assume_ra7: Option<bool>,
    /// Override the RA9 verdict used to pick the refinement
    #[arg(long)]
    pub assume_ra9: Option<bool>,
    /// Stop after this many sweeps
    #[arg(long)]
    pub max_passes: Option<usize>,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    #[command(flatten)]
    pub common: Common,
    /// Largest number of compositions
    #[arg(long, default_value_t = 14)]
    pub max_k: usize,
    /// Stop once the average information content drops below this fraction
    #[arg(long, default_value_t = 0.005)]
    pub stop_below: f64,
    /// Emit CSV (columns k, I_percent, O_percent)
    #[arg(long, conflicts_with = "json")]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub common: Common,
    /// `builtin`, a bundled model name, or a path to a .qmodel file
    #[arg(long)]
    pub model: Option<String>,
    /// Also print the weak tables derived from the model
    #[arg(long)]
    pub derive: bool,
}

fn read(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_string(),
        source,
    })
}

/// A builtin name, else a definition file.
pub fn resolve_calculus(reference: &str) -> Result<CalculusSpec, Error> {
    if catalog::builtin_names().contains(&reference) && !Path::new(reference).is_file() {
        return Ok(catalog::builtin_calculus(reference)?);
    }
    Ok(parse_calculus(&read(reference)?)?)
}

/// `builtin` (the calculus's own model), a bundled model or calculus name, else a model file.
pub fn resolve_model(calc: &CalculusSpec, reference: &str) -> Result<FiniteModel, Error> {
    if reference == "builtin" {
        return Ok(catalog::builtin_model(calc.name())?.1);
    }
    if !Path::new(reference).is_file() {
        for name in catalog::builtin_names_with_model() {
            let (_, model) = catalog::builtin_model(name)?;
            if name == reference || model.name() == Some(reference) {
                let text = crate::io::serialize_model(&model);
                return Ok(parse_model(&text, calc)?);
            }
        }
    }
    Ok(parse_model(&read(reference)?, calc)?)
}

fn init_threads() {
    if let Some(n) = std::env::var("QSR_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call in the same process fails harmlessly
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    init_threads();
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, Error> {
    let w = |out: &mut dyn Write, s: String| {
        out.write_all(s.as_bytes()).map_err(|source| Error::Io {
            path: "<stdout>".into(),
            source,
        })
    };
    match command {
        Command::Analyze(a) => {
            let calc = resolve_calculus(&a.common.calculus)?;
            let opts = AnalyzeOptions {
                axioms: a.axioms.clone(),
                ra10_full: a.ra10_full,
                seed: a.common.seed,
                ..AnalyzeOptions::default()
            };
            let report = analyze_with(&calc, &opts);
            w(
                out,
                if a.common.json {
                    report::axiom_report_json(&calc, &report)
                } else {
                    report::axiom_report_text(&calc, &report)
                },
            )?;
            let violated = report.results.iter().any(|r| r.status == AxiomStatus::Violated);
            Ok(i32::from(violated))
        }
        Command::Solve(s) => {
            let calc = resolve_calculus(&s.common.calculus)?;
            let net = parse_network(&read(&s.network)?, &calc)?;
            let mut opts = ClosureOptions::for_calculus(&calc);
            if let Some(v) = s.assume_ra7 {
                opts.ra7_holds = v;
            }
            if let Some(v) = s.assume_ra9 {
                opts.ra9_holds = v;
            }
            opts.max_passes = s.max_passes;
            let result = a_closure(&calc, &net, &opts)?;
            w(
                out,
                if s.common.json {
                    report::closure_json(&calc, &result)
                } else {
                    report::closure_text(&calc, &result)
                },
            )?;
            Ok(i32::from(result.status == ClosureStatus::Inconsistent))
        }
        Command::Metrics(m) => {
            let calc = resolve_calculus(&m.common.calculus)?;
            let series = metrics_series(
                &calc,
                &SeriesOptions {
                    max_k: m.max_k,
                    stop_below: m.stop_below,
                    ..SeriesOptions::default()
                },
            );
            w(
                out,
                if m.common.json {
                    report::metrics_json(&series)
                } else if m.csv {
                    report::metrics_csv(&series)
                } else {
                    report::metrics_text(&series)
                },
            )?;
            Ok(i32::from(series.stop_reason == StopReason::Capacity))
        }
        Command::Validate(v) => {
            let calc = resolve_calculus(&v.common.calculus)?;
            let model = match &v.model {
                Some(r) => resolve_model(&calc, r)?,
                None => resolve_model(&calc, "builtin")?,
            };
            model.check_compatible(&calc)?;
            let scheme = check_scheme(&model);
            let (strength, involution, extension) = if scheme.jepd {
                (
                    Some(classify_strength(&calc, &model)?),
                    Some(check_converse_involution(&calc, &model, v.common.seed)?),
                    Some(check_general_extension(&calc, &model, 10_000, v.common.seed)?),
                )
            } else {
                (None, None, None)
            };
            let (derived, derived_matches) = if v.derive {
                let d = derive_tables(&model, &format!("{}-derived", calc.name()))?;
                let same = d.converse_table() == calc.converse_table()
                    && d.composition_table() == calc.composition_table()
                    && d.identity() == calc.identity();
                (Some(serialize_calculus(&d)), Some(same))
            } else {
                (None, None)
            };
            let failed = !scheme.jepd
                || strength.is_some_and(|s| s.converse == Strength::None || s.composition == Strength::None)
                || involution.is_some_and(|l| !l.consistent())
                || extension.as_ref().is_some_and(|e| !e.holds);
            let validation = Validation {
                calculus: calc.name().to_string(),
                model: model.name().map(str::to_string),
                scheme: scheme.into(),
                strength,
                injective_interpretation: check_injective_interpretation(&model),
                involution: involution.map(Into::into),
                general_extension: extension.as_ref().map(|e| ExtensionJson::new(&calc, e)),
                derived,
                derived_matches,
            };
            w(
                out,
                if v.common.json {
                    report::validation_json(&validation)
                } else {
                    report::validation_text(&validation)
                },
            )?;
            Ok(i32::from(failed))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("qcalc").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn analyze_exit_codes() {
        let (code, out, _) = run_str(&["analyze", "allen"]);
        assert_eq!(code, 0);
        assert!(out.contains("RA") && out.contains('✓'));
        let (code, out, _) = run_str(&["analyze", "toy-t2", "--json"]);
        assert_eq!(code, 1);
        assert!(out.contains("PLright"));
        let (code, _, err) = run_str(&["analyze", "missing.qcalc"]);
        assert_eq!(code, 2);
        assert!(err.contains("missing.qcalc"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["analyze", "allen", "--axioms", "RA99"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn axiom_selection() {
        let (code, out, _) = run_str(&["analyze", "toy-t1", "--axioms", "RA4,RA7sub", "--json"]);
        assert_eq!(code, 1);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let ids: Vec<_> = v["axioms"].as_array().unwrap().iter().map(|a| a["id"].clone()).collect();
        assert_eq!(ids, vec!["RA4", "RA7⊆"]);
    }

    #[test]
    fn metrics_command() {
        let (code, out, _) = run_str(&["metrics", "allen", "--max-k", "0", "--csv"]);
        assert_eq!(code, 0);
        assert!(out.contains("0,92.3077"));
    }

    #[test]
    fn validate_command() {
        let (code, out, _) = run_str(&["validate", "toy-t1", "--model", "builtin"]);
        assert_eq!(code, 0);
        assert!(out.contains("converse: weak (not strong)"), "{out}");
        let (_, out, _) = run_str(&["validate", "toy-t2"]);
        assert!(out.contains("converse: strong"));
        let (code, out, _) = run_str(&["validate", "point-calculus", "--model", "pc-0-3", "--derive", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["derived_matches"], true);
        let (code, _, _) = run_str(&["validate", "rcc8"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_str(&["validate", "allen", "--model", "pc-0-3"]);
        assert_eq!(code, 2);
    }
}
