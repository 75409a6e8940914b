//! Checks the axioms on a bundled calculus and prints the verdicts.
//!
//! cargo run --example analyze_axioms -- toy-t2

use qcalc::catalog::builtin_calculus;
use qcalc::report::verdict_cell;
use qcalc::{analyze, AxiomId};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "toy-t2".into());
    let calc = builtin_calculus(&name).expect("bundled calculus");
    let report = analyze(&calc);

    for result in &report.results {
        print!("{:8} {:>6}", result.axiom.name(), verdict_cell(result));
        if let Some(w) = result.samples.first() {
            let args: Vec<String> = w.args.iter().map(|r| calc.format_relation(r)).collect();
            print!("   e.g. at {}", args.join(" "));
        }
        println!();
    }
    let classes: Vec<&str> = report.classes.iter().map(|c| c.label()).collect();
    println!("classes: {}", classes.join(", "));
    println!("associative: {}", report.holds(AxiomId::Ra4));
}
