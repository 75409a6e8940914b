//! Widens a non-associative composition table until it is associative.

use qcalc::axioms::coarsen_to_associativity;
use qcalc::catalog::builtin_calculus;
use qcalc::{check_axiom, AxiomId};

fn main() {
    let calc = builtin_calculus("toy-t2").unwrap();
    println!("before: RA4 holds = {}", check_axiom(&calc, AxiomId::Ra4).holds());

    let fixed = coarsen_to_associativity(&calc);
    println!("after:  RA4 holds = {}", check_axiom(&fixed, AxiomId::Ra4).holds());

    let n = calc.len();
    for r in 0..n {
        for s in 0..n {
            let (old, new) = (calc.compose_base(r, s), fixed.compose_base(r, s));
            if old != new {
                println!(
                    "  {} ⋄ {}: {} -> {}",
                    calc.base_name(r),
                    calc.base_name(s),
                    calc.format_relation(old),
                    fixed.format_relation(new)
                );
            }
        }
    }
}
