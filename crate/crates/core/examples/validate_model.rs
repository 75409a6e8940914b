//! Checks a calculus against a finite interpretation and derives the
//! tables the interpretation itself induces.

use qcalc::catalog::builtin_model;
use qcalc::model::{check_converse_involution, check_scheme, classify_strength, derive_tables};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "toy-t1".into());
    let (calc, model) = builtin_model(&name).expect("bundled calculus with a model");

    let scheme = check_scheme(&model);
    println!("jepd {}  partition scheme {}", scheme.jepd, scheme.partition_scheme());

    let strength = classify_strength(&calc, &model).unwrap();
    println!("converse {:?}  composition {:?}", strength.converse, strength.composition);

    let inv = check_converse_involution(&calc, &model, qcalc::DEFAULT_SEED).unwrap();
    println!("strong converse {}  involutive {}", inv.strong_converse, inv.involution_on_all);

    let derived = derive_tables(&model, "derived").unwrap();
    for r in 0..derived.len() {
        for s in 0..derived.len() {
            let given = calc.compose_base(r, s);
            let minimal = derived.compose_base(r, s);
            if given != minimal {
                println!(
                    "  {} ⋄ {}: table {} but the model only needs {}",
                    calc.base_name(r),
                    calc.base_name(s),
                    calc.format_relation(given),
                    derived.format_relation(minimal)
                );
            }
        }
    }
}
