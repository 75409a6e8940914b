//! Builds a small point-calculus network, closes it, and compares the
//! verdict with exhaustive search in the bundled finite model.

use qcalc::catalog::builtin_model;
use qcalc::closure::{a_closure, brute_force_consistency, ClosureOptions, ConstraintNetwork, Schedule};

fn main() {
    let (pc, model) = builtin_model("point-calculus").unwrap();
    let lt = pc.relation(&["<"]).unwrap();
    let le = pc.relation(&["<", "="]).unwrap();

    let mut net = ConstraintNetwork::new(4, pc.len());
    net.set(0, 1, lt.clone());
    net.set(1, 2, le);
    net.set(2, 3, lt.clone());

    let opts = ClosureOptions::for_calculus(&pc);
    let res = a_closure(&pc, &net, &opts).unwrap();
    println!("status {:?} after {} passes", res.status, res.passes);
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| pc.format_relation(res.network.get(i, j))).collect();
        println!("  {}", row.join(" "));
    }

    // the work-list variant reaches the same fixpoint
    let queued = a_closure(&pc, &net, &opts.clone().with_schedule(Schedule::Queue)).unwrap();
    assert_eq!(queued.network, res.network);

    // closing the cycle back makes it unsatisfiable
    net.set(3, 0, lt);
    let res = a_closure(&pc, &net, &opts).unwrap();
    println!("with 3 < 0: {:?}, first empty cell {:?}", res.status, res.witness);
    println!("solvable in the model: {}", brute_force_consistency(&pc, &model, &net).unwrap());
}
