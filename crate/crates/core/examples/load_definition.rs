//! Parses a calculus and a network from text, as read from `.qcalc` and
//! `.qcsp` files, and writes them back out.

use qcalc::io::{parse_calculus, parse_network, serialize_calculus, serialize_network};
use qcalc::{a_closure, ClosureOptions};

const CYCLIC: &str = r#"
# orientation of points on a circle: clockwise, same, counter-clockwise
calculus "tiny-cyclic"
relations cw eq ccw
identity eq

converse
cw (ccw)
eq (eq)
ccw (cw)

composition
cw cw (cw eq ccw)
cw eq (cw)
cw ccw (cw eq ccw)
eq cw (cw)
eq eq (eq)
eq ccw (ccw)
ccw cw (cw eq ccw)
ccw eq (ccw)
ccw ccw (cw eq ccw)
"#;

fn main() {
    let calc = match parse_calculus(CYCLIC) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    println!("{} with {} base relations", calc.name(), calc.len());

    let net = parse_network("network 3\n0 (eq) 1\n1 (cw) 2\n", &calc).unwrap();
    let res = a_closure(&calc, &net, &ClosureOptions::for_calculus(&calc)).unwrap();
    print!("{}", serialize_network(&res.network, &calc));

    // malformed input reports a line and column
    if let Err(e) = parse_calculus("calculus \"x\"\nrelations a b\nidentity c\n") {
        println!("error: {e}");
    }
    assert_eq!(parse_calculus(&serialize_calculus(&calc)).unwrap(), calc);
}
