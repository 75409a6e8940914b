//! Prints how fast composition chains lose information, per bundled calculus.

use qcalc::catalog::builtin_calculus;
use qcalc::metrics::{metrics_series, SeriesOptions};

fn main() {
    let opts = SeriesOptions::default();
    for name in ["point-calculus", "rcc5", "rcc8", "allen"] {
        let calc = builtin_calculus(name).unwrap();
        let series = metrics_series(&calc, &opts);
        let row: Vec<String> = series.information.iter().map(|i| format!("{:.1}", i * 100.0)).collect();
        println!("{name:15} {}  ({:?})", row.join(" "), series.stop_reason);
    }
}
