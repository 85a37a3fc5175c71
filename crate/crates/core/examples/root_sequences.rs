//! Root sequences: coefficient lists whose polynomial on given widths
//! vanishes somewhere on the unit circle.
//!
//!     cargo run --example root_sequences

use num_complex::Complex64;
use whframe::frame_analysis::is_root_sequence;
use whframe::laurent::{LaurentPolynomial, DEFAULT_UNIT_TOL};

fn main() -> whframe::Result<()> {
    let values: Vec<Complex64> = [-2.0, -1.0, 1.0]
        .iter()
        .map(|&x| Complex64::new(x, 0.0))
        .collect();
    for widths in [[0, 1, 2], [0, 1, 3]] {
        let p = LaurentPolynomial::from_terms(widths.iter().copied().zip(values.iter().copied()));
        let verdict = p.unit_root_test(DEFAULT_UNIT_TOL)?;
        println!(
            "{{-2,-1,1}} on {widths:?}: p = {p}, root sequence: {}",
            is_root_sequence(&values, &widths, DEFAULT_UNIT_TOL)?
        );
        println!(
            "  {}",
            serde_json::to_string(&verdict.kind).expect("serializable")
        );
        for r in p.roots()? {
            println!("  root {r:.6}  |r| = {:.12}", r.norm());
        }
    }
    Ok(())
}
