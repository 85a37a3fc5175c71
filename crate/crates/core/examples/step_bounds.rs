//! Frame bounds of step windows `Σ a_j χ_[2πn_j, 2π(n_j+1))` and the
//! reversal identity that makes two windows share them.
//!
//!     cargo run --example step_bounds -- "4:0,3:1,2:3"

use whframe::frame_analysis::{analyze_step, AnalysisOptions};
use whframe::functions::StepFunction;

fn main() -> whframe::Result<()> {
    let opts = AnalysisOptions::calibrated()?;
    let literals: Vec<String> = match std::env::args().nth(1) {
        Some(s) => vec![s],
        None => [
            "4:0,3:1,2:3",
            "2:0,3:2,4:3",
            "1:0,-2:1,3:3,-5:5",
            "-5:0,3:2,-2:4,1:5",
            "1:0,1:1",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect(),
    };
    for lit in literals {
        let s: StepFunction = lit.parse()?;
        let p = s.polynomial();
        let r = analyze_step(&s, &opts)?;
        println!("p(z) = {p}");
        println!("  reversed: {}", p.reverse());
        println!(
            "  {:?}: m_sq = {:.6}, M_sq = {:.6}, calibrated [{:.4}, {:.4}], 1/(2pi) convention [{:.4}, {:.4}]",
            r.verdict,
            r.m_sq,
            r.M_sq,
            r.bounds.calibrated.A0,
            r.bounds.calibrated.B0,
            r.bounds.paper.A0,
            r.bounds.paper.B0
        );
    }
    Ok(())
}
