//! Decides whether indicator windows χ_E generate frames.
//!
//!     cargo run --example frame_set_verdict

use whframe::frame_analysis::{analyze_frame_set, AnalysisOptions};
use whframe::intervals::BasicSupportSet;

fn main() -> whframe::Result<()> {
    let opts = AnalysisOptions::calibrated()?;
    for text in [
        "[0,2pi)",
        "[0,4pi)",
        "[0,2pi) U [4pi,6pi)",
        "[0,2pi) U [4pi,6pi) U [6pi,8pi)",
        "[3pi,7pi)",
        "(5/2pi,7/2pi] U (4pi,11/2pi]",
    ] {
        let e: BasicSupportSet = text.parse()?;
        let r = analyze_frame_set(&e, &opts)?;
        let b = r.frame_bounds();
        print!(
            "{text:<32} {:?}  A0 = {:.4}  B0 = {:.4}",
            r.verdict, b.A0, b.B0
        );
        if let Some(w) = r.witness {
            print!(
                "  (generator {} vanishes at theta = {:.4})",
                w.generator, w.theta
            );
        }
        println!();
        for note in &r.notes {
            println!("    note: {note}");
        }
    }
    Ok(())
}
