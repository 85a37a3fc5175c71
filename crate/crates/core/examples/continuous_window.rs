//! A continuous piecewise window analyzed over ξ, plus a window given as a
//! plain closure.
//!
//!     cargo run --release --example continuous_window

use num_complex::Complex64;
use whframe::frame_analysis::{analyze_continuous, AnalysisOptions};
use whframe::functions::{FnWindow, PiecewiseFunction};
use whframe::intervals::BasicSupportSet;

fn main() -> whframe::Result<()> {
    let opts = AnalysisOptions::calibrated()?;

    let g = PiecewiseFunction::parse(include_str!("../fixtures/sine_blend.pw"))?;
    let e: BasicSupportSet = "[0,2pi) U [4pi,6pi) U [8pi,10pi)".parse()?;
    let r = analyze_continuous(&g, &e, &opts)?;
    let gen = &r.per_generator[0];
    println!("piecewise window on {e}: {:?}", r.verdict);
    println!(
        "  m_sq = {:.8} at xi = {:.6}, theta = {:.6}; M_sq = {:.6}",
        r.m_sq, gen.argmin_xi, gen.argmin_theta, r.M_sq
    );

    let sine = PiecewiseFunction::parse("[0,2pi) : sin(t)")?;
    let r = analyze_continuous(&sine, &"[0,2pi)".parse()?, &opts)?;
    println!("sin t on [0,2pi): {:?}", r.verdict);
    for w in &r.witnesses {
        println!("  zero chain: {}, xi = {:.10}", w.zero_chain, w.xi);
    }

    // any Fn(f64) -> Complex64 works as a window
    let gauss = FnWindow::new(|t: f64| Complex64::new((-(t - 3.0).powi(2) / 8.0).exp(), 0.0));
    let e: BasicSupportSet = "[0,4pi) U [6pi,7pi)".parse()?;
    let r = analyze_continuous(&gauss, &e, &opts)?;
    println!(
        "gaussian on {e}: {:?}, m_sq = {:.6e}, M_sq = {:.6}",
        r.verdict, r.m_sq, r.M_sq
    );
    Ok(())
}
