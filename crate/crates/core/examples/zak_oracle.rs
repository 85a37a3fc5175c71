//! Zak transform checks and the frame-sum calibration of the bound constant.
//!
//!     cargo run --release --example zak_oracle

use std::f64::consts::PI;

use whframe::functions::{PiecewiseFunction, Restricted, StepFunction};
use whframe::intervals::BasicSupportSet;
use whframe::zak;

fn main() -> whframe::Result<()> {
    let g1 = StepFunction::from_real(&[(4.0, 0), (3.0, 1), (2.0, 3)])?.to_piecewise();
    let grid = zak::zak_transform(&g1, 256, 256)?;
    let base: BasicSupportSet = "[0,2pi)".parse()?;
    let (lo, hi) = zak::zak_extrema(&grid, &base)?;
    println!("g1: min |Zg|^2 = {lo:.6}, max |Zg|^2 = {hi:.6}");
    println!(
        "    times 2pi: {:.6} .. {:.6}",
        2.0 * PI * lo,
        2.0 * PI * hi
    );
    println!(
        "    commutation error (m,n)=(1,1): {:e}",
        zak::commutation_check(&g1, 1, 1, 128, 128)?
    );

    let blend = PiecewiseFunction::parse(include_str!("../fixtures/sine_blend.pw"))?;
    let e: BasicSupportSet = "[0,2pi) U [4pi,6pi) U [8pi,10pi)".parse()?;
    let restricted = Restricted {
        inner: &blend,
        set: &e,
    };
    println!(
        "blend window on E: unitarity error {:e}",
        zak::unitarity_check(&restricted, 1024, 1024)?
    );

    let chi = PiecewiseFunction::parse("[0,4pi) : 1")?;
    for n_w in [256, 512, 1024] {
        let study = zak::zak_min_doubling(&chi, &base, 64, n_w)?;
        println!(
            "chi[0,4pi): N_w = {n_w}: min {:e} -> {:e}",
            study.min, study.min_doubled
        );
    }

    let kappa = zak::calibrate_kappa()?;
    println!("calibrated kappa = {kappa:.6} (2pi = {:.6})", 2.0 * PI);
    println!(
        "ratio to 1/(2pi): {:.4} ((2pi)^2 = {:.4})",
        kappa * 2.0 * PI,
        4.0 * PI * PI
    );
    Ok(())
}
