//! Splits a basic support set into 2π-translation generators.
//!
//!     cargo run --example decompose_set -- "(5/2pi,7/2pi] U (4pi,11/2pi]"

use whframe::intervals::BasicSupportSet;

fn main() -> whframe::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "[3pi,7pi)".to_string());
    let e: BasicSupportSet = text.parse()?;
    let d = e.decompose();
    println!("E = {e}, measure {}", e.measure());
    for (i, g) in d.generators.iter().enumerate() {
        let translates: Vec<String> = g.translates().map(|t| t.to_string()).collect();
        println!(
            "  E_{i} = {}  widths {:?}  translates {}",
            g.base,
            g.widths,
            translates.join(" ")
        );
    }
    assert_eq!(d.reconstruct()?, e);
    println!("tiles [0,2pi): {}", d.covers_line());
    Ok(())
}
