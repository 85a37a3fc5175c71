//! Weyl–Heisenberg (Gabor) frame analysis for the lattice with translation
//! step 2π and modulation step 1.
//!
//! Windows are indicator, step or continuous functions restricted to basic
//! support sets (finite unions of intervals with endpoints in `ℚ·π`). A
//! window generates a frame exactly when none of its characteristic chains
//! is a root sequence, i.e. when no chain polynomial
//! `Σ_j g(ξ + 2π n_j) z^{n_j}` vanishes on the unit circle; the frame bounds
//! are the extrema of `|Σ_j g(ξ + 2π n_j) z^{n_j}|²` up to a normalization
//! constant.
//!
//! Modules:
//! - [`intervals`]: exact set algebra and the 2π-translation decomposition.
//! - [`laurent`]: Laurent polynomials, roots, unit-root tests, circle extrema.
//! - [`functions`]: the expression language, piecewise windows and chains.
//! - [`frame_analysis`]: verdicts and frame bounds.
//! - [`zak`]: Zak-transform and frame-sum oracles used to cross-check them.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod frame_analysis;
pub mod functions;
pub mod intervals;
pub mod laurent;
mod quadrature;
pub mod zak;

pub use error::{Error, Result};
