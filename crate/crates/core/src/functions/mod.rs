//! Windows `g`: piecewise expressions, step functions, and the
//! characteristic chains they induce over a decomposition.

pub mod expr;
pub mod piecewise;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

pub use expr::{parse_expr, BinOp, Expr, Func};
pub use piecewise::{FnWindow, Piece, PiecewiseFunction, Restricted, StepFunction, Window};

use crate::error::{Error, Result};
use crate::intervals::Generator;
use crate::laurent::LaurentPolynomial;

/// The values `g(ξ + 2π n_j)` over a generator's step-widths.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacteristicChain {
    pub xi: f64,
    pub widths: Vec<i64>,
    pub values: Vec<Complex64>,
}

impl CharacteristicChain {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.norm() == 0.0)
    }

    /// `Σ_j values_j z^{widths_j}`; zero values are dropped.
    pub fn polynomial(&self) -> LaurentPolynomial {
        chain_poly(self)
    }
}

/// Samples `g` along the translates of `gen` through `xi`, which must lie in
/// the closure of the generator base.
pub fn chain<W: Window + ?Sized>(g: &W, gen: &Generator, xi: f64) -> Result<CharacteristicChain> {
    if !gen.base.closure_contains(xi) {
        return Err(Error::Precondition(format!(
            "xi = {xi} is outside the closure of generator base {}",
            gen.base
        )));
    }
    let values = gen
        .widths
        .iter()
        .map(|&n| g.value(xi + 2.0 * PI * n as f64))
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacteristicChain {
        xi,
        widths: gen.widths.clone(),
        values,
    })
}

pub fn chain_poly(c: &CharacteristicChain) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(c.widths.iter().copied().zip(c.values.iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intervals::{Interval, RationalPi};

    fn gen(lo: RationalPi, hi: RationalPi, widths: &[i64]) -> Generator {
        Generator::new(Interval::half_open(lo, hi).unwrap(), widths.to_vec()).unwrap()
    }

    fn blend() -> PiecewiseFunction {
        PiecewiseFunction::parse(
            "[0,2pi) : sin(2*t)/2\n[2pi,15/4pi) : sin(16/7*(t-2*pi))\n\
             [15/4pi,27/4pi) : 2*(sin(t)+cos(t))\n[27/4pi,8pi) : -4*sin(6/5*(t-27/4*pi))\n\
             [8pi,10pi] : 4\n",
        )
        .unwrap()
    }

    #[test]
    fn chains_of_example_window() {
        let g = blend();
        let period = gen(RationalPi::ZERO, RationalPi::TWO_PI, &[0, 2, 4]);
        let c = chain(&g, &period, 0.0).unwrap();
        let expect = [0.0, 2.0, 4.0];
        for (v, e) in c.values.iter().zip(expect) {
            assert!((v - Complex64::new(e, 0.0)).norm() < 1e-12, "{v}");
        }
        let p = chain_poly(&c);
        let terms: Vec<i64> = p.terms().map(|(e, _)| e).collect();
        // sin(0)/2 is exactly zero
        assert_eq!(terms, vec![2, 4]);

        // the closure endpoint is admissible
        let c = chain(&g, &period, 2.0 * PI).unwrap();
        assert!((c.values[2] - Complex64::new(4.0, 0.0)).norm() < 1e-12);
        assert!(chain(&g, &period, 2.0 * PI + 1e-9).is_err());
    }

    #[test]
    fn zero_chain_of_sine() {
        let g = PiecewiseFunction::parse("[0,2pi) : sin(t)").unwrap();
        let period = gen(RationalPi::ZERO, RationalPi::TWO_PI, &[0]);
        let c = chain(&g, &period, 0.0).unwrap();
        assert!(c.is_zero());
        assert!(chain_poly(&c).is_zero());
    }

    #[test]
    fn chains_vary_continuously() {
        // the window is smooth on every translate of [0,2pi], so neighbouring
        // ξ samples give chain values at most L·δ apart
        let g = blend();
        let period = gen(RationalPi::ZERO, RationalPi::TWO_PI, &[0, 2, 4]);
        let delta = 2.0 * PI / 511.0;
        let chains: Vec<_> = (0..512)
            .map(|k| chain(&g, &period, (k as f64 * delta).min(2.0 * PI)).unwrap())
            .collect();
        let mut lipschitz: f64 = 0.0;
        for w in chains.windows(2) {
            for (a, b) in w[0].values.iter().zip(&w[1].values) {
                lipschitz = lipschitz.max((a - b).norm() / delta);
            }
        }
        // |d/dt| of the pieces is at most 2·√2
        assert!(lipschitz <= 2.0 * 2f64.sqrt() * (1.0 + 1e-9), "{lipschitz}");
    }

    #[test]
    fn constant_window_chain() {
        let one = FnWindow::new(|_| Complex64::new(1.0, 0.0));
        let g = gen(RationalPi::ZERO, RationalPi::new(1, 1), &[2, 3]);
        for xi in [0.0, 0.5, PI] {
            let c = chain(&one, &g, xi).unwrap();
            assert_eq!(c.values, vec![Complex64::new(1.0, 0.0); 2]);
            assert_eq!(chain_poly(&c), LaurentPolynomial::indicator(&[2, 3]));
        }
    }
}
