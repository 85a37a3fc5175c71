use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::functions::expr::{parse_expr, Expr};
use crate::intervals::{BasicSupportSet, Interval, RationalPi, SetParser};
use crate::laurent::{parse_pairs, LaurentPolynomial};

/// A complex-valued function of one real variable that can be sampled.
///
/// `support` is `None` for functions that are not compactly supported.
/// `breakpoints` lists points where the function may fail to be smooth;
/// quadrature splits there.
pub trait Window: Sync {
    fn value(&self, t: f64) -> Result<Complex64>;

    fn support(&self) -> Option<(f64, f64)>;

    fn breakpoints(&self) -> Vec<f64> {
        self.support().map(|(a, b)| vec![a, b]).unwrap_or_default()
    }
}

impl<W: Window + ?Sized> Window for &W {
    fn value(&self, t: f64) -> Result<Complex64> {
        (**self).value(t)
    }
    fn support(&self) -> Option<(f64, f64)> {
        (**self).support()
    }
    fn breakpoints(&self) -> Vec<f64> {
        (**self).breakpoints()
    }
}

/// Adapts a closure into a [`Window`].
pub struct FnWindow<F> {
    f: F,
    support: Option<(f64, f64)>,
    breakpoints: Vec<f64>,
}

impl<F> FnWindow<F>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    pub fn new(f: F) -> Self {
        FnWindow {
            f,
            support: None,
            breakpoints: Vec::new(),
        }
    }

    /// The closure must vanish outside `[lo, hi]`.
    pub fn compact(f: F, lo: f64, hi: f64, mut breakpoints: Vec<f64>) -> Self {
        breakpoints.push(lo);
        breakpoints.push(hi);
        FnWindow {
            f,
            support: Some((lo, hi)),
            breakpoints,
        }
    }
}

impl<F> Window for FnWindow<F>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    fn value(&self, t: f64) -> Result<Complex64> {
        if let Some((lo, hi)) = self.support {
            if t < lo || t > hi {
                return Ok(Complex64::new(0.0, 0.0));
            }
        }
        Ok((self.f)(t))
    }
    fn support(&self) -> Option<(f64, f64)> {
        self.support
    }
    fn breakpoints(&self) -> Vec<f64> {
        self.breakpoints.clone()
    }
}

/// The product `g · χ_E` with half-open membership in `E`.
pub struct Restricted<'a, W: ?Sized> {
    pub inner: &'a W,
    pub set: &'a BasicSupportSet,
}

impl<W: Window + ?Sized> Window for Restricted<'_, W> {
    fn value(&self, t: f64) -> Result<Complex64> {
        if self.set.contains(t) {
            self.inner.value(t)
        } else {
            Ok(Complex64::new(0.0, 0.0))
        }
    }

    fn support(&self) -> Option<(f64, f64)> {
        let (lo, hi) = self.set.hull();
        Some((lo.to_f64(), hi.to_f64()))
    }

    fn breakpoints(&self) -> Vec<f64> {
        let (lo, hi) = self.support().expect("sets are bounded");
        let mut pts: Vec<f64> = self
            .inner
            .breakpoints()
            .into_iter()
            .filter(|&t| t > lo && t < hi)
            .collect();
        for p in self.set.parts() {
            pts.push(p.lo().to_f64());
            pts.push(p.hi().to_f64());
        }
        pts
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Piece {
    pub interval: Interval,
    pub expr: Expr,
}

/// A function given by expressions on disjoint intervals, zero elsewhere.
#[derive(Clone, Debug, PartialEq)]
pub struct PiecewiseFunction {
    pieces: Vec<Piece>,
}

impl PiecewiseFunction {
    pub fn new(mut pieces: Vec<Piece>) -> Result<Self> {
        pieces.sort_by_key(|p| p.interval.lo());
        for w in pieces.windows(2) {
            if w[0].interval.intersects_pointwise(&w[1].interval) {
                return Err(Error::InvalidInterval(format!(
                    "pieces {} and {} overlap",
                    w[0].interval, w[1].interval
                )));
            }
        }
        Ok(PiecewiseFunction { pieces })
    }

    /// The constant `c` on a single interval.
    pub fn constant_on(interval: Interval, c: Complex64) -> Self {
        PiecewiseFunction {
            pieces: vec![Piece {
                interval,
                expr: Expr::constant(c),
            }],
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Parses the text format: one `<interval> : <expression>` per line,
    /// `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pieces = Vec::new();
        let mut line_start = 0;
        for line in text.split_inclusive('\n') {
            let base = line_start;
            line_start += line.len();
            let body = line.trim_end_matches(['\n', '\r']);
            let trimmed = body.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let lead = body.len() - trimmed.len();
            let mut p = SetParser::new(trimmed);
            let interval = p.interval().map_err(|e| shift_offset(e, base + lead))?;
            p.skip_ws();
            let rest = &trimmed[p.pos..];
            let Some(expr_text) = rest.strip_prefix(':') else {
                return Err(Error::parse(
                    base + lead + p.pos,
                    "expected ':' after interval",
                ));
            };
            let expr_offset = base + lead + p.pos + 1;
            let expr = parse_expr(expr_text).map_err(|e| shift_offset(e, expr_offset))?;
            pieces.push(Piece { interval, expr });
        }
        if pieces.is_empty() {
            return Err(Error::parse(0, "no pieces defined"));
        }
        Self::new(pieces)
    }

    /// Index of the piece containing `t`, honoring closedness flags.
    pub fn piece_at(&self, t: f64) -> Option<usize> {
        self.pieces.iter().position(|p| p.interval.contains(t))
    }

    /// Jumps larger than 1e−9 where one piece ends exactly where the next
    /// begins.
    pub fn boundary_mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (k, w) in self.pieces.windows(2).enumerate() {
            if w[0].interval.hi() != w[1].interval.lo() {
                continue;
            }
            let t = w[0].interval.hi().to_f64();
            if let (Ok(a), Ok(b)) = (w[0].expr.eval(t), w[1].expr.eval(t)) {
                let jump = (a - b).norm();
                if jump > 1e-9 {
                    out.push(format!(
                        "pieces {k} and {} disagree at t = {} by {jump:.3e}",
                        k + 1,
                        w[0].interval.hi()
                    ));
                }
            }
        }
        out
    }
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

impl Window for PiecewiseFunction {
    fn value(&self, t: f64) -> Result<Complex64> {
        match self.piece_at(t) {
            Some(k) => self.pieces[k].expr.eval(t).map_err(|message| Error::Eval {
                t,
                piece: k,
                message,
            }),
            None => Ok(Complex64::new(0.0, 0.0)),
        }
    }

    fn support(&self) -> Option<(f64, f64)> {
        let lo = self.pieces.first()?.interval.lo();
        let hi = self.pieces.iter().map(|p| p.interval.hi()).max()?;
        Some((lo.to_f64(), hi.to_f64()))
    }

    fn breakpoints(&self) -> Vec<f64> {
        self.pieces
            .iter()
            .flat_map(|p| [p.interval.lo().to_f64(), p.interval.hi().to_f64()])
            .collect()
    }
}

impl fmt::Display for PiecewiseFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pieces {
            writeln!(f, "{} : {}", p.interval, p.expr)?;
        }
        Ok(())
    }
}

impl FromStr for PiecewiseFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// `g = Σ a_j χ_{[0,2π) + 2π n_j}` with strictly increasing widths `n_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct StepFunction {
    steps: Vec<(Complex64, i64)>,
}

impl StepFunction {
    pub fn new(mut steps: Vec<(Complex64, i64)>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Precondition(
                "step function needs at least one step".into(),
            ));
        }
        steps.sort_by_key(|&(_, n)| n);
        if steps.windows(2).any(|w| w[0].1 == w[1].1) {
            return Err(Error::Precondition("step widths must be distinct".into()));
        }
        Ok(StepFunction { steps })
    }

    pub fn from_real(steps: &[(f64, i64)]) -> Result<Self> {
        Self::new(
            steps
                .iter()
                .map(|&(a, n)| (Complex64::new(a, 0.0), n))
                .collect(),
        )
    }

    pub fn steps(&self) -> &[(Complex64, i64)] {
        &self.steps
    }

    pub fn widths(&self) -> Vec<i64> {
        self.steps.iter().map(|&(_, n)| n).collect()
    }

    /// `Σ a_j z^{n_j}`.
    pub fn polynomial(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.steps.iter().map(|&(a, n)| (n, a)))
    }

    pub fn to_piecewise(&self) -> PiecewiseFunction {
        let pieces = self
            .steps
            .iter()
            .map(|&(a, n)| Piece {
                interval: Interval::half_open(
                    RationalPi::two_pi_times(n),
                    RationalPi::two_pi_times(n + 1),
                )
                .expect("unit period"),
                expr: Expr::constant(a),
            })
            .collect();
        PiecewiseFunction { pieces }
    }
}

/// Same literal as polynomials: `"coeff:width,..."`.
impl FromStr for StepFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let pairs = parse_pairs(s)?;
        Self::new(pairs.into_iter().map(|(n, a)| (a, n)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    pub(crate) const BLEND: &str = "\
# continuous window used with E = [0,2pi) U [4pi,6pi) U [8pi,10pi)
[0,2pi)          : sin(2*t)/2
[2pi,15/4pi)     : sin(16/7*(t-2*pi))
[15/4pi,27/4pi)  : 2*(sin(t)+cos(t))
[27/4pi,8pi)     : -4*sin(6/5*(t-27/4*pi))
[8pi,10pi]       : 4
";

    #[test]
    fn parses_and_evaluates_example_window() {
        let g = PiecewiseFunction::parse(BLEND).unwrap();
        assert_eq!(g.pieces().len(), 5);
        assert_eq!(g.value(0.0).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(g.value(9.0 * PI).unwrap(), Complex64::new(4.0, 0.0));
        assert_eq!(g.value(-1.0).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(g.value(11.0 * PI).unwrap(), Complex64::new(0.0, 0.0));
        let v = g.value(5.0 * PI).unwrap().re;
        assert!((v - 2.0 * ((5.0 * PI).sin() + (5.0 * PI).cos())).abs() < 1e-12);
        assert!(
            g.boundary_mismatches().is_empty(),
            "{:?}",
            g.boundary_mismatches()
        );
    }

    #[test]
    fn file_errors_carry_offsets() {
        let err = PiecewiseFunction::parse("# c\n[0,pi) : 1\n[pi,2pi) 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 24, .. }), "{err:?}");
        let err = PiecewiseFunction::parse("[0,pi) : ((t)\n").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 12, .. }), "{err:?}");
        assert!(PiecewiseFunction::parse("[0,pi] : 1\n[pi,2pi) : 2").is_err());
        assert!(PiecewiseFunction::parse("# nothing\n").is_err());
    }

    #[test]
    fn runtime_errors_name_location() {
        let g = PiecewiseFunction::parse("[0,pi) : 1/t").unwrap();
        match g.value(0.0) {
            Err(Error::Eval { piece: 0, t, .. }) => assert_eq!(t, 0.0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn endpoint_semantics_are_pointwise() {
        let g = PiecewiseFunction::parse("(0,pi] : 1\n(pi,2pi) : 2").unwrap();
        assert_eq!(g.value(0.0).unwrap().re, 0.0);
        assert_eq!(g.value(PI).unwrap().re, 1.0);
        let jumpy = PiecewiseFunction::parse("[0,pi) : 1\n[pi,2pi) : 2").unwrap();
        assert_eq!(jumpy.boundary_mismatches().len(), 1);
    }

    #[test]
    fn step_functions_become_pieces() {
        let g1 = StepFunction::from_real(&[(4.0, 0), (3.0, 1), (2.0, 3)]).unwrap();
        let pw = g1.to_piecewise();
        assert_eq!(pw.pieces().len(), 3);
        assert_eq!(pw.pieces()[2].interval.to_string(), "[6pi,8pi)");
        assert_eq!(pw.value(7.0 * PI).unwrap().re, 2.0);
        assert_eq!(pw.value(5.0 * PI).unwrap().re, 0.0);

        let one = StepFunction::from_real(&[(1.0, 0)]).unwrap().to_piecewise();
        assert_eq!(one.pieces()[0].interval.to_string(), "[0,2pi)");

        let g4: StepFunction = "-5:0,3:2,-2:4,1:5".parse().unwrap();
        let pw = g4.to_piecewise();
        assert_eq!(pw.value(0.5).unwrap().re, -5.0);
        assert_eq!(pw.value(9.0 * PI).unwrap().re, -2.0);
        assert_eq!(pw.value(11.0 * PI).unwrap().re, 1.0);
        assert!(StepFunction::from_real(&[(1.0, 2), (2.0, 2)]).is_err());
    }
}
