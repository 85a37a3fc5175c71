//! Laurent polynomials with complex coefficients and their behaviour on the
//! unit circle.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

const TWO_PI: f64 = 2.0 * PI;

/// Default relative tolerance for unit-root decisions.
pub const DEFAULT_UNIT_TOL: f64 = 1e-9;

/// Grid points per unit of degree in the dense circle scan.
const GRID_PER_DEGREE: usize = 4096;

/// `Σ a_j z^{n_j}` with integer (possibly negative) exponents.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Complex64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_terms([(0, c)])
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up
    /// and zero coefficients are dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Complex64)>,
    {
        let mut map: BTreeMap<i64, Complex64> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        LaurentPolynomial { terms: map }
    }

    /// Real `(coefficient, exponent)` pairs.
    pub fn from_real(pairs: &[(f64, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|&(c, e)| (e, Complex64::new(c, 0.0))))
    }

    /// `Σ_j z^{n_j}`.
    pub fn indicator(exponents: &[i64]) -> Self {
        Self::from_terms(exponents.iter().map(|&e| (e, Complex64::new(1.0, 0.0))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `n_max − n_min`, the degree of the ordinary part.
    pub fn span(&self) -> usize {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(a), Some(b)) => (b - a) as usize,
            _ => 0,
        }
    }

    /// `Σ |a_j|`.
    pub fn coefficient_l1(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).sum()
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (e, c * s)))
    }

    /// Dense coefficients of `z^{-n_min} p(z)`, lowest degree first.
    pub fn ordinary_coefficients(&self) -> Vec<Complex64> {
        let Some(lo) = self.min_exponent() else {
            return Vec::new();
        };
        let mut dense = vec![Complex64::new(0.0, 0.0); self.span() + 1];
        for (&e, &c) in &self.terms {
            dense[(e - lo) as usize] = c;
        }
        dense
    }

    /// Value at an arbitrary nonzero complex point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.terms.iter().map(|(&e, &c)| c * z.powi(e as i32)).sum()
    }

    /// `Σ a_j e^{i n_j θ}` by direct summation.
    pub fn eval_circle(&self, theta: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&e, &c)| c * Complex64::from_polar(1.0, e as f64 * theta))
            .sum()
    }

    /// `Σ conj(a_j) z^{n_max + n_min − n_j}`; on the unit circle this has the
    /// same modulus as `p`.
    pub fn reverse(&self) -> Self {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Self::zero();
        };
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (hi + lo - e, c.conj()))
                .collect(),
        }
    }

    /// All integer-valued real coefficients, as exact integers.
    fn integer_coefficients(&self) -> Option<Vec<(i64, i128)>> {
        self.terms
            .iter()
            .map(|(&e, &c)| {
                let exact = c.im == 0.0 && c.re.fract() == 0.0 && c.re.abs() < 9.0e15;
                exact.then_some((e, c.re as i128))
            })
            .collect()
    }

    /// Roots of the ordinary polynomial `z^{-n_min} p(z)`, found by Aberth
    /// iteration and polished with Newton steps.
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        let coeffs = self.ordinary_coefficients();
        if coeffs.len() < 2 {
            return Err(Error::NoRoots);
        }
        Ok(polynomial_roots(&coeffs))
    }

    /// Extrema of `|p(e^{iθ})|²` over the circle.
    pub fn circle_extrema(&self) -> CircleExtrema {
        circle_extrema(self)
    }

    pub fn unit_root_test(&self, tol: f64) -> Result<UnitRootVerdict> {
        unit_root_test(self, tol)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().enumerate() {
            // real coefficients carry their sign into the separator
            let (sep, c) = match (i, c.im == 0.0 && c.re < 0.0) {
                (0, true) => ("-", -c),
                (0, false) => ("", c),
                (_, true) => (" - ", -c),
                (_, false) => (" + ", c),
            };
            write!(f, "{sep}")?;
            let coeff = if c.im != 0.0 {
                format!("({}{:+}i)", c.re, c.im)
            } else if c.re == 1.0 && e != 0 {
                String::new()
            } else {
                format!("{}", c.re)
            };
            match e {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}z")?,
                _ => write!(f, "{coeff}z^{e}")?,
            }
        }
        Ok(())
    }
}

/// Parses `"coeff:exponent"` pairs separated by commas, e.g. `"4:0,3:1,2:3"`.
/// Coefficients are `re` or `re+imi` / `re-imi`.
impl FromStr for LaurentPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::from_terms(parse_pairs(s)?))
    }
}

/// The `(exponent, coefficient)` pairs of a polynomial literal, in input order.
pub fn parse_pairs(s: &str) -> Result<Vec<(i64, Complex64)>> {
    let mut pairs = Vec::new();
    let mut offset = 0;
    for item in s.split(',') {
        let start = offset + (item.len() - item.trim_start().len());
        offset += item.len() + 1;
        let item = item.trim();
        let (coeff, exp) = item
            .split_once(':')
            .ok_or_else(|| Error::parse(start, format!("expected coeff:exponent, got {item:?}")))?;
        let exp: i64 = exp
            .trim()
            .parse()
            .map_err(|_| Error::parse(start, format!("bad exponent {:?}", exp.trim())))?;
        let coeff = parse_complex(coeff.trim())
            .ok_or_else(|| Error::parse(start, format!("bad coefficient {:?}", coeff.trim())))?;
        pairs.push((exp, coeff));
    }
    Ok(pairs)
}

fn parse_complex(s: &str) -> Option<Complex64> {
    if let Some(body) = s.strip_suffix('i') {
        // split at the last sign that is not an exponent marker or leading sign
        let bytes = body.as_bytes();
        let split = (1..bytes.len()).rev().find(|&k| {
            (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E')
        });
        return match split {
            Some(k) => {
                let re: f64 = body[..k].parse().ok()?;
                let im_txt = &body[k..];
                let im: f64 = match im_txt {
                    "+" => 1.0,
                    "-" => -1.0,
                    t => t.parse().ok()?,
                };
                Some(Complex64::new(re, im))
            }
            None => {
                let im: f64 = match body {
                    "" | "+" => 1.0,
                    "-" => -1.0,
                    t => t.parse().ok()?,
                };
                Some(Complex64::new(0.0, im))
            }
        };
    }
    s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0))
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Roots of `Σ coeffs[k] z^k` (`coeffs.len() ≥ 2`, nonzero leading term).
pub(crate) fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.len() > 1 && coeffs[coeffs.len() - 1] == Complex64::new(0.0, 0.0) {
        coeffs.pop();
    }
    // roots at the origin
    let zeros = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let coeffs = &coeffs[zeros..];
    let deg = coeffs.len() - 1;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if deg == 0 {
        return roots;
    }
    if deg == 1 {
        roots.push(-coeffs[0] / coeffs[1]);
        return roots;
    }

    let mut z = aberth(coeffs);
    for r in z.iter_mut() {
        *r = newton_polish(coeffs, *r);
    }
    roots.append(&mut z);
    roots
}

fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg].norm();
    // starting radius: geometric mean of root moduli
    let radius = (coeffs[0].norm() / lead).powf(1.0 / deg as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, TWO_PI * k as f64 / deg as f64 + 0.4))
        .collect();

    for _ in 0..2000 {
        let mut max_step: f64 = 0.0;
        for i in 0..deg {
            let (p, dp) = horner_with_derivative(coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = if dp.norm() == 0.0 {
                Complex64::new(1e-8, 1e-8) * z[i].norm().max(1.0)
            } else {
                p / dp
            };
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(1e12, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step <= 1e-15 {
            break;
        }
    }
    z
}

/// At most 50 Newton steps; a step is taken only if it does not increase the
/// residual, and iteration stops once `|Δr| ≤ 1e−14 · max(1, |r|)`.
fn newton_polish(coeffs: &[Complex64], mut r: Complex64) -> Complex64 {
    let mut res = horner(coeffs, r).norm();
    for _ in 0..50 {
        let (p, dp) = horner_with_derivative(coeffs, r);
        if dp.norm() == 0.0 || p.norm() == 0.0 {
            break;
        }
        let delta = p / dp;
        let next = r - delta;
        let next_res = horner(coeffs, next).norm();
        // stops on NaN as well
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(next_res <= res) {
            break;
        }
        r = next;
        res = next_res;
        if delta.norm() <= 1e-14 * r.norm().max(1.0) {
            break;
        }
    }
    r
}

/// Location of the smallest and largest values of `|p(e^{iθ})|²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CircleExtrema {
    pub min_sq: f64,
    pub argmin_theta: f64,
    pub max_sq: f64,
    pub argmax_theta: f64,
    /// Largest disagreement between the critical-point and dense-grid
    /// methods, relative to `max_sq`.
    pub method_gap: f64,
}

impl CircleExtrema {
    fn constant(value_sq: f64) -> Self {
        CircleExtrema {
            min_sq: value_sq,
            argmin_theta: 0.0,
            max_sq: value_sq,
            argmax_theta: 0.0,
            method_gap: 0.0,
        }
    }
}

/// Evaluates `|p(e^{iθ})|²`, switching between Horner on the dense ordinary
/// part and per-term phases for sparse polynomials.
pub(crate) struct CircleEvaluator {
    dense: Vec<Complex64>,
    sparse: Vec<(i64, Complex64)>,
    use_dense: bool,
}

impl CircleEvaluator {
    pub(crate) fn new(p: &LaurentPolynomial) -> Self {
        let shift = p.min_exponent().unwrap_or(0);
        let dense = p.ordinary_coefficients();
        let sparse: Vec<(i64, Complex64)> = p.terms().map(|(e, c)| (e - shift, c)).collect();
        let use_dense = sparse.len() * 4 > dense.len();
        CircleEvaluator {
            dense,
            sparse,
            use_dense,
        }
    }

    pub(crate) fn abs2(&self, theta: f64) -> f64 {
        let v = if self.use_dense {
            horner(&self.dense, Complex64::from_polar(1.0, theta))
        } else {
            self.sparse
                .iter()
                .map(|&(e, c)| c * Complex64::from_polar(1.0, e as f64 * theta))
                .sum()
        };
        v.norm_sqr()
    }
}

fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TWO_PI);
    if t >= TWO_PI {
        0.0
    } else {
        t
    }
}

pub fn circle_extrema(p: &LaurentPolynomial) -> CircleExtrema {
    if p.is_zero() {
        return CircleExtrema::constant(0.0);
    }
    let span = p.span();
    let eval = CircleEvaluator::new(p);
    if p.len() == 1 {
        return CircleExtrema::constant(eval.abs2(0.0));
    }

    let critical = critical_point_extrema(p, &eval);
    let grid = grid_extrema(&eval, span);

    let scale = critical.max_sq.max(grid.max_sq).max(f64::MIN_POSITIVE);
    let gap =
        ((critical.min_sq - grid.min_sq).abs()).max((critical.max_sq - grid.max_sq).abs()) / scale;

    // both candidates are attained values, so the better one is kept
    let (min_sq, argmin_theta) = if grid.min_sq < critical.min_sq {
        (grid.min_sq, grid.argmin_theta)
    } else {
        (critical.min_sq, critical.argmin_theta)
    };
    let (max_sq, argmax_theta) = if grid.max_sq > critical.max_sq {
        (grid.max_sq, grid.argmax_theta)
    } else {
        (critical.max_sq, critical.argmax_theta)
    };
    CircleExtrema {
        min_sq,
        argmin_theta,
        max_sq,
        argmax_theta,
        method_gap: gap,
    }
}

/// The critical-point method alone; `method_gap` is zero.
pub fn extrema_by_critical_points(p: &LaurentPolynomial) -> CircleExtrema {
    if p.len() <= 1 {
        return circle_extrema(p);
    }
    critical_point_extrema(p, &CircleEvaluator::new(p))
}

/// The dense-grid method alone; `method_gap` is zero.
pub fn extrema_by_grid(p: &LaurentPolynomial) -> CircleExtrema {
    if p.len() <= 1 {
        return circle_extrema(p);
    }
    grid_extrema(&CircleEvaluator::new(p), p.span())
}

/// Extrema over the zeros of `q′(θ)` where `q(θ) = |p(e^{iθ})|²`.
///
/// `q(θ) = Σ_{k=−D}^{D} c_k e^{ikθ}` with `c_k` the autocorrelation of the
/// coefficients, so `q′` vanishes exactly at the unit-circle roots of the
/// degree-2D polynomial `Σ k c_k z^{k+D}`.
pub(crate) fn critical_point_extrema(
    p: &LaurentPolynomial,
    eval: &CircleEvaluator,
) -> CircleExtrema {
    let coeffs = p.ordinary_coefficients();
    let d = coeffs.len() - 1;
    let mut auto = vec![Complex64::new(0.0, 0.0); 2 * d + 1];
    let nonzero: Vec<(usize, Complex64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() != 0.0)
        .map(|(i, &c)| (i, c))
        .collect();
    for &(j, a) in &nonzero {
        for &(l, b) in &nonzero {
            auto[j + d - l] += a * b.conj();
        }
    }
    let derivative: Vec<Complex64> = auto
        .iter()
        .enumerate()
        .map(|(idx, &c)| c * (idx as f64 - d as f64))
        .collect();

    let mut candidates: Vec<f64> = vec![0.0];
    if derivative.iter().any(|c| c.norm() > 0.0) {
        for r in polynomial_roots(&derivative) {
            if r.norm() == 0.0 {
                continue;
            }
            let theta = wrap_angle(r.arg());
            candidates.push(theta);
            candidates.push(polish_critical_angle(&auto, d, theta));
        }
    }

    let mut best = CircleExtrema {
        min_sq: f64::INFINITY,
        argmin_theta: 0.0,
        max_sq: f64::NEG_INFINITY,
        argmax_theta: 0.0,
        method_gap: 0.0,
    };
    for theta in candidates {
        let v = eval.abs2(theta);
        if v < best.min_sq {
            best.min_sq = v;
            best.argmin_theta = theta;
        }
        if v > best.max_sq {
            best.max_sq = v;
            best.argmax_theta = theta;
        }
    }
    best
}

/// Newton iteration on the real function `q′(θ)`.
fn polish_critical_angle(auto: &[Complex64], d: usize, mut theta: f64) -> f64 {
    for _ in 0..8 {
        let mut d1 = 0.0;
        let mut d2 = 0.0;
        for (idx, &c) in auto.iter().enumerate() {
            let k = idx as f64 - d as f64;
            let term = c * Complex64::from_polar(1.0, k * theta);
            // q′ = Σ i k c_k e^{ikθ},  q″ = −Σ k² c_k e^{ikθ}
            d1 += -k * term.im;
            d2 += -k * k * term.re;
        }
        if d2 == 0.0 || !d1.is_finite() {
            break;
        }
        let step = d1 / d2;
        if !step.is_finite() || step.abs() > 0.1 {
            break;
        }
        theta -= step;
        if step.abs() < 1e-15 {
            break;
        }
    }
    wrap_angle(theta)
}

/// Dense scan of `4096 · max(1, D)` angles; every discrete local extremum is
/// refined by ternary search down to an angle bracket of 1e−12.
pub(crate) fn grid_extrema(eval: &CircleEvaluator, span: usize) -> CircleExtrema {
    let n = GRID_PER_DEGREE * span.max(1);
    let h = TWO_PI / n as f64;
    let values: Vec<f64> = (0..n).map(|k| eval.abs2(k as f64 * h)).collect();

    let mut min_idx = 0;
    let mut max_idx = 0;
    for k in 0..n {
        if values[k] < values[min_idx] {
            min_idx = k;
        }
        if values[k] > values[max_idx] {
            max_idx = k;
        }
    }
    let mut minima = vec![min_idx];
    let mut maxima = vec![max_idx];
    for k in 0..n {
        let prev = values[(k + n - 1) % n];
        let next = values[(k + 1) % n];
        let v = values[k];
        if v < prev && v <= next {
            minima.push(k);
        }
        if v > prev && v >= next {
            maxima.push(k);
        }
    }
    minima.sort_unstable();
    minima.dedup();
    maxima.sort_unstable();
    maxima.dedup();

    let mut out = CircleExtrema {
        min_sq: values[min_idx],
        argmin_theta: min_idx as f64 * h,
        max_sq: values[max_idx],
        argmax_theta: max_idx as f64 * h,
        method_gap: 0.0,
    };
    for k in minima {
        let center = k as f64 * h;
        let theta = ternary(|t| eval.abs2(t), center - h, center + h);
        let v = eval.abs2(theta);
        if v < out.min_sq {
            out.min_sq = v;
            out.argmin_theta = wrap_angle(theta);
        }
    }
    for k in maxima {
        let center = k as f64 * h;
        let theta = ternary(|t| -eval.abs2(t), center - h, center + h);
        let v = eval.abs2(theta);
        if v > out.max_sq {
            out.max_sq = v;
            out.argmax_theta = wrap_angle(theta);
        }
    }
    out
}

/// Minimizes a unimodal function on `[a, b]`.
pub(crate) fn ternary(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    while b - a > 1e-12 {
        let m1 = a + (b - a) / 3.0;
        let m2 = b - (b - a) / 3.0;
        if f(m1) <= f(m2) {
            b = m2;
        } else {
            a = m1;
        }
        if m1 == a && m2 == b {
            break;
        }
    }
    0.5 * (a + b)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UnitRootKind {
    /// `p` vanishes at `e^{iθ}`; `exact` marks a zero found in integer
    /// arithmetic.
    HasUnitRoot {
        theta: f64,
        exact: bool,
    },
    /// `min |p|` on the circle, divided by `Σ|a_j|`.
    NoUnitRoot {
        margin: f64,
    },
    Marginal {
        min_modulus: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitRootVerdict {
    #[serde(flatten)]
    pub kind: UnitRootKind,
    pub extrema: CircleExtrema,
}

impl UnitRootVerdict {
    pub fn has_unit_root(&self) -> bool {
        matches!(self.kind, UnitRootKind::HasUnitRoot { .. })
    }

    pub fn is_marginal(&self) -> bool {
        matches!(self.kind, UnitRootKind::Marginal { .. })
    }
}

/// Decides whether `p` vanishes somewhere on the unit circle.
///
/// With `s = Σ|a_j|` and `m = min |p(e^{iθ})|`: a unit root when `m ≤ tol·s`,
/// none when `m ≥ 10·tol·s`, marginal in between. Integer polynomials are
/// first checked at `z = ±1` exactly. The root finder is consulted as a
/// second opinion and any conflict is reported as an error.
pub fn unit_root_test(p: &LaurentPolynomial, tol: f64) -> Result<UnitRootVerdict> {
    let extrema = circle_extrema(p);
    if p.is_zero() {
        return Ok(UnitRootVerdict {
            kind: UnitRootKind::HasUnitRoot {
                theta: 0.0,
                exact: true,
            },
            extrema,
        });
    }
    if let Some(ints) = p.integer_coefficients() {
        let at_one: i128 = ints.iter().map(|&(_, c)| c).sum();
        let at_minus_one: i128 = ints
            .iter()
            .map(|&(e, c)| if e.rem_euclid(2) == 0 { c } else { -c })
            .sum();
        let exact_root = if at_one == 0 {
            Some(0.0)
        } else if at_minus_one == 0 {
            Some(PI)
        } else {
            None
        };
        if let Some(theta) = exact_root {
            return Ok(UnitRootVerdict {
                kind: UnitRootKind::HasUnitRoot { theta, exact: true },
                extrema,
            });
        }
    }

    let s = p.coefficient_l1();
    let m = extrema.min_sq.max(0.0).sqrt();
    let mut kind = if m <= tol * s {
        UnitRootKind::HasUnitRoot {
            theta: extrema.argmin_theta,
            exact: false,
        }
    } else if m >= 10.0 * tol * s {
        UnitRootKind::NoUnitRoot { margin: m / s }
    } else {
        UnitRootKind::Marginal { min_modulus: m }
    };

    if p.span() >= 1 {
        let roots = p.roots()?;
        let nearest = roots
            .iter()
            .copied()
            .filter(|r| r.norm() > 0.0)
            .min_by(|a, b| (a.norm() - 1.0).abs().total_cmp(&(b.norm() - 1.0).abs()));
        if let Some(r) = nearest {
            let off = (r.norm() - 1.0).abs();
            match kind {
                _ if off <= tol => match kind {
                    UnitRootKind::NoUnitRoot { margin } => {
                        return Err(Error::Inconsistent(format!(
                            "root {r} lies on the unit circle but min |p| has relative margin {margin:e}"
                        )));
                    }
                    UnitRootKind::Marginal { .. } => {
                        kind = UnitRootKind::HasUnitRoot {
                            theta: wrap_angle(r.arg()),
                            exact: false,
                        };
                    }
                    UnitRootKind::HasUnitRoot { .. } => {}
                },
                UnitRootKind::HasUnitRoot { .. } if off > 1e-4 => {
                    return Err(Error::Inconsistent(format!(
                        "min |p| on the circle is {m:e} but the nearest root {r} is {off:e} off the circle"
                    )));
                }
                _ => {}
            }
        }
    }
    Ok(UnitRootVerdict { kind, extrema })
}
