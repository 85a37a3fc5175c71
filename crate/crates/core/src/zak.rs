//! Numerical oracles that do not go through chain polynomials: the Zak
//! transform on a uniform grid and truncated frame-operator sums computed
//! from inner products with modulated translates.
//!
//! Conventions: `Zf(t, w) = (2π)^{-1/2} Σ_n f(t + 2πn) e^{inw}` on
//! `[0, 2π)²`, and the frame family is `e^{imt} g(t − 2πn)`.

use std::f64::consts::PI;
use std::io::Write;
use std::sync::OnceLock;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functions::{StepFunction, Window};
use crate::intervals::BasicSupportSet;
use crate::quadrature::{adaptive, composite_nodes, segments, NODES_PER_PANEL};

const TWO_PI: f64 = 2.0 * PI;

/// Quadrature nodes per 2π period for inner products.
pub const NODES_PER_PERIOD: usize = 4096;

/// Modulation truncation used for step-function windows.
pub const M_MAX_STEP: i64 = 512;

/// Modulation truncation used for smooth windows.
pub const M_MAX_SMOOTH: i64 = 128;

/// Size of the seeded test corpus.
pub const CORPUS_SIZE: usize = 20;

pub const CORPUS_SEED: u64 = 0x5eed_2f1a;

/// Grid minima at or below this are zero to working precision; further
/// halving cannot be observed.
pub const ZAK_ZERO_FLOOR: f64 = 1e-24;

/// Zak transform sampled at `t_a = a·2π/N_t`, `w_b = b·2π/N_w`.
#[derive(Clone, Debug)]
pub struct ZakGrid {
    pub n_t: usize,
    pub n_w: usize,
    pub t_step: f64,
    pub w_step: f64,
    /// Translates `n_lo..=n_hi` that were summed.
    pub support_range: (i64, i64),
    /// Row-major: `values[a * n_w + b]`.
    pub values: Vec<Complex64>,
}

impl ZakGrid {
    pub fn t(&self, a: usize) -> f64 {
        a as f64 * self.t_step
    }

    pub fn w(&self, b: usize) -> f64 {
        b as f64 * self.w_step
    }

    pub fn at(&self, a: usize, b: usize) -> Complex64 {
        self.values[a * self.n_w + b]
    }

    /// CSV with header `t,w,re,im,abs2`, row-major over the grid.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "t,w,re,im,abs2")?;
        for a in 0..self.n_t {
            for b in 0..self.n_w {
                let v = self.at(a, b);
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    self.t(a),
                    self.w(b),
                    v.re,
                    v.im,
                    v.norm_sqr()
                )?;
            }
        }
        Ok(())
    }
}

/// Translates `n` for which `[0, 2π) + 2πn` can meet `[lo, hi]`.
fn translate_range(support: (f64, f64)) -> (i64, i64) {
    let lo = (support.0 / TWO_PI).floor() as i64 - 1;
    let hi = (support.1 / TWO_PI).ceil() as i64;
    (lo, hi)
}

fn compact_support<W: Window + ?Sized>(f: &W) -> Result<(f64, f64)> {
    f.support().ok_or_else(|| {
        Error::Precondition("the Zak oracle needs a compactly supported function".into())
    })
}

fn unit_roots_table(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|k| Complex64::from_polar(1.0, TWO_PI * k as f64 / n as f64))
        .collect()
}

pub fn zak_transform<W: Window + ?Sized>(f: &W, n_t: usize, n_w: usize) -> Result<ZakGrid> {
    if n_t < 8 || n_w < 8 {
        return Err(Error::Precondition(format!(
            "Zak grid needs at least 8 points per axis, got {n_t}x{n_w}"
        )));
    }
    let range = translate_range(compact_support(f)?);
    let table = unit_roots_table(n_w);
    let norm = 1.0 / TWO_PI.sqrt();
    let t_step = TWO_PI / n_t as f64;

    let mut values = vec![Complex64::new(0.0, 0.0); n_t * n_w];
    values
        .par_chunks_mut(n_w)
        .enumerate()
        .try_for_each(|(a, row)| -> Result<()> {
            let t = a as f64 * t_step;
            let samples: Vec<(i64, Complex64)> = (range.0..=range.1)
                .map(|n| Ok((n, f.value(t + TWO_PI * n as f64)?)))
                .filter(|r| !matches!(r, Ok((_, v)) if v.norm() == 0.0))
                .collect::<Result<_>>()?;
            for (b, slot) in row.iter_mut().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for &(n, s) in &samples {
                    let k = (n * b as i64).rem_euclid(n_w as i64) as usize;
                    acc += s * table[k];
                }
                *slot = acc * norm;
            }
            Ok(())
        })?;

    Ok(ZakGrid {
        n_t,
        n_w,
        t_step,
        w_step: TWO_PI / n_w as f64,
        support_range: range,
        values,
    })
}

/// `Zf(t, w)` at a single point.
pub fn zak_at<W: Window + ?Sized>(f: &W, t: f64, w: f64) -> Result<Complex64> {
    let range = translate_range(compact_support(f)?);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in range.0..=range.1 {
        acc += f.value(t + TWO_PI * n as f64)? * Complex64::from_polar(1.0, n as f64 * w);
    }
    Ok(acc / TWO_PI.sqrt())
}

/// `‖f‖²` by adaptive quadrature between breakpoints.
pub fn l2_norm_sq<W: Window + ?Sized>(f: &W) -> Result<f64> {
    let (lo, hi) = compact_support(f)?;
    let cuts = segments(lo, hi, f.breakpoints());
    let mut total = 0.0;
    for seg in cuts.windows(2) {
        let mut integrand = |t: f64| f.value(t).map(|v| v.norm_sqr());
        total += adaptive(&mut integrand, seg[0], seg[1], 1e-13)?;
    }
    Ok(total)
}

/// Relative gap `|‖Zf‖² − ‖f‖²| / ‖f‖²`.
///
/// `‖Zf‖²` integrates `|Zf|²` over the `N_w` uniform frequencies and over
/// `t` with Gauss–Legendre panels (about `N_t` nodes in total) that break at
/// every jump of `t ↦ f(t + 2πn)`.
pub fn unitarity_check<W: Window + ?Sized>(f: &W, n_t: usize, n_w: usize) -> Result<f64> {
    let (lo, hi) = compact_support(f)?;
    let range = translate_range((lo, hi));
    let direct = l2_norm_sq(f)?;

    let reduced = f
        .breakpoints()
        .into_iter()
        .map(|t| t.rem_euclid(TWO_PI))
        .filter(|&t| t < TWO_PI);
    let cuts = segments(0.0, TWO_PI, reduced);
    let mut nodes = Vec::new();
    for seg in cuts.windows(2) {
        let share = (seg[1] - seg[0]) / TWO_PI * n_t as f64 / NODES_PER_PANEL as f64;
        nodes.extend(composite_nodes(seg[0], seg[1], share.ceil() as usize));
    }

    let table = unit_roots_table(n_w);
    let w_step = TWO_PI / n_w as f64;
    let zak_norm: f64 = nodes
        .par_iter()
        .map(|&(t, weight)| -> Result<f64> {
            let samples: Vec<(i64, Complex64)> = (range.0..=range.1)
                .map(|n| Ok((n, f.value(t + TWO_PI * n as f64)?)))
                .collect::<Result<_>>()?;
            let mut row = 0.0;
            for b in 0..n_w {
                let mut acc = Complex64::new(0.0, 0.0);
                for &(n, s) in &samples {
                    acc += s * table[(n * b as i64).rem_euclid(n_w as i64) as usize];
                }
                row += acc.norm_sqr() / TWO_PI;
            }
            Ok(weight * row * w_step)
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .sum();

    if direct == 0.0 {
        return Err(Error::Precondition("function has zero norm".into()));
    }
    Ok((zak_norm - direct).abs() / direct)
}

/// `x ↦ e^{imx} g(x − 2πn)`.
pub struct ModulatedTranslate<'a, W: ?Sized> {
    pub inner: &'a W,
    pub m: i64,
    pub n: i64,
}

impl<W: Window + ?Sized> Window for ModulatedTranslate<'_, W> {
    fn value(&self, x: f64) -> Result<Complex64> {
        let g = self.inner.value(x - TWO_PI * self.n as f64)?;
        Ok(g * Complex64::from_polar(1.0, self.m as f64 * x))
    }

    fn support(&self) -> Option<(f64, f64)> {
        let shift = TWO_PI * self.n as f64;
        self.inner.support().map(|(a, b)| (a + shift, b + shift))
    }

    fn breakpoints(&self) -> Vec<f64> {
        let shift = TWO_PI * self.n as f64;
        self.inner
            .breakpoints()
            .into_iter()
            .map(|t| t + shift)
            .collect()
    }
}

/// Max over the grid of `|Z(M_m T_{2πn} g) − e^{i(mt + nw)} Zg|`.
pub fn commutation_check<W: Window + ?Sized>(
    g: &W,
    m: i64,
    n: i64,
    n_t: usize,
    n_w: usize,
) -> Result<f64> {
    let shifted = ModulatedTranslate { inner: g, m, n };
    let lhs = zak_transform(&shifted, n_t, n_w)?;
    let rhs = zak_transform(g, n_t, n_w)?;
    let mut worst: f64 = 0.0;
    for a in 0..n_t {
        for b in 0..n_w {
            let phase = Complex64::from_polar(1.0, m as f64 * rhs.t(a) + n as f64 * rhs.w(b));
            worst = worst.max((lhs.at(a, b) - phase * rhs.at(a, b)).norm());
        }
    }
    Ok(worst)
}

/// `(min |Z|², max |Z|²)` over grid points with `t_a` in `mask`.
pub fn zak_extrema(grid: &ZakGrid, mask: &BasicSupportSet) -> Result<(f64, f64)> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for a in 0..grid.n_t {
        if !mask.contains(grid.t(a)) {
            continue;
        }
        for b in 0..grid.n_w {
            let v = grid.at(a, b).norm_sqr();
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    if lo > hi {
        return Err(Error::Precondition(format!(
            "mask {mask} selects no grid points"
        )));
    }
    Ok((lo, hi))
}

/// Grid minimum of `|Zg|²` over `mask` at `N_w` and at `2·N_w`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DoublingStudy {
    pub n_w: usize,
    pub min: f64,
    pub min_doubled: f64,
    /// The minimum at least halved, or both values are at the zero floor.
    pub halves: bool,
}

pub fn zak_min_doubling<W: Window + ?Sized>(
    g: &W,
    mask: &BasicSupportSet,
    n_t: usize,
    n_w: usize,
) -> Result<DoublingStudy> {
    let coarse = zak_extrema(&zak_transform(g, n_t, n_w)?, mask)?.0;
    let fine = zak_extrema(&zak_transform(g, n_t, 2 * n_w)?, mask)?.0;
    Ok(DoublingStudy {
        n_w,
        min: coarse,
        min_doubled: fine,
        halves: fine <= 0.5 * coarse || (fine <= ZAK_ZERO_FLOOR && coarse <= ZAK_ZERO_FLOOR),
    })
}

fn row_min<W: Window + ?Sized>(g: &W, t: f64, n_w: usize) -> Result<f64> {
    let mut lo = f64::INFINITY;
    for b in 0..n_w {
        lo = lo.min(zak_at(g, t, b as f64 * TWO_PI / n_w as f64)?.norm_sqr());
    }
    Ok(lo)
}

/// Like [`zak_min_doubling`] along the single row `t`, e.g. at a witness
/// `ξ*` that is not a grid point.
pub fn zak_row_doubling<W: Window + ?Sized>(g: &W, t: f64, n_w: usize) -> Result<DoublingStudy> {
    let coarse = row_min(g, t, n_w)?;
    let fine = row_min(g, t, 2 * n_w)?;
    Ok(DoublingStudy {
        n_w,
        min: coarse,
        min_doubled: fine,
        halves: fine <= 0.5 * coarse || (fine <= ZAK_ZERO_FLOOR && coarse <= ZAK_ZERO_FLOOR),
    })
}

/// Smooth compactly supported probe: `f(x) = Σ_n c_n a(x − 2πn)` where
/// `a(u) = bump(u) · Σ_k d_k e^{iku}` lives on `[lo, hi] ⊆ [0, 2π]`.
#[derive(Clone, Debug)]
pub struct TestFunction {
    lo: f64,
    hi: f64,
    harmonics: Vec<(i32, Complex64)>,
    translates: Vec<(i64, Complex64)>,
}

fn bump(s: f64) -> f64 {
    // s in (0, 1)
    let u = 2.0 * s - 1.0;
    if u.abs() >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - u * u)).exp()
    }
}

impl TestFunction {
    pub fn new(
        lo: f64,
        hi: f64,
        harmonics: Vec<(i32, Complex64)>,
        translates: Vec<(i64, Complex64)>,
    ) -> Self {
        TestFunction {
            lo,
            hi,
            harmonics,
            translates,
        }
    }

    /// A probe whose Zak transform is `a(t) · B(w − w0)` with `B` a Hann
    /// weighted kernel of order `order`; raising the order narrows the
    /// frequency bandwidth around `w0`.
    pub fn zak_concentrated(lo: f64, hi: f64, w0: f64, order: i64) -> Self {
        let translates = (-order..=order)
            .map(|n| {
                let h = (PI * n as f64 / (2.0 * (order + 1) as f64)).cos().powi(2);
                (n, Complex64::from_polar(h, -(n as f64) * w0))
            })
            .collect();
        TestFunction {
            lo,
            hi,
            harmonics: vec![(0, Complex64::new(1.0, 0.0))],
            translates,
        }
    }

    fn profile(&self, u: f64) -> Complex64 {
        if u <= self.lo || u >= self.hi {
            return Complex64::new(0.0, 0.0);
        }
        let env = bump((u - self.lo) / (self.hi - self.lo));
        let wave: Complex64 = self
            .harmonics
            .iter()
            .map(|&(k, d)| d * Complex64::from_polar(1.0, k as f64 * u))
            .sum();
        wave * env
    }
}

impl Window for TestFunction {
    fn value(&self, x: f64) -> Result<Complex64> {
        Ok(self
            .translates
            .iter()
            .map(|&(n, c)| c * self.profile(x - TWO_PI * n as f64))
            .sum())
    }

    fn support(&self) -> Option<(f64, f64)> {
        let first = self.translates.iter().map(|t| t.0).min()?;
        let last = self.translates.iter().map(|t| t.0).max()?;
        Some((
            self.lo + TWO_PI * first as f64,
            self.hi + TWO_PI * last as f64,
        ))
    }

    fn breakpoints(&self) -> Vec<f64> {
        self.translates
            .iter()
            .flat_map(|&(n, _)| {
                let s = TWO_PI * n as f64;
                [self.lo + s, self.hi + s]
            })
            .collect()
    }
}

/// Seeded probes: test `k` sits on `bases[k % bases.len()]`, carries a
/// random trigonometric polynomial of degree ≤ 4 and is copied onto up to
/// three random translates with `|n| ≤ max_shift`.
pub fn test_corpus(
    bases: &[(f64, f64)],
    count: usize,
    seed: u64,
    max_shift: i64,
) -> Vec<TestFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = move |rng: &mut ChaCha8Rng| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    };
    (0..count)
        .map(|k| {
            let (lo, hi) = bases[k % bases.len()];
            let degree = rng.gen_range(0..=4);
            let harmonics = (-degree..=degree).map(|j| (j, unit(&mut rng))).collect();
            let copies = if max_shift == 0 {
                1
            } else {
                rng.gen_range(1..=3)
            };
            let mut shifts: Vec<i64> = (0..copies)
                .map(|_| rng.gen_range(-max_shift..=max_shift))
                .collect();
            shifts.sort_unstable();
            shifts.dedup();
            let translates = shifts.into_iter().map(|n| (n, unit(&mut rng))).collect();
            TestFunction::new(lo, hi, harmonics, translates)
        })
        .collect()
}

/// Frame-sum estimates over a set of probes.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct OracleBounds {
    pub A_est: f64,
    pub B_est: f64,
    /// `(M_max, N_max)`: modulation cut-off and largest translate used.
    pub trunc: (i64, i64),
    pub test_count: usize,
}

/// `S(f) = Σ_{|m|≤M} Σ_n |⟨f, e^{imt} g(t − 2πn)⟩|² / ‖f‖²` for every probe;
/// translates are summed exactly over the support overlap.
pub fn frame_sum<W, T>(g: &W, f: &T, m_max: i64) -> Result<(f64, i64)>
where
    W: Window + ?Sized,
    T: Window + ?Sized,
{
    let (g_lo, g_hi) = compact_support(g)?;
    let (f_lo, f_hi) = compact_support(f)?;
    let norm = l2_norm_sq(f)?;
    if norm == 0.0 {
        return Err(Error::Precondition("probe has zero norm".into()));
    }
    let n_from = ((f_lo - g_hi) / TWO_PI).floor() as i64;
    let n_to = ((f_hi - g_lo) / TWO_PI).ceil() as i64;
    let g_breaks = g.breakpoints();
    let f_breaks = f.breakpoints();

    let mut total = 0.0;
    let mut n_max = 0;
    let width = (2 * m_max + 1) as usize;
    for n in n_from..=n_to {
        let shift = TWO_PI * n as f64;
        let lo = f_lo.max(g_lo + shift);
        let hi = f_hi.min(g_hi + shift);
        if hi <= lo {
            continue;
        }
        let cuts = segments(
            lo,
            hi,
            f_breaks
                .iter()
                .copied()
                .chain(g_breaks.iter().map(|t| t + shift)),
        );
        let mut inner = vec![Complex64::new(0.0, 0.0); width];
        let mut touched = false;
        for seg in cuts.windows(2) {
            let panels = ((seg[1] - seg[0]) / TWO_PI * NODES_PER_PERIOD as f64
                / NODES_PER_PANEL as f64)
                .ceil() as usize;
            for (t, w) in composite_nodes(seg[0], seg[1], panels) {
                let integrand = f.value(t)? * g.value(t - shift)?.conj() * w;
                if integrand.norm() == 0.0 {
                    continue;
                }
                touched = true;
                // e^{-imt} for m = -M..=M
                let step = Complex64::from_polar(1.0, -t);
                let mut phase = Complex64::from_polar(1.0, m_max as f64 * t);
                for slot in inner.iter_mut() {
                    *slot += integrand * phase;
                    phase *= step;
                }
            }
        }
        if touched {
            n_max = n_max.max(n.abs());
            total += inner.iter().map(|c| c.norm_sqr()).sum::<f64>();
        }
    }
    Ok((total / norm, n_max))
}

pub fn frame_sum_bounds<W, T>(g: &W, tests: &[T], m_max: i64) -> Result<OracleBounds>
where
    W: Window + ?Sized,
    T: Window,
{
    if tests.is_empty() {
        return Err(Error::Precondition(
            "frame sums need at least one probe".into(),
        ));
    }
    let sums: Vec<(f64, i64)> = tests
        .par_iter()
        .map(|f| frame_sum(g, f, m_max))
        .collect::<Result<_>>()?;
    let a = sums.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let b = sums.iter().map(|s| s.0).fold(f64::NEG_INFINITY, f64::max);
    let n_max = sums.iter().map(|s| s.1).max().unwrap_or(0);
    Ok(OracleBounds {
        A_est: a,
        B_est: b,
        trunc: (m_max, n_max),
        test_count: tests.len(),
    })
}

/// Measures the frame bound of `χ_{[0,2π)}`, whose chain polynomial is the
/// constant 1, so the result is the factor between `|chain polynomial|²`
/// extrema and actual frame bounds.
pub fn calibrate_kappa() -> Result<f64> {
    calibrate_kappa_scaled(Complex64::new(1.0, 0.0))
}

/// Calibration against `c · χ_{[0,2π)}`, divided by `|c|²`.
pub fn calibrate_kappa_scaled(c: Complex64) -> Result<f64> {
    let g = StepFunction::new(vec![(c, 0)])?.to_piecewise();
    let tests = test_corpus(&[(0.0, TWO_PI)], CORPUS_SIZE, CORPUS_SEED, 0);
    let est = frame_sum_bounds(&g, &tests, M_MAX_STEP)?;
    let spread = (est.B_est - est.A_est) / est.A_est;
    // also rejects NaN
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(spread <= 0.02) {
        return Err(Error::Calibration(format!(
            "frame sums range over [{}, {}] ({:.2}% spread)",
            est.A_est,
            est.B_est,
            100.0 * spread
        )));
    }
    Ok(est.A_est / c.norm_sqr())
}

/// [`calibrate_kappa`], computed once per process.
pub fn calibrated_kappa() -> Result<f64> {
    static KAPPA: OnceLock<Result<f64>> = OnceLock::new();
    KAPPA.get_or_init(calibrate_kappa).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::PiecewiseFunction;

    fn indicator(set: &str) -> PiecewiseFunction {
        let e: BasicSupportSet = set.parse().unwrap();
        let pieces = e
            .parts()
            .iter()
            .map(|&interval| crate::functions::Piece {
                interval,
                expr: crate::functions::Expr::Num(1.0),
            })
            .collect();
        PiecewiseFunction::new(pieces).unwrap()
    }

    #[test]
    fn zak_of_unit_period_is_constant() {
        let z = zak_transform(&indicator("[0,2pi)"), 16, 16).unwrap();
        let c = 1.0 / TWO_PI.sqrt();
        assert!(z.values.iter().all(|v| (v - c).norm() < 1e-15));
    }

    #[test]
    fn zak_of_two_periods_vanishes_at_pi() {
        let z = zak_transform(&indicator("[0,4pi)"), 16, 16).unwrap();
        for a in 0..16 {
            for b in 0..16 {
                let expect = (1.0 + Complex64::from_polar(1.0, z.w(b))) / TWO_PI.sqrt();
                assert!((z.at(a, b) - expect).norm() < 1e-14);
            }
        }
        assert!(z.at(3, 8).norm() < 1e-15);
    }

    #[test]
    fn zak_of_step_function_ignores_t() {
        let g1 = StepFunction::from_real(&[(4.0, 0), (3.0, 1), (2.0, 3)]).unwrap();
        let z = zak_transform(&g1.to_piecewise(), 32, 32).unwrap();
        let p = g1.polynomial();
        for a in 0..32 {
            for b in 0..32 {
                let expect = p.eval_circle(z.w(b)) / TWO_PI.sqrt();
                assert!((z.at(a, b) - expect).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn rejects_small_grids_and_unbounded_functions() {
        assert!(zak_transform(&indicator("[0,2pi)"), 4, 16).is_err());
        let unbounded = crate::functions::FnWindow::new(|_| Complex64::new(1.0, 0.0));
        assert!(zak_transform(&unbounded, 16, 16).is_err());
    }

    #[test]
    fn unitarity_of_indicator() {
        let err = unitarity_check(&indicator("[0,2pi)"), 256, 256).unwrap();
        assert!(err <= 1e-10, "{err}");
        let err = unitarity_check(&indicator("(5/2pi,7/2pi] U (4pi,11/2pi]"), 256, 256).unwrap();
        assert!(err <= 1e-10, "{err}");
    }

    #[test]
    fn commutation_on_indicator() {
        let g = indicator("[0,2pi)");
        assert_eq!(commutation_check(&g, 0, 0, 32, 32).unwrap(), 0.0);
        assert!(commutation_check(&g, 3, -2, 64, 64).unwrap() <= 1e-12);
    }

    #[test]
    fn extrema_over_masks() {
        let z = zak_transform(&indicator("[0,4pi)"), 64, 1024).unwrap();
        let mask: BasicSupportSet = "[0,2pi)".parse().unwrap();
        let (lo, hi) = zak_extrema(&z, &mask).unwrap();
        assert!(lo <= 1e-4);
        assert!((hi - 2.0 / PI).abs() < 1e-12);
        let outside: BasicSupportSet = "[3pi,4pi)".parse().unwrap();
        assert!(zak_extrema(&z, &outside).is_err());
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = test_corpus(&[(0.0, TWO_PI)], 5, 7, 2);
        let b = test_corpus(&[(0.0, TWO_PI)], 5, 7, 2);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.value(1.234).unwrap(), y.value(1.234).unwrap());
        }
    }

    #[test]
    fn parseval_frame_sum_for_unit_period() {
        let g = indicator("[0,2pi)");
        let tests = test_corpus(&[(0.0, TWO_PI)], 4, 11, 0);
        let est = frame_sum_bounds(&g, &tests, 128).unwrap();
        assert!((est.A_est - TWO_PI).abs() / TWO_PI < 1e-6, "{est:?}");
        assert!((est.B_est - TWO_PI).abs() / TWO_PI < 1e-6, "{est:?}");
        assert_eq!(est.trunc, (128, 0));
        assert!(frame_sum_bounds::<_, TestFunction>(&g, &[], 128).is_err());
    }
}
