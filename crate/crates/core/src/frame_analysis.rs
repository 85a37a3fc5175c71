//! Frame verdicts and frame bounds.
//!
//! A window `g` restricted to a basic support set `E` generates a frame for
//! the lattice (2π, 1) exactly when no characteristic chain
//! `{g(ξ + 2π n_ij)}_j` is a root sequence. The bounds are
//! `A0 = κ·m_sq`, `B0 = κ·M_sq` where `m_sq`, `M_sq` are the extrema of
//! `|Σ_j g(ξ + 2π n_ij) z^{n_ij}|²` over `ξ ∈ Ē_i`, `|z| = 1` and all
//! generators `i`.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functions::{chain, CharacteristicChain, StepFunction, Window};
use crate::intervals::{BasicSupportSet, Decomposition, Generator, Interval};
use crate::laurent::{
    circle_extrema, unit_root_test, CircleExtrema, LaurentPolynomial, UnitRootKind,
    DEFAULT_UNIT_TOL,
};

/// `κ` under the convention `2π·A0 = m_sq`.
pub const PAPER_KAPPA: f64 = 1.0 / (2.0 * PI);

/// Refinement budget: number of sampled local minima refined per generator.
const REFINED_MINIMA: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridParams {
    /// ξ samples per generator, endpoints included.
    pub xi_samples: usize,
    /// Golden-section stopping width, relative to the base length.
    pub xi_tol_rel: f64,
    /// `m_sq ≤ zero_tol·scale²` is treated as zero.
    pub zero_tol: f64,
}

impl Default for GridParams {
    fn default() -> Self {
        GridParams {
            xi_samples: 512,
            xi_tol_rel: 1e-10,
            zero_tol: 1e-18,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KappaConvention {
    Paper,
    Calibrated,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Normalization {
    /// `κ = 1/(2π)`.
    Paper,
    /// A measured `κ`, see [`crate::zak::calibrate_kappa`].
    Calibrated(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct FrameBounds {
    pub m_sq: f64,
    pub M_sq: f64,
    pub kappa: f64,
    pub A0: f64,
    pub B0: f64,
}

impl FrameBounds {
    /// `B0/A0`; infinite when `A0 = 0`.
    pub fn condition_ratio(&self) -> f64 {
        if self.A0 > 0.0 {
            self.B0 / self.A0
        } else {
            f64::INFINITY
        }
    }
}

#[allow(non_snake_case)]
pub fn bounds_with_kappa(m_sq: f64, M_sq: f64, convention: Normalization) -> FrameBounds {
    let kappa = match convention {
        Normalization::Paper => PAPER_KAPPA,
        Normalization::Calibrated(k) => k,
    };
    FrameBounds {
        m_sq,
        M_sq,
        kappa,
        A0: kappa * m_sq,
        B0: kappa * M_sq,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalysisOptions {
    pub unit_tol: f64,
    pub grid: GridParams,
    pub calibrated_kappa: f64,
    pub selected: KappaConvention,
}

impl AnalysisOptions {
    /// Defaults, with `κ` measured by the frame-sum oracle.
    pub fn calibrated() -> Result<Self> {
        Ok(Self::with_kappa(crate::zak::calibrated_kappa()?))
    }

    pub fn with_kappa(kappa: f64) -> Self {
        AnalysisOptions {
            unit_tol: DEFAULT_UNIT_TOL,
            grid: GridParams::default(),
            calibrated_kappa: kappa,
            selected: KappaConvention::Calibrated,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Frame,
    NotFrame,
    Marginal,
}

/// A point `(ξ, e^{iθ})` where a chain polynomial (numerically) vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub generator: usize,
    pub xi: f64,
    pub theta: f64,
    /// `|p_ξ(e^{iθ})|²`, evaluated afresh from the window.
    pub value_sq: f64,
    /// Found in exact arithmetic (integer shortcut or an all-zero chain).
    pub exact: bool,
    pub zero_chain: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorReport {
    pub index: usize,
    pub base: Interval,
    pub widths: Vec<i64>,
    /// The chain polynomial when it does not depend on ξ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    pub verdict: Verdict,
    pub min_sq: f64,
    pub argmin_xi: f64,
    pub argmin_theta: f64,
    pub max_sq: f64,
    pub argmax_xi: f64,
    pub argmax_theta: f64,
    pub method_gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportBounds {
    pub paper: FrameBounds,
    pub calibrated: FrameBounds,
    pub selected: KappaConvention,
}

impl ReportBounds {
    pub fn selected(&self) -> &FrameBounds {
        match self.selected {
            KappaConvention::Paper => &self.paper,
            KappaConvention::Calibrated => &self.calibrated,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct FrameReport {
    pub input: String,
    pub decomposition: Vec<Generator>,
    /// `"L2(R)"` when the generator bases tile `[0, 2π)`, else `"L2(Omega)"`.
    pub space: &'static str,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub witnesses: Vec<Witness>,
    pub m_sq: f64,
    pub M_sq: f64,
    pub bounds: ReportBounds,
    pub per_generator: Vec<GeneratorReport>,
    pub notes: Vec<String>,
}

impl FrameReport {
    fn assemble(
        input: String,
        decomposition: &Decomposition,
        per_generator: Vec<GeneratorReport>,
        mut witnesses: Vec<Witness>,
        notes: Vec<String>,
        opts: &AnalysisOptions,
    ) -> Self {
        let verdict = if per_generator.iter().any(|g| g.verdict == Verdict::NotFrame) {
            Verdict::NotFrame
        } else if per_generator.iter().any(|g| g.verdict == Verdict::Marginal) {
            Verdict::Marginal
        } else {
            Verdict::Frame
        };
        let m_sq = per_generator
            .iter()
            .map(|g| g.min_sq)
            .fold(f64::INFINITY, f64::min);
        let max_sq = per_generator.iter().map(|g| g.max_sq).fold(0.0, f64::max);
        witnesses.sort_by(|a, b| a.generator.cmp(&b.generator).then(a.xi.total_cmp(&b.xi)));
        let witness = witnesses.iter().copied().min_by(|a, b| {
            b.zero_chain
                .cmp(&a.zero_chain)
                .then(b.exact.cmp(&a.exact))
                .then(a.value_sq.total_cmp(&b.value_sq))
        });
        FrameReport {
            input,
            decomposition: decomposition.generators.clone(),
            space: if decomposition.covers_line() {
                "L2(R)"
            } else {
                "L2(Omega)"
            },
            verdict,
            witness,
            witnesses,
            m_sq,
            M_sq: max_sq,
            bounds: ReportBounds {
                paper: bounds_with_kappa(m_sq, max_sq, Normalization::Paper),
                calibrated: bounds_with_kappa(
                    m_sq,
                    max_sq,
                    Normalization::Calibrated(opts.calibrated_kappa),
                ),
                selected: opts.selected,
            },
            per_generator,
            notes,
        }
    }

    /// The bounds under the selected convention.
    pub fn frame_bounds(&self) -> &FrameBounds {
        self.bounds.selected()
    }
}

fn unit_verdict(kind: &UnitRootKind) -> Verdict {
    match kind {
        UnitRootKind::HasUnitRoot { .. } => Verdict::NotFrame,
        UnitRootKind::NoUnitRoot { .. } => Verdict::Frame,
        UnitRootKind::Marginal { .. } => Verdict::Marginal,
    }
}

/// Report entry and optional witness for a ξ-independent chain polynomial.
fn fixed_polynomial(
    index: usize,
    gen: &Generator,
    p: &LaurentPolynomial,
    tol: f64,
) -> Result<(GeneratorReport, Option<Witness>)> {
    let test = unit_root_test(p, tol)?;
    let xi = gen.base.lo().to_f64();
    let ex = test.extrema;
    let witness = match test.kind {
        UnitRootKind::HasUnitRoot { theta, exact } => Some(Witness {
            generator: index,
            xi,
            theta,
            value_sq: p.eval_circle(theta).norm_sqr(),
            exact,
            zero_chain: p.is_zero(),
        }),
        _ => None,
    };
    let report = GeneratorReport {
        index,
        base: gen.base,
        widths: gen.widths.clone(),
        polynomial: Some(p.to_string()),
        verdict: unit_verdict(&test.kind),
        min_sq: ex.min_sq,
        argmin_xi: xi,
        argmin_theta: ex.argmin_theta,
        max_sq: ex.max_sq,
        argmax_xi: xi,
        argmax_theta: ex.argmax_theta,
        method_gap: ex.method_gap,
    };
    Ok((report, witness))
}

/// Step function `g = Σ a_j χ_{[0,2π)+2π n_j}`: one chain polynomial
/// `Σ a_j z^{n_j}`, independent of ξ.
pub fn analyze_step(s: &StepFunction, opts: &AnalysisOptions) -> Result<FrameReport> {
    let p = s.polynomial();
    let gen = Generator::new(
        Interval::half_open(
            crate::intervals::RationalPi::ZERO,
            crate::intervals::RationalPi::TWO_PI,
        )?,
        s.widths(),
    )?;
    let decomposition = Decomposition::new(vec![gen.clone()])?;
    let (report, witness) = fixed_polynomial(0, &gen, &p, opts.unit_tol)?;
    let mut notes = Vec::new();
    if p.is_zero() {
        notes.push("all step coefficients vanish: every characteristic chain is zero".into());
    }
    let input = s
        .steps()
        .iter()
        .map(|(a, n)| {
            if a.im == 0.0 {
                format!("{}:{n}", a.re)
            } else {
                format!("{}{:+}i:{n}", a.re, a.im)
            }
        })
        .collect::<Vec<_>>()
        .join(",");
    Ok(FrameReport::assemble(
        input,
        &decomposition,
        vec![report],
        witness.into_iter().collect(),
        notes,
        opts,
    ))
}

/// Sets for which a frame-set claim is in circulation that the unit-root
/// criterion refutes, with the offending factorization.
const KNOWN_CLAIMS: &[(&str, &str)] = &[
    (
        "[3pi,7pi)",
        "a published worked example lists [3pi,7pi) as a frame set; its generator [0,pi) has \
         step-widths {2,3} and z^2+z^3 = z^2(1+z) vanishes at z = -1, so it is not one",
    ),
    (
        "(5/2pi,7/2pi] U (4pi,11/2pi]",
        "a published worked example lists (5/2pi,7/2pi] U (4pi,11/2pi] as a frame set; its \
         generator [pi/2,3pi/2) has step-widths {1,2} and z+z^2 = z(1+z) vanishes at z = -1, \
         so it is not one",
    ),
];

const WIDTHS_AS_COEFFICIENTS: &str = "reading step-widths {n_j} as coefficients (e.g. 2+3z for \
     {2,3}) gives polynomials without unit roots; the verdict uses sum_j z^{n_j}";

/// Indicator windows: generator `i` contributes `Σ_j z^{n_ij}`.
pub fn analyze_frame_set(e: &BasicSupportSet, opts: &AnalysisOptions) -> Result<FrameReport> {
    let decomposition = e.decompose();
    let mut per_generator = Vec::new();
    let mut witnesses = Vec::new();
    for (i, gen) in decomposition.generators.iter().enumerate() {
        let p = LaurentPolynomial::indicator(&gen.widths);
        let (report, witness) = fixed_polynomial(i, gen, &p, opts.unit_tol)?;
        per_generator.push(report);
        witnesses.extend(witness);
    }
    let mut notes = Vec::new();
    for (literal, note) in KNOWN_CLAIMS {
        let known: BasicSupportSet = literal.parse()?;
        if &known == e {
            notes.push((*note).to_string());
            notes.push(WIDTHS_AS_COEFFICIENTS.to_string());
        }
    }
    if !decomposition.covers_line() {
        notes.push("generator bases do not tile [0,2pi): bounds refer to L2(Omega)".into());
    }
    Ok(FrameReport::assemble(
        e.to_string(),
        &decomposition,
        per_generator,
        witnesses,
        notes,
        opts,
    ))
}

/// True iff `Σ values_j z^{widths_j}` has a unit root (the zero polynomial
/// counts).
pub fn is_root_sequence(values: &[Complex64], widths: &[i64], tol: f64) -> Result<bool> {
    if values.len() != widths.len() {
        return Err(Error::Precondition(format!(
            "{} values for {} widths",
            values.len(),
            widths.len()
        )));
    }
    let p = LaurentPolynomial::from_terms(widths.iter().copied().zip(values.iter().copied()));
    Ok(unit_root_test(&p, tol)?.has_unit_root())
}

fn chain_key(c: &CharacteristicChain) -> Vec<(u64, u64)> {
    c.values
        .iter()
        .map(|v| (v.re.to_bits(), v.im.to_bits()))
        .collect()
}

/// Chains and circle extrema along one generator, memoized on chain values.
struct ChainProbe<'a, W: ?Sized> {
    g: &'a W,
    gen: &'a Generator,
    cache: HashMap<Vec<(u64, u64)>, CircleExtrema>,
}

#[derive(Clone, Copy, Debug)]
struct Sample {
    xi: f64,
    extrema: CircleExtrema,
    /// `max_j |g(ξ + 2π n_j)|`.
    peak: f64,
}

impl<'a, W: Window + ?Sized> ChainProbe<'a, W> {
    fn sample(&mut self, xi: f64) -> Result<Sample> {
        let c = chain(self.g, self.gen, xi)?;
        let key = chain_key(&c);
        let peak = c.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let extrema = match self.cache.get(&key) {
            Some(e) => *e,
            None => {
                let e = circle_extrema(&c.polynomial());
                self.cache.insert(key, e);
                e
            }
        };
        Ok(Sample { xi, extrema, peak })
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search of `key` (minimized) on `[a, b]` until the bracket
/// is narrower than `tol`. Returns the best sample seen.
fn golden<F>(
    mut a: f64,
    mut b: f64,
    tol: f64,
    mut eval: F,
    key: fn(&Sample) -> f64,
) -> Result<Sample>
where
    F: FnMut(f64) -> Result<Sample>,
{
    let mut best: Option<Sample> = None;
    let keep = |s: Sample, best: &mut Option<Sample>| {
        if best.is_none_or(|b| key(&s) < key(&b)) {
            *best = Some(s);
        }
        s
    };
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = key(&keep(eval(x1)?, &mut best));
    let mut f2 = key(&keep(eval(x2)?, &mut best));
    while b - a > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = key(&keep(eval(x1)?, &mut best));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = key(&keep(eval(x2)?, &mut best));
        }
    }
    Ok(best.expect("golden section evaluates at least twice"))
}

/// Indices of sampled local minima of `v`, smallest first.
fn local_minima(v: &[f64], limit: usize) -> Vec<usize> {
    let n = v.len();
    let mut idx: Vec<usize> = (0..n)
        .filter(|&k| (k == 0 || v[k] <= v[k - 1]) && (k + 1 == n || v[k] <= v[k + 1]))
        .collect();
    idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]).then(a.cmp(&b)));
    idx.truncate(limit);
    idx
}

struct GeneratorScan {
    samples: Vec<Sample>,
    refined_minima: Vec<Sample>,
    refined_max: Sample,
}

fn scan_generator<W: Window + ?Sized>(
    g: &W,
    gen: &Generator,
    grid: &GridParams,
) -> Result<GeneratorScan> {
    let lo = gen.base.lo().to_f64();
    let hi = gen.base.hi().to_f64();
    let n = grid.xi_samples.max(2);
    let step = (hi - lo) / (n - 1) as f64;
    let xs: Vec<f64> = (0..n)
        .map(|k| if k + 1 == n { hi } else { lo + k as f64 * step })
        .collect();

    // chains in parallel, extrema once per distinct chain
    let chains: Vec<CharacteristicChain> = xs
        .par_iter()
        .map(|&xi| chain(g, gen, xi))
        .collect::<Result<_>>()?;
    let mut distinct: Vec<(Vec<(u64, u64)>, &CharacteristicChain)> = Vec::new();
    let mut slot_of: HashMap<Vec<(u64, u64)>, usize> = HashMap::new();
    let slots: Vec<usize> = chains
        .iter()
        .map(|c| {
            let key = chain_key(c);
            *slot_of.entry(key.clone()).or_insert_with(|| {
                distinct.push((key, c));
                distinct.len() - 1
            })
        })
        .collect();
    let extrema: Vec<CircleExtrema> = distinct
        .par_iter()
        .map(|(_, c)| circle_extrema(&c.polynomial()))
        .collect();
    let samples: Vec<Sample> = chains
        .iter()
        .zip(&slots)
        .map(|(c, &s)| Sample {
            xi: c.xi,
            extrema: extrema[s],
            peak: c.values.iter().map(|v| v.norm()).fold(0.0, f64::max),
        })
        .collect();

    let mut probe = ChainProbe {
        g,
        gen,
        cache: distinct.into_iter().map(|(k, _)| k).zip(extrema).collect(),
    };
    let tol = grid.xi_tol_rel * (hi - lo);
    let bracket = |k: usize| (xs[k.saturating_sub(1)], xs[(k + 1).min(n - 1)]);

    let mins: Vec<f64> = samples.iter().map(|s| s.extrema.min_sq).collect();
    let mut refined_minima = Vec::new();
    for k in local_minima(&mins, REFINED_MINIMA) {
        let (a, b) = bracket(k);
        let r = golden(a, b, tol, |x| probe.sample(x), |s| s.extrema.min_sq)?;
        refined_minima.push(if r.extrema.min_sq < samples[k].extrema.min_sq {
            r
        } else {
            samples[k]
        });
    }

    let kmax = samples
        .iter()
        .enumerate()
        .max_by(|a, b| {
            a.1.extrema
                .max_sq
                .total_cmp(&b.1.extrema.max_sq)
                .then(b.0.cmp(&a.0))
        })
        .map(|(k, _)| k)
        .expect("at least two samples");
    let (a, b) = bracket(kmax);
    let r = golden(a, b, tol, |x| probe.sample(x), |s| -s.extrema.max_sq)?;
    let refined_max = if r.extrema.max_sq > samples[kmax].extrema.max_sq {
        r
    } else {
        samples[kmax]
    };

    Ok(GeneratorScan {
        samples,
        refined_minima,
        refined_max,
    })
}

/// General window `g` on `E`: the chain polynomial varies with ξ, so each
/// generator base is sampled (endpoints included) and the extrema refined
/// by golden-section search.
pub fn analyze_continuous<W: Window + ?Sized>(
    g: &W,
    e: &BasicSupportSet,
    opts: &AnalysisOptions,
) -> Result<FrameReport> {
    let grid = &opts.grid;
    let decomposition = e.decompose();
    let scans: Vec<GeneratorScan> = decomposition
        .generators
        .iter()
        .map(|gen| scan_generator(g, gen, grid))
        .collect::<Result<_>>()?;

    let scale = scans
        .iter()
        .flat_map(|s| s.samples.iter().map(|x| x.peak))
        .fold(0.0, f64::max);
    let threshold = grid.zero_tol * scale * scale;
    let zero_peak = grid.zero_tol.sqrt() * scale;

    let mut notes = Vec::new();
    let mut per_generator = Vec::new();
    let mut witnesses = Vec::new();
    for (i, (gen, scan)) in decomposition.generators.iter().zip(&scans).enumerate() {
        let best = scan
            .refined_minima
            .iter()
            .chain(&scan.samples)
            .min_by(|a, b| a.extrema.min_sq.total_cmp(&b.extrema.min_sq))
            .copied()
            .expect("samples are nonempty");
        let min_sq = best.extrema.min_sq;
        let verdict = if scale == 0.0 || min_sq <= threshold {
            Verdict::NotFrame
        } else if min_sq >= 10.0 * threshold {
            Verdict::Frame
        } else {
            Verdict::Marginal
        };

        if verdict == Verdict::NotFrame {
            let len = gen.base.hi().to_f64() - gen.base.lo().to_f64();
            let mut found: Vec<f64> = Vec::new();
            let candidates = scan.samples.iter().filter(|s| s.peak <= zero_peak).chain(
                scan.refined_minima
                    .iter()
                    .filter(|s| s.extrema.min_sq <= threshold),
            );
            for s in candidates {
                if found.iter().any(|&x| (x - s.xi).abs() <= 1e-6 * len) {
                    continue;
                }
                found.push(s.xi);
                let c = chain(g, gen, s.xi)?;
                let zero_chain = c.values.iter().all(|v| v.norm() <= zero_peak);
                let theta = if zero_chain {
                    0.0
                } else {
                    s.extrema.argmin_theta
                };
                let value_sq = c.polynomial().eval_circle(theta).norm_sqr();
                if value_sq > 10.0 * threshold {
                    return Err(Error::Inconsistent(format!(
                        "witness xi = {}, theta = {theta} re-evaluates to {value_sq:e}, above {:e}",
                        s.xi,
                        10.0 * threshold
                    )));
                }
                witnesses.push(Witness {
                    generator: i,
                    xi: s.xi,
                    theta,
                    value_sq,
                    exact: c.is_zero(),
                    zero_chain,
                });
            }
            if witnesses.iter().any(|w| w.generator == i && w.zero_chain) {
                notes.push(format!(
                    "generator {i} ({}) has a zero characteristic chain",
                    gen.base
                ));
            }
        }

        per_generator.push(GeneratorReport {
            index: i,
            base: gen.base,
            widths: gen.widths.clone(),
            polynomial: None,
            verdict,
            min_sq,
            argmin_xi: best.xi,
            argmin_theta: best.extrema.argmin_theta,
            max_sq: scan.refined_max.extrema.max_sq,
            argmax_xi: scan.refined_max.xi,
            argmax_theta: scan.refined_max.extrema.argmax_theta,
            method_gap: scan
                .samples
                .iter()
                .chain(&scan.refined_minima)
                .map(|s| s.extrema.method_gap)
                .fold(0.0, f64::max),
        });
    }
    if scale == 0.0 {
        notes.push("the window vanishes at every sampled chain point".into());
    }
    if !decomposition.covers_line() {
        notes.push("generator bases do not tile [0,2pi): bounds refer to L2(Omega)".into());
    }
    Ok(FrameReport::assemble(
        e.to_string(),
        &decomposition,
        per_generator,
        witnesses,
        notes,
        opts,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{FnWindow, PiecewiseFunction};

    fn opts() -> AnalysisOptions {
        AnalysisOptions::with_kappa(2.0 * PI)
    }

    fn set(s: &str) -> BasicSupportSet {
        s.parse().unwrap()
    }

    #[test]
    fn kappa_conventions() {
        let p = bounds_with_kappa(1.0, 1.0, Normalization::Paper);
        assert!((p.A0 - 1.0 / (2.0 * PI)).abs() < 1e-15 && p.A0 == p.B0);
        let c = bounds_with_kappa(1.0, 1.0, Normalization::Calibrated(6.5));
        assert_eq!((c.A0, c.B0), (6.5, 6.5));
        let z = bounds_with_kappa(0.0, 3.0, Normalization::Calibrated(6.0));
        assert_eq!(z.A0, 0.0);
        assert_eq!(z.condition_ratio(), f64::INFINITY);
        let a = bounds_with_kappa(2.0, 50.0, Normalization::Paper);
        let b = bounds_with_kappa(2.0, 50.0, Normalization::Calibrated(6.3));
        assert!((a.condition_ratio() - b.condition_ratio()).abs() < 1e-12);
    }

    #[test]
    fn step_examples() {
        let g1 = StepFunction::from_real(&[(4.0, 0), (3.0, 1), (2.0, 3)]).unwrap();
        let r = analyze_step(&g1, &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Frame);
        assert!(r.witness.is_none());
        assert_eq!(r.space, "L2(R)");

        let two = StepFunction::from_real(&[(1.0, 0), (1.0, 1)]).unwrap();
        let r = analyze_step(&two, &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::NotFrame);
        let w = r.witness.unwrap();
        assert_eq!(w.theta, PI);
        assert!(w.exact && w.value_sq < 1e-30);

        let one = StepFunction::from_real(&[(1.0, 0)]).unwrap();
        let r = analyze_step(&one, &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Frame);
        assert!((r.m_sq - 1.0).abs() < 1e-14 && (r.M_sq - 1.0).abs() < 1e-14);

        let zero = StepFunction::from_real(&[(0.0, 0), (0.0, 2)]).unwrap();
        let r = analyze_step(&zero, &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::NotFrame);
        assert!(r.witness.unwrap().zero_chain);
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn frame_set_examples() {
        let r = analyze_frame_set(&set("[0,2pi)"), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::Frame);
        assert!((r.m_sq - 1.0).abs() < 1e-14 && (r.M_sq - 1.0).abs() < 1e-14);
        assert!((r.bounds.calibrated.A0 - 2.0 * PI).abs() < 1e-12);

        let r = analyze_frame_set(&set("[0,4pi)"), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::NotFrame);
        assert!(r.notes.is_empty());

        let r = analyze_frame_set(&set("[3pi,7pi)"), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::NotFrame);
        assert_eq!(r.witness.unwrap().generator, 0);
        assert!(r.notes[0].contains("z^2(1+z)"));

        let r = analyze_frame_set(&set("(5/2pi,7/2pi] U (4pi,11/2pi]"), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::NotFrame);
        assert!(r.notes[0].contains("z(1+z)"));
        assert_eq!(r.space, "L2(Omega)");
    }

    #[test]
    fn root_sequences() {
        let v: Vec<Complex64> = [-2.0, -1.0, 1.0]
            .iter()
            .map(|&x| Complex64::new(x, 0.0))
            .collect();
        assert!(is_root_sequence(&v, &[0, 1, 2], DEFAULT_UNIT_TOL).unwrap());
        assert!(!is_root_sequence(&v, &[0, 1, 3], DEFAULT_UNIT_TOL).unwrap());
        let zeros = vec![Complex64::new(0.0, 0.0); 3];
        assert!(is_root_sequence(&zeros, &[0, 4, 9], DEFAULT_UNIT_TOL).unwrap());
        assert!(is_root_sequence(&zeros, &[0, 4], DEFAULT_UNIT_TOL).is_err());
    }

    #[test]
    fn sine_has_zero_chains() {
        let g = PiecewiseFunction::parse("[0,2pi) : sin(t)").unwrap();
        let r = analyze_continuous(&g, &set("[0,2pi)"), &opts()).unwrap();
        assert_eq!(r.verdict, Verdict::NotFrame);
        let xs: Vec<f64> = r.witnesses.iter().map(|w| w.xi).collect();
        assert!(xs.iter().any(|&x| x.abs() < 1e-8), "{xs:?}");
        assert!(xs.iter().any(|&x| (x - PI).abs() < 1e-8), "{xs:?}");
        assert!(r.witnesses.iter().all(|w| w.zero_chain));
    }

    #[test]
    fn constant_window_matches_frame_set() {
        let one = FnWindow::new(|_| Complex64::new(1.0, 0.0));
        for s in ["[3pi,7pi)", "[0,2pi)", "[0,pi) U [5pi,6pi) U [7/2pi,4pi)"] {
            let e = set(s);
            let a = analyze_continuous(&one, &e, &opts()).unwrap();
            let b = analyze_frame_set(&e, &opts()).unwrap();
            assert_eq!(a.verdict, b.verdict, "{s}");
            assert!((a.m_sq - b.m_sq).abs() <= 1e-10, "{s}");
            assert!((a.M_sq - b.M_sq).abs() <= 1e-10, "{s}");
        }
    }

    #[test]
    fn golden_section_finds_interior_minimum() {
        let s = golden(
            0.0,
            3.0,
            1e-12,
            |x| {
                Ok(Sample {
                    xi: x,
                    extrema: CircleExtrema {
                        min_sq: (x - 1.3).powi(2),
                        argmin_theta: 0.0,
                        max_sq: 0.0,
                        argmax_theta: 0.0,
                        method_gap: 0.0,
                    },
                    peak: 1.0,
                })
            },
            |s| s.extrema.min_sq,
        )
        .unwrap();
        assert!((s.xi - 1.3).abs() < 1e-9);
    }
}
