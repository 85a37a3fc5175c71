//! Command-line front end. Reports go to stdout (or `--output`) as JSON or
//! CSV; a one-line human summary goes to stderr.
//!
//! Exit codes: 0 frame or success, 1 not a frame, 2 marginal, 3 input
//! error, 4 internal inconsistency.

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frame_analysis::{
    analyze_continuous, analyze_frame_set, analyze_step, AnalysisOptions, FrameReport,
    KappaConvention, Verdict,
};
use crate::functions::{PiecewiseFunction, Restricted, StepFunction};
use crate::intervals::{BasicSupportSet, Interval};
use crate::laurent::DEFAULT_UNIT_TOL;
use crate::zak::{self, DoublingStudy, OracleBounds};

pub const EXIT_FRAME: i32 = 0;
pub const EXIT_NOT_FRAME: i32 = 1;
pub const EXIT_MARGINAL: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "whframe",
    version,
    about = "Gabor frame verdicts and bounds for the lattice (2pi, 1)"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// key=value configuration file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// ξ samples per generator (≥ 16).
    #[arg(long, global = true)]
    xi_samples: Option<usize>,
    /// Zak grid size per axis, a power of two ≥ 64.
    #[arg(long, global = true)]
    grid_n: Option<usize>,
    /// Unit-root tolerance, in (0, 1e-3).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Convention for the `selected` bounds.
    #[arg(long, global = true, value_enum)]
    kappa: Option<KappaArg>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KappaArg {
    Paper,
    Calibrated,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// 2π-translation generators of a set.
    Decompose { set: String },
    /// Is the set a frame set?
    CheckSet { set: String },
    /// Verdict and bounds for a step function given as "coef:width,...".
    Bounds {
        #[arg(long)]
        steps: String,
    },
    /// Verdict and bounds for a piecewise window restricted to a set.
    Analyze {
        #[arg(long = "fn")]
        function: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Zak transform of a piecewise function as CSV.
    Zak {
        #[arg(long = "fn")]
        function: PathBuf,
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Analysis cross-checked against the Zak and frame-sum oracles.
    Verify {
        #[arg(long = "fn")]
        function: PathBuf,
        #[arg(long)]
        set: String,
    },
}

/// Effective settings after merging the config file and flags.
#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub xi_samples: usize,
    pub grid_n: usize,
    pub tol: f64,
    pub kappa_convention: KappaConvention,
    pub output: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            xi_samples: 512,
            grid_n: 1024,
            tol: DEFAULT_UNIT_TOL,
            kappa_convention: KappaConvention::Calibrated,
            output: None,
        }
    }
}

impl Config {
    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_file(&mut self, text: &str) -> Result<()> {
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Precondition(format!("config line {}: expected key=value", no + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| {
                Error::Precondition(format!("config line {}: bad {what} {value:?}", no + 1))
            };
            match key {
                "xi_samples" => self.xi_samples = value.parse().map_err(|_| bad(key))?,
                "grid_n" => self.grid_n = value.parse().map_err(|_| bad(key))?,
                "tol" => self.tol = value.parse().map_err(|_| bad(key))?,
                "kappa" | "kappa_convention" => {
                    self.kappa_convention = match value {
                        "paper" => KappaConvention::Paper,
                        "calibrated" => KappaConvention::Calibrated,
                        _ => return Err(bad(key)),
                    }
                }
                "output" => self.output = Some(PathBuf::from(value)),
                _ => {
                    return Err(Error::Precondition(format!(
                        "config line {}: unknown key {key:?}",
                        no + 1
                    )))
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.xi_samples < 16 {
            return Err(Error::Precondition(format!(
                "xi_samples must be >= 16, got {}",
                self.xi_samples
            )));
        }
        if self.grid_n < 64 || !self.grid_n.is_power_of_two() {
            return Err(Error::Precondition(format!(
                "grid_n must be a power of two >= 64, got {}",
                self.grid_n
            )));
        }
        if !(self.tol > 0.0 && self.tol < 1e-3) {
            return Err(Error::Precondition(format!(
                "tol must lie in (0, 1e-3), got {}",
                self.tol
            )));
        }
        Ok(())
    }

    fn analysis_options(&self) -> Result<AnalysisOptions> {
        let mut opts = AnalysisOptions::calibrated()?;
        opts.unit_tol = self.tol;
        opts.grid.xi_samples = self.xi_samples;
        opts.selected = self.kappa_convention;
        Ok(opts)
    }
}

fn resolve_config(g: &GlobalOpts) -> Result<Config> {
    let mut cfg = Config::default();
    if let Some(path) = &g.config {
        cfg.apply_file(&read(path)?)?;
    }
    if let Some(v) = g.xi_samples {
        cfg.xi_samples = v;
    }
    if let Some(v) = g.grid_n {
        cfg.grid_n = v;
    }
    if let Some(v) = g.tol {
        cfg.tol = v;
    }
    if let Some(k) = g.kappa {
        cfg.kappa_convention = match k {
            KappaArg::Paper => KappaConvention::Paper,
            KappaArg::Calibrated => KappaConvention::Calibrated,
        };
    }
    if let Some(p) = &g.output {
        cfg.output = Some(p.clone());
    }
    cfg.validate()?;
    Ok(cfg)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Frame => EXIT_FRAME,
        Verdict::NotFrame => EXIT_NOT_FRAME,
        Verdict::Marginal => EXIT_MARGINAL,
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Inconsistent(_) | Error::Calibration(_) => EXIT_INCONSISTENT,
        _ => EXIT_INPUT,
    }
}

/// Result of the `verify` subcommand.
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub analysis: FrameReport,
    pub oracle: OracleBounds,
    pub zak_min: f64,
    pub zak_max: f64,
    /// Zak minimum along the witness row `t = ξ*`, at `N_w` and `2·N_w`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub doubling: Option<DoublingStudy>,
    pub consistent: bool,
    pub checks: Vec<String>,
}

/// Runs the analysis and both oracles for `g·χ_E`.
pub fn verify(g: &PiecewiseFunction, e: &BasicSupportSet, cfg: &Config) -> Result<Verification> {
    let opts = cfg.analysis_options()?;
    let analysis = analyze_continuous(g, e, &opts)?;
    let restricted = Restricted { inner: g, set: e };
    let n = cfg.grid_n;

    let bases: Vec<Interval> = analysis.decomposition.iter().map(|gen| gen.base).collect();
    let mask = BasicSupportSet::normalize(&bases)?;
    let grid = zak::zak_transform(&restricted, n, n)?;
    let (zak_min, zak_max) = zak::zak_extrema(&grid, &mask)?;

    let spans: Vec<(f64, f64)> = bases
        .iter()
        .map(|b| (b.lo().to_f64(), b.hi().to_f64()))
        .collect();
    let tests = zak::test_corpus(&spans, zak::CORPUS_SIZE, zak::CORPUS_SEED, 2);
    let oracle = zak::frame_sum_bounds(&restricted, &tests, zak::M_MAX_STEP)?;

    let kappa = opts.calibrated_kappa;
    let res = 1.0 / n as f64;
    let mut checks = Vec::new();
    let mut consistent = true;
    let mut check = |ok: bool, what: String| {
        consistent &= ok;
        checks.push(format!("{} {what}", if ok { "ok" } else { "FAILED" }));
    };
    let mut doubling = None;
    match analysis.verdict {
        Verdict::Frame => {
            let (m_sq, big_m) = (analysis.m_sq, analysis.M_sq);
            check(
                oracle.A_est >= kappa * m_sq * 0.99,
                format!(
                    "A_est {:.6e} >= kappa*m_sq {:.6e} - 1%",
                    oracle.A_est,
                    kappa * m_sq
                ),
            );
            check(
                oracle.B_est <= kappa * big_m * 1.01,
                format!(
                    "B_est {:.6e} <= kappa*M_sq {:.6e} + 1%",
                    oracle.B_est,
                    kappa * big_m
                ),
            );
            let floor = m_sq / (2.0 * PI) * (1.0 - 5.0 * res);
            check(
                zak_min >= floor,
                format!("zak_min {zak_min:.6e} >= {floor:.6e}"),
            );
            let ceil = big_m / (2.0 * PI) * (1.0 + 5.0 * res);
            check(
                zak_max <= ceil,
                format!("zak_max {zak_max:.6e} <= {ceil:.6e}"),
            );
        }
        Verdict::NotFrame => {
            let w = analysis
                .witness
                .ok_or_else(|| Error::Inconsistent("not_frame report without a witness".into()))?;
            let study = zak::zak_row_doubling(&restricted, w.xi, n)?;
            check(
                study.halves,
                format!(
                    "Zak minimum on row t = {}: {:.3e} at N_w = {n}, {:.3e} at N_w = {}",
                    w.xi,
                    study.min,
                    study.min_doubled,
                    2 * n
                ),
            );
            doubling = Some(study);
        }
        Verdict::Marginal => checks.push("marginal verdict: no oracle claim checked".into()),
    }
    Ok(Verification {
        analysis,
        oracle,
        zak_min,
        zak_max,
        doubling,
        consistent,
        checks,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Output text, stderr summary and exit code for one subcommand.
fn execute(cmd: &Command, cfg: &Config) -> Result<(String, String, i32)> {
    let report_out = |r: FrameReport| {
        let b = r.frame_bounds();
        let summary = format!(
            "{}: {} (m_sq = {:.6e}, M_sq = {:.6e}, A0 = {:.6e}, B0 = {:.6e})",
            r.input,
            verdict_name(r.verdict),
            r.m_sq,
            r.M_sq,
            b.A0,
            b.B0
        );
        (to_json(&r), summary, verdict_code(r.verdict))
    };
    match cmd {
        Command::Decompose { set } => {
            let e: BasicSupportSet = set.parse()?;
            let d = e.decompose();
            let summary = format!("{e}: {} generator(s)", d.generators.len());
            Ok((to_json(&d.generators), summary, EXIT_FRAME))
        }
        Command::CheckSet { set } => {
            let e: BasicSupportSet = set.parse()?;
            Ok(report_out(analyze_frame_set(&e, &cfg.analysis_options()?)?))
        }
        Command::Bounds { steps } => {
            let s: StepFunction = steps.parse()?;
            Ok(report_out(analyze_step(&s, &cfg.analysis_options()?)?))
        }
        Command::Analyze { function, set } => {
            let g = PiecewiseFunction::parse(&read(function)?)?;
            let e: BasicSupportSet = set.parse()?;
            let mut r = analyze_continuous(&g, &e, &cfg.analysis_options()?)?;
            r.input = format!("{} on {e}", function.display());
            r.notes.extend(g.boundary_mismatches());
            Ok(report_out(r))
        }
        Command::Zak { function, grid } => {
            let g = PiecewiseFunction::parse(&read(function)?)?;
            let n = grid.unwrap_or(cfg.grid_n);
            let z = zak::zak_transform(&g, n, n)?;
            let mut buf = Vec::new();
            z.write_csv(&mut buf)
                .map_err(|e| Error::Io(e.to_string()))?;
            let text = String::from_utf8(buf).expect("csv is ascii");
            Ok((text, format!("Zak grid {n}x{n}"), EXIT_FRAME))
        }
        Command::Verify { function, set } => {
            let g = PiecewiseFunction::parse(&read(function)?)?;
            let e: BasicSupportSet = set.parse()?;
            let mut v = verify(&g, &e, cfg)?;
            v.analysis.input = format!("{} on {e}", function.display());
            v.analysis.notes.extend(g.boundary_mismatches());
            let code = if v.consistent {
                verdict_code(v.analysis.verdict)
            } else {
                EXIT_INCONSISTENT
            };
            let summary = format!(
                "{}: {}, oracle {}",
                v.analysis.input,
                verdict_name(v.analysis.verdict),
                if v.consistent { "agrees" } else { "DISAGREES" }
            );
            Ok((to_json(&v), summary, code))
        }
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Frame => "frame",
        Verdict::NotFrame => "not_frame",
        Verdict::Marginal => "marginal",
    }
}

/// Entry point with explicit streams, for tests.
pub fn run_with_io<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_FRAME
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    let outcome = resolve_config(&cli.global).and_then(|cfg| {
        let (text, summary, code) = execute(&cli.command, &cfg)?;
        match &cfg.output {
            Some(path) => {
                fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
            }
            None => out
                .write_all(text.as_bytes())
                .map_err(|e| Error::Io(e.to_string()))?,
        }
        Ok((summary, code))
    });
    match outcome {
        Ok((summary, code)) => {
            let _ = writeln!(err, "{summary}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(argv, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_file_and_validation() {
        let mut c = Config::default();
        c.apply_file("# defaults\nxi_samples = 64\ngrid_n=128\ntol = 1e-8\nkappa = paper\n")
            .unwrap();
        assert_eq!(c.xi_samples, 64);
        assert_eq!(c.grid_n, 128);
        assert_eq!(c.tol, 1e-8);
        assert_eq!(c.kappa_convention, KappaConvention::Paper);
        c.validate().unwrap();
        assert!(c.apply_file("frobnicate = 1").is_err());
        assert!(c.apply_file("xi_samples").is_err());
        for bad in [
            Config {
                xi_samples: 8,
                ..Config::default()
            },
            Config {
                grid_n: 1000,
                ..Config::default()
            },
            Config {
                grid_n: 32,
                ..Config::default()
            },
            Config {
                tol: 0.0,
                ..Config::default()
            },
            Config {
                tol: 1e-3,
                ..Config::default()
            },
        ] {
            assert!(bad.validate().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn error_codes() {
        assert_eq!(
            error_code(&Error::Inconsistent("x".into())),
            EXIT_INCONSISTENT
        );
        assert_eq!(error_code(&Error::EmptySet), EXIT_INPUT);
    }
}
