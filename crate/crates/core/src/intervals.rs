//! Exact interval-set algebra over rational multiples of π.
//!
//! Every endpoint is a [`RationalPi`], so reduction modulo 2π, unions and the
//! generator decomposition of a basic support set are computed without any
//! rounding. Set-level operations work on half-open `[lo, hi)` intervals; the
//! closedness flags parsed from a literal are kept for display only.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact value `(numerator / denominator) · π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPi(Ratio<i64>);

impl RationalPi {
    pub const ZERO: RationalPi = RationalPi(Ratio::new_raw(0, 1));
    pub const TWO_PI: RationalPi = RationalPi(Ratio::new_raw(2, 1));

    /// Panics if `denominator` is zero.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        RationalPi(Ratio::new(numerator, denominator))
    }

    /// The integer multiple `k · π`.
    pub fn pi_multiple(k: i64) -> Self {
        RationalPi(Ratio::from_integer(k))
    }

    /// `2πn`.
    pub fn two_pi_times(n: i64) -> Self {
        RationalPi(Ratio::from_integer(2 * n))
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    /// Coefficient of π as a ratio.
    pub fn coefficient(&self) -> Ratio<i64> {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64 * std::f64::consts::PI
    }

    pub fn is_zero(&self) -> bool {
        self.numerator() == 0
    }
}

impl Add for RationalPi {
    type Output = RationalPi;
    fn add(self, rhs: Self) -> Self {
        RationalPi(self.0 + rhs.0)
    }
}

impl Sub for RationalPi {
    type Output = RationalPi;
    fn sub(self, rhs: Self) -> Self {
        RationalPi(self.0 - rhs.0)
    }
}

impl Neg for RationalPi {
    type Output = RationalPi;
    fn neg(self) -> Self {
        RationalPi(-self.0)
    }
}

impl fmt::Display for RationalPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.numerator(), self.denominator());
        match (n, d) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (-1, 1) => write!(f, "-pi"),
            (n, 1) => write!(f, "{n}pi"),
            (n, d) => write!(f, "{n}/{d}pi"),
        }
    }
}

impl Serialize for RationalPi {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Splits `x` into `residue + 2πn` with `0 ≤ residue < 2π`.
pub fn tau_2pi(x: RationalPi) -> (RationalPi, i64) {
    let n = x.0.numer().div_floor(&(2 * x.0.denom()));
    let residue = x - RationalPi::two_pi_times(n);
    (residue, n)
}

/// A bounded interval with rational-π endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: RationalPi,
    hi: RationalPi,
    lo_closed: bool,
    hi_closed: bool,
}

impl Interval {
    pub fn new(lo: RationalPi, hi: RationalPi, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidInterval(format!(
                "lower endpoint {lo} is not below upper endpoint {hi}"
            )));
        }
        Ok(Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    /// The canonical half-open interval `[lo, hi)`.
    pub fn half_open(lo: RationalPi, hi: RationalPi) -> Result<Self> {
        Self::new(lo, hi, true, false)
    }

    pub fn lo(&self) -> RationalPi {
        self.lo
    }

    pub fn hi(&self) -> RationalPi {
        self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn length(&self) -> RationalPi {
        self.hi - self.lo
    }

    pub fn canonical(&self) -> Interval {
        Interval {
            lo_closed: true,
            hi_closed: false,
            ..*self
        }
    }

    pub fn translate(&self, by: RationalPi) -> Interval {
        Interval {
            lo: self.lo + by,
            hi: self.hi + by,
            ..*self
        }
    }

    /// Pointwise membership honoring the closedness flags.
    pub fn contains(&self, t: f64) -> bool {
        let (lo, hi) = (self.lo.to_f64(), self.hi.to_f64());
        let above = if self.lo_closed { t >= lo } else { t > lo };
        let below = if self.hi_closed { t <= hi } else { t < hi };
        above && below
    }

    /// Membership in the closure `[lo, hi]`.
    pub fn closure_contains(&self, t: f64) -> bool {
        t >= self.lo.to_f64() && t <= self.hi.to_f64()
    }

    /// Half-open containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// True when the two intervals share a point, honoring closedness flags.
    pub fn intersects_pointwise(&self, other: &Interval) -> bool {
        let (first, second) = if self.lo <= other.lo {
            (self, other)
        } else {
            (other, self)
        };
        match first.hi.cmp(&second.lo) {
            Ordering::Greater => true,
            Ordering::Equal => first.hi_closed && second.lo_closed,
            Ordering::Less => false,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Interval {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = SetParser::new(s);
        p.skip_ws();
        let iv = p.interval()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(Error::parse(p.pos, "trailing input after interval"));
        }
        Ok(iv)
    }
}

/// A finite disjoint union of bounded intervals, kept in canonical
/// half-open form, sorted, with no two parts mergeable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasicSupportSet {
    parts: Vec<Interval>,
}

impl BasicSupportSet {
    /// Canonicalizes an arbitrary list of intervals into sorted disjoint
    /// half-open parts; overlapping and abutting inputs are merged.
    pub fn normalize(raw: &[Interval]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut sorted: Vec<Interval> = raw.iter().map(Interval::canonical).collect();
        sorted.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let mut parts: Vec<Interval> = Vec::with_capacity(sorted.len());
        for iv in sorted {
            match parts.last_mut() {
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => parts.push(iv),
            }
        }
        Ok(BasicSupportSet { parts })
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn measure(&self) -> RationalPi {
        self.parts
            .iter()
            .fold(RationalPi::ZERO, |acc, p| acc + p.length())
    }

    pub fn translate(&self, by: RationalPi) -> BasicSupportSet {
        BasicSupportSet {
            parts: self.parts.iter().map(|p| p.translate(by)).collect(),
        }
    }

    /// Half-open membership.
    pub fn contains(&self, t: f64) -> bool {
        self.parts
            .iter()
            .any(|p| t >= p.lo.to_f64() && t < p.hi.to_f64())
    }

    pub fn closure_contains(&self, t: f64) -> bool {
        self.parts.iter().any(|p| p.closure_contains(t))
    }

    /// Smallest and largest points of the closure.
    pub fn hull(&self) -> (RationalPi, RationalPi) {
        (self.parts[0].lo, self.parts[self.parts.len() - 1].hi)
    }

    /// Splits the set into 2π-translation generators.
    ///
    /// Breakpoints are the reductions mod 2π of every endpoint together with
    /// 0 and 2π. Every cell between consecutive breakpoints is either fully
    /// inside or fully outside each translate of each part, so the cell's
    /// step-widths are exactly the integers `n` with `cell + 2πn ⊆ E`.
    /// Adjacent cells with equal step-widths are merged.
    pub fn decompose(&self) -> Decomposition {
        let mut breaks: BTreeSet<RationalPi> = BTreeSet::new();
        breaks.insert(RationalPi::ZERO);
        breaks.insert(RationalPi::TWO_PI);
        for p in &self.parts {
            breaks.insert(tau_2pi(p.lo).0);
            breaks.insert(tau_2pi(p.hi).0);
        }
        let breaks: Vec<RationalPi> = breaks.into_iter().collect();

        let mut generators: Vec<Generator> = Vec::new();
        for cell in breaks.windows(2) {
            let (a, b) = (cell[0], cell[1]);
            let mut widths = Vec::new();
            for p in &self.parts {
                // a + 2πn ≥ lo  and  b + 2πn ≤ hi
                let two = Ratio::from_integer(2);
                let first = ((p.lo - a).0 / two).ceil().to_integer();
                let last = ((p.hi - b).0 / two).floor().to_integer();
                widths.extend(first..=last);
            }
            if widths.is_empty() {
                continue;
            }
            widths.sort_unstable();
            match generators.last_mut() {
                Some(g) if g.base.hi == a && g.widths == widths => g.base.hi = b,
                _ => generators.push(Generator {
                    base: Interval::half_open(a, b).expect("breakpoints are increasing"),
                    widths,
                }),
            }
        }
        Decomposition { generators }
    }
}

impl fmt::Display for BasicSupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " U ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for BasicSupportSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for BasicSupportSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BasicSupportSet::normalize(&parse_set(s)?)
    }
}

/// A subinterval of `[0, 2π)` together with its step-widths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub base: Interval,
    pub widths: Vec<i64>,
}

impl Generator {
    pub fn new(base: Interval, widths: Vec<i64>) -> Result<Self> {
        let g = Generator { base, widths };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        if self.base.lo < RationalPi::ZERO || self.base.hi > RationalPi::TWO_PI {
            return Err(Error::InvalidDecomposition(format!(
                "generator base {} is not inside [0,2pi)",
                self.base
            )));
        }
        if self.widths.is_empty() {
            return Err(Error::InvalidDecomposition(format!(
                "generator base {} has no step-widths",
                self.base
            )));
        }
        if self.widths.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDecomposition(format!(
                "step-widths {:?} are not strictly increasing",
                self.widths
            )));
        }
        Ok(())
    }

    /// The translates `base + 2πn` for every step-width `n`.
    pub fn translates(&self) -> impl Iterator<Item = Interval> + '_ {
        self.widths
            .iter()
            .map(|&n| self.base.canonical().translate(RationalPi::two_pi_times(n)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    pub generators: Vec<Generator>,
}

impl Decomposition {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        for g in &generators {
            g.validate()?;
        }
        Ok(Decomposition { generators })
    }

    /// The union of all translates; overlapping translates are rejected.
    pub fn reconstruct(&self) -> Result<BasicSupportSet> {
        let mut all: Vec<Interval> = self
            .generators
            .iter()
            .flat_map(|g| g.translates())
            .collect();
        all.sort_by_key(|iv| iv.lo);
        for w in all.windows(2) {
            if w[1].lo < w[0].hi {
                return Err(Error::InvalidDecomposition(format!(
                    "translates {} and {} overlap",
                    w[0], w[1]
                )));
            }
        }
        BasicSupportSet::normalize(&all)
    }

    /// True when the generator bases tile `[0, 2π)`, i.e. the 2π-periodization
    /// of the set is the whole line.
    pub fn covers_line(&self) -> bool {
        let bases: Vec<Interval> = self.generators.iter().map(|g| g.base).collect();
        match BasicSupportSet::normalize(&bases) {
            Ok(u) => {
                u.parts.len() == 1
                    && u.parts[0].lo == RationalPi::ZERO
                    && u.parts[0].hi == RationalPi::TWO_PI
            }
            Err(_) => false,
        }
    }
}

/// Parses a set literal such as `"(5/2pi,7/2pi] U (4pi,11/2pi]"` into its raw
/// intervals (closedness flags preserved, not yet canonicalized).
pub fn parse_set(text: &str) -> Result<Vec<Interval>> {
    let mut p = SetParser::new(text);
    let mut out = Vec::new();
    p.skip_ws();
    out.push(p.interval()?);
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        if !(p.eat("U") || p.eat("∪") || p.eat("u")) {
            return Err(Error::parse(p.pos, "expected 'U' between intervals"));
        }
        p.skip_ws();
        out.push(p.interval()?);
    }
    Ok(out)
}

/// Parses a single endpoint such as `5/2pi`, `-pi` or `0`.
pub fn parse_endpoint(text: &str) -> Result<RationalPi> {
    let mut p = SetParser::new(text);
    p.skip_ws();
    let v = p.endpoint()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(Error::parse(p.pos, "trailing input after endpoint"));
    }
    Ok(v)
}

pub(crate) struct SetParser<'a> {
    src: &'a str,
    pub(crate) pos: usize,
}

impl<'a> SetParser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        SetParser { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<i64> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return None;
        }
        let v = self.rest()[..digits].parse().ok();
        self.pos += digits;
        v
    }

    pub(crate) fn interval(&mut self) -> Result<Interval> {
        let start = self.pos;
        let lo_closed = if self.eat("[") {
            true
        } else if self.eat("(") {
            false
        } else {
            return Err(Error::parse(self.pos, "expected '[' or '('"));
        };
        self.skip_ws();
        let lo = self.endpoint()?;
        self.skip_ws();
        if !self.eat(",") {
            return Err(Error::parse(self.pos, "expected ','"));
        }
        self.skip_ws();
        let hi = self.endpoint()?;
        self.skip_ws();
        let hi_closed = if self.eat("]") {
            true
        } else if self.eat(")") {
            false
        } else {
            return Err(Error::parse(self.pos, "expected ']' or ')'"));
        };
        Interval::new(lo, hi, lo_closed, hi_closed).map_err(|e| Error::parse(start, e.to_string()))
    }

    fn endpoint(&mut self) -> Result<RationalPi> {
        let start = self.pos;
        let negative = self.eat("-");
        if !negative {
            self.eat("+");
        }
        let sign = if negative { -1 } else { 1 };
        let (num, den) = match self.integer() {
            Some(n) => {
                let den = if self.eat("/") {
                    match self.integer() {
                        Some(d) if d > 0 => d,
                        _ => return Err(Error::parse(self.pos, "expected positive denominator")),
                    }
                } else {
                    1
                };
                (n, den)
            }
            None => (1, 1),
        };
        self.skip_ws();
        let has_pi = self.eat("pi") || self.eat("π");
        let implicit_one = self.pos == start
            || !self.src[start..self.pos]
                .bytes()
                .any(|b| b.is_ascii_digit());
        if implicit_one && !has_pi {
            return Err(Error::parse(start, "expected endpoint"));
        }
        if !has_pi && num != 0 {
            return Err(Error::parse(
                start,
                "endpoint must be a rational multiple of pi (e.g. 5/2pi) or 0",
            ));
        }
        Ok(RationalPi::new(sign * num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> BasicSupportSet {
        s.parse().unwrap()
    }

    fn rp(n: i64, d: i64) -> RationalPi {
        RationalPi::new(n, d)
    }

    fn gen(lo: RationalPi, hi: RationalPi, widths: &[i64]) -> Generator {
        Generator::new(Interval::half_open(lo, hi).unwrap(), widths.to_vec()).unwrap()
    }

    #[test]
    fn normalize_merges() {
        assert_eq!(set("[0,2pi) U [2pi,4pi)"), set("[0,4pi)"));
        assert_eq!(set("[3pi,7pi)").parts().len(), 1);
        assert_eq!(set("[0,3pi) U [2pi,5pi)"), set("[0,5pi)"));
        assert_eq!(set("[4pi,5pi) U [0,pi)").parts()[0].lo(), RationalPi::ZERO);
    }

    #[test]
    fn normalize_rejects_empty() {
        assert_eq!(BasicSupportSet::normalize(&[]), Err(Error::EmptySet));
        assert!(matches!(
            "[pi,pi)".parse::<BasicSupportSet>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_2pi(rp(3, 1)), (rp(1, 1), 1));
        assert_eq!(tau_2pi(RationalPi::ZERO), (RationalPi::ZERO, 0));
        assert_eq!(tau_2pi(rp(5, 2)), (rp(1, 2), 1));
        assert_eq!(tau_2pi(rp(-1, 2)), (rp(3, 2), -1));
        assert_eq!(tau_2pi(rp(2, 1)), (RationalPi::ZERO, 1));
    }

    #[test]
    fn decompose_three_to_seven_pi() {
        let d = set("[3pi,7pi)").decompose();
        assert_eq!(
            d.generators,
            vec![
                gen(rp(0, 1), rp(1, 1), &[2, 3]),
                gen(rp(1, 1), rp(2, 1), &[1, 2])
            ]
        );
        assert!(d.covers_line());
    }

    #[test]
    fn decompose_half_open_example() {
        let d = set("(5/2pi,7/2pi] U (4pi,11/2pi]").decompose();
        assert_eq!(
            d.generators,
            vec![
                gen(rp(0, 1), rp(1, 2), &[2]),
                gen(rp(1, 2), rp(3, 2), &[1, 2])
            ]
        );
        assert!(!d.covers_line());
    }

    #[test]
    fn decompose_unit_period() {
        let d = set("[0,2pi)").decompose();
        assert_eq!(d.generators, vec![gen(rp(0, 1), rp(2, 1), &[0])]);
    }

    #[test]
    fn reconstruct_examples() {
        let d = Decomposition::new(vec![
            gen(rp(0, 1), rp(1, 1), &[2, 3]),
            gen(rp(1, 1), rp(2, 1), &[1, 2]),
        ])
        .unwrap();
        assert_eq!(d.reconstruct().unwrap(), set("[3pi,7pi)"));
        let d = Decomposition::new(vec![gen(rp(0, 1), rp(1, 1), &[0, 1])]).unwrap();
        assert_eq!(d.reconstruct().unwrap(), set("[0,pi) U [2pi,3pi)"));
    }

    #[test]
    fn reconstruct_rejects_overlap() {
        let d = Decomposition::new(vec![
            gen(rp(0, 1), rp(1, 1), &[0]),
            gen(rp(1, 2), rp(3, 2), &[0]),
        ])
        .unwrap();
        assert!(matches!(
            d.reconstruct(),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn generator_validation() {
        let base = Interval::half_open(rp(1, 1), rp(3, 1)).unwrap();
        assert!(Generator::new(base, vec![0]).is_err());
        let base = Interval::half_open(rp(0, 1), rp(1, 1)).unwrap();
        assert!(Generator::new(base, vec![]).is_err());
        assert!(Generator::new(base, vec![2, 1]).is_err());
    }

    #[test]
    fn covers_line_examples() {
        let d = Decomposition::new(vec![gen(rp(0, 1), rp(1, 1), &[0])]).unwrap();
        assert!(!d.covers_line());
        assert!(set("[0,2pi) U [4pi,6pi) U [8pi,10pi)")
            .decompose()
            .covers_line());
    }

    #[test]
    fn literal_errors_and_display() {
        assert!(parse_set("[0,3)").is_err());
        assert!(parse_set("[0,pi) V [2pi,3pi)").is_err());
        assert!(parse_set("[0,pi").is_err());
        assert_eq!(parse_endpoint("-5/2pi").unwrap(), rp(-5, 2));
        assert_eq!(parse_endpoint("π").unwrap(), rp(1, 1));
        assert_eq!(parse_endpoint("0").unwrap(), RationalPi::ZERO);
        let raw = parse_set("(5/2pi,7/2pi] ∪ (4pi,11/2pi]").unwrap();
        assert_eq!(raw[0].to_string(), "(5/2pi,7/2pi]");
        assert_eq!(set("[3pi,7pi)").to_string(), "[3pi,7pi)");
    }

    #[test]
    fn measure_is_conserved() {
        let e = set("[-7/3pi,1/2pi) U [3pi,19/4pi) U [6pi,9pi)");
        let d = e.decompose();
        let total = d.generators.iter().fold(RationalPi::ZERO, |acc, g| {
            let mut s = acc;
            for _ in &g.widths {
                s = s + g.base.length();
            }
            s
        });
        assert_eq!(total, e.measure());
        assert_eq!(d.reconstruct().unwrap(), e);
    }
}
