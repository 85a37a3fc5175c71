//! Gauss–Legendre panels. Nodes are interior, so integrands with jumps at
//! panel edges are never sampled on the wrong side of a jump.

const GL8: [(f64, f64); 8] = [
    (-0.960_289_856_497_536_3, 0.101_228_536_290_376_3),
    (-0.796_666_477_413_626_7, 0.222_381_034_453_374_5),
    (-0.525_532_409_916_329, 0.313_706_645_877_887_3),
    (-0.183_434_642_495_649_8, 0.362_683_783_378_362),
    (0.183_434_642_495_649_8, 0.362_683_783_378_362),
    (0.525_532_409_916_329, 0.313_706_645_877_887_3),
    (0.796_666_477_413_626_7, 0.222_381_034_453_374_5),
    (0.960_289_856_497_536_3, 0.101_228_536_290_376_3),
];

pub(crate) const NODES_PER_PANEL: usize = 8;

/// `(node, weight)` pairs of composite 8-point Gauss–Legendre on `[a, b]`
/// with `panels` equal panels.
pub(crate) fn composite_nodes(a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    let mut out = Vec::with_capacity(panels * NODES_PER_PANEL);
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        for &(x, w) in &GL8 {
            out.push((mid + 0.5 * h * x, 0.5 * h * w));
        }
    }
    out
}

fn gl8<E>(f: &mut impl FnMut(f64) -> Result<f64, E>, a: f64, b: f64) -> Result<f64, E> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut s = 0.0;
    for &(x, w) in &GL8 {
        s += w * f(mid + half * x)?;
    }
    Ok(s * half)
}

/// Adaptive bisection with 8-point panels. The error budget is `tol` times a
/// first estimate of `∫|f|`, split evenly between halves.
pub(crate) fn adaptive<E>(
    f: &mut impl FnMut(f64) -> Result<f64, E>,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, E> {
    fn recurse<E>(
        f: &mut impl FnMut(f64) -> Result<f64, E>,
        a: f64,
        b: f64,
        whole: f64,
        budget: f64,
        depth: u32,
    ) -> Result<f64, E> {
        let m = 0.5 * (a + b);
        let left = gl8(f, a, m)?;
        let right = gl8(f, m, b)?;
        let halves = left + right;
        if depth >= 30 || (halves - whole).abs() <= budget {
            return Ok(halves);
        }
        Ok(recurse(f, a, m, left, 0.5 * budget, depth + 1)?
            + recurse(f, m, b, right, 0.5 * budget, depth + 1)?)
    }
    // a few initial panels so narrow features are not skipped
    const START: usize = 16;
    let h = (b - a) / START as f64;
    let mut panels = Vec::with_capacity(START);
    let mut scale = 0.0;
    for k in 0..START {
        let (lo, hi) = (a + k as f64 * h, a + (k + 1) as f64 * h);
        let mut abs_f = |x: f64| f(x).map(f64::abs);
        scale += gl8(&mut abs_f, lo, hi)?;
        panels.push((lo, hi, gl8(f, lo, hi)?));
    }
    let budget = tol * scale.max(f64::MIN_POSITIVE) / START as f64;
    let mut total = 0.0;
    for (lo, hi, whole) in panels {
        total += recurse(f, lo, hi, whole, budget, 0)?;
    }
    Ok(total)
}

/// Sorted distinct points of `pts` inside `(a, b)`, with `a` and `b` added.
pub(crate) fn segments(a: f64, b: f64, pts: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let mut v: Vec<f64> = pts.into_iter().filter(|&t| t > a && t < b).collect();
    v.push(a);
    v.push(b);
    v.sort_by(f64::total_cmp);
    v.dedup_by(|x, y| (*x - *y).abs() <= 1e-12 * y.abs().max(1.0));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        let nodes = composite_nodes(0.0, 2.0, 3);
        let s: f64 = nodes.iter().map(|&(x, w)| w * x.powi(15)).sum();
        assert!((s - 2f64.powi(16) / 16.0).abs() < 1e-9);
    }

    #[test]
    fn adaptive_handles_smooth_peaks() {
        let mut f = |x: f64| -> Result<f64, ()> { Ok(1.0 / (1e-4 + x * x)) };
        let s = adaptive(&mut f, -1.0, 1.0, 1e-13).unwrap();
        let exact = 2.0 * (1.0f64 / 1e-2).atan() / 1e-2;
        assert!((s - exact).abs() / exact < 1e-11);
    }
}
