//! Series analysis of enumeration data under the model
//! `c_N ~ A mu^N N^(g-1)` and `<R^2>_N ~ B N^(2 nu)`.
//!
//! Spreads are heuristics (variation of the estimator over the
//! extrapolation tail), not confidence intervals.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::enumeration::{EnsembleKind, WalkCensus};

/// Number of local estimates entering the `1/N` extrapolation.
pub const TAIL: usize = 5;
/// Fewest same-parity terms accepted.
pub const MIN_TERMS: usize = 7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FitError {
    #[error("need at least {needed} consecutive terms, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("count at N = {0} is not positive")]
    NonPositiveCount(usize),
    #[error("end-to-end moments are only available for free walks")]
    MissingMoments,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FitMethod {
    ThreePointSolve,
    RatioExtrapolation,
    /// Windowed log-log slope, used for `nu`.
    WindowedLeastSquares,
}

impl FitMethod {
    pub fn name(self) -> &'static str {
        match self {
            FitMethod::ThreePointSolve => "three-point",
            FitMethod::RatioExtrapolation => "ratio",
            FitMethod::WindowedLeastSquares => "windowed-lsq",
        }
    }
}

impl fmt::Display for FitMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FitMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "three-point" | "threepoint" => Ok(FitMethod::ThreePointSolve),
            "ratio" => Ok(FitMethod::RatioExtrapolation),
            "windowed-lsq" => Ok(FitMethod::WindowedLeastSquares),
            _ => Err(format!("unknown fit method {s:?} (expected three-point, ratio, windowed-lsq)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub mu_estimate: f64,
    pub exponent_estimate: f64,
    pub exponent_spread: f64,
    pub method: FitMethod,
    pub window: (usize, usize),
}

impl FitResult {
    pub fn csv_row(&self, quantity: &str) -> String {
        format!(
            "{quantity},{:.6},{:.6},{},{}-{}",
            self.exponent_estimate, self.exponent_spread, self.method, self.window.0, self.window.1
        )
    }
}

pub const CSV_HEADER: &str = "quantity,estimate,spread,method,window";

/// Two independent estimates of the same exponent.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossCheckedFit {
    pub three_point: FitResult,
    pub ratio: FitResult,
}

impl CrossCheckedFit {
    /// The methods agree within their combined spreads.
    pub fn stable(&self) -> bool {
        (self.three_point.exponent_estimate - self.ratio.exponent_estimate).abs()
            <= self.three_point.exponent_spread + self.ratio.exponent_spread
    }
}

/// Trailing run of positive terms with lengths of the same parity as the
/// longest one, spaced by 2. Both lattices are bipartite, so the full
/// series carries an alternating correction that this removes.
fn usable_series(points: &[(usize, f64)]) -> Result<(Vec<(usize, f64)>, usize), FitError> {
    if let Some(&(n, _)) = points.iter().find(|p| p.1 <= 0.0 || !p.1.is_finite()) {
        if points.iter().any(|p| p.0 > n && p.1 > 0.0) {
            return Err(FitError::NonPositiveCount(n));
        }
    }
    let pts: Vec<(usize, f64)> = points.iter().copied().filter(|p| p.1 > 0.0).collect();
    if pts.is_empty() {
        return Err(FitError::InsufficientData { needed: MIN_TERMS, got: 0 });
    }
    let last = pts[pts.len() - 1].0;
    let pts: Vec<(usize, f64)> = pts.into_iter().filter(|p| p.0 % 2 == last % 2).collect();
    let stride = 2;
    let mut start = pts.len() - 1;
    while start > 0 && pts[start].0 - pts[start - 1].0 == stride {
        start -= 1;
    }
    let run = pts[start..].to_vec();
    if run.len() < MIN_TERMS {
        return Err(FitError::InsufficientData { needed: MIN_TERMS, got: run.len() });
    }
    Ok((run, stride))
}

/// Least-squares line `y = a + b x`; returns `(a, b)`.
fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let b = sxy / sxx;
    (my - b * mx, b)
}

/// Extrapolates local estimates `(N, g_N)` to `N -> infinity`, linearly in
/// `1/N` over the last [`TAIL`] points. Returns `(intercept, spread, window)`.
fn extrapolate_tail(local: &[(usize, f64)]) -> (f64, f64, (usize, usize)) {
    let tail = &local[local.len() - TAIL..];
    let xs: Vec<f64> = tail.iter().map(|p| 1.0 / p.0 as f64).collect();
    let ys: Vec<f64> = tail.iter().map(|p| p.1).collect();
    let (a, _) = linear_fit(&xs, &ys);
    let spread = ys.iter().map(|y| (y - a).abs()).fold(0.0, f64::max);
    (a, spread, (tail[0].0, tail[TAIL - 1].0))
}

/// Solves `log c_k = k log mu + (g - 1) log k + C` at three equally spaced
/// lengths; returns `(log mu, g)`.
fn three_point(p: [(usize, f64); 3]) -> (f64, f64) {
    let m = p.map(|(k, c)| [k as f64, (k as f64).ln(), 1.0, c.ln()]);
    let sol = solve3([m[0], m[1], m[2]]);
    (sol[0], sol[1] + 1.0)
}

/// Gaussian elimination with partial pivoting on an augmented 3x4 system.
fn solve3(mut a: [[f64; 4]; 3]) -> [f64; 3] {
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).expect("rows");
        a.swap(col, piv);
        for row in col + 1..3 {
            let f = a[row][col] / a[col][col];
            let pivot = a[col];
            for (x, p) in a[row].iter_mut().zip(pivot).skip(col) {
                *x -= f * p;
            }
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let s: f64 = (row + 1..3).map(|k| a[row][k] * x[k]).sum();
        x[row] = (a[row][3] - s) / a[row][row];
    }
    x
}

/// Neville table in `1/N` for terms spaced by `s`: removes the first
/// `order` inverse powers of `N`.
fn neville(seq: &[(f64, f64)], order: usize, s: f64) -> Vec<(f64, f64)> {
    let mut cur = seq.to_vec();
    for k in 1..=order {
        let ks = k as f64 * s;
        cur = cur.windows(2).map(|w| (w[1].0, (w[1].0 * w[1].1 - (w[1].0 - ks) * w[0].1) / ks)).collect();
    }
    cur
}

/// Fits `g` in `c_N ~ A mu^N N^(g-1)` from `(N, c_N)` points.
pub fn fit_entropic_series(points: &[(usize, f64)], method: FitMethod) -> Result<FitResult, FitError> {
    let (pts, s) = usable_series(points)?;
    match method {
        FitMethod::ThreePointSolve | FitMethod::WindowedLeastSquares => {
            let local: Vec<(usize, f64, f64)> = pts
                .windows(3)
                .map(|w| {
                    let (lm, g) = three_point([w[0], w[1], w[2]]);
                    (w[2].0, lm, g)
                })
                .collect();
            let gs: Vec<(usize, f64)> = local.iter().map(|t| (t.0, t.2)).collect();
            let (g, spread, window) = extrapolate_tail(&gs);
            let mu = local.last().expect("nonempty").1.exp();
            Ok(FitResult { mu_estimate: mu, exponent_estimate: g, exponent_spread: spread, method: FitMethod::ThreePointSolve, window })
        }
        FitMethod::RatioExtrapolation => {
            let sf = s as f64;
            // r_N = (c_N / c_{N-s})^(1/s) ~ mu (1 + (g-1)/N).
            let ratios: Vec<(f64, f64)> = pts.windows(2).map(|w| (w[1].0 as f64, (w[1].1 / w[0].1).powf(1.0 / sf))).collect();
            let mus = neville(&ratios, 2, sf);
            let mu = mus[mus.len() - 3..].iter().map(|p| p.1).sum::<f64>() / 3.0;
            // (r_N / mu)^s = (N / (N - s))^(g - 1) for the pure model.
            let g1: Vec<(f64, f64)> =
                ratios.iter().map(|&(n, r)| (n, 1.0 + sf * (r / mu).ln() / (n / (n - sf)).ln())).collect();
            let g2: Vec<(usize, f64)> =
                g1.windows(2).map(|w| (w[1].0 as usize, (w[1].0 * w[1].1 - w[0].0 * w[0].1) / sf)).collect();
            let tail: Vec<f64> = g2[g2.len() - TAIL..].iter().map(|p| p.1).collect();
            let lo = tail.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            Ok(FitResult {
                mu_estimate: mu,
                exponent_estimate: *tail.last().expect("nonempty"),
                exponent_spread: hi - lo,
                method,
                window: (g2[g2.len() - TAIL].0, g2[g2.len() - 1].0),
            })
        }
    }
}

/// Fits `p` in `y_N ~ B N^p`: local slopes of `log y` against `log N` over
/// four-term windows, then `1/N` extrapolation.
pub fn fit_power_series(points: &[(usize, f64)]) -> Result<FitResult, FitError> {
    let (pts, s) = usable_series(points)?;
    let local: Vec<(usize, f64)> = pts
        .windows(4)
        .map(|w| {
            let xs: Vec<f64> = w.iter().map(|p| (p.0 as f64).ln()).collect();
            let ys: Vec<f64> = w.iter().map(|p| p.1.ln()).collect();
            (w[3].0, linear_fit(&xs, &ys).1)
        })
        .collect();
    if local.len() < TAIL {
        return Err(FitError::InsufficientData { needed: TAIL + 3, got: pts.len() });
    }
    let (p, spread, window) = extrapolate_tail(&local);
    let last = &pts[pts.len() - 2..];
    let mu = (last[1].1 / last[0].1).powf(1.0 / s as f64);
    Ok(FitResult { mu_estimate: mu, exponent_estimate: p, exponent_spread: spread, method: FitMethod::WindowedLeastSquares, window })
}

/// Fits `nu` in `<R^2>_N ~ B N^(2 nu)` from `(N, <R^2>_N)` points.
pub fn fit_nu_series(points: &[(usize, f64)]) -> Result<FitResult, FitError> {
    let f = fit_power_series(points)?;
    Ok(FitResult { exponent_estimate: f.exponent_estimate / 2.0, exponent_spread: f.exponent_spread / 2.0, ..f })
}

pub fn fit_entropic(census: &WalkCensus, method: FitMethod) -> Result<FitResult, FitError> {
    fit_entropic_series(&census.counts_f64(), method)
}

/// `nu` from the end-to-end moments of a free-walk census.
pub fn fit_nu(census: &WalkCensus) -> Result<FitResult, FitError> {
    if census.ensemble.kind != EnsembleKind::Free {
        return Err(FitError::MissingMoments);
    }
    fit_nu_series(&census.mean_r2_f64().ok_or(FitError::MissingMoments)?)
}

/// Exponent shift between two weightings of the same configurations,
/// fitted as the power of `N` in the ratio of their weighted counts.
pub fn fit_weighting_shift(base: &WalkCensus, weighted: &WalkCensus) -> Result<FitResult, FitError> {
    let ratio: Vec<(usize, f64)> = base
        .counts_f64()
        .into_iter()
        .map(|(n, c)| (n, weighted.count(n).to_f64() / c))
        .collect();
    fit_power_series(&ratio)
}

pub fn fit_cross_checked(points: &[(usize, f64)]) -> Result<CrossCheckedFit, FitError> {
    Ok(CrossCheckedFit {
        three_point: fit_entropic_series(points, FitMethod::ThreePointSolve)?,
        ratio: fit_entropic_series(points, FitMethod::RatioExtrapolation)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(mu: f64, g: f64, amp: f64, ns: impl Iterator<Item = usize>) -> Vec<(usize, f64)> {
        ns.map(|n| (n, amp * mu.powi(n as i32) * (n as f64).powf(g - 1.0))).collect()
    }

    #[test]
    fn exact_model_is_recovered() {
        let pts = model(2.5, 1.25, 3.0, 1..=20);
        let f = fit_entropic_series(&pts, FitMethod::ThreePointSolve).unwrap();
        assert!((f.exponent_estimate - 1.25).abs() < 1e-9, "{f:?}");
        assert!((f.mu_estimate - 2.5).abs() < 1e-9);
        assert_eq!(f.window, (12, 20));
    }

    #[test]
    fn even_only_series_use_stride_two() {
        let pts = model(1.8, 0.5, 1.0, (2..=28).step_by(2));
        let f = fit_entropic_series(&pts, FitMethod::ThreePointSolve).unwrap();
        assert!((f.exponent_estimate - 0.5).abs() < 1e-9);
        let r = fit_entropic_series(&pts, FitMethod::RatioExtrapolation).unwrap();
        assert!((r.exponent_estimate - 0.5).abs() < 1e-2, "{r:?}");
    }

    #[test]
    fn rounded_synthetic_census() {
        let pts: Vec<_> = model(2.5, 1.25, 1.0, 1..=20).into_iter().map(|(n, c)| (n, c.round())).collect();
        for method in [FitMethod::ThreePointSolve, FitMethod::RatioExtrapolation] {
            let f = fit_entropic_series(&pts, method).unwrap();
            assert!((f.exponent_estimate - 1.25).abs() < 0.05, "{f:?}");
        }
    }

    #[test]
    fn nu_from_power_law() {
        let pts: Vec<_> = (1..=20).map(|n| (n, (n as f64).powf(1.5))).collect();
        assert!((fit_nu_series(&pts).unwrap().exponent_estimate - 0.75).abs() < 1e-6);
        let rw: Vec<_> = (1..=20).map(|n| (n, n as f64)).collect();
        assert!((fit_nu_series(&rw).unwrap().exponent_estimate - 0.5).abs() < 1e-3);
    }

    #[test]
    fn errors() {
        let short = model(2.0, 1.0, 1.0, 1..=5);
        assert_eq!(
            fit_entropic_series(&short, FitMethod::ThreePointSolve),
            Err(FitError::InsufficientData { needed: MIN_TERMS, got: 3 })
        );
        let mut pts = model(2.0, 1.0, 1.0, 1..=12);
        pts[3].1 = 0.0;
        assert_eq!(fit_entropic_series(&pts, FitMethod::ThreePointSolve), Err(FitError::NonPositiveCount(4)));
    }
}
