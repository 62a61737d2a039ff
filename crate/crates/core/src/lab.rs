//! Desk-scale enumeration lab: enumerate, fit, and compare against the
//! frozen tolerances in `fixtures/tolerances.csv`.

use std::fmt;

use thiserror::Error;

use crate::enumeration::{enumerate_with, Ensemble, EnsembleKind, EnumerationError, Execution, Lattice, PolygonWeighting};
use crate::fitting::{
    fit_cross_checked, fit_nu, fit_weighting_shift, FitError, FitMethod, FitResult,
};
use crate::scalar::ExactScalar;

const FIXTURE: &str = include_str!("../fixtures/tolerances.csv");

/// Square-lattice adsorption fugacity used for the polygon weighting check.
pub const SQUARE_POLYGON_FUGACITY: (i64, i64) = (4439, 2500);

/// Smallest length whose hexagonal ratio enters the connective-constant check.
pub const HEXAGONAL_RATIO_FROM: usize = 24;

#[derive(Debug, Error)]
pub enum LabError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("{quantity}: {source}")]
    Fit { quantity: String, source: FitError },
    #[error("tolerance fixture: {0}")]
    Fixture(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tolerance {
    pub quantity: String,
    pub lattice: Lattice,
    pub n_max: usize,
    pub target: String,
    pub target_value: f64,
    pub tolerance: f64,
}

pub fn parse_tolerances(text: &str) -> Result<Vec<Tolerance>, LabError> {
    let bad = |line: usize, msg: &str| LabError::Fixture(format!("line {line}: {msg}"));
    let mut rows = Vec::new();
    let mut header = false;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !header {
            if line != "quantity,lattice,n_max,target,target_value,tolerance" {
                return Err(bad(i + 1, "unexpected header"));
            }
            header = true;
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 6 {
            return Err(bad(i + 1, "expected 6 fields"));
        }
        rows.push(Tolerance {
            quantity: f[0].to_string(),
            lattice: f[1].parse().map_err(|_| bad(i + 1, "bad lattice"))?,
            n_max: f[2].parse().map_err(|_| bad(i + 1, "bad n_max"))?,
            target: f[3].to_string(),
            target_value: f[4].parse().map_err(|_| bad(i + 1, "bad target_value"))?,
            tolerance: f[5].parse().map_err(|_| bad(i + 1, "bad tolerance"))?,
        });
    }
    Ok(rows)
}

/// The tolerances shipped with the crate.
pub fn frozen_tolerances() -> Vec<Tolerance> {
    parse_tolerances(FIXTURE).expect("bundled fixture parses")
}

fn tolerance(quantity: &str) -> Result<Tolerance, LabError> {
    frozen_tolerances()
        .into_iter()
        .find(|t| t.quantity == quantity)
        .ok_or_else(|| LabError::Fixture(format!("no row for {quantity}")))
}

#[derive(Clone, Debug, PartialEq)]
pub struct LabCheck {
    pub criterion: u8,
    pub quantity: String,
    pub estimate: f64,
    pub spread: f64,
    pub method: FitMethod,
    pub window: (usize, usize),
    pub target: String,
    pub target_value: f64,
    pub tolerance: f64,
    /// Three-point and ratio estimates agree within their spreads; `None`
    /// when only one method applies.
    pub stable: Option<bool>,
}

impl LabCheck {
    fn new(criterion: u8, tol: &Tolerance, fit: &FitResult, stable: Option<bool>) -> Self {
        LabCheck {
            criterion,
            quantity: tol.quantity.clone(),
            estimate: fit.exponent_estimate,
            spread: fit.exponent_spread,
            method: fit.method,
            window: fit.window,
            target: tol.target.clone(),
            target_value: tol.target_value,
            tolerance: tol.tolerance,
            stable,
        }
    }

    pub fn deviation(&self) -> f64 {
        (self.estimate - self.target_value).abs()
    }

    pub fn passed(&self) -> bool {
        self.estimate.is_finite() && self.deviation() <= self.tolerance
    }

    pub fn fit_result(&self) -> FitResult {
        FitResult {
            mu_estimate: f64::NAN,
            exponent_estimate: self.estimate,
            exponent_spread: self.spread,
            method: self.method,
            window: self.window,
        }
    }
}

impl fmt::Display for LabCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let stable = match self.stable {
            Some(true) => ", stable",
            Some(false) => ", methods disagree",
            None => "",
        };
        write!(
            f,
            "{status} {:<24} {:>9.5} +- {:.5} ({}, N {}..{}{stable}) target {} within {}",
            self.quantity, self.estimate, self.spread, self.method, self.window.0, self.window.1, self.target, self.tolerance
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct LabReport {
    pub checks: Vec<LabCheck>,
}

impl LabReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(LabCheck::passed)
    }

    pub fn criterion(&self, c: u8) -> impl Iterator<Item = &LabCheck> {
        self.checks.iter().filter(move |k| k.criterion == c)
    }
}

fn fit_err(quantity: &str) -> impl FnOnce(FitError) -> LabError + '_ {
    move |source| LabError::Fit { quantity: quantity.to_string(), source }
}

/// gamma, nu, gamma_b, gamma_11 and their difference on the square lattice.
pub fn square_exponents(exec: Execution) -> Result<Vec<LabCheck>, LabError> {
    let entropic = |quantity: &str, kind| -> Result<(LabCheck, FitResult), LabError> {
        let tol = tolerance(quantity)?;
        let census = enumerate_with(Lattice::Square, &Ensemble::new(kind), tol.n_max, exec)?;
        let both = fit_cross_checked(&census.counts_f64()).map_err(fit_err(quantity))?;
        let check = LabCheck::new(5, &tol, &both.three_point, Some(both.stable()));
        Ok((check, both.three_point))
    };
    let (gamma, _) = entropic("gamma", EnsembleKind::Free)?;
    let (gamma_b, fit_b) = entropic("gamma_b", EnsembleKind::Bridge)?;
    let (gamma_11, fit_11) = entropic("gamma_11", EnsembleKind::Arch)?;

    let tol = tolerance("nu")?;
    let free = enumerate_with(Lattice::Square, &Ensemble::new(EnsembleKind::Free), tol.n_max, exec)?;
    let nu = LabCheck::new(5, &tol, &fit_nu(&free).map_err(fit_err("nu"))?, None);

    let diff = FitResult {
        mu_estimate: f64::NAN,
        exponent_estimate: fit_b.exponent_estimate - fit_11.exponent_estimate,
        exponent_spread: fit_b.exponent_spread + fit_11.exponent_spread,
        method: FitMethod::ThreePointSolve,
        window: (fit_b.window.0.min(fit_11.window.0), fit_b.window.1.max(fit_11.window.1)),
    };
    let diff = LabCheck::new(5, &tolerance("gamma_b_minus_gamma_11")?, &diff, None);
    Ok(vec![gamma, nu, gamma_b, gamma_11, diff])
}

/// Exponent shift of half-plane polygons when each is weighted by its
/// number of surface vertices, at the square-lattice adsorption point.
pub fn polygon_weighting_shift(exec: Execution) -> Result<LabCheck, LabError> {
    let tol = tolerance("polygon_weighting_shift")?;
    let (p, q) = SQUARE_POLYGON_FUGACITY;
    let unit = Ensemble::new(EnsembleKind::Polygon).with_fugacity(ExactScalar::ratio(p, q))?;
    let base = enumerate_with(tol.lattice, &unit, tol.n_max, exec)?;
    let weighted = base.reweighted(unit.with_weighting(PolygonWeighting::ContactCount))?;
    let fit = fit_weighting_shift(&base, &weighted).map_err(fit_err("polygon_weighting_shift"))?;
    Ok(LabCheck::new(6, &tol, &fit, None))
}

/// The hexagonal free-walk ratio `c_N / c_{N-1}` farthest from the target
/// over `HEXAGONAL_RATIO_FROM <= N <= n_max`, reported with the full list.
pub fn hexagonal_mu(exec: Execution) -> Result<(LabCheck, Vec<(usize, f64)>), LabError> {
    let tol = tolerance("hexagonal_mu")?;
    let census = enumerate_with(tol.lattice, &Ensemble::new(EnsembleKind::Free), tol.n_max, exec)?;
    let ratios: Vec<(usize, f64)> = (HEXAGONAL_RATIO_FROM.max(2)..=tol.n_max)
        .map(|n| (n, census.raw_count(n) as f64 / census.raw_count(n - 1) as f64))
        .collect();
    let worst = ratios
        .iter()
        .copied()
        .max_by(|a, b| (a.1 - tol.target_value).abs().total_cmp(&(b.1 - tol.target_value).abs()))
        .ok_or_else(|| LabError::Fixture("hexagonal n_max below the ratio range".into()))?;
    let (lo, hi) = ratios.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r.1), hi.max(r.1)));
    let fit = FitResult {
        mu_estimate: worst.1,
        exponent_estimate: worst.1,
        exponent_spread: hi - lo,
        method: FitMethod::RatioExtrapolation,
        window: (HEXAGONAL_RATIO_FROM, tol.n_max),
    };
    Ok((LabCheck::new(7, &tol, &fit, None), ratios))
}

/// Everything `fit --acceptance` runs.
pub fn run_lab(exec: Execution) -> Result<LabReport, LabError> {
    let mut checks = square_exponents(exec)?;
    checks.push(polygon_weighting_shift(exec)?);
    checks.push(hexagonal_mu(exec)?.0);
    Ok(LabReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_has_every_quantity() {
        let rows = frozen_tolerances();
        for q in ["gamma", "nu", "gamma_b", "gamma_11", "gamma_b_minus_gamma_11", "polygon_weighting_shift", "hexagonal_mu"] {
            assert!(rows.iter().any(|r| r.quantity == q), "{q}");
        }
        let mu = rows.iter().find(|r| r.quantity == "hexagonal_mu").unwrap();
        assert!((mu.target_value - (2.0 + 2f64.sqrt()).sqrt()).abs() < 1e-15);
        let shift = rows.iter().find(|r| r.quantity == "polygon_weighting_shift").unwrap();
        assert_eq!((shift.target_value - shift.tolerance, shift.target_value + shift.tolerance), (0.2, 0.8));
    }

    #[test]
    fn fixture_errors() {
        assert!(parse_tolerances("nope\n").is_err());
        let head = "quantity,lattice,n_max,target,target_value,tolerance\n";
        assert!(parse_tolerances(&format!("{head}gamma,cubic,20,1,1,0.1\n")).is_err());
        assert!(parse_tolerances(&format!("{head}gamma,square,20,1,1\n")).is_err());
    }
}
