use polynet::enumeration::{enumerate_with, read_csv, Ensemble, EnsembleKind, Execution, Lattice};
use polynet::fitting::{fit_cross_checked, fit_entropic, fit_entropic_series, fit_nu, FitError, FitMethod};

fn square(kind: EnsembleKind, n_max: usize) -> polynet::enumeration::WalkCensus {
    enumerate_with(Lattice::Square, &Ensemble::new(kind), n_max, Execution::Sequential).unwrap()
}

#[test]
fn free_walks_at_sixteen_steps() {
    let free = square(EnsembleKind::Free, 16);
    let gamma = fit_entropic(&free, FitMethod::ThreePointSolve).unwrap();
    assert!((gamma.exponent_estimate - 43.0 / 32.0).abs() < 0.15, "{gamma:?}");
    assert!((gamma.mu_estimate - 2.638).abs() < 0.05, "{gamma:?}");
    let nu = fit_nu(&free).unwrap();
    assert!((nu.exponent_estimate - 0.75).abs() < 0.06, "{nu:?}");
}

#[test]
fn bridge_and_arch_differ_by_nu() {
    let b = fit_cross_checked(&square(EnsembleKind::Bridge, 16).counts_f64()).unwrap();
    let a = fit_cross_checked(&square(EnsembleKind::Arch, 16).counts_f64()).unwrap();
    let diff = b.three_point.exponent_estimate - a.three_point.exponent_estimate;
    assert!((diff - 0.75).abs() < 0.2, "{diff}");
}

#[test]
fn csv_fit_matches_in_memory_fit() {
    let census = square(EnsembleKind::Taw, 14);
    let direct = fit_entropic(&census, FitMethod::RatioExtrapolation).unwrap();
    let series = read_csv(&census.to_csv(true, &[])).unwrap();
    let points: Vec<(usize, f64)> = series.rows.iter().map(|r| (r.0, r.1)).collect();
    assert_eq!(fit_entropic_series(&points, FitMethod::RatioExtrapolation).unwrap(), direct);
}

#[test]
fn short_and_broken_series_are_rejected() {
    let short: Vec<(usize, f64)> = (1..=4).map(|n| (n, 3f64.powi(n as i32))).collect();
    assert!(matches!(fit_entropic_series(&short, FitMethod::ThreePointSolve), Err(FitError::InsufficientData { .. })));
    let mut gap: Vec<(usize, f64)> = (1..=16).map(|n| (n, 3f64.powi(n as i32))).collect();
    gap[5].1 = 0.0;
    assert!(matches!(fit_entropic_series(&gap, FitMethod::ThreePointSolve), Err(FitError::NonPositiveCount(6))));
    let arch = square(EnsembleKind::Arch, 12);
    assert!(fit_nu(&arch).is_err());
}
