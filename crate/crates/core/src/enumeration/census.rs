use std::fmt::Write as _;

use thiserror::Error;

use super::{Ensemble, EnsembleKind, Lattice};
use crate::scalar::{ExactScalar, Rational};

/// Exact per-length results of one enumeration run. Counts are kept as
/// surface-contact histograms so any fugacity can be applied afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkCensus {
    pub lattice: Lattice,
    pub ensemble: Ensemble,
    pub n_max: usize,
    histograms: Vec<Vec<u128>>,
    r2_sums: Option<Vec<u128>>,
    symmetry_factor: u64,
}

impl WalkCensus {
    pub(crate) fn from_parts(
        lattice: Lattice,
        ensemble: Ensemble,
        n_max: usize,
        histograms: Vec<Vec<u128>>,
        r2_sums: Option<Vec<u128>>,
        symmetry_factor: u64,
    ) -> Self {
        debug_assert_eq!(histograms.len(), n_max + 1);
        WalkCensus { lattice, ensemble, n_max, histograms, r2_sums, symmetry_factor }
    }

    /// The same configurations under another fugacity or polygon weighting.
    pub fn reweighted(&self, ensemble: Ensemble) -> Result<WalkCensus, super::EnumerationError> {
        assert_eq!(ensemble.kind, self.ensemble.kind, "reweighting keeps the ensemble kind");
        ensemble.validate()?;
        Ok(WalkCensus { ensemble, ..self.clone() })
    }

    /// `histogram(n)[k]`: configurations of length `n` with `k` weighted
    /// surface vertices.
    pub fn histogram(&self, n: usize) -> &[u128] {
        &self.histograms[n]
    }

    /// Number of configurations of length `n`, ignoring weights.
    pub fn raw_count(&self, n: usize) -> u128 {
        self.histograms[n].iter().sum()
    }

    /// Weighted count `sum_k h_n(k) w(k)`.
    pub fn count(&self, n: usize) -> ExactScalar {
        if self.ensemble.kind == EnsembleKind::Free || self.is_unit_weight() {
            return ExactScalar::from_rational(Rational::from_integer(self.raw_count(n).into()));
        }
        let mut total = ExactScalar::zero();
        for (k, &h) in self.histograms[n].iter().enumerate() {
            if h != 0 {
                let w = self.ensemble.weight(k);
                total = total + w.scale(&Rational::from_integer(h.into()));
            }
        }
        total
    }

    fn is_unit_weight(&self) -> bool {
        self.ensemble.surface_fugacity == ExactScalar::one()
            && !(self.ensemble.kind == EnsembleKind::Polygon
                && self.ensemble.weighting == super::PolygonWeighting::ContactCount)
    }

    /// Integer counts; `None` if the weights make them non-integral.
    pub fn integer_counts(&self) -> Option<Vec<u128>> {
        self.is_unit_weight().then(|| (0..=self.n_max).map(|n| self.raw_count(n)).collect())
    }

    /// Sum of squared end-to-end distances in units of `1 / r2_scale`
    /// (free walks only).
    pub fn r2_sum(&self, n: usize) -> Option<u128> {
        self.r2_sums.as_ref().map(|r| r[n])
    }

    pub fn r2_scale(&self) -> u64 {
        self.lattice.r2_scale()
    }

    pub fn symmetry_factor(&self) -> u64 {
        self.symmetry_factor
    }

    /// Lengths with a nonzero weighted count.
    pub fn lengths(&self) -> Vec<usize> {
        (1..=self.n_max).filter(|&n| !self.count(n).is_zero()).collect()
    }

    /// `(N, weighted count)` as floats for series analysis.
    pub fn counts_f64(&self) -> Vec<(usize, f64)> {
        self.lengths().into_iter().map(|n| (n, self.count(n).to_f64())).collect()
    }

    /// `(N, <R^2>)` for free walks.
    pub fn mean_r2_f64(&self) -> Option<Vec<(usize, f64)>> {
        let r2 = self.r2_sums.as_ref()?;
        let scale = self.r2_scale() as f64;
        Some(
            self.lengths()
                .into_iter()
                .map(|n| (n, r2[n] as f64 / scale / self.raw_count(n) as f64))
                .collect(),
        )
    }

    pub fn metadata(&self) -> Vec<String> {
        let mut m = vec![
            format!("lattice: {}", self.lattice),
            format!("ensemble: {}", self.ensemble.kind),
            format!("surface_fugacity: {}", self.ensemble.surface_fugacity),
            format!("n_max: {}", self.n_max),
        ];
        if self.ensemble.kind == EnsembleKind::Polygon {
            m.push(format!("polygon_weighting: {}", self.ensemble.weighting));
            m.push("polygons rooted at the leftmost vertex on y=0, orientation divided out".into());
            m.push("polygon weight: a^m (unit) or m*a^m (contact-count), m = surface vertices".into());
        }
        if self.ensemble.kind == EnsembleKind::Free {
            m.push(format!(
                "symmetry: first step fixed, counts multiplied by {}",
                self.symmetry_factor
            ));
            m.push(format!("r2_sum units: bond^2/{}", self.r2_scale()));
        } else {
            m.push(match self.lattice {
                Lattice::Square => "surface vertices: y=0".into(),
                Lattice::Hexagonal => "surface vertices: y=0 with odd x (bond crossing the surface)".to_string(),
            });
            if self.ensemble.kind != EnsembleKind::Polygon {
                m.push("walk weight: a per surface vertex excluding the anchor".into());
            }
            if self.lattice == Lattice::Hexagonal {
                m.push("anchors: (0,0) and (1,0) on the row y=0".into());
            }
        }
        if self.ensemble.kind == EnsembleKind::Bridge {
            m.push("bridge: y_0 < y_i <= y_N for 1 <= i <= N".into());
        }
        m
    }

    /// CSV with header `N,count[,r2_sum]`; metadata as `#` lines unless
    /// `meta` is false. Extra metadata lines are appended verbatim.
    pub fn to_csv(&self, meta: bool, extra: &[String]) -> String {
        let mut s = String::new();
        if meta {
            for line in self.metadata().iter().chain(extra) {
                let _ = writeln!(s, "# {line}");
            }
        }
        s.push_str(if self.r2_sums.is_some() { "N,count,r2_sum\n" } else { "N,count\n" });
        for n in 1..=self.n_max {
            let _ = match self.r2_sum(n) {
                Some(r2) => writeln!(s, "{n},{},{r2}", self.count(n)),
                None => writeln!(s, "{n},{}", self.count(n)),
            };
        }
        s
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusCsvError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing header `N,count[,r2_sum]`")]
    MissingHeader,
}

/// Parsed enumeration CSV: `(N, count, r2_sum)` rows. Counts may be exact
/// radical expressions; they are read exactly and returned as floats, with
/// any `r2_scale` metadata applied to `r2_sum`.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvSeries {
    pub rows: Vec<(usize, f64, Option<f64>)>,
    pub metadata: Vec<String>,
}

pub fn read_csv(text: &str) -> Result<CsvSeries, CensusCsvError> {
    let mut metadata = Vec::new();
    let mut header: Option<bool> = None;
    let mut rows = Vec::new();
    let mut r2_scale = 1.0;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let bad = |message: String| CensusCsvError::Malformed { line: i + 1, message };
        if line.is_empty() {
            continue;
        }
        if let Some(m) = line.strip_prefix('#') {
            let m = m.trim().to_string();
            if let Some(units) = m.strip_prefix("r2_sum units: bond^2/") {
                r2_scale = units.parse::<f64>().map_err(|e| bad(e.to_string()))?;
            }
            metadata.push(m);
            continue;
        }
        let Some(has_r2) = header else {
            header = match line {
                "N,count" => Some(false),
                "N,count,r2_sum" => Some(true),
                _ => return Err(CensusCsvError::MissingHeader),
            };
            continue;
        };
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != if has_r2 { 3 } else { 2 } {
            return Err(bad(format!("expected {} fields", if has_r2 { 3 } else { 2 })));
        }
        let n = fields[0].trim().parse::<usize>().map_err(|e| bad(format!("N: {e}")))?;
        let count = fields[1].trim().parse::<ExactScalar>().map_err(|e| bad(format!("count: {e}")))?;
        let r2 = if has_r2 {
            let v = fields[2].trim().parse::<u128>().map_err(|e| bad(format!("r2_sum: {e}")))?;
            Some(v as f64 / r2_scale)
        } else {
            None
        };
        rows.push((n, count.to_f64(), r2));
    }
    if header.is_none() {
        return Err(CensusCsvError::MissingHeader);
    }
    Ok(CsvSeries { rows, metadata })
}
