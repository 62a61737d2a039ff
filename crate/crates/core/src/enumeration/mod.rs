//! Exact enumeration of self-avoiding walk ensembles on planar lattices.
//!
//! Conventions:
//! - free walks start at the origin; the first step is fixed and counts are
//!   multiplied by the coordination number;
//! - half-space ensembles live in `y >= 0` and start on the surface row;
//!   on the hexagonal lattice both boundary sublattices are anchors;
//! - surface vertices are those adjacent to the excluded half-plane `y < 0`
//!   (the whole row `y = 0` on the square lattice, its odd-`x` sites on the
//!   hexagonal one); walks are weighted by `a` per surface vertex other
//!   than the anchor;
//! - bridges satisfy `y_0 < y_i <= y_N` for `1 <= i <= N`;
//! - polygons are rooted at their leftmost vertex on `y = 0`, orientation
//!   divided out, and weighted by `a^m` with `m` the number of surface
//!   vertices; `ContactCount` multiplies this by `m`.

mod census;
mod engine;
mod lattice;
mod oracle;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::ExactScalar;

pub use census::{read_csv, CensusCsvError, CsvSeries, WalkCensus};
pub use engine::{enumerate, enumerate_with, Execution};
pub use lattice::Lattice;
pub use oracle::{oracle_enumerate, ORACLE_MAX_N};

pub const MAX_N: usize = 28;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("N_max = {0} exceeds the limit of {MAX_N}")]
    NMaxTooLarge(usize),
    #[error("N_max must be at least 1")]
    NMaxTooSmall,
    #[error("surface fugacity must be nonnegative, got {0}")]
    InvalidFugacity(String),
    #[error("thread count must be at least 1")]
    InvalidThreads,
    #[error("oracle enumeration is limited to N <= {ORACLE_MAX_N}, got {0}")]
    OracleTooLarge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnsembleKind {
    Free,
    /// Terminally attached walk.
    Taw,
    Arch,
    Bridge,
    Polygon,
}

impl EnsembleKind {
    pub const ALL: [EnsembleKind; 5] =
        [EnsembleKind::Free, EnsembleKind::Taw, EnsembleKind::Arch, EnsembleKind::Bridge, EnsembleKind::Polygon];

    pub fn name(self) -> &'static str {
        match self {
            EnsembleKind::Free => "free",
            EnsembleKind::Taw => "taw",
            EnsembleKind::Arch => "arch",
            EnsembleKind::Bridge => "bridge",
            EnsembleKind::Polygon => "polygon",
        }
    }

    pub fn is_half_space(self) -> bool {
        self != EnsembleKind::Free
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnsembleKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        EnsembleKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown ensemble {s:?} (expected free, taw, arch, bridge, polygon)"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PolygonWeighting {
    #[default]
    Unit,
    ContactCount,
}

impl fmt::Display for PolygonWeighting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolygonWeighting::Unit => "unit",
            PolygonWeighting::ContactCount => "contact-count",
        })
    }
}

impl FromStr for PolygonWeighting {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "unit" => Ok(PolygonWeighting::Unit),
            "contact-count" | "contacts" | "m" => Ok(PolygonWeighting::ContactCount),
            _ => Err(format!("unknown polygon weighting {s:?} (expected unit, contact-count)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ensemble {
    pub kind: EnsembleKind,
    pub surface_fugacity: ExactScalar,
    pub weighting: PolygonWeighting,
}

impl Ensemble {
    pub fn new(kind: EnsembleKind) -> Self {
        Ensemble { kind, surface_fugacity: ExactScalar::one(), weighting: PolygonWeighting::Unit }
    }

    pub fn with_fugacity(mut self, a: ExactScalar) -> Result<Self, EnumerationError> {
        if a.signum() < 0 {
            return Err(EnumerationError::InvalidFugacity(a.to_string()));
        }
        self.surface_fugacity = a;
        Ok(self)
    }

    pub fn with_weighting(mut self, weighting: PolygonWeighting) -> Self {
        self.weighting = weighting;
        self
    }

    /// Weight of a configuration with `k` weighted surface vertices.
    pub fn weight(&self, contacts: usize) -> ExactScalar {
        let base = self.surface_fugacity.pow(contacts as u32);
        match (self.kind, self.weighting) {
            (EnsembleKind::Polygon, PolygonWeighting::ContactCount) => base.scale(&crate::scalar::int(contacts as i64)),
            _ => base,
        }
    }

    pub(crate) fn validate(&self) -> Result<(), EnumerationError> {
        if self.surface_fugacity.signum() < 0 {
            return Err(EnumerationError::InvalidFugacity(self.surface_fugacity.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} a={}", self.kind, self.surface_fugacity)?;
        if self.kind == EnsembleKind::Polygon {
            write!(f, " weighting={}", self.weighting)?;
        }
        Ok(())
    }
}
