//! Exact configuration exponents of polymer networks near surfaces, the
//! SLE/KPZ exponent algebra behind them, and a lattice walk enumeration
//! and series-fitting lab.

pub mod enumeration;
pub mod fitting;
pub mod lab;
pub mod network;
pub mod scalar;
pub mod series;
pub mod sle;
pub mod tables;
pub mod verify;

pub use scalar::{ExactScalar, Rational};
pub use series::{EpsilonOrder, EpsilonSeries, Exponent};
