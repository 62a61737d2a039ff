//! KPZ maps, multiple-SLE exponent families, SLE(rho) boundary exponents,
//! quantum wedge and cone welding, and special/mixed boundary exponents.
//!
//! `kappa` is a positive rational so every identity is decided exactly; the
//! [`float`] submodule evaluates the same closed forms for real `kappa`.

pub mod float;
mod special;
mod welding;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::{fmt_rational, int, parse_rational, rat, ExactScalar, Rational, ScalarError};

pub use special::{mixed_x, modified_kpz, special_quantum_dim, special_x, special_x_kac};
pub use welding::{
    cone_dims_closed_form, cone_weight_bulk, kpz_standard, rho_wedge_weight, wedge_dims_closed_form,
    wedge_weight_boundary, weight_to_dims, welding_consistency, WeightKind, WeldedDims, WedgeWeight,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SleError {
    #[error("kappa must be positive, got {0}")]
    NonPositiveKappa(String),
    #[error("kappa = {kappa} outside the range {range} required here")]
    KappaOutOfRange { kappa: String, range: &'static str },
    #[error("negative discriminant: no real inverse of U for x = {0}")]
    NegativeDiscriminant(String),
    #[error("j = {j} outside 0..={max}")]
    JOutOfRange { j: u32, max: u32 },
    #[error("leg count must be at least 1")]
    InvalidLegCount,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    /// `kappa <= 4`
    Simple,
    /// `kappa > 4`
    NonSimple,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Kappa(Rational);

impl Kappa {
    pub fn new(value: Rational) -> Result<Self, SleError> {
        if !value.is_positive() {
            return Err(SleError::NonPositiveKappa(fmt_rational(&value)));
        }
        Ok(Kappa(value))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Kappa::new(rat(p, q)).expect("positive kappa")
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn phase(&self) -> Phase {
        if self.0 <= int(4) {
            Phase::Simple
        } else {
            Phase::NonSimple
        }
    }

    /// `16 / kappa`.
    pub fn dual(&self) -> Kappa {
        Kappa(int(16) / &self.0)
    }

    /// `gamma^2` of the Liouville measure, `gamma = sqrt(kappa) ^ 4/sqrt(kappa)`.
    pub fn gamma_sq(&self) -> Rational {
        match self.phase() {
            Phase::Simple => self.0.clone(),
            Phase::NonSimple => int(16) / &self.0,
        }
    }

    pub fn gamma(&self) -> Result<ExactScalar, SleError> {
        Ok(ExactScalar::sqrt_of(&self.gamma_sq())?)
    }

    fn require(&self, ok: bool, range: &'static str) -> Result<(), SleError> {
        if ok {
            Ok(())
        } else {
            Err(SleError::KappaOutOfRange { kappa: self.to_string(), range })
        }
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(&self.0))
    }
}

impl FromStr for Kappa {
    type Err = SleError;
    fn from_str(s: &str) -> Result<Self, SleError> {
        Kappa::new(parse_rational(s)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Standard,
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumDim {
    pub value: ExactScalar,
    pub flavor: Flavor,
}

impl QuantumDim {
    pub fn standard(value: ExactScalar) -> Self {
        QuantumDim { value, flavor: Flavor::Standard }
    }

    pub fn dual(value: ExactScalar) -> Self {
        QuantumDim { value, flavor: Flavor::Dual }
    }
}

/// Heaviside step with the midpoint convention `theta(0) = 1/2`.
pub fn heaviside(x: &Rational) -> Rational {
    if x.is_negative() {
        Rational::zero()
    } else if x.is_zero() {
        rat(1, 2)
    } else {
        Rational::one()
    }
}

/// `U_kappa(Delta) = Delta (kappa Delta + 4 - kappa) / 4`.
pub fn kpz_u(kappa: &Kappa, delta: &ExactScalar) -> ExactScalar {
    let k = &kappa.0;
    let inner = delta.scale(k) + ExactScalar::from_rational(int(4) - k);
    (delta * &inner).scale(&rat(1, 4))
}

/// `V_kappa(Delta) = [kappa^2 Delta^2 - (4 - kappa)^2] / (16 kappa)`, checked
/// against `U_kappa((Delta + 1 - 4/kappa) / 2)`.
pub fn kpz_v(kappa: &Kappa, delta: &ExactScalar) -> ExactScalar {
    let k = &kappa.0;
    let four_minus = int(4) - k;
    let v = (delta.square().scale(&(k * k)) - ExactScalar::from_rational(&four_minus * &four_minus))
        .scale(&(int(1) / (int(16) * k)));
    let shifted = (delta + &ExactScalar::from_rational(int(1) - int(4) / k)).scale(&rat(1, 2));
    assert_eq!(v, kpz_u(kappa, &shifted), "V_kappa disagrees with shifted U_kappa");
    v
}

/// Positive branch `(sqrt(16 kappa x + (4-kappa)^2) + kappa - 4) / (2 kappa)`.
pub fn kpz_u_inverse(kappa: &Kappa, x: &ExactScalar) -> Result<ExactScalar, SleError> {
    let x = x.as_rational().ok_or(ScalarError::NestedRadical)?;
    let k = &kappa.0;
    let disc = int(16) * k * x + (int(4) - k) * (int(4) - k);
    if disc.is_negative() {
        return Err(SleError::NegativeDiscriminant(fmt_rational(x)));
    }
    let root = ExactScalar::sqrt_of(&disc)?;
    let out = (root + ExactScalar::from_rational(k - int(4))).scale(&(int(1) / (int(2) * k)));
    debug_assert_eq!(&kpz_u(kappa, &out), &ExactScalar::from_rational(x.clone()));
    Ok(out)
}

/// `U_kappa^{-1}(0) = theta(kappa - 4)(1 - 4/kappa)`.
pub fn u_inv_zero(kappa: &Kappa) -> Rational {
    let k = &kappa.0;
    heaviside(&(k - int(4))) * (int(1) - int(4) / k)
}

/// Dual boundary dimension `2L/kappa + j U^{-1}(0)` of an L-star with `j`
/// non-intersection conditionings.
pub fn delta_lj(kappa: &Kappa, legs: u32, j: u32) -> QuantumDim {
    let v = int(2 * legs as i64) / &kappa.0 + int(j as i64) * u_inv_zero(kappa);
    QuantumDim::dual(ExactScalar::from_rational(v))
}

fn check_j(j: u32, max: u32) -> Result<(), SleError> {
    if j > max {
        Err(SleError::JOutOfRange { j, max })
    } else {
        Ok(())
    }
}

fn check_legs(legs: u32) -> Result<(), SleError> {
    if legs == 0 {
        Err(SleError::InvalidLegCount)
    } else {
        Ok(())
    }
}

/// `[2L + j(kappa-4)][2L + (j-1)(kappa-4)] / (4 kappa)` for `0 <= j <= L+1`.
///
/// Defined for every kappa; the conditioning reading of `j > 0` only makes
/// sense in the non-simple phase (see [`Kappa::phase`]).
pub fn x_surface_lj(kappa: &Kappa, legs: u32, j: u32) -> Result<ExactScalar, SleError> {
    check_legs(legs)?;
    check_j(j, legs + 1)?;
    let k = &kappa.0;
    let (l2, j) = (int(2 * legs as i64), int(j as i64));
    let s = k - int(4);
    let v = (&l2 + &j * &s) * (&l2 + (&j - int(1)) * &s) / (int(4) * k);
    Ok(ExactScalar::from_rational(v))
}

/// `[2L + (j+1)(kappa-4)][2L + (j-1)(kappa-4)] / (8 kappa)` for `0 <= j <= L`.
pub fn x_bulk_lj(kappa: &Kappa, legs: u32, j: u32) -> Result<ExactScalar, SleError> {
    check_legs(legs)?;
    check_j(j, legs)?;
    let k = &kappa.0;
    let (l2, j) = (int(2 * legs as i64), int(j as i64));
    let s = k - int(4);
    let v = (&l2 + (&j + int(1)) * &s) * (&l2 + (&j - int(1)) * &s) / (int(8) * k);
    Ok(ExactScalar::from_rational(v))
}

/// Boundary weight of L simple SLE(rho1, rho2) paths:
/// `(2L + r)(2L + r + 4 - kappa) / (4 kappa)` with `r = rho1 + rho2`.
pub fn x_l_rho(kappa: &Kappa, legs: u32, rho1: &Rational, rho2: &Rational) -> Result<ExactScalar, SleError> {
    check_legs(legs)?;
    kappa.require(kappa.phase() == Phase::Simple, "(0, 4]")?;
    let k = &kappa.0;
    let a = int(2 * legs as i64) + rho1 + rho2;
    let v = &a * (&a + int(4) - k) / (int(4) * k);
    Ok(ExactScalar::from_rational(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoBeta {
    pub beta: Rational,
    /// Whether rho lies in `(max(-2, kappa/2 - 4), kappa/2 - 2)`, where
    /// `1 - beta` is the dimension of the boundary intersection.
    pub in_range: bool,
}

impl RhoBeta {
    pub fn dimension(&self) -> Option<Rational> {
        self.in_range.then(|| int(1) - &self.beta)
    }
}

/// `beta(rho) = (2 + rho)(4 + rho - kappa/2) / kappa`, always evaluated.
pub fn sle_rho_boundary_beta(kappa: &Kappa, rho: &Rational) -> RhoBeta {
    let k = &kappa.0;
    let half = k / int(2);
    let beta = (int(2) + rho) * (int(4) + rho - &half) / k;
    let lower = std::cmp::max(int(-2), &half - int(4));
    let in_range = *rho > lower && *rho < &half - int(2);
    RhoBeta { beta, in_range }
}
