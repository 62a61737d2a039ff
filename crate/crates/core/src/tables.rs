//! Closed-form bulk and surface L-leg scaling dimensions and the correlation
//! exponent for each universality class, boundary condition and dimension
//! setting.
//!
//! Exact 2D values are rationals. In `d = 4 - eps` the Brownian part is
//! written with `d` substituted, so each exponent is one canonical
//! polynomial in `eps`. Combinations outside the domain of a family are
//! hard errors.

use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use num_traits::Signed;
use thiserror::Error;

use crate::scalar::{fmt_rational, int, parse_rational, rat, ExactScalar, Rational};
use crate::series::{EpsilonOrder, EpsilonSeries, Exponent};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExponentError {
    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),
    #[error("leg count must be at least 1, got {0}")]
    InvalidLegCount(usize),
    #[error("dimension must be a positive rational, got {0}")]
    InvalidDimension(String),
}

fn unsupported(what: &str, class: UniversalityClass, setting: &DimensionSetting) -> ExponentError {
    ExponentError::UnsupportedCombination(format!("{what} for {class} in setting {setting}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UniversalityClass {
    Saw,
    Theta,
    Brownian,
    MutuallyAvoiding,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryCondition {
    Ordinary,
    Special,
    MixedOrdinarySpecial,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DimensionSetting {
    Exact2D,
    GeneralD(Rational),
    Epsilon(EpsilonOrder),
}

impl DimensionSetting {
    pub fn general(d: Rational) -> Result<Self, ExponentError> {
        if !d.is_positive() {
            return Err(ExponentError::InvalidDimension(fmt_rational(&d)));
        }
        Ok(DimensionSetting::GeneralD(d))
    }

    /// `d` as an exponent value: 2, the given rational, or `4 - eps`.
    pub fn dimension(&self) -> Result<Exponent, ExponentError> {
        match self {
            DimensionSetting::Exact2D => Ok(Exponent::rational(int(2))),
            DimensionSetting::GeneralD(d) => {
                if !d.is_positive() {
                    return Err(ExponentError::InvalidDimension(fmt_rational(d)));
                }
                Ok(Exponent::rational(d.clone()))
            }
            DimensionSetting::Epsilon(order) => Ok(Exponent::Series(EpsilonSeries::dimension(*order))),
        }
    }

    fn at_or_above_four(&self) -> bool {
        matches!(self, DimensionSetting::GeneralD(d) if *d >= int(4))
    }
}

impl fmt::Display for UniversalityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UniversalityClass::Saw => "saw",
            UniversalityClass::Theta => "theta",
            UniversalityClass::Brownian => "brownian",
            UniversalityClass::MutuallyAvoiding => "maw",
        })
    }
}

impl FromStr for UniversalityClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "saw" => Ok(UniversalityClass::Saw),
            "theta" => Ok(UniversalityClass::Theta),
            "brownian" => Ok(UniversalityClass::Brownian),
            "maw" | "mutually-avoiding" => Ok(UniversalityClass::MutuallyAvoiding),
            _ => Err(format!("unknown class {s:?} (expected saw, theta, brownian, maw)")),
        }
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryCondition::Ordinary => "ordinary",
            BoundaryCondition::Special => "special",
            BoundaryCondition::MixedOrdinarySpecial => "mixed",
        })
    }
}

impl FromStr for BoundaryCondition {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "ordinary" | "or" => Ok(BoundaryCondition::Ordinary),
            "special" | "sp" => Ok(BoundaryCondition::Special),
            "mixed" | "o.s" => Ok(BoundaryCondition::MixedOrdinarySpecial),
            _ => Err(format!("unknown boundary condition {s:?} (expected ordinary, special, mixed)")),
        }
    }
}

impl fmt::Display for DimensionSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionSetting::Exact2D => f.write_str("2d"),
            DimensionSetting::GeneralD(d) => write!(f, "d={}", fmt_rational(d)),
            DimensionSetting::Epsilon(order) => write!(f, "eps{}", order.degree()),
        }
    }
}

impl FromStr for DimensionSetting {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "2d" | "exact2d" => Ok(DimensionSetting::Exact2D),
            "eps1" => Ok(DimensionSetting::Epsilon(EpsilonOrder::First)),
            "eps2" => Ok(DimensionSetting::Epsilon(EpsilonOrder::Second)),
            other => {
                let d = other
                    .strip_prefix("d=")
                    .ok_or_else(|| format!("unknown setting {s:?} (expected 2d, eps1, eps2, d=<rational>)"))?;
                let d = parse_rational(d).map_err(|e| e.to_string())?;
                DimensionSetting::general(d).map_err(|e| e.to_string())
            }
        }
    }
}

fn check_legs(legs: usize) -> Result<Rational, ExponentError> {
    if legs == 0 {
        return Err(ExponentError::InvalidLegCount(0));
    }
    Ok(int(legs as i64))
}

fn exact(q: Rational) -> Exponent {
    Exponent::Exact(ExactScalar::from_rational(q))
}

/// Builds `c0 + c1*eps + c2*eps^2`, dropping `c2` at first order.
fn series(order: EpsilonOrder, c0: Rational, c1: Rational, c2: Rational) -> Exponent {
    let mut coefficients = vec![c0, c1];
    if order == EpsilonOrder::Second {
        coefficients.push(c2);
    }
    Exponent::Series(EpsilonSeries::new(coefficients).expect("order 1 or 2"))
}

/// Correlation-length exponent.
pub fn nu(class: UniversalityClass, setting: &DimensionSetting) -> Result<Exponent, ExponentError> {
    use UniversalityClass::*;
    if let DimensionSetting::GeneralD(_) = setting {
        setting.dimension()?;
    }
    match (class, setting) {
        (Brownian | MutuallyAvoiding, _) => Ok(exact(rat(1, 2))),
        (Saw, DimensionSetting::Exact2D) => Ok(exact(rat(3, 4))),
        (Saw, DimensionSetting::GeneralD(_)) if setting.at_or_above_four() => Ok(exact(rat(1, 2))),
        (Saw, DimensionSetting::Epsilon(_)) => {
            // 1/nu = d - x_2
            let d = setting.dimension()?;
            let x2 = x_bulk(2, Saw, setting)?;
            let inverse = (&d - &x2).as_series().cloned().expect("series in eps settings");
            Ok(Exponent::Series(inverse.recip().expect("1/nu starts at 2")))
        }
        (Theta, DimensionSetting::Exact2D) => Ok(exact(rat(4, 7))),
        _ => Err(unsupported("nu", class, setting)),
    }
}

/// Bulk L-leg scaling dimension `x_L`.
pub fn x_bulk(legs: usize, class: UniversalityClass, setting: &DimensionSetting) -> Result<Exponent, ExponentError> {
    use UniversalityClass::*;
    let l = check_legs(legs)?;
    let brownian = |d: &Rational| exact(&l * (d - int(2)) / int(2));
    match (class, setting) {
        (Saw, DimensionSetting::Exact2D) => {
            Ok(exact((int(3) * &l - int(2)) * (int(3) * &l + int(2)) / int(48)))
        }
        (Saw | MutuallyAvoiding, DimensionSetting::GeneralD(d)) if setting.at_or_above_four() => Ok(brownian(d)),
        (Saw, DimensionSetting::Epsilon(order)) => {
            // L(2 - eps)/2 + (eps/8) L(L-1) + (eps/8)^2 (L/4)(-8L^2 + 33L - 23)
            let c0 = l.clone();
            let c1 = -&l / int(2) + &l * (&l - int(1)) / int(8);
            let c2 = &l * (int(-8) * &l * &l + int(33) * &l - int(23)) / int(256);
            Ok(series(*order, c0, c1, c2))
        }
        (Theta, DimensionSetting::Exact2D) => Ok(exact((&l * &l - int(1)) / int(12))),
        (Brownian, DimensionSetting::Exact2D) => Ok(exact(int(0))),
        (Brownian, DimensionSetting::GeneralD(d)) => {
            setting.dimension()?;
            Ok(brownian(d))
        }
        (Brownian, DimensionSetting::Epsilon(order)) => {
            Ok(series(*order, l.clone(), -&l / int(2), int(0)))
        }
        (MutuallyAvoiding, DimensionSetting::Exact2D) => {
            Ok(exact((int(4) * &l * &l - int(1)) / int(12)))
        }
        (MutuallyAvoiding, DimensionSetting::Epsilon(order)) => {
            // L(2 - eps)/2 + (eps/4) L(L-1) - (eps/4)^2 L(L-1)(2L-5)
            let pairs = &l * (&l - int(1));
            let c1 = -&l / int(2) + &pairs / int(4);
            let c2 = -(&pairs * (int(2) * &l - int(5))) / int(16);
            Ok(series(*order, l.clone(), c1, c2))
        }
        _ => Err(unsupported("bulk exponent", class, setting)),
    }
}

/// Surface L-leg scaling dimension `x_L^S` for the given boundary condition.
pub fn x_surface(
    legs: usize,
    class: UniversalityClass,
    bc: BoundaryCondition,
    setting: &DimensionSetting,
) -> Result<Exponent, ExponentError> {
    use BoundaryCondition::*;
    use UniversalityClass::*;
    let l = check_legs(legs)?;
    let what = format!("{bc} surface exponent");
    match (class, bc, setting) {
        (Saw, Ordinary, DimensionSetting::Exact2D) => Ok(exact(&l * (int(3) * &l + int(2)) / int(8))),
        (Saw, Special, DimensionSetting::Exact2D) => {
            Ok(exact(rat(3, 8) * &l * &l - rat(3, 4) * &l + rat(1, 3)))
        }
        (Saw, MixedOrdinarySpecial, DimensionSetting::Exact2D) => {
            Ok(exact(&l * (int(3) * &l - int(2)) / int(8)))
        }
        (Saw | MutuallyAvoiding, Ordinary, DimensionSetting::GeneralD(d)) if setting.at_or_above_four() => {
            Ok(exact(&l * d / int(2)))
        }
        (Saw, Ordinary, DimensionSetting::Epsilon(EpsilonOrder::First)) => {
            // L d/2 + (eps/8) L(L-2)
            let c1 = -&l / int(2) + &l * (&l - int(2)) / int(8);
            Ok(series(EpsilonOrder::First, int(2) * &l, c1, int(0)))
        }
        (Theta, Ordinary, DimensionSetting::Exact2D) => {
            Ok(exact((&l + int(1)) * (&l + int(2)) / int(6)))
        }
        (Theta, Special, DimensionSetting::Exact2D) => Ok(exact(&l * (&l - int(1)) / int(6))),
        (Theta, MixedOrdinarySpecial, DimensionSetting::Exact2D) => {
            Ok(exact(&l * (&l + int(1)) / int(6)))
        }
        (Brownian, Ordinary, DimensionSetting::Exact2D) => Ok(exact(l)),
        (Brownian, Ordinary, DimensionSetting::GeneralD(d)) => {
            setting.dimension()?;
            Ok(exact(&l * d / int(2)))
        }
        (Brownian, Ordinary, DimensionSetting::Epsilon(order)) => {
            Ok(series(*order, int(2) * &l, -&l / int(2), int(0)))
        }
        (MutuallyAvoiding, Ordinary, DimensionSetting::Exact2D) => {
            Ok(exact(&l * (int(2) * &l + int(1)) / int(3)))
        }
        _ => Err(unsupported(&what, class, setting)),
    }
}

/// Power of `log N` in the 3D Theta-point star partition function:
/// `-(1/22) * binomial(L, 3)`.
pub fn theta_star_log_power(legs: usize) -> Rational {
    let b = if legs < 3 { 0 } else { binomial(legs as i64, 3) };
    rat(-b, 22)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HausdorffDimensions {
    pub bulk: ExactScalar,
    /// Dimension of the adsorbed set at the special transition (SAW only).
    pub adsorbed: Option<ExactScalar>,
}

impl HausdorffDimensions {
    /// Ratio `adsorbed / bulk`.
    pub fn crossover(&self) -> Option<ExactScalar> {
        self.adsorbed.as_ref().map(|a| a / &self.bulk)
    }
}

pub fn hausdorff_dimensions(class: UniversalityClass) -> Result<HausdorffDimensions, ExponentError> {
    let setting = DimensionSetting::Exact2D;
    let exact_of = |e: Exponent| e.as_exact().cloned().expect("exact in 2D");
    match class {
        UniversalityClass::Saw => {
            let x2 = exact_of(x_bulk(2, class, &setting)?);
            let x2_sp = exact_of(x_surface(2, class, BoundaryCondition::Special, &setting)?);
            Ok(HausdorffDimensions {
                bulk: ExactScalar::integer(2) - x2,
                adsorbed: Some(ExactScalar::integer(1) - x2_sp),
            })
        }
        UniversalityClass::Theta => {
            let x2 = exact_of(x_bulk(2, class, &setting)?);
            Ok(HausdorffDimensions { bulk: ExactScalar::integer(2) - x2, adsorbed: None })
        }
        _ => Err(unsupported("Hausdorff dimensions", class, &setting)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use UniversalityClass::*;

    const D2: DimensionSetting = DimensionSetting::Exact2D;

    fn q(e: Exponent) -> Rational {
        e.as_rational().cloned().unwrap()
    }

    #[test]
    fn nu_values() {
        assert_eq!(q(nu(Saw, &D2).unwrap()), rat(3, 4));
        assert_eq!(q(nu(Theta, &D2).unwrap()), rat(4, 7));
        assert_eq!(q(nu(Brownian, &DimensionSetting::GeneralD(int(3))).unwrap()), rat(1, 2));
        assert!(matches!(
            nu(Theta, &DimensionSetting::GeneralD(int(3))),
            Err(ExponentError::UnsupportedCombination(_))
        ));
        assert!(nu(Saw, &DimensionSetting::GeneralD(int(3))).is_err());
    }

    #[test]
    fn nu_eps_expansion_for_saw() {
        let n = nu(Saw, &DimensionSetting::Epsilon(EpsilonOrder::Second)).unwrap();
        assert_eq!(n.as_series().unwrap().coefficients(), &[rat(1, 2), rat(1, 16), rat(15, 512)]);
    }

    #[test]
    fn bulk_examples() {
        assert_eq!(q(x_bulk(2, Saw, &D2).unwrap()), rat(2, 3));
        assert_eq!(q(x_bulk(1, Theta, &D2).unwrap()), int(0));
        assert_eq!(x_bulk(0, Saw, &D2), Err(ExponentError::InvalidLegCount(0)));
    }

    #[test]
    fn surface_examples() {
        use BoundaryCondition::*;
        assert_eq!(q(x_surface(1, Saw, Ordinary, &D2).unwrap()), rat(5, 8));
        assert_eq!(q(x_surface(2, Theta, Ordinary, &D2).unwrap()), int(2));
        assert_eq!(q(x_surface(1, Saw, Special, &D2).unwrap()), rat(-1, 24));
        assert!(x_surface(1, MutuallyAvoiding, Special, &D2).is_err());
        assert!(x_surface(1, Brownian, MixedOrdinarySpecial, &D2).is_err());
        assert!(x_surface(1, Saw, Ordinary, &DimensionSetting::Epsilon(EpsilonOrder::Second)).is_err());
        assert!(x_surface(1, Saw, Special, &DimensionSetting::Epsilon(EpsilonOrder::First)).is_err());
    }

    #[test]
    fn maw_second_order_coefficient_changes_sign() {
        let setting = DimensionSetting::Epsilon(EpsilonOrder::Second);
        let c2 = |l| x_bulk(l, MutuallyAvoiding, &setting).unwrap().as_series().unwrap().coefficients()[2].clone();
        assert_eq!(c2(1), int(0));
        assert_eq!(c2(2), rat(1, 8)); // -(1/16)*2*1*(-1)
        assert_eq!(c2(3), rat(-3, 8)); // -(1/16)*3*2*1
    }

    #[test]
    fn theta_log_power() {
        assert_eq!(theta_star_log_power(1), int(0));
        assert_eq!(theta_star_log_power(3), rat(-1, 22));
        assert_eq!(theta_star_log_power(5), rat(-5, 11));
    }

    #[test]
    fn hausdorff() {
        let saw = hausdorff_dimensions(Saw).unwrap();
        assert_eq!(saw.bulk, ExactScalar::ratio(4, 3));
        assert_eq!(saw.adsorbed, Some(ExactScalar::ratio(2, 3)));
        assert_eq!(saw.crossover(), Some(ExactScalar::ratio(1, 2)));
        let theta = hausdorff_dimensions(Theta).unwrap();
        assert_eq!(theta.bulk, ExactScalar::ratio(7, 4));
        assert!(hausdorff_dimensions(Brownian).is_err());
    }

    #[test]
    fn parse_settings() {
        assert_eq!("2d".parse::<DimensionSetting>().unwrap(), D2);
        assert_eq!("d=7/2".parse::<DimensionSetting>().unwrap(), DimensionSetting::GeneralD(rat(7, 2)));
        assert!("d=-1".parse::<DimensionSetting>().is_err());
        assert!("d=x".parse::<DimensionSetting>().is_err());
    }
}
