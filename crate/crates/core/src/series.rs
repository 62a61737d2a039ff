//! Truncated expansions in `eps = 4 - d` and the `Exponent` value type that
//! is either an exact scalar or such an expansion.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{fmt_rational, int, ExactScalar, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EpsilonOrder {
    First,
    Second,
}

impl EpsilonOrder {
    pub fn degree(self) -> usize {
        match self {
            EpsilonOrder::First => 1,
            EpsilonOrder::Second => 2,
        }
    }

    pub fn from_degree(degree: usize) -> Option<Self> {
        match degree {
            1 => Some(EpsilonOrder::First),
            2 => Some(EpsilonOrder::Second),
            _ => None,
        }
    }
}

/// Polynomial in `eps` truncated at first or second order. Coefficients past
/// the order are absent rather than zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsilonSeries {
    coefficients: Vec<Rational>,
}

impl EpsilonSeries {
    /// `coefficients[i]` multiplies `eps^i`; the length fixes the order.
    pub fn new(coefficients: Vec<Rational>) -> Option<Self> {
        EpsilonOrder::from_degree(coefficients.len().wrapping_sub(1))?;
        Some(EpsilonSeries { coefficients })
    }

    pub fn constant(c: Rational, order: EpsilonOrder) -> Self {
        let mut coefficients = vec![Rational::zero(); order.degree() + 1];
        coefficients[0] = c;
        EpsilonSeries { coefficients }
    }

    /// `eps` itself.
    pub fn epsilon(order: EpsilonOrder) -> Self {
        let mut s = Self::constant(Rational::zero(), order);
        s.coefficients[1] = Rational::one();
        s
    }

    /// The space dimension `d = 4 - eps`.
    pub fn dimension(order: EpsilonOrder) -> Self {
        let mut s = Self::constant(int(4), order);
        s.coefficients[1] = int(-1);
        s
    }

    pub fn order(&self) -> EpsilonOrder {
        EpsilonOrder::from_degree(self.coefficients.len() - 1).expect("validated on construction")
    }

    pub fn coefficient(&self, power: usize) -> Option<&Rational> {
        self.coefficients.get(power)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn at_zero(&self) -> &Rational {
        &self.coefficients[0]
    }

    pub fn truncate(&self, order: EpsilonOrder) -> Self {
        let keep = order.degree().min(self.order().degree()) + 1;
        EpsilonSeries { coefficients: self.coefficients[..keep].to_vec() }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        EpsilonSeries { coefficients: self.coefficients.iter().map(|c| c * q).collect() }
    }

    pub fn evaluate(&self, eps: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * eps + c;
        }
        acc
    }

    /// Multiplicative inverse as a truncated series. `None` if `c0 = 0`.
    pub fn recip(&self) -> Option<Self> {
        let c0 = &self.coefficients[0];
        if c0.is_zero() {
            return None;
        }
        let mut out: Vec<Rational> = Vec::with_capacity(self.coefficients.len());
        out.push(c0.recip());
        for n in 1..self.coefficients.len() {
            let mut s = Rational::zero();
            for k in 1..=n {
                s += &self.coefficients[k] * &out[n - k];
            }
            out.push(-s / c0);
        }
        Some(EpsilonSeries { coefficients: out })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let n = self.coefficients.len().min(other.coefficients.len());
        EpsilonSeries {
            coefficients: (0..n).map(|i| f(&self.coefficients[i], &other.coefficients[i])).collect(),
        }
    }
}

impl Add for &EpsilonSeries {
    type Output = EpsilonSeries;
    fn add(self, rhs: &EpsilonSeries) -> EpsilonSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &EpsilonSeries {
    type Output = EpsilonSeries;
    fn sub(self, rhs: &EpsilonSeries) -> EpsilonSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &EpsilonSeries {
    type Output = EpsilonSeries;
    fn mul(self, rhs: &EpsilonSeries) -> EpsilonSeries {
        let n = self.coefficients.len().min(rhs.coefficients.len());
        let coefficients = (0..n)
            .map(|k| {
                (0..=k).fold(Rational::zero(), |acc, i| {
                    acc + &self.coefficients[i] * &rhs.coefficients[k - i]
                })
            })
            .collect();
        EpsilonSeries { coefficients }
    }
}

impl Neg for &EpsilonSeries {
    type Output = EpsilonSeries;
    fn neg(self) -> EpsilonSeries {
        self.scale(&int(-1))
    }
}

impl fmt::Display for EpsilonSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rational(&self.coefficients[0]))?;
        for (power, c) in self.coefficients.iter().enumerate().skip(1) {
            let sign = if c.is_negative() { '-' } else { '+' };
            let suffix = if power == 1 { "eps".to_string() } else { format!("eps^{power}") };
            write!(f, " {sign} {}*{suffix}", fmt_rational(&c.abs()))?;
        }
        Ok(())
    }
}

/// An exponent value: exact in fixed dimension, a truncated series in
/// `d = 4 - eps`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Exponent {
    Exact(ExactScalar),
    Series(EpsilonSeries),
}

impl Exponent {
    pub fn rational(q: Rational) -> Self {
        Exponent::Exact(ExactScalar::from_rational(q))
    }

    pub fn as_exact(&self) -> Option<&ExactScalar> {
        match self {
            Exponent::Exact(v) => Some(v),
            Exponent::Series(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.as_exact().and_then(ExactScalar::as_rational)
    }

    pub fn as_series(&self) -> Option<&EpsilonSeries> {
        match self {
            Exponent::Series(s) => Some(s),
            Exponent::Exact(_) => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        match self {
            Exponent::Exact(v) => Exponent::Exact(v.scale(q)),
            Exponent::Series(s) => Exponent::Series(s.scale(q)),
        }
    }

    fn series_pair(a: &Exponent, b: &Exponent) -> (EpsilonSeries, EpsilonSeries) {
        let lift = |e: &Exponent, order| match e {
            Exponent::Series(s) => s.clone(),
            Exponent::Exact(v) => EpsilonSeries::constant(
                v.as_rational().expect("radical values never enter eps-expansions").clone(),
                order,
            ),
        };
        let order = match (a, b) {
            (Exponent::Series(s), _) | (_, Exponent::Series(s)) => s.order(),
            _ => unreachable!("called only when one side is a series"),
        };
        (lift(a, order), lift(b, order))
    }
}

impl From<ExactScalar> for Exponent {
    fn from(v: ExactScalar) -> Self {
        Exponent::Exact(v)
    }
}

impl From<EpsilonSeries> for Exponent {
    fn from(s: EpsilonSeries) -> Self {
        Exponent::Series(s)
    }
}

macro_rules! exponent_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Exponent> for &Exponent {
            type Output = Exponent;
            fn $method(self, rhs: &Exponent) -> Exponent {
                match (self, rhs) {
                    (Exponent::Exact(a), Exponent::Exact(b)) => Exponent::Exact(a.$method(b)),
                    _ => {
                        let (a, b) = Exponent::series_pair(self, rhs);
                        Exponent::Series((&a).$method(&b))
                    }
                }
            }
        }
        impl $trait<Exponent> for Exponent {
            type Output = Exponent;
            fn $method(self, rhs: Exponent) -> Exponent {
                (&self).$method(&rhs)
            }
        }
    };
}

exponent_binop!(Add, add);
exponent_binop!(Sub, sub);
exponent_binop!(Mul, mul);

impl Neg for &Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        self.scale(&int(-1))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Exact(v) => v.fmt(f),
            Exponent::Series(s) => s.fmt(f),
        }
    }
}
