//! Exact scalars: arbitrary-precision rationals, optionally extended by a
//! single square root `a + b*sqrt(r)`.
//!
//! Every value is kept in canonical form (reduced fractions, square-free
//! radicand, rational values carry no surd), so the derived `PartialEq` is
//! exact equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// `p/q` as a big rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("values live in different radical extensions (sqrt({0}) and sqrt({1}))")]
    IncompatibleRadicals(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative number")]
    NegativeRadicand,
    #[error("radicand too large for exact square-free reduction")]
    RadicandOverflow,
    #[error("operation would need a nested radical")]
    NestedRadical,
    #[error("cannot parse exact value from {0:?}")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    rational: Rational,
    surd: Rational,
    // 1 when `surd` is zero, otherwise square-free and >= 2.
    radicand: u64,
}

/// Splits `n` into `(s, r)` with `n = s^2 * r` and `r` square-free.
pub fn square_free_split(mut n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 1);
    }
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    free *= n;
    (square, free)
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        ExactScalar { rational: q, surd: Rational::zero(), radicand: 1 }
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(rat(p, q))
    }

    pub fn integer(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// Builds `a + b*sqrt(r)`, pulling square factors out of `r`.
    pub fn radical(a: Rational, b: Rational, r: u64) -> Self {
        let (s, free) = square_free_split(r);
        let b = b * int(s as i64);
        if free == 1 {
            return Self::from_rational(a + b);
        }
        if b.is_zero() {
            return Self::from_rational(a);
        }
        ExactScalar { rational: a, surd: b, radicand: free }
    }

    /// Exact square root of a nonnegative rational.
    pub fn sqrt_of(q: &Rational) -> Result<Self, ScalarError> {
        if q.is_negative() {
            return Err(ScalarError::NegativeRadicand);
        }
        let den = q.denom().clone();
        let product = q.numer() * &den;
        let n = product.to_u64().ok_or(ScalarError::RadicandOverflow)?;
        let (s, free) = square_free_split(n);
        let coeff = BigRational::new(BigInt::from(s), den);
        Ok(Self::radical(Rational::zero(), coeff, free))
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rational)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    /// Square-free radicand, or 1 for rational values.
    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            return a;
        }
        let b = self.surd.to_f64().unwrap_or(f64::NAN);
        a + b * (self.radicand as f64).sqrt()
    }

    fn common_radicand(&self, other: &Self) -> Result<u64, ScalarError> {
        match (self.radicand, other.radicand) {
            (1, r) | (r, 1) => Ok(r),
            (r, s) if r == s => Ok(r),
            (r, s) => Err(ScalarError::IncompatibleRadicals(r, s)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let r = self.common_radicand(other)?;
        Ok(Self::radical(&self.rational + &other.rational, &self.surd + &other.surd, r))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let r = self.common_radicand(other)?;
        let rr = int(r as i64);
        let a = &self.rational * &other.rational + &self.surd * &other.surd * &rr;
        let b = &self.rational * &other.surd + &self.surd * &other.rational;
        Ok(Self::radical(a, b, r))
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.rational.recip()));
        }
        let norm = &self.rational * &self.rational
            - &self.surd * &self.surd * int(self.radicand as i64);
        Ok(Self::radical(&self.rational / &norm, -&self.surd / &norm, self.radicand))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_mul(&other.recip()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::radical(&self.rational * q, &self.surd * q, self.radicand)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact sign: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.rational);
        let sb = sign_of(&self.surd);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.rational * &self.rational;
        let b2r = &self.surd * &self.surd * int(self.radicand as i64);
        match a2.cmp(&b2r) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }
}

fn sign_of(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.try_sub(other).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

impl From<Rational> for ExactScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            rational: -&self.rational,
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }
}

// Operator forms panic when the operands live in different radical
// extensions; use the `try_*` methods where that can happen.
macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                self.$checked(rhs).expect("exact scalar arithmetic")
            }
        }
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&fmt_rational(&self.rational));
        }
        let mut out = String::new();
        if !self.rational.is_zero() {
            out.push_str(&fmt_rational(&self.rational));
            out.push(if self.surd.is_negative() { '-' } else { '+' });
        } else if self.surd.is_negative() {
            out.push('-');
        }
        let b = self.surd.abs();
        if !b.is_one() {
            out.push_str(&fmt_rational(&b));
            out.push('*');
        }
        out.push_str(&format!("sqrt({})", self.radicand));
        f.write_str(&out)
    }
}

/// Parses `p`, `p/q`, or a finite decimal such as `-1.25`.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let n: BigInt = digits.parse().map_err(|_| err())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let q = BigRational::new(n, scale);
        return Ok(if negative { -q } else { q });
    }
    let n: BigInt = t.parse().map_err(|_| err())?;
    Ok(BigRational::from_integer(n))
}

fn parse_term(term: &str) -> Result<ExactScalar, ScalarError> {
    let err = || ScalarError::Parse(term.to_string());
    let (negative, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, term.strip_prefix('+').unwrap_or(term)),
    };
    let value = if let Some(idx) = body.find("sqrt(") {
        let coeff = body[..idx].trim_end_matches('*');
        let coeff = if coeff.is_empty() { Rational::one() } else { parse_rational(coeff)? };
        let inner = body[idx + 5..].strip_suffix(')').ok_or_else(err)?;
        let radicand: u64 = inner.trim().parse().map_err(|_| err())?;
        ExactScalar::radical(Rational::zero(), coeff, radicand)
    } else {
        ExactScalar::from_rational(parse_rational(body)?)
    };
    Ok(if negative { -value } else { value })
}

impl FromStr for ExactScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ScalarError::Parse(s.to_string()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let mut depth = 0;
        for (i, c) in compact.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if i > start && depth == 0 => {
                    let prev = compact[..i].chars().last();
                    if prev != Some('*') && prev != Some('/') {
                        terms.push(&compact[start..i]);
                        start = i;
                    }
                }
                _ => {}
            }
        }
        terms.push(&compact[start..]);
        let mut acc = ExactScalar::zero();
        for term in terms {
            acc = acc.try_add(&parse_term(term)?)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free_split_pulls_squares() {
        assert_eq!(square_free_split(72), (6, 2));
        assert_eq!(square_free_split(1), (1, 1));
        assert_eq!(square_free_split(49), (7, 1));
        assert_eq!(square_free_split(30), (1, 30));
    }

    #[test]
    fn sqrt_of_rational_is_canonical() {
        assert_eq!(ExactScalar::sqrt_of(&rat(9, 4)).unwrap(), ExactScalar::ratio(3, 2));
        let s = ExactScalar::sqrt_of(&rat(8, 3)).unwrap();
        assert_eq!(s.radicand(), 6);
        assert_eq!(s.surd_part(), &rat(2, 3));
        assert_eq!(s.square(), ExactScalar::ratio(8, 3));
        assert!(ExactScalar::sqrt_of(&rat(-1, 2)).is_err());
    }

    #[test]
    fn field_operations_in_one_extension() {
        let a = ExactScalar::radical(int(1), int(1), 2);
        let inv = a.recip().unwrap();
        assert_eq!(inv, ExactScalar::radical(int(-1), int(1), 2));
        assert_eq!(&a * &inv, ExactScalar::one());
        assert_eq!(&a - &a, ExactScalar::zero());
        assert!((&a - &a).is_rational());
    }

    #[test]
    fn mixing_radicands_is_an_error() {
        let a = ExactScalar::sqrt_of(&int(2)).unwrap();
        let b = ExactScalar::sqrt_of(&int(3)).unwrap();
        assert_eq!(a.try_add(&b), Err(ScalarError::IncompatibleRadicals(2, 3)));
    }

    #[test]
    fn signum_handles_cancelling_parts() {
        // 3 - 2*sqrt(2) > 0, 1 - sqrt(2) < 0
        assert_eq!(ExactScalar::radical(int(3), int(-2), 2).signum(), 1);
        assert_eq!(ExactScalar::radical(int(1), int(-1), 2).signum(), -1);
        assert_eq!(ExactScalar::zero().signum(), 0);
        assert!(ExactScalar::ratio(1, 3) < ExactScalar::ratio(1, 2));
    }

    #[test]
    fn display_and_parse() {
        let cases = ["5/8", "-3/16", "0", "1+sqrt(2)", "-sqrt(6)", "1/2-3/4*sqrt(5)", "2/3*sqrt(6)"];
        for case in cases {
            let v: ExactScalar = case.parse().unwrap();
            assert_eq!(v.to_string(), case);
        }
        assert_eq!("1.25".parse::<ExactScalar>().unwrap(), ExactScalar::ratio(5, 4));
        assert_eq!("-0.5".parse::<ExactScalar>().unwrap(), ExactScalar::ratio(-1, 2));
        assert_eq!("sqrt(8)".parse::<ExactScalar>().unwrap(), ExactScalar::radical(int(0), int(2), 2));
        assert!("abc".parse::<ExactScalar>().is_err());
        assert!("1/0".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn to_f64_matches() {
        let v: ExactScalar = "1+sqrt(2)".parse().unwrap();
        assert!((v.to_f64() - 2.414_213_562_373_095).abs() < 1e-15);
    }
}
