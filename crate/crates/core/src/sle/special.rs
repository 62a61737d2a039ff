//! Special and mixed boundary conditions of the dilute phase.

use super::{check_legs, kpz_u, x_l_rho, Kappa, QuantumDim, SleError};
use crate::scalar::{int, rat, ExactScalar, Rational};

fn dilute(kappa: &Kappa) -> Result<(), SleError> {
    let k = kappa.value();
    kappa.require(*k >= int(2) && *k <= int(4), "[2, 4]")
}

/// `Delta_sp = 2L/kappa - 1`.
pub fn special_quantum_dim(kappa: &Kappa, legs: u32) -> Result<QuantumDim, SleError> {
    check_legs(legs)?;
    dilute(kappa)?;
    let v = int(2 * legs as i64) / kappa.value() - int(1);
    Ok(QuantumDim::standard(ExactScalar::from_rational(v)))
}

/// `x^S_L(sp) = (2L - kappa)(2L + 4 - 2 kappa) / (4 kappa)`; equal to
/// `U_kappa(Delta_sp)` and to the SLE(rho) weight at `rho1 = rho2 = -kappa/2`
/// (both asserted).
pub fn special_x(kappa: &Kappa, legs: u32) -> Result<ExactScalar, SleError> {
    let delta = special_quantum_dim(kappa, legs)?;
    let k = kappa.value();
    let l2 = int(2 * legs as i64);
    let x = ExactScalar::from_rational((&l2 - k) * (&l2 + int(4) - int(2) * k) / (int(4) * k));
    assert_eq!(kpz_u(kappa, &delta.value), x, "special exponent disagrees with KPZ");
    let rho = -k / int(2);
    assert_eq!(x_l_rho(kappa, legs, &rho, &rho)?, x, "special exponent disagrees with SLE(rho)");
    Ok(x)
}

/// Kac-table form with `g = 4/kappa`:
/// `g(L+1)^2/4 - 3(L+1)/2 + [9 - (g-1)^2] / (4g)`.
pub fn special_x_kac(kappa: &Kappa, legs: u32) -> Result<ExactScalar, SleError> {
    check_legs(legs)?;
    dilute(kappa)?;
    let g = int(4) / kappa.value();
    let p = int(legs as i64 + 1);
    let gm1 = &g - int(1);
    let v = &g * &p * &p / int(4) - rat(3, 2) * &p + (int(9) - &gm1 * &gm1) / (int(4) * &g);
    Ok(ExactScalar::from_rational(v))
}

/// Mixed ordinary/special exponent `L(L + 2 - kappa)/kappa`.
pub fn mixed_x(kappa: &Kappa, legs: u32) -> Result<ExactScalar, SleError> {
    check_legs(legs)?;
    let k = kappa.value();
    let l = int(legs as i64);
    Ok(ExactScalar::from_rational(&l * (&l + int(2) - k) / k))
}

/// Modified KPZ map `(gamma^2/4) D^2 + (1 - gamma^2/2) D`, parameterized by
/// `gamma^2`.
pub fn modified_kpz(gamma_sq: &Rational, delta: &ExactScalar) -> ExactScalar {
    delta.square().scale(&(gamma_sq / int(4))) + delta.scale(&(int(1) - gamma_sq / int(2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_examples() {
        let k = Kappa::ratio(8, 3);
        assert_eq!(special_x(&k, 1).unwrap(), ExactScalar::ratio(-1, 24));
        assert_eq!(special_x(&k, 2).unwrap(), ExactScalar::ratio(1, 3));
        for l in 1..=10u32 {
            let li = l as i64;
            assert_eq!(special_x(&Kappa::ratio(4, 1), l).unwrap(), ExactScalar::ratio((li - 2) * (li - 2), 4));
            assert_eq!(special_x_kac(&k, l).unwrap(), special_x(&k, l).unwrap());
        }
        assert!(special_x(&Kappa::ratio(6, 1), 1).is_err());
        assert!(special_x(&Kappa::ratio(3, 2), 1).is_err());
    }

    #[test]
    fn mixed_and_modified() {
        let k = Kappa::ratio(8, 3);
        for l in 1..=10i64 {
            let delta = ExactScalar::ratio(3 * l, 4);
            let expect = ExactScalar::ratio(l * (3 * l - 2), 8);
            assert_eq!(modified_kpz(&rat(8, 3), &delta), expect);
            assert_eq!(mixed_x(&k, l as u32).unwrap(), expect);
        }
        assert_eq!(modified_kpz(&int(7), &ExactScalar::zero()), ExactScalar::zero());
        assert_eq!(modified_kpz(&int(3), &ExactScalar::ratio(2, 3)), ExactScalar::zero());
        assert_eq!(mixed_x(&Kappa::ratio(3, 1), 1).unwrap(), ExactScalar::zero());
    }
}
