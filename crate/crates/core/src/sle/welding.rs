//! Quantum wedges and cones: weights add under conformal welding, and a
//! weight fixes the standard and dual quantum dimensions of the marked point.

use std::ops::Add;

use super::{delta_lj, kpz_u, x_bulk_lj, x_surface_lj, Kappa, Phase, QuantumDim, SleError};
use crate::scalar::{int, rat, ExactScalar, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Wedge,
    Cone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeWeight {
    pub w: ExactScalar,
    pub kind: WeightKind,
}

impl WedgeWeight {
    pub fn wedge(w: Rational) -> Self {
        WedgeWeight { w: ExactScalar::from_rational(w), kind: WeightKind::Wedge }
    }

    /// Welds wedges along their boundary lengths; the result is a wedge, or
    /// a cone when the pieces close up around a bulk point.
    pub fn weld(kind: WeightKind, parts: &[WedgeWeight]) -> WedgeWeight {
        let w = parts.iter().fold(ExactScalar::zero(), |acc, p| acc + &p.w);
        WedgeWeight { w, kind }
    }
}

impl Add for &WedgeWeight {
    type Output = WedgeWeight;
    fn add(self, rhs: &WedgeWeight) -> WedgeWeight {
        WedgeWeight::weld(self.kind, &[self.clone(), rhs.clone()])
    }
}

fn non_simple(kappa: &Kappa) -> Result<Rational, SleError> {
    kappa.require(kappa.phase() == Phase::NonSimple, "(4, inf)")?;
    Ok(kappa.gamma_sq())
}

/// `L` path wedges of weight `2 - gamma^2/2` and `L+1` gaps, `j` of them
/// conditioned (weight 2) and the rest free (weight `gamma^2 - 2`).
fn boundary_parts(g2: &Rational, legs: u32, j: u32) -> Vec<WedgeWeight> {
    let mut parts = Vec::new();
    for _ in 0..legs {
        parts.push(WedgeWeight::wedge(int(2) - g2 / int(2)));
    }
    for gap in 0..=legs {
        parts.push(WedgeWeight::wedge(if gap < j { int(2) } else { g2 - int(2) }));
    }
    parts
}

/// Total weight `L gamma^2/2 + (4 - gamma^2) j + gamma^2 - 2` of a boundary
/// L-star of non-simple paths with `j` conditionings.
pub fn wedge_weight_boundary(kappa: &Kappa, legs: u32, j: u32) -> Result<WedgeWeight, SleError> {
    let g2 = non_simple(kappa)?;
    if j > legs + 1 {
        return Err(SleError::JOutOfRange { j, max: legs + 1 });
    }
    let welded = WedgeWeight::weld(WeightKind::Wedge, &boundary_parts(&g2, legs, j));
    let l = int(legs as i64);
    let closed = &l * &g2 / int(2) + (int(4) - &g2) * int(j as i64) + &g2 - int(2);
    debug_assert_eq!(welded.w, ExactScalar::from_rational(closed));
    Ok(welded)
}

/// Total weight `L gamma^2/2 + j (4 - gamma^2)` of `2L` wedges glued around
/// a bulk L-multiple point.
pub fn cone_weight_bulk(kappa: &Kappa, legs: u32, j: u32) -> Result<WedgeWeight, SleError> {
    let g2 = non_simple(kappa)?;
    if j > legs {
        return Err(SleError::JOutOfRange { j, max: legs });
    }
    let mut parts = Vec::new();
    for i in 0..legs {
        parts.push(WedgeWeight::wedge(int(2) - &g2 / int(2)));
        parts.push(WedgeWeight::wedge(if i < j { int(2) } else { &g2 - int(2) }));
    }
    Ok(WedgeWeight::weld(WeightKind::Cone, &parts))
}

/// `L+1` wedges of weights `2 + rho1`, `2, ..., 2`, `2 + rho2` for simple
/// paths (`kappa <= 4`).
pub fn rho_wedge_weight(kappa: &Kappa, legs: u32, rho1: &Rational, rho2: &Rational) -> Result<WedgeWeight, SleError> {
    kappa.require(kappa.phase() == Phase::Simple, "(0, 4]")?;
    let mut parts = vec![WedgeWeight::wedge(int(2) + rho1)];
    for _ in 1..legs {
        parts.push(WedgeWeight::wedge(int(2)));
    }
    parts.push(WedgeWeight::wedge(int(2) + rho2));
    Ok(WedgeWeight::weld(WeightKind::Wedge, &parts))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeldedDims {
    /// Log-singularity `alpha` of the wedge or cone.
    pub alpha: ExactScalar,
    pub standard: QuantumDim,
    pub dual: QuantumDim,
}

/// Wedge: `alpha = gamma + 2/gamma - W/gamma`; cone:
/// `alpha = gamma/2 + 2/gamma - W/(2 gamma)`. Then `Delta = 1 - alpha/gamma`
/// and `Delta~ = 1 - gamma alpha / 4`.
pub fn weight_to_dims(w: &WedgeWeight, kappa: &Kappa) -> Result<WeldedDims, SleError> {
    let gamma = kappa.gamma()?;
    let inv = gamma.recip()?;
    let two = ExactScalar::integer(2);
    let alpha = match w.kind {
        WeightKind::Wedge => gamma.try_add(&two.try_mul(&inv)?)?.try_sub(&w.w.try_mul(&inv)?)?,
        WeightKind::Cone => gamma
            .scale(&rat(1, 2))
            .try_add(&two.try_mul(&inv)?)?
            .try_sub(&w.w.try_mul(&inv)?.scale(&rat(1, 2)))?,
    };
    let one = ExactScalar::one();
    let standard = one.try_sub(&alpha.try_mul(&inv)?)?;
    let dual = one.try_sub(&gamma.try_mul(&alpha)?.scale(&rat(1, 4)))?;

    let lhs = gamma.try_mul(&one.try_sub(&standard)?)?;
    let rhs = inv.scale(&int(4)).try_mul(&one.try_sub(&dual)?)?;
    assert_eq!(lhs, rhs, "dual pairing gamma(1 - D) = (4/gamma)(1 - D~) violated");

    Ok(WeldedDims { alpha, standard: QuantumDim::standard(standard), dual: QuantumDim::dual(dual) })
}

/// Standard KPZ map `U_gamma(D) = (gamma^2/4) D^2 + (1 - gamma^2/4) D`.
pub fn kpz_standard(gamma_sq: &Rational, delta: &ExactScalar) -> ExactScalar {
    let a = gamma_sq / int(4);
    delta.square().scale(&a) + delta.scale(&(int(1) - a))
}

/// `(Delta_{L,j}, Delta~_{L,j}) = (L/2 + (j-1)(kappa/4 - 1), 2L/kappa + j(1 - 4/kappa))`.
pub fn wedge_dims_closed_form(kappa: &Kappa, legs: u32, j: u32) -> (Rational, Rational) {
    let k = kappa.value();
    let (l, j) = (int(legs as i64), int(j as i64));
    let standard = &l / int(2) + (&j - int(1)) * (k / int(4) - int(1));
    let dual = int(2) * &l / k + &j * (int(1) - int(4) / k);
    (standard, dual)
}

/// Cone analogues `(L/4 + (j-1)(kappa/4 - 1)/2, L/kappa + (j+1)(1 - 4/kappa)/2)`.
pub fn cone_dims_closed_form(kappa: &Kappa, legs: u32, j: u32) -> (Rational, Rational) {
    let k = kappa.value();
    let (l, j) = (int(legs as i64), int(j as i64));
    let standard = &l / int(4) + (&j - int(1)) * (k / int(4) - int(1)) / int(2);
    let dual = &l / k + (&j + int(1)) * (int(1) - int(4) / k) / int(2);
    (standard, dual)
}

/// For `kappa > 4`: the wedge dimensions reproduce `x^S_{L,j}` through both
/// the standard map (`gamma^2 = 16/kappa`) and `U_kappa` on the dual, the
/// dual is the additive `Delta_{L,j}`, and (for `j <= L`) the cone gives
/// `x_{L,j} = 2 U_gamma(Delta)`.
pub fn welding_consistency(kappa: &Kappa, legs: u32, j: u32) -> Result<bool, SleError> {
    let g2 = non_simple(kappa)?;
    let wedge = weight_to_dims(&wedge_weight_boundary(kappa, legs, j)?, kappa)?;
    let x_s = x_surface_lj(kappa, legs, j)?;
    let (closed_std, closed_dual) = wedge_dims_closed_form(kappa, legs, j);
    let mut ok = kpz_standard(&g2, &wedge.standard.value) == x_s
        && kpz_u(kappa, &wedge.dual.value) == x_s
        && wedge.dual.value == delta_lj(kappa, legs, j).value
        && wedge.standard.value == ExactScalar::from_rational(closed_std)
        && wedge.dual.value == ExactScalar::from_rational(closed_dual);
    if j <= legs {
        let cone = weight_to_dims(&cone_weight_bulk(kappa, legs, j)?, kappa)?;
        let x_b = x_bulk_lj(kappa, legs, j)?;
        let (c_std, c_dual) = cone_dims_closed_form(kappa, legs, j);
        ok &= kpz_standard(&g2, &cone.standard.value).scale(&int(2)) == x_b
            && cone.standard.value == ExactScalar::from_rational(c_std)
            && cone.dual.value == ExactScalar::from_rational(c_dual);
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_examples() {
        let six = Kappa::ratio(6, 1);
        assert_eq!(wedge_weight_boundary(&six, 1, 0).unwrap().w, ExactScalar::integer(2));
        assert_eq!(wedge_weight_boundary(&six, 1, 2).unwrap().w, ExactScalar::ratio(14, 3));
        assert_eq!(wedge_weight_boundary(&six, 2, 1).unwrap().w, ExactScalar::ratio(14, 3));
        assert_eq!(cone_weight_bulk(&six, 2, 1).unwrap().w, ExactScalar::integer(4));
        assert_eq!(cone_weight_bulk(&six, 1, 0).unwrap().w, ExactScalar::ratio(4, 3));
        assert!(wedge_weight_boundary(&Kappa::ratio(3, 1), 1, 0).is_err());
        assert!(wedge_weight_boundary(&six, 1, 3).is_err());
    }

    #[test]
    fn welding_is_additive() {
        let six = Kappa::ratio(6, 1);
        let g2 = six.gamma_sq();
        let path = WedgeWeight::wedge(int(2) - &g2 / int(2));
        let gap = WedgeWeight::wedge(&g2 - int(2));
        let two_legs = wedge_weight_boundary(&six, 2, 0).unwrap();
        assert_eq!(&(&two_legs + &path) + &gap, wedge_weight_boundary(&six, 3, 0).unwrap());
    }

    #[test]
    fn wedge_dims_at_kappa_six() {
        let six = Kappa::ratio(6, 1);
        let dims = weight_to_dims(&wedge_weight_boundary(&six, 2, 1).unwrap(), &six).unwrap();
        assert_eq!(dims.standard.value, ExactScalar::one());
        assert_eq!(dims.dual.value, ExactScalar::one());
        assert!(dims.alpha.is_zero());
        let dims = weight_to_dims(&wedge_weight_boundary(&six, 1, 0).unwrap(), &six).unwrap();
        assert_eq!(dims.alpha.radicand(), 6);
        assert_eq!(dims.standard.value, ExactScalar::zero());
    }

    #[test]
    fn cone_dual_at_kappa_six() {
        let six = Kappa::ratio(6, 1);
        let dims = weight_to_dims(&cone_weight_bulk(&six, 1, 0).unwrap(), &six).unwrap();
        assert_eq!(dims.dual.value, ExactScalar::ratio(1, 3));
    }

    #[test]
    fn rho_wedge_reproduces_simple_dims() {
        let k = Kappa::ratio(8, 3);
        for l in 1..=6u32 {
            let (r1, r2) = (rat(-4, 3), rat(1, 2));
            let w = rho_wedge_weight(&k, l, &r1, &r2).unwrap();
            let dims = weight_to_dims(&w, &k).unwrap();
            let expect = (int(2 * l as i64) + &r1 + &r2) / k.value();
            assert_eq!(dims.standard.value, ExactScalar::from_rational(expect));
            assert_eq!(kpz_standard(k.value(), &dims.standard.value), super::super::x_l_rho(&k, l, &r1, &r2).unwrap());
        }
    }

    #[test]
    fn consistency_examples() {
        assert!(welding_consistency(&Kappa::ratio(8, 1), 3, 2).unwrap());
        assert!(welding_consistency(&Kappa::ratio(5, 1), 1, 0).unwrap());
        assert!(welding_consistency(&Kappa::ratio(3, 1), 1, 0).is_err());
    }
}
