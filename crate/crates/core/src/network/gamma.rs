use num_traits::Zero;

use super::{census, NetworkError, NetworkTopology, VertexKind};
use crate::scalar::{int, Rational};
use crate::series::Exponent;
use crate::tables::{nu, x_bulk, x_surface, BoundaryCondition, DimensionSetting, UniversalityClass};

fn vertex_exponent(
    kind: VertexKind,
    legs: usize,
    class: UniversalityClass,
    setting: &DimensionSetting,
) -> Result<Exponent, NetworkError> {
    let x = match kind {
        VertexKind::Bulk => x_bulk(legs, class, setting)?,
        // the virtual hyperplane of a bridge carries no adsorption interaction
        VertexKind::Surface | VertexKind::Bridge => {
            x_surface(legs, class, BoundaryCondition::Ordinary, setting)?
        }
        VertexKind::SurfaceSpecial => x_surface(legs, class, BoundaryCondition::Special, setting)?,
        VertexKind::SurfaceMixed => {
            x_surface(legs, class, BoundaryCondition::MixedOrdinarySpecial, setting)?
        }
    };
    Ok(x)
}

/// How chain lengths are constrained when counting configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Dispersity {
    /// Every chain has the same length `S`.
    #[default]
    Monodisperse,
    /// Only the total length is fixed; the `N - 1` free length ratios add
    /// `N - 1` to the exponent.
    FixedTotalLength,
}

/// Configuration exponent `gamma_G` of a monodisperse network.
///
/// Bulk networks: `nu [d(V-1) - sum n_L x_L] - (N-1)`.
/// Surface networks: `nu [dV + (d-1)(V_S-1) - sum_vertices x] - (N-1)`,
/// with bridges counted in `V` and carrying ordinary surface exponents.
pub fn gamma_exponent(
    net: &NetworkTopology,
    class: UniversalityClass,
    setting: &DimensionSetting,
) -> Result<Exponent, NetworkError> {
    gamma_exponent_with(net, class, setting, Dispersity::Monodisperse)
}

pub fn gamma_exponent_with(
    net: &NetworkTopology,
    class: UniversalityClass,
    setting: &DimensionSetting,
    dispersity: Dispersity,
) -> Result<Exponent, NetworkError> {
    let c = census(net);
    if c.v_s == 0 && !c.bridge.is_empty() {
        return Err(NetworkError::BridgeInBulkNetwork);
    }
    let d = setting.dimension()?;
    let nu = nu(class, setting)?;

    let mut sum = Exponent::rational(Rational::zero());
    for kind in VertexKind::ALL {
        for (&legs, &n) in c.counts(kind) {
            let x = vertex_exponent(kind, legs, class, setting)?;
            sum = &sum + &x.scale(&int(n as i64));
        }
    }

    let volume = if c.v_s == 0 {
        d.scale(&int(c.v as i64 - 1))
    } else {
        let d_minus_one = &d - &Exponent::rational(int(1));
        &d.scale(&int(c.v as i64)) + &d_minus_one.scale(&int(c.v_s as i64 - 1))
    };
    let gamma = &nu * &(&volume - &sum);
    Ok(match dispersity {
        Dispersity::Monodisperse => &gamma - &Exponent::rational(int(c.chains as i64 - 1)),
        Dispersity::FixedTotalLength => gamma,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrownianReduction {
    pub gamma_full: Rational,
    pub gamma_reduced: Rational,
    pub equal: bool,
}

/// Compares the full Brownian exponent with the loop-count reduction
/// `1 - L d/2` (bulk) or `1 - L d/2 - (V_S-1)/2 - L_S/2` (surface).
pub fn brownian_reduction_check(net: &NetworkTopology, d: Rational) -> Result<BrownianReduction, NetworkError> {
    if let Some(v) = (0..net.vertex_count())
        .find(|&v| matches!(net.kind(v), VertexKind::Bridge | VertexKind::SurfaceSpecial | VertexKind::SurfaceMixed))
    {
        return Err(NetworkError::UnsupportedNetwork(format!(
            "vertex {:?} is {}; the Brownian reduction covers bulk and ordinary surface vertices only",
            net.id(v),
            net.kind(v)
        )));
    }
    let setting = DimensionSetting::general(d.clone())?;
    let full = gamma_exponent(net, UniversalityClass::Brownian, &setting)?;
    let gamma_full = full.as_rational().cloned().expect("Brownian exponents are rational");

    let c = census(net);
    let mut reduced = int(1) - int(c.loops as i64) * &d / int(2);
    if c.v_s > 0 {
        reduced -= int(c.v_s as i64 - 1) / int(2) + int(c.l_s as i64) / int(2);
    }
    Ok(BrownianReduction { equal: gamma_full == reduced, gamma_full, gamma_reduced: reduced })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeShift {
    /// Number of ordinary surface vertices turned into bridges.
    pub bridges: usize,
    pub difference: Exponent,
    /// `bridges * nu`.
    pub expected_nu: Exponent,
    pub equal: bool,
}

/// Checks `gamma(G_b) = gamma(G_S) + k nu` for a pair of networks that
/// differ only in `k >= 1` ordinary surface vertices of `net_s` being
/// bridge vertices in `net_b`.
pub fn bridge_shift_check(
    net_b: &NetworkTopology,
    net_s: &NetworkTopology,
    class: UniversalityClass,
    setting: &DimensionSetting,
) -> Result<BridgeShift, NetworkError> {
    let fail = |msg: String| Err(NetworkError::NotABridgePair(msg));
    if net_b.vertex_count() != net_s.vertex_count() {
        return fail("vertex counts differ".into());
    }
    if net_b.chain_multiset() != net_s.chain_multiset() {
        return fail("chains differ".into());
    }
    let mut bridges = 0;
    for (id, kind_s) in net_s.vertices() {
        let Some(v) = net_b.index_of(id) else {
            return fail(format!("vertex {id:?} missing from the bridge network"));
        };
        let kind_b = net_b.kind(v);
        if kind_b == kind_s {
            continue;
        }
        if kind_s == VertexKind::Surface && kind_b == VertexKind::Bridge {
            bridges += 1;
        } else {
            return fail(format!("vertex {id:?} changes from {kind_s} to {kind_b}"));
        }
    }
    if bridges == 0 {
        return fail("no surface vertex became a bridge".into());
    }
    let difference = &gamma_exponent(net_b, class, setting)? - &gamma_exponent(net_s, class, setting)?;
    let expected_nu = nu(class, setting)?.scale(&int(bridges));
    Ok(BridgeShift { bridges: bridges as usize, equal: difference == expected_nu, difference, expected_nu })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::catalog;
    use crate::scalar::rat;
    use crate::series::EpsilonOrder;
    use BoundaryCondition::*;
    use UniversalityClass::*;

    const D2: DimensionSetting = DimensionSetting::Exact2D;

    fn g(net: &NetworkTopology, class: UniversalityClass) -> Rational {
        gamma_exponent(net, class, &D2).unwrap().as_rational().cloned().unwrap()
    }

    #[test]
    fn saw_single_vertex_values() {
        assert_eq!(g(&catalog::chain(), Saw), rat(43, 32));
        assert_eq!(g(&catalog::star(3), Saw), rat(17, 16));
        assert_eq!(g(&catalog::bridge(Ordinary), Saw), rat(9, 16));
        assert_eq!(g(&catalog::bridge(Special), Saw), rat(17, 16));
        assert_eq!(g(&catalog::bridge(MixedOrdinarySpecial), Saw), rat(15, 16));
        assert_eq!(g(&catalog::arch(Ordinary), Saw), rat(-3, 16));
    }

    #[test]
    fn l_bridge_families_need_free_arm_lengths() {
        let total = |l: usize, bc, class| {
            let net = catalog::l_bridge_star(l, bc);
            gamma_exponent_with(&net, class, &D2, Dispersity::FixedTotalLength).unwrap().as_rational().cloned().unwrap()
        };
        for l in 1..=9i64 {
            let lu = l as usize;
            assert_eq!(total(lu, Ordinary, Saw), rat(9 * l * (3 - l), 32));
            assert_eq!(total(lu, MixedOrdinarySpecial, Saw), rat(3 * l * (13 - 3 * l), 32));
            assert_eq!(total(lu, Special, Saw), rat(51 * l - 9 * l * l - 8, 32));
            assert_eq!(total(lu, Special, Theta), rat(2 * l * (7 - l), 21));
            assert_eq!(total(lu, MixedOrdinarySpecial, Theta), rat(2 * l * (5 - l), 21));
            assert_eq!(total(lu, Ordinary, Theta), rat(2 * (3 * l - l * l - 2), 21));
            assert_eq!(g(&catalog::l_bridge_star(lu, Ordinary), Saw), total(lu, Ordinary, Saw) - int(l - 1));
        }
    }

    #[test]
    fn theta_bridge_is_zero() {
        assert_eq!(g(&catalog::bridge(Ordinary), Theta), int(0));
    }

    #[test]
    fn eight_chain_pair() {
        assert_eq!(g(&catalog::eight_chain_surface(), Saw), rat(-33, 4));
        assert_eq!(g(&catalog::eight_chain_bridge(), Saw), rat(-15, 2));
        let shift = bridge_shift_check(&catalog::eight_chain_bridge(), &catalog::eight_chain_surface(), Saw, &D2).unwrap();
        assert!(shift.equal);
        assert_eq!(shift.difference, Exponent::rational(rat(3, 4)));
    }

    #[test]
    fn bridge_in_bulk_network_is_rejected() {
        let net: NetworkTopology = "vertex a bulk\nvertex b bridge\nchain a b".parse().unwrap();
        assert_eq!(gamma_exponent(&net, Saw, &D2), Err(NetworkError::BridgeInBulkNetwork));
    }

    #[test]
    fn unsupported_vertex_kinds_propagate() {
        let err = gamma_exponent(&catalog::taw(Special), MutuallyAvoiding, &D2).unwrap_err();
        assert!(matches!(err, NetworkError::Exponent(_)));
    }

    #[test]
    fn eps_expansion_of_single_chain() {
        let setting = DimensionSetting::Epsilon(EpsilonOrder::Second);
        let gamma = gamma_exponent(&catalog::chain(), Saw, &setting).unwrap();
        assert_eq!(gamma.as_series().unwrap().coefficients(), &[int(1), rat(1, 8), rat(13, 256)]);
    }

    #[test]
    fn brownian_reductions() {
        let r = brownian_reduction_check(&catalog::chain(), int(3)).unwrap();
        assert_eq!((r.gamma_full, r.equal), (int(1), true));
        let eight: NetworkTopology = "vertex o bulk\nchain o o\nchain o o".parse().unwrap();
        let r = brownian_reduction_check(&eight, int(2)).unwrap();
        assert_eq!((r.gamma_full, r.equal), (int(-1), true));
        let r = brownian_reduction_check(&catalog::arch(Ordinary), int(3)).unwrap();
        assert_eq!((r.gamma_full, r.equal), (rat(-1, 2), true));
        assert!(matches!(
            brownian_reduction_check(&catalog::bridge(Ordinary), int(2)),
            Err(NetworkError::UnsupportedNetwork(_))
        ));
    }

    #[test]
    fn bridge_pairs() {
        let shift = bridge_shift_check(&catalog::bridge(Ordinary), &catalog::arch(Ordinary), Theta, &D2).unwrap();
        assert_eq!(shift.difference, Exponent::rational(rat(4, 7)));
        assert!(shift.equal);
        let err = bridge_shift_check(&catalog::arch(Ordinary), &catalog::bridge(Ordinary), Saw, &D2);
        assert!(matches!(err, Err(NetworkError::NotABridgePair(_))));
        let err = bridge_shift_check(&catalog::taw(Ordinary), &catalog::arch(Ordinary), Saw, &D2);
        assert!(matches!(err, Err(NetworkError::NotABridgePair(_))));
    }
}
