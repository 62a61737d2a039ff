//! Double-precision evaluation of the closed forms for real (possibly
//! irrational) `kappa`. Comparisons use [`TOLERANCE`].

pub const TOLERANCE: f64 = 1e-12;

pub fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOLERANCE * (1.0 + a.abs().max(b.abs()))
}

fn heaviside(x: f64) -> f64 {
    if x < 0.0 {
        0.0
    } else if x == 0.0 {
        0.5
    } else {
        1.0
    }
}

pub fn kpz_u(kappa: f64, delta: f64) -> f64 {
    0.25 * delta * (kappa * delta + 4.0 - kappa)
}

pub fn kpz_v(kappa: f64, delta: f64) -> f64 {
    (kappa * kappa * delta * delta - (4.0 - kappa).powi(2)) / (16.0 * kappa)
}

/// `None` when the discriminant is negative.
pub fn kpz_u_inverse(kappa: f64, x: f64) -> Option<f64> {
    let disc = 16.0 * kappa * x + (4.0 - kappa).powi(2);
    (disc >= 0.0).then(|| (disc.sqrt() + kappa - 4.0) / (2.0 * kappa))
}

pub fn u_inv_zero(kappa: f64) -> f64 {
    heaviside(kappa - 4.0) * (1.0 - 4.0 / kappa)
}

pub fn delta_lj(kappa: f64, legs: u32, j: u32) -> f64 {
    2.0 * legs as f64 / kappa + j as f64 * u_inv_zero(kappa)
}

pub fn x_surface_lj(kappa: f64, legs: u32, j: u32) -> f64 {
    let (l2, j, s) = (2.0 * legs as f64, j as f64, kappa - 4.0);
    (l2 + j * s) * (l2 + (j - 1.0) * s) / (4.0 * kappa)
}

pub fn x_bulk_lj(kappa: f64, legs: u32, j: u32) -> f64 {
    let (l2, j, s) = (2.0 * legs as f64, j as f64, kappa - 4.0);
    (l2 + (j + 1.0) * s) * (l2 + (j - 1.0) * s) / (8.0 * kappa)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irrational_kappa_round_trips() {
        for kappa in [std::f64::consts::E, std::f64::consts::PI + 2.0, 2.0f64.sqrt() * 2.0] {
            for l in 1..=6 {
                for j in 0..=l + 1 {
                    let x = x_surface_lj(kappa, l, j);
                    if kappa > 4.0 {
                        assert!(approx_eq(kpz_u(kappa, delta_lj(kappa, l, j)), x));
                    }
                    let back = kpz_u_inverse(kappa, x).unwrap();
                    assert!(approx_eq(kpz_u(kappa, back), x));
                }
                if kappa > 4.0 {
                    for j in 0..=l {
                        assert!(approx_eq(2.0 * kpz_v(kappa, delta_lj(kappa, l, j)), x_bulk_lj(kappa, l, j)));
                    }
                }
            }
        }
    }

    #[test]
    fn matches_exact_module_at_rational_kappa() {
        use crate::sle::{self, Kappa};
        let k = Kappa::ratio(6, 1);
        for l in 1..=5 {
            for j in 0..=l {
                let exact = sle::x_bulk_lj(&k, l, j).unwrap().to_f64();
                assert!(approx_eq(exact, x_bulk_lj(6.0, l, j)));
            }
        }
        assert!(kpz_u_inverse(8.0, -1.0).is_none());
    }
}
