use std::fmt;
use std::str::FromStr;

/// Planar lattices. The hexagonal lattice uses the brick-wall embedding:
/// `(x, y)` joins `(x +- 1, y)` and, vertically, `(x, y + 1)` when `x + y`
/// is even or `(x, y - 1)` when it is odd.
///
/// ```text
///   y=2   o---o---o---o
///             |       |
///   y=1   o---o---o---o
///         |       |
///   y=0   o---o---o---o      surface row (zigzag)
///         x=0 1   2   3
/// ```
///
/// The half-space is `y >= 0`. On the zigzag row `y = 0`, vertices with odd
/// `x` have their third bond crossing the surface; only those are surface
/// vertices. Vertices with even `x` point into the bulk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lattice {
    Square,
    Hexagonal,
}

impl Lattice {
    pub fn coordination(self) -> usize {
        match self {
            Lattice::Square => 4,
            Lattice::Hexagonal => 3,
        }
    }

    /// Nearest neighbours of `(x, y)`, horizontal ones first.
    pub fn neighbors(self, x: i32, y: i32) -> ([(i32, i32); 4], usize) {
        match self {
            Lattice::Square => ([(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)], 4),
            Lattice::Hexagonal => {
                let v = if (x + y).rem_euclid(2) == 0 { (x, y + 1) } else { (x, y - 1) };
                ([(x + 1, y), (x - 1, y), v, v], 3)
            }
        }
    }

    /// Squared Euclidean distance from the origin in units of `1 / r2_scale`
    /// (unit bond length).
    pub fn r2_scaled(self, x: i32, y: i32) -> u64 {
        match self {
            Lattice::Square => (x as i64 * x as i64 + y as i64 * y as i64) as u64,
            Lattice::Hexagonal => {
                let h = i64::from((x + y).rem_euclid(2) == 0);
                let yy = 3 * y as i64 + h - 1;
                (3 * x as i64 * x as i64 + yy * yy) as u64
            }
        }
    }

    pub fn r2_scale(self) -> u64 {
        match self {
            Lattice::Square => 1,
            Lattice::Hexagonal => 4,
        }
    }

    /// Vertices that carry the surface fugacity (adjacent to the excluded
    /// half-plane `y < 0`).
    pub fn is_surface(self, x: i32, y: i32) -> bool {
        match self {
            Lattice::Square => y == 0,
            Lattice::Hexagonal => y == 0 && x.rem_euclid(2) == 1,
        }
    }

    /// Boundary anchors up to horizontal lattice translations.
    pub fn anchors(self) -> &'static [(i32, i32)] {
        match self {
            Lattice::Square => &[(0, 0)],
            Lattice::Hexagonal => &[(0, 0), (1, 0)],
        }
    }

    /// Shortest lattice path length between two vertices is at least this.
    pub fn distance_bound(self, dx: i32, dy: i32) -> i32 {
        dx.abs() + dy.abs()
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lattice::Square => "square",
            Lattice::Hexagonal => "hexagonal",
        })
    }
}

impl FromStr for Lattice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "square" => Ok(Lattice::Square),
            "hexagonal" | "hex" | "honeycomb" => Ok(Lattice::Hexagonal),
            _ => Err(format!("unknown lattice {s:?} (expected square, hexagonal)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagonal_adjacency_is_symmetric() {
        for x in -5..5 {
            for y in -5..5 {
                let (nb, deg) = Lattice::Hexagonal.neighbors(x, y);
                for &(u, v) in &nb[..deg] {
                    let (back, d2) = Lattice::Hexagonal.neighbors(u, v);
                    assert!(back[..d2].contains(&(x, y)));
                }
            }
        }
    }

    #[test]
    fn hexagonal_bonds_have_unit_length() {
        let half_height = |x: i32, y: i32| 3 * y as i64 + i64::from((x + y).rem_euclid(2) == 0) - 1;
        for x in -4..4 {
            for y in -4..4 {
                let (nb, deg) = Lattice::Hexagonal.neighbors(x, y);
                for &(u, v) in &nb[..deg] {
                    let dx = (u - x) as i64;
                    let dy = half_height(u, v) - half_height(x, y);
                    assert_eq!(3 * dx * dx + dy * dy, 4);
                }
            }
        }
        assert_eq!(Lattice::Hexagonal.r2_scaled(0, 0), 0);
        assert_eq!(Lattice::Hexagonal.r2_scaled(0, 1), 4);
    }
}
