//! Brute-force reference enumeration: unrestricted walks in the full plane,
//! filtered by whole-path predicates. Slow but independent of the engine's
//! walls, pruning, symmetry reduction and partitioning.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::{Ensemble, EnsembleKind, EnumerationError, Lattice, WalkCensus};

pub const ORACLE_MAX_N: usize = 12;

type Point = (i32, i32);

fn walks(lattice: Lattice, path: &mut Vec<Point>, seen: &mut HashSet<Point>, n_max: usize, out: &mut dyn FnMut(&[Point])) {
    out(path);
    if path.len() > n_max {
        return;
    }
    let &(x, y) = path.last().expect("nonempty");
    let (nb, deg) = lattice.neighbors(x, y);
    for &p in &nb[..deg] {
        if seen.insert(p) {
            path.push(p);
            walks(lattice, path, seen, n_max, out);
            path.pop();
            seen.remove(&p);
        }
    }
}

fn each_walk(lattice: Lattice, start: Point, n_max: usize, mut out: impl FnMut(&[Point])) {
    let mut path = vec![start];
    let mut seen = HashSet::from([start]);
    walks(lattice, &mut path, &mut seen, n_max, &mut out);
}

/// Four times the squared end-to-end distance of a hexagonal walk, tracked
/// step by step: `X` in units of `sqrt(3)/2`, `Y` in units of `1/2`.
fn hex_r2_times_four(path: &[Point]) -> u128 {
    let (mut big_x, mut big_y) = (0i64, 0i64);
    for w in path.windows(2) {
        let ((x0, y0), (x1, y1)) = (w[0], w[1]);
        if y1 == y0 {
            big_x += i64::from(x1 - x0);
            big_y += if (x0 + y0).rem_euclid(2) == 0 { -1 } else { 1 };
        } else {
            big_y += 2 * i64::from(y1 - y0);
        }
    }
    (3 * big_x * big_x + big_y * big_y) as u128
}

fn contacts(lattice: Lattice, path: &[Point]) -> usize {
    path.iter().filter(|p| lattice.is_surface(p.0, p.1)).count()
}

/// Exhaustive census for `n_max <= ORACLE_MAX_N` with the same conventions
/// as the engine, but no symmetry factor.
pub fn oracle_enumerate(lattice: Lattice, ensemble: &Ensemble, n_max: usize) -> Result<WalkCensus, EnumerationError> {
    if n_max == 0 {
        return Err(EnumerationError::NMaxTooSmall);
    }
    if n_max > ORACLE_MAX_N {
        return Err(EnumerationError::OracleTooLarge(n_max));
    }
    let mut hist = vec![vec![0u128; n_max + 1]; n_max + 1];
    let mut r2 = vec![0u128; n_max + 1];
    let kind = ensemble.kind;
    match kind {
        EnsembleKind::Free => each_walk(lattice, (0, 0), n_max, |p| {
            let n = p.len() - 1;
            hist[n][0] += 1;
            let &(x, y) = p.last().expect("nonempty");
            r2[n] += match lattice {
                Lattice::Square => (x * x + y * y) as u128,
                Lattice::Hexagonal => hex_r2_times_four(p),
            };
        }),
        EnsembleKind::Polygon => {
            for (n, k) in polygons(lattice, n_max) {
                hist[n][k] += 1;
            }
        }
        _ => {
            for &anchor in lattice.anchors() {
                each_walk(lattice, anchor, n_max, |p| {
                    let n = p.len() - 1;
                    let end_y = p[n].1;
                    let keep = match kind {
                        EnsembleKind::Taw => p.iter().all(|q| q.1 >= 0),
                        EnsembleKind::Arch => p.iter().all(|q| q.1 >= 0) && end_y == 0,
                        EnsembleKind::Bridge => p[1..].iter().all(|q| q.1 > p[0].1 && q.1 <= end_y),
                        _ => unreachable!(),
                    };
                    if keep {
                        hist[n][contacts(lattice, &p[1..])] += 1;
                    }
                });
            }
        }
    }
    Ok(WalkCensus::from_parts(
        lattice,
        ensemble.clone(),
        n_max,
        hist,
        (kind == EnsembleKind::Free).then_some(r2),
        1,
    ))
}

/// Distinct half-plane polygons touching `y = 0`, modulo horizontal
/// lattice translations: `(length, surface vertices)` per polygon.
fn polygons(lattice: Lattice, n_max: usize) -> Vec<(usize, usize)> {
    let period = match lattice {
        Lattice::Square => 1,
        Lattice::Hexagonal => 2,
    };
    let mut found: HashMap<BTreeSet<(Point, Point)>, (usize, usize)> = HashMap::new();
    each_walk(lattice, (0, 0), n_max - 1, |p| {
        let n = p.len();
        if n < 3 || p.iter().any(|q| q.1 < 0) {
            return;
        }
        let &(x, y) = p.last().expect("nonempty");
        let (nb, deg) = lattice.neighbors(x, y);
        if !nb[..deg].contains(&(0, 0)) {
            return;
        }
        let left = p.iter().filter(|q| q.1 == 0).map(|q| q.0).min().expect("origin on surface");
        let shift = left.div_euclid(period) * period;
        let mut edges = BTreeSet::new();
        for i in 0..n {
            let (a, b) = (p[i], p[(i + 1) % n]);
            let (a, b) = ((a.0 - shift, a.1), (b.0 - shift, b.1));
            edges.insert(if a < b { (a, b) } else { (b, a) });
        }
        found.insert(edges, (n, contacts(lattice, p)));
    });
    found.into_values().collect()
}
