use super::{Ensemble, EnsembleKind, EnumerationError, Lattice, WalkCensus, MAX_N};

/// How the partitioned search is executed. Both paths run the same
/// prefix-partitioned search and merge results in prefix order, so their
/// output is identical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Work-stealing pool with this many threads. Runs sequentially when
    /// the `parallel` feature is disabled.
    Parallel { threads: usize },
}

const FREE: u8 = 0;
const TAW: u8 = 1;
const ARCH: u8 = 2;
const BRIDGE: u8 = 3;
const POLYGON: u8 = 4;

/// Padded square grid of cells with a precomputed neighbour table.
struct Grid {
    width: usize,
    offset: i32,
    deg: usize,
    nb: Vec<[u32; 4]>,
    xs: Vec<i32>,
    ys: Vec<i32>,
    r2: Vec<u64>,
    surface: Vec<bool>,
}

impl Grid {
    fn new(lattice: Lattice, n_max: usize) -> Self {
        let offset = n_max as i32 + 2;
        let width = 2 * offset as usize + 1;
        let cells = width * width;
        let (mut nb, mut xs, mut ys, mut r2) =
            (vec![[0u32; 4]; cells], vec![0; cells], vec![0; cells], vec![0; cells]);
        let mut surface = vec![false; cells];
        for c in 0..cells {
            let (x, y) = ((c % width) as i32 - offset, (c / width) as i32 - offset);
            xs[c] = x;
            ys[c] = y;
            r2[c] = lattice.r2_scaled(x, y);
            surface[c] = lattice.is_surface(x, y);
            if x.abs() == offset || y.abs() == offset {
                nb[c] = [c as u32; 4];
                continue;
            }
            let (pts, _) = lattice.neighbors(x, y);
            for (slot, &(u, v)) in nb[c].iter_mut().zip(&pts) {
                *slot = ((v + offset) as usize * width + (u + offset) as usize) as u32;
            }
        }
        Grid { width, offset, deg: lattice.coordination(), nb, xs, ys, r2, surface }
    }

    fn index(&self, x: i32, y: i32) -> u32 {
        ((y + self.offset) as usize * self.width + (x + self.offset) as usize) as u32
    }

    /// Occupancy with the border and the ensemble's forbidden cells filled.
    fn walls(&self, kind: EnsembleKind, root: u32) -> Vec<u8> {
        let root_x = self.xs[root as usize];
        (0..self.xs.len())
            .map(|c| {
                let (x, y) = (self.xs[c], self.ys[c]);
                let border = x.abs() == self.offset || y.abs() == self.offset;
                let wall = match kind {
                    EnsembleKind::Free => false,
                    EnsembleKind::Taw | EnsembleKind::Arch => y < 0,
                    EnsembleKind::Bridge => y <= 0,
                    EnsembleKind::Polygon => y < 0 || (y == 0 && x < root_x),
                };
                u8::from(border || wall || c as u32 == root)
            })
            .collect()
    }
}

#[derive(Clone)]
struct Tally {
    stride: usize,
    hist: Vec<u128>,
    r2: Vec<u128>,
}

impl Tally {
    fn new(n_max: usize) -> Self {
        let stride = n_max + 1;
        Tally { stride, hist: vec![0; stride * stride], r2: vec![0; stride] }
    }

    fn merge(&mut self, other: &Tally) {
        for (a, b) in self.hist.iter_mut().zip(&other.hist) {
            *a += b;
        }
        for (a, b) in self.r2.iter_mut().zip(&other.r2) {
            *a += b;
        }
    }
}

/// A partial walk at the cutoff depth, continued independently.
#[derive(Clone, Debug)]
struct Prefix {
    root: u32,
    path: Vec<u32>,
    contacts: usize,
    max_y: i32,
}

struct Walker<'g> {
    grid: &'g Grid,
    occ: Vec<u8>,
    root: u32,
    n_max: usize,
    path: Vec<u32>,
    tally: Tally,
    cut: usize,
    prefixes: Vec<Prefix>,
}

impl<'g> Walker<'g> {
    fn new(grid: &'g Grid, occ: Vec<u8>, root: u32, n_max: usize, cut: usize) -> Self {
        Walker { grid, occ, root, n_max, path: Vec::with_capacity(n_max + 1), tally: Tally::new(n_max), cut, prefixes: Vec::new() }
    }

    #[inline]
    fn visit<const K: u8>(&mut self, c: u32, n: usize, k: usize, max_y: i32) {
        let g = self.grid;
        let s = self.tally.stride;
        match K {
            FREE => {
                self.tally.hist[n * s] += 1;
                self.tally.r2[n] += u128::from(g.r2[c as usize]);
            }
            TAW => self.tally.hist[n * s + k] += 1,
            ARCH if g.ys[c as usize] == 0 => self.tally.hist[n * s + k] += 1,
            BRIDGE if g.ys[c as usize] >= max_y => self.tally.hist[n * s] += 1,
            _ => {}
        }
        if n == self.cut {
            self.prefixes.push(Prefix { root: self.root, path: self.path.clone(), contacts: k, max_y });
        } else if n < self.n_max {
            self.expand::<K>(c, n, k, max_y);
        }
    }

    fn expand<const K: u8>(&mut self, c: u32, n: usize, k: usize, max_y: i32) {
        let g = self.grid;
        let rem = (self.n_max - n - 1) as i32;
        let (rx, ry) = (g.xs[self.root as usize], g.ys[self.root as usize]);
        let nbs = g.nb[c as usize];
        for &d in &nbs[..g.deg] {
            if K == POLYGON && d == self.root {
                if n + 1 >= 3 {
                    self.tally.hist[(n + 1) * self.tally.stride + k] += 1;
                }
                continue;
            }
            if self.occ[d as usize] != 0 {
                continue;
            }
            let y = g.ys[d as usize];
            let new_max = max_y.max(y);
            let feasible = match K {
                ARCH => y <= rem,
                BRIDGE => new_max - y <= rem,
                POLYGON => (g.xs[d as usize] - rx).abs() + (y - ry).abs() <= rem,
                _ => true,
            };
            if !feasible {
                continue;
            }
            let k2 = k + usize::from(K != FREE && g.surface[d as usize]);
            self.occ[d as usize] = 1;
            self.path.push(d);
            self.visit::<K>(d, n + 1, k2, new_max);
            self.path.pop();
            self.occ[d as usize] = 0;
        }
    }

    fn start<const K: u8>(&mut self, lattice: Lattice) {
        let g = self.grid;
        let root = self.root;
        self.path.push(root);
        if K == FREE {
            // The empty walk, then a fixed first step along +x.
            self.tally.hist[0] += 1;
            let first = g.index(1, 0);
            debug_assert!(g.nb[root as usize][..lattice.coordination()].contains(&first));
            self.occ[first as usize] = 1;
            self.path.push(first);
            if self.n_max >= 1 {
                self.visit::<K>(first, 1, 0, 0);
            }
        } else {
            // Polygons count every surface vertex, the root included.
            let k = usize::from(K == POLYGON && g.surface[root as usize]);
            self.visit::<K>(root, 0, k, g.ys[root as usize]);
        }
    }

    fn resume<const K: u8>(&mut self, p: &Prefix) {
        for &c in &p.path {
            self.occ[c as usize] = 1;
        }
        self.path.clone_from(&p.path);
        let n = p.path.len() - 1;
        let last = *p.path.last().expect("nonempty prefix");
        if n < self.n_max {
            self.expand::<K>(last, n, p.contacts, p.max_y);
        }
    }
}

fn roots(grid: &Grid, lattice: Lattice, kind: EnsembleKind) -> Vec<u32> {
    if kind == EnsembleKind::Free {
        vec![grid.index(0, 0)]
    } else {
        lattice.anchors().iter().map(|&(x, y)| grid.index(x, y)).collect()
    }
}

fn prefix_phase<const K: u8>(grid: &Grid, lattice: Lattice, kind: EnsembleKind, n_max: usize, cut: usize) -> (Tally, Vec<Prefix>) {
    let mut tally = Tally::new(n_max);
    let mut prefixes = Vec::new();
    for root in roots(grid, lattice, kind) {
        let mut w = Walker::new(grid, grid.walls(kind, root), root, n_max, cut);
        w.start::<K>(lattice);
        tally.merge(&w.tally);
        prefixes.append(&mut w.prefixes);
    }
    (tally, prefixes)
}

fn run_prefix<const K: u8>(grid: &Grid, kind: EnsembleKind, n_max: usize, p: &Prefix) -> Tally {
    let mut w = Walker::new(grid, grid.walls(kind, p.root), p.root, n_max, usize::MAX);
    w.resume::<K>(p);
    w.tally
}

fn search<const K: u8>(grid: &Grid, lattice: Lattice, kind: EnsembleKind, n_max: usize, exec: Execution) -> Tally {
    let threads = match exec {
        Execution::Sequential => 1,
        Execution::Parallel { threads } => threads,
    };
    let target = 64 * threads.max(4);
    let mut cut = 1;
    let (mut tally, prefixes) = loop {
        let (t, p) = prefix_phase::<K>(grid, lattice, kind, n_max, cut);
        if p.len() >= target || cut >= n_max {
            break (t, p);
        }
        cut += 1;
    };
    let parts = run_all(&prefixes, exec, |p| run_prefix::<K>(grid, kind, n_max, p));
    for part in &parts {
        tally.merge(part);
    }
    tally
}

#[cfg(feature = "parallel")]
fn run_all<F>(prefixes: &[Prefix], exec: Execution, f: F) -> Vec<Tally>
where
    F: Fn(&Prefix) -> Tally + Sync + Send,
{
    use rayon::prelude::*;
    match exec {
        Execution::Sequential => prefixes.iter().map(f).collect(),
        Execution::Parallel { threads } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool construction");
            pool.install(|| prefixes.par_iter().map(f).collect())
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn run_all<F>(prefixes: &[Prefix], _exec: Execution, f: F) -> Vec<Tally>
where
    F: Fn(&Prefix) -> Tally,
{
    prefixes.iter().map(f).collect()
}

/// Enumerates `ensemble` on `lattice` for all lengths up to `n_max` using
/// `threads` worker threads (sequentially without the `parallel` feature).
pub fn enumerate(lattice: Lattice, ensemble: &Ensemble, n_max: usize, threads: usize) -> Result<WalkCensus, EnumerationError> {
    if threads == 0 {
        return Err(EnumerationError::InvalidThreads);
    }
    enumerate_with(lattice, ensemble, n_max, Execution::Parallel { threads })
}

pub fn enumerate_with(lattice: Lattice, ensemble: &Ensemble, n_max: usize, exec: Execution) -> Result<WalkCensus, EnumerationError> {
    if n_max == 0 {
        return Err(EnumerationError::NMaxTooSmall);
    }
    if n_max > MAX_N {
        return Err(EnumerationError::NMaxTooLarge(n_max));
    }
    if exec == (Execution::Parallel { threads: 0 }) {
        return Err(EnumerationError::InvalidThreads);
    }
    ensemble.validate()?;
    let grid = Grid::new(lattice, n_max);
    let kind = ensemble.kind;
    let mut tally = match kind {
        EnsembleKind::Free => search::<FREE>(&grid, lattice, kind, n_max, exec),
        EnsembleKind::Taw => search::<TAW>(&grid, lattice, kind, n_max, exec),
        EnsembleKind::Arch => search::<ARCH>(&grid, lattice, kind, n_max, exec),
        EnsembleKind::Bridge => search::<BRIDGE>(&grid, lattice, kind, n_max, exec),
        EnsembleKind::Polygon => search::<POLYGON>(&grid, lattice, kind, n_max, exec),
    };
    let stride = tally.stride;
    let mut symmetry = 1;
    match kind {
        EnsembleKind::Free => {
            symmetry = lattice.coordination() as u64;
            for n in 1..=n_max {
                tally.hist[n * stride] *= u128::from(symmetry);
                tally.r2[n] *= u128::from(symmetry);
            }
        }
        EnsembleKind::Polygon => {
            for h in &mut tally.hist {
                debug_assert!(*h % 2 == 0);
                *h /= 2;
            }
        }
        _ => {}
    }
    let histograms = tally.hist.chunks(stride).map(<[u128]>::to_vec).collect();
    let r2 = (kind == EnsembleKind::Free).then_some(tally.r2);
    Ok(WalkCensus::from_parts(lattice, ensemble.clone(), n_max, histograms, r2, symmetry))
}
