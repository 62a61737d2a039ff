use std::collections::BTreeMap;
use std::fmt;

use super::{NetworkTopology, VertexKind};

/// Vertex counts by kind and leg number, with the derived topological
/// numbers of the network.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VertexCensus {
    /// `n_L`: bulk vertices.
    pub bulk: BTreeMap<usize, usize>,
    /// `n_L^S`: ordinary surface vertices.
    pub surface: BTreeMap<usize, usize>,
    pub special: BTreeMap<usize, usize>,
    pub mixed: BTreeMap<usize, usize>,
    /// `n_L^b`: bridge vertices.
    pub bridge: BTreeMap<usize, usize>,
    /// Bulk plus bridge vertices.
    pub v: usize,
    /// Surface vertices of every boundary condition.
    pub v_s: usize,
    pub chains: usize,
    pub loops: usize,
    /// Chain ends touching the surface.
    pub l_s: usize,
}

impl VertexCensus {
    pub fn counts(&self, kind: VertexKind) -> &BTreeMap<usize, usize> {
        match kind {
            VertexKind::Bulk => &self.bulk,
            VertexKind::Surface => &self.surface,
            VertexKind::SurfaceSpecial => &self.special,
            VertexKind::SurfaceMixed => &self.mixed,
            VertexKind::Bridge => &self.bridge,
        }
    }

    fn counts_mut(&mut self, kind: VertexKind) -> &mut BTreeMap<usize, usize> {
        match kind {
            VertexKind::Bulk => &mut self.bulk,
            VertexKind::Surface => &mut self.surface,
            VertexKind::SurfaceSpecial => &mut self.special,
            VertexKind::SurfaceMixed => &mut self.mixed,
            VertexKind::Bridge => &mut self.bridge,
        }
    }

    pub fn count(&self, kind: VertexKind, legs: usize) -> usize {
        self.counts(kind).get(&legs).copied().unwrap_or(0)
    }
}

/// Takes the census of a validated network. Panics if the cycle rank and
/// the vertex-sum loop formula disagree, which would mean an internal bug.
pub fn census(net: &NetworkTopology) -> VertexCensus {
    let mut c = VertexCensus::default();
    for (v, d) in net.degrees().into_iter().enumerate() {
        *c.counts_mut(net.kind(v)).entry(d).or_insert(0) += 1;
    }
    let total = |m: &BTreeMap<usize, usize>| m.values().sum::<usize>();
    let legs = |m: &BTreeMap<usize, usize>| m.iter().map(|(l, n)| l * n).sum::<usize>();
    let surface_kinds = [&c.surface, &c.special, &c.mixed];

    c.v = total(&c.bulk) + total(&c.bridge);
    c.v_s = surface_kinds.iter().map(|m| total(m)).sum();
    c.l_s = surface_kinds.iter().map(|m| legs(m)).sum();

    let all_legs: usize = VertexKind::ALL.iter().map(|&k| legs(c.counts(k))).sum();
    assert!(all_legs.is_multiple_of(2), "odd total leg count");
    c.chains = all_legs / 2;
    assert_eq!(c.chains, net.chain_count(), "handshake identity violated");

    let cycle_rank = c.chains as i64 - (c.v + c.v_s) as i64 + 1;
    let twice_excess: i64 = VertexKind::ALL
        .iter()
        .flat_map(|&k| c.counts(k).iter())
        .map(|(&l, &n)| (l as i64 - 2) * n as i64)
        .sum();
    assert!(twice_excess % 2 == 0, "odd vertex excess");
    let from_vertices = twice_excess / 2 + 1;
    assert_eq!(cycle_rank, from_vertices, "loop formulas disagree");
    assert!(cycle_rank >= 0, "negative cycle rank for a connected network");
    c.loops = cycle_rank as usize;
    c
}

impl fmt::Display for VertexCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for kind in VertexKind::ALL {
            let m = self.counts(kind);
            if m.is_empty() {
                continue;
            }
            let parts: Vec<String> = m.iter().map(|(l, n)| format!("n{l}={n}")).collect();
            writeln!(f, "{kind}: {}", parts.join(" "))?;
        }
        write!(
            f,
            "V={} V_S={} chains={} loops={} L_S={}",
            self.v, self.v_s, self.chains, self.loops, self.l_s
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::catalog;

    #[test]
    fn single_chain() {
        let c = census(&catalog::chain());
        assert_eq!((c.v, c.v_s, c.chains, c.loops), (2, 0, 1, 0));
    }

    #[test]
    fn stars() {
        for l in 1..=9 {
            let c = census(&catalog::star(l));
            if l == 1 {
                assert_eq!(c.count(VertexKind::Bulk, 1), 2);
            } else {
                assert_eq!(c.count(VertexKind::Bulk, 1), l);
                assert_eq!(c.count(VertexKind::Bulk, l), 1);
            }
            assert_eq!((c.v, c.chains, c.loops), (l + 1, l, 0));
        }
    }

    #[test]
    fn eight_chain_network() {
        let c = census(&catalog::eight_chain_surface());
        assert_eq!(c.count(VertexKind::Bulk, 1), 1);
        assert_eq!(c.count(VertexKind::Bulk, 3), 3);
        for l in 1..=3 {
            assert_eq!(c.count(VertexKind::Surface, l), 1);
        }
        assert_eq!((c.chains, c.v, c.v_s, c.loops, c.l_s), (8, 4, 3, 2, 6));
    }

    #[test]
    fn display_lists_nonempty_kinds() {
        let text = census(&catalog::arch(crate::tables::BoundaryCondition::Ordinary)).to_string();
        assert_eq!(text, "surface: n1=2\nV=0 V_S=2 chains=1 loops=0 L_S=2");
    }
}
