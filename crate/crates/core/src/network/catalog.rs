//! Named networks used throughout the tests and the verify suite.

use super::{NetworkTopology, VertexKind};
use crate::tables::BoundaryCondition;

fn build(vertices: &[(&str, VertexKind)], chains: &[(&str, &str)]) -> NetworkTopology {
    let mut b = NetworkTopology::builder();
    for &(id, kind) in vertices {
        b.vertex(id, kind).expect("catalog ids are unique");
    }
    for &(x, y) in chains {
        let (x, y) = (b.lookup(x).unwrap(), b.lookup(y).unwrap());
        b.chain(x, y);
    }
    b.build().expect("catalog networks are valid")
}

/// A single free chain.
pub fn chain() -> NetworkTopology {
    build(&[("a", VertexKind::Bulk), ("b", VertexKind::Bulk)], &[("a", "b")])
}

/// Bulk `L`-arm star; `star(1)` is a single chain.
pub fn star(legs: usize) -> NetworkTopology {
    assert!(legs >= 1);
    if legs == 1 {
        return chain();
    }
    let arms: Vec<String> = (1..=legs).map(|i| format!("e{i}")).collect();
    let mut vertices = vec![("c", VertexKind::Bulk)];
    vertices.extend(arms.iter().map(|a| (a.as_str(), VertexKind::Bulk)));
    let chains: Vec<(&str, &str)> = arms.iter().map(|a| ("c", a.as_str())).collect();
    build(&vertices, &chains)
}

/// Terminally attached walk: one end on the surface.
pub fn taw(bc: BoundaryCondition) -> NetworkTopology {
    build(&[("s", VertexKind::surface(bc)), ("e", VertexKind::Bulk)], &[("s", "e")])
}

/// Arch: both ends on the surface with the same boundary condition.
pub fn arch(bc: BoundaryCondition) -> NetworkTopology {
    let k = VertexKind::surface(bc);
    build(&[("s", k), ("t", k)], &[("s", "t")])
}

/// Arch with one special and one ordinary end.
pub fn arch_special_ordinary() -> NetworkTopology {
    build(&[("s", VertexKind::SurfaceSpecial), ("t", VertexKind::Surface)], &[("s", "t")])
}

/// Single bridge anchored at a surface vertex with the given condition.
pub fn bridge(bc: BoundaryCondition) -> NetworkTopology {
    build(&[("s", VertexKind::surface(bc)), ("t", VertexKind::Bridge)], &[("s", "t")])
}

/// `L` arms from one surface vertex, each ending at its own bridge vertex.
pub fn l_bridge_star(legs: usize, bc: BoundaryCondition) -> NetworkTopology {
    assert!(legs >= 1);
    let tops: Vec<String> = (1..=legs).map(|i| format!("b{i}")).collect();
    let mut vertices = vec![("s", VertexKind::surface(bc))];
    vertices.extend(tops.iter().map(|t| (t.as_str(), VertexKind::Bridge)));
    let chains: Vec<(&str, &str)> = tops.iter().map(|t| ("s", t.as_str())).collect();
    build(&vertices, &chains)
}

const EIGHT_CHAINS: [(&str, &str); 8] = [
    ("S3", "B2"),
    ("S3", "B3"),
    ("S3", "B4"),
    ("S2", "B2"),
    ("S2", "B3"),
    ("S1", "B4"),
    ("B1", "B2"),
    ("B3", "B4"),
];

fn eight_chain(top: VertexKind) -> NetworkTopology {
    let vertices = [
        ("B1", VertexKind::Bulk),
        ("B2", VertexKind::Bulk),
        ("B3", VertexKind::Bulk),
        ("B4", VertexKind::Bulk),
        ("S1", VertexKind::Surface),
        ("S2", VertexKind::Surface),
        ("S3", top),
    ];
    build(&vertices, &EIGHT_CHAINS)
}

/// Eight-chain surface network with three surface vertices (1, 2 and 3 legs)
/// and four bulk vertices (one 1-leg, three 3-leg).
pub fn eight_chain_surface() -> NetworkTopology {
    eight_chain(VertexKind::Surface)
}

/// The same network with its 3-leg surface vertex as the top-most bridge.
pub fn eight_chain_bridge() -> NetworkTopology {
    eight_chain(VertexKind::Bridge)
}
