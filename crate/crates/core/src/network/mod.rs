//! Polymer network topologies: vertices of several kinds joined by chains.

pub mod catalog;
mod census;
mod gamma;
mod parse;
pub mod random;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tables::{BoundaryCondition, ExponentError};

pub use census::{census, VertexCensus};
pub use gamma::{
    bridge_shift_check, brownian_reduction_check, gamma_exponent, gamma_exponent_with, BridgeShift, BrownianReduction,
    Dispersity,
};
pub use parse::parse_network;

pub const DEFAULT_DEGREE_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetworkError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: chain references unknown vertex {id:?}")]
    UnknownVertexReference { id: String, line: usize },
    #[error("vertex {0:?} declared twice")]
    DuplicateVertex(String),
    #[error("vertex {0:?} has no chains")]
    IsolatedVertex(String),
    #[error("network has no vertices")]
    EmptyNetwork,
    #[error("network is not connected")]
    DisconnectedNetwork,
    #[error("vertex {id:?} has degree {degree}, above the cap of {cap}")]
    DegreeCap { id: String, degree: usize, cap: usize },
    #[error("bridge vertices require at least one surface vertex")]
    BridgeInBulkNetwork,
    #[error("unsupported network: {0}")]
    UnsupportedNetwork(String),
    #[error("not a bridge pair: {0}")]
    NotABridgePair(String),
    #[error(transparent)]
    Exponent(#[from] ExponentError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Bulk,
    Surface,
    SurfaceSpecial,
    SurfaceMixed,
    Bridge,
}

impl VertexKind {
    pub const ALL: [VertexKind; 5] = [
        VertexKind::Bulk,
        VertexKind::Surface,
        VertexKind::SurfaceSpecial,
        VertexKind::SurfaceMixed,
        VertexKind::Bridge,
    ];

    /// Vertices pinned to the real surface (any boundary condition).
    pub fn is_surface(self) -> bool {
        matches!(self, VertexKind::Surface | VertexKind::SurfaceSpecial | VertexKind::SurfaceMixed)
    }

    pub fn surface(bc: BoundaryCondition) -> Self {
        match bc {
            BoundaryCondition::Ordinary => VertexKind::Surface,
            BoundaryCondition::Special => VertexKind::SurfaceSpecial,
            BoundaryCondition::MixedOrdinarySpecial => VertexKind::SurfaceMixed,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            VertexKind::Bulk => "bulk",
            VertexKind::Surface => "surface",
            VertexKind::SurfaceSpecial => "surface_special",
            VertexKind::SurfaceMixed => "surface_mixed",
            VertexKind::Bridge => "bridge",
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for VertexKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        VertexKind::ALL
            .into_iter()
            .find(|k| k.keyword() == s)
            .ok_or_else(|| format!("unknown vertex kind {s:?}"))
    }
}

pub(crate) fn valid_id(id: &str) -> bool {
    !id.is_empty() && id.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// A validated, connected multigraph. Chains are unordered vertex pairs;
/// a self-pair adds 2 to the degree of its vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkTopology {
    ids: Vec<String>,
    kinds: Vec<VertexKind>,
    chains: Vec<(usize, usize)>,
}

impl NetworkTopology {
    pub fn builder() -> NetworkBuilder {
        NetworkBuilder::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn chain_count(&self) -> usize {
        self.chains.len()
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|x| x == id)
    }

    pub fn chains(&self) -> &[(usize, usize)] {
        &self.chains
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&str, VertexKind)> + '_ {
        self.ids.iter().map(String::as_str).zip(self.kinds.iter().copied())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.ids.len()];
        for &(a, b) in &self.chains {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees()[v]
    }

    pub fn is_surface_network(&self) -> bool {
        self.kinds.iter().any(|k| k.is_surface())
    }

    /// Same topology with vertex `v` given a new kind.
    pub fn with_kind(&self, v: usize, kind: VertexKind) -> Self {
        let mut out = self.clone();
        out.kinds[v] = kind;
        out
    }

    /// Replaces plain `surface` vertices by the kind for `bc`; explicit
    /// special and mixed vertices are left alone.
    pub fn with_surface_bc(&self, bc: BoundaryCondition) -> Self {
        let mut out = self.clone();
        for k in out.kinds.iter_mut() {
            if *k == VertexKind::Surface {
                *k = VertexKind::surface(bc);
            }
        }
        out
    }

    /// Chains as sorted id pairs with multiplicity, independent of the
    /// declaration order.
    pub fn chain_multiset(&self) -> BTreeMap<(String, String), usize> {
        let mut out = BTreeMap::new();
        for &(a, b) in &self.chains {
            let (x, y) = (self.ids[a].clone(), self.ids[b].clone());
            let key = if x <= y { (x, y) } else { (y, x) };
            *out.entry(key).or_insert(0) += 1;
        }
        out
    }

    /// Serializes in the network file format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (id, kind) in self.vertices() {
            s.push_str(&format!("vertex {id} {kind}\n"));
        }
        for &(a, b) in &self.chains {
            s.push_str(&format!("chain {} {}\n", self.ids[a], self.ids[b]));
        }
        s
    }
}

impl fmt::Display for NetworkTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for NetworkTopology {
    type Err = NetworkError;
    fn from_str(s: &str) -> Result<Self, NetworkError> {
        parse_network(s)
    }
}

#[derive(Clone, Debug)]
pub struct NetworkBuilder {
    ids: Vec<String>,
    kinds: Vec<VertexKind>,
    index: HashMap<String, usize>,
    chains: Vec<(usize, usize)>,
    degree_cap: usize,
}

impl Default for NetworkBuilder {
    fn default() -> Self {
        NetworkBuilder {
            ids: Vec::new(),
            kinds: Vec::new(),
            index: HashMap::new(),
            chains: Vec::new(),
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

impl NetworkBuilder {
    pub fn degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn vertex(&mut self, id: impl Into<String>, kind: VertexKind) -> Result<usize, NetworkError> {
        let id = id.into();
        if self.index.contains_key(&id) {
            return Err(NetworkError::DuplicateVertex(id));
        }
        let v = self.ids.len();
        self.index.insert(id.clone(), v);
        self.ids.push(id);
        self.kinds.push(kind);
        Ok(v)
    }

    pub fn lookup(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Adds a chain between two already declared vertex indices.
    pub fn chain(&mut self, a: usize, b: usize) -> &mut Self {
        assert!(a < self.ids.len() && b < self.ids.len(), "chain endpoint out of range");
        self.chains.push((a, b));
        self
    }

    pub fn build(self) -> Result<NetworkTopology, NetworkError> {
        let net = NetworkTopology { ids: self.ids, kinds: self.kinds, chains: self.chains };
        validate(&net, self.degree_cap)?;
        Ok(net)
    }
}

fn validate(net: &NetworkTopology, cap: usize) -> Result<(), NetworkError> {
    let n = net.vertex_count();
    if n == 0 {
        return Err(NetworkError::EmptyNetwork);
    }
    let deg = net.degrees();
    for (v, &d) in deg.iter().enumerate() {
        if d == 0 {
            return Err(NetworkError::IsolatedVertex(net.ids[v].clone()));
        }
        if d > cap {
            return Err(NetworkError::DegreeCap { id: net.ids[v].clone(), degree: d, cap });
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for &(a, b) in &net.chains {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    if components != 1 {
        return Err(NetworkError::DisconnectedNetwork);
    }
    Ok(())
}
