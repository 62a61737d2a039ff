//! Seeded random networks for property tests and the verify suite.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{NetworkTopology, VertexKind};

#[derive(Clone, Debug)]
pub struct RandomNetworkConfig {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Chains added on top of a spanning tree (loops, parallels, self-pairs).
    pub max_extra_chains: usize,
    /// Kinds drawn uniformly for every vertex but the anchor.
    pub kinds: Vec<VertexKind>,
    /// Kind of vertex 0; `Some` makes the result a surface network.
    pub anchor: Option<VertexKind>,
    pub degree_cap: usize,
}

impl RandomNetworkConfig {
    pub fn bulk() -> Self {
        RandomNetworkConfig {
            min_vertices: 1,
            max_vertices: 8,
            max_extra_chains: 4,
            kinds: vec![VertexKind::Bulk],
            anchor: None,
            degree_cap: super::DEFAULT_DEGREE_CAP,
        }
    }

    /// Surface networks whose non-anchor vertices are bulk or `surface_kinds`.
    pub fn surface(surface_kinds: &[VertexKind]) -> Self {
        let mut kinds = vec![VertexKind::Bulk, VertexKind::Bulk];
        kinds.extend_from_slice(surface_kinds);
        RandomNetworkConfig {
            kinds,
            anchor: Some(surface_kinds[0]),
            ..Self::bulk()
        }
    }
}

pub fn random_network<R: Rng>(rng: &mut R, config: &RandomNetworkConfig) -> NetworkTopology {
    loop {
        if let Some(net) = attempt(rng, config) {
            return net;
        }
    }
}

pub fn random_network_seeded(seed: u64, config: &RandomNetworkConfig) -> NetworkTopology {
    random_network(&mut ChaCha8Rng::seed_from_u64(seed), config)
}

fn attempt<R: Rng>(rng: &mut R, config: &RandomNetworkConfig) -> Option<NetworkTopology> {
    let n = rng.gen_range(config.min_vertices.max(1)..=config.max_vertices.max(1));
    let mut builder = NetworkTopology::builder().degree_cap(config.degree_cap);
    for v in 0..n {
        let kind = match (v, config.anchor) {
            (0, Some(k)) => k,
            _ => *config.kinds.choose(rng).expect("non-empty kind palette"),
        };
        builder.vertex(format!("v{v}"), kind).ok()?;
    }
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        builder.chain(parent, v);
    }
    let extra = rng.gen_range(0..=config.max_extra_chains);
    let extra = if n == 1 { extra.max(1) } else { extra };
    for _ in 0..extra {
        builder.chain(rng.gen_range(0..n), rng.gen_range(0..n));
    }
    builder.build().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::census;

    #[test]
    fn seeded_generation_is_reproducible() {
        let config = RandomNetworkConfig::surface(&[VertexKind::Surface, VertexKind::SurfaceSpecial]);
        for seed in 0..50 {
            let a = random_network_seeded(seed, &config);
            assert_eq!(a, random_network_seeded(seed, &config));
            assert!(a.is_surface_network());
            census(&a);
        }
    }

    #[test]
    fn bulk_config_has_no_surface_vertices() {
        for seed in 0..50 {
            assert!(!random_network_seeded(seed, &RandomNetworkConfig::bulk()).is_surface_network());
        }
    }
}
