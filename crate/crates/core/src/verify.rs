//! Named exact-identity suites. Every check compares two exact values; a
//! failed comparison or an unexpected error is recorded, never panicked on.

use std::fmt::Display;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::network::random::{random_network_seeded, RandomNetworkConfig};
use crate::network::{
    brownian_reduction_check, bridge_shift_check, catalog, gamma_exponent_with, Dispersity, NetworkTopology, VertexKind,
};
use crate::scalar::{fmt_rational, int, rat, ExactScalar, Rational};
use crate::series::{EpsilonOrder, EpsilonSeries, Exponent};
use crate::sle::{
    delta_lj, kpz_standard, kpz_u, kpz_v, mixed_x, modified_kpz, special_quantum_dim, special_x_kac, welding_consistency,
    x_bulk_lj, x_l_rho, x_surface_lj, Kappa,
};
use crate::tables::{
    hausdorff_dimensions, nu, x_bulk, x_surface, BoundaryCondition, DimensionSetting, UniversalityClass,
};

use BoundaryCondition::{MixedOrdinarySpecial as Mixed, Ordinary, Special};
use UniversalityClass::{Brownian, MutuallyAvoiding, Saw, Theta};

type Value = Result<Exponent, String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!("{status} {:<22} {} checks, {} failed", self.name, self.checks, self.failures.len())
    }
}

pub struct Suite {
    pub name: &'static str,
    /// Acceptance criterion this suite belongs to.
    pub criterion: u8,
    pub summary: &'static str,
    run: fn(&mut Recorder),
}

impl Suite {
    pub fn run(&self) -> SuiteReport {
        let mut r = Recorder::default();
        (self.run)(&mut r);
        SuiteReport { name: self.name, checks: r.checks, failures: r.failures }
    }
}

pub const SUITES: &[Suite] = &[
    Suite { name: "golden-gamma", criterion: 1, summary: "exact configuration exponents of SAW and Theta networks", run: golden_gamma },
    Suite { name: "barber", criterion: 2, summary: "2 gamma_1 - gamma_11 = gamma + nu", run: barber },
    Suite { name: "bridge-relations", criterion: 2, summary: "gamma_b = gamma_11 + nu and its special/mixed versions", run: bridge_relations },
    Suite { name: "dimension-identities", criterion: 2, summary: "x_2 = d - 1/nu and x_2^S = d", run: dimension_identities },
    Suite { name: "brownian-reductions", criterion: 2, summary: "Brownian gamma from loop counts on random networks", run: brownian_reductions },
    Suite { name: "multi-bridge", criterion: 2, summary: "k bridge vertices shift gamma by k nu", run: multi_bridge },
    Suite { name: "kpz-families", criterion: 3, summary: "kappa = 8/3 and kappa = 6 exponent families, L <= 50", run: kpz_families },
    Suite { name: "duality", criterion: 3, summary: "boundary and frontier duality kappa' <-> 16/kappa'", run: duality },
    Suite { name: "percolation-brownian", criterion: 3, summary: "path-crossing, Brownian intersection and surface anomaly", run: percolation_brownian },
    Suite { name: "welding", criterion: 3, summary: "wedge and cone welding for kappa in {5, 6, 8}, L <= 10", run: welding },
    Suite { name: "modified-kpz", criterion: 3, summary: "mixed exponents as images of the modified KPZ map", run: modified_kpz_suite },
    Suite { name: "special-triple", criterion: 3, summary: "special exponents: closed form = Kac form = SLE(rho) = KPZ", run: special_triple },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn run_all() -> Vec<SuiteReport> {
    SUITES.iter().map(Suite::run).collect()
}

pub fn run_criterion(criterion: u8) -> Vec<SuiteReport> {
    SUITES.iter().filter(|s| s.criterion == criterion).map(Suite::run).collect()
}

#[derive(Default)]
struct Recorder {
    checks: usize,
    failures: Vec<String>,
}

impl Recorder {
    fn eq(&mut self, label: impl Display, lhs: Value, rhs: Value) {
        self.checks += 1;
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => self.failures.push(format!("{label}: {a} != {b}")),
            (Err(e), _) | (_, Err(e)) => self.failures.push(format!("{label}: {e}")),
        }
    }

    fn all_eq(&mut self, label: impl Display, values: Vec<Value>) {
        let label = label.to_string();
        for (i, v) in values.iter().enumerate().skip(1) {
            self.eq(format!("{label} [0 vs {i}]"), values[0].clone(), v.clone());
        }
    }

    fn holds(&mut self, label: impl Display, ok: Result<bool, String>) {
        self.checks += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.failures.push(format!("{label}: does not hold")),
            Err(e) => self.failures.push(format!("{label}: {e}")),
        }
    }
}

fn q(v: Rational) -> Value {
    Ok(Exponent::rational(v))
}

fn lift<T: Into<Exponent>, E: Display>(r: Result<T, E>) -> Value {
    r.map(Into::into).map_err(|e| e.to_string())
}

fn sc(v: &Rational) -> ExactScalar {
    ExactScalar::from_rational(v.clone())
}

fn gamma_of(net: &NetworkTopology, class: UniversalityClass, setting: &DimensionSetting, dispersity: Dispersity) -> Value {
    lift(gamma_exponent_with(net, class, setting, dispersity))
}

fn gamma(net: &NetworkTopology, class: UniversalityClass, setting: &DimensionSetting) -> Value {
    gamma_of(net, class, setting, Dispersity::Monodisperse)
}

fn add(a: &Value, b: &Value) -> Value {
    Ok(a.as_ref().map_err(Clone::clone)? + b.as_ref().map_err(Clone::clone)?)
}

fn sub(a: &Value, b: &Value) -> Value {
    Ok(a.as_ref().map_err(Clone::clone)? - b.as_ref().map_err(Clone::clone)?)
}

fn scale(a: &Value, k: Rational) -> Value {
    Ok(a.as_ref().map_err(Clone::clone)?.scale(&k))
}

fn recip(a: &Value) -> Value {
    match a.as_ref().map_err(Clone::clone)? {
        Exponent::Exact(v) => v.recip().map(Exponent::Exact).map_err(|e| e.to_string()),
        Exponent::Series(s) => s.recip().map(Exponent::Series).ok_or_else(|| "series has no inverse".into()),
    }
}

const D2: DimensionSetting = DimensionSetting::Exact2D;

fn general(d: Rational) -> DimensionSetting {
    DimensionSetting::GeneralD(d)
}

fn polygon(kind: VertexKind) -> NetworkTopology {
    let mut b = NetworkTopology::builder();
    let s = b.vertex("s", kind).expect("fresh id");
    b.chain(s, s);
    b.build().expect("valid polygon")
}

fn golden_gamma(r: &mut Recorder) {
    let mono = Dispersity::Monodisperse;
    let free = Dispersity::FixedTotalLength;
    let table: Vec<(&str, NetworkTopology, UniversalityClass, Dispersity, Rational)> = vec![
        ("saw gamma", catalog::chain(), Saw, mono, rat(43, 32)),
        ("saw gamma_b", catalog::bridge(Ordinary), Saw, mono, rat(9, 16)),
        ("saw gamma_b(o.s)", catalog::bridge(Mixed), Saw, mono, rat(15, 16)),
        ("saw gamma_b(sp)", catalog::bridge(Special), Saw, mono, rat(17, 16)),
        ("saw gamma_p(sp)", polygon(VertexKind::SurfaceSpecial), Saw, mono, rat(-1, 4)),
        ("saw gamma_p(o.s)", polygon(VertexKind::SurfaceMixed), Saw, mono, rat(-3, 4)),
        ("theta gamma", catalog::chain(), Theta, mono, rat(8, 7)),
        ("theta gamma_1", catalog::taw(Ordinary), Theta, mono, rat(4, 7)),
        ("theta gamma_11", catalog::arch(Ordinary), Theta, mono, rat(-4, 7)),
        ("theta gamma_1(sp)", catalog::taw(Special), Theta, mono, rat(8, 7)),
        ("theta gamma_11(sp)", catalog::arch(Special), Theta, mono, rat(4, 7)),
        ("theta gamma_b", catalog::bridge(Ordinary), Theta, mono, int(0)),
        ("theta gamma_b(sp)", catalog::bridge(Special), Theta, mono, rat(4, 7)),
        ("theta gamma_1(o.s)", catalog::taw(Mixed), Theta, mono, rat(20, 21)),
        ("theta gamma_b(o.s)", catalog::bridge(Mixed), Theta, mono, rat(8, 21)),
    ];
    for (label, net, class, dispersity, expected) in table {
        r.eq(label, gamma_of(&net, class, &D2, dispersity), q(expected));
    }
    for l in 1..=9i64 {
        let star = catalog::star(l as usize);
        r.eq(format!("saw star L={l}"), sub(&gamma(&star, Saw, &D2), &q(int(1))), q(rat(4 + 9 * l * (3 - l), 64)));
    }
    for l in 1..=10i64 {
        let lb = |bc, class| gamma_of(&catalog::l_bridge_star(l as usize, bc), class, &D2, free);
        r.eq(format!("saw L-bridge(or) L={l}"), lb(Ordinary, Saw), q(rat(9 * l * (3 - l), 32)));
        r.eq(format!("saw L-bridge(o.s) L={l}"), lb(Mixed, Saw), q(rat(3 * l * (13 - 3 * l), 32)));
        r.eq(format!("saw L-bridge(sp) L={l}"), lb(Special, Saw), q(rat(51 * l - 9 * l * l - 8, 32)));
        r.eq(format!("theta L-bridge(sp) L={l}"), lb(Special, Theta), q(rat(2 * l * (7 - l), 21)));
        r.eq(format!("theta L-bridge(o.s) L={l}"), lb(Mixed, Theta), q(rat(2 * l * (5 - l), 21)));
        r.eq(format!("theta L-bridge(or) L={l}"), lb(Ordinary, Theta), q(rat(2 * (3 * l - l * l - 2), 21)));
        // monodisperse stars carry the extra -(L-1) of L equal arms
        let mono_or = gamma(&catalog::l_bridge_star(l as usize, Ordinary), Saw, &D2);
        r.eq(format!("saw L-bridge(or) monodisperse L={l}"), mono_or, q(rat(9 * l * (3 - l), 32) - int(l - 1)));
    }
}

fn brownian_dims() -> Vec<Rational> {
    vec![int(1), rat(3, 2), int(3), rat(7, 2), int(5)]
}

/// Settings in which the ordinary relations are checked.
fn ordinary_settings() -> Vec<(UniversalityClass, DimensionSetting)> {
    let mut out = vec![
        (Saw, D2),
        (Theta, D2),
        (Brownian, D2),
        (Saw, DimensionSetting::Epsilon(EpsilonOrder::First)),
        (Saw, general(int(4))),
        (Saw, general(int(6))),
    ];
    out.extend(brownian_dims().into_iter().map(|d| (Brownian, general(d))));
    out
}

fn barber(r: &mut Recorder) {
    let mut combos: Vec<(UniversalityClass, BoundaryCondition, DimensionSetting)> =
        ordinary_settings().into_iter().map(|(c, s)| (c, Ordinary, s)).collect();
    for class in [Saw, Theta] {
        combos.push((class, Special, D2));
        combos.push((class, Mixed, D2));
    }
    for (class, bc, setting) in combos {
        let g1 = gamma(&catalog::taw(bc), class, &setting);
        let g11 = gamma(&catalog::arch(bc), class, &setting);
        let lhs = sub(&scale(&g1, int(2)), &g11);
        let rhs = add(&gamma(&catalog::chain(), class, &setting), &lift(nu(class, &setting)));
        r.eq(format!("barber {class} {bc} {setting}"), lhs, rhs);
    }
}

fn bridge_relations(r: &mut Recorder) {
    for (class, setting) in ordinary_settings() {
        let nu = lift(nu(class, &setting));
        let gb = gamma(&catalog::bridge(Ordinary), class, &setting);
        let g11 = gamma(&catalog::arch(Ordinary), class, &setting);
        r.eq(format!("gamma_b = gamma_11 + nu {class} {setting}"), gb, add(&g11, &nu));
    }
    for class in [Saw, Theta] {
        let nu = lift(nu(class, &D2));
        let g11 = gamma(&catalog::arch(Ordinary), class, &D2);
        for bc in [Special, Mixed] {
            let gb = gamma(&catalog::bridge(bc), class, &D2);
            let g11_bc = gamma(&catalog::arch(bc), class, &D2);
            let average = scale(&add(&g11_bc, &g11), rat(1, 2));
            r.eq(format!("gamma_b({bc}) average relation {class}"), gb, add(&average, &nu));
        }
        let gb_sp = gamma(&catalog::bridge(Special), class, &D2);
        let g11_mixed_ends = gamma(&catalog::arch_special_ordinary(), class, &D2);
        r.eq(format!("gamma_b(sp) via special/ordinary arch {class}"), gb_sp, add(&g11_mixed_ends, &nu));
    }
}

fn dimension_identities(r: &mut Recorder) {
    let mut bulk: Vec<(UniversalityClass, DimensionSetting)> = vec![
        (Saw, D2),
        (Theta, D2),
        (Brownian, D2),
        (Saw, DimensionSetting::Epsilon(EpsilonOrder::First)),
        (Saw, DimensionSetting::Epsilon(EpsilonOrder::Second)),
        (Brownian, DimensionSetting::Epsilon(EpsilonOrder::Second)),
        (Saw, general(int(4))),
        (Saw, general(int(5))),
    ];
    bulk.extend(brownian_dims().into_iter().map(|d| (Brownian, general(d))));
    for (class, setting) in &bulk {
        let d = lift(setting.dimension());
        let inv_nu = recip(&lift(nu(*class, setting)));
        r.eq(format!("x_2 = d - 1/nu {class} {setting}"), lift(x_bulk(2, *class, setting)), sub(&d, &inv_nu));
    }
    let mut surface: Vec<(UniversalityClass, DimensionSetting)> = vec![
        (Saw, D2),
        (Theta, D2),
        (Brownian, D2),
        (Saw, DimensionSetting::Epsilon(EpsilonOrder::First)),
        (Brownian, DimensionSetting::Epsilon(EpsilonOrder::Second)),
        (Saw, general(int(4))),
    ];
    surface.extend(brownian_dims().into_iter().map(|d| (Brownian, general(d))));
    for (class, setting) in &surface {
        r.eq(
            format!("x_2^S = d {class} {setting}"),
            lift(x_surface(2, *class, Ordinary, setting)),
            lift(setting.dimension()),
        );
    }
    match hausdorff_dimensions(Saw) {
        Ok(h) => {
            r.eq("saw D = 4/3", Ok(h.bulk.clone().into()), q(rat(4, 3)));
            r.eq("saw D_ads = D/2", lift::<ExactScalar, String>(h.crossover().ok_or("missing".into())), q(rat(1, 2)));
        }
        Err(e) => r.holds("saw Hausdorff dimensions", Err(e.to_string())),
    }
}

const RANDOM_NETWORKS: u64 = 1000;

fn brownian_reductions(r: &mut Recorder) {
    let bulk = RandomNetworkConfig::bulk();
    let surface = RandomNetworkConfig::surface(&[VertexKind::Surface]);
    for (i, d) in brownian_dims().into_iter().enumerate() {
        for seed in 0..RANDOM_NETWORKS {
            let config = if seed % 2 == 0 { &bulk } else { &surface };
            let net = random_network_seeded(seed + 7919 * i as u64, config);
            let label = format!("brownian reduction d={} seed={seed}", fmt_rational(&d));
            match brownian_reduction_check(&net, d.clone()) {
                Ok(res) => r.eq(label, q(res.gamma_full), q(res.gamma_reduced)),
                Err(e) => r.holds(label, Err(e.to_string())),
            }
        }
    }
}

fn multi_bridge(r: &mut Recorder) {
    let shift_settings = [(Saw, D2), (Theta, D2), (Brownian, general(int(3)))];
    let mut pairs: Vec<(String, NetworkTopology, NetworkTopology)> =
        vec![("eight-chain pair".into(), catalog::eight_chain_bridge(), catalog::eight_chain_surface())];
    for l in 1..=10usize {
        let b = catalog::l_bridge_star(l, Ordinary);
        let mut s = b.clone();
        for v in 1..=l {
            s = s.with_kind(v, VertexKind::Surface);
        }
        pairs.push((format!("L-bridge star L={l}"), b, s));
    }
    let config = RandomNetworkConfig {
        min_vertices: 2,
        ..RandomNetworkConfig::surface(&[VertexKind::Surface, VertexKind::Surface])
    };
    let mut seed = 0u64;
    let mut random_pairs = 0;
    while random_pairs < RANDOM_NETWORKS {
        let net = random_network_seeded(seed, &config);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        seed += 1;
        // vertex 0 stays on the surface
        let mut candidates: Vec<usize> =
            (1..net.vertex_count()).filter(|&v| net.kind(v) == VertexKind::Surface).collect();
        if candidates.is_empty() {
            continue;
        }
        candidates.shuffle(&mut rng);
        let k = rng.gen_range(1..=candidates.len());
        let bridged = candidates[..k].iter().fold(net.clone(), |acc, &v| acc.with_kind(v, VertexKind::Bridge));
        pairs.push((format!("random seed={} k={k}", seed - 1), bridged, net));
        random_pairs += 1;
    }
    for (label, b, s) in &pairs {
        for (class, setting) in &shift_settings {
            let label = format!("{label} {class} {setting}");
            match bridge_shift_check(b, s, *class, setting) {
                Ok(res) => r.eq(label, Ok(res.difference), Ok(res.expected_nu)),
                Err(e) => r.holds(label, Err(e.to_string())),
            }
        }
    }
}

fn kappa(p: i64, qq: i64) -> Kappa {
    Kappa::ratio(p, qq)
}

fn exact(v: ExactScalar) -> Value {
    Ok(v.into())
}

const FAMILY_L_MAX: i64 = 50;

fn kpz_families(r: &mut Recorder) {
    let k83 = kappa(8, 3);
    let k6 = kappa(6, 1);
    let m = rat(-4, 3);
    let zero = int(0);
    for l in 1..=FAMILY_L_MAX {
        let lu = l as u32;
        let ls = l as usize;
        let delta = sc(&rat(3 * l, 4));
        r.all_eq(
            format!("kappa=8/3 bulk L={l}"),
            vec![
                lift(x_bulk_lj(&k83, lu, 0)),
                q(rat((3 * l - 2) * (3 * l + 2), 48)),
                lift(x_bulk(ls, Saw, &D2)),
                exact(kpz_v(&k83, &delta_lj(&k83, lu, 0).value).scale(&int(2))),
            ],
        );
        r.all_eq(
            format!("kappa=8/3 ordinary L={l}"),
            vec![
                lift(x_surface_lj(&k83, lu, 0)),
                lift(x_l_rho(&k83, lu, &zero, &zero)),
                q(rat(l * (3 * l + 2), 8)),
                lift(x_surface(ls, Saw, Ordinary, &D2)),
                exact(kpz_u(&k83, &delta)),
            ],
        );
        r.all_eq(
            format!("kappa=8/3 mixed L={l}"),
            vec![
                lift(x_l_rho(&k83, lu, &m, &zero)),
                q(rat(l * (3 * l - 2), 8)),
                lift(x_surface(ls, Saw, Mixed, &D2)),
                lift(mixed_x(&k83, lu)),
            ],
        );
        r.all_eq(
            format!("kappa=8/3 special L={l}"),
            vec![
                lift(x_l_rho(&k83, lu, &m, &m)),
                q(rat((3 * l - 4) * (3 * l - 2), 24)),
                lift(x_surface(ls, Saw, Special, &D2)),
            ],
        );
        for j in 0..=lu + 1 {
            let ji = j as i64;
            r.all_eq(
                format!("kappa=6 surface L={l} j={j}"),
                vec![
                    lift(x_surface_lj(&k6, lu, j)),
                    q(rat((l + ji) * (l + ji - 1), 6)),
                    exact(kpz_u(&k6, &delta_lj(&k6, lu, j).value)),
                ],
            );
            if j <= lu {
                r.all_eq(
                    format!("kappa=6 bulk L={l} j={j}"),
                    vec![
                        lift(x_bulk_lj(&k6, lu, j)),
                        q(rat((l + ji + 1) * (l + ji - 1), 12)),
                        exact(kpz_v(&k6, &delta_lj(&k6, lu, j).value).scale(&int(2))),
                    ],
                );
            }
        }
        r.eq(format!("theta bulk L={l}"), lift(x_bulk(ls, Theta, &D2)), lift(x_bulk_lj(&k6, lu, 0)));
        for (bc, j) in [(Special, 0), (Mixed, 1), (Ordinary, 2)] {
            r.eq(format!("theta {bc} L={l}"), lift(x_surface(ls, Theta, bc, &D2)), lift(x_surface_lj(&k6, lu, j)));
        }
        r.eq(
            format!("theta shift o.s(L) = sp(L+1) L={l}"),
            lift(x_surface(ls, Theta, Mixed, &D2)),
            lift(x_surface(ls + 1, Theta, Special, &D2)),
        );
        r.eq(
            format!("theta shift or(L) = sp(L+2) L={l}"),
            lift(x_surface(ls, Theta, Ordinary, &D2)),
            lift(x_surface(ls + 2, Theta, Special, &D2)),
        );
    }
}

fn duality(r: &mut Recorder) {
    for kp in [5, 6, 8, 12] {
        let k_prime = kappa(kp, 1);
        let k = k_prime.dual();
        r.eq(format!("dual of {kp} is 16/{kp}"), q(k.value().clone()), q(rat(16, kp)));
        r.all_eq(
            format!("boundary duality kappa'={kp}"),
            vec![
                lift(x_surface_lj(&k_prime, 2, 2)),
                q(rat(kp - 2, 2)),
                q((int(8) - k.value()) / k.value()),
                lift(x_surface_lj(&k, 2, 0)),
            ],
        );
        let dim = |k: &Kappa| sub(&q(int(2)), &lift(x_bulk_lj(k, 2, 0)));
        r.eq(format!("path dimension kappa'={kp}"), dim(&k_prime), q(int(1) + rat(kp, 8)));
        r.eq(format!("frontier dimension kappa'={kp}"), dim(&k), q(int(1) + rat(2, kp)));
    }
}

fn percolation_brownian(r: &mut Recorder) {
    let k6 = kappa(6, 1);
    let k83 = kappa(8, 3);
    for l in 1..=FAMILY_L_MAX {
        let lu = l as u32;
        let ls = l as usize;
        r.eq(format!("bulk path-crossing L={l}"), lift(x_bulk_lj(&k6, lu, 0)), q(rat(l * l - 1, 12)));
        r.eq(format!("surface path-crossing L={l}"), lift(x_surface_lj(&k6, lu, 1)), q(rat(l * (l + 1), 6)));
        r.all_eq(
            format!("bulk Brownian intersection L={l}"),
            vec![
                lift(x_bulk_lj(&k6, lu, lu)),
                q(rat(4 * l * l - 1, 12)),
                lift(x_bulk(ls, MutuallyAvoiding, &D2)),
                exact(kpz_v(&k83, &sc(&int(l))).scale(&int(2))),
            ],
        );
        r.all_eq(
            format!("surface Brownian intersection L={l}"),
            vec![
                lift(x_surface_lj(&k6, lu, lu + 1)),
                q(rat(l * (2 * l + 1), 3)),
                lift(x_surface(ls, MutuallyAvoiding, Ordinary, &D2)),
                exact(kpz_u(&k83, &sc(&int(l)))),
            ],
        );
        let eps = DimensionSetting::Epsilon(EpsilonOrder::First);
        let anomaly = sub(&lift(x_surface(ls, Saw, Ordinary, &eps)), &lift(x_surface(ls, Brownian, Ordinary, &eps)));
        let expected = EpsilonSeries::new(vec![int(0), rat(l * (l - 2), 8)]).expect("first order");
        r.eq(format!("surface anomaly L={l}"), anomaly, Ok(expected.into()));
    }
}

fn welding(r: &mut Recorder) {
    for kp in [5, 6, 8] {
        let k = kappa(kp, 1);
        for l in 1..=10u32 {
            for j in 0..=l + 1 {
                r.holds(
                    format!("welding kappa={kp} L={l} j={j}"),
                    welding_consistency(&k, l, j).map_err(|e| e.to_string()),
                );
            }
        }
    }
}

fn dilute_kappas() -> Vec<Kappa> {
    [(2, 1), (5, 2), (8, 3), (3, 1), (16, 5), (7, 2), (4, 1)].iter().map(|&(p, qq)| kappa(p, qq)).collect()
}

fn modified_kpz_suite(r: &mut Recorder) {
    for k in dilute_kappas() {
        let kv = k.value().clone();
        for l in 1..=20i64 {
            let lu = l as u32;
            let delta = sc(&(int(2 * l) / &kv));
            let ordinary = lift(x_surface_lj(&k, lu, 0));
            r.eq(format!("ordinary = U_gamma(2L/kappa) kappa={k} L={l}"), ordinary.clone(), exact(kpz_standard(&kv, &delta)));
            r.all_eq(
                format!("mixed kappa={k} L={l}"),
                vec![
                    lift(mixed_x(&k, lu)),
                    sub(&ordinary, &q(rat(l, 2))),
                    exact(modified_kpz(&kv, &delta)),
                    q(int(l) * (int(l) + int(2) - &kv) / &kv),
                ],
            );
            if kv == rat(8, 3) {
                r.eq(format!("mixed = SLE(-kappa/2, 0) kappa=8/3 L={l}"), lift(mixed_x(&k, lu)), lift(x_l_rho(&k, lu, &rat(-4, 3), &int(0))));
            } else {
                let rho = -&kv / int(2);
                let differ = match (mixed_x(&k, lu), x_l_rho(&k, lu, &rho, &int(0))) {
                    (Ok(a), Ok(b)) => Ok(a != b),
                    (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
                };
                r.holds(format!("mixed != SLE(-kappa/2, 0) kappa={k} L={l}"), differ);
            }
        }
    }
}

fn special_triple(r: &mut Recorder) {
    for k in dilute_kappas() {
        let kv = k.value().clone();
        for l in 1..=20i64 {
            let lu = l as u32;
            let rho = -&kv / int(2);
            let l2 = int(2 * l);
            let closed = (&l2 - &kv) * (&l2 + int(4) - int(2) * &kv) / (int(4) * &kv);
            let via_kpz = special_quantum_dim(&k, lu).map(|d| kpz_u(&k, &d.value));
            r.all_eq(
                format!("special kappa={k} L={l}"),
                vec![q(closed), lift(special_x_kac(&k, lu)), lift(x_l_rho(&k, lu, &rho, &rho)), lift(via_kpz)],
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_are_unique() {
        let mut names = suite_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
    }

    #[test]
    fn every_suite_passes() {
        for report in run_all() {
            assert!(report.passed(), "{}: {:?}", report.name, &report.failures[..report.failures.len().min(5)]);
        }
    }

    #[test]
    fn recorder_reports_mismatch_and_errors() {
        let mut r = Recorder::default();
        r.eq("same", q(int(1)), q(int(1)));
        r.eq("different", q(int(1)), q(int(2)));
        r.eq("error", Err("boom".into()), q(int(2)));
        r.holds("false", Ok(false));
        assert_eq!(r.checks, 4);
        assert_eq!(r.failures, ["different: 1 != 2", "error: boom", "false: does not hold"]);
    }
}
