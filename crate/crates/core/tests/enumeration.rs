use polynet::enumeration::{
    enumerate, enumerate_with, oracle_enumerate, read_csv, Ensemble, EnsembleKind, Execution, Lattice, PolygonWeighting,
    ORACLE_MAX_N,
};
use polynet::scalar::int;
use polynet::ExactScalar;

const LATTICES: [Lattice; 2] = [Lattice::Square, Lattice::Hexagonal];

#[test]
fn engine_matches_oracle() {
    for lattice in LATTICES {
        for kind in EnsembleKind::ALL {
            let e = Ensemble::new(kind);
            let fast = enumerate(lattice, &e, ORACLE_MAX_N, 2).unwrap();
            let slow = oracle_enumerate(lattice, &e, ORACLE_MAX_N).unwrap();
            for n in 1..=ORACLE_MAX_N {
                assert_eq!(fast.histogram(n), slow.histogram(n), "{lattice} {kind} N={n}");
                assert_eq!(fast.r2_sum(n), slow.r2_sum(n), "{lattice} {kind} N={n}");
            }
        }
    }
}

#[test]
fn thread_count_does_not_change_results() {
    for lattice in LATTICES {
        for kind in EnsembleKind::ALL {
            let e = Ensemble::new(kind);
            let reference = enumerate_with(lattice, &e, 12, Execution::Sequential).unwrap();
            for threads in [1, 4, 8] {
                assert_eq!(enumerate(lattice, &e, 12, threads).unwrap(), reference, "{lattice} {kind} threads={threads}");
            }
        }
    }
}

#[test]
fn square_half_space_series() {
    let counts = |kind| {
        let c = enumerate(Lattice::Square, &Ensemble::new(kind), 6, 1).unwrap();
        (1..=6).map(|n| c.raw_count(n)).collect::<Vec<_>>()
    };
    assert_eq!(counts(EnsembleKind::Taw), [3, 7, 19, 49, 131, 339]);
    assert_eq!(counts(EnsembleKind::Bridge), [1, 3, 7, 17, 41, 101]);
}

#[test]
fn fugacity_is_applied_to_contacts() {
    let a = ExactScalar::radical(int(1), int(1), 2);
    let e = Ensemble::new(EnsembleKind::Polygon).with_fugacity(a.clone()).unwrap();
    let c = enumerate(Lattice::Hexagonal, &e, 6, 1).unwrap();
    assert_eq!(c.count(6), a);
    let e = e.with_weighting(PolygonWeighting::ContactCount);
    let c = enumerate(Lattice::Hexagonal, &e, 6, 1).unwrap();
    assert_eq!(c.count(6), a);
    let sq = enumerate(Lattice::Square, &e, 4, 1).unwrap();
    assert_eq!(sq.count(4), a.square().scale(&int(2)));
}

#[test]
fn negative_fugacity_is_rejected() {
    assert!(Ensemble::new(EnsembleKind::Taw).with_fugacity(ExactScalar::integer(-1)).is_err());
}

#[test]
fn csv_round_trip() {
    let c = enumerate(Lattice::Hexagonal, &Ensemble::new(EnsembleKind::Free), 8, 1).unwrap();
    let text = c.to_csv(true, &[]);
    assert!(text.starts_with("# lattice: hexagonal"));
    let parsed = read_csv(&text).unwrap();
    let mean = c.mean_r2_f64().unwrap();
    for ((n, count, r2), (m, r2_mean)) in parsed.rows.iter().zip(&mean) {
        assert_eq!(n, m);
        assert_eq!(*count, c.raw_count(*n) as f64);
        assert!((r2.unwrap() / count - r2_mean).abs() < 1e-12);
    }
    let bare = c.to_csv(false, &[]);
    assert!(bare.starts_with("N,count,r2_sum\n1,3,12\n"));
}
