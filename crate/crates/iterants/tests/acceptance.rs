//! End-to-end acceptance suite. Each test pins one verification criterion
//! at its stated tolerance and prints a single pass/fail line (visible
//! with `cargo test --test acceptance -- --nocapture`).

use std::time::{Duration, Instant};

use iterants::calculus::{brownian_path, verify_commutator_identity, TemporalFunction, TimeGrid};
use iterants::eigenform::{detect_orbit, enclose, reentry_eigenform, unfold, OrbitStatus};
use iterants::iterant::{i_squared_trace, IterantElement, IterantView};
use iterants::quantum::{
    derive_heisenberg, minkowski_q, nexus_substitute, wave_convergence_order, FourPoint,
    PhysicalConstants, PlaneWaveParams,
};
use iterants::rng::SplitMix64;
use iterants::scalar::{Backend, Scalar};

fn rational(rng: &mut SplitMix64) -> Scalar {
    let p = rng.next_small_int(9);
    let q = 1 + rng.next_below(9) as i64;
    Scalar::from_ratio(p, q).unwrap()
}

fn element(rng: &mut SplitMix64) -> IterantElement {
    IterantElement::new(
        IterantView::new(rational(rng), rational(rng)).unwrap(),
        IterantView::new(rational(rng), rational(rng)).unwrap(),
    )
    .unwrap()
}

#[test]
fn criterion_1_square_root_of_minus_one() {
    let i = IterantElement::i(Backend::Exact);
    let started = Instant::now();
    let square = i.mul(&i).unwrap();
    let elapsed = started.elapsed();

    let minus_one = IterantElement::from_real(Scalar::from_int(-1));
    assert_eq!(square, minus_one);

    // the chain is reproduced step by step and ends in [-1,-1] = -1
    let (lines, traced) = i_squared_trace().unwrap();
    assert_eq!(traced, minus_one);
    assert_eq!(lines.last().map(String::as_str), Some("[-1,-1] = -1"));
    assert!(lines.iter().any(|l| l.contains("[1,-1][-1,1]")));
    assert!(lines.iter().any(|l| l.contains("[-1,-1] ηη")));

    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("criterion 1 (iterant construction of i): PASS");
}

#[test]
fn criterion_2_ring_and_isomorphism_suite() {
    let started = Instant::now();
    let mut rng = SplitMix64::new(20_240_817);
    let one = IterantElement::one(Backend::Exact);
    for _ in 0..1000 {
        let x = element(&mut rng);
        let y = element(&mut rng);
        let z = element(&mut rng);

        // ring axioms, exact equality
        assert_eq!(
            x.mul(&y).unwrap().mul(&z).unwrap(),
            x.mul(&y.mul(&z).unwrap()).unwrap()
        );
        assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        assert_eq!(x.mul(&one).unwrap(), x);
        assert_eq!(one.mul(&x).unwrap(), x);

        // the matrix map preserves sum and product and round-trips
        assert_eq!(
            x.mul(&y).unwrap().to_matrix(),
            x.to_matrix().mul(&y.to_matrix()).unwrap()
        );
        assert_eq!(
            x.add(&y).unwrap().to_matrix(),
            x.to_matrix().add(&y.to_matrix()).unwrap()
        );
        assert_eq!(IterantElement::from_matrix(&x.to_matrix()), x);
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 2 (ring axioms & matrix isomorphism, 1000 samples): PASS");
}

#[test]
fn criterion_3_eigenform_recursion() {
    // the oscillation x -> -1/x closes with period 2 from 100 nonzero starts
    let mut rng = SplitMix64::new(3);
    let neg_recip = |x: &Scalar| Scalar::from_int(-1).div(x);
    for round in 0..100 {
        let mut p = rng.next_small_int(9);
        if p == 0 {
            p = round + 1;
        }
        let start = Scalar::from_ratio(p, 1 + rng.next_below(9) as i64).unwrap();
        let orbit = detect_orbit(neg_recip, start, 50, |a, b| a == b).unwrap();
        assert_eq!(
            orbit.status,
            OrbitStatus::Cycle {
                start: 0,
                period: 2
            }
        );
    }

    // over the iterants the recursion fixes i
    let i = IterantElement::i(Backend::Exact);
    let orbit = detect_orbit(
        |z: &IterantElement| z.inverse().map(|inv| inv.neg()),
        i.clone(),
        10,
        |a, b| a == b,
    )
    .unwrap();
    assert_eq!(orbit.status, OrbitStatus::FixedPoint { index: 0 });

    // one more box leaves every truncation of the reentry eigenform fixed
    let x = reentry_eigenform();
    for k in 0..=32 {
        let truncated = unfold(&x, k).unwrap();
        assert_eq!(enclose(truncated), unfold(&x, k + 1).unwrap());
    }
    println!("criterion 3 (eigenform recursion & box invariance): PASS");
}

#[test]
fn criterion_4_commutator_identity() {
    let mut rng = SplitMix64::new(44);
    for _ in 0..200 {
        let n_steps = 7 + rng.next_below(56) as usize; // 8 to 63 increments
        let grid = TimeGrid::new(Scalar::from_ratio(1, 2).unwrap(), n_steps).unwrap();
        let samples = (0..grid.len()).map(|_| rational(&mut rng)).collect();
        let x = TemporalFunction::new(grid, samples).unwrap();
        let report = verify_commutator_identity(&x).unwrap();
        assert!(report.is_exact(), "deviation {}", report.max_abs_dev);
        assert!(!report.rows.is_empty());
    }
    println!("criterion 4 (commutator identity, 200 rational series): PASS");
}

#[test]
fn criterion_5_brownian_constancy_and_variance() {
    let started = Instant::now();
    let dt = 0.01;
    let n_steps = 100;
    let grid = TimeGrid::new(Scalar::from_f64(dt), n_steps).unwrap();
    for k in [0.25, 1.0, 4.0] {
        let scalar_k = Scalar::from_f64(k);
        // endpoint variance over 10^4 seeded paths, Welford accumulation
        let mut mean = 0.0f64;
        let mut m2 = 0.0f64;
        for seed in 0..10_000u64 {
            let path = brownian_path(&scalar_k, &grid, seed).unwrap();
            // every per-step squared increment over dt equals K
            for i in 0..n_steps {
                let dx = path.get(i + 1).unwrap().to_f64() - path.get(i).unwrap().to_f64();
                let rel = ((dx * dx / dt) - k).abs() / k;
                assert!(rel <= 2f64.powi(-45), "relative error {rel:e}");
            }
            let endpoint = path.get(n_steps).unwrap().to_f64();
            let count = (seed + 1) as f64;
            let delta = endpoint - mean;
            mean += delta / count;
            m2 += delta * (endpoint - mean);
        }
        let variance = m2 / 9_999.0;
        let expected = k * n_steps as f64 * dt;
        let rel = (variance - expected).abs() / expected;
        assert!(
            rel <= 0.05,
            "variance {variance} vs {expected} (rel {rel:.4})"
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 5 (brownian diffusion constancy & variance): PASS");
}

#[test]
fn criterion_6_minkowski_substitution() {
    let mut rng = SplitMix64::new(66);
    for _ in 0..1000 {
        let p = FourPoint::new(
            rational(&mut rng),
            rational(&mut rng),
            rational(&mut rng),
            rational(&mut rng),
        )
        .unwrap();
        let substituted = nexus_substitute(&p).unwrap();
        assert_eq!(substituted, IterantElement::from_real(minkowski_q(&p)));
    }
    println!("criterion 6 (temporal-nexus substitution, 1000 points): PASS");
}

#[test]
fn criterion_7_heisenberg_pipeline() {
    let i = IterantElement::i(Backend::Exact);
    for hbar_num in 1..=10i64 {
        for mass_num in 1..=10i64 {
            let hbar = Scalar::from_ratio(hbar_num, 4).unwrap();
            let mass = Scalar::from_ratio(mass_num, 3).unwrap();
            let derivation =
                derive_heisenberg(&PhysicalConstants::new(hbar.clone(), mass).unwrap()).unwrap();
            assert_eq!(derivation.result, i.scale(&hbar).unwrap());

            let rules: Vec<&str> = derivation.steps.iter().map(|s| s.rule.as_str()).collect();
            assert!(rules.contains(&"impose_planck_postulate"));
            let identity = derivation
                .steps
                .iter()
                .find(|s| s.rule.as_str() == "iterant_identity")
                .expect("identity step present");
            assert_eq!(
                (identity.lhs.as_str(), identity.rhs.as_str()),
                ("1/i", "-i")
            );
        }
    }
    println!("criterion 7 (heisenberg pipeline on a 10x10 constant grid): PASS");
}

#[test]
fn criterion_8_wave_derivative_convergence() {
    let started = Instant::now();
    let params = PlaneWaveParams {
        k: Scalar::from_f64(1.0),
        omega: Scalar::from_f64(1.0),
    };
    let (reports, order) = wave_convergence_order(&params, &[1e-1, 1e-2, 1e-3], 32).unwrap();
    assert!((0.8..=1.2).contains(&order), "order {order}");
    // deviations must actually decrease across the decade
    assert!(reports[0].max_rel_dev > reports[1].max_rel_dev);
    assert!(reports[1].max_rel_dev > reports[2].max_rel_dev);
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 8 (wave-derivative first-order convergence): PASS");
}

#[test]
fn criterion_9_selftest_completes_quickly() {
    let started = Instant::now();
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_iterants"))
        .arg("selftest")
        .output()
        .expect("selftest runs");
    let elapsed = started.elapsed();
    assert!(
        output.status.success(),
        "selftest exit {:?}",
        output.status.code()
    );
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("overall: PASS"));
    assert!(elapsed <= Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 9 (selftest under ten seconds, exit 0): PASS");
}
