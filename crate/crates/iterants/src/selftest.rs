//! The full invariant suite at desk scale, one result per subject area.
//!
//! Every check here is deterministic: sampled inputs come from fixed
//! seeds, so two runs produce identical tables. The whole run stays well
//! under ten seconds.

use crate::calculus::{
    brownian_endpoint_variance, brownian_path, verify_commutator_identity, TemporalFunction,
    TimeGrid,
};
use crate::eigenform::{
    detect_orbit, enclose, iterate_boxes, reentry_eigenform, unfold, FormExpr, OrbitStatus,
};
use crate::iterant::{i_squared_trace, IterantElement, IterantView};
use crate::quantum::{
    derive_heisenberg, minkowski_q, nexus_substitute, plane_wave, verify_eigenpair,
    wave_convergence_order, FourPoint, PhysicalConstants, PlaneWaveParams,
};
use crate::rng::SplitMix64;
use crate::scalar::{Backend, Scalar};

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = std::result::Result<String, String>;

fn suite(name: &'static str, check: impl FnOnce() -> Check) -> SuiteResult {
    match check() {
        Ok(detail) => SuiteResult {
            name,
            passed: true,
            detail,
        },
        Err(detail) => SuiteResult {
            name,
            passed: false,
            detail,
        },
    }
}

/// Runs every suite in order and collects the table.
pub fn run_all() -> Vec<SuiteResult> {
    vec![
        suite("nested boxes & reentry", nested_boxes),
        suite("iterant square root of minus one", iterant_algebra),
        suite("eigenvectors & eigenvalues", eigenpairs),
        suite("plane-wave synchronization", plane_waves),
        suite("shift-operator calculus & random walks", shift_calculus),
        suite("heisenberg commutator", heisenberg),
    ]
}

fn rand_rational(rng: &mut SplitMix64) -> Scalar {
    let p = rng.next_small_int(9);
    let q = 1 + rng.next_below(9) as i64;
    Scalar::from_ratio(p, q).expect("nonzero denominator")
}

fn rand_element(rng: &mut SplitMix64) -> IterantElement {
    IterantElement::new(
        IterantView::new(rand_rational(rng), rand_rational(rng)).expect("same backend"),
        IterantView::new(rand_rational(rng), rand_rational(rng)).expect("same backend"),
    )
    .expect("same backend")
}

fn nested_boxes() -> Check {
    for n in 0..=12 {
        let e = iterate_boxes(n);
        if enclose(e.clone()) == e {
            return Err(format!(
                "finite expression of depth {n} is fixed by enclosure"
            ));
        }
    }
    let x = reentry_eigenform();
    for k in 0..=32 {
        let truncated = unfold(&x, k).map_err(|e| e.to_string())?;
        if truncated.depth() != k + 1 {
            return Err(format!("unfold({k}) has depth {}", truncated.depth()));
        }
        if enclose(truncated) != unfold(&x, k + 1).map_err(|e| e.to_string())? {
            return Err(format!("one more box differs from unfold({})", k + 1));
        }
    }
    for a in 0..=8 {
        for b in 0..=8 {
            let nested =
                unfold(&unfold(&x, a).map_err(|e| e.to_string())?, b).map_err(|e| e.to_string())?;
            if nested != unfold(&x, a + b).map_err(|e| e.to_string())? {
                return Err(format!(
                    "unfold({a}) then unfold({b}) is not unfold({})",
                    a + b
                ));
            }
        }
    }
    let sample = unfold(&x, 2).map_err(|e| e.to_string())?;
    if FormExpr::parse(&sample.render()) != Ok(sample) {
        return Err("bracket text does not round-trip".to_string());
    }
    Ok("no finite fixed point to depth 12; unfold invariant to depth 33".to_string())
}

/// The commutation rule `(eta V) = (swap V) eta`, checked through an
/// injectable product so a corrupted multiplication is caught.
pub fn eta_commutation_holds_with(
    mul: impl Fn(&IterantElement, &IterantElement) -> crate::Result<IterantElement>,
) -> bool {
    let mut rng = SplitMix64::new(1717);
    let eta = IterantElement::eta(Backend::Exact);
    for _ in 0..200 {
        let v = IterantView::new(rand_rational(&mut rng), rand_rational(&mut rng))
            .expect("same backend");
        let lhs = mul(&eta, &IterantElement::from_view(v.clone()));
        let rhs = mul(&IterantElement::from_view(v.swap()), &eta);
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => continue,
            _ => return false,
        }
    }
    true
}

fn iterant_algebra() -> Check {
    // the defining computation, step by step
    let (lines, square) = i_squared_trace().map_err(|e| e.to_string())?;
    if lines.last().map(String::as_str) != Some("[-1,-1] = -1")
        || square != IterantElement::from_real(Scalar::from_int(-1))
    {
        return Err("i*i did not reduce to -1".to_string());
    }
    let i = IterantElement::i(Backend::Exact);
    if i.pow(4).map_err(|e| e.to_string())? != IterantElement::one(Backend::Exact) {
        return Err("i does not have order 4".to_string());
    }

    if !eta_commutation_holds_with(IterantElement::mul) {
        return Err("eta commutation rule failed".to_string());
    }

    // ring axioms and the matrix isomorphism on sampled triples
    let mut rng = SplitMix64::new(8080);
    for round in 0..1000 {
        let x = rand_element(&mut rng);
        let y = rand_element(&mut rng);
        let z = rand_element(&mut rng);
        let err = |what: &str| Err(format!("{what} failed at round {round}"));
        let assoc_l = x.mul(&y).and_then(|xy| xy.mul(&z));
        let assoc_r = y.mul(&z).and_then(|yz| x.mul(&yz));
        if assoc_l != assoc_r {
            return err("associativity");
        }
        let dist_l = y.add(&z).and_then(|s| x.mul(&s));
        let dist_r = x.mul(&y).and_then(|a| a.add(&x.mul(&z)?));
        if dist_l != dist_r {
            return err("distributivity");
        }
        let hom_mul = x.mul(&y).map(|p| p.to_matrix());
        let mat_mul = x.to_matrix().mul(&y.to_matrix());
        if hom_mul.map_err(|e| e.to_string())? != mat_mul.map_err(|e| e.to_string())? {
            return err("matrix homomorphism");
        }
        if IterantElement::from_matrix(&x.to_matrix()) != x {
            return err("matrix round-trip");
        }
    }

    // the embedded complex subring commutes; the full algebra does not
    let eta = IterantElement::eta(Backend::Exact);
    if eta.mul(&i) == i.mul(&eta) {
        return Err("expected a non-commuting witness pair".to_string());
    }
    for _ in 0..200 {
        let a = IterantElement::from_complex(rand_rational(&mut rng), rand_rational(&mut rng))
            .map_err(|e| e.to_string())?;
        let b = IterantElement::from_complex(rand_rational(&mut rng), rand_rational(&mut rng))
            .map_err(|e| e.to_string())?;
        if a.mul(&b) != b.mul(&a) {
            return Err("embedded complex numbers failed to commute".to_string());
        }
    }

    // the oscillation x -> -1/x: period 2 over the rationals, fixed at i
    let neg_recip = |x: &Scalar| Scalar::from_int(-1).div(x);
    for round in 0..100 {
        let mut p = rng.next_small_int(9);
        if p == 0 {
            p = round as i64 + 1;
        }
        let start = Scalar::from_ratio(p, 1 + rng.next_below(9) as i64).expect("nonzero");
        let orbit = detect_orbit(neg_recip, start, 50, |a, b| a == b).map_err(|e| e.to_string())?;
        if orbit.status
            != (OrbitStatus::Cycle {
                start: 0,
                period: 2,
            })
        {
            return Err(format!(
                "rational orbit did not close with period 2: {:?}",
                orbit.status
            ));
        }
    }
    let orbit = detect_orbit(
        |z: &IterantElement| z.inverse().map(|inv| inv.neg()),
        i.clone(),
        10,
        |a, b| a == b,
    )
    .map_err(|e| e.to_string())?;
    if orbit.status != (OrbitStatus::FixedPoint { index: 0 }) {
        return Err("i is not fixed by x -> -1/x".to_string());
    }

    // replacing t by it: the Euclidean form becomes the hyperbolic one
    for round in 0..1000 {
        let p = FourPoint::new(
            rand_rational(&mut rng),
            rand_rational(&mut rng),
            rand_rational(&mut rng),
            rand_rational(&mut rng),
        )
        .map_err(|e| e.to_string())?;
        let substituted = nexus_substitute(&p).map_err(|e| e.to_string())?;
        if substituted != IterantElement::from_real(minkowski_q(&p)) {
            return Err(format!("substitution mismatch at round {round}"));
        }
    }

    Ok("i*i = -1; 1000 ring/isomorphism triples; period-2 orbits; 1000 substitutions".to_string())
}

fn eigenpairs() -> Check {
    let zero = IterantElement::zero(Backend::Exact);
    let one = IterantElement::one(Backend::Exact);
    let i = IterantElement::i(Backend::Exact);
    let tol = Scalar::zero(Backend::Exact);

    let identity_op = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
    let v = [IterantElement::from_real(Scalar::from_int(3)), i.clone()];
    if !verify_eigenpair(&identity_op, &v, &one, &tol).map_err(|e| e.to_string())? {
        return Err("identity operator eigenpair rejected".to_string());
    }

    let swap_op = [[zero.clone(), one.clone()], [one.clone(), zero.clone()]];
    let symmetric = [one.clone(), one.clone()];
    if !verify_eigenpair(&swap_op, &symmetric, &one, &tol).map_err(|e| e.to_string())? {
        return Err("swap operator eigenpair rejected".to_string());
    }

    let pauli_y = [[zero.clone(), i.neg()], [i.clone(), zero.clone()]];
    let v = [one.clone(), i.clone()];
    if !verify_eigenpair(&pauli_y, &v, &one, &tol).map_err(|e| e.to_string())? {
        return Err("pauli-y eigenpair rejected".to_string());
    }

    // invariance under invertible scalings of the eigenvector
    let mut rng = SplitMix64::new(3030);
    let mut scalings = 0;
    while scalings < 10 {
        let scale = IterantElement::from_complex(
            Scalar::from_int(rng.next_small_int(5)),
            Scalar::from_int(rng.next_small_int(5)),
        )
        .map_err(|e| e.to_string())?;
        if scale
            .to_matrix()
            .det()
            .map_err(|e| e.to_string())?
            .is_zero()
        {
            continue;
        }
        scalings += 1;
        let scaled = [
            v[0].mul(&scale).map_err(|e| e.to_string())?,
            v[1].mul(&scale).map_err(|e| e.to_string())?,
        ];
        if !verify_eigenpair(&pauli_y, &scaled, &one, &tol).map_err(|e| e.to_string())? {
            return Err("eigenpair check not invariant under scaling".to_string());
        }
    }

    let zeros = [zero.clone(), zero.clone()];
    if verify_eigenpair(&identity_op, &zeros, &one, &tol).is_ok() {
        return Err("zero vector was not rejected".to_string());
    }

    Ok("identity, swap and pauli-y pairs; 10 invertible rescalings".to_string())
}

fn plane_waves() -> Check {
    let params = PlaneWaveParams {
        k: Scalar::from_f64(1.0),
        omega: Scalar::from_f64(1.0),
    };
    let one = IterantElement::one(Backend::Float);
    let tol = Scalar::from_f64(4.0 * f64::EPSILON);
    let mut rng = SplitMix64::new(4040);
    for _ in 0..10_000 {
        let x = Scalar::from_f64(20.0 * rng.next_f64() - 10.0);
        let t = Scalar::from_f64(20.0 * rng.next_f64() - 10.0);
        let psi = plane_wave(&params, &x, &t).map_err(|e| e.to_string())?;
        let modulus = psi.mul(&psi.conjugate()).map_err(|e| e.to_string())?;
        if !modulus.approx_eq(&one, &tol).map_err(|e| e.to_string())? {
            return Err("plane wave modulus drifted beyond 4 ulps".to_string());
        }
    }

    let (_, order) =
        wave_convergence_order(&params, &[1e-1, 1e-2, 1e-3], 32).map_err(|e| e.to_string())?;
    if !(0.8..=1.2).contains(&order) {
        return Err(format!(
            "measured derivative order {order:.3} outside [0.8, 1.2]"
        ));
    }
    Ok(format!(
        "unit modulus at 10000 samples; derivative order {order:.3}"
    ))
}

fn shift_calculus() -> Check {
    // the commutator identity, sample-exact on random rational series
    let mut rng = SplitMix64::new(5050);
    for round in 0..200 {
        let n_steps = 7 + rng.next_below(56) as usize; // grids of 8..=63 points
        let grid = TimeGrid::new(Scalar::from_int(1 + rng.next_below(4) as i64), n_steps)
            .map_err(|e| e.to_string())?;
        let samples = (0..grid.len()).map(|_| rand_rational(&mut rng)).collect();
        let x = TemporalFunction::new(grid, samples).map_err(|e| e.to_string())?;
        let report = verify_commutator_identity(&x).map_err(|e| e.to_string())?;
        if !report.is_exact() {
            return Err(format!(
                "commutator identity deviated by {} at round {round}",
                report.max_abs_dev
            ));
        }
        if report.rows.iter().any(|r| r.lhs.is_negative()) {
            return Err(format!("squared increment went negative at round {round}"));
        }
    }

    // random walks realize a constant diffusion coefficient
    for k in [0.25, 1.0, 4.0] {
        let dt = 0.01;
        let grid = TimeGrid::new(Scalar::from_f64(dt), 100).map_err(|e| e.to_string())?;
        let scalar_k = Scalar::from_f64(k);
        for seed in 0..10 {
            let path = brownian_path(&scalar_k, &grid, seed).map_err(|e| e.to_string())?;
            for i in 0..grid.n_steps() {
                let dx =
                    path.get(i + 1).expect("valid").to_f64() - path.get(i).expect("valid").to_f64();
                if ((dx * dx / dt) - k).abs() / k > 2f64.powi(-45) {
                    return Err(format!("step ratio drifted from K = {k}"));
                }
            }
        }
        let variance =
            brownian_endpoint_variance(&scalar_k, &grid, 10_000).map_err(|e| e.to_string())?;
        let expected = k * 100.0 * dt;
        if (variance - expected).abs() / expected > 0.05 {
            return Err(format!(
                "endpoint variance {variance:.4} not within 5% of {expected:.4}"
            ));
        }
    }
    Ok("200 series sample-exact; diffusion constant held for K in {1/4, 1, 4}".to_string())
}

fn heisenberg() -> Check {
    for hbar_num in 1..=10i64 {
        for mass_num in 1..=10i64 {
            let hbar = Scalar::from_ratio(hbar_num, 3).map_err(|e| e.to_string())?;
            let mass = Scalar::from_ratio(mass_num, 2).map_err(|e| e.to_string())?;
            let constants =
                PhysicalConstants::new(hbar.clone(), mass).map_err(|e| e.to_string())?;
            let derivation = derive_heisenberg(&constants).map_err(|e| e.to_string())?;
            let expected = IterantElement::i(Backend::Exact)
                .scale(&hbar)
                .map_err(|e| e.to_string())?;
            if derivation.result != expected {
                return Err(format!(
                    "result drifted at hbar = {hbar_num}/3, m = {mass_num}/2"
                ));
            }
            let rules: Vec<&str> = derivation.steps.iter().map(|s| s.rule.as_str()).collect();
            if !rules.contains(&"impose_planck_postulate") || !rules.contains(&"iterant_identity") {
                return Err("trace is missing a required step".to_string());
            }
        }
    }
    Ok("i*hbar on a 10x10 grid of (hbar, m); mass cancels throughout".to_string())
}
