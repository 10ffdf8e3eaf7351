//! The physics layer on top of the iterant algebra and the discrete
//! calculus.
//!
//! Replacing the time coordinate `t` by `it` turns the Euclidean quadratic
//! form `x^2 + y^2 + z^2 + t^2` into the hyperbolic `x^2 + y^2 + z^2 - t^2`;
//! [`nexus_substitute`] carries that out inside the iterant algebra and
//! lands on a real element. [`verify_eigenpair`] checks `H v = lambda v`
//! for small operators over iterant-complex scalars, [`plane_wave`] builds
//! `exp(i(kx - wt))` in Euler form and [`check_wave_derivative`] measures
//! how well the forward difference reproduces `ik psi`. The same `dt -> i dt`
//! substitution applied to the commutator coefficient `(dx)^2/dt`, pinned
//! to `hbar/m`, is carried out step by step in [`derive_heisenberg`] and
//! ends in `[p,q] = i hbar`, every step machine-checked.

use serde_json::{json, Value};

use crate::calculus::{discrete_derivative, TemporalFunction, TimeGrid};
use crate::error::Error;
use crate::iterant::IterantElement;
use crate::scalar::{Backend, Scalar};
use crate::Result;

/// A point `(x, y, z, t)` with one shared scalar backend.
#[derive(Debug, Clone, PartialEq)]
pub struct FourPoint {
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
    pub t: Scalar,
}

impl FourPoint {
    pub fn new(x: Scalar, y: Scalar, z: Scalar, t: Scalar) -> Result<FourPoint> {
        for c in [&y, &z, &t] {
            if c.backend() != x.backend() {
                return Err(Error::BackendMismatch(x.backend(), c.backend()));
            }
        }
        Ok(FourPoint { x, y, z, t })
    }

    pub fn from_ints(x: i64, y: i64, z: i64, t: i64) -> FourPoint {
        FourPoint {
            x: Scalar::from_int(x),
            y: Scalar::from_int(y),
            z: Scalar::from_int(z),
            t: Scalar::from_int(t),
        }
    }
}

/// The squared Euclidean distance `x^2 + y^2 + z^2 + t^2`.
pub fn euclidean_q(p: &FourPoint) -> Scalar {
    let spatial = spatial_square(p);
    spatial.add(&p.t.square()).expect("same backend")
}

fn spatial_square(p: &FourPoint) -> Scalar {
    p.x.square()
        .add(&p.y.square())
        .and_then(|s| s.add(&p.z.square()))
        .expect("same backend")
}

/// The squared interval `x^2 + y^2 + z^2 - t^2`, computed directly.
pub fn minkowski_q(p: &FourPoint) -> Scalar {
    spatial_square(p).sub(&p.t.square()).expect("same backend")
}

/// Replaces `t` by `it` and evaluates `x^2 + y^2 + z^2 + (it)^2` in the
/// iterant algebra. `(it)^2 = -t^2`, so the result is the real element
/// carrying the hyperbolic form.
pub fn nexus_substitute(p: &FourPoint) -> Result<IterantElement> {
    let it = IterantElement::from_complex(Scalar::zero(p.t.backend()), p.t.clone())?;
    IterantElement::from_real(spatial_square(p)).add(&it.mul(&it)?)
}

/// A 2x2 operator over iterant-complex scalars.
pub type Operator2 = [[IterantElement; 2]; 2];

/// Checks `H v = lambda v` slotwise: the magnitude of each component of
/// `Hv - lambda v` (max-norm of its matrix form) must not exceed `tol`.
/// Pass a zero tolerance on the exact backend.
pub fn verify_eigenpair(
    h: &Operator2,
    v: &[IterantElement; 2],
    lambda: &IterantElement,
    tol: &Scalar,
) -> Result<bool> {
    if v[0].is_zero() && v[1].is_zero() {
        return Err(Error::ZeroVector);
    }
    for (row, v_i) in h.iter().zip(v) {
        let applied = row[0].mul(&v[0])?.add(&row[1].mul(&v[1])?)?;
        let expected = lambda.mul(v_i)?;
        let residual = applied.sub(&expected)?;
        if residual.magnitude().compare(tol)?.is_gt() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Wave parameters: wave number `k` and angular frequency `omega`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWaveParams {
    pub k: Scalar,
    pub omega: Scalar,
}

/// `exp(i(kx - wt))` in Euler form: `cos(kx - wt) + i sin(kx - wt)` as an
/// embedded complex iterant. Float backend only.
pub fn plane_wave(params: &PlaneWaveParams, x: &Scalar, t: &Scalar) -> Result<IterantElement> {
    let (Scalar::Float(k), Scalar::Float(omega)) = (&params.k, &params.omega) else {
        return Err(Error::FloatRequired("plane_wave"));
    };
    let (Scalar::Float(x), Scalar::Float(t)) = (x, t) else {
        return Err(Error::FloatRequired("plane_wave"));
    };
    let phase = k * x - omega * t;
    IterantElement::from_complex(Scalar::from_f64(phase.cos()), Scalar::from_f64(phase.sin()))
}

/// Result of one forward-difference check of the plane wave at `t = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveReport {
    /// Spatial step of the grid.
    pub dx: f64,
    /// Max over valid samples of `|D psi - ik psi|` relative to `|k|`
    /// (absolute when `k = 0`).
    pub max_rel_dev: f64,
    pub samples_compared: usize,
}

/// Samples `psi(x, 0)` on the grid, applies the shift-coefficient forward
/// difference along `x` to the real and imaginary parts, and compares the
/// result against `ik psi` sample by sample.
pub fn check_wave_derivative(params: &PlaneWaveParams, grid: &TimeGrid) -> Result<WaveReport> {
    let Scalar::Float(k) = &params.k else {
        return Err(Error::FloatRequired("check_wave_derivative"));
    };
    if grid.backend() != Backend::Float {
        return Err(Error::FloatRequired("check_wave_derivative"));
    }
    let k = *k;
    let zero_time = Scalar::from_f64(0.0);
    let re = TemporalFunction::sample(grid.clone(), |x| {
        Ok(Scalar::from_f64(
            plane_wave(params, x, &zero_time)?
                .to_complex()
                .expect("embedded")
                .0
                .to_f64(),
        ))
    })?;
    let im = TemporalFunction::sample(grid.clone(), |x| {
        Ok(Scalar::from_f64(
            plane_wave(params, x, &zero_time)?
                .to_complex()
                .expect("embedded")
                .1
                .to_f64(),
        ))
    })?;

    let d_re = discrete_derivative(&re)?;
    let d_im = discrete_derivative(&im)?;
    let d_re = d_re.coefficient(1).expect("derivative has a J term");
    let d_im = d_im.coefficient(1).expect("derivative has a J term");

    let mut max_dev = 0.0f64;
    let mut compared = 0;
    for i in 0..grid.len() {
        let (Some(dr), Some(di)) = (d_re.get(i), d_im.get(i)) else {
            continue;
        };
        // ik psi = -k im + i k re
        let target_re = -k * im.get(i).expect("valid sample").to_f64();
        let target_im = k * re.get(i).expect("valid sample").to_f64();
        let dev = (dr.to_f64() - target_re).hypot(di.to_f64() - target_im);
        let dev = if k == 0.0 { dev } else { dev / k.abs() };
        max_dev = max_dev.max(dev);
        compared += 1;
    }
    Ok(WaveReport {
        dx: grid.dt().to_f64(),
        max_rel_dev: max_dev,
        samples_compared: compared,
    })
}

/// Runs [`check_wave_derivative`] at each step size and fits the slope of
/// `ln(deviation)` against `ln(dx)` — the measured convergence order of
/// the forward difference (1 in exact arithmetic). Requires `k != 0`.
pub fn wave_convergence_order(
    params: &PlaneWaveParams,
    step_sizes: &[f64],
    n_steps: usize,
) -> Result<(Vec<WaveReport>, f64)> {
    if params.k.is_zero() {
        return Err(Error::NotPositive("k"));
    }
    if step_sizes.len() < 2 {
        return Err(Error::Parse("need at least two step sizes".into()));
    }
    let mut reports = Vec::new();
    let mut points = Vec::new();
    for &dx in step_sizes {
        let grid = TimeGrid::new(Scalar::from_f64(dx), n_steps)?;
        let report = check_wave_derivative(params, &grid)?;
        points.push((dx.ln(), report.max_rel_dev.ln()));
        reports.push(report);
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in &points {
        num += (x - mean_x) * (y - mean_y);
        den += (x - mean_x) * (x - mean_x);
    }
    Ok((reports, num / den))
}

/// Physical constants for the commutator pipeline; `mass` must be positive.
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalConstants {
    hbar: Scalar,
    mass: Scalar,
}

impl PhysicalConstants {
    pub fn new(hbar: Scalar, mass: Scalar) -> Result<PhysicalConstants> {
        if hbar.backend() != mass.backend() {
            return Err(Error::BackendMismatch(hbar.backend(), mass.backend()));
        }
        if !mass.is_positive() {
            return Err(Error::NotPositive("mass"));
        }
        Ok(PhysicalConstants { hbar, mass })
    }

    pub fn hbar(&self) -> &Scalar {
        &self.hbar
    }

    pub fn mass(&self) -> &Scalar {
        &self.mass
    }
}

/// The rule applied by one step of the commutator pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivationRule {
    /// Pin the commutator coefficient: `(dx)^2/dt = hbar/m`.
    ImposePlanckPostulate,
    /// Replace `dt` by `i dt`, dividing the coefficient by `i`.
    SubstituteIt,
    /// Use `1/i = -i`, checked as an iterant identity.
    IterantIdentity,
    /// Multiply both sides by `-m`.
    Rescale,
}

impl DerivationRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            DerivationRule::ImposePlanckPostulate => "impose_planck_postulate",
            DerivationRule::SubstituteIt => "substitute_it",
            DerivationRule::IterantIdentity => "iterant_identity",
            DerivationRule::Rescale => "rescale",
        }
    }
}

/// One verified step of the derivation.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivationStep {
    pub lhs: String,
    pub rhs: String,
    pub rule: DerivationRule,
}

/// The full derivation: the machine-checked steps and the final element.
#[derive(Debug, Clone, PartialEq)]
pub struct HeisenbergDerivation {
    pub steps: Vec<DerivationStep>,
    pub result: IterantElement,
}

impl HeisenbergDerivation {
    /// JSON trace: an ordered list of `{lhs, rhs, rule}` objects.
    pub fn to_json(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| json!({ "lhs": s.lhs, "rhs": s.rhs, "rule": s.rule.as_str() }))
            .collect();
        json!({ "steps": steps, "result": self.result.to_text() })
    }
}

/// Carries out the substitution chain on the commutator coefficient:
/// impose `(dx)^2/dt = hbar/m`, replace `dt` by `i dt` (divide by `i`),
/// verify `1/i = -i`, and rescale by `-m`. The result is exactly
/// `hbar * i`, independent of the mass; every intermediate equality is
/// asserted in the iterant algebra on the exact backend.
pub fn derive_heisenberg(constants: &PhysicalConstants) -> Result<HeisenbergDerivation> {
    if constants.hbar.backend() != Backend::Exact {
        return Err(Error::ExactRequired("derive_heisenberg"));
    }
    let i = IterantElement::i(Backend::Exact);
    let mut steps = Vec::new();

    // the commutator coefficient (dx)^2/dt, pinned to hbar/m
    let hbar_over_m = constants.hbar.div(&constants.mass)?;
    let coefficient = IterantElement::from_real(hbar_over_m.clone());
    steps.push(DerivationStep {
        lhs: "[q, p/m]".to_string(),
        rhs: format!("(dx)^2/dt = hbar/m = {hbar_over_m}"),
        rule: DerivationRule::ImposePlanckPostulate,
    });

    // dt -> i dt divides the coefficient by i
    let i_inverse = i.inverse()?;
    let rotated = coefficient.mul(&i_inverse)?;
    steps.push(DerivationStep {
        lhs: "[q, p/m]".to_string(),
        rhs: format!("(dx)^2/(i dt) = (hbar/m)/i = {}", rotated.to_text()),
        rule: DerivationRule::SubstituteIt,
    });

    // 1/i = -i, checked in the algebra
    if i_inverse != i.neg() {
        return Err(Error::DerivationStep("1/i must equal -i"));
    }
    if rotated != i.neg().scale(&hbar_over_m)? {
        return Err(Error::DerivationStep("coefficient must equal -i hbar/m"));
    }
    steps.push(DerivationStep {
        lhs: "1/i".to_string(),
        rhs: "-i".to_string(),
        rule: DerivationRule::IterantIdentity,
    });

    // multiply both sides by -m
    let result = rotated.scale(&constants.mass.neg())?;
    if result != i.scale(&constants.hbar)? {
        return Err(Error::DerivationStep("[p,q] must equal i hbar"));
    }
    steps.push(DerivationStep {
        lhs: "[p, q]".to_string(),
        rhs: format!("i hbar = {}", result.to_text()),
        rule: DerivationRule::Rescale,
    });

    Ok(HeisenbergDerivation { steps, result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn euclidean_examples() {
        assert_eq!(euclidean_q(&FourPoint::from_ints(0, 0, 0, 0)), int(0));
        assert_eq!(euclidean_q(&FourPoint::from_ints(1, 1, 1, 1)), int(4));
        assert_eq!(euclidean_q(&FourPoint::from_ints(3, 4, 0, 0)), int(25));
    }

    #[test]
    fn nexus_substitution_examples() {
        // pure time: (it)^2 = -1
        let p = FourPoint::from_ints(0, 0, 0, 1);
        assert_eq!(
            nexus_substitute(&p).unwrap(),
            IterantElement::from_real(int(-1))
        );
        // lightlike
        let p = FourPoint::from_ints(1, 0, 0, 1);
        assert!(nexus_substitute(&p).unwrap().is_zero());
    }

    #[test]
    fn nexus_matches_direct_hyperbolic_form() {
        let mut rng = SplitMix64::new(2);
        for _ in 0..200 {
            let coord = |rng: &mut SplitMix64| {
                Scalar::from_ratio(rng.next_small_int(9), 1 + rng.next_below(9) as i64).unwrap()
            };
            let p = FourPoint::new(
                coord(&mut rng),
                coord(&mut rng),
                coord(&mut rng),
                coord(&mut rng),
            )
            .unwrap();
            let substituted = nexus_substitute(&p).unwrap();
            assert_eq!(substituted, IterantElement::from_real(minkowski_q(&p)));
        }
    }

    #[test]
    fn nexus_signature() {
        let timelike = nexus_substitute(&FourPoint::from_ints(0, 0, 0, 3)).unwrap();
        let (re, im) = timelike.to_complex().unwrap();
        assert!(re.is_negative() && im.is_zero());
        let spacelike = nexus_substitute(&FourPoint::from_ints(2, 0, 0, 0)).unwrap();
        let (re, im) = spacelike.to_complex().unwrap();
        assert!(re.is_positive() && im.is_zero());
    }

    fn real(n: i64) -> IterantElement {
        IterantElement::from_real(int(n))
    }

    #[test]
    fn identity_operator_eigenpair() {
        let h = [[real(1), real(0)], [real(0), real(1)]];
        let v = [real(3), real(-2)];
        let tol = Scalar::zero(Backend::Exact);
        assert!(verify_eigenpair(&h, &v, &real(1), &tol).unwrap());
        assert!(!verify_eigenpair(&h, &v, &real(2), &tol).unwrap());
    }

    #[test]
    fn swap_operator_eigenpair() {
        let h = [[real(0), real(1)], [real(1), real(0)]];
        let v = [real(1), real(1)];
        let tol = Scalar::zero(Backend::Exact);
        assert!(verify_eigenpair(&h, &v, &real(1), &tol).unwrap());
    }

    #[test]
    fn pauli_y_eigenpair() {
        // H = [[0, -i], [i, 0]], v = (1, i), lambda = 1:
        // Hv = (-i*i, i*1) = (1, i)
        let i = IterantElement::i(Backend::Exact);
        let h = [
            [IterantElement::zero(Backend::Exact), i.neg()],
            [i.clone(), IterantElement::zero(Backend::Exact)],
        ];
        let v = [IterantElement::one(Backend::Exact), i.clone()];
        let tol = Scalar::zero(Backend::Exact);
        assert!(verify_eigenpair(&h, &v, &IterantElement::one(Backend::Exact), &tol).unwrap());
    }

    #[test]
    fn eigenpair_rejects_zero_vector() {
        let h = [[real(1), real(0)], [real(0), real(1)]];
        let v = [
            IterantElement::zero(Backend::Exact),
            IterantElement::zero(Backend::Exact),
        ];
        assert_eq!(
            verify_eigenpair(&h, &v, &real(1), &Scalar::zero(Backend::Exact)),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn eigenpair_is_scaling_invariant() {
        let i = IterantElement::i(Backend::Exact);
        let h = [
            [IterantElement::zero(Backend::Exact), i.neg()],
            [i.clone(), IterantElement::zero(Backend::Exact)],
        ];
        let v = [IterantElement::one(Backend::Exact), i.clone()];
        let lambda = IterantElement::one(Backend::Exact);
        let tol = Scalar::zero(Backend::Exact);
        let mut rng = SplitMix64::new(12);
        for _ in 0..10 {
            let mut p = rng.next_small_int(5);
            if p == 0 {
                p = 2;
            }
            let scale = IterantElement::from_complex(
                Scalar::from_int(p),
                Scalar::from_int(rng.next_small_int(5)),
            )
            .unwrap();
            if scale.to_matrix().det().unwrap().is_zero() {
                continue;
            }
            let scaled = [v[0].mul(&scale).unwrap(), v[1].mul(&scale).unwrap()];
            assert!(verify_eigenpair(&h, &scaled, &lambda, &tol).unwrap());
        }
    }

    fn wave_params(k: f64) -> PlaneWaveParams {
        PlaneWaveParams {
            k: Scalar::from_f64(k),
            omega: Scalar::from_f64(1.0),
        }
    }

    #[test]
    fn plane_wave_at_zero_phase_is_one() {
        let psi = plane_wave(
            &wave_params(1.0),
            &Scalar::from_f64(0.0),
            &Scalar::from_f64(0.0),
        )
        .unwrap();
        let tol = Scalar::from_f64(0.0);
        assert!(psi
            .approx_eq(&IterantElement::one(Backend::Float), &tol)
            .unwrap());
    }

    #[test]
    fn plane_wave_at_quarter_period_is_i() {
        let psi = plane_wave(
            &wave_params(1.0),
            &Scalar::from_f64(std::f64::consts::FRAC_PI_2),
            &Scalar::from_f64(0.0),
        )
        .unwrap();
        let tol = Scalar::from_f64(1e-15);
        assert!(psi
            .approx_eq(&IterantElement::i(Backend::Float), &tol)
            .unwrap());
    }

    #[test]
    fn plane_wave_has_unit_modulus() {
        let mut rng = SplitMix64::new(55);
        let params = wave_params(2.5);
        let one = IterantElement::one(Backend::Float);
        let tol = Scalar::from_f64(4.0 * f64::EPSILON);
        for _ in 0..1000 {
            let x = Scalar::from_f64(20.0 * rng.next_f64() - 10.0);
            let t = Scalar::from_f64(20.0 * rng.next_f64() - 10.0);
            let psi = plane_wave(&params, &x, &t).unwrap();
            let modulus = psi.mul(&psi.conjugate()).unwrap();
            assert!(modulus.approx_eq(&one, &tol).unwrap());
        }
    }

    #[test]
    fn plane_wave_requires_float_backend() {
        let params = PlaneWaveParams {
            k: Scalar::from_int(1),
            omega: Scalar::from_int(1),
        };
        assert_eq!(
            plane_wave(&params, &Scalar::from_int(0), &Scalar::from_int(0)),
            Err(Error::FloatRequired("plane_wave"))
        );
    }

    #[test]
    fn zero_wave_number_has_zero_derivative() {
        let grid = TimeGrid::new(Scalar::from_f64(0.1), 16).unwrap();
        let report = check_wave_derivative(&wave_params(0.0), &grid).unwrap();
        assert_eq!(report.max_rel_dev, 0.0);
    }

    #[test]
    fn halving_the_step_halves_the_deviation() {
        let params = wave_params(1.0);
        let coarse =
            check_wave_derivative(&params, &TimeGrid::new(Scalar::from_f64(0.02), 32).unwrap())
                .unwrap();
        let fine =
            check_wave_derivative(&params, &TimeGrid::new(Scalar::from_f64(0.01), 32).unwrap())
                .unwrap();
        let ratio = coarse.max_rel_dev / fine.max_rel_dev;
        assert!((ratio - 2.0).abs() <= 0.4, "ratio {ratio}");
    }

    #[test]
    fn deviation_obeys_the_taylor_bound() {
        // |D psi - ik psi| / |k| <= |k|^2 dx at small k dx (here k = 1)
        let params = wave_params(1.0);
        for dx in [1e-2, 1e-3, 1e-4] {
            let grid = TimeGrid::new(Scalar::from_f64(dx), 16).unwrap();
            let report = check_wave_derivative(&params, &grid).unwrap();
            assert!(
                report.max_rel_dev <= dx,
                "dev {} at dx {dx}",
                report.max_rel_dev
            );
        }
    }

    #[test]
    fn measured_order_is_first_order() {
        let params = wave_params(1.0);
        let (_, order) = wave_convergence_order(&params, &[1e-1, 1e-2, 1e-3], 32).unwrap();
        assert!((0.8..=1.2).contains(&order), "order {order}");
    }

    #[test]
    fn heisenberg_unit_constants() {
        let constants = PhysicalConstants::new(int(1), int(1)).unwrap();
        let derivation = derive_heisenberg(&constants).unwrap();
        assert_eq!(derivation.result, IterantElement::i(Backend::Exact));
        let rules: Vec<&str> = derivation.steps.iter().map(|s| s.rule.as_str()).collect();
        assert_eq!(
            rules,
            vec![
                "impose_planck_postulate",
                "substitute_it",
                "iterant_identity",
                "rescale"
            ]
        );
        // the identity step records 1/i = -i
        let identity = &derivation.steps[2];
        assert_eq!(
            (identity.lhs.as_str(), identity.rhs.as_str()),
            ("1/i", "-i")
        );
    }

    #[test]
    fn heisenberg_is_mass_independent_and_linear_in_hbar() {
        let hbar = Scalar::from_ratio(3, 2).unwrap();
        let constants = PhysicalConstants::new(hbar.clone(), int(7)).unwrap();
        let derivation = derive_heisenberg(&constants).unwrap();
        let expected = IterantElement::i(Backend::Exact).scale(&hbar).unwrap();
        assert_eq!(derivation.result, expected);
    }

    #[test]
    fn heisenberg_rejects_bad_constants() {
        assert_eq!(
            PhysicalConstants::new(int(1), int(0)),
            Err(Error::NotPositive("mass"))
        );
        assert_eq!(
            PhysicalConstants::new(int(1), int(-2)),
            Err(Error::NotPositive("mass"))
        );
        let float_constants =
            PhysicalConstants::new(Scalar::from_f64(1.0), Scalar::from_f64(1.0)).unwrap();
        assert_eq!(
            derive_heisenberg(&float_constants),
            Err(Error::ExactRequired("derive_heisenberg"))
        );
    }

    #[test]
    fn derivation_trace_is_json_serializable() {
        let constants = PhysicalConstants::new(int(1), int(2)).unwrap();
        let derivation = derive_heisenberg(&constants).unwrap();
        let json = derivation.to_json();
        assert_eq!(json["steps"].as_array().unwrap().len(), 4);
        assert_eq!(json["steps"][0]["rule"], "impose_planck_postulate");
        assert_eq!(json["result"], "[[0,0],[1,-1]]");
    }
}
