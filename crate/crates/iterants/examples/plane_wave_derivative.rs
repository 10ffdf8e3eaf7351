//! The plane wave as a big oscillation built out of the small one.
//!
//! `psi(x,t) = exp(i(kx - wt))` is assembled in Euler form from the
//! iterant `i`. Its forward difference along `x` reproduces `ik psi` to
//! first order in the step, which is what makes the exponential behave
//! like a derivative eigenform.
//!
//! ```bash
//! cargo run --example plane_wave_derivative
//! ```

use iterants::calculus::TimeGrid;
use iterants::iterant::IterantElement;
use iterants::quantum::{
    check_wave_derivative, plane_wave, wave_convergence_order, PlaneWaveParams,
};
use iterants::scalar::{Backend, Scalar};

fn main() -> iterants::Result<()> {
    let params = PlaneWaveParams {
        k: Scalar::from_f64(1.0),
        omega: Scalar::from_f64(1.0),
    };

    // samples on the unit circle
    println!("psi(x, 0) at a few points:");
    for x in [0.0, 0.5, std::f64::consts::FRAC_PI_2] {
        let psi = plane_wave(&params, &Scalar::from_f64(x), &Scalar::from_f64(0.0))?;
        let (re, im) = psi.to_complex().expect("embedded");
        println!("  x = {x}: {re} + {im} i");
    }

    // modulus stays 1: psi * conj(psi) = 1
    let psi = plane_wave(&params, &Scalar::from_f64(2.3), &Scalar::from_f64(-0.7))?;
    let modulus = psi.mul(&psi.conjugate())?;
    let tol = Scalar::from_f64(4.0 * f64::EPSILON);
    assert!(modulus.approx_eq(&IterantElement::one(Backend::Float), &tol)?);
    println!("|psi|^2 = {} (unit within 4 ulps)", modulus.to_text());

    // forward difference against ik psi, refined by factors of ten
    println!("\nforward difference vs ik psi:");
    for dx in [1e-1, 1e-2, 1e-3] {
        let grid = TimeGrid::new(Scalar::from_f64(dx), 32)?;
        let report = check_wave_derivative(&params, &grid)?;
        println!(
            "  dx = {dx:e}: max relative deviation {:e}",
            report.max_rel_dev
        );
    }
    let (_, order) = wave_convergence_order(&params, &[1e-1, 1e-2, 1e-3], 32)?;
    println!("measured convergence order: {order:.4}");
    assert!((0.8..=1.2).contains(&order));
    Ok(())
}
