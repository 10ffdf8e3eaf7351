//! The discrete derivative that carries a clock tick.
//!
//! Observing a velocity consumes one tick, so the derivative is defined
//! as `Dx = J (x(t+dt) - x(t)) / dt` with `x(t) J = J x(t+dt)`. Observing
//! `x` before or after `Dx` then differ by exactly `J (dx)^2 / dt`.
//!
//! ```bash
//! cargo run --example shift_operator_calculus
//! ```

use iterants::calculus::{
    commutator, discrete_derivative, verify_commutator_identity, SkewElement, TemporalFunction,
    TimeGrid,
};
use iterants::scalar::Scalar;

fn main() -> iterants::Result<()> {
    // x(t) = t^2 on t = 0..=6 with dt = 1
    let grid = TimeGrid::new(Scalar::from_int(1), 6)?;
    let x = TemporalFunction::sample(grid.clone(), |t| t.mul(t))?;

    let dx = discrete_derivative(&x)?;
    println!("x(t) = t^2 sampled on 0..=6");
    println!("Dx lives at J^1 with coefficient 2t + 1:");
    let coeff = dx.coefficient(1).expect("single J term");
    for (i, sample) in coeff.samples().iter().enumerate() {
        match sample {
            Some(v) => println!("  t = {}: {v}", grid.time_at(i)),
            None => println!("  t = {}: out of data", grid.time_at(i)),
        }
    }

    // the operators x and Dx do not commute
    let position = SkewElement::from_function(x.clone());
    let gap = commutator(&position, &dx)?;
    println!(
        "\n[x, Dx] as a skew element: {}",
        serde_json::to_string(&gap.to_json()?).unwrap()
    );

    // and the gap is exactly J (dx)^2 / dt, sample for sample
    let report = verify_commutator_identity(&x)?;
    println!("\nper-sample comparison (t,lhs,rhs,abs_dev):");
    print!("{}", report.to_csv());
    println!("sample-exact: {}", report.is_exact());
    assert!(report.is_exact());

    // the same check on an arbitrary series, csv export of the series
    let bumpy = TemporalFunction::new(
        TimeGrid::new(Scalar::from_ratio(1, 2)?, 4)?,
        vec![
            Scalar::from_int(3),
            Scalar::from_ratio(-1, 2)?,
            Scalar::from_int(0),
            Scalar::from_ratio(7, 3)?,
            Scalar::from_int(-2),
        ],
    )?;
    assert!(verify_commutator_identity(&bumpy)?.is_exact());
    println!("\nan arbitrary rational series, exported as csv:");
    print!("{}", bumpy.to_csv());
    Ok(())
}
