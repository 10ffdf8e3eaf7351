//! Orbits of the map `x -> -1/x`.
//!
//! Over the rationals the map only oscillates — `+1, -1, +1, ...` — and
//! has no fixed point, since `x = -1/x` means `x^2 = -1`. Inside the
//! iterant algebra the same map fixes `i` and `-i`.
//!
//! ```bash
//! cargo run --example oscillation_orbits
//! ```

use iterants::eigenform::{detect_orbit, OrbitStatus};
use iterants::iterant::IterantElement;
use iterants::scalar::{Backend, Scalar};

fn main() -> iterants::Result<()> {
    let neg_recip = |x: &Scalar| Scalar::from_int(-1).div(x);

    println!("over the rationals:");
    for start in [
        Scalar::from_int(1),
        Scalar::from_ratio(3, 7)?,
        Scalar::from_int(-2),
    ] {
        let orbit = detect_orbit(neg_recip, start.clone(), 16, |a, b| a == b)?;
        let states: Vec<String> = orbit.trajectory.iter().map(Scalar::to_string).collect();
        println!(
            "  from {start}: {} -> {:?}",
            states.join(", "),
            orbit.status
        );
        assert_eq!(
            orbit.status,
            OrbitStatus::Cycle {
                start: 0,
                period: 2
            }
        );
    }

    // starting at zero the map is undefined; the error carries the step
    let failure = detect_orbit(neg_recip, Scalar::from_int(0), 16, |a, b| a == b);
    println!("  from 0: {}", failure.unwrap_err());

    println!("\nover the iterants:");
    for z in [
        IterantElement::i(Backend::Exact),
        IterantElement::i(Backend::Exact).neg(),
    ] {
        let orbit = detect_orbit(
            |z: &IterantElement| z.inverse().map(|inv| inv.neg()),
            z.clone(),
            16,
            |a, b| a == b,
        )?;
        println!("  from {}: {:?}", z.to_text(), orbit.status);
        assert_eq!(orbit.status, OrbitStatus::FixedPoint { index: 0 });
    }

    // away from ±i the map swings back and forth: -1/(-1/z) = z
    let generic = IterantElement::from_complex(Scalar::from_int(2), Scalar::from_int(1))?;
    let orbit = detect_orbit(
        |z: &IterantElement| z.inverse().map(|inv| inv.neg()),
        generic.clone(),
        8,
        |a, b| a == b,
    )?;
    println!("  from {}: {:?}", generic.to_text(), orbit.status);
    assert_eq!(
        orbit.status,
        OrbitStatus::Cycle {
            start: 0,
            period: 2
        }
    );
    Ok(())
}
