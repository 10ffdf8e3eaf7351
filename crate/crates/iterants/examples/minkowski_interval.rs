//! From Euclidean to hyperbolic geometry by one substitution.
//!
//! Writing the time coordinate as `it` and squaring inside the iterant
//! algebra turns `x^2 + y^2 + z^2 + t^2` into `x^2 + y^2 + z^2 - t^2`,
//! the squared interval of special relativity.
//!
//! ```bash
//! cargo run --example minkowski_interval
//! ```

use iterants::iterant::IterantElement;
use iterants::quantum::{euclidean_q, minkowski_q, nexus_substitute, FourPoint};
use iterants::scalar::Scalar;

fn main() -> iterants::Result<()> {
    let points = [
        FourPoint::from_ints(0, 0, 0, 1), // purely timelike
        FourPoint::from_ints(1, 0, 0, 1), // lightlike
        FourPoint::from_ints(3, 4, 0, 0), // purely spacelike
        FourPoint::new(
            Scalar::from_ratio(1, 2)?,
            Scalar::from_ratio(-2, 3)?,
            Scalar::from_int(1),
            Scalar::from_ratio(5, 4)?,
        )?,
    ];

    println!("point (x,y,z,t): euclidean x^2+y^2+z^2+t^2 vs substituted (t -> it)");
    for p in &points {
        let substituted = nexus_substitute(p)?;
        let direct = minkowski_q(p);
        assert_eq!(substituted, IterantElement::from_real(direct.clone()));
        let (value, _) = substituted.to_complex().expect("real element");
        let kind = if value.is_negative() {
            "timelike"
        } else if value.is_zero() {
            "lightlike"
        } else {
            "spacelike"
        };
        println!(
            "  ({},{},{},{}): {} vs {} [{kind}]",
            p.x,
            p.y,
            p.z,
            p.t,
            euclidean_q(p),
            direct,
        );
    }
    Ok(())
}
