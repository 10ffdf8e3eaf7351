//! From the discrete commutator to `[p,q] = i hbar`.
//!
//! The commutator identity gives `[q, p/m] = (dx)^2/dt`. Pinning the
//! coefficient to `hbar/m`, writing the time step as `i dt`, and using
//! `1/i = -i` turns it into `-i hbar/m`; multiplying by `-m` leaves
//! `[p,q] = i hbar`. Every step is checked in the iterant algebra, and
//! the mass cancels out of the result.
//!
//! ```bash
//! cargo run --example heisenberg_derivation
//! ```

use iterants::iterant::IterantElement;
use iterants::quantum::{derive_heisenberg, PhysicalConstants};
use iterants::scalar::{Backend, Scalar};

fn main() -> iterants::Result<()> {
    let hbar = Scalar::from_ratio(3, 2)?;
    let constants = PhysicalConstants::new(hbar.clone(), Scalar::from_int(7))?;
    let derivation = derive_heisenberg(&constants)?;

    println!("substitution chain for hbar = 3/2, m = 7:");
    for step in &derivation.steps {
        println!("  {} = {}   [{}]", step.lhs, step.rhs, step.rule.as_str());
    }
    println!("result: {}", derivation.result.to_text());
    assert_eq!(
        derivation.result,
        IterantElement::i(Backend::Exact).scale(&hbar)?
    );

    // the same result for any mass
    for m in [1, 2, 5, 100] {
        let other = derive_heisenberg(&PhysicalConstants::new(hbar.clone(), Scalar::from_int(m))?)?;
        assert_eq!(other.result, derivation.result);
    }
    println!("mass independence checked for m in {{1, 2, 5, 7, 100}}");

    // machine-readable trace
    println!("\njson trace:");
    println!(
        "{}",
        serde_json::to_string_pretty(&derivation.to_json()).unwrap()
    );
    Ok(())
}
