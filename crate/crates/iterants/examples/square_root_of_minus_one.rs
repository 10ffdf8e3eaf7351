//! Build the square root of minus one as a two-phase oscillation.
//!
//! The view `[1,-1]` is the alternation `+1, -1, +1, ...` seen from its
//! starting phase; the shift operator eta delays it by half a period.
//! Their product `i = [1,-1] eta` squares to `-1`:
//!
//! ```bash
//! cargo run --example square_root_of_minus_one
//! ```

use iterants::iterant::{i_squared_trace, IterantElement};
use iterants::scalar::{Backend, Scalar};

fn main() -> iterants::Result<()> {
    let (lines, square) = i_squared_trace()?;
    for line in &lines {
        println!("{line}");
    }
    assert_eq!(square, IterantElement::from_real(Scalar::from_int(-1)));

    // i generates a four-cycle, like a quarter turn
    let i = IterantElement::i(Backend::Exact);
    println!("\npowers of i:");
    for n in 0..=4 {
        println!("  i^{n} = {}", i.pow(n)?.to_text());
    }

    // the embedding carries ordinary complex arithmetic
    let z = IterantElement::from_complex(Scalar::from_int(3), Scalar::from_int(-2))?;
    let w = IterantElement::from_complex(Scalar::from_int(1), Scalar::from_int(5))?;
    let product = z.mul(&w)?;
    let (re, im) = product
        .to_complex()
        .expect("embedded complex stays embedded");
    println!("\n(3 - 2i)(1 + 5i) = {re} + {im}i as {}", product.to_text());
    Ok(())
}
