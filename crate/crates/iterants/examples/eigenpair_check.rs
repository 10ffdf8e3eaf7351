//! Verifying `H v = lambda v` over iterant-complex scalars.
//!
//! Operators are 2x2 matrices of iterant elements; the residual
//! `Hv - lambda v` is measured through the matrix form of each component.
//! On the exact backend the tolerance is zero.
//!
//! ```bash
//! cargo run --example eigenpair_check
//! ```

use iterants::iterant::IterantElement;
use iterants::quantum::verify_eigenpair;
use iterants::scalar::{Backend, Scalar};

fn main() -> iterants::Result<()> {
    let zero = IterantElement::zero(Backend::Exact);
    let one = IterantElement::one(Backend::Exact);
    let i = IterantElement::i(Backend::Exact);
    let exact = Scalar::zero(Backend::Exact);

    // the swap operator fixes the symmetric vector
    let swap = [[zero.clone(), one.clone()], [one.clone(), zero.clone()]];
    let symmetric = [one.clone(), one.clone()];
    println!(
        "swap matrix, v = (1, 1), lambda = 1: {}",
        verify_eigenpair(&swap, &symmetric, &one, &exact)?
    );

    // with lambda = -1 the same vector fails
    let minus_one = one.neg();
    println!(
        "swap matrix, v = (1, 1), lambda = -1: {}",
        verify_eigenpair(&swap, &symmetric, &minus_one, &exact)?
    );
    // but the antisymmetric vector works
    let antisymmetric = [one.clone(), minus_one.clone()];
    println!(
        "swap matrix, v = (1, -1), lambda = -1: {}",
        verify_eigenpair(&swap, &antisymmetric, &minus_one, &exact)?
    );

    // a genuinely complex pair: H = [[0, -i], [i, 0]] fixes (1, i)
    let h = [[zero.clone(), i.neg()], [i.clone(), zero.clone()]];
    let v = [one.clone(), i.clone()];
    println!(
        "[[0,-i],[i,0]], v = (1, i), lambda = 1: {}",
        verify_eigenpair(&h, &v, &one, &exact)?
    );

    // scaling the eigenvector by any invertible element changes nothing
    let scale = IterantElement::from_complex(Scalar::from_int(3), Scalar::from_int(-4))?;
    let scaled = [v[0].mul(&scale)?, v[1].mul(&scale)?];
    println!(
        "same pair scaled by 3 - 4i: {}",
        verify_eigenpair(&h, &scaled, &one, &exact)?
    );

    // the zero vector is rejected, not reported as an eigenvector
    let rejected = verify_eigenpair(&h, &[zero.clone(), zero.clone()], &one, &exact);
    println!("zero vector: {}", rejected.unwrap_err());
    Ok(())
}
