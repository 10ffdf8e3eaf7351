//! The iterant algebra is 2x2 matrix algebra in disguise: the even view
//! sits on the diagonal, the odd view on the antidiagonal, and the map
//! preserves sums and products.
//!
//! ```bash
//! cargo run --example matrix_views
//! ```

use iterants::iterant::{IterantElement, IterantView, Matrix2};
use iterants::scalar::{Backend, Scalar};

fn main() -> iterants::Result<()> {
    let i = IterantElement::i(Backend::Exact);
    let eta = IterantElement::eta(Backend::Exact);

    println!("element -> matrix:");
    println!(
        "  1   = {} -> {}",
        IterantElement::one(Backend::Exact).to_text(),
        IterantElement::one(Backend::Exact).to_matrix()
    );
    println!("  eta = {} -> {}", eta.to_text(), eta.to_matrix());
    println!("  i   = {} -> {}", i.to_text(), i.to_matrix());

    // the matrix of i squares to -I, matching i*i = -1
    let matrix_i = i.to_matrix();
    println!("  i^2 as matrices: {}", matrix_i.mul(&matrix_i)?);

    // multiplication on either side of the map agrees
    let x = IterantElement::new(IterantView::from_ints(2, -1), IterantView::from_ints(3, 5))?;
    let y = IterantElement::new(IterantView::from_ints(0, 7), IterantView::from_ints(-4, 1))?;
    let through_algebra = x.mul(&y)?.to_matrix();
    let through_matrices = x.to_matrix().mul(&y.to_matrix())?;
    assert_eq!(through_algebra, through_matrices);
    println!("\nx*y through the algebra:   {through_algebra}");
    println!("x*y through the matrices:  {through_matrices}");

    // order matters: eta and i do not commute
    println!("\neta*i = {}", eta.mul(&i)?.to_text());
    println!("i*eta = {}", i.mul(&eta)?.to_text());

    // inverses come from the matrix determinant
    let back = IterantElement::from_matrix(&Matrix2::new(
        Scalar::from_int(0),
        Scalar::from_int(1),
        Scalar::from_int(1),
        Scalar::from_int(0),
    ));
    println!("\n[[0,1],[1,0]] pulls back to {} (eta)", back.to_text());
    println!("i^-1 = {} (equals -i)", i.inverse()?.to_text());
    Ok(())
}
