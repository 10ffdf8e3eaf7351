//! The nested-box recursion and its eigenform.
//!
//! Enclosing in one more box never fixes a finite expression, but the
//! reentry marker `*` — the expression referring to itself — gives a
//! finite token `[*]` that unfolding leaves invariant.
//!
//! ```bash
//! cargo run --example nested_boxes
//! ```

use iterants::eigenform::{enclose, iterate_boxes, reentry_eigenform, unfold, FormExpr};

fn main() -> iterants::Result<()> {
    println!("the recursion: enclose the previous step in a box");
    for n in 0..6 {
        println!("  step {n}: {}", iterate_boxes(n).render());
    }

    let x = reentry_eigenform();
    println!(
        "\nthe eigenform {} unfolds without ever changing form:",
        x.render()
    );
    for k in 0..6 {
        let truncated = unfold(&x, k)?;
        let boxed = enclose(truncated.clone());
        println!(
            "  unfold {k}: {}  (one more box: {})",
            truncated.render(),
            boxed.render()
        );
        assert_eq!(boxed, unfold(&x, k + 1)?);
    }

    // unfolding composes additively
    let twice = unfold(&unfold(&x, 3)?, 4)?;
    assert_eq!(twice, unfold(&x, 7)?);
    println!("\nunfold 3 then 4 = unfold 7: {}", twice.render());

    // the bracket text round-trips through the parser
    let parsed = FormExpr::parse("[[[*]]]")?;
    assert_eq!(parsed, unfold(&x, 2)?);
    println!("parsed \"[[[*]]]\" back to depth {}", parsed.depth());
    Ok(())
}
