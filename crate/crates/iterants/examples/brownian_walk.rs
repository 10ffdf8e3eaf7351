//! Random walks make the commutator constant.
//!
//! `[x, Dx] = J (dx)^2 / dt` is constant exactly when every increment is
//! `±sqrt(K dt)` — a random walk with diffusion constant K. The sign
//! stream is seeded SplitMix64, so paths reproduce bit for bit.
//!
//! ```bash
//! cargo run --example brownian_walk
//! ```

use iterants::calculus::{brownian_endpoint_variance, brownian_path, TimeGrid};
use iterants::scalar::Scalar;

fn main() -> iterants::Result<()> {
    let dt = 0.01;
    let k = 2.0;
    let grid = TimeGrid::new(Scalar::from_f64(dt), 1000)?;
    let path = brownian_path(&Scalar::from_f64(k), &grid, 7)?;

    println!("walk with K = {k}, dt = {dt}, 1000 steps, seed 7");
    println!("first samples:");
    for i in 0..6 {
        println!("  x({}) = {}", grid.time_at(i), path.get(i).expect("valid"));
    }
    println!("endpoint x(10) = {}", path.get(1000).expect("valid"));

    // every step realizes (dx)^2/dt = K, not merely on average
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let dx = path.get(i + 1).expect("valid").to_f64() - path.get(i).expect("valid").to_f64();
        worst = worst.max(((dx * dx / dt) - k).abs() / k);
    }
    println!("max relative deviation of (dx)^2/dt from K: {worst:e}");
    assert!(worst <= 2f64.powi(-45));

    // endpoint spread over many seeds matches K * t
    let short_grid = TimeGrid::new(Scalar::from_f64(dt), 100)?;
    let variance = brownian_endpoint_variance(&Scalar::from_f64(k), &short_grid, 10_000)?;
    println!(
        "variance of x(1) over 10000 seeds: {variance:.4} (expected {})",
        k * 100.0 * dt
    );

    // identical seeds give identical paths
    let again = brownian_path(&Scalar::from_f64(k), &grid, 7)?;
    assert_eq!(path, again);
    println!("rerun with seed 7 is identical: true");
    Ok(())
}
