//! Iterant algebra, eigenforms, and a noncommutative discrete calculus.
//!
//! The library has four layers:
//!
//! - [`iterant`]: two-phase oscillations `[a,b]`, the half-period shift
//!   operator `eta`, the full iterant algebra (isomorphic to 2x2 matrices),
//!   and the embedding of the complex numbers. The square root of minus one
//!   is obtained as `i = [1,-1]eta`.
//! - [`eigenform`]: fixed points of recursive processes. Nested-box
//!   expressions with a reentry marker, finite unfolding of the infinite
//!   nest, and generic orbit detection for iterated maps such as
//!   `x -> -1/x`.
//! - [`calculus`]: time series on a uniform grid, the time-shift operator
//!   `J` with `x(t) J = J x(t + dt)`, the shifted discrete derivative, and
//!   commutators. The commutator `[x, Dx] = J (dx)^2 / dt` is verified
//!   sample-exactly, and random walks with `dx = ±sqrt(K dt)` realize a
//!   constant `(dx)^2 / dt = K`.
//! - [`quantum`]: the substitution `t -> it` turning the Euclidean
//!   quadratic form into the hyperbolic one, eigenpair verification over
//!   iterant-complex scalars, plane-wave derivative checks, and the checked
//!   algebraic pipeline that ends in `[p,q] = i*hbar`.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so all types are safe to share across threads.
//!
//! Each capability has a runnable example under `examples/`; the `iterants`
//! binary exposes the same reports as subcommands.

pub mod calculus;
pub mod eigenform;
pub mod error;
pub mod iterant;
pub mod quantum;
pub mod rng;
pub mod scalar;
pub mod selftest;

pub use error::Error;
pub use iterant::{IterantElement, IterantView, Matrix2};
pub use scalar::{Backend, Scalar};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
