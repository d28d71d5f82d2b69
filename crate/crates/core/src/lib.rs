//! Exact real solving for bounded smooth hypersurfaces `{f = 0}`.
//!
//! The library locates at least one real algebraic point on every connected
//! component of the real zero set of a squarefree polynomial with rational
//! coefficients. It works entirely in exact arithmetic: the input is compiled
//! to a division-free straight-line program, successive polar critical
//! systems are built from its gradient, each zero-dimensional system is
//! solved into a univariate representation `(u, q, p_1..p_n)`, the eliminant
//! is cleaned down to its factors with real roots, and the surviving roots
//! are isolated and refined to certified rational intervals.
//!
//! Modules follow the pipeline order:
//!
//! * [`exact_arith`] — big-rational scalars, univariate/multivariate
//!   polynomials, Sturm sequences, factorization over Q.
//! * [`slp`] — straight-line program IR: parsing, evaluation, reverse-mode
//!   gradients, size metrics.
//! * [`zerodim`] — Buchberger-based solver producing univariate
//!   representations of saturated critical systems.
//! * [`geometry`] — generic coordinate changes, polar system construction,
//!   rank certificates.
//! * [`realpart`] — specialization, eliminant cleaning, degree profiles.
//! * [`realroots`] — Sturm isolation, bisection refinement, point extraction.
//! * [`oracle`] — grid-based component labeling used for desk-scale
//!   verification.
//! * [`report`] — the end-to-end pipeline and its machine-readable report.

pub mod error;
pub mod exact_arith;

pub use error::Error;
pub use exact_arith::{MultiPoly, Rational, SturmSequence, UniPoly};
