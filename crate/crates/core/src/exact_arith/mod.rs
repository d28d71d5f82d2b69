//! Exact arithmetic kernels: big rationals, univariate and multivariate
//! polynomials over Q, Sturm sequences, and factorization over Q.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so all of this is safe to call concurrently.

pub mod factor;
pub mod modp;
pub mod multipoly;
pub mod rational;
pub mod sturm;
pub mod unipoly;

pub use factor::factor_over_q;
pub use multipoly::MultiPoly;
pub use rational::Rational;
pub use sturm::{sturm_root_count, Endpoint, SturmSequence};
pub use unipoly::UniPoly;
