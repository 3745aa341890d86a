pub mod dialgebra;
pub mod graph;
pub mod linear;
pub mod scalar;
pub mod suites;
pub mod surface;
pub mod textfmt;
pub mod tqft;

pub use scalar::Scalar;

/// Default exact scalar.
pub type Rational = num_rational::BigRational;
/// Fixed-width rationals; overflow panics, so only for small examples.
pub type Rational64 = num_rational::Rational64;
