//! Exact scalar fields.
//!
//! All algebra in this crate is generic over [`Scalar`], which is implemented for
//! every `num_rational::Ratio<T>` with a signed integer `T`. The default field is
//! [`crate::Rational`] (arbitrary precision); `Ratio<i64>` is handy for small
//! experiments where overflow is not a concern.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact field element. Equality must be exact; no tolerance is ever applied.
pub trait Scalar: Num + Signed + Clone + Debug + Send + Sync + 'static {
    fn from_int(n: i64) -> Self;

    /// Canonical `p/q` text, always with an explicit denominator.
    fn to_fraction(&self) -> String;

    /// Parses `p/q` or a bare integer `p`.
    fn parse_fraction(s: &str) -> Option<Self>;
}

impl<T> Scalar for Ratio<T>
where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer out of range for scalar"))
    }

    fn to_fraction(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_fraction(s: &str) -> Option<Self> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p = T::from_str_radix(p.trim(), 10).ok()?;
        let q = T::from_str_radix(q.trim(), 10).ok()?;
        if q.is_zero() {
            return None;
        }
        // Ratio::new reduces and moves the sign onto the numerator.
        Some(Ratio::new(p, q))
    }
}
