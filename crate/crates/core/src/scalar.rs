//! Floating-point abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar the spline machinery is generic over: `f32` or `f64`.
///
/// Everything the crate computes (sines, powers, series sums) only needs
/// ordinary IEEE arithmetic, so the bound is deliberately thin.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Exact conversion from a small index or frequency.
    #[inline]
    fn from_index(i: u64) -> Self {
        Self::from_u64(i).expect("index representable in scalar type")
    }

    #[inline]
    fn two_pi() -> Self {
        Self::TAU()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
