//! Scalar abstraction shared by the geometric modules.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type the geometry is computed in (`f32` or `f64`).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal; exact for `f64`, rounded for `f32`.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    fn from_usize_lossy(v: usize) -> Self {
        Self::from_usize(v).expect("representable count")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// `cos` and `sin` of `pi * num / den` with exact values on the quadrant points.
pub(crate) fn cos_sin_pi_frac<T: Scalar>(num: usize, den: usize) -> (T, T) {
    let two_den = 2 * den;
    let m = num % two_den;
    // multiples of pi/2
    if (2 * m).is_multiple_of(den) {
        return match (2 * m) / den {
            0 => (T::one(), T::zero()),
            1 => (T::zero(), T::one()),
            2 => (-T::one(), T::zero()),
            _ => (T::zero(), -T::one()),
        };
    }
    let angle = T::PI() * T::from_usize_lossy(m) / T::from_usize_lossy(den);
    (angle.cos(), angle.sin())
}
