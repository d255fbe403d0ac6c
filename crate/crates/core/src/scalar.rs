//! The floating-point scalar the numeric side of the engine is generic over.

use nalgebra::RealField;
use num_complex::Complex;
use num_rational::Ratio;
use num_traits::ToPrimitive;

/// Real scalar usable for representation matrices: `f32` or `f64`.
pub trait Real: RealField + Copy + ToPrimitive {
    fn lit(x: f64) -> Self {
        nalgebra::convert(x)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `exp(2πiθ)` for an exact angle `θ` measured in turns.
pub fn root_of_unity<T: Real>(turns: Ratio<i64>) -> Complex<T> {
    let x = std::f64::consts::TAU * (*turns.numer() as f64 / *turns.denom() as f64);
    Complex::new(T::lit(x.cos()), T::lit(x.sin()))
}

/// Reduces an angle into `[0, 1)`.
pub fn reduce_turns(t: Ratio<i64>) -> Ratio<i64> {
    t - t.floor()
}
