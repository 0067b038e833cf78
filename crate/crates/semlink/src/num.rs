//! Scalar abstraction for the numeric core.
//!
//! Everything downstream of the modem (channel sampling, detection, filter
//! kernels, quality metrics) is generic over [`Real`], so the same code runs
//! in `f32` or `f64`. The pipeline and CLI instantiate `f64`; the aliases at
//! the crate root fix that choice in one place.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssign};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// One draw from the standard normal distribution N(0, 1).
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Real for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

impl Real for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

/// Lossy conversion from `f64` literals into the working scalar.
pub(crate) fn cast<T: Real>(v: f64) -> T {
    T::from_f64(v).expect("f64 constant not representable in scalar type")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn standard_normal_moments_f32_and_f64() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let n = 200_000;
        let mut sum = 0.0f64;
        let mut sumsq = 0.0f64;
        for _ in 0..n {
            let x: f64 = f64::standard_normal(&mut rng);
            sum += x;
            sumsq += x * x;
        }
        let mean = sum / n as f64;
        let var = sumsq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");

        let x: f32 = f32::standard_normal(&mut rng);
        assert!(x.is_finite());
    }
}
