use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::Float;
use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

/// Floating-point scalar the numeric core is generic over.
///
/// Extends [`num_traits::Float`] with the sampling and special-function hooks
/// the samplers need, so generic code never has to spell out `rand_distr`
/// bounds. Implemented for `f32` and `f64`; the special functions run in
/// double precision internally either way.
pub trait Scalar: Float + Sum<Self> + Debug + Display + Send + Sync + 'static {
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;

    fn from_usize(n: usize) -> Self {
        Self::from_f64(n as f64)
    }

    /// One draw from N(0, 1).
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One draw from Gamma(shape, scale = 1).
    fn standard_gamma<R: Rng + ?Sized>(shape: Self, rng: &mut R) -> Self;

    /// One draw from the half-open unit interval [0, 1).
    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn erf(self) -> Self;
    fn erfc(self) -> Self;
    fn ln_gamma(self) -> Self;

    /// Standard normal CDF.
    fn normal_cdf(self) -> Self {
        let half = Self::from_f64(0.5);
        let sqrt2 = Self::from_f64(std::f64::consts::SQRT_2);
        half * (-self / sqrt2).erfc()
    }
}

impl Scalar for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }

    fn to_f64(self) -> f64 {
        self
    }

    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn standard_gamma<R: Rng + ?Sized>(shape: Self, rng: &mut R) -> Self {
        Gamma::new(shape, 1.0).expect("gamma shape must be positive").sample(rng)
    }

    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random::<f64>()
    }

    fn erf(self) -> Self {
        libm::erf(self)
    }

    fn erfc(self) -> Self {
        libm::erfc(self)
    }

    fn ln_gamma(self) -> Self {
        libm::lgamma(self)
    }
}

impl Scalar for f32 {
    fn from_f64(v: f64) -> Self {
        v as f32
    }

    fn to_f64(self) -> f64 {
        self as f64
    }

    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn standard_gamma<R: Rng + ?Sized>(shape: Self, rng: &mut R) -> Self {
        Gamma::new(shape, 1.0f32).expect("gamma shape must be positive").sample(rng)
    }

    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random::<f32>()
    }

    fn erf(self) -> Self {
        libm::erf(self as f64) as f32
    }

    fn erfc(self) -> Self {
        libm::erfc(self as f64) as f32
    }

    fn ln_gamma(self) -> Self {
        libm::lgamma(self as f64) as f32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erf_reference_values() {
        // Abramowitz & Stegun table values.
        assert!((1.0f64.erf() - 0.8427007929497149).abs() < 1e-15);
        assert!((0.5f64.erfc() - 0.4795001221869535).abs() < 1e-15);
        assert!((5.0f64.ln_gamma() - 24.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn normal_cdf_symmetry() {
        let x = 0.7f64;
        assert!((x.normal_cdf() + (-x).normal_cdf() - 1.0).abs() < 1e-15);
        assert!((0.0f64.normal_cdf() - 0.5).abs() < 1e-16);
    }
}
