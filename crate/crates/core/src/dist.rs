//! Parametric univariate distributions used as priors and posteriors.

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Gaussian parameterised by mean and variance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gaussian<F> {
    mean: F,
    variance: F,
}

impl<F: Scalar> Gaussian<F> {
    pub fn new(mean: F, variance: F) -> Result<Self> {
        if !(variance > F::zero()) || !variance.is_finite() || !mean.is_finite() {
            return Err(Error::invalid(format!(
                "Gaussian requires finite mean and variance > 0, got mean={mean}, variance={variance}"
            )));
        }
        Ok(Gaussian { mean, variance })
    }

    pub fn standard() -> Self {
        Gaussian {
            mean: F::zero(),
            variance: F::one(),
        }
    }

    pub fn mean(&self) -> F {
        self.mean
    }

    pub fn variance(&self) -> F {
        self.variance
    }

    pub fn sd(&self) -> F {
        self.variance.sqrt()
    }

    pub fn pdf(&self, x: F) -> F {
        let two = F::from_f64(2.0);
        let tau = F::from_f64(std::f64::consts::TAU);
        let z = x - self.mean;
        (-z * z / (two * self.variance)).exp() / (tau * self.variance).sqrt()
    }

    pub fn cdf(&self, x: F) -> F {
        ((x - self.mean) / self.sd()).normal_cdf()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> F {
        self.mean + self.sd() * F::standard_normal(rng)
    }

    /// `count` i.i.d. draws; deterministic given the generator state.
    pub fn sample_n<R: Rng + ?Sized>(&self, count: usize, rng: &mut R) -> Vec<F> {
        (0..count).map(|_| self.sample(rng)).collect()
    }
}

/// Exact KL divergence `KL(p ‖ q)` between two Gaussians.
pub fn kl_gaussian<F: Scalar>(p: &Gaussian<F>, q: &Gaussian<F>) -> F {
    let half = F::from_f64(0.5);
    let dm = p.mean - q.mean;
    let ratio = p.variance / q.variance;
    let kl = half * (ratio + dm * dm / q.variance - F::one() - ratio.ln());
    // The closed form is non-negative; rounding can leave a tiny negative.
    kl.max(F::zero())
}

/// Scaled inverse chi-squared: `Inv-χ²(ν, s²) = Inv-Gamma(ν/2, νs²/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledInvChiSq<F> {
    dof: F,
    scale_sq: F,
}

impl<F: Scalar> ScaledInvChiSq<F> {
    pub fn new(dof: F, scale_sq: F) -> Result<Self> {
        if !(dof > F::zero()) || !(scale_sq > F::zero()) || !dof.is_finite() || !scale_sq.is_finite() {
            return Err(Error::invalid(format!(
                "Inv-χ² requires ν > 0 and s² > 0, got ν={dof}, s²={scale_sq}"
            )));
        }
        Ok(ScaledInvChiSq { dof, scale_sq })
    }

    pub fn dof(&self) -> F {
        self.dof
    }

    pub fn scale_sq(&self) -> F {
        self.scale_sq
    }

    /// `ν/(ν−2)·s²`, defined for ν > 2.
    pub fn mean(&self) -> Option<F> {
        let two = F::from_f64(2.0);
        (self.dof > two).then(|| self.dof / (self.dof - two) * self.scale_sq)
    }

    /// `2ν²/((ν−2)²(ν−4))·s⁴`, defined for ν > 4.
    pub fn variance(&self) -> Option<F> {
        let two = F::from_f64(2.0);
        let four = F::from_f64(4.0);
        (self.dof > four).then(|| {
            let nm2 = self.dof - two;
            two * self.dof * self.dof / (nm2 * nm2 * (self.dof - four))
                * self.scale_sq
                * self.scale_sq
        })
    }

    pub fn pdf(&self, x: F) -> F {
        if x <= F::zero() {
            return F::zero();
        }
        let half = F::from_f64(0.5);
        let half_nu = half * self.dof;
        let log_pdf = half_nu * (half_nu.ln() + self.scale_sq.ln()) - half_nu.ln_gamma()
            - (half_nu + F::one()) * x.ln()
            - half_nu * self.scale_sq / x;
        log_pdf.exp()
    }

    /// Draw via the Inv-Gamma(ν/2, νs²/2) reparameterisation: sample a Gamma
    /// and take the scaled reciprocal. Always strictly positive.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> F {
        let half = F::from_f64(0.5);
        let g = F::standard_gamma(half * self.dof, rng);
        half * self.dof * self.scale_sq / g
    }

    pub fn sample_n<R: Rng + ?Sized>(&self, count: usize, rng: &mut R) -> Vec<F> {
        (0..count).map(|_| self.sample(rng)).collect()
    }
}

/// Location-scale Student-t with squared scale, as in the marginal posterior
/// of a Gaussian mean under the NIX model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StudentT<F> {
    dof: F,
    location: F,
    scale_sq: F,
}

impl<F: Scalar> StudentT<F> {
    pub fn new(dof: F, location: F, scale_sq: F) -> Result<Self> {
        if !(dof > F::zero()) || !(scale_sq > F::zero()) || !location.is_finite() {
            return Err(Error::invalid(format!(
                "Student-t requires ν > 0 and squared scale > 0, got ν={dof}, scale²={scale_sq}"
            )));
        }
        Ok(StudentT {
            dof,
            location,
            scale_sq,
        })
    }

    pub fn dof(&self) -> F {
        self.dof
    }

    pub fn location(&self) -> F {
        self.location
    }

    pub fn scale_sq(&self) -> F {
        self.scale_sq
    }

    pub fn mean(&self) -> Option<F> {
        (self.dof > F::one()).then_some(self.location)
    }

    pub fn variance(&self) -> Option<F> {
        let two = F::from_f64(2.0);
        (self.dof > two).then(|| self.dof / (self.dof - two) * self.scale_sq)
    }

    pub fn pdf(&self, x: F) -> F {
        let half = F::from_f64(0.5);
        let one = F::one();
        let pi = F::from_f64(std::f64::consts::PI);
        let z2 = (x - self.location) * (x - self.location) / self.scale_sq;
        let log_norm = (half * (self.dof + one)).ln_gamma()
            - (half * self.dof).ln_gamma()
            - half * (self.dof * pi * self.scale_sq).ln();
        (log_norm - half * (self.dof + one) * (one + z2 / self.dof).ln()).exp()
    }

    /// Draw as location + scale · z / √(χ²_ν / ν).
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> F {
        let half = F::from_f64(0.5);
        let two = F::from_f64(2.0);
        let z = F::standard_normal(rng);
        let chi2 = two * F::standard_gamma(half * self.dof, rng);
        self.location + self.scale_sq.sqrt() * z / (chi2 / self.dof).sqrt()
    }

    pub fn sample_n<R: Rng + ?Sized>(&self, count: usize, rng: &mut R) -> Vec<F> {
        (0..count).map(|_| self.sample(rng)).collect()
    }
}

/// A one-dimensional parametric posterior summary, the common currency
/// between downstream analyzers and the mixing engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Marginal<F> {
    Gaussian(Gaussian<F>),
    ScaledInvChiSq(ScaledInvChiSq<F>),
    StudentT(StudentT<F>),
}

impl<F: Scalar> Marginal<F> {
    pub fn pdf(&self, x: F) -> F {
        match self {
            Marginal::Gaussian(d) => d.pdf(x),
            Marginal::ScaledInvChiSq(d) => d.pdf(x),
            Marginal::StudentT(d) => d.pdf(x),
        }
    }

    pub fn mean(&self) -> Option<F> {
        match self {
            Marginal::Gaussian(d) => Some(d.mean()),
            Marginal::ScaledInvChiSq(d) => d.mean(),
            Marginal::StudentT(d) => d.mean(),
        }
    }

    pub fn variance(&self) -> Option<F> {
        match self {
            Marginal::Gaussian(d) => Some(d.variance()),
            Marginal::ScaledInvChiSq(d) => d.variance(),
            Marginal::StudentT(d) => d.variance(),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> F {
        match self {
            Marginal::Gaussian(d) => d.sample(rng),
            Marginal::ScaledInvChiSq(d) => d.sample(rng),
            Marginal::StudentT(d) => d.sample(rng),
        }
    }

    pub fn sample_n<R: Rng + ?Sized>(&self, count: usize, rng: &mut R) -> Vec<F> {
        (0..count).map(|_| self.sample(rng)).collect()
    }

    /// A dispersion scale for grid construction: the standard deviation when
    /// it exists, otherwise the square root of the squared scale parameter.
    pub fn spread(&self) -> F {
        match self.variance() {
            Some(v) => v.sqrt(),
            None => match self {
                Marginal::Gaussian(d) => d.sd(),
                Marginal::ScaledInvChiSq(d) => d.scale_sq(),
                Marginal::StudentT(d) => d.scale_sq().sqrt(),
            },
        }
    }

    /// A location for grid construction: the mean when it exists, otherwise
    /// the distribution's natural centre.
    pub fn centre(&self) -> F {
        match self.mean() {
            Some(m) => m,
            None => match self {
                Marginal::Gaussian(d) => d.mean(),
                Marginal::ScaledInvChiSq(d) => d.scale_sq(),
                Marginal::StudentT(d) => d.location(),
            },
        }
    }
}
