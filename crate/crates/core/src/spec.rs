use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{Result, WalkError};

/// Tolerance on `alpha^2 + beta^2 = 1`.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Coin angle with its cosine and sine fixed at construction.
///
/// Angles built from a rational multiple of pi land on exact values where
/// one exists, so the degenerate walks at `0` and `pi/2` see exact `0`/`1`
/// factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    radians: f64,
    cos: f64,
    sin: f64,
}

impl Angle {
    pub fn radians(theta: f64) -> Angle {
        Angle {
            radians: theta,
            cos: theta.cos(),
            sin: theta.sin(),
        }
    }

    /// `theta = (num / den) * pi`. Multiples of `pi/4` get exact or
    /// correctly rounded trig values.
    pub fn pi_fraction(num: i64, den: i64) -> Angle {
        assert!(den != 0, "zero denominator");
        let radians = num as f64 / den as f64 * PI;
        // reduce num/den mod 2 in units of 1/4
        if (4 * num) % den == 0 {
            let quarter = ((4 * num) / den).rem_euclid(8);
            let h = FRAC_1_SQRT_2;
            let (cos, sin) = match quarter {
                0 => (1.0, 0.0),
                1 => (h, h),
                2 => (0.0, 1.0),
                3 => (-h, h),
                4 => (-1.0, 0.0),
                5 => (-h, -h),
                6 => (0.0, -1.0),
                _ => (h, -h),
            };
            return Angle { radians, cos, sin };
        }
        Angle::radians(radians)
    }

    pub fn value(&self) -> f64 {
        self.radians
    }

    pub fn cos(&self) -> f64 {
        self.cos
    }

    pub fn sin(&self) -> f64 {
        self.sin
    }
}

/// Parameters of an `n`-step walk started at the origin in the coin state
/// `alpha |0> + e^{i phi} beta |1>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkSpec {
    pub n: usize,
    pub theta: Angle,
    pub alpha: f64,
    pub beta: f64,
    pub phi: f64,
}

impl WalkSpec {
    pub fn new(n: usize, theta: Angle, alpha: f64, beta: f64, phi: f64) -> Result<WalkSpec> {
        let spec = WalkSpec {
            n,
            theta,
            alpha,
            beta,
            phi,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Walk started in `|0>` (alpha = 1).
    pub fn coin_zero(n: usize, theta: Angle) -> WalkSpec {
        WalkSpec {
            n,
            theta,
            alpha: 1.0,
            beta: 0.0,
            phi: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("theta", self.theta.value()),
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("phi", self.phi),
        ] {
            if !v.is_finite() {
                return Err(WalkError::NonFinite(name));
            }
        }
        let norm = self.alpha * self.alpha + self.beta * self.beta;
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(WalkError::Unnormalized {
                alpha: self.alpha,
                beta: self.beta,
                norm,
            });
        }
        Ok(())
    }

    /// Amplitude of the `|0>` coin component at t = 0.
    pub fn weight_b(&self) -> Complex64 {
        Complex64::new(self.alpha, 0.0)
    }

    /// Amplitude of the `|1>` coin component at t = 0, `beta e^{i phi}`.
    pub fn weight_f(&self) -> Complex64 {
        Complex64::from_polar(self.beta, self.phi)
    }

    pub fn with_steps(mut self, n: usize) -> WalkSpec {
        self.n = n;
        self
    }

    pub fn with_theta(mut self, theta: Angle) -> WalkSpec {
        self.theta = theta;
        self
    }
}
