//! Real numbers with a detached base-2 exponent.
//!
//! Single closed-form terms combine a multiplicity that can reach `2^1000`
//! with trig powers that can fall below `2^-1000`; the product itself is
//! moderate. Carrying the exponent separately keeps every intermediate in
//! range.

use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// `mantissa * 2^exponent`, with `|mantissa|` in `[0.5, 1)` or exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledFloat {
    mantissa: f64,
    exponent: i64,
}

impl ScaledFloat {
    pub const ZERO: ScaledFloat = ScaledFloat {
        mantissa: 0.0,
        exponent: 0,
    };

    pub const ONE: ScaledFloat = ScaledFloat {
        mantissa: 0.5,
        exponent: 1,
    };

    pub fn from_f64(v: f64) -> ScaledFloat {
        assert!(v.is_finite(), "non-finite value {v}");
        let (m, e) = frexp(v);
        ScaledFloat {
            mantissa: m,
            exponent: e,
        }
    }

    /// Rounds to the top 64 bits of `v`.
    pub fn from_biguint(v: &BigUint) -> ScaledFloat {
        if v.is_zero() {
            return ScaledFloat::ZERO;
        }
        let bits = v.bits() as i64;
        let shift = (bits - 64).max(0);
        let top = (v >> shift as usize).to_u64().unwrap() as f64;
        let mut s = ScaledFloat::from_f64(top);
        s.exponent += shift;
        s
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    pub fn negated(self) -> ScaledFloat {
        ScaledFloat {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }

    /// `self^k` by repeated squaring; `0^0 = 1`.
    pub fn powi(self, mut k: u64) -> ScaledFloat {
        let mut base = self;
        let mut acc = ScaledFloat::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            k >>= 1;
            if k > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// Nearest `f64`; underflows to zero and overflows to infinity.
    pub fn to_f64(self) -> f64 {
        ldexp(self.mantissa, self.exponent)
    }
}

impl Mul for ScaledFloat {
    type Output = ScaledFloat;

    fn mul(self, rhs: ScaledFloat) -> ScaledFloat {
        let p = self.mantissa * rhs.mantissa;
        if p == 0.0 {
            return ScaledFloat::ZERO;
        }
        let (m, e) = frexp(p);
        ScaledFloat {
            mantissa: m,
            exponent: self.exponent + rhs.exponent + e,
        }
    }
}

/// Splits finite `v` into `m * 2^e` with `|m|` in `[0.5, 1)`.
pub(crate) fn frexp(v: f64) -> (f64, i64) {
    if v == 0.0 {
        return (0.0, 0);
    }
    let bits = v.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    if raw_exp == 0 {
        // subnormal: scale into the normal range first
        let (m, e) = frexp(v * 2f64.powi(64));
        return (m, e - 64);
    }
    let e = raw_exp - 1022;
    let m = f64::from_bits((bits & !(0x7ff << 52)) | (1022 << 52));
    (m, e)
}

/// `m * 2^e`, stepping the scale so intermediates stay representable.
pub(crate) fn ldexp(m: f64, mut e: i64) -> f64 {
    let mut v = m;
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
        if v.is_infinite() {
            return v;
        }
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
        if v == 0.0 {
            return v;
        }
    }
    v * 2f64.powi(e as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial;

    #[test]
    fn frexp_round_trips() {
        for v in [1.0, -3.5, 1e-310, 6.02e23, -1e300, 0.75] {
            let (m, e) = frexp(v);
            assert!((0.5..1.0).contains(&m.abs()));
            assert_eq!(ldexp(m, e), v);
        }
    }

    #[test]
    fn large_multiplicity_times_tiny_power_is_moderate() {
        // C(1000, 500) * 2^-1000 stays accurate through the scaled path
        let c = ScaledFloat::from_biguint(&binomial(1000, 500));
        let half = ScaledFloat::from_f64(0.5);
        let term = c * half.powi(1000);
        // log2 C(1000,500) = 994.6909991192327
        let expected = (994.6909991192327f64 - 1000.0).exp2();
        assert!((term.to_f64() / expected - 1.0).abs() < 1e-8);
        let naive = 0.5f64.powi(1100) * 2f64.powi(100);
        assert_eq!(naive, 0.0);
        let good = half.powi(1100) * ScaledFloat::from_f64(2f64.powi(100));
        assert!((good.to_f64() - 2f64.powi(-1000)).abs() < 1e-310);
    }

    #[test]
    fn zero_power_is_one() {
        assert_eq!(ScaledFloat::ZERO.powi(0).to_f64(), 1.0);
        assert_eq!(ScaledFloat::ZERO.powi(3).to_f64(), 0.0);
        assert_eq!(ScaledFloat::from_f64(-2.0).powi(3).to_f64(), -8.0);
    }
}
