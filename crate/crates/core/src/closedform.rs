//! Closed-form state vector from switch-grouped path counts.
//!
//! Every extended string in a `(c, j, x)` group has the same amplitude,
//! `parity * cos^(n-j) * sin^j`, and ends in the same coin state. The state
//! at step `n` is therefore
//!
//! ```text
//! amp(b, x) = sum over c in {B, F}, j with final_coin(c, j) = b of
//!             a_c * extended_count(c, n, x, j) * parity(c, n, x, j)
//!                 * cos^(n-j) * sin^j
//! ```
//!
//! with `a_B = alpha` and `a_F = beta e^{i phi}`. That is `O(n^2)` groups
//! instead of `2^(n+1)` paths.
//!
//! The group terms alternate in sign and grow like `2^(n/2)` while the sum
//! stays below one, so no floating-point accumulation survives large `n`.
//! [`closed_state`] evaluates the trig powers in fixed point with
//! `n + 96` fractional bits and sums the terms as exact big integers; only
//! the final per-state sums are rounded to `f64`. The result does not
//! depend on summation order, so the parallel mode is bit-identical to the
//! sequential one.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::binomial::BinomialTable;
use crate::combinatorics::{self, group_term, ShiftCounts};
use crate::error::Result;
use crate::scaled::{frexp, ldexp, ScaledFloat};
use crate::spec::{Angle, WalkSpec};
use crate::state::StateVector;
use crate::string::Letter;

/// Fractional bits beyond `n` used for the fixed-point trig powers.
const GUARD_BITS: usize = 96;

/// Signed contribution of one switch group, before initial-coin weighting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentAmplitude {
    pub coin: u8,
    pub x: i64,
    pub value: ScaledFloat,
}

impl ComponentAmplitude {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// `extended_count * parity * cos^(n-j) * sin^j` for the `(c, j, x)` group,
/// in exponent-tracked arithmetic. Empty groups give zero at the coin the
/// group would end in.
pub fn component_amplitude(
    c: Letter,
    n: usize,
    x: i64,
    j: usize,
    theta: Angle,
) -> ComponentAmplitude {
    let coin = combinatorics::final_coin(c, j);
    let count = combinatorics::extended_count(c, n, x, j);
    if count.is_zero() || j > n {
        return ComponentAmplitude {
            coin,
            x,
            value: ScaledFloat::ZERO,
        };
    }
    let sign = combinatorics::parity_sign(c, n, x, j).expect("non-empty group");
    let trig = ScaledFloat::from_f64(theta.cos()).powi((n - j) as u64)
        * ScaledFloat::from_f64(theta.sin()).powi(j as u64);
    let value = ScaledFloat::from_biguint(&count) * trig;
    ComponentAmplitude {
        coin,
        x,
        value: if sign < 0 { value.negated() } else { value },
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClosedOptions {
    /// Evaluate positions on the rayon pool. Output is identical.
    pub parallel: bool,
}

pub fn closed_state(spec: &WalkSpec) -> Result<StateVector> {
    closed_state_with(spec, ClosedOptions::default())
}

pub fn closed_state_with(spec: &WalkSpec, opts: ClosedOptions) -> Result<StateVector> {
    spec.validate()?;
    let n = spec.n;
    let weights = TrigWeights::new(n, spec.theta);
    let table = BinomialTable::new(n + 1);
    let letters: Vec<Letter> = [
        (Letter::B, spec.alpha != 0.0),
        (Letter::F, spec.beta != 0.0),
    ]
    .into_iter()
    .filter_map(|(l, used)| used.then_some(l))
    .collect();

    let positions: Vec<i64> = (0..=n as i64).map(|k| 2 * k - n as i64).collect();
    let eval = |&x: &i64| -> [[f64; 2]; 2] {
        let mut sums = [[0.0; 2]; 2];
        for &c in &letters {
            sums[c.coin() as usize] = group_sums(&table, &weights, c, n, x);
        }
        sums
    };
    let sums: Vec<[[f64; 2]; 2]> = if opts.parallel {
        positions.par_iter().map(eval).collect()
    } else {
        positions.iter().map(eval).collect()
    };

    let (wb, wf) = (spec.weight_b(), spec.weight_f());
    let mut out = StateVector::zeros(n);
    for (&x, s) in positions.iter().zip(&sums) {
        for coin in 0..2u8 {
            let b = s[0][coin as usize];
            let f = s[1][coin as usize];
            if b != 0.0 || f != 0.0 {
                out.set(coin, x, wb * b + wf * f);
            }
        }
    }
    Ok(out)
}

/// Exact real sums `S_c(coin, x)` for both final coins, rounded to `f64`.
fn group_sums(table: &BinomialTable, w: &TrigWeights, c: Letter, n: usize, x: i64) -> [f64; 2] {
    let sc = ShiftCounts::new(n, x).expect("reachable position");
    let mut acc = [BigInt::zero(), BigInt::zero()];
    for j in 0..=n {
        let Some(term) = group_term(table, c, sc, j) else {
            continue;
        };
        let wj = &w.products[j];
        if wj.is_zero() {
            continue;
        }
        let count = term.lead_factor * term.other_factor;
        let mut v = BigInt::from_biguint(Sign::Plus, count) * wj;
        if term.negative {
            v = -v;
        }
        acc[term.final_coin as usize] += v;
    }
    acc.map(|a| fixed_to_f64(&a, 2 * w.precision))
}

/// `cos^(n-j) * sin^j` for `j = 0..=n` as integers scaled by `2^(2P)`.
struct TrigWeights {
    precision: usize,
    products: Vec<BigInt>,
}

impl TrigWeights {
    fn new(n: usize, theta: Angle) -> TrigWeights {
        let precision = n + GUARD_BITS;
        let cos_pow = fixed_powers(theta.cos(), n, precision);
        let sin_pow = fixed_powers(theta.sin(), n, precision);
        let products = (0..=n).map(|j| &cos_pow[n - j] * &sin_pow[j]).collect();
        TrigWeights {
            precision,
            products,
        }
    }
}

/// `v^k * 2^P` for `k = 0..=n`, truncated after each multiplication.
/// `v^0 = 1` for every `v`, zero included.
fn fixed_powers(v: f64, n: usize, precision: usize) -> Vec<BigInt> {
    let base = f64_to_fixed(v, precision);
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one() << precision);
    for k in 1..=n {
        let next = (&out[k - 1] * &base) >> precision;
        out.push(next);
    }
    out
}

/// `v * 2^P`, exact when the result is an integer, floored otherwise.
fn f64_to_fixed(v: f64, precision: usize) -> BigInt {
    if v == 0.0 {
        return BigInt::zero();
    }
    let (m, e) = frexp(v);
    // m * 2^53 is an exact integer
    let mant = BigInt::from((m * (1u64 << 53) as f64) as i64);
    let shift = e - 53 + precision as i64;
    if shift >= 0 {
        mant << shift as usize
    } else {
        mant >> (-shift) as usize
    }
}

/// `v / 2^scale` rounded to the nearest `f64` (to within one ulp).
fn fixed_to_f64(v: &BigInt, scale: usize) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    let mag: BigUint = v.abs().to_biguint().expect("non-negative");
    let s = ScaledFloat::from_biguint(&mag);
    let out = ldexp(s.mantissa(), s.exponent() - scale as i64);
    if v.is_negative() {
        -out
    } else {
        out
    }
}
