//! Brute-force sum over Feynman paths.
//!
//! Every extended string of an `n`-step walk is enumerated in lexicographic
//! order (B < F). Its amplitude is the product of the one-step factors in
//! [`TransitionRule`], weighted by the initial coin amplitude, and added to
//! the basis state named by its last letter and endpoint. Cost is
//! `O(2^n)`; this module exists as an oracle.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Result, WalkError};
use crate::spec::{Angle, WalkSpec};
use crate::state::StateVector;
use crate::string::{ExtendedString, Letter};

pub const DEFAULT_CAP: usize = 20;
pub const MAX_CAP: usize = 26;

/// Amplitude factor picked up by one transition between adjacent letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransitionRule {
    pub from: Letter,
    pub to: Letter,
}

/// Which trig value a transition contributes, with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Cos,
    Sin,
    NegCos,
}

impl TransitionRule {
    pub const ALL: [TransitionRule; 4] = [
        TransitionRule {
            from: Letter::B,
            to: Letter::B,
        },
        TransitionRule {
            from: Letter::B,
            to: Letter::F,
        },
        TransitionRule {
            from: Letter::F,
            to: Letter::B,
        },
        TransitionRule {
            from: Letter::F,
            to: Letter::F,
        },
    ];

    pub fn factor(&self) -> Factor {
        match (self.from, self.to) {
            (Letter::B, Letter::B) => Factor::Cos,
            (Letter::F, Letter::F) => Factor::NegCos,
            _ => Factor::Sin,
        }
    }

    pub fn amplitude(&self, theta: Angle) -> f64 {
        match self.factor() {
            Factor::Cos => theta.cos(),
            Factor::Sin => theta.sin(),
            Factor::NegCos => -theta.cos(),
        }
    }
}

#[inline]
fn factor(from: Letter, to: Letter, theta: Angle) -> f64 {
    TransitionRule { from, to }.amplitude(theta)
}

/// Product of the one-step factors along `s`, left to right.
pub fn path_amplitude(s: &ExtendedString, theta: Angle) -> f64 {
    s.letters()
        .windows(2)
        .fold(1.0, |acc, w| acc * factor(w[0], w[1], theta))
}

/// Enumeration limits for [`sum_over_paths`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathOptions {
    pub cap: usize,
    /// Split the enumeration by string prefix across threads. Results agree
    /// with the sequential order to summation-order rounding.
    pub parallel: bool,
}

impl Default for PathOptions {
    fn default() -> Self {
        PathOptions {
            cap: DEFAULT_CAP,
            parallel: false,
        }
    }
}

impl PathOptions {
    pub fn with_cap(cap: usize) -> Result<PathOptions> {
        if cap > MAX_CAP {
            return Err(WalkError::CapTooLarge {
                requested: cap,
                limit: MAX_CAP,
            });
        }
        Ok(PathOptions {
            cap,
            ..PathOptions::default()
        })
    }
}

/// Sum over all `2^(n+1)` extended strings with the default options.
pub fn sum_over_paths(spec: &WalkSpec) -> Result<StateVector> {
    sum_over_paths_with(spec, PathOptions::default())
}

pub fn sum_over_paths_with(spec: &WalkSpec, opts: PathOptions) -> Result<StateVector> {
    spec.validate()?;
    if spec.n > opts.cap {
        return Err(WalkError::PathCapExceeded {
            n: spec.n,
            cap: opts.cap,
        });
    }
    let n = spec.n;
    let starts = [(Letter::B, spec.weight_b()), (Letter::F, spec.weight_f())];
    if !opts.parallel || n < 8 {
        let mut out = StateVector::zeros(n);
        for (letter, weight) in starts {
            descend(&mut out, spec.theta, n, letter, weight, 0);
        }
        return Ok(out);
    }

    // fix the first `depth` transitions per task
    let depth = 6;
    let tasks: Vec<(Letter, Complex64, u64)> = starts
        .iter()
        .flat_map(|&(l, w)| (0..1u64 << depth).map(move |p| (l, w, p)))
        .collect();
    let partials: Vec<StateVector> = tasks
        .par_iter()
        .map(|&(letter, weight, prefix)| {
            let mut out = StateVector::zeros(n);
            let mut amp = weight;
            let mut last = letter;
            let mut x = 0i64;
            for i in (0..depth).rev() {
                let next = if (prefix >> i) & 1 == 1 {
                    Letter::F
                } else {
                    Letter::B
                };
                amp *= factor(last, next, spec.theta);
                x += next.step();
                last = next;
            }
            descend(&mut out, spec.theta, n - depth, last, amp, x);
            out
        })
        .collect();
    let mut out = StateVector::zeros(n);
    for p in &partials {
        out.accumulate(p);
    }
    Ok(out)
}

/// Depth-first over the remaining transitions, B before F, carrying the
/// running product.
fn descend(
    out: &mut StateVector,
    theta: Angle,
    remaining: usize,
    last: Letter,
    amp: Complex64,
    x: i64,
) {
    if remaining == 0 {
        out.add(last.coin(), x, amp);
        return;
    }
    for next in [Letter::B, Letter::F] {
        let a = amp * factor(last, next, theta);
        descend(out, theta, remaining - 1, next, a, x + next.step());
    }
}

/// Extended strings sharing initial letter, switch count and endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchGroup {
    pub c: Letter,
    pub j: usize,
    pub x: i64,
    pub multiplicity: BigUint,
    pub parity: i8,
    pub final_coin: u8,
}

/// Buckets every extended string of an `n`-step walk by `(c, j, x)`.
///
/// Fails if two members of a bucket disagree on parity or final coin.
/// Groups come back sorted by `(c, j, x)`.
pub fn enumerate_groups(n: usize, cap: usize) -> Result<Vec<SwitchGroup>> {
    if n > cap {
        return Err(WalkError::PathCapExceeded { n, cap });
    }
    let mut buckets: BTreeMap<(Letter, usize, i64), (u64, i8, u8)> = BTreeMap::new();
    for bits in 0..1u64 << (n + 1) {
        let s = ExtendedString::from_bits(n, bits);
        let key = (s.initial(), s.switches(), s.endpoint());
        let (parity, coin) = (s.parity(), s.final_coin());
        let slot = buckets.entry(key).or_insert((0, parity, coin));
        if slot.1 != parity {
            return Err(inhomogeneous(key, "parity"));
        }
        if slot.2 != coin {
            return Err(inhomogeneous(key, "final coin"));
        }
        slot.0 += 1;
    }
    Ok(buckets
        .into_iter()
        .map(|((c, j, x), (count, parity, final_coin))| SwitchGroup {
            c,
            j,
            x,
            multiplicity: BigUint::from(count),
            parity,
            final_coin,
        })
        .collect())
}

fn inhomogeneous(key: (Letter, usize, i64), property: &'static str) -> WalkError {
    WalkError::InhomogeneousGroup {
        c: key.0,
        j: key.1,
        x: key.2,
        property,
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_4;

    use super::*;

    fn s(text: &str) -> ExtendedString {
        text.parse().unwrap()
    }

    #[test]
    fn rule_table() {
        let t = Angle::radians(0.3);
        let got: Vec<f64> = TransitionRule::ALL.iter().map(|r| r.amplitude(t)).collect();
        assert_eq!(got, [t.cos(), t.sin(), t.sin(), -t.cos()]);
    }

    #[test]
    fn path_amplitude_examples() {
        let t = Angle::radians(0.9);
        let (c, sn) = (t.cos(), t.sin());
        assert_eq!(path_amplitude(&s("B*BB"), t), c * c);
        assert_eq!(path_amplitude(&s("F*FB"), t), -c * sn);
        assert_eq!(path_amplitude(&s("B*FF"), t), -sn * c);
        assert_eq!(path_amplitude(&s("F"), t), 1.0);
    }

    #[test]
    fn two_step_hadamard_paths() {
        let spec = WalkSpec::coin_zero(2, Angle::radians(FRAC_PI_4));
        let out = sum_over_paths(&spec).unwrap();
        let expected = [(0, -2, 0.5), (0, 0, 0.5), (1, 0, 0.5), (1, 2, -0.5)];
        assert_eq!(out.nonzero().count(), 4);
        for (coin, x, re) in expected {
            assert!((out.get(coin, x) - Complex64::new(re, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let spec = WalkSpec::coin_zero(21, Angle::radians(0.5));
        assert_eq!(
            sum_over_paths(&spec),
            Err(WalkError::PathCapExceeded { n: 21, cap: 20 })
        );
        assert!(PathOptions::with_cap(27).is_err());
        assert!(enumerate_groups(5, 4).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        let spec = WalkSpec::new(12, Angle::radians(0.77), 0.6, 0.8, 1.3).unwrap();
        let seq = sum_over_paths(&spec).unwrap();
        let par = sum_over_paths_with(
            &spec,
            PathOptions {
                cap: DEFAULT_CAP,
                parallel: true,
            },
        )
        .unwrap();
        assert!(seq.max_deviation(&par).0 <= 1e-12);
    }

    #[test]
    fn group_counts_small() {
        let groups = enumerate_groups(1, DEFAULT_CAP).unwrap();
        assert_eq!(groups.len(), 4);
        let total: BigUint = enumerate_groups(6, DEFAULT_CAP)
            .unwrap()
            .into_iter()
            .map(|g| g.multiplicity)
            .sum();
        assert_eq!(total, BigUint::from(128u32));
    }
}
