//! Exact counts of Feynman strings by endpoint and switch number.
//!
//! A string with `j` switches splits into `j + 1` maximal blocks of equal
//! letters that alternate in type, starting with the type of its first
//! letter. The first type gets `ceil((j+1)/2)` blocks and the other type
//! `floor((j+1)/2)`. Filling blocks of one type with a fixed number of
//! letters is a strong composition, so every count here is a product of two
//! binomials.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::binomial::{binomial, compositions, BinomialTable};
use crate::error::{Result, WalkError};
use crate::pathsum::SwitchGroup;
use crate::string::Letter;

/// Forward and backward shift counts of a path from 0 to `x` in `n` steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftCounts {
    pub n_forward: u64,
    pub n_backward: u64,
}

impl ShiftCounts {
    /// `None` when `|x| > n` or `x` and `n` differ in parity.
    pub fn new(n: usize, x: i64) -> Option<ShiftCounts> {
        let n = n as i64;
        if x.abs() > n || (n + x) % 2 != 0 {
            return None;
        }
        Some(ShiftCounts {
            n_forward: ((n + x) / 2) as u64,
            n_backward: ((n - x) / 2) as u64,
        })
    }

    pub fn of(&self, letter: Letter) -> u64 {
        match letter {
            Letter::B => self.n_backward,
            Letter::F => self.n_forward,
        }
    }
}

/// Blocks of the leading letter type and of the other type for `j` switches.
fn block_counts(j: usize) -> (i64, i64) {
    let blocks = j as i64 + 1;
    ((blocks + 1) / 2, blocks / 2)
}

/// Number of `n`-letter paths from 0 to `x`, `C(n, (n+x)/2)`; zero when `x`
/// is unreachable.
pub fn total_paths(n: usize, x: i64) -> BigUint {
    match ShiftCounts::new(n, x) {
        Some(sc) => binomial(n as u64, sc.n_forward as i64),
        None => BigUint::zero(),
    }
}

/// Number of plain `n`-letter Feynman strings ending at `x` with `j`
/// switches, summed over both first letters.
///
/// `j = 0` is accepted and counts the single constant string when
/// `|x| = n` (the empty string when `n = 0`).
pub fn eta(n: usize, x: i64, j: usize) -> BigUint {
    let Some(sc) = ShiftCounts::new(n, x) else {
        return BigUint::zero();
    };
    if n == 0 {
        return if j == 0 { 1u32.into() } else { BigUint::zero() };
    }
    let (lead, other) = block_counts(j);
    let b_first = compositions(sc.n_backward, lead) * compositions(sc.n_forward, other);
    let f_first = compositions(sc.n_forward, lead) * compositions(sc.n_backward, other);
    b_first + f_first
}

/// Checks `sum_j eta(n, x, j) == total_paths(n, x)` exactly, `j = 0` included.
pub fn eta_identity_check(n: usize, x: i64) -> bool {
    let sum: BigUint = (0..=n).map(|j| eta(n, x, j)).sum();
    sum == total_paths(n, x)
}

/// Number of extended strings (initial letter `c`, then `n` transitions)
/// ending at `x` with `j` switches over all `n + 1` letters.
pub fn extended_count(c: Letter, n: usize, x: i64, j: usize) -> BigUint {
    let Some(sc) = ShiftCounts::new(n, x) else {
        return BigUint::zero();
    };
    let (lead, other) = block_counts(j);
    // the initial letter adds one letter of its own type
    compositions(sc.of(c) + 1, lead) * compositions(sc.of(c.dual()), other)
}

/// Coin basis state in which every string of the group ends: the type of
/// the last block.
pub fn final_coin(c: Letter, j: usize) -> u8 {
    if j.is_multiple_of(2) {
        c.coin()
    } else {
        c.dual().coin()
    }
}

fn parity_exponent(c: Letter, sc: ShiftCounts, j: usize) -> u64 {
    let (lead, other) = block_counts(j);
    let f_letters = sc.n_forward + u64::from(c == Letter::F);
    let f_blocks = if c == Letter::F { lead } else { other } as u64;
    // each F block of length L holds L - 1 F->F pairs
    f_letters - f_blocks
}

/// `(-1)^(F->F pairs)` shared by every string of the group.
pub fn parity_sign(c: Letter, n: usize, x: i64, j: usize) -> Result<i8> {
    let sc = ShiftCounts::new(n, x).filter(|_| !extended_count(c, n, x, j).is_zero());
    let sc = sc.ok_or(WalkError::EmptyGroup { c, n, x, j })?;
    Ok(if parity_exponent(c, sc, j).is_multiple_of(2) {
        1
    } else {
        -1
    })
}

/// Every non-empty `(c, j, x)` group of an `n`-step walk, derived from the
/// counting formulas. Sorted by `(c, j, x)` like
/// [`crate::pathsum::enumerate_groups`].
pub fn predicted_groups(n: usize) -> Vec<SwitchGroup> {
    let mut out = Vec::new();
    for c in [Letter::B, Letter::F] {
        for j in 0..=n {
            for x in (0..=n as i64).map(|k| 2 * k - n as i64) {
                let multiplicity = extended_count(c, n, x, j);
                if multiplicity.is_zero() {
                    continue;
                }
                out.push(SwitchGroup {
                    c,
                    j,
                    x,
                    multiplicity,
                    parity: parity_sign(c, n, x, j).expect("non-empty group"),
                    final_coin: final_coin(c, j),
                });
            }
        }
    }
    out
}

/// Table-backed group data for the closed-form engine: the two binomial
/// factors of the multiplicity, the parity and the final coin. `None` for
/// an empty group.
pub(crate) struct GroupTerm<'a> {
    pub lead_factor: &'a BigUint,
    pub other_factor: &'a BigUint,
    pub negative: bool,
    pub final_coin: u8,
}

pub(crate) fn group_term<'a>(
    table: &'a BinomialTable,
    c: Letter,
    sc: ShiftCounts,
    j: usize,
) -> Option<GroupTerm<'a>> {
    let (lead, other) = block_counts(j);
    let lead_factor = table.compositions(sc.of(c) + 1, lead)?;
    let other_factor = table.compositions(sc.of(c.dual()), other)?;
    Some(GroupTerm {
        lead_factor,
        other_factor,
        negative: parity_exponent(c, sc, j) % 2 == 1,
        final_coin: final_coin(c, j),
    })
}
