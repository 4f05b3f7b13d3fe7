//! Feynman strings over `{B, F}`.
//!
//! An extended string is an initial letter encoding the starting coin
//! (`B` for `|0>`, `F` for `|1>`) followed by `n` transition letters, one per
//! step. `B` moves the walker to `k - 1`, `F` to `k + 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, WalkError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    B,
    F,
}

impl Letter {
    /// Coin basis label carried by this letter: `B -> 0`, `F -> 1`.
    pub fn coin(self) -> u8 {
        match self {
            Letter::B => 0,
            Letter::F => 1,
        }
    }

    pub fn from_coin(coin: u8) -> Letter {
        if coin == 0 {
            Letter::B
        } else {
            Letter::F
        }
    }

    pub fn dual(self) -> Letter {
        match self {
            Letter::B => Letter::F,
            Letter::F => Letter::B,
        }
    }

    pub fn step(self) -> i64 {
        match self {
            Letter::B => -1,
            Letter::F => 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::B => "B",
            Letter::F => "F",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedString {
    letters: Vec<Letter>,
}

impl ExtendedString {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(WalkError::EmptyString);
        }
        Ok(ExtendedString { letters })
    }

    pub fn from_parts(initial: Letter, transitions: &[Letter]) -> Self {
        let mut letters = Vec::with_capacity(transitions.len() + 1);
        letters.push(initial);
        letters.extend_from_slice(transitions);
        ExtendedString { letters }
    }

    /// Decodes the low `n + 1` bits of `bits`, most significant first, with
    /// `1` meaning `F`. Lexicographic order of strings (B < F) is numeric
    /// order of `bits`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        let letters = (0..=n)
            .rev()
            .map(|i| {
                if (bits >> i) & 1 == 1 {
                    Letter::F
                } else {
                    Letter::B
                }
            })
            .collect();
        ExtendedString { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn initial(&self) -> Letter {
        self.letters[0]
    }

    pub fn transitions(&self) -> &[Letter] {
        &self.letters[1..]
    }

    /// Number of walk steps, one less than the letter count.
    pub fn steps(&self) -> usize {
        self.letters.len() - 1
    }

    /// Terminal position of the walk started at the origin.
    pub fn endpoint(&self) -> i64 {
        self.transitions().iter().map(|l| l.step()).sum()
    }

    /// Adjacent unequal letter pairs, including the pair formed by the
    /// initial letter and the first transition.
    pub fn switches(&self) -> usize {
        self.letters.windows(2).filter(|w| w[0] != w[1]).count()
    }

    pub fn ff_transitions(&self) -> usize {
        self.letters
            .windows(2)
            .filter(|w| w[0] == Letter::F && w[1] == Letter::F)
            .count()
    }

    /// `(-1)^(number of F -> F pairs)`.
    pub fn parity(&self) -> i8 {
        if self.ff_transitions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn final_coin(&self) -> u8 {
        self.letters[self.letters.len() - 1].coin()
    }

    pub fn dual(&self) -> ExtendedString {
        ExtendedString {
            letters: self.letters.iter().map(|l| l.dual()).collect(),
        }
    }
}

impl fmt::Display for ExtendedString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*", self.letters[0])?;
        for l in self.transitions() {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for ExtendedString {
    type Err = WalkError;

    /// Accepts `"FBBFFB"` or the starred form `"F*BBFFB"`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|&ch| ch != '*')
            .map(|ch| match ch {
                'B' | 'b' => Ok(Letter::B),
                'F' | 'f' => Ok(Letter::F),
                other => Err(WalkError::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        ExtendedString::new(letters)
    }
}
