//! Exact binomial coefficients.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(m, k)` exactly; zero when `k < 0` or `k > m`.
pub fn binomial(m: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > m {
        return BigUint::zero();
    }
    let k = (k as u64).min(m - k as u64);
    let mut acc = BigUint::one();
    // acc = C(m - k + i, i) after each pass, always an integer
    for i in 1..=k {
        acc *= m - k + i;
        acc /= i;
    }
    acc
}

/// Number of strong compositions of `total` into `parts` positive parts:
/// `C(total - 1, parts - 1)`, with the empty composition of zero counted once.
pub fn compositions(total: u64, parts: i64) -> BigUint {
    match (total, parts) {
        (0, 0) => BigUint::one(),
        (0, _) => BigUint::zero(),
        (t, p) => binomial(t - 1, p - 1),
    }
}

/// Pascal triangle rows `0..=max_m`, for callers that need many coefficients.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(max_m: usize) -> BinomialTable {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_m + 1);
        rows.push(vec![BigUint::one()]);
        for m in 1..=max_m {
            let prev = &rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigUint::one());
            for k in 1..m {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(m, k)`; `None` for out-of-range arguments (the coefficient is zero).
    pub fn get(&self, m: i64, k: i64) -> Option<&BigUint> {
        if m < 0 || k < 0 || k > m {
            return None;
        }
        self.rows.get(m as usize).map(|row| &row[k as usize])
    }

    /// Table-backed [`compositions`]; `None` means zero.
    pub fn compositions(&self, total: u64, parts: i64) -> Option<&BigUint> {
        static ONE: std::sync::OnceLock<BigUint> = std::sync::OnceLock::new();
        match (total, parts) {
            (0, 0) => Some(ONE.get_or_init(BigUint::one)),
            (0, _) => None,
            (t, p) => self.get(t as i64 - 1, p - 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Row-by-row Pascal recurrence, independent of the multiplicative path.
    fn pascal(m: usize, k: usize) -> BigUint {
        let mut row = vec![BigUint::one()];
        for _ in 0..m {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row.get(k).cloned().unwrap_or_default()
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(5, 6), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn thirty_choose_fifteen_matches_pascal() {
        let expected = pascal(30, 15);
        assert_eq!(expected, BigUint::from(155_117_520u64));
        assert_eq!(binomial(30, 15), expected);
    }

    #[test]
    fn recurrence_holds_up_to_64() {
        for m in 1..=64u64 {
            for k in 1..=m as i64 {
                assert_eq!(binomial(m, k), binomial(m - 1, k - 1) + binomial(m - 1, k));
            }
        }
    }

    #[test]
    fn table_agrees_with_direct() {
        let t = BinomialTable::new(70);
        for m in 0..=70i64 {
            for k in -1..=m + 1 {
                let direct = binomial(m as u64, k);
                assert_eq!(t.get(m, k).cloned().unwrap_or_default(), direct);
            }
        }
    }

    #[test]
    fn large_binomial_beyond_u64() {
        // 100 choose 49, also reproduced by the Pascal oracle
        let b = binomial(100, 49);
        assert_eq!(b.to_string(), "98913082887808032681188722800");
        assert_eq!(b, pascal(100, 49));
    }

    #[test]
    fn composition_conventions() {
        assert_eq!(compositions(0, 0), BigUint::one());
        assert_eq!(compositions(0, 1), BigUint::zero());
        assert_eq!(compositions(3, 0), BigUint::zero());
        // 4 = 1+3 = 3+1 = 2+2
        assert_eq!(compositions(4, 2), BigUint::from(3u32));
        let t = BinomialTable::new(10);
        for total in 0..=10u64 {
            for parts in -1..=11 {
                assert_eq!(
                    t.compositions(total, parts).cloned().unwrap_or_default(),
                    compositions(total, parts)
                );
            }
        }
    }
}
