use num_complex::Complex64;

/// Complex amplitude attached to a coin-position basis state.
pub type Amplitude = Complex64;

/// One occupied basis state `|coin, x>` with its amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entry {
    pub coin: u8,
    pub x: i64,
    pub amplitude: Amplitude,
}

impl Entry {
    pub fn probability(&self) -> f64 {
        self.amplitude.norm_sqr()
    }
}

/// Walker state at step `step`, stored densely over `x in [-step, step]`.
///
/// Only positions with `x = step (mod 2)` can be occupied; the others stay
/// zero and are skipped on iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    step: usize,
    amps: [Vec<Amplitude>; 2],
}

impl StateVector {
    pub fn zeros(step: usize) -> StateVector {
        let len = 2 * step + 1;
        StateVector {
            step,
            amps: [
                vec![Complex64::new(0.0, 0.0); len],
                vec![Complex64::new(0.0, 0.0); len],
            ],
        }
    }

    pub fn step(&self) -> usize {
        self.step
    }

    fn index(&self, x: i64) -> Option<usize> {
        let i = x + self.step as i64;
        if i < 0 || i > 2 * self.step as i64 {
            None
        } else {
            Some(i as usize)
        }
    }

    /// Amplitude of `|coin, x>`; zero outside the light cone.
    pub fn get(&self, coin: u8, x: i64) -> Amplitude {
        self.index(x)
            .map(|i| self.amps[coin as usize][i])
            .unwrap_or_default()
    }

    /// Adds `value` to `|coin, x>`.
    ///
    /// Panics if `x` lies outside the light cone or has the wrong parity.
    pub fn add(&mut self, coin: u8, x: i64, value: Amplitude) {
        assert!(
            (x - self.step as i64).rem_euclid(2) == 0,
            "position {x} has the wrong parity for step {}",
            self.step
        );
        let i = self
            .index(x)
            .unwrap_or_else(|| panic!("position {x} outside the light cone of step {}", self.step));
        self.amps[coin as usize][i] += value;
    }

    pub fn set(&mut self, coin: u8, x: i64, value: Amplitude) {
        let i = self.index(x).expect("position outside the light cone");
        assert!((x - self.step as i64).rem_euclid(2) == 0);
        self.amps[coin as usize][i] = value;
    }

    /// Positions that can be occupied at this step, ascending.
    pub fn positions(&self) -> impl Iterator<Item = i64> {
        let n = self.step as i64;
        (0..=self.step as i64).map(move |k| 2 * k - n)
    }

    /// Every reachable basis state in ascending `(x, coin)` order, zeros
    /// included.
    pub fn iter(&self) -> impl Iterator<Item = Entry> + '_ {
        self.positions().flat_map(move |x| {
            (0..2u8).map(move |coin| Entry {
                coin,
                x,
                amplitude: self.get(coin, x),
            })
        })
    }

    /// Basis states with a nonzero amplitude, ascending `(x, coin)`.
    pub fn nonzero(&self) -> impl Iterator<Item = Entry> + '_ {
        self.iter()
            .filter(|e| e.amplitude != Complex64::new(0.0, 0.0))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.iter().map(|e| e.probability()).sum()
    }

    /// Position distribution `P(x) = sum_coin |amp(coin, x)|^2`, ascending `x`.
    pub fn distribution(&self) -> Vec<(i64, f64)> {
        self.positions()
            .map(|x| (x, self.get(0, x).norm_sqr() + self.get(1, x).norm_sqr()))
            .collect()
    }

    /// Largest entrywise `|a - b|` and the basis state where it occurs.
    ///
    /// States of different steps are compared over the union of their
    /// supports.
    pub fn max_deviation(&self, other: &StateVector) -> (f64, u8, i64) {
        let reach = self.step.max(other.step) as i64;
        let mut worst = (0.0, 0u8, 0i64);
        for x in -reach..=reach {
            for coin in 0..2u8 {
                let d = (self.get(coin, x) - other.get(coin, x)).norm();
                if d > worst.0 || d.is_nan() {
                    worst = (d, coin, x);
                }
            }
        }
        worst
    }

    pub(crate) fn raw(&self, coin: u8) -> &[Amplitude] {
        &self.amps[coin as usize]
    }

    pub(crate) fn raw_mut(&mut self, coin: u8) -> &mut [Amplitude] {
        &mut self.amps[coin as usize]
    }

    pub(crate) fn accumulate(&mut self, other: &StateVector) {
        debug_assert_eq!(self.step, other.step);
        for coin in 0..2 {
            for (a, b) in self.amps[coin].iter_mut().zip(&other.amps[coin]) {
                *a += *b;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_order_is_x_then_coin() {
        let mut s = StateVector::zeros(2);
        s.add(1, 2, Complex64::new(0.5, 0.0));
        s.add(0, -2, Complex64::new(0.5, 0.0));
        s.add(0, 0, Complex64::new(0.5, 0.0));
        s.add(1, 0, Complex64::new(0.0, 0.5));
        let order: Vec<(i64, u8)> = s.nonzero().map(|e| (e.x, e.coin)).collect();
        assert_eq!(order, [(-2, 0), (0, 0), (0, 1), (2, 1)]);
        assert!((s.norm_sqr() - 1.0).abs() < 1e-15);
        assert_eq!(s.distribution(), [(-2, 0.25), (0, 0.5), (2, 0.25)]);
    }

    #[test]
    fn get_outside_cone_is_zero() {
        let s = StateVector::zeros(1);
        assert_eq!(s.get(0, 5), Complex64::new(0.0, 0.0));
        assert_eq!(s.get(1, -2), Complex64::new(0.0, 0.0));
    }

    #[test]
    #[should_panic(expected = "wrong parity")]
    fn add_rejects_wrong_parity() {
        StateVector::zeros(2).add(0, 1, Complex64::new(1.0, 0.0));
    }
}
