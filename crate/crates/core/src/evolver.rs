//! Step-by-step unitary evolution under `U = S (C x I)`.

use crate::error::Result;
use crate::spec::{Angle, WalkSpec};
use crate::state::StateVector;

/// `alpha |0,0> + beta e^{i phi} |1,0>` at step 0.
pub fn initial_state(spec: &WalkSpec) -> Result<StateVector> {
    spec.validate()?;
    let mut state = StateVector::zeros(0);
    state.set(0, 0, spec.weight_b());
    state.set(1, 0, spec.weight_f());
    Ok(state)
}

/// One coin toss followed by the conditional shift.
///
/// Coin 0 at `k` feeds `cos` into `|0,k-1>` and `sin` into `|1,k+1>`;
/// coin 1 feeds `sin` into `|0,k-1>` and `-cos` into `|1,k+1>`. Sources
/// are visited in ascending `k`, coin 0 first.
pub fn step(state: &StateVector, theta: Angle) -> StateVector {
    let (c, s) = (theta.cos(), theta.sin());
    let mut next = StateVector::zeros(state.step() + 1);
    let src0 = state.raw(0);
    let src1 = state.raw(1);
    // index i in the old array (x = i - n) maps to i in the new array for
    // x - 1 and i + 2 for x + 1
    for i in (0..src0.len()).step_by(2) {
        let a = src0[i];
        let b = src1[i];
        {
            let back = next.raw_mut(0);
            back[i] += a * c;
            back[i] += b * s;
        }
        let fwd = next.raw_mut(1);
        fwd[i + 2] += a * s;
        fwd[i + 2] += -(b * c);
    }
    next
}

/// `U^n` applied to the initial state.
pub fn evolve(spec: &WalkSpec) -> Result<StateVector> {
    let mut state = initial_state(spec)?;
    for _ in 0..spec.n {
        state = step(&state, spec.theta);
    }
    Ok(state)
}

/// `P(x)` for every reachable position, ascending.
pub fn distribution(state: &StateVector) -> Vec<(i64, f64)> {
    state.distribution()
}
