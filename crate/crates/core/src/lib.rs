//! Amplitudes of the one-dimensional discrete-time quantum walk.
//!
//! Three engines compute the same state vector:
//!
//! - [`evolver`] applies the coin and shift operators step by step.
//! - [`pathsum`] sums the amplitude of every Feynman path (exponential).
//! - [`closedform`] groups paths by initial coin, switch count and endpoint
//!   and sums one term per group (polynomial).
//!
//! [`combinatorics`] holds the exact counting behind the closed form.

pub mod binomial;
pub mod closedform;
pub mod combinatorics;
pub mod error;
pub mod evolver;
pub mod pathsum;
pub mod scaled;
pub mod spec;
pub mod state;
pub mod string;

pub use binomial::binomial;
pub use closedform::{closed_state, closed_state_with, component_amplitude, ClosedOptions};
pub use combinatorics::{
    eta, eta_identity_check, extended_count, final_coin, parity_sign, total_paths, ShiftCounts,
};
pub use error::{Result, WalkError};
pub use evolver::{evolve, initial_state};
pub use pathsum::{
    enumerate_groups, path_amplitude, sum_over_paths, sum_over_paths_with, PathOptions,
    SwitchGroup, TransitionRule,
};
pub use scaled::ScaledFloat;
pub use spec::{Angle, WalkSpec};
pub use state::{Amplitude, Entry, StateVector};
pub use string::{ExtendedString, Letter};
