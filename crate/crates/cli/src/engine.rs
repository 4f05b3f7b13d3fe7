use std::fmt;

use clap::ValueEnum;
use qwalk_core::{
    closed_state_with, evolve, sum_over_paths_with, ClosedOptions, PathOptions, StateVector,
    WalkSpec,
};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Step-by-step unitary evolution
    Evolve,
    /// Brute-force sum over all paths (exponential, capped)
    Paths,
    /// Switch-grouped closed form
    Closed,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Evolve => "evolve",
            Engine::Paths => "paths",
            Engine::Closed => "closed",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EngineOptions {
    pub parallel: bool,
    pub path_cap: usize,
}

pub fn run(engine: Engine, spec: &WalkSpec, opts: EngineOptions) -> Result<StateVector, Failure> {
    let state = match engine {
        Engine::Evolve => evolve(spec),
        Engine::Paths => sum_over_paths_with(
            spec,
            PathOptions {
                cap: opts.path_cap,
                parallel: opts.parallel,
            },
        ),
        Engine::Closed => closed_state_with(
            spec,
            ClosedOptions {
                parallel: opts.parallel,
            },
        ),
    };
    Ok(state?)
}
