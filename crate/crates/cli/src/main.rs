//! `qwalk`: batch front end for the quantum walk engines.
//!
//! Exit codes: 0 success, 1 comparison failure, 2 usage error, 3 resource cap.

mod engine;
mod format;
mod range;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qwalk_core::pathsum::{DEFAULT_CAP, MAX_CAP};
use qwalk_core::{Angle, WalkError, WalkSpec};

use crate::engine::{Engine, EngineOptions};
use crate::format::{fmt_g17, write_csv_rows, Report, SpecEcho, CSV_HEADER};

#[derive(Debug, Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Discrete-time quantum walk amplitudes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the state after n steps with one engine
    Run {
        #[arg(long, value_enum, default_value_t = Engine::Evolve)]
        engine: Engine,
        #[arg(long)]
        steps: usize,
        #[command(flatten)]
        walk: WalkArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run several engines on one walk and report the largest disagreement
    Compare {
        #[arg(long)]
        steps: usize,
        #[command(flatten)]
        walk: WalkArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated engines to compare
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Engine::Evolve, Engine::Paths, Engine::Closed])]
        engines: Vec<Engine>,
        /// Largest accepted entrywise amplitude difference
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
        /// Added to theta for every engine after the first (negative control)
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        perturb_theta: f64,
    },
    /// Evaluate one engine over a range of angles or step counts
    Sweep {
        #[arg(long, value_enum)]
        vary: Vary,
        /// start:stop[:step]; integers for steps, radians (or p/q with --pi) for theta
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        /// Read theta range bounds as rational multiples of pi
        #[arg(long)]
        pi: bool,
        /// Step count when varying theta
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, value_enum, default_value_t = Engine::Evolve)]
        engine: Engine,
        #[command(flatten)]
        walk: WalkArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct WalkArgs {
    /// Coin angle in radians [default: pi/4]
    #[arg(long, allow_negative_numbers = true, conflicts_with = "theta_pi")]
    theta: Option<f64>,
    /// Coin angle as a rational multiple of pi, e.g. 1/4
    #[arg(long, allow_hyphen_values = true)]
    theta_pi: Option<String>,
    /// Initial amplitude of coin 0
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Initial magnitude of coin 1
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    beta: f64,
    /// Relative phase of coin 1 in radians
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi: f64,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Let engines use all cores (summation order may change in the last bits)
    #[arg(long)]
    parallel: bool,
    /// Largest step count the path engine will enumerate
    #[arg(long, default_value_t = DEFAULT_CAP)]
    path_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Vary {
    Theta,
    Steps,
}

/// Why a command stopped; maps onto the exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Cap(String),
    Mismatch,
    Io(io::Error),
}

impl From<WalkError> for Failure {
    fn from(e: WalkError) -> Self {
        match e {
            WalkError::PathCapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl WalkArgs {
    fn angle(&self) -> Result<Angle, Failure> {
        match (&self.theta, &self.theta_pi) {
            (Some(t), _) => Ok(Angle::radians(*t)),
            (None, Some(text)) => range::parse_ratio(text)
                .map(range::angle_from_pi_ratio)
                .map_err(Failure::Usage),
            (None, None) => Ok(Angle::pi_fraction(1, 4)),
        }
    }

    fn spec(&self, n: usize) -> Result<WalkSpec, Failure> {
        Ok(WalkSpec::new(
            n,
            self.angle()?,
            self.alpha,
            self.beta,
            self.phi,
        )?)
    }
}

impl CommonArgs {
    fn options(&self) -> Result<EngineOptions, Failure> {
        if self.path_cap > MAX_CAP {
            return Err(WalkError::CapTooLarge {
                requested: self.path_cap,
                limit: MAX_CAP,
            }
            .into());
        }
        if self.path_cap > DEFAULT_CAP {
            eprintln!(
                "warning: path cap {} above {DEFAULT_CAP}; enumeration visits up to 2^{} paths",
                self.path_cap,
                self.path_cap + 1
            );
        }
        Ok(EngineOptions {
            parallel: self.parallel,
            path_cap: self.path_cap,
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(cli.command, &mut out).and_then(|()| Ok(out.flush()?));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Run {
            engine,
            steps,
            walk,
            common,
            format,
        } => {
            let spec = walk.spec(steps)?;
            let state = engine::run(engine, &spec, common.options()?)?;
            let report = Report::new(&spec, engine, &state);
            match format {
                Format::Csv => {
                    writeln!(out, "{CSV_HEADER}")?;
                    write_csv_rows(out, &report.entries)?;
                }
                Format::Json => {
                    serde_json::to_writer(&mut *out, &report).map_err(io::Error::from)?;
                    writeln!(out)?;
                }
            }
            Ok(())
        }
        Command::Compare {
            steps,
            walk,
            common,
            engines,
            tolerance,
            perturb_theta,
        } => compare(
            out,
            walk.spec(steps)?,
            &engines,
            tolerance,
            perturb_theta,
            common.options()?,
        ),
        Command::Sweep {
            vary,
            range,
            pi,
            steps,
            engine,
            walk,
            common,
            format,
        } => {
            let opts = common.options()?;
            let specs: Vec<WalkSpec> = match vary {
                Vary::Steps => {
                    let base = walk.spec(0)?;
                    range::steps(&range)
                        .map_err(Failure::Usage)?
                        .into_iter()
                        .map(|n| base.with_steps(n))
                        .collect()
                }
                Vary::Theta => {
                    let n = steps.ok_or_else(|| {
                        Failure::Usage("--steps is required when varying theta".into())
                    })?;
                    let base = walk.spec(n)?;
                    let angles = if pi {
                        range::pi_multiples(&range)
                    } else {
                        range::radians(&range)
                    };
                    angles
                        .map_err(Failure::Usage)?
                        .into_iter()
                        .map(|a| base.with_theta(a))
                        .collect()
                }
            };
            sweep(out, vary, &specs, engine, opts, format)
        }
    }
}

fn compare(
    out: &mut impl Write,
    spec: WalkSpec,
    engines: &[Engine],
    tolerance: f64,
    perturb_theta: f64,
    opts: EngineOptions,
) -> Result<(), Failure> {
    let mut engines = engines.to_vec();
    engines.dedup();
    if engines.len() < 2 {
        return Err(Failure::Usage(
            "compare needs at least two distinct engines".into(),
        ));
    }
    if tolerance.is_nan() || tolerance < 0.0 {
        return Err(Failure::Usage(format!("invalid tolerance {tolerance}")));
    }
    let mut results = Vec::with_capacity(engines.len());
    for (i, &engine) in engines.iter().enumerate() {
        let spec = if i > 0 && perturb_theta != 0.0 {
            spec.with_theta(Angle::radians(spec.theta.value() + perturb_theta))
        } else {
            spec
        };
        let start = Instant::now();
        let state = engine::run(engine, &spec, opts)?;
        let elapsed = start.elapsed();
        writeln!(out, "{:<8} {:>12.3?}", engine.name(), elapsed)?;
        results.push((engine, state));
    }

    let mut worst = (0.0f64, 0u8, 0i64, 0usize, 0usize);
    for a in 0..results.len() {
        for b in a + 1..results.len() {
            let (d, coin, x) = results[a].1.max_deviation(&results[b].1);
            if d > worst.0 || d.is_nan() {
                worst = (d, coin, x, a, b);
            }
        }
    }
    let (d, coin, x, a, b) = worst;
    writeln!(
        out,
        "max discrepancy {} at |{coin},{x}> ({} vs {})",
        fmt_g17(d),
        results[a].0,
        results[b].0
    )?;
    if d <= tolerance {
        writeln!(out, "ok: within tolerance {}", fmt_g17(tolerance))?;
        return Ok(());
    }
    writeln!(out, "FAIL: exceeds tolerance {}", fmt_g17(tolerance))?;
    for (engine, state) in &results {
        let v = state.get(coin, x);
        let sign = if v.im.is_sign_negative() { '-' } else { '+' };
        writeln!(
            out,
            "  {:<8} {} {sign} {}i",
            engine.name(),
            fmt_g17(v.re),
            fmt_g17(v.im.abs())
        )?;
    }
    Err(Failure::Mismatch)
}

fn sweep(
    out: &mut impl Write,
    vary: Vary,
    specs: &[WalkSpec],
    engine: Engine,
    opts: EngineOptions,
    format: Format,
) -> Result<(), Failure> {
    let label = |s: &WalkSpec| match vary {
        Vary::Theta => format!("theta={}", fmt_g17(s.theta.value())),
        Vary::Steps => format!("steps={}", s.n),
    };
    match format {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for spec in specs {
                let state = engine::run(engine, spec, opts)?;
                writeln!(out, "# {}", label(spec))?;
                write_csv_rows(out, &Report::new(spec, engine, &state).entries)?;
            }
        }
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Block {
                value: f64,
                spec: SpecEcho,
                engine: &'static str,
                entries: Vec<format::Row>,
            }
            #[derive(serde::Serialize)]
            struct Sweep {
                vary: &'static str,
                blocks: Vec<Block>,
            }
            let mut blocks = Vec::with_capacity(specs.len());
            for spec in specs {
                let state = engine::run(engine, spec, opts)?;
                let report = Report::new(spec, engine, &state);
                blocks.push(Block {
                    value: match vary {
                        Vary::Theta => spec.theta.value(),
                        Vary::Steps => spec.n as f64,
                    },
                    spec: report.spec,
                    engine: report.engine,
                    entries: report.entries,
                });
            }
            let doc = Sweep {
                vary: match vary {
                    Vary::Theta => "theta",
                    Vary::Steps => "steps",
                },
                blocks,
            };
            serde_json::to_writer(&mut *out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
