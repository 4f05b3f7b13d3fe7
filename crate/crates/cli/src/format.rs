use std::io::{self, Write};

use qwalk_core::{StateVector, WalkSpec};
use serde::Serialize;

use crate::engine::Engine;

pub const CSV_HEADER: &str = "coin,x,re,im,prob";

/// `%.17g`: 17 significant digits, trailing zeros dropped, fixed notation
/// for decimal exponents in `[-4, 17)`.
pub fn fmt_g17(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecEcho {
    pub n: usize,
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub phi: f64,
}

impl From<&WalkSpec> for SpecEcho {
    fn from(s: &WalkSpec) -> Self {
        SpecEcho {
            n: s.n,
            theta: s.theta.value(),
            alpha: s.alpha,
            beta: s.beta,
            phi: s.phi,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub coin: u8,
    pub x: i64,
    pub re: f64,
    pub im: f64,
    pub prob: f64,
}

/// Nonzero basis states, ascending `(x, coin)`.
pub fn rows(state: &StateVector) -> Vec<Row> {
    state
        .nonzero()
        .map(|e| Row {
            coin: e.coin,
            x: e.x,
            re: e.amplitude.re + 0.0,
            im: e.amplitude.im + 0.0,
            prob: e.probability(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub spec: SpecEcho,
    pub engine: &'static str,
    pub entries: Vec<Row>,
}

impl Report {
    pub fn new(spec: &WalkSpec, engine: Engine, state: &StateVector) -> Report {
        Report {
            spec: spec.into(),
            engine: engine.name(),
            entries: rows(state),
        }
    }
}

pub fn write_csv_rows(out: &mut impl Write, rows: &[Row]) -> io::Result<()> {
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.coin,
            r.x,
            fmt_g17(r.re),
            fmt_g17(r.im),
            fmt_g17(r.prob)
        )?;
    }
    Ok(())
}
