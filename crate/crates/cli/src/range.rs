//! Parameter ranges for `sweep`: `start:stop[:step]`.

use num_rational::Ratio;
use qwalk_core::Angle;

pub const MAX_POINTS: usize = 10_000;

/// A rational `p` or `p/q`.
pub fn parse_ratio(text: &str) -> Result<Ratio<i64>, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num: i64 = num
        .parse()
        .map_err(|_| format!("invalid numerator in {text:?}"))?;
    let den: i64 = den
        .parse()
        .map_err(|_| format!("invalid denominator in {text:?}"))?;
    if den == 0 {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Ratio::new(num, den))
}

pub fn angle_from_pi_ratio(r: Ratio<i64>) -> Angle {
    Angle::pi_fraction(*r.numer(), *r.denom())
}

fn split(text: &str) -> Result<(&str, &str, Option<&str>), String> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [a, b] => Ok((a, b, None)),
        [a, b, c] => Ok((a, b, Some(c))),
        _ => Err(format!("range {text:?} is not start:stop[:step]")),
    }
}

fn check_count(count: usize) -> Result<usize, String> {
    if count > MAX_POINTS {
        Err(format!("range has {count} points, more than {MAX_POINTS}"))
    } else {
        Ok(count)
    }
}

/// Integer range, step 1 by default.
pub fn steps(text: &str) -> Result<Vec<usize>, String> {
    let (a, b, step) = split(text)?;
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid step count {s:?}"))
    };
    let (start, stop) = (parse(a)?, parse(b)?);
    let step = step.map(parse).transpose()?.unwrap_or(1);
    if step == 0 || stop < start {
        return Err(format!("range {text:?} is not increasing"));
    }
    check_count((stop - start) / step + 1)?;
    Ok((start..=stop).step_by(step).collect())
}

/// Angle range in radians. `step` defaults to covering the interval in 10
/// intervals.
pub fn radians(text: &str) -> Result<Vec<Angle>, String> {
    let (a, b, step) = split(text)?;
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("invalid angle {s:?}"))
    };
    let (start, stop) = (parse(a)?, parse(b)?);
    let step = match step {
        Some(s) => parse(s)?,
        None => (stop - start) / 10.0,
    };
    if stop < start || (stop > start && step <= 0.0) {
        return Err(format!("range {text:?} is not increasing"));
    }
    if stop == start {
        return Ok(vec![Angle::radians(start)]);
    }
    let span = (stop - start) / step;
    if span > MAX_POINTS as f64 {
        return Err(format!("range {text:?} has more than {MAX_POINTS} points"));
    }
    // tolerate rounding in the last point
    let count = check_count((span + 1e-9).floor() as usize + 1)?;
    Ok((0..count)
        .map(|i| Angle::radians(start + i as f64 * step))
        .collect())
}

/// Angle range in rational multiples of pi, evaluated exactly.
pub fn pi_multiples(text: &str) -> Result<Vec<Angle>, String> {
    let (a, b, step) = split(text)?;
    let (start, stop) = (parse_ratio(a)?, parse_ratio(b)?);
    let step = match step {
        Some(s) => parse_ratio(s)?,
        None => (stop - start) / 10,
    };
    if stop < start || (stop > start && step <= Ratio::from_integer(0)) {
        return Err(format!("range {text:?} is not increasing"));
    }
    if stop == start {
        return Ok(vec![angle_from_pi_ratio(start)]);
    }
    let span = ((stop - start) / step).floor().to_integer();
    let count = check_count(span as usize + 1)?;
    Ok((0..count as i64)
        .map(|i| angle_from_pi_ratio(start + step * i))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_ranges() {
        assert_eq!(steps("1:4").unwrap(), [1, 2, 3, 4]);
        assert_eq!(steps("0:10:5").unwrap(), [0, 5, 10]);
        assert!(steps("4:1").is_err());
        assert!(steps("1:4:0").is_err());
        assert!(steps("a:4").is_err());
        assert!(steps("0:20000").is_err());
    }

    #[test]
    fn pi_ranges_are_exact() {
        let v = pi_multiples("0:1/2:1/4").unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!((v[0].cos(), v[0].sin()), (1.0, 0.0));
        assert_eq!(v[1].cos(), v[1].sin());
        assert_eq!((v[2].cos(), v[2].sin()), (0.0, 1.0));
        assert_eq!(pi_multiples("0:1/2:1/20").unwrap().len(), 11);
        assert!(pi_multiples("1/2:0:1/4").is_err());
        assert!(pi_multiples("0:1/0").is_err());
    }

    #[test]
    fn radian_ranges() {
        let v = radians("0:1.5707963267948966:0.15707963267948966").unwrap();
        assert_eq!(v.len(), 11);
        assert!(radians("0:1:-0.1").is_err());
        assert!(radians("0:1:1e-9").is_err());
        assert!(radians("0").is_err());
        assert_eq!(radians("0.5:0.5").unwrap().len(), 1);
    }
}
