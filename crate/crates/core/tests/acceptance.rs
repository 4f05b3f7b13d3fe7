//! Acceptance gate. Every criterion runs in one test so the timing checks
//! do not compete with each other for cores; each prints a PASS/FAIL line.
//!
//! cargo test -p qwalk-core --test acceptance -- --nocapture

use std::f64::consts::{FRAC_PI_4, PI};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use qwalk_core::combinatorics::predicted_groups;
use qwalk_core::{
    closed_state, enumerate_groups, eta_identity_check, evolve, sum_over_paths, Angle, WalkSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn random_spec(rng: &mut impl Rng, n: usize) -> WalkSpec {
    let theta = rng.random_range(-PI..PI);
    let mix = rng.random_range(0.0..std::f64::consts::FRAC_PI_2);
    let phi = rng.random_range(-PI..PI);
    WalkSpec::new(n, Angle::radians(theta), mix.cos(), mix.sin(), phi).unwrap()
}

fn one_step_exactness() -> Outcome {
    let (worst, elapsed) = timed(|| {
        let mut worst = 0.0f64;
        let (alpha, beta, phi) = (0.6, 0.8, 0.9);
        for i in 0..20 {
            let theta = Angle::radians(-PI + (i as f64 + 0.5) * (2.0 * PI / 20.0));
            let spec = WalkSpec::new(1, theta, alpha, beta, phi).unwrap();
            let (c, s) = (theta.cos(), theta.sin());
            let b = Complex64::from_polar(beta, phi);
            let back = alpha * c + b * s;
            let fwd = alpha * s - b * c;
            for state in [
                evolve(&spec).unwrap(),
                sum_over_paths(&spec).unwrap(),
                closed_state(&spec).unwrap(),
            ] {
                worst = worst.max((state.get(0, -1) - back).norm());
                worst = worst.max((state.get(1, 1) - fwd).norm());
                worst = worst.max(state.get(1, -1).norm());
                worst = worst.max(state.get(0, 1).norm());
            }
        }
        worst
    });
    Outcome {
        name: "one-step exactness (20 angles, 3 engines, <= 1e-15, < 1 s)",
        passed: worst <= 1e-15 && elapsed < Duration::from_secs(1),
        detail: format!("max deviation {worst:.3e}, {elapsed:.2?}"),
    }
}

fn three_way_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut worst = 0.0f64;
    let mut checked = 0;
    for n in 0..=14 {
        for _ in 0..100 {
            let spec = random_spec(&mut rng, n);
            let ev = evolve(&spec).unwrap();
            let ps = sum_over_paths(&spec).unwrap();
            let cf = closed_state(&spec).unwrap();
            worst = worst.max(ev.max_deviation(&ps).0);
            worst = worst.max(ev.max_deviation(&cf).0);
            worst = worst.max(ps.max_deviation(&cf).0);
            checked += 1;
        }
    }
    Outcome {
        name: "three-way oracle equivalence (n <= 14, 100 draws each, <= 1e-12)",
        passed: worst <= 1e-12,
        detail: format!("{checked} specs, max deviation {worst:.3e}"),
    }
}

fn counting_identity() -> Outcome {
    let ((ok, cases), elapsed) = timed(|| {
        let mut ok = true;
        let mut cases = 0;
        for n in 0..=30usize {
            for x in (0..=n as i64).map(|k| 2 * k - n as i64) {
                ok &= eta_identity_check(n, x);
                cases += 1;
            }
        }
        (ok, cases)
    });
    Outcome {
        name: "switch-count identity sums to total paths (n <= 30, exact, < 1 s)",
        passed: ok && elapsed < Duration::from_secs(1),
        detail: format!("{cases} (n, x) cases, {elapsed:.2?}"),
    }
}

fn group_oracle() -> Outcome {
    let mut mismatches = Vec::new();
    let mut groups = 0;
    for n in 0..=14 {
        let enumerated = enumerate_groups(n, 20).expect("homogeneous groups");
        let predicted = predicted_groups(n);
        groups += enumerated.len();
        if enumerated != predicted {
            mismatches.push(n);
        }
    }
    Outcome {
        name: "group counts, parities and final coins match enumeration (n <= 14)",
        passed: mismatches.is_empty(),
        detail: format!("{groups} groups, mismatching n: {mismatches:?}"),
    }
}

fn large_n_stability() -> Outcome {
    let theta = Angle::radians(FRAC_PI_4);
    let spec = WalkSpec::coin_zero(500, theta);
    let deviation = closed_state(&spec)
        .unwrap()
        .max_deviation(&evolve(&spec).unwrap())
        .0;
    let spec = WalkSpec::coin_zero(1000, theta);
    let (state, elapsed) = timed(|| closed_state(&spec).unwrap());
    let norm_err = (state.norm_sqr() - 1.0).abs();
    Outcome {
        name: "large n: n=500 vs evolve <= 1e-8; n=1000 norm within 1e-8 in < 5 s",
        passed: deviation <= 1e-8 && norm_err <= 1e-8 && elapsed < Duration::from_secs(5),
        detail: format!(
            "n=500 deviation {deviation:.3e}; n=1000 norm error {norm_err:.3e} in {elapsed:.2?}"
        ),
    }
}

fn distribution_shape() -> Outcome {
    let n = 100;
    let state = evolve(&WalkSpec::coin_zero(n, Angle::radians(FRAC_PI_4))).unwrap();
    let limit = 0.75 * n as f64;
    let inside: f64 = state
        .distribution()
        .into_iter()
        .filter(|(x, _)| (*x as f64).abs() <= limit)
        .map(|(_, p)| p)
        .sum();
    Outcome {
        name: "Hadamard n=100: >= 99% of mass within |x| <= 0.75 n",
        passed: inside >= 0.99,
        detail: format!("mass inside {inside:.6}"),
    }
}

fn performance_separation() -> Outcome {
    let spec = WalkSpec::new(20, Angle::radians(FRAC_PI_4), 0.6, 0.8, 0.5).unwrap();
    // best of several runs for each engine
    let best = |f: &dyn Fn()| (0..5).map(|_| timed(f).1).min().unwrap();
    let closed = best(&|| {
        closed_state(&spec).unwrap();
    });
    let paths = best(&|| {
        sum_over_paths(&spec).unwrap();
    });
    let ratio = paths.as_secs_f64() / closed.as_secs_f64();
    Outcome {
        name: "n=20: closed form >= 100x faster than path sum",
        passed: ratio >= 100.0,
        detail: format!("closed {closed:.2?}, paths {paths:.2?}, ratio {ratio:.0}x"),
    }
}

#[test]
fn acceptance_criteria() {
    let outcomes = [
        one_step_exactness(),
        three_way_equivalence(),
        counting_identity(),
        group_oracle(),
        large_n_stability(),
        distribution_shape(),
        performance_separation(),
    ];
    for o in &outcomes {
        println!(
            "[{}] {} -- {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
    }
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.name)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
