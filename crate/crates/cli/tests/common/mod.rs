#![allow(dead_code)]

use fracreep::solver::ProblemSpec;
use fracreep_cli::problem_file::{ProblemFile, TermFile};
use proptest::prelude::*;

pub const EXAMPLE: &str = include_str!("../../data/example.problem");

pub fn example_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/example.problem")
}

pub fn example_spec() -> ProblemSpec {
    ProblemFile::from_json(EXAMPLE).unwrap().to_spec().unwrap()
}

/// Runs the CLI in-process; returns (status, stdout, stderr).
pub fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fracreep").chain(args.iter().copied());
    let code = fracreep_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[derive(Debug, Clone)]
struct RawTerm {
    b_kind: u8,
    c: f64,
    power: u8,
    g_kind: u8,
    slope: f64,
    offset: f64,
    delay_frac: f64,
}

fn raw_term() -> impl Strategy<Value = RawTerm> {
    (0u8..3, 0.1f64..1.5, 0u8..4, 0u8..2, 0.1f64..1.0, -1.0f64..1.0, 0.05f64..=1.0).prop_map(
        |(b_kind, c, power, g_kind, slope, offset, delay_frac)| RawTerm {
            b_kind,
            c,
            power,
            g_kind,
            slope,
            offset,
            delay_frac,
        },
    )
}

fn build(
    alpha: f64,
    lambda: f64,
    horizon: f64,
    steps: usize,
    raw: &[RawTerm],
    scale: f64,
    history: &str,
) -> ProblemFile {
    let terms = raw
        .iter()
        .map(|r| {
            let c = r.c * scale;
            let b = match r.b_kind {
                0 => format!("{c} * t^{}", r.power),
                1 => format!("{c} * cos(t)"),
                _ => format!("{c} * exp(-t)"),
            };
            let g = match r.g_kind {
                0 => format!("{} * x + {}", r.slope, r.offset),
                _ => format!("{} * sin(x) + {}", r.slope, r.offset),
            };
            TermFile {
                b,
                b_sup: None,
                g,
                lipschitz: Some(r.slope),
                delay: r.delay_frac * horizon,
            }
        })
        .collect();
    ProblemFile {
        schema_version: 1,
        alpha,
        lambda,
        horizon,
        grid_step: Some(horizon / steps as f64),
        terms,
        history: history.to_string(),
    }
}

/// Random problem files whose contraction condition holds, with the ratio
/// `lhs / rhs` drawn from (0.05, 0.95).
pub fn contracting_problem() -> impl Strategy<Value = ProblemFile> {
    (
        0.2f64..=1.0,
        0.2f64..3.0,
        0.5f64..2.0,
        16usize..64,
        prop::collection::vec(raw_term(), 1..=3),
        0.05f64..0.95,
        0u8..3,
        -1.5f64..1.5,
    )
        .prop_map(|(alpha, lambda, horizon, steps, raw, target, h_kind, h)| {
            let history = match h_kind {
                0 => format!("{h} * t"),
                1 => format!("sin({h} * t)"),
                _ => format!("{h} * t^2"),
            };
            let unit = build(alpha, lambda, horizon, steps, &raw, 1.0, &history);
            let spec = unit.to_spec().expect("generated problem is valid");
            let ratio = spec.contraction_lhs().unwrap() / spec.contraction_rhs();
            build(alpha, lambda, horizon, steps, &raw, target / ratio, &history)
        })
}
