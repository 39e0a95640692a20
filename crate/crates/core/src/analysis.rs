//! Closed-form constants of the contraction, continuous-dependence and
//! Ulam-Hyers results, and numerical experiments that test them.

use std::fmt::Write as _;
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::ScalarFn;
use crate::format::sig12;
use crate::solver::{apply_operator, solve_delay, solve_delay_forced, ProblemSpec};
use crate::trajectory::UniformGrid;

/// Both sides of the contraction condition `T^α Σ B_j l_j < Γ(α+1)` and the
/// constants derived from it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub contraction_lhs: f64,
    pub contraction_rhs: f64,
    pub margin: f64,
    pub unique_solution: bool,
    /// `K = T^α / (Γ(α+1) - lhs)`.
    pub ulam_k: Option<f64>,
    /// `lhs / (Γ(α+1) - lhs)`.
    pub dependence_coeff: Option<f64>,
}

impl ConditionReport {
    pub fn to_text(&self) -> String {
        let opt = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), sig12);
        let mut s = String::new();
        let _ = writeln!(s, "contraction_lhs  = {}", sig12(self.contraction_lhs));
        let _ = writeln!(s, "contraction_rhs  = {}", sig12(self.contraction_rhs));
        let _ = writeln!(s, "margin           = {}", sig12(self.margin));
        let _ = writeln!(s, "unique_solution  = {}", self.unique_solution);
        let _ = writeln!(s, "ulam_k           = {}", opt(self.ulam_k));
        let _ = writeln!(s, "dependence_coeff = {}", opt(self.dependence_coeff));
        s
    }
}

/// Evaluates the contraction condition for `problem`.
pub fn contraction_check(problem: &ProblemSpec) -> Result<ConditionReport> {
    let lhs = problem.contraction_lhs()?;
    let rhs = problem.contraction_rhs();
    let margin = rhs - lhs;
    let unique_solution = lhs < rhs;
    let t_alpha = problem.horizon().powf(problem.alpha());
    Ok(ConditionReport {
        contraction_lhs: lhs,
        contraction_rhs: rhs,
        margin,
        unique_solution,
        ulam_k: unique_solution.then(|| t_alpha / margin),
        dependence_coeff: unique_solution.then(|| lhs / margin),
    })
}

fn require_contraction(problem: &ProblemSpec) -> Result<ConditionReport> {
    let report = contraction_check(problem)?;
    if !report.unique_solution {
        return Err(Error::ConditionViolated(format!(
            "T^alpha * sum B_j l_j = {} is not below Gamma(alpha+1) = {}",
            report.contraction_lhs, report.contraction_rhs
        )));
    }
    Ok(report)
}

/// Additive slack used by every empirical bound check.
pub fn discretization_slack(grid: &UniformGrid) -> f64 {
    10.0 * grid.step()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DependenceReport {
    /// `‖x₁ - x₂‖` on `[0, T]`.
    pub measured: f64,
    /// `‖ψ₁ - ψ₂‖` on `[-v, 0]`.
    pub history_distance: f64,
    /// `dependence_coeff · ‖ψ₁ - ψ₂‖`.
    pub bound: f64,
    pub slack: f64,
    pub pass: bool,
}

/// `sup |f - g|` over a dense sample of `[-v, 0]`.
fn history_distance(v: f64, f: &ScalarFn, g: &ScalarFn) -> f64 {
    const N: usize = 8192;
    (0..=N)
        .map(|k| -v + v * k as f64 / N as f64)
        .map(|t| (f.eval(t) - g.eval(t)).abs())
        .fold(0.0, f64::max)
}

/// Solves `problem` under histories `psi1` and `psi2` and compares the gap with
/// the continuous-dependence bound.
pub fn verify_dependence(
    problem: &ProblemSpec,
    psi1: &ScalarFn,
    psi2: &ScalarFn,
    grid: &UniformGrid,
) -> Result<DependenceReport> {
    let report = require_contraction(problem)?;
    let p1 = problem.with_history(psi1.clone())?;
    let p2 = problem.with_history(psi2.clone())?;
    let (x1, x2) = thread::scope(|s| {
        let a = s.spawn(|| solve_delay(&p1, grid));
        let b = solve_delay(&p2, grid);
        (a.join().expect("solver thread panicked"), b)
    });
    let measured = x1?.trajectory.sup_distance_forward(&x2?.trajectory)?;
    let dist = history_distance(problem.max_delay(), psi1, psi2);
    let bound = report.dependence_coeff.expect("present when unique") * dist;
    let slack = discretization_slack(grid);
    Ok(DependenceReport {
        measured,
        history_distance: dist,
        bound,
        slack,
        pass: measured <= bound + slack,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UlamReport {
    pub epsilon: f64,
    /// `sup |h|` over the points where the perturbation is evaluated.
    pub perturbation_sup: f64,
    /// `‖y_ε - y_e‖` on `[0, T]`.
    pub measured: f64,
    pub ulam_k: f64,
    /// `K·ε`.
    pub bound: f64,
    /// `sup |y_ε - P y_ε|`: how far `y_ε` is from solving the exact equation.
    pub defect: f64,
    /// `T^α ε / Γ(α+1)`.
    pub defect_bound: f64,
    pub slack: f64,
    pub pass: bool,
    pub defect_pass: bool,
}

/// Solves the exact problem and the problem with `perturbation` added to the
/// forcing, and checks `‖y_ε - y_e‖ ≤ Kε` and the defect estimate.
pub fn verify_ulam(
    problem: &ProblemSpec,
    epsilon: f64,
    perturbation: &ScalarFn,
    grid: &UniformGrid,
) -> Result<UlamReport> {
    if !(epsilon.is_finite() && epsilon >= 0.0) {
        return Err(Error::Input(format!("epsilon must be non-negative, got {epsilon}")));
    }
    let report = require_contraction(problem)?;
    let h = grid.step();
    let sup_h = (0..2 * grid.steps() + 1)
        .map(|k| perturbation.eval(0.5 * h * k as f64).abs())
        .fold(0.0, f64::max);
    if !sup_h.is_finite() || sup_h > epsilon * (1.0 + 1e-12) {
        return Err(Error::Input(format!(
            "perturbation exceeds epsilon on the grid: sup |h| = {sup_h}, epsilon = {epsilon}"
        )));
    }
    let extra = |t: f64| perturbation.eval(t);
    let (exact, perturbed) = thread::scope(|s| {
        let a = s.spawn(|| solve_delay(problem, grid));
        let b = solve_delay_forced(problem, grid, Some(&extra));
        (a.join().expect("solver thread panicked"), b)
    });
    let exact = exact?.trajectory;
    let perturbed = perturbed?.trajectory;
    let measured = perturbed.sup_distance_forward(&exact)?;
    let defect = apply_operator(problem, grid, &perturbed)?.sup_distance_forward(&perturbed)?;
    let t_alpha = problem.horizon().powf(problem.alpha());
    let k = report.ulam_k.expect("present when unique");
    let slack = discretization_slack(grid);
    let bound = k * epsilon;
    let defect_bound = t_alpha * epsilon / report.contraction_rhs;
    Ok(UlamReport {
        epsilon,
        perturbation_sup: sup_h,
        measured,
        ulam_k: k,
        bound,
        defect,
        defect_bound,
        slack,
        pass: measured <= bound + slack,
        defect_pass: defect <= defect_bound + slack,
    })
}

/// Largest secant slope of `g` over `samples` equally spaced points of
/// `[lo, hi]`. For a piecewise-monotone sample the maximum over adjacent
/// pairs equals the maximum over all pairs, so only neighbours are compared.
/// The result is a lower bound on the Lipschitz constant on the range.
pub fn lipschitz_estimate<F: Fn(f64) -> f64>(g: F, lo: f64, hi: f64, samples: usize) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Input(format!("Lipschitz range must satisfy lo < hi, got [{lo}, {hi}]")));
    }
    if samples < 2 {
        return Err(Error::Input(format!("need at least 2 samples, got {samples}")));
    }
    let dx = (hi - lo) / (samples - 1) as f64;
    let mut prev = g(lo);
    if !prev.is_finite() {
        return Err(Error::Input(format!("g is not finite at {lo}")));
    }
    let mut best = 0.0f64;
    for k in 1..samples {
        let x = if k == samples - 1 { hi } else { lo + dx * k as f64 };
        let y = g(x);
        if !y.is_finite() {
            return Err(Error::Input(format!("g is not finite at {x}")));
        }
        best = best.max((y - prev).abs() / dx);
        prev = y;
    }
    Ok(best)
}

/// Warning text when the sampled slope of `g` exceeds the supplied constant.
pub fn lipschitz_warning<F: Fn(f64) -> f64>(
    g: F,
    supplied: f64,
    lo: f64,
    hi: f64,
    samples: usize,
) -> Result<Option<String>> {
    let est = lipschitz_estimate(g, lo, hi, samples)?;
    Ok((est > supplied + 1e-9).then(|| {
        format!("sampled slope {est} on [{lo}, {hi}] exceeds the supplied Lipschitz constant {supplied}")
    }))
}
