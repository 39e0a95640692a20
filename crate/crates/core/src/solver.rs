//! Time-marching solvers for the fractional Voigt model
//! `D^α x + λx = φ` and its multi-delay generalisation
//!
//! ```text
//! x(t) = ∫₀ᵗ e_α^{-λ(t-s)} Σ_j b_j(s) g_j(x(s - τ_j)) ds,   x = ψ on [-v, 0].
//! ```
//!
//! The kernel is never sampled directly: every solver integrates it exactly
//! over grid cells through `K(u) = u^α E_{α,α+1}(-λu^α)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::ScalarFn;
use crate::mlf::{kernel_integral, KernelArgs};
use crate::special::gamma;
use crate::trajectory::{sup_abs, Trajectory, UniformGrid};

/// Default number of steps on `[0, T]` when no step is given.
pub const DEFAULT_STEPS: usize = 1024;

const HISTORY_ANCHOR_TOL: f64 = 1e-12;
const SUBITER_MAX: usize = 50;
const SUBITER_TOL: f64 = 1e-12;
const SAMPLE_POINTS: usize = 4096;

/// One summand `b_j(t) g_j(x(t - τ_j))` of the forcing.
#[derive(Debug, Clone, PartialEq)]
pub struct DelayTerm {
    pub b: ScalarFn,
    /// `B_j = sup |b_j|` on `[0, T]`; estimated by sampling when absent.
    pub b_sup: Option<f64>,
    pub g: ScalarFn,
    /// Lipschitz constant `l_j` of `g_j`.
    pub lipschitz: Option<f64>,
    pub delay: f64,
}

impl DelayTerm {
    pub fn new(b: ScalarFn, g: ScalarFn, lipschitz: f64, delay: f64) -> Self {
        DelayTerm {
            b,
            b_sup: None,
            g,
            lipschitz: Some(lipschitz),
            delay,
        }
    }

    pub fn with_b_sup(mut self, b_sup: f64) -> Self {
        self.b_sup = Some(b_sup);
        self
    }
}

/// A validated delay problem on `[0, T]` with history on `[-v, 0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    alpha: f64,
    lambda: f64,
    horizon: f64,
    terms: Vec<DelayTerm>,
    history: ScalarFn,
    grid_step: Option<f64>,
    b_bounds: Vec<f64>,
    warnings: Vec<String>,
}

impl ProblemSpec {
    pub fn new(alpha: f64, lambda: f64, horizon: f64, terms: Vec<DelayTerm>, history: ScalarFn) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Input(format!("alpha must lie in (0, 1], got {alpha}")));
        }
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::Input(format!("lambda must be positive, got {lambda}")));
        }
        if !(horizon.is_finite() && horizon > 0.0) {
            return Err(Error::Input(format!("horizon must be positive, got {horizon}")));
        }
        if terms.is_empty() {
            return Err(Error::Input("at least one delay term required".into()));
        }
        for (j, term) in terms.iter().enumerate() {
            let tau = term.delay;
            if !(tau.is_finite() && tau > 0.0) {
                return Err(Error::Input(format!("terms[{j}].delay must be positive, got {tau}")));
            }
            if tau > horizon {
                return Err(Error::Input(format!(
                    "terms[{j}].delay = {tau} exceeds the horizon {horizon}"
                )));
            }
            if let Some(l) = term.lipschitz {
                if !(l.is_finite() && l >= 0.0) {
                    return Err(Error::Input(format!("terms[{j}].lipschitz must be non-negative, got {l}")));
                }
            }
            if let Some(b) = term.b_sup {
                if !(b.is_finite() && b >= 0.0) {
                    return Err(Error::Input(format!("terms[{j}].b_sup must be non-negative, got {b}")));
                }
            }
        }
        let mut spec = ProblemSpec {
            alpha,
            lambda,
            horizon,
            terms,
            history,
            grid_step: None,
            b_bounds: Vec::new(),
            warnings: Vec::new(),
        };
        spec.check_history()?;
        spec.resolve_bounds()?;
        Ok(spec)
    }

    /// Same problem with a different history.
    pub fn with_history(&self, history: ScalarFn) -> Result<Self> {
        let mut spec = self.clone();
        spec.history = history;
        spec.warnings.retain(|w| !w.starts_with("history"));
        spec.check_history()?;
        Ok(spec)
    }

    /// Same problem with a preferred grid step for [`ProblemSpec::default_grid`].
    pub fn with_grid_step(mut self, step: f64) -> Result<Self> {
        UniformGrid::with_step(self.horizon, step)?;
        self.grid_step = Some(step);
        Ok(self)
    }

    fn check_history(&mut self) -> Result<()> {
        let at0 = self.history.eval(0.0);
        if at0.is_nan() || at0.abs() > HISTORY_ANCHOR_TOL {
            return Err(Error::Input(format!("history must vanish at 0, got psi(0) = {at0}")));
        }
        let v = self.max_delay();
        let samples: Vec<f64> = (0..=SAMPLE_POINTS)
            .map(|k| -v + v * k as f64 / SAMPLE_POINTS as f64)
            .map(|t| self.history.eval(t))
            .collect();
        if let Some(k) = samples.iter().position(|x| !x.is_finite()) {
            let t = -v + v * k as f64 / SAMPLE_POINTS as f64;
            return Err(Error::Input(format!("history is not finite at t = {t}")));
        }
        // A jump keeps its size under refinement; a continuous increment shrinks.
        let fine = samples.windows(2).map(|w| (w[1] - w[0]).abs()).fold(0.0, f64::max);
        let coarse = samples
            .iter()
            .step_by(2)
            .collect::<Vec<_>>()
            .windows(2)
            .map(|w| (w[1] - w[0]).abs())
            .fold(0.0, f64::max);
        let scale = 1.0 + sup_abs(&samples);
        if fine > 1e-3 * scale && fine > 0.9 * coarse {
            return Err(Error::Input(format!(
                "history appears discontinuous on [-{v}, 0] (jump of about {fine:.3e})"
            )));
        }
        Ok(())
    }

    fn resolve_bounds(&mut self) -> Result<()> {
        let n = SAMPLE_POINTS;
        let mut bounds = Vec::with_capacity(self.terms.len());
        let mut warnings = Vec::new();
        for (j, term) in self.terms.iter().enumerate() {
            let mut sup = 0.0f64;
            for k in 0..=n {
                let b = term.b.eval(self.horizon * k as f64 / n as f64);
                if !b.is_finite() {
                    return Err(Error::Input(format!(
                        "terms[{j}].b is not finite at t = {}",
                        self.horizon * k as f64 / n as f64
                    )));
                }
                sup = sup.max(b.abs());
            }
            match term.b_sup {
                Some(given) => {
                    if sup > given * (1.0 + 1e-9) + 1e-12 {
                        warnings.push(format!(
                            "terms[{j}].b_sup = {given} is below the sampled maximum {sup}"
                        ));
                    }
                    bounds.push(given);
                }
                None => bounds.push(sup),
            }
            let g0 = term.g.eval(0.0);
            if g0 == 0.0 {
                warnings.push(format!("terms[{j}].g vanishes at 0"));
            }
        }
        self.b_bounds = bounds;
        self.warnings.extend(warnings);
        Ok(())
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn terms(&self) -> &[DelayTerm] {
        &self.terms
    }

    pub fn history(&self) -> &ScalarFn {
        &self.history
    }

    pub fn grid_step(&self) -> Option<f64> {
        self.grid_step
    }

    /// `v = max_j τ_j`.
    pub fn max_delay(&self) -> f64 {
        self.terms.iter().map(|t| t.delay).fold(0.0, f64::max)
    }

    /// `B_j` per term: supplied values, otherwise sampled maxima of `|b_j|`.
    pub fn b_bounds(&self) -> &[f64] {
        &self.b_bounds
    }

    /// Non-fatal findings from validation.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Grid on `[0, T]` from the stored step, or `T / 1024`.
    pub fn default_grid(&self) -> UniformGrid {
        match self.grid_step {
            Some(h) => UniformGrid::with_step(self.horizon, h).expect("step validated on construction"),
            None => UniformGrid::new(self.horizon, DEFAULT_STEPS).expect("horizon validated on construction"),
        }
    }

    /// `ψ(t)` for `t ∈ [-v, 0]`.
    pub fn history_eval(&self, t: f64) -> Result<f64> {
        let v = self.max_delay();
        if !(t >= -v * (1.0 + 1e-12) && t <= 0.0) {
            return Err(Error::Domain(format!("history is defined on [-{v}, 0], got t = {t}")));
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        Ok(self.history.eval(t))
    }

    /// `Σ_j B_j l_j`; fails when a Lipschitz constant is missing.
    pub fn lipschitz_sum(&self) -> Result<f64> {
        let mut sum = 0.0;
        for (j, (term, b)) in self.terms.iter().zip(&self.b_bounds).enumerate() {
            let l = term
                .lipschitz
                .ok_or_else(|| Error::Input(format!("terms[{j}].lipschitz is required")))?;
            sum += b * l;
        }
        Ok(sum)
    }

    /// `T^α Σ_j B_j l_j`.
    pub fn contraction_lhs(&self) -> Result<f64> {
        Ok(self.horizon.powf(self.alpha) * self.lipschitz_sum()?)
    }

    /// `Γ(α + 1)`.
    pub fn contraction_rhs(&self) -> f64 {
        gamma(self.alpha + 1.0)
    }

    /// Whether the contraction condition holds; `false` when constants are
    /// missing.
    pub fn contraction_holds(&self) -> bool {
        self.contraction_lhs().map(|l| l < self.contraction_rhs()).unwrap_or(false)
    }
}

/// `K(m·h)` for `m = 0..=steps`.
fn kernel_table(alpha: f64, lambda: f64, grid: &UniformGrid) -> Result<Vec<f64>> {
    (0..grid.len())
        .map(|m| kernel_integral(&KernelArgs::new(alpha, lambda, grid.time(m))))
        .collect()
}

/// Cell weights `ΔK_m = K(mh) - K((m-1)h)`, `m = 1..=steps`, stored at index m.
fn kernel_weights(alpha: f64, lambda: f64, grid: &UniformGrid) -> Result<Vec<f64>> {
    let k = kernel_table(alpha, lambda, grid)?;
    let mut w = vec![0.0; k.len()];
    for m in 1..k.len() {
        w[m] = k[m] - k[m - 1];
    }
    Ok(w)
}

fn check_linear_inputs(alpha: f64, lambda: f64, phi: &[f64], grid: &UniformGrid) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Input(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::Input(format!("lambda must be positive, got {lambda}")));
    }
    if phi.len() != grid.len() {
        return Err(Error::Input(format!(
            "phi has {} samples but the grid has {} nodes",
            phi.len(),
            grid.len()
        )));
    }
    if let Some(k) = phi.iter().position(|v| !v.is_finite()) {
        return Err(Error::Input(format!("phi sample {k} is not finite")));
    }
    Ok(())
}

/// `x(t) = ∫₀ᵗ e_α^{-λ(t-s)} φ(s) ds` by product integration: `φ` is replaced
/// on each cell by the mean of its endpoint samples and the kernel is
/// integrated exactly.
pub fn solve_linear_closed(alpha: f64, lambda: f64, phi: &[f64], grid: &UniformGrid) -> Result<Trajectory> {
    check_linear_inputs(alpha, lambda, phi, grid)?;
    let w = kernel_weights(alpha, lambda, grid)?;
    let mid: Vec<f64> = phi.windows(2).map(|p| 0.5 * (p[0] + p[1])).collect();
    let x = (0..grid.len())
        .map(|n| (0..n).map(|k| mid[k] * w[n - k]).sum())
        .collect();
    Trajectory::on_grid(grid, x)
}

/// Product-rectangle weights `h^α [j^α - (j-1)^α] / Γ(α+1)`, index `j ≥ 1`.
fn rectangle_weights(alpha: f64, grid: &UniformGrid) -> Vec<f64> {
    let scale = grid.step().powf(alpha) / gamma(alpha + 1.0);
    let mut w = vec![0.0; grid.len()];
    for (j, wj) in w.iter_mut().enumerate().skip(1) {
        *wj = scale * ((j as f64).powf(alpha) - ((j - 1) as f64).powf(alpha));
    }
    w
}

/// Second-kind form `x = I^α φ - λ I^α x`, marched with product-rectangle
/// weights for the Riemann-Liouville kernel; the integrand on each cell is the
/// mean of its endpoint values, so the new node enters through the diagonal
/// weight. Uses no Mittag-Leffler evaluations.
pub fn solve_linear_volterra(alpha: f64, lambda: f64, phi: &[f64], grid: &UniformGrid) -> Result<Trajectory> {
    check_linear_inputs(alpha, lambda, phi, grid)?;
    let w = rectangle_weights(alpha, grid);
    let diag = 1.0 + 0.5 * lambda * w[1];
    let mut x = vec![0.0; grid.len()];
    for n in 1..grid.len() {
        let mut acc = 0.5 * w[1] * (phi[n] + phi[n - 1] - lambda * x[n - 1]);
        for k in 1..n {
            let cell = 0.5 * (phi[k] + phi[k - 1] - lambda * (x[k] + x[k - 1]));
            acc += w[n - k + 1] * cell;
        }
        x[n] = acc / diag;
    }
    Trajectory::on_grid(grid, x)
}

/// Fractional trapezoidal product weights: `I^α f(t_n) ≈ Σ_j a_{j,n} f_j` for
/// `f` piecewise linear between nodes.
fn trapezoid_integral(alpha: f64, grid: &UniformGrid, f: &[f64]) -> Vec<f64> {
    let c = grid.step().powf(alpha) / gamma(alpha + 2.0);
    let p = |m: usize| (m as f64).powf(alpha + 1.0);
    let mut out = vec![0.0; f.len()];
    for n in 1..f.len() {
        let nf = n as f64;
        let mut acc = (p(n - 1) - (nf - 1.0 - alpha) * nf.powf(alpha)) * f[0] + f[n];
        for (j, fj) in f.iter().enumerate().take(n).skip(1) {
            acc += (p(n - j + 1) - 2.0 * p(n - j) + p(n - j - 1)) * fj;
        }
        out[n] = c * acc;
    }
    out
}

/// Successive approximations `x^{m+1} = I^α φ - λ I^α x^m` from `x^0 = 0`,
/// with `I^α` applied exactly to the piecewise-linear interpolant. Returns
/// `x^0, ..., x^iterations`.
pub fn picard_linear(
    alpha: f64,
    lambda: f64,
    phi: &[f64],
    grid: &UniformGrid,
    iterations: usize,
) -> Result<Vec<Trajectory>> {
    check_linear_inputs(alpha, lambda, phi, grid)?;
    let source = trapezoid_integral(alpha, grid, phi);
    let mut x = vec![0.0; grid.len()];
    let mut out = vec![Trajectory::on_grid(grid, x.clone())?];
    for _ in 0..iterations {
        let ix = trapezoid_integral(alpha, grid, &x);
        x = source.iter().zip(&ix).map(|(s, i)| s - lambda * i).collect();
        out.push(Trajectory::on_grid(grid, x.clone())?);
    }
    Ok(out)
}

/// Result of [`solve_delay`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DelaySolution {
    /// Samples on `[-v', T]`, where `-v'` is the first grid node not before `-v`.
    pub trajectory: Trajectory,
    /// Whether the contraction condition certifies a unique solution.
    pub uniqueness_guaranteed: bool,
    pub warnings: Vec<String>,
}

struct Marcher<'a> {
    problem: &'a ProblemSpec,
    h: f64,
    prefix: usize,
    weights: Vec<f64>,
}

impl<'a> Marcher<'a> {
    fn new(problem: &'a ProblemSpec, grid: &UniformGrid) -> Result<Self> {
        let rel = (grid.horizon() - problem.horizon).abs() / problem.horizon;
        if rel > 1e-9 {
            return Err(Error::Input(format!(
                "grid covers [0, {}] but the problem horizon is {}",
                grid.horizon(),
                problem.horizon
            )));
        }
        let h = grid.step();
        let prefix = (problem.max_delay() / h + 1e-9).floor() as usize;
        Ok(Marcher {
            problem,
            h,
            prefix,
            weights: kernel_weights(problem.alpha, problem.lambda, grid)?,
        })
    }

    fn history_values(&self) -> Vec<f64> {
        (0..=self.prefix)
            .map(|i| {
                let t = -((self.prefix - i) as f64) * self.h;
                if i == self.prefix {
                    0.0
                } else {
                    self.problem.history.eval(t)
                }
            })
            .collect()
    }

    /// `x(t)` for `t ≤ known·h`, from `ψ` when `t ≤ 0`, otherwise by linear
    /// interpolation of the forward samples `x[0..]`.
    fn state(&self, x: &[f64], t: f64) -> f64 {
        if t <= 0.0 {
            return self.problem.history.eval(t);
        }
        let pos = t / self.h;
        let k = (pos.floor() as usize).min(x.len() - 1);
        let frac = pos - k as f64;
        if frac == 0.0 || k + 1 >= x.len() {
            x[k]
        } else {
            x[k] + frac * (x[k + 1] - x[k])
        }
    }

    /// Composite forcing at the midpoint of cell `k`, reading state from `x`.
    fn forcing(&self, x: &[f64], k: usize, extra: Option<&dyn Fn(f64) -> f64>) -> Result<f64> {
        let s = (k as f64 + 0.5) * self.h;
        let mut f = extra.map_or(0.0, |e| e(s));
        for term in &self.problem.terms {
            let b = term.b.eval(s);
            if b != 0.0 {
                f += b * term.g.eval(self.state(x, s - term.delay));
            }
        }
        if !f.is_finite() {
            return Err(Error::NonFinite {
                step: k + 1,
                what: format!("forcing at t = {s}"),
            });
        }
        Ok(f)
    }

    /// Whether the forcing of cell `k` reads the unknown node `k + 1`.
    fn implicit(&self, k: usize) -> bool {
        let s = (k as f64 + 0.5) * self.h;
        self.problem
            .terms
            .iter()
            .any(|t| s - t.delay > k as f64 * self.h)
    }

    fn convolve(&self, f: &[f64], n: usize) -> f64 {
        (0..n).map(|k| f[k] * self.weights[n - k]).sum()
    }

    fn assemble(&self, forward: Vec<f64>) -> Result<Trajectory> {
        let mut values = self.history_values();
        values.extend_from_slice(&forward[1..]);
        Trajectory::new(-(self.prefix as i64), self.h, values)
    }

    fn march(&self, extra: Option<&dyn Fn(f64) -> f64>, warnings: &mut Vec<String>) -> Result<Vec<f64>> {
        let n_nodes = self.weights.len();
        let mut x = vec![0.0; n_nodes];
        let mut f = Vec::with_capacity(n_nodes - 1);
        let mut worst_residual = 0.0f64;
        for n in 1..n_nodes {
            let k = n - 1;
            if !self.implicit(k) {
                f.push(self.forcing(&x[..n], k, extra)?);
                x[n] = self.convolve(&f, n);
            } else {
                let base: f64 = (0..k).map(|i| f[i] * self.weights[n - i]).sum();
                let mut xn = x[k];
                let mut fk = 0.0;
                let mut residual = f64::INFINITY;
                for _ in 0..SUBITER_MAX {
                    x[n] = xn;
                    fk = self.forcing(&x[..=n], k, extra)?;
                    let next = base + fk * self.weights[1];
                    residual = (next - xn).abs();
                    xn = next;
                    if residual <= SUBITER_TOL * (1.0 + xn.abs()) {
                        break;
                    }
                }
                worst_residual = worst_residual.max(residual);
                x[n] = xn;
                f.push(fk);
            }
            if !x[n].is_finite() {
                return Err(Error::NonFinite {
                    step: n,
                    what: "solution value".into(),
                });
            }
        }
        if worst_residual > SUBITER_TOL * (1.0 + sup_abs(&x)) {
            warnings.push(format!(
                "same-step sub-iteration did not reach 1e-12 (worst residual {worst_residual:.3e})"
            ));
        }
        Ok(x)
    }
}

/// Solves the delay problem on `grid` (which must cover `[0, T]`).
///
/// The forcing is evaluated at cell midpoints, delayed states are linearly
/// interpolated (or read from `ψ` for non-positive arguments) and the kernel
/// is integrated exactly over each cell. When a delay is shorter than half a
/// step the midpoint forcing depends on the node being computed; that node is
/// then found by fixed-point iteration.
pub fn solve_delay(problem: &ProblemSpec, grid: &UniformGrid) -> Result<DelaySolution> {
    solve_delay_forced(problem, grid, None)
}

/// [`solve_delay`] with an additional forcing term added to `Σ_j b_j g_j`.
pub fn solve_delay_forced(
    problem: &ProblemSpec,
    grid: &UniformGrid,
    extra: Option<&dyn Fn(f64) -> f64>,
) -> Result<DelaySolution> {
    let marcher = Marcher::new(problem, grid)?;
    let mut warnings = problem.warnings.clone();
    let uniqueness_guaranteed = match problem.contraction_lhs() {
        Ok(lhs) if lhs < problem.contraction_rhs() => true,
        Ok(lhs) => {
            warnings.push(format!(
                "uniqueness not guaranteed: T^alpha * sum B_j l_j = {lhs} >= Gamma(alpha+1) = {}",
                problem.contraction_rhs()
            ));
            false
        }
        Err(_) => {
            warnings.push("uniqueness not guaranteed: Lipschitz constants missing".into());
            false
        }
    };
    let forward = marcher.march(extra, &mut warnings)?;
    Ok(DelaySolution {
        trajectory: marcher.assemble(forward)?,
        uniqueness_guaranteed,
        warnings,
    })
}

/// One application of `(Px)(t) = ∫₀ᵗ e_α^{-λ(t-s)} Σ_j b_j(s) g_j(x(s-τ_j)) ds`
/// discretised as in [`solve_delay`], with `x` on `[0, T]` taken from the
/// forward samples of `x` and `ψ` used for non-positive arguments.
pub fn apply_operator(problem: &ProblemSpec, grid: &UniformGrid, x: &Trajectory) -> Result<Trajectory> {
    let marcher = Marcher::new(problem, grid)?;
    let forward = x.forward_values();
    if x.step() != grid.step() || forward.len() != grid.len() {
        return Err(Error::Input("trajectory does not match the grid".into()));
    }
    let f = (0..grid.steps())
        .map(|k| marcher.forcing(forward, k, None))
        .collect::<Result<Vec<_>>>()?;
    let px = (0..grid.len()).map(|n| marcher.convolve(&f, n)).collect();
    marcher.assemble(px)
}

/// Iterates and successive-difference ratios of the Picard scheme.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PicardRun {
    /// `x^0, ..., x^m`.
    pub iterates: Vec<Trajectory>,
    /// `r_m = ‖x^{m+1} - x^m‖ / ‖x^m - x^{m-1}‖` for `m = 1..`; reported as 0
    /// once the denominator is at rounding level.
    pub ratios: Vec<f64>,
    /// `‖x^{m+1} - x^m‖` on `[0, T]` for `m = 0..`.
    pub increments: Vec<f64>,
    /// `T^α Σ B_j l_j / Γ(α+1)` when the Lipschitz constants are known.
    pub contraction_bound: Option<f64>,
}

/// Runs `iterations` Picard steps from `x^0 = ψ` on `[-v, 0]`, `0` on `[0, T]`.
pub fn picard_iterate(problem: &ProblemSpec, grid: &UniformGrid, iterations: usize) -> Result<PicardRun> {
    if iterations < 2 {
        return Err(Error::Input(format!("need at least 2 Picard iterations, got {iterations}")));
    }
    let marcher = Marcher::new(problem, grid)?;
    let mut iterates = vec![marcher.assemble(vec![0.0; grid.len()])?];
    let mut increments = Vec::with_capacity(iterations);
    for _ in 0..iterations {
        let prev = iterates.last().expect("non-empty");
        let next = apply_operator(problem, grid, prev)?;
        increments.push(next.sup_distance_forward(prev)?);
        iterates.push(next);
    }
    let scale = iterates.iter().map(|x| x.sup_norm_forward()).fold(0.0, f64::max);
    let floor = 64.0 * f64::EPSILON * (1.0 + scale);
    let ratios = increments
        .windows(2)
        .map(|d| if d[0] <= floor { 0.0 } else { d[1] / d[0] })
        .collect();
    let contraction_bound = problem
        .contraction_lhs()
        .ok()
        .map(|lhs| lhs / problem.contraction_rhs());
    Ok(PicardRun {
        iterates,
        ratios,
        increments,
        contraction_bound,
    })
}
