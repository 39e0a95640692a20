//! Uniform time grids and the sampled trajectories the solvers produce.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::sig12;

/// Nodes `t_k = k·h`, `k = 0..=steps`, covering `[0, steps·h]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UniformGrid {
    step: f64,
    steps: usize,
}

impl UniformGrid {
    pub fn new(horizon: f64, steps: usize) -> Result<Self> {
        if !(horizon.is_finite() && horizon > 0.0) {
            return Err(Error::Input(format!("grid horizon must be positive and finite, got {horizon}")));
        }
        if steps == 0 {
            return Err(Error::Input("grid needs at least one step".into()));
        }
        Ok(UniformGrid {
            step: horizon / steps as f64,
            steps,
        })
    }

    /// Grid on `[0, horizon]` whose step is the closest to `step` that divides
    /// the horizon evenly.
    pub fn with_step(horizon: f64, step: f64) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::Input(format!("grid step must be positive and finite, got {step}")));
        }
        if !(horizon.is_finite() && horizon > 0.0) {
            return Err(Error::Input(format!("grid horizon must be positive and finite, got {horizon}")));
        }
        let steps = (horizon / step).round().max(1.0);
        if steps > 1e8 {
            return Err(Error::Input(format!("grid step {step} is too small for horizon {horizon}")));
        }
        UniformGrid::new(horizon, steps as usize)
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Number of nodes, `steps + 1`.
    pub fn len(&self) -> usize {
        self.steps + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn horizon(&self) -> f64 {
        self.steps as f64 * self.step
    }

    pub fn time(&self, k: usize) -> f64 {
        k as f64 * self.step
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |k| self.time(k))
    }

    /// Samples `f` at every node.
    pub fn sample<F: Fn(f64) -> f64>(&self, f: F) -> Vec<f64> {
        self.times().map(f).collect()
    }

    /// Same horizon, half the step.
    pub fn refined(&self) -> UniformGrid {
        UniformGrid {
            step: 0.5 * self.step,
            steps: 2 * self.steps,
        }
    }
}

/// Samples `x(t_k)` at `t_k = (first + k)·h`. `first` is zero for problems on
/// `[0, T]` and negative when a history segment precedes the origin.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    first: i64,
    step: f64,
    values: Vec<f64>,
}

impl Trajectory {
    pub fn new(first: i64, step: f64, values: Vec<f64>) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::Input(format!("trajectory step must be positive, got {step}")));
        }
        if values.len() < 2 {
            return Err(Error::Input(format!("trajectory needs at least 2 samples, got {}", values.len())));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                step: k,
                what: "trajectory sample".into(),
            });
        }
        Ok(Trajectory { first, step, values })
    }

    /// Trajectory on the nodes of `grid`.
    pub fn on_grid(grid: &UniformGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Input(format!(
                "{} samples for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        Trajectory::new(0, grid.step(), values)
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn start_time(&self) -> f64 {
        self.first as f64 * self.step
    }

    pub fn end_time(&self) -> f64 {
        self.time(self.values.len() - 1)
    }

    pub fn time(&self, k: usize) -> f64 {
        (self.first + k as i64) as f64 * self.step
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Index of the node at `t = 0`, if the trajectory contains it.
    pub fn origin_index(&self) -> Option<usize> {
        let k = -self.first;
        (k >= 0 && (k as usize) < self.values.len()).then_some(k as usize)
    }

    /// Samples with `t >= 0`.
    pub fn forward_values(&self) -> &[f64] {
        match self.origin_index() {
            Some(k) => &self.values[k..],
            None if self.first > 0 => &self.values,
            None => &[],
        }
    }

    /// Samples with `t <= 0`.
    pub fn history_values(&self) -> &[f64] {
        match self.origin_index() {
            Some(k) => &self.values[..=k],
            None if self.first > 0 => &[],
            None => &self.values,
        }
    }

    /// Linear interpolation; `None` outside the sampled range.
    pub fn eval(&self, t: f64) -> Option<f64> {
        let pos = t / self.step - self.first as f64;
        let last = (self.values.len() - 1) as f64;
        if !(pos >= -1e-9 && pos <= last + 1e-9) {
            return None;
        }
        let pos = pos.clamp(0.0, last);
        let k = (pos.floor() as usize).min(self.values.len() - 2);
        let frac = pos - k as f64;
        Some(self.values[k] + frac * (self.values[k + 1] - self.values[k]))
    }

    /// `max |x|` over the samples with `t >= 0`.
    pub fn sup_norm_forward(&self) -> f64 {
        sup_abs(self.forward_values())
    }

    /// `max_k |x_k - y_k|` over the common `t >= 0` samples; the trajectories
    /// must share step and alignment.
    pub fn sup_distance_forward(&self, other: &Trajectory) -> Result<f64> {
        self.check_aligned(other)?;
        let a = self.forward_values();
        let b = other.forward_values();
        if a.len() != b.len() {
            return Err(Error::Input("trajectories cover different horizons".into()));
        }
        Ok(a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
    }

    fn check_aligned(&self, other: &Trajectory) -> Result<()> {
        if self.step != other.step {
            return Err(Error::Input(format!(
                "trajectory steps differ ({} vs {})",
                self.step, other.step
            )));
        }
        Ok(())
    }

    /// CSV with header `t,x`, 12 significant digits per field.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(32 * self.values.len());
        out.push_str("t,x\n");
        for (k, v) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{},{}", sig12(self.time(k)), sig12(*v));
        }
        out
    }
}

pub(crate) fn sup_abs(values: &[f64]) -> f64 {
    values.iter().map(|v| v.abs()).fold(0.0, f64::max)
}
