//! Classical and fractional Voigt creep functions, the strain-from-stress
//! map and finite-difference monotonicity probes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mlf::{kernel_integral, kernel_second_integral, ml, KernelArgs};
use crate::trajectory::{Trajectory, UniformGrid};

/// Voigt element: spring `E` in parallel with a (fractional) dashpot `η`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Material {
    pub elastic_modulus: f64,
    pub viscosity: f64,
    pub alpha: f64,
}

impl Material {
    pub fn new(elastic_modulus: f64, viscosity: f64, alpha: f64) -> Result<Self> {
        for (name, v) in [("elastic modulus", elastic_modulus), ("viscosity", viscosity)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Domain(format!("fractional order must lie in (0, 1], got {alpha}")));
        }
        Ok(Material {
            elastic_modulus,
            viscosity,
            alpha,
        })
    }

    /// `τ = η / E`.
    pub fn retardation_time(&self) -> f64 {
        self.viscosity / self.elastic_modulus
    }

    /// `λ = E / η`.
    pub fn rate(&self) -> f64 {
        self.elastic_modulus / self.viscosity
    }
}

fn check_time(t: f64) -> Result<()> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::Domain(format!("creep time must be finite and non-negative, got {t}")));
    }
    Ok(())
}

/// `(1/E)(1 - exp(-t/τ))`. The order of `material` is ignored.
pub fn classical_creep(material: &Material, t: f64) -> Result<f64> {
    check_time(t)?;
    Ok(-(-t / material.retardation_time()).exp_m1() / material.elastic_modulus)
}

/// `(1/E)(1 - E_α(-t^α/τ))`.
pub fn fractional_creep(material: &Material, t: f64) -> Result<f64> {
    check_time(t)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    let a = material.alpha;
    let e = ml(a, 1.0, -material.rate() * t.powf(a))?;
    Ok((1.0 - e) / material.elastic_modulus)
}

/// `(1/η) t^α E_{α,α+1}(-λ t^α)`, algebraically equal to
/// [`fractional_creep`] but free of the cancellation in `1 - E_α` at small t.
pub fn fractional_creep_raw(material: &Material, t: f64) -> Result<f64> {
    check_time(t)?;
    let k = kernel_integral(&KernelArgs::new(material.alpha, material.rate(), t))?;
    Ok(k / material.viscosity)
}

/// Strain response `x(t) = K(t)φ(0) + ∫₀ᵗ K(t-s) φ'(s) ds` with
/// `K(u) = u^α E_{α,α+1}(-λu^α)`, i.e. the creep function scaled by `η` so the
/// result coincides with the Volterra solution of `D^α x + λx = φ`.
///
/// `φ` is taken piecewise linear between samples, so `φ'` on each cell is the
/// secant slope (the central difference at the cell midpoint), and every
/// cell integral is exact through the second kernel primitive.
pub fn strain_from_stress(material: &Material, stress: &[f64], grid: &UniformGrid) -> Result<Trajectory> {
    if stress.len() != grid.len() {
        return Err(Error::Input(format!(
            "stress has {} samples but the grid has {} nodes",
            stress.len(),
            grid.len()
        )));
    }
    if let Some(k) = stress.iter().position(|v| !v.is_finite()) {
        return Err(Error::Input(format!("stress sample {k} is not finite")));
    }
    let (alpha, lambda, h) = (material.alpha, material.rate(), grid.step());
    let mut k_tab = Vec::with_capacity(grid.len());
    let mut j_tab = Vec::with_capacity(grid.len());
    for m in 0..grid.len() {
        let args = KernelArgs::new(alpha, lambda, m as f64 * h);
        k_tab.push(kernel_integral(&args)?);
        j_tab.push(kernel_second_integral(&args)?);
    }
    let slopes: Vec<f64> = stress.windows(2).map(|w| (w[1] - w[0]) / h).collect();
    let mut x = Vec::with_capacity(grid.len());
    for n in 0..grid.len() {
        let mut acc = k_tab[n] * stress[0];
        for (k, s) in slopes.iter().enumerate().take(n) {
            acc += s * (j_tab[n - k] - j_tab[n - k - 1]);
        }
        x.push(acc);
    }
    Trajectory::on_grid(grid, x)
}

/// Sign convention checked by [`monotonicity_probe`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonotonicityKind {
    /// `(-1)ⁿ Δⁿ f ≥ 0`: decreasing, convex, ... (e.g. `E_α(-t)`).
    CompletelyMonotone,
    /// `(-1)ⁿ⁻¹ Δⁿ f ≥ 0`: increasing with completely monotone derivative
    /// (creep functions such as `1 - e^{-t}`).
    Bernstein,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderCheck {
    pub order: usize,
    pub pass: bool,
    /// Largest amount by which a signed difference fell below zero; 0 when
    /// every difference has the expected sign.
    pub worst_violation: f64,
    /// Index of the first sample of the worst difference.
    pub worst_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub kind: MonotonicityKind,
    pub orders: Vec<OrderCheck>,
}

impl MonotonicityReport {
    pub fn all_pass(&self) -> bool {
        self.orders.iter().all(|o| o.pass)
    }

    /// First order whose sign pattern fails.
    pub fn first_failure(&self) -> Option<usize> {
        self.orders.iter().find(|o| !o.pass).map(|o| o.order)
    }
}

/// Forward differences of orders `1..=max_order` of uniformly spaced samples,
/// checked against the sign pattern of `kind`. `tol` bounds the error of each
/// sample; an order-n difference may then be off by `2ⁿ·tol`, which is the
/// allowance used.
pub fn monotonicity_probe(
    samples: &[f64],
    max_order: usize,
    kind: MonotonicityKind,
    tol: f64,
) -> Result<MonotonicityReport> {
    if !(1..=4).contains(&max_order) {
        return Err(Error::Input(format!("probe order must be between 1 and 4, got {max_order}")));
    }
    if samples.len() < max_order + 1 {
        return Err(Error::Input(format!(
            "order-{max_order} probe needs at least {} samples, got {}",
            max_order + 1,
            samples.len()
        )));
    }
    if let Some(k) = samples.iter().position(|v| !v.is_finite()) {
        return Err(Error::Input(format!("sample {k} is not finite")));
    }
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::Input(format!("probe tolerance must be non-negative, got {tol}")));
    }
    let mut diff = samples.to_vec();
    let mut orders = Vec::with_capacity(max_order);
    for n in 1..=max_order {
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        let odd = n % 2 == 1;
        let sign = match kind {
            MonotonicityKind::CompletelyMonotone if odd => -1.0,
            MonotonicityKind::CompletelyMonotone => 1.0,
            MonotonicityKind::Bernstein if odd => 1.0,
            MonotonicityKind::Bernstein => -1.0,
        };
        let allowance = tol * (1u32 << n) as f64;
        let (mut worst, mut worst_index) = (0.0, None);
        for (i, d) in diff.iter().enumerate() {
            let v = -sign * d;
            if v > worst {
                worst = v;
                worst_index = Some(i);
            }
        }
        orders.push(OrderCheck {
            order: n,
            pass: worst <= allowance,
            worst_violation: worst,
            worst_index,
        });
    }
    Ok(MonotonicityReport { kind, orders })
}
