//! Thin wrappers over the `libm` special functions plus the few extras the
//! Mittag-Leffler evaluator needs (reciprocal gamma through poles, `sin(πx)`).

use std::f64::consts::PI;

/// Euler's gamma function.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    libm::lgamma(x)
}

/// `1/Γ(x)`, an entire function: exactly zero at the poles `0, -1, -2, ...`.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    if x > 170.0 {
        return (-ln_gamma(x)).exp();
    }
    if x < -170.0 {
        // reflection: 1/Γ(x) = sin(πx) Γ(1-x) / π
        return sin_pi(x) * (ln_gamma(1.0 - x) - PI.ln()).exp();
    }
    1.0 / gamma(x)
}

/// Upper envelope of `ln |1/Γ(x)|`; exact for `x > 0`, drops the `|sin(πx)|`
/// factor of the reflection formula for `x <= 0`.
pub(crate) fn ln_rgamma_envelope(x: f64) -> f64 {
    if x > 0.0 {
        -ln_gamma(x)
    } else {
        ln_gamma(1.0 - x) - PI.ln()
    }
}

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).round();
    if r == r.round() {
        return 0.0;
    }
    (PI * r).sin()
}

pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}
