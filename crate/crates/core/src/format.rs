//! Fixed-point number formatting shared by every CSV and report writer.

/// Fixed-point decimal with `digits` significant digits (`0` prints as `0`).
pub fn sig(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let digits = digits.max(1);
    // round first, then read the decimal exponent of the rounded value
    let sci = format!("{:.*e}", digits - 1, v);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

/// [`sig`] with the toolkit-wide 12 digits.
pub fn sig12(v: f64) -> String {
    sig(v, 12)
}
